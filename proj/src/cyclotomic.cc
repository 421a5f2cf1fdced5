// Copyright 2026 The ising-teleport Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ising/cyclotomic.h"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ising {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

std::uint32_t trailing_zero_bits(const BigInt &value) {
    return static_cast<std::uint32_t>(boost::multiprecision::lsb(boost::multiprecision::abs(value)));
}

double to_double_scaled(const BigInt &value, std::int64_t shift) {
    // value * 2^shift, computed without overflowing on huge numerators.
    if (value.is_zero()) {
        return 0.0;
    }
    BigInt magnitude = boost::multiprecision::abs(value);
    std::int64_t bits = static_cast<std::int64_t>(boost::multiprecision::msb(magnitude)) + 1;
    std::int64_t drop = std::max<std::int64_t>(0, bits - 62);
    magnitude >>= static_cast<unsigned>(drop);
    double result = std::ldexp(static_cast<double>(static_cast<std::uint64_t>(magnitude)), static_cast<int>(drop + shift));
    return value.sign() < 0 ? -result : result;
}

}  // namespace

CycScalar::CycScalar(std::int64_t integer) : c_{BigInt(integer), 0, 0, 0}, k_(0) {
}

CycScalar::CycScalar(BigInt c0, BigInt c1, BigInt c2, BigInt c3, std::uint32_t denominator_exponent)
    : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)}, k_(denominator_exponent) {
    canonicalize();
}

CycScalar CycScalar::zero() {
    return CycScalar();
}

CycScalar CycScalar::one() {
    return CycScalar(1);
}

CycScalar CycScalar::i() {
    return zeta(2);
}

CycScalar CycScalar::zeta(int power) {
    int p = ((power % 8) + 8) % 8;
    CycScalar result;
    result.c_[p % 4] = p < 4 ? 1 : -1;
    return result;
}

CycScalar CycScalar::sqrt2() {
    return CycScalar(0, 1, 0, -1, 0);
}

CycScalar CycScalar::inv_sqrt2() {
    return CycScalar(0, 1, 0, -1, 1);
}

CycScalar CycScalar::inv_pow2(std::uint32_t exponent) {
    return CycScalar(1, 0, 0, 0, exponent);
}

void CycScalar::canonicalize() {
    if (k_ == 0) {
        return;
    }
    if (is_zero()) {
        k_ = 0;
        return;
    }
    std::uint32_t shift = k_;
    for (const auto &c : c_) {
        if (!c.is_zero()) {
            shift = std::min(shift, trailing_zero_bits(c));
        }
    }
    if (shift == 0) {
        return;
    }
    for (auto &c : c_) {
        c >>= shift;
    }
    k_ -= shift;
}

bool CycScalar::is_zero() const {
    return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

bool CycScalar::is_one() const {
    return k_ == 0 && c_[0] == 1 && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

bool CycScalar::is_rational() const {
    return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

bool CycScalar::is_real() const {
    // Im = (c1 + c3)/sqrt(2) + c2 and sqrt(2) is irrational.
    return c_[2].is_zero() && c_[1] == -c_[3];
}

bool CycScalar::is_unit() const {
    return norm2().is_one();
}

std::int64_t CycScalar::inverse_power_of_two_exponent() const {
    if (!is_rational() || c_[0] != 1) {
        return -1;
    }
    return k_;
}

CycScalar CycScalar::conj() const {
    // conj(zeta^m) = zeta^-m = -zeta^(4-m).
    CycScalar result;
    result.c_ = {c_[0], -c_[3], -c_[2], -c_[1]};
    result.k_ = k_;
    return result;
}

CycScalar CycScalar::norm2() const {
    return *this * conj();
}

CycScalar CycScalar::mul_zeta(int power) const {
    int p = ((power % 8) + 8) % 8;
    CycScalar result;
    result.k_ = k_;
    for (int m = 0; m < 4; m++) {
        int target = m + p;
        bool negate = false;
        while (target >= 4) {
            target -= 4;
            negate = !negate;
        }
        result.c_[target] = negate ? BigInt(-c_[m]) : c_[m];
    }
    return result;
}

CycScalar CycScalar::halve(std::uint32_t exponent) const {
    CycScalar result = *this;
    if (result.is_zero()) {
        return result;
    }
    result.k_ += exponent;
    result.canonicalize();
    return result;
}

CycScalar CycScalar::operator-() const {
    CycScalar result = *this;
    for (auto &c : result.c_) {
        c = -c;
    }
    return result;
}

CycScalar &CycScalar::operator+=(const CycScalar &other) {
    if (other.is_zero()) {
        return *this;
    }
    if (k_ >= other.k_) {
        std::uint32_t shift = k_ - other.k_;
        for (int m = 0; m < 4; m++) {
            c_[m] += other.c_[m] << shift;
        }
    } else {
        std::uint32_t shift = other.k_ - k_;
        for (int m = 0; m < 4; m++) {
            c_[m] = (c_[m] << shift) + other.c_[m];
        }
        k_ = other.k_;
    }
    canonicalize();
    return *this;
}

CycScalar &CycScalar::operator-=(const CycScalar &other) {
    return *this += -other;
}

CycScalar operator*(const CycScalar &a, const CycScalar &b) {
    if (a.is_zero() || b.is_zero()) {
        return CycScalar();
    }
    CycScalar result;
    // zeta^4 = -1 folds degrees 4..6 back with a sign flip.
    for (int x = 0; x < 4; x++) {
        if (a.c_[x].is_zero()) {
            continue;
        }
        for (int y = 0; y < 4; y++) {
            if (b.c_[y].is_zero()) {
                continue;
            }
            int d = x + y;
            if (d < 4) {
                result.c_[d] += a.c_[x] * b.c_[y];
            } else {
                result.c_[d - 4] -= a.c_[x] * b.c_[y];
            }
        }
    }
    result.k_ = a.k_ + b.k_;
    result.canonicalize();
    return result;
}

CycScalar &CycScalar::operator*=(const CycScalar &other) {
    *this = *this * other;
    return *this;
}

std::complex<double> CycScalar::to_complex() const {
    std::int64_t shift = -static_cast<std::int64_t>(k_);
    double a0 = to_double_scaled(c_[0], shift);
    double a1 = to_double_scaled(c_[1], shift);
    double a2 = to_double_scaled(c_[2], shift);
    double a3 = to_double_scaled(c_[3], shift);
    return {a0 + (a1 - a3) * kInvSqrt2, a2 + (a1 + a3) * kInvSqrt2};
}

std::string CycScalar::str() const {
    std::stringstream out;
    out << c_[0] << ' ' << c_[1] << ' ' << c_[2] << ' ' << c_[3] << " / 2^" << k_;
    return out.str();
}

CycScalar CycScalar::from_str(std::string_view text) {
    std::stringstream in{std::string(text)};
    std::array<BigInt, 4> c;
    std::string slash;
    std::string power;
    for (auto &value : c) {
        std::string token;
        if (!(in >> token)) {
            throw std::invalid_argument("cyclotomic scalar: expected 4 coefficients in '" + std::string(text) + "'");
        }
        try {
            value = BigInt(token);
        } catch (const std::exception &) {
            throw std::invalid_argument("cyclotomic scalar: bad coefficient '" + token + "'");
        }
    }
    std::uint32_t k = 0;
    if (in >> slash) {
        if (slash != "/" || !(in >> power) || power.rfind("2^", 0) != 0) {
            throw std::invalid_argument("cyclotomic scalar: expected '/ 2^k' in '" + std::string(text) + "'");
        }
        try {
            k = static_cast<std::uint32_t>(std::stoul(power.substr(2)));
        } catch (const std::exception &) {
            throw std::invalid_argument("cyclotomic scalar: bad exponent '" + power + "'");
        }
    }
    return CycScalar(c[0], c[1], c[2], c[3], k);
}

std::ostream &operator<<(std::ostream &out, const CycScalar &value) {
    return out << value.str();
}

}  // namespace ising
