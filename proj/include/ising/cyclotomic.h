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

#ifndef ISING_CYCLOTOMIC_H
#define ISING_CYCLOTOMIC_H

#include <array>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ising {

using BigInt = boost::multiprecision::cpp_int;

/// Exact element of the cyclotomic ring Z[zeta][1/2], zeta = e^{i pi/4}.
///
/// The value is (c0 + c1 zeta + c2 zeta^2 + c3 zeta^3) / 2^k. The canonical
/// form keeps k minimal: k == 0, or at least one coefficient is odd. Since
/// {1, zeta, zeta^2, zeta^3} is a basis of Q(zeta) over Q this makes equality
/// structural.
///
/// Every entry of the Ising braid generators lives here:
///     i = zeta^2, sqrt(2) = zeta - zeta^3, e^{i pi/4}/sqrt(2) = (1 + i)/2.
///
/// Division is not exposed. Dividing by a unit is multiplying by its
/// conjugate.
class CycScalar {
   public:
    CycScalar() = default;
    CycScalar(std::int64_t integer);  // NOLINT(google-explicit-constructor)
    CycScalar(BigInt c0, BigInt c1, BigInt c2, BigInt c3, std::uint32_t denominator_exponent);

    static CycScalar zero();
    static CycScalar one();
    static CycScalar i();
    /// zeta^power for any integer power.
    static CycScalar zeta(int power);
    static CycScalar sqrt2();
    static CycScalar inv_sqrt2();
    /// 2^-exponent.
    static CycScalar inv_pow2(std::uint32_t exponent);

    const std::array<BigInt, 4> &coefficients() const {
        return c_;
    }
    std::uint32_t denominator_exponent() const {
        return k_;
    }

    bool is_zero() const;
    bool is_one() const;
    /// True iff the value is a rational number (c1 = c2 = c3 = 0).
    bool is_rational() const;
    /// True iff the value is real (imaginary part exactly zero).
    bool is_real() const;
    /// Exact |z|^2 == 1.
    bool is_unit() const;
    /// If the value equals 2^-e for some e >= 0, returns e; otherwise -1.
    std::int64_t inverse_power_of_two_exponent() const;

    CycScalar conj() const;
    /// z * conj(z); always real.
    CycScalar norm2() const;
    /// z * zeta^power, a signed rotation of the coefficients.
    CycScalar mul_zeta(int power) const;
    CycScalar mul_i() const {
        return mul_zeta(2);
    }
    /// z / 2^exponent.
    CycScalar halve(std::uint32_t exponent = 1) const;

    CycScalar operator-() const;
    CycScalar &operator+=(const CycScalar &other);
    CycScalar &operator-=(const CycScalar &other);
    CycScalar &operator*=(const CycScalar &other);
    friend CycScalar operator+(CycScalar a, const CycScalar &b) {
        a += b;
        return a;
    }
    friend CycScalar operator-(CycScalar a, const CycScalar &b) {
        a -= b;
        return a;
    }
    friend CycScalar operator*(const CycScalar &a, const CycScalar &b);
    bool operator==(const CycScalar &other) const = default;

    std::complex<double> to_complex() const;

    /// Debug form "c0 c1 c2 c3 / 2^k".
    std::string str() const;
    /// Parses the output of str(). Result is canonicalized.
    static CycScalar from_str(std::string_view text);

   private:
    void canonicalize();

    std::array<BigInt, 4> c_{};
    std::uint32_t k_ = 0;
};

std::ostream &operator<<(std::ostream &out, const CycScalar &value);

}  // namespace ising

#endif
