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

#ifndef ISING_SCALAR_H
#define ISING_SCALAR_H

#include <complex>
#include <concepts>
#include <string_view>
#include <type_traits>

#include "ising/cyclotomic.h"

namespace ising {

using Complex = std::complex<double>;

enum class Backend { Exact, Float };

std::string_view backend_name(Backend backend);
Backend parse_backend(std::string_view name);

// Uniform free-function surface so kernels can be written once for both
// amplitude types.

inline Complex to_complex(const Complex &z) {
    return z;
}
inline Complex to_complex(const CycScalar &z) {
    return z.to_complex();
}
inline Complex conj_of(const Complex &z) {
    return std::conj(z);
}
inline CycScalar conj_of(const CycScalar &z) {
    return z.conj();
}
inline Complex mul_i(const Complex &z) {
    return {-z.imag(), z.real()};
}
inline CycScalar mul_i(const CycScalar &z) {
    return z.mul_i();
}
inline Complex halve(const Complex &z) {
    return z * 0.5;
}
inline CycScalar halve(const CycScalar &z) {
    return z.halve();
}
inline bool is_exact_zero(const Complex &z) {
    return z.real() == 0.0 && z.imag() == 0.0;
}
inline bool is_exact_zero(const CycScalar &z) {
    return z.is_zero();
}
/// |z|^2 in the scalar's own type (exact stays exact).
inline Complex abs2(const Complex &z) {
    return {std::norm(z), 0.0};
}
inline CycScalar abs2(const CycScalar &z) {
    return z.norm2();
}

template <typename S>
concept Amplitude = std::same_as<S, Complex> || std::same_as<S, CycScalar>;

template <Amplitude S>
constexpr bool is_exact_v = std::is_same_v<S, CycScalar>;

template <Amplitude S>
constexpr Backend backend_of_v = is_exact_v<S> ? Backend::Exact : Backend::Float;

/// Converts an exact constant into the amplitude type.
template <Amplitude S>
S from_exact(const CycScalar &value) {
    if constexpr (is_exact_v<S>) {
        return value;
    } else {
        return value.to_complex();
    }
}

template <Amplitude S>
S scalar_one() {
    return S(1);
}

}  // namespace ising

#endif
