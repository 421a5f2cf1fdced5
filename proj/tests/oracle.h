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

// Independent dense oracles for tests. Nothing here calls the structured
// kernels; generator matrices are assembled as explicit Kronecker products
// of the literal blocks.

#ifndef ISING_TESTS_ORACLE_H
#define ISING_TESTS_ORACLE_H

#include <complex>
#include <cstddef>
#include <vector>

#include "ising/cyclotomic.h"
#include "ising/matrix.h"

namespace ising::oracle {

inline ExactMatrix identity_on(size_t qubits) {
    return ExactMatrix::identity(size_t{1} << qubits);
}

inline CycScalar c(int re, int im) {
    // re + im i
    return CycScalar(re) + CycScalar::i() * CycScalar(im);
}

/// (1+i)/2 = e^{i pi/4}/sqrt 2, written via zeta and 1/sqrt 2.
inline CycScalar omega_over_sqrt2() {
    return CycScalar::zeta(1) * CycScalar::inv_sqrt2();
}

inline ExactMatrix s_block() {
    return ExactMatrix{{c(1, 0), c(0, 0)}, {c(0, 0), c(0, 1)}};
}

inline ExactMatrix xx_block() {
    auto o = c(1, 0), z = c(0, 0), m = c(0, -1);
    return ExactMatrix{{o, z, z, m}, {z, o, m, z}, {z, m, o, z}, {m, z, z, o}}.scaled(omega_over_sqrt2());
}

inline ExactMatrix x_block() {
    auto o = c(1, 0), m = c(0, -1);
    return ExactMatrix{{o, m}, {m, o}}.scaled(omega_over_sqrt2());
}

/// Dense b_j for K anyons by Kronecker products of the literal blocks.
inline ExactMatrix dense_generator(size_t anyons, int j) {
    size_t n = anyons / 2;
    if (j % 2 == 1) {
        size_t q = static_cast<size_t>((j + 1) / 2);
        return kron(kron(identity_on(q - 1), s_block()), identity_on(n - q));
    }
    size_t q = static_cast<size_t>(j / 2);
    if (anyons % 2 == 1 && static_cast<size_t>(j) == anyons - 1) {
        return kron(identity_on(n - 1), x_block());
    }
    return kron(kron(identity_on(q - 1), xx_block()), identity_on(n - q - 1));
}

/// Dense operator product for letters (index, power) in written order.
inline ExactMatrix dense_word(size_t anyons, const std::vector<std::pair<int, int>> &letters) {
    ExactMatrix out = identity_on(anyons / 2);
    for (const auto &[j, p] : letters) {
        ExactMatrix g = dense_generator(anyons, j);
        if (p < 0) {
            g = g.adjoint();
        }
        for (int r = 0; r < (p < 0 ? -p : p); r++) {
            out = out * g;
        }
    }
    return out;
}

inline std::vector<CycScalar> dense_apply(const ExactMatrix &m, const std::vector<CycScalar> &v) {
    std::vector<CycScalar> out(m.rows());
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t k = 0; k < m.cols(); k++) {
            out[r] += m(r, k) * v[k];
        }
    }
    return out;
}

/// Partial trace keeping the leading `keep` qubits of an n-qubit vector.
inline std::vector<std::vector<std::complex<double>>> partial_trace_leading(
    const std::vector<std::complex<double>> &psi, size_t n, size_t keep) {
    size_t sub = size_t{1} << keep;
    size_t rest = size_t{1} << (n - keep);
    std::vector<std::vector<std::complex<double>>> rho(sub, std::vector<std::complex<double>>(sub));
    for (size_t a = 0; a < sub; a++) {
        for (size_t b = 0; b < sub; b++) {
            for (size_t r = 0; r < rest; r++) {
                rho[a][b] += psi[a * rest + r] * std::conj(psi[b * rest + r]);
            }
        }
    }
    return rho;
}

}  // namespace ising::oracle

#endif
