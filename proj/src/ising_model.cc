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

#include "ising/ising_model.h"

#include <stdexcept>
#include <string>

#include "ising/scalar.h"

namespace ising {

std::string_view backend_name(Backend backend) {
    return backend == Backend::Exact ? "exact" : "float";
}

Backend parse_backend(std::string_view name) {
    if (name == "exact") {
        return Backend::Exact;
    }
    if (name == "float") {
        return Backend::Float;
    }
    throw std::invalid_argument("unknown backend '" + std::string(name) + "' (expected exact|float)");
}

std::string_view charge_name(Charge c) {
    switch (c) {
        case Charge::Vac:
            return "0";
        case Charge::Sigma:
            return "sigma";
        case Charge::Psi:
            return "1";
    }
    return "?";
}

Charge parse_charge(std::string_view text) {
    if (text == "0") {
        return Charge::Vac;
    }
    if (text == "1") {
        return Charge::Psi;
    }
    if (text == "sigma") {
        return Charge::Sigma;
    }
    throw std::invalid_argument("unknown charge '" + std::string(text) + "' (expected 0|1|sigma)");
}

std::set<Charge> fuse(Charge a, Charge b) {
    if (a == Charge::Vac) {
        return {b};
    }
    if (b == Charge::Vac) {
        return {a};
    }
    if (a == Charge::Sigma && b == Charge::Sigma) {
        return {Charge::Vac, Charge::Psi};
    }
    if (a == Charge::Psi && b == Charge::Psi) {
        return {Charge::Vac};
    }
    // sigma x psi = sigma, in either order.
    return {Charge::Sigma};
}

int parity(Charge c) {
    switch (c) {
        case Charge::Vac:
            return 0;
        case Charge::Psi:
            return 1;
        case Charge::Sigma:
            break;
    }
    throw std::invalid_argument("parity is only defined for the abelian charges 0 and 1");
}

Charge charge_from_parity(int bit) {
    return (bit & 1) ? Charge::Psi : Charge::Vac;
}

ExactMatrix f_matrix() {
    CycScalar s = CycScalar::inv_sqrt2();
    return ExactMatrix{{s, s}, {s, -s}};
}

ExactMatrix r_matrix() {
    return ExactMatrix{{CycScalar::one(), CycScalar::zero()}, {CycScalar::zero(), CycScalar::i()}};
}

CycScalar quantum_dim(Charge c) {
    return c == Charge::Sigma ? CycScalar::sqrt2() : CycScalar::one();
}

}  // namespace ising
