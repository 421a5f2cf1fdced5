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

#ifndef ISING_ISING_MODEL_H
#define ISING_ISING_MODEL_H

#include <array>
#include <set>
#include <string_view>

#include "ising/cyclotomic.h"
#include "ising/matrix.h"

namespace ising {

/// Topological charge of the Ising model: vacuum 0, sigma, fermion psi (1).
enum class Charge : int { Vac = 0, Sigma = 1, Psi = 2 };

inline constexpr std::array<Charge, 3> kAllCharges = {Charge::Vac, Charge::Sigma, Charge::Psi};

std::string_view charge_name(Charge c);
Charge parse_charge(std::string_view text);

/// Fusion outcomes of a x b.
std::set<Charge> fuse(Charge a, Charge b);

/// 0/1 meaning of an abelian charge. Throws std::invalid_argument for sigma.
int parity(Charge c);
Charge charge_from_parity(int bit);

/// F^{sigma sigma sigma}_sigma = (1/sqrt 2) [[1, 1], [1, -1]].
ExactMatrix f_matrix();

/// R_{sigma sigma} = diag(1, i), indexed by the fusion channel (0, 1).
ExactMatrix r_matrix();

/// d_0 = d_1 = 1, d_sigma = sqrt 2.
CycScalar quantum_dim(Charge c);

}  // namespace ising

#endif
