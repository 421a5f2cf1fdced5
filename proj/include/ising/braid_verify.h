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

#ifndef ISING_BRAID_VERIFY_H
#define ISING_BRAID_VERIFY_H

#include <string>
#include <vector>

#include "ising/braid.h"

namespace ising {

struct IdentityFailure {
    std::string identity;
    std::string detail;
};

/// Outcome of a batch of exact operator identity checks.
struct VerifyReport {
    std::string name;
    size_t checked = 0;
    std::vector<IdentityFailure> failures;
    /// Free-form observations that are recorded but not asserted.
    std::vector<std::string> notes;

    bool ok() const {
        return failures.empty();
    }
    void merge(const VerifyReport &other);
};

/// Compares two dense operators exactly; on mismatch records the first
/// differing entry with both sides' values.
bool expect_equal_operator(
    VerifyReport &report, const std::string &identity, const ExactMatrix &lhs, const ExactMatrix &rhs);

/// Yang-Baxter b_i b_{i+1} b_i = b_{i+1} b_i b_{i+1}, far commutation
/// b_i b_j = b_j b_i (|i-j| >= 2), and unitarity of every generator, as exact
/// identities on the full register. `source` allows substituting generators.
VerifyReport verify_braid_relations(size_t anyon_count, const GeneratorFn &source = generator);

enum class PauliFamily { Odd, Even };

PauliFamily parse_family(std::string_view text);

/// The Pauli identities obtained by braiding 2n+1 anyons:
///   odd family (K = 2n+1):  tau_3^(j) = b_{2j-1}^2,
///                           tau_1^(j) = b_{2j}^2 b_{2j+2}^2 ... b_{2n}^2
///   even family (K = 2n+2): tau_3^(j) = b_{2j-1}^2,
///                           tau_1^(j) x tau_1^(n+1) = b_{2j}^2 ... b_{2n}^2
///   both:                   b_{2n-1} b_{2n}^2 b_{2n-1} b_{2n}^2 = i
/// plus the closed-form monodromy of every generator against its literal
/// square.
VerifyReport verify_pauli_identities(size_t n, PauliFamily family);

/// Even family K = 2n+2: P_+ and P_- are idempotent, sum to I, and commute
/// with every generator.
VerifyReport verify_parity_projectors(size_t n);

/// b_{2j} = U_CN^{j,j+1} (F x I)(R x I)(F x I) U_CN^{j,j+1} for every interior
/// even generator of K anyons, with F and R taken from the model data.
VerifyReport verify_generator_derivation(size_t anyon_count);

}  // namespace ising

#endif
