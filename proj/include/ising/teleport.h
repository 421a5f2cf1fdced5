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

#ifndef ISING_TELEPORT_H
#define ISING_TELEPORT_H

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ising/anyon_ops.h"
#include "ising/braid.h"
#include "ising/braid_verify.h"
#include "ising/state.h"

namespace ising {

/// Raised when an input state has support outside its declared parity sector.
struct SuperselectionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Tangled braiding.

/// T_k on a block starting after global anyon `offset`: block anyons 2k-1
/// and 2k are carried leftward to block positions k and k+1. Anyon 2k-1
/// walks first (b_{2k-2} ... b_k), then anyon 2k (b_{2k-1} ... b_{k+1}),
/// all positive exchanges. Word length 2(k-1).
BraidWord tangle_step_word(size_t k, size_t offset, size_t anyon_count);

enum class TangleDirection { Prepare, Undo };

/// A tangled braiding over `copies` adjacent pairs of a block.
struct TangleSpec {
    size_t copies;
    size_t offset;
    TangleDirection direction = TangleDirection::Prepare;

    /// Prepare: T_copies ... T_3 T_2 (T_2 applied first). Undo: the inverse,
    /// T_2^-1 T_3^-1 ... T_copies^-1.
    BraidWord word(size_t anyon_count) const;
};

/// Bell state of 4N+2 anyons: the tangle over 2N+1 copies applied to
/// |0...0; 0>.
template <Amplitude S>
AnyonState<S> bell_state(size_t num_pairs) {
    size_t anyons = 4 * num_pairs + 2;
    auto state = basis_state_at<S>(anyons, 0);
    apply_in_place(TangleSpec{2 * num_pairs + 1, 0}.word(anyons), state);
    return state;
}

/// Applies the Bell-preparation tangle to the Bell block of an embedded
/// state; phi's register is untouched.
template <Amplitude S>
AnyonState<S> prepare_bell(const AnyonState<S> &embedded, const Layout &layout) {
    if (embedded.anyon_count() != layout.total_anyons()) {
        throw std::invalid_argument("prepare_bell: state does not match the layout");
    }
    return apply(TangleSpec{layout.bell_copies(), 0}.word(layout.total_anyons()), embedded);
}

/// Alice's undo tangle over her 2M-anyon block.
BraidWord alice_word(const Layout &layout);

// ---------------------------------------------------------------------------
// Corrections.

/// Bob's outcome-conditioned correction. Each (b_j)^2 factor appears iff its
/// exponent coefficient is odd:
///     b_0:  c = a_1 + ... + a_M          (M even only)
///     b_j:  a_{j+1} + ... + a_M          (1 <= j <= M-1)
/// Labels are Bob-local, 0 .. M-1.
struct CorrectionPlan {
    std::vector<int> outcomes;
    int parity = 0;
    /// Local generator indices whose square is applied, ascending.
    std::vector<int> squared_generators;
    bool uses_auxiliary = false;

    /// "b0^2 b3^2", or "I" for no correction.
    std::string str() const;
    /// The correction on global generators of the layout.
    BraidWord global_word(const Layout &layout) const;
};

CorrectionPlan correction_word(const std::vector<int> &outcomes);

struct Table1Row {
    std::string outcomes;
    std::string expected;
    std::string generated;
    bool match() const {
        return expected == generated;
    }
};

/// Reference M = 4 correction table, as literal constants.
const std::array<std::pair<std::string_view, std::string_view>, 16> &table1_reference();

/// Generated corrections for all 16 outcomes of M = 4, against the reference.
std::vector<Table1Row> table1();

// ---------------------------------------------------------------------------
// Lemma and gate checks.

struct LemmaCase {
    int a1;
    int a2;
    FidelityResult<CycScalar> result;
};

struct LemmaReport {
    std::vector<LemmaCase> cases;
    /// Whether every case carries the same phase. Recorded, not asserted.
    bool phase_state_independent = false;
    bool ok() const;
};

/// b_1^2 T |a1 a2> = lambda T |a1+1, a2+1> on 4 anyons, for all four labels.
LemmaReport verify_lemma();

/// The printed two-qubit gate of the 4-anyon tangle, (1/sqrt2) times
/// [[1,0,0,-i],[0,i,1,0],[0,-i,1,0],[1,0,0,i]].
ExactMatrix reference_two_qubit_gate();

struct GateMatch {
    bool matches = false;
    CycScalar phase;
    ExactMatrix tangle;
};

/// Dense 4-anyon tangle against reference_two_qubit_gate() up to a unit phase.
GateMatch verify_two_qubit_gate();

/// Bell-state checks for 4N+2 anyons: the undo tangle returns |0...0>, the
/// innermost pair (2N+1, 2N+2) is in channel 0 with probability 1, and each
/// of Bob's interior qubits 1..N is maximally mixed.
VerifyReport verify_bell(size_t num_pairs);

// ---------------------------------------------------------------------------
// End-to-end protocol.

enum class TeleportMode { Exhaustive, Sample };

struct TeleportOptions {
    TeleportMode mode = TeleportMode::Exhaustive;
    size_t samples = 0;
    uint64_t seed = 0;
    /// Float pass threshold: fidelity >= 1 - tolerance.
    double tolerance = 1e-10;
    size_t threads = 1;
};

struct BranchRecord {
    std::vector<int> outcomes;
    double probability = 0;
    /// Exact backend: the probability as a rational, e.g. "1/16".
    std::optional<std::string> probability_exact;
    std::string correction;
    std::string correction_global;
    std::optional<double> fidelity;
    bool exact_unit = false;
    bool pass = false;
    size_t samples = 0;

    std::string outcome_string() const;
};

struct TeleportReport {
    size_t phi_anyons = 0;
    size_t num_pairs = 0;
    size_t total_anyons = 0;
    uint64_t seed = 0;
    Backend backend = Backend::Exact;
    TeleportMode mode = TeleportMode::Exhaustive;
    size_t samples = 0;
    double tolerance = 0;
    std::string bell_word;
    std::string alice_word;
    std::vector<BranchRecord> branches;
    double probability_sum = 0;
    /// Exact backend: branch probabilities sum to exactly 1.
    std::optional<bool> probability_sum_exact;
    bool all_pass = false;
    double elapsed_ms = 0;
};

/// Runs the four protocol steps on phi (M anyons) through the Bell state of
/// 4N+2 anyons: embed, prepare the Bell block, undo-tangle Alice's 2M
/// block, measure her pairs k = 1..M, apply Bob's correction, and compare
/// Bob's register with phi. Exhaustive mode enumerates all 2^M outcome
/// strings in lexicographic order.
template <Amplitude S>
TeleportReport run_teleport(const AnyonState<S> &phi, size_t num_pairs, const TeleportOptions &options);

extern template TeleportReport run_teleport<CycScalar>(const ExactState &, size_t, const TeleportOptions &);
extern template TeleportReport run_teleport<Complex>(const FloatState &, size_t, const TeleportOptions &);

/// Checks phi against the protocol's input contract: anyon count vs N,
/// superselection and normalization. Throws on violation.
template <Amplitude S>
void validate_teleport_input(const AnyonState<S> &phi, size_t num_pairs);

}  // namespace ising

#endif
