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

#ifndef ISING_BRAID_H
#define ISING_BRAID_H

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ising/cyclotomic.h"
#include "ising/matrix.h"
#include "ising/state.h"

namespace ising {

/// One factor b_index^power of a braid word. b_j exchanges anyons j and j+1.
struct BraidLetter {
    int index;
    int power;
    bool operator==(const BraidLetter &) const = default;
};

/// A braid word on K anyons, stored in written (operator-product) order:
/// "b3 b2" means apply b2 first, then b3.
class BraidWord {
   public:
    explicit BraidWord(size_t anyon_count, std::vector<BraidLetter> letters = {});

    size_t anyon_count() const {
        return anyon_count_;
    }
    const std::vector<BraidLetter> &letters() const {
        return letters_;
    }
    bool empty() const {
        return letters_.empty();
    }
    /// Total number of elementary exchanges, sum of |power|.
    size_t exchange_count() const;

    /// Reversed order, negated powers.
    BraidWord inverse() const;
    /// Re-indexes every generator by +offset into a larger system.
    BraidWord shifted(int offset, size_t new_anyon_count) const;

    /// Operator product: (a * b) applies b first.
    friend BraidWord operator*(const BraidWord &a, const BraidWord &b);
    bool operator==(const BraidWord &) const = default;

    /// Compact text "b3 b2 b1^-2"; the empty word is "I".
    std::string str() const;
    static BraidWord parse(size_t anyon_count, std::string_view text);

   private:
    size_t anyon_count_;
    std::vector<BraidLetter> letters_;
};

/// A structured unitary (or projector) on the computational register.
/// Qubits are 1-based; Block2q acts on (qubit, qubit + 1) with qubit the
/// more significant index of the 4x4 block.
struct GateOp {
    enum class Kind { Diag1q, Block1q, Block2q, Scalar, ParityProjector };

    Kind kind;
    size_t num_qubits;
    size_t qubit = 0;
    /// 2x2 (Diag1q, Block1q) or 4x4 (Block2q).
    ExactMatrix block;
    /// Scalar factor, or the kept parity (0/1) for ParityProjector.
    CycScalar phase = CycScalar::one();
    int kept_parity = 0;

    GateOp adjoint() const;
    bool operator==(const GateOp &) const = default;
};

/// b_j of the braid group B_K in the computational basis.
///   odd j:            diag(1, i) on qubit (j+1)/2
///   even j, interior: (1+i)/2 [[1,0,0,-i],[0,1,-i,0],[0,-i,1,0],[-i,0,0,1]]
///                     on qubits j/2, j/2+1
///   even j = K-1, K odd: (1+i)/2 [[1,-i],[-i,1]] on qubit (K-1)/2
/// Note e^{i pi/4}/sqrt(2) = (1+i)/2.
GateOp generator(size_t anyon_count, int index);

/// (b_j)^2 in closed form: tau_3 on the pair's qubit for odd j, tau_1 x tau_1
/// on the straddled qubits for even j (tau_1 alone for the trailing pair of
/// odd K).
GateOp monodromy(size_t anyon_count, int index);

/// CNOT chain U_CN^{1,2} U_CN^{2,3} ... U_CN^{n-1,n} in operator order.
/// Maps standard-basis labels (a-bar) to computational-basis labels.
std::vector<GateOp> u_cnot(size_t num_qubits);

/// P_+/- = (I +/- tau_3^{x(n+1)})/2 over the n+1 qubits of 2n+2 anyons.
GateOp parity_projector(size_t n, int sign);

/// Pauli string on n qubits built as an explicit Kronecker product.
/// paulis[q-1] in {'I', 'X', 'Y', 'Z'}.
ExactMatrix pauli_string(std::string_view paulis);

using GeneratorFn = std::function<GateOp(size_t anyon_count, int index)>;

// ---------------------------------------------------------------------------
// Kernels. Every gate is applied in O(2^n) without forming dense matrices.

namespace detail {

template <Amplitude S>
inline void multiply_into(S &acc, const S &coefficient, const S &value) {
    if (!is_exact_zero(coefficient) && !is_exact_zero(value)) {
        acc += coefficient * value;
    }
}

template <Amplitude S>
inline void scale_in_place(S &value, const S &factor) {
    if (!is_exact_zero(value)) {
        value = value * factor;
    }
}

template <Amplitude S>
std::vector<S> block_entries(const ExactMatrix &block) {
    std::vector<S> out;
    out.reserve(block.rows() * block.cols());
    for (const auto &x : block.data()) {
        out.push_back(from_exact<S>(x));
    }
    return out;
}

}  // namespace detail

template <Amplitude S>
void apply_gate(const GateOp &gate, std::span<S> amps) {
    size_t n = gate.num_qubits;
    if (amps.size() != (size_t{1} << n)) {
        throw std::invalid_argument("apply_gate: register size does not match the gate");
    }
    switch (gate.kind) {
        case GateOp::Kind::Scalar: {
            if (gate.phase.is_one()) {
                return;
            }
            S factor = from_exact<S>(gate.phase);
            for (auto &a : amps) {
                detail::scale_in_place(a, factor);
            }
            return;
        }
        case GateOp::Kind::ParityProjector: {
            for (size_t i = 0; i < amps.size(); i++) {
                if (bitstring_parity(i) != gate.kept_parity) {
                    amps[i] = S(0);
                }
            }
            return;
        }
        case GateOp::Kind::Diag1q: {
            uint64_t mask = qubit_mask(gate.qubit, n);
            bool touch0 = !gate.block(0, 0).is_one();
            bool touch1 = !gate.block(1, 1).is_one();
            S d0 = from_exact<S>(gate.block(0, 0));
            S d1 = from_exact<S>(gate.block(1, 1));
            for (size_t i = 0; i < amps.size(); i++) {
                if (i & mask) {
                    if (touch1) {
                        detail::scale_in_place(amps[i], d1);
                    }
                } else if (touch0) {
                    detail::scale_in_place(amps[i], d0);
                }
            }
            return;
        }
        case GateOp::Kind::Block1q: {
            uint64_t mask = qubit_mask(gate.qubit, n);
            auto m = detail::block_entries<S>(gate.block);
            for (size_t i = 0; i < amps.size(); i++) {
                if (i & mask) {
                    continue;
                }
                S a0 = amps[i];
                S a1 = amps[i | mask];
                S n0(0), n1(0);
                detail::multiply_into(n0, m[0], a0);
                detail::multiply_into(n0, m[1], a1);
                detail::multiply_into(n1, m[2], a0);
                detail::multiply_into(n1, m[3], a1);
                amps[i] = std::move(n0);
                amps[i | mask] = std::move(n1);
            }
            return;
        }
        case GateOp::Kind::Block2q: {
            uint64_t hi = qubit_mask(gate.qubit, n);
            uint64_t lo = qubit_mask(gate.qubit + 1, n);
            auto m = detail::block_entries<S>(gate.block);
            for (size_t i = 0; i < amps.size(); i++) {
                if (i & (hi | lo)) {
                    continue;
                }
                const size_t idx[4] = {i, i | lo, i | hi, i | hi | lo};
                S in[4] = {amps[idx[0]], amps[idx[1]], amps[idx[2]], amps[idx[3]]};
                for (int r = 0; r < 4; r++) {
                    S out(0);
                    for (int c = 0; c < 4; c++) {
                        detail::multiply_into(out, m[r * 4 + c], in[c]);
                    }
                    amps[idx[r]] = std::move(out);
                }
            }
            return;
        }
    }
}

/// Applies b_index^power via the given generator source; negative powers use
/// the adjoint. Powers are applied literally, with no period reduction.
template <Amplitude S>
void apply_letter(const BraidLetter &letter, size_t anyon_count, std::span<S> amps, const GeneratorFn &source) {
    if (letter.power == 0) {
        return;
    }
    GateOp gate = source(anyon_count, letter.index);
    if (letter.power < 0) {
        gate = gate.adjoint();
    }
    int reps = letter.power < 0 ? -letter.power : letter.power;
    for (int r = 0; r < reps; r++) {
        apply_gate<S>(gate, amps);
    }
}

/// In-place variant of apply(); the caller owns the register exclusively.
template <Amplitude S>
void apply_in_place(const BraidWord &word, AnyonState<S> &state, const GeneratorFn &source = generator) {
    if (word.anyon_count() != state.anyon_count()) {
        throw std::invalid_argument(
            "apply: braid word is on " + std::to_string(word.anyon_count()) + " anyons but the state has " +
            std::to_string(state.anyon_count()));
    }
    std::span<S> amps(state.mutable_amplitudes());
    const auto &letters = word.letters();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        apply_letter<S>(*it, word.anyon_count(), amps, source);
    }
}

/// Applies the word (rightmost letter first) and returns the new state.
template <Amplitude S>
AnyonState<S> apply(const BraidWord &word, const AnyonState<S> &state, const GeneratorFn &source = generator) {
    AnyonState<S> out = state;
    apply_in_place(word, out, source);
    return out;
}

/// Applies an operator-ordered gate sequence (rightmost first).
template <Amplitude S>
void apply_sequence(const std::vector<GateOp> &ops, std::span<S> amps) {
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        apply_gate<S>(*it, amps);
    }
}

/// Dense matrix of a gate, built column by column through the kernel.
ExactMatrix to_dense(const GateOp &gate);
ExactMatrix to_dense(const std::vector<GateOp> &ops, size_t num_qubits);
/// Dense matrix of a braid word on the full 2^n register.
ExactMatrix to_dense(const BraidWord &word, const GeneratorFn &source = generator);

}  // namespace ising

#endif
