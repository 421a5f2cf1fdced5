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

#ifndef ISING_STATE_H
#define ISING_STATE_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ising/ising_model.h"
#include "ising/scalar.h"

namespace ising {

/// Number of computational-basis qubits carried by K anyons: one per
/// adjacent pair (2k-1, 2k). An odd trailing anyon carries no qubit.
constexpr size_t qubit_count_for(size_t anyon_count) {
    return anyon_count / 2;
}

/// Big-endian bit mask for 1-based qubit q of an n-qubit register.
constexpr uint64_t qubit_mask(size_t qubit, size_t num_qubits) {
    return uint64_t{1} << (num_qubits - qubit);
}

constexpr int bitstring_parity(uint64_t index) {
    return std::popcount(index) & 1;
}

/// Amplitude vector over the anyonic computational basis |a_1 ... a_n; c>_K.
///
/// Index i encodes the label string a_1 ... a_n big-endian (a_1 is the most
/// significant bit). The sector is the total charge: 0 or 1 for even K (the
/// label parity), sigma for odd K.
///
/// Construction checks shape and sector/K compatibility but not amplitude
/// support; superselection_violation() reports support outside the sector.
template <Amplitude S>
class AnyonState {
   public:
    AnyonState(size_t anyon_count, Charge sector, std::vector<S> amplitudes)
        : anyon_count_(anyon_count), sector_(sector), amplitudes_(std::move(amplitudes)) {
        if (anyon_count == 0) {
            throw std::invalid_argument("AnyonState: need at least one anyon");
        }
        if (qubit_count() > 40) {
            throw std::invalid_argument("AnyonState: too many anyons for a dense register");
        }
        if (amplitudes_.size() != dimension()) {
            throw std::invalid_argument(
                "AnyonState: " + std::to_string(anyon_count) + " anyons need " + std::to_string(dimension()) +
                " amplitudes, got " + std::to_string(amplitudes_.size()));
        }
        bool odd = anyon_count % 2 == 1;
        if (odd != (sector == Charge::Sigma)) {
            throw std::invalid_argument(
                "AnyonState: sector " + std::string(charge_name(sector)) + " is incompatible with " +
                std::to_string(anyon_count) + " anyons");
        }
    }

    size_t anyon_count() const {
        return anyon_count_;
    }
    size_t qubit_count() const {
        return qubit_count_for(anyon_count_);
    }
    size_t dimension() const {
        return size_t{1} << qubit_count();
    }
    Charge sector() const {
        return sector_;
    }
    std::span<const S> amplitudes() const {
        return amplitudes_;
    }
    /// In-place access for single-writer kernels.
    std::vector<S> &mutable_amplitudes() {
        return amplitudes_;
    }
    const S &operator[](size_t index) const {
        return amplitudes_[index];
    }

    /// <this|this> in the amplitude type.
    S norm2() const {
        S total(0);
        for (const auto &a : amplitudes_) {
            if (!is_exact_zero(a)) {
                total += abs2(a);
            }
        }
        return total;
    }

    /// Describes the first basis label with nonzero amplitude outside the
    /// declared parity sector, if any. Odd-K states have no constraint.
    std::optional<std::string> superselection_violation() const {
        if (sector_ == Charge::Sigma) {
            return std::nullopt;
        }
        int want = parity(sector_);
        for (size_t i = 0; i < amplitudes_.size(); i++) {
            if (!is_exact_zero(amplitudes_[i]) && bitstring_parity(i) != want) {
                return "basis label " + label_string(i) + " has parity " + std::to_string(bitstring_parity(i)) +
                       " but the state declares sector " + std::string(charge_name(sector_));
            }
        }
        return std::nullopt;
    }

    std::string label_string(size_t index) const {
        std::string out(qubit_count(), '0');
        for (size_t q = 1; q <= qubit_count(); q++) {
            if (index & qubit_mask(q, qubit_count())) {
                out[q - 1] = '1';
            }
        }
        return out;
    }

    AnyonState<Complex> to_float() const {
        std::vector<Complex> out;
        out.reserve(amplitudes_.size());
        for (const auto &a : amplitudes_) {
            out.push_back(to_complex(a));
        }
        return AnyonState<Complex>(anyon_count_, sector_, std::move(out));
    }

    AnyonState scaled(const S &factor) const {
        AnyonState out = *this;
        for (auto &a : out.amplitudes_) {
            if (!is_exact_zero(a)) {
                a = a * factor;
            }
        }
        return out;
    }

    bool operator==(const AnyonState &other) const = default;

   private:
    size_t anyon_count_;
    Charge sector_;
    std::vector<S> amplitudes_;
};

using ExactState = AnyonState<CycScalar>;
using FloatState = AnyonState<Complex>;

/// |a_1 ... a_n; c>_K. The sector is the label parity for even K and sigma
/// for odd K.
template <Amplitude S>
AnyonState<S> basis_state(size_t anyon_count, const std::vector<int> &labels) {
    size_t n = qubit_count_for(anyon_count);
    if (labels.size() != n) {
        throw std::invalid_argument(
            "basis_state: " + std::to_string(anyon_count) + " anyons take " + std::to_string(n) + " labels, got " +
            std::to_string(labels.size()));
    }
    uint64_t index = 0;
    for (size_t q = 1; q <= n; q++) {
        int a = labels[q - 1];
        if (a != 0 && a != 1) {
            throw std::invalid_argument("basis_state: labels must be 0 or 1");
        }
        if (a) {
            index |= qubit_mask(q, n);
        }
    }
    std::vector<S> amps(size_t{1} << n, S(0));
    amps[index] = S(1);
    Charge sector = anyon_count % 2 ? Charge::Sigma : charge_from_parity(bitstring_parity(index));
    return AnyonState<S>(anyon_count, sector, std::move(amps));
}

/// Same as basis_state, addressed by register index instead of labels.
template <Amplitude S>
AnyonState<S> basis_state_at(size_t anyon_count, uint64_t index) {
    size_t n = qubit_count_for(anyon_count);
    if (index >= (uint64_t{1} << n)) {
        throw std::invalid_argument("basis_state_at: index out of range");
    }
    std::vector<S> amps(size_t{1} << n, S(0));
    amps[index] = S(1);
    Charge sector = anyon_count % 2 ? Charge::Sigma : charge_from_parity(bitstring_parity(index));
    return AnyonState<S>(anyon_count, sector, std::move(amps));
}

}  // namespace ising

#endif
