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

#ifndef ISING_ANYON_OPS_H
#define ISING_ANYON_OPS_H

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "ising/braid.h"
#include "ising/matrix.h"
#include "ising/state.h"

namespace ising {

/// Probabilities stay exact on the exact backend.
template <Amplitude S>
using Probability = std::conditional_t<is_exact_v<S>, CycScalar, double>;

template <Amplitude S>
double probability_value(const Probability<S> &p) {
    if constexpr (is_exact_v<S>) {
        return p.to_complex().real();
    } else {
        return p;
    }
}

/// Party assignment for teleporting M anyons through the Bell state of
/// 4N+2 anyons. Global anyons are 1-based:
///
///     [Bob: 1 .. 2N+1][Alice Bell: 2N+2 .. 4N+2][phi: 4N+3 .. 4N+2+M]
///
/// With the Bell block first and phi starting at an odd position, the Bell
/// pairs and phi's internal pairs both sit on computational-basis pairs, for
/// either parity of M. Alice's measured block is her M Bell anyons nearest
/// phi followed by phi itself: 2M contiguous anyons.
///
/// Bob's local labels follow the correction formulas: local anyon l
/// (0 <= l <= M) is global anyon M+1-l, so local b_j is global b_{M-j}.
/// After a successful run phi's anyon i sits on global anyon i, i.e. on
/// Bob's register qubits 1 .. floor(M/2).
struct Layout {
    size_t num_pairs;  ///< N
    size_t phi_anyons;  ///< M

    static Layout make(size_t phi_anyons, size_t num_pairs);

    size_t bell_anyons() const {
        return 4 * num_pairs + 2;
    }
    size_t total_anyons() const {
        return phi_anyons + bell_anyons();
    }
    size_t bell_copies() const {
        return 2 * num_pairs + 1;
    }
    size_t bob_first() const {
        return 1;
    }
    size_t bob_last() const {
        return 2 * num_pairs + 1;
    }
    size_t alice_bell_first() const {
        return 2 * num_pairs + 2;
    }
    size_t alice_bell_last() const {
        return bell_anyons();
    }
    size_t phi_first() const {
        return bell_anyons() + 1;
    }
    size_t phi_last() const {
        return total_anyons();
    }
    /// Alice's block position p (1..2M) is global anyon offset + p.
    size_t alice_block_offset() const {
        return bell_anyons() - phi_anyons;
    }
    /// Generator index whose monodromy measures Alice's pair k (1..M).
    int measured_pair_generator(size_t k) const;
    size_t bob_local_to_global_anyon(size_t local) const;
    int bob_local_generator_to_global(int local) const;
    /// Qubits (1-based) that hold phi after teleportation.
    size_t bob_register_qubits() const {
        return phi_anyons / 2;
    }
    size_t bell_register_qubits() const {
        return bell_copies();
    }
};

// ---------------------------------------------------------------------------
// Random states.

/// Portable standard normals: Box-Muller over mt19937_64. The engine output
/// is fixed by the standard; std::normal_distribution is not.
class GaussianSource {
   public:
    explicit GaussianSource(uint64_t seed) : engine_(seed) {
    }
    double uniform_open() {
        // (0, 1): 53 random bits, offset by half an ulp.
        return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    }
    double next() {
        if (spare_) {
            double out = *spare_;
            spare_.reset();
            return out;
        }
        double u1 = uniform_open();
        double u2 = uniform_open();
        double radius = std::sqrt(-2.0 * std::log(u1));
        double angle = 2.0 * 3.14159265358979323846 * u2;
        spare_ = radius * std::sin(angle);
        return radius * std::cos(angle);
    }
    std::mt19937_64 &engine() {
        return engine_;
    }

   private:
    std::mt19937_64 engine_;
    std::optional<double> spare_;
};

/// Seed-deterministic random state in the given sector.
///
/// Float: independent standard normal real/imaginary parts on every basis
/// label of the sector, then normalized.
/// Exact: a seeded random basis label of the sector followed by a seeded
/// random braid word of length 4K (powers +-1). The result is exactly
/// normalized and representable; it is not Haar distributed.
template <Amplitude S>
AnyonState<S> random_state(size_t anyon_count, Charge sector, uint64_t seed);

/// The random braid word used by the exact random_state, exposed for tests
/// and property suites.
BraidWord random_braid_word(size_t anyon_count, size_t length, std::mt19937_64 &engine);

// ---------------------------------------------------------------------------
// Embedding and measurement.

/// Tensor product of the all-zeros Bell register (4N+2 anyons) with phi,
/// phi on the right. No braiding applied.
template <Amplitude S>
AnyonState<S> embed(const AnyonState<S> &phi, const Layout &layout) {
    if (phi.anyon_count() != layout.phi_anyons) {
        throw std::invalid_argument("embed: phi anyon count does not match the layout");
    }
    size_t total = layout.total_anyons();
    std::vector<S> amps(size_t{1} << qubit_count_for(total), S(0));
    // Bell register is |0...0>, so phi occupies the lowest indices.
    for (size_t i = 0; i < phi.dimension(); i++) {
        amps[i] = phi[i];
    }
    return AnyonState<S>(total, phi.sector(), std::move(amps));
}

template <Amplitude S>
struct MeasurementRecord {
    int pair_index;  ///< generator index j of the measured pair (j, j+1)
    int outcome;     ///< fusion channel 0 or 1
    Probability<S> probability;
    /// Empty for a zero-probability branch.
    std::optional<AnyonState<S>> post_state;
    /// False only when an exact probability is not a power of 1/2, in which
    /// case post_state is the projected, unnormalized vector.
    bool normalized = true;
};

/// Below this a float branch probability counts as zero.
inline constexpr double kFloatZeroProbability = 1e-24;

namespace detail {

template <Amplitude S>
Probability<S> real_norm2(std::span<const S> amps) {
    if constexpr (is_exact_v<S>) {
        CycScalar total;
        for (const auto &a : amps) {
            if (!a.is_zero()) {
                total += a.norm2();
            }
        }
        return total;
    } else {
        double total = 0;
        for (const auto &a : amps) {
            total += std::norm(a);
        }
        return total;
    }
}

/// 1/sqrt(2^-e) = 2^(e/2) as an exact scalar.
CycScalar inverse_sqrt_of_power_of_half(std::int64_t e);

}  // namespace detail

/// Fusion-channel measurement of anyons (j, j+1) through the monodromy
/// observable (b_j)^2: outcome a projects with P_a = (I + (-1)^a (b_j)^2)/2.
/// Works the same for aligned (odd j) and straddling (even j) pairs.
/// Returns the records for outcomes 0 and 1, in that order.
template <Amplitude S>
std::array<MeasurementRecord<S>, 2> measure_pair(const AnyonState<S> &state, int pair_index) {
    GateOp mono = monodromy(state.anyon_count(), pair_index);
    std::vector<S> flipped(state.amplitudes().begin(), state.amplitudes().end());
    apply_gate<S>(mono, std::span<S>(flipped));

    std::array<MeasurementRecord<S>, 2> out;
    for (int a = 0; a < 2; a++) {
        std::vector<S> proj(state.dimension(), S(0));
        for (size_t i = 0; i < proj.size(); i++) {
            const S &x = state[i];
            const S &y = flipped[i];
            S v = a == 0 ? x + y : x - y;
            proj[i] = is_exact_zero(v) ? S(0) : halve(v);
        }
        MeasurementRecord<S> rec{pair_index, a, detail::real_norm2<S>(std::span<const S>(proj)), std::nullopt, true};
        if constexpr (is_exact_v<S>) {
            if (!rec.probability.is_zero()) {
                std::int64_t e = rec.probability.inverse_power_of_two_exponent();
                if (e >= 0) {
                    CycScalar scale = detail::inverse_sqrt_of_power_of_half(e);
                    for (auto &v : proj) {
                        if (!v.is_zero()) {
                            v *= scale;
                        }
                    }
                } else {
                    rec.normalized = false;
                }
                rec.post_state.emplace(state.anyon_count(), state.sector(), std::move(proj));
            }
        } else {
            if (rec.probability < kFloatZeroProbability) {
                rec.probability = 0.0;
            } else {
                double scale = 1.0 / std::sqrt(rec.probability);
                for (auto &v : proj) {
                    v *= scale;
                }
                rec.post_state.emplace(state.anyon_count(), state.sector(), std::move(proj));
            }
        }
        out[a] = std::move(rec);
    }
    return out;
}

template <Amplitude S>
struct FidelityResult {
    /// |<u|v>| as a double.
    double value;
    /// <u|v> in the amplitude type.
    S overlap;
    /// Exact backend: |<u|v>|^2 == 1 exactly and v == lambda u exactly.
    bool exact_unit = false;
    /// lambda with v = lambda u, when v equals u up to phase.
    std::optional<S> phase;
};

/// Fidelity of two pure states up to a global phase, |<u|v>|.
template <Amplitude S>
FidelityResult<S> fidelity_up_to_phase(const AnyonState<S> &u, const AnyonState<S> &v) {
    if (u.anyon_count() != v.anyon_count() || u.sector() != v.sector()) {
        throw std::invalid_argument("fidelity_up_to_phase: states differ in anyon count or sector");
    }
    S overlap(0);
    for (size_t i = 0; i < u.dimension(); i++) {
        if (!is_exact_zero(u[i]) && !is_exact_zero(v[i])) {
            overlap += conj_of(u[i]) * v[i];
        }
    }
    FidelityResult<S> result{std::abs(to_complex(overlap)), overlap, false, std::nullopt};
    if constexpr (is_exact_v<S>) {
        result.value = std::sqrt(overlap.norm2().to_complex().real());
        if (overlap.is_unit() && u.scaled(overlap) == v) {
            result.exact_unit = true;
            result.phase = overlap;
        }
    } else {
        if (std::abs(result.value - 1.0) <= 1e-10) {
            result.phase = overlap / std::abs(overlap);
        }
    }
    return result;
}

/// Conventional partial trace onto the listed qubits (1-based, any order;
/// the output basis follows the listed order, big-endian).
template <Amplitude S>
Matrix<S> reduced_density(const AnyonState<S> &state, const std::vector<size_t> &keep) {
    size_t n = state.qubit_count();
    uint64_t keep_mask = 0;
    for (size_t q : keep) {
        if (q < 1 || q > n) {
            throw std::invalid_argument("reduced_density: qubit out of range");
        }
        if (keep_mask & qubit_mask(q, n)) {
            throw std::invalid_argument("reduced_density: duplicate qubit");
        }
        keep_mask |= qubit_mask(q, n);
    }
    size_t k = keep.size();
    size_t sub = size_t{1} << k;
    // Global index -> kept-subsystem index.
    auto kept_index = [&](uint64_t i) {
        size_t out = 0;
        for (size_t t = 0; t < k; t++) {
            if (i & qubit_mask(keep[t], n)) {
                out |= size_t{1} << (k - 1 - t);
            }
        }
        return out;
    };
    Matrix<S> rho(sub, sub);
    // Group amplitudes by the traced-out bits.
    std::vector<std::vector<std::pair<size_t, size_t>>> groups;
    {
        std::vector<std::pair<uint64_t, size_t>> keyed;
        keyed.reserve(state.dimension());
        for (size_t i = 0; i < state.dimension(); i++) {
            if (!is_exact_zero(state[i])) {
                keyed.emplace_back(i & ~keep_mask, i);
            }
        }
        std::sort(keyed.begin(), keyed.end());
        for (size_t t = 0; t < keyed.size(); t++) {
            if (t == 0 || keyed[t].first != keyed[t - 1].first) {
                groups.emplace_back();
            }
            groups.back().emplace_back(kept_index(keyed[t].second), keyed[t].second);
        }
    }
    for (const auto &g : groups) {
        for (const auto &[ra, ia] : g) {
            for (const auto &[rb, ib] : g) {
                rho(ra, rb) += state[ia] * conj_of(state[ib]);
            }
        }
    }
    return rho;
}

template <>
AnyonState<CycScalar> random_state<CycScalar>(size_t anyon_count, Charge sector, uint64_t seed);
template <>
AnyonState<Complex> random_state<Complex>(size_t anyon_count, Charge sector, uint64_t seed);

}  // namespace ising

#endif
