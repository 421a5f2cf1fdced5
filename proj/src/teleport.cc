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

#include "ising/teleport.h"

#include <chrono>
#include <cmath>
#include <map>
#include <random>
#include <sstream>
#include <thread>

namespace ising {

BraidWord tangle_step_word(size_t k, size_t offset, size_t anyon_count) {
    if (k < 2) {
        throw std::invalid_argument("tangle_step_word: k must be >= 2");
    }
    if (offset + 2 * k > anyon_count) {
        throw std::invalid_argument("tangle_step_word: block does not fit in the system");
    }
    int o = static_cast<int>(offset);
    int kk = static_cast<int>(k);
    std::vector<BraidLetter> applied;
    for (int j = 2 * kk - 2; j >= kk; j--) {
        applied.push_back({o + j, 1});
    }
    for (int j = 2 * kk - 1; j >= kk + 1; j--) {
        applied.push_back({o + j, 1});
    }
    return BraidWord(anyon_count, std::vector<BraidLetter>(applied.rbegin(), applied.rend()));
}

BraidWord TangleSpec::word(size_t anyon_count) const {
    if (offset + 2 * copies > anyon_count) {
        throw std::invalid_argument("TangleSpec: block does not fit in the system");
    }
    BraidWord out(anyon_count);
    for (size_t k = 2; k <= copies; k++) {
        out = tangle_step_word(k, offset, anyon_count) * out;
    }
    return direction == TangleDirection::Prepare ? out : out.inverse();
}

BraidWord alice_word(const Layout &layout) {
    return TangleSpec{layout.phi_anyons, layout.alice_block_offset(), TangleDirection::Undo}.word(
        layout.total_anyons());
}

// ---------------------------------------------------------------------------

std::string CorrectionPlan::str() const {
    if (squared_generators.empty()) {
        return "I";
    }
    std::string out;
    for (int j : squared_generators) {
        if (!out.empty()) {
            out += ' ';
        }
        out += "b" + std::to_string(j) + "^2";
    }
    return out;
}

BraidWord CorrectionPlan::global_word(const Layout &layout) const {
    if (outcomes.size() != layout.phi_anyons) {
        throw std::invalid_argument("correction: outcome count does not match the layout");
    }
    std::vector<BraidLetter> letters;
    for (int j : squared_generators) {
        letters.push_back({layout.bob_local_generator_to_global(j), 2});
    }
    return BraidWord(layout.total_anyons(), std::move(letters));
}

CorrectionPlan correction_word(const std::vector<int> &outcomes) {
    size_t m = outcomes.size();
    if (m == 0) {
        throw std::invalid_argument("correction_word: need at least one outcome");
    }
    CorrectionPlan plan;
    plan.outcomes = outcomes;
    for (int a : outcomes) {
        if (a != 0 && a != 1) {
            throw std::invalid_argument("correction_word: outcomes must be 0 or 1");
        }
        plan.parity ^= a;
    }
    if (m % 2 == 0 && plan.parity == 1) {
        plan.squared_generators.push_back(0);
        plan.uses_auxiliary = true;
    }
    // Exponent of (b_j)^2 is a_{j+1} + ... + a_M, reduced mod 2.
    int suffix = 0;
    std::vector<int> from_right;
    for (size_t j = m - 1; j >= 1; j--) {
        suffix ^= outcomes[j];
        if (suffix) {
            from_right.push_back(static_cast<int>(j));
        }
    }
    plan.squared_generators.insert(plan.squared_generators.end(), from_right.rbegin(), from_right.rend());
    return plan;
}

const std::array<std::pair<std::string_view, std::string_view>, 16> &table1_reference() {
    static const std::array<std::pair<std::string_view, std::string_view>, 16> kTable = {{
        {"0000", "I"},
        {"0001", "b0^2 b1^2 b2^2 b3^2"},
        {"0010", "b0^2 b1^2 b2^2"},
        {"0011", "b3^2"},
        {"0100", "b0^2 b1^2"},
        {"0101", "b2^2 b3^2"},
        {"0110", "b2^2"},
        {"0111", "b0^2 b1^2 b3^2"},
        {"1000", "b0^2"},
        {"1001", "b1^2 b2^2 b3^2"},
        {"1010", "b1^2 b2^2"},
        {"1011", "b0^2 b3^2"},
        {"1100", "b1^2"},
        {"1101", "b0^2 b2^2 b3^2"},
        {"1110", "b0^2 b2^2"},
        {"1111", "b1^2 b3^2"},
    }};
    return kTable;
}

std::vector<Table1Row> table1() {
    std::vector<Table1Row> rows;
    for (const auto &[label, expected] : table1_reference()) {
        std::vector<int> outcomes;
        for (char ch : label) {
            outcomes.push_back(ch - '0');
        }
        rows.push_back({std::string(label), std::string(expected), correction_word(outcomes).str()});
    }
    return rows;
}

// ---------------------------------------------------------------------------

bool LemmaReport::ok() const {
    if (cases.size() != 4) {
        return false;
    }
    for (const auto &c : cases) {
        if (!c.result.exact_unit) {
            return false;
        }
    }
    return true;
}

LemmaReport verify_lemma() {
    constexpr size_t kAnyons = 4;
    BraidWord tangle = TangleSpec{2, 0}.word(kAnyons);
    BraidWord exchange_twice(kAnyons, {{1, 2}});
    LemmaReport report;
    for (int a1 = 0; a1 < 2; a1++) {
        for (int a2 = 0; a2 < 2; a2++) {
            auto lhs = apply(exchange_twice * tangle, basis_state<CycScalar>(kAnyons, {a1, a2}));
            auto rhs = apply(tangle, basis_state<CycScalar>(kAnyons, {1 - a1, 1 - a2}));
            // v = lambda u with u = rhs, v = lhs.
            report.cases.push_back({a1, a2, fidelity_up_to_phase(rhs, lhs)});
        }
    }
    report.phase_state_independent = true;
    for (const auto &c : report.cases) {
        if (!c.result.phase || !report.cases.front().result.phase || *c.result.phase != *report.cases.front().result.phase) {
            report.phase_state_independent = false;
        }
    }
    return report;
}

ExactMatrix reference_two_qubit_gate() {
    const CycScalar z = CycScalar::zero();
    const CycScalar one = CycScalar::one();
    const CycScalar i = CycScalar::i();
    ExactMatrix m{{one, z, z, -i}, {z, i, one, z}, {z, -i, one, z}, {one, z, z, i}};
    return m.scaled(CycScalar::inv_sqrt2());
}

GateMatch verify_two_qubit_gate() {
    GateMatch out;
    out.tangle = to_dense(TangleSpec{2, 0}.word(4));
    ExactMatrix ref = reference_two_qubit_gate();
    // lambda = tr(ref^dagger T) / tr(ref^dagger ref), and ref is unitary on 4 dims.
    out.phase = (ref.adjoint() * out.tangle).trace().halve(2);
    out.matches = out.phase.is_unit() && out.tangle == ref.scaled(out.phase);
    return out;
}

VerifyReport verify_bell(size_t num_pairs) {
    VerifyReport report;
    report.name = "Bell state of " + std::to_string(4 * num_pairs + 2) + " anyons";
    size_t anyons = 4 * num_pairs + 2;
    auto bell = bell_state<CycScalar>(num_pairs);
    auto zeros = basis_state_at<CycScalar>(anyons, 0);

    report.checked++;
    auto undone = apply(TangleSpec{2 * num_pairs + 1, 0, TangleDirection::Undo}.word(anyons), bell);
    if (undone != zeros) {
        report.failures.push_back({"undo tangle of Bell = |0...0>", "state differs from |0...0>"});
    }

    report.checked++;
    int inner = static_cast<int>(2 * num_pairs + 1);
    auto records = measure_pair(bell, inner);
    if (!records[0].probability.is_one()) {
        report.failures.push_back(
            {"innermost pair (" + std::to_string(inner) + "," + std::to_string(inner + 1) + ") in channel 0",
             "P(0) = " + records[0].probability.str()});
    }

    ExactMatrix half_identity = ExactMatrix::identity(2).scaled(CycScalar::inv_pow2(1));
    for (size_t q = 1; q <= num_pairs; q++) {
        report.checked++;
        ExactMatrix rho = reduced_density(bell, {q});
        if (rho != half_identity) {
            std::stringstream detail;
            detail << "rho = [[" << rho(0, 0) << ", " << rho(0, 1) << "], [" << rho(1, 0) << ", " << rho(1, 1)
                   << "]]";
            report.failures.push_back({"Bob qubit " + std::to_string(q) + " reduced state = I/2", detail.str()});
        }
    }
    return report;
}

// ---------------------------------------------------------------------------

std::string BranchRecord::outcome_string() const {
    std::string out;
    for (int a : outcomes) {
        out += static_cast<char>('0' + a);
    }
    return out;
}

template <Amplitude S>
void validate_teleport_input(const AnyonState<S> &phi, size_t num_pairs) {
    Layout::make(phi.anyon_count(), num_pairs);
    if (auto violation = phi.superselection_violation()) {
        throw SuperselectionError("phi violates superselection: " + *violation);
    }
    if constexpr (is_exact_v<S>) {
        if (!phi.norm2().is_one()) {
            throw std::invalid_argument("phi is not exactly normalized: <phi|phi> = " + phi.norm2().str());
        }
    } else {
        double n2 = phi.norm2().real();
        if (std::abs(n2 - 1.0) > 1e-10) {
            throw std::invalid_argument("phi is not normalized: <phi|phi> = " + std::to_string(n2));
        }
    }
}

namespace {

std::string rational_string(const CycScalar &p) {
    if (!p.is_rational()) {
        return p.str();
    }
    std::stringstream out;
    out << p.coefficients()[0];
    if (p.denominator_exponent() > 0) {
        out << "/" << (BigInt(1) << p.denominator_exponent());
    }
    return out.str();
}

std::vector<int> outcomes_of(size_t index, size_t m) {
    std::vector<int> out(m);
    for (size_t k = 0; k < m; k++) {
        out[k] = static_cast<int>((index >> (m - 1 - k)) & 1);
    }
    return out;
}

template <Amplitude S>
struct BranchResult {
    BranchRecord record;
    Probability<S> probability{};
};

template <Amplitude S>
BranchResult<S> run_branch(
    const AnyonState<S> &entangled,
    const AnyonState<S> &phi,
    const Layout &layout,
    const std::vector<int> &outcomes,
    double tolerance) {
    BranchResult<S> result;
    BranchRecord &rec = result.record;
    rec.outcomes = outcomes;
    CorrectionPlan plan = correction_word(outcomes);
    BraidWord global = plan.global_word(layout);
    rec.correction = plan.str();
    rec.correction_global = global.str();

    std::optional<AnyonState<S>> current = entangled;
    Probability<S> joint(1);
    bool carrying_weight = false;
    for (size_t k = 1; k <= layout.phi_anyons; k++) {
        auto records = measure_pair(*current, layout.measured_pair_generator(k));
        auto &chosen = records[outcomes[k - 1]];
        joint = carrying_weight ? chosen.probability : joint * chosen.probability;
        carrying_weight = !chosen.normalized;
        if (!chosen.post_state) {
            current.reset();
            joint = Probability<S>(0);
            break;
        }
        current = std::move(chosen.post_state);
    }
    result.probability = joint;
    rec.probability = probability_value<S>(joint);
    if constexpr (is_exact_v<S>) {
        rec.probability_exact = rational_string(joint);
    }
    if (!current) {
        // Zero-probability branch: nothing to correct, nothing can fail.
        rec.pass = true;
        return result;
    }

    apply_in_place(global, *current);

    // chi = (<phi| x I) psi over Bob's register; |chi|^2 <= |psi|^2 with
    // equality iff psi = phi x chi.
    size_t n = current->qubit_count();
    size_t bob = layout.bob_register_qubits();
    size_t rest_dim = size_t{1} << (n - bob);
    std::vector<S> chi(rest_dim, S(0));
    for (size_t x = 0; x < phi.dimension(); x++) {
        if (is_exact_zero(phi[x])) {
            continue;
        }
        S weight = conj_of(phi[x]);
        for (size_t r = 0; r < rest_dim; r++) {
            const S &amp = (*current)[x * rest_dim + r];
            if (!is_exact_zero(amp)) {
                chi[r] += weight * amp;
            }
        }
    }
    auto chi_norm = detail::real_norm2<S>(std::span<const S>(chi));
    auto psi_norm = detail::real_norm2<S>(current->amplitudes());
    double ratio = probability_value<S>(chi_norm) / probability_value<S>(psi_norm);
    rec.fidelity = std::sqrt(std::max(0.0, ratio));
    if constexpr (is_exact_v<S>) {
        rec.exact_unit = chi_norm == psi_norm;
        rec.pass = rec.exact_unit;
    } else {
        rec.pass = *rec.fidelity >= 1.0 - tolerance;
    }
    return result;
}

}  // namespace

template <Amplitude S>
TeleportReport run_teleport(const AnyonState<S> &phi, size_t num_pairs, const TeleportOptions &options) {
    auto start = std::chrono::steady_clock::now();
    validate_teleport_input(phi, num_pairs);
    Layout layout = Layout::make(phi.anyon_count(), num_pairs);
    size_t m = layout.phi_anyons;

    TeleportReport report;
    report.phi_anyons = m;
    report.num_pairs = num_pairs;
    report.total_anyons = layout.total_anyons();
    report.seed = options.seed;
    report.backend = backend_of_v<S>;
    report.mode = options.mode;
    report.samples = options.samples;
    report.tolerance = options.tolerance;

    BraidWord bell = TangleSpec{layout.bell_copies(), 0}.word(layout.total_anyons());
    BraidWord alice = alice_word(layout);
    report.bell_word = bell.str();
    report.alice_word = alice.str();

    auto state = embed(phi, layout);
    apply_in_place(bell, state);
    apply_in_place(alice, state);

    std::vector<size_t> branch_indices;
    std::map<size_t, size_t> sample_counts;
    if (options.mode == TeleportMode::Exhaustive) {
        if (m > 24) {
            throw std::invalid_argument("run_teleport: exhaustive mode is limited to M <= 24");
        }
        for (size_t b = 0; b < (size_t{1} << m); b++) {
            branch_indices.push_back(b);
        }
    } else {
        if (options.samples == 0) {
            throw std::invalid_argument("run_teleport: sample mode needs a positive sample count");
        }
        std::mt19937_64 engine(options.seed ^ 0x9e3779b97f4a7c15ULL);
        for (size_t s = 0; s < options.samples; s++) {
            AnyonState<S> current = state;
            size_t index = 0;
            for (size_t k = 1; k <= m; k++) {
                auto records = measure_pair(current, layout.measured_pair_generator(k));
                double p0 = probability_value<S>(records[0].probability);
                double p1 = probability_value<S>(records[1].probability);
                double u = (static_cast<double>(engine() >> 11) * 0x1.0p-53) * (p0 + p1);
                int a = (u < p0 && records[0].post_state) || !records[1].post_state ? 0 : 1;
                index = (index << 1) | static_cast<size_t>(a);
                current = std::move(*records[a].post_state);
            }
            sample_counts[index]++;
        }
        for (const auto &[index, count] : sample_counts) {
            branch_indices.push_back(index);
        }
    }

    std::vector<BranchResult<S>> results(branch_indices.size());
    auto worker = [&](size_t begin, size_t stride) {
        for (size_t t = begin; t < branch_indices.size(); t += stride) {
            results[t] = run_branch(state, phi, layout, outcomes_of(branch_indices[t], m), options.tolerance);
        }
    };
    size_t threads = std::max<size_t>(1, std::min(options.threads, branch_indices.size()));
    if (threads == 1) {
        worker(0, 1);
    } else {
        std::vector<std::jthread> pool;
        for (size_t w = 0; w < threads; w++) {
            pool.emplace_back(worker, w, threads);
        }
    }

    Probability<S> total(0);
    report.all_pass = true;
    for (size_t t = 0; t < results.size(); t++) {
        BranchRecord rec = std::move(results[t].record);
        if (options.mode == TeleportMode::Sample) {
            rec.samples = sample_counts[branch_indices[t]];
        }
        total += results[t].probability;
        report.all_pass = report.all_pass && rec.pass;
        report.branches.push_back(std::move(rec));
    }
    report.probability_sum = probability_value<S>(total);
    if constexpr (is_exact_v<S>) {
        if (options.mode == TeleportMode::Exhaustive) {
            report.probability_sum_exact = total.is_one();
            report.all_pass = report.all_pass && total.is_one();
        }
    }
    report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

template TeleportReport run_teleport<CycScalar>(const ExactState &, size_t, const TeleportOptions &);
template TeleportReport run_teleport<Complex>(const FloatState &, size_t, const TeleportOptions &);
template void validate_teleport_input<CycScalar>(const ExactState &, size_t);
template void validate_teleport_input<Complex>(const FloatState &, size_t);

}  // namespace ising
