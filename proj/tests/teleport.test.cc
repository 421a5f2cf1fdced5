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

#include <algorithm>

#include "gtest/gtest.h"
#include "oracle.h"

using namespace ising;

namespace {

ExactState measure_in_order(ExactState state, const Layout &layout, const std::vector<int> &outcomes,
                            const std::vector<size_t> &order) {
    for (size_t k : order) {
        auto recs = measure_pair(state, layout.measured_pair_generator(k));
        const auto &rec = recs[outcomes[k - 1]];
        EXPECT_TRUE(rec.post_state.has_value());
        state = *rec.post_state;
    }
    return state;
}

std::vector<int> labels_of(std::string_view text) {
    std::vector<int> out;
    for (char ch : text) {
        out.push_back(ch - '0');
    }
    return out;
}

const BranchRecord &branch(const TeleportReport &report, std::string_view outcomes) {
    auto it = std::find_if(report.branches.begin(), report.branches.end(),
                           [&](const BranchRecord &b) { return b.outcome_string() == outcomes; });
    EXPECT_NE(it, report.branches.end()) << outcomes;
    return *it;
}

}  // namespace

TEST(Tangle, step_word_stays_in_its_window) {
    for (size_t k = 2; k <= 6; k++) {
        for (size_t offset : {0, 3}) {
            BraidWord w = tangle_step_word(k, offset, 2 * 6 + 4);
            EXPECT_EQ(w.letters().size(), 2 * (k - 1));
            for (const auto &l : w.letters()) {
                EXPECT_GE(l.index, static_cast<int>(offset + k - 1)) << w.str();
                EXPECT_LE(l.index, static_cast<int>(offset + 2 * k - 1)) << w.str();
                EXPECT_EQ(l.power, 1);
            }
        }
    }
    EXPECT_EQ(tangle_step_word(2, 0, 4).str(), "b3 b2");
}

TEST(Tangle, four_anyon_gate_up_to_phase) {
    GateMatch m = verify_two_qubit_gate();
    EXPECT_TRUE(m.matches);
    EXPECT_EQ(m.phase, CycScalar::zeta(1));
    ExactMatrix from_oracle = oracle::dense_word(4, {{3, 1}, {2, 1}});
    EXPECT_EQ(from_oracle, m.tangle);
    EXPECT_EQ(from_oracle, reference_two_qubit_gate().scaled(CycScalar::zeta(1)));
}

TEST(Tangle, undo_inverts_prepare) {
    for (size_t copies = 2; copies <= 5; copies++) {
        size_t k = 2 * copies;
        BraidWord prep = TangleSpec{copies, 0}.word(k);
        BraidWord undo = TangleSpec{copies, 0, TangleDirection::Undo}.word(k);
        EXPECT_EQ(undo, prep.inverse());
        ExactState zero = basis_state_at<CycScalar>(k, 0);
        EXPECT_EQ(apply(undo, apply(prep, zero)), zero);
    }
}

TEST(Bell, roundtrip_and_innermost_pair) {
    for (size_t n = 1; n <= 3; n++) {
        ExactState bell = bell_state<CycScalar>(n);
        EXPECT_EQ(bell.anyon_count(), 4 * n + 2);
        BraidWord undo = TangleSpec{2 * n + 1, 0, TangleDirection::Undo}.word(4 * n + 2);
        EXPECT_EQ(apply(undo, bell), basis_state_at<CycScalar>(4 * n + 2, 0));
        auto recs = measure_pair(bell, static_cast<int>(2 * n + 1));
        EXPECT_EQ(recs[0].probability, CycScalar(1)) << n;
        EXPECT_TRUE(verify_bell(n).ok()) << n;
    }
}

TEST(Bell, prepare_leaves_phi_untouched) {
    ExactState phi = random_state<CycScalar>(3, Charge::Sigma, 8);
    Layout layout = Layout::make(3, 1);
    ExactState prepared = prepare_bell(embed(phi, layout), layout);
    ExactState bell = bell_state<CycScalar>(1);
    for (size_t b = 0; b < bell.dimension(); b++) {
        for (size_t p = 0; p < 2; p++) {
            EXPECT_EQ(prepared[b * 2 + p], bell[b] * phi[p]);
        }
    }
}

TEST(Correction, examples) {
    EXPECT_EQ(correction_word(labels_of("0101")).str(), "b2^2 b3^2");
    EXPECT_EQ(correction_word(labels_of("1011")).str(), "b0^2 b3^2");
    CorrectionPlan odd = correction_word(labels_of("100"));
    EXPECT_EQ(odd.str(), "I");
    EXPECT_EQ(odd.parity, 1);
    EXPECT_FALSE(odd.uses_auxiliary);
    EXPECT_EQ(correction_word(labels_of("0000")).str(), "I");
    EXPECT_TRUE(correction_word(labels_of("1000")).uses_auxiliary);
}

TEST(Correction, global_word_uses_bob_orientation) {
    Layout layout = Layout::make(4, 2);
    CorrectionPlan plan = correction_word(labels_of("1011"));
    EXPECT_EQ(plan.global_word(layout).str(), "b4^2 b1^2");
}

TEST(Table1, every_row_matches) {
    auto rows = table1();
    ASSERT_EQ(rows.size(), 16u);
    for (const auto &row : rows) {
        EXPECT_TRUE(row.match()) << row.outcomes << ": " << row.generated << " vs " << row.expected;
    }
    EXPECT_EQ(rows[0].generated, "I");
    EXPECT_EQ(rows[1].generated, "b0^2 b1^2 b2^2 b3^2");
    EXPECT_EQ(rows[14].generated, "b0^2 b2^2");
}

TEST(Lemma, all_four_cases_hold_up_to_phase) {
    LemmaReport r = verify_lemma();
    ASSERT_EQ(r.cases.size(), 4u);
    EXPECT_TRUE(r.ok());
    for (const auto &c : r.cases) {
        EXPECT_TRUE(c.result.exact_unit) << c.a1 << c.a2;
        EXPECT_TRUE(c.result.phase->is_unit());
    }
    EXPECT_FALSE(r.phase_state_independent);
}

TEST(Teleport, zero_phi_four_anyons) {
    ExactState phi = basis_state<CycScalar>(4, {0, 0});
    TeleportReport r = run_teleport(phi, 2, {});
    ASSERT_EQ(r.branches.size(), 16u);
    EXPECT_TRUE(r.all_pass);
    EXPECT_EQ(r.probability_sum_exact, true);
    for (const auto &b : r.branches) {
        EXPECT_EQ(b.probability_exact, "1/16");
        EXPECT_TRUE(b.exact_unit);
        EXPECT_EQ(*b.fidelity, 1.0);
    }
    EXPECT_EQ(branch(r, "0000").correction, "I");
}

TEST(Teleport, three_anyons_single_bell_pair) {
    ExactState phi = random_state<CycScalar>(3, Charge::Sigma, 42);
    TeleportReport r = run_teleport(phi, 1, {});
    ASSERT_EQ(r.branches.size(), 8u);
    EXPECT_TRUE(r.all_pass);
    EXPECT_EQ(branch(r, "100").correction, "I");
    EXPECT_TRUE(branch(r, "100").pass);
}

TEST(Teleport, odd_sector_four_anyons) {
    ExactState phi = random_state<CycScalar>(4, Charge::Psi, 6);
    TeleportReport r = run_teleport(phi, 2, {});
    ASSERT_EQ(r.branches.size(), 16u);
    EXPECT_TRUE(r.all_pass);
    for (const auto &b : r.branches) {
        int c = 0;
        for (int a : b.outcomes) {
            c ^= a;
        }
        EXPECT_EQ(correction_word(b.outcomes).uses_auxiliary, c == 1) << b.outcome_string();
    }
}

TEST(Teleport, exact_and_float_agree) {
    ExactState phi = random_state<CycScalar>(5, Charge::Sigma, 2);
    TeleportReport e = run_teleport(phi, 2, {});
    TeleportReport f = run_teleport(phi.to_float(), 2, {});
    ASSERT_EQ(e.branches.size(), f.branches.size());
    EXPECT_TRUE(e.all_pass);
    EXPECT_TRUE(f.all_pass);
    for (size_t t = 0; t < e.branches.size(); t++) {
        EXPECT_NEAR(f.branches[t].probability, 1.0 / 32, 1e-12);
        EXPECT_GE(*f.branches[t].fidelity, 1 - 1e-10);
        EXPECT_EQ(e.branches[t].correction_global, f.branches[t].correction_global);
    }
}

TEST(Teleport, rejects_too_many_anyons) {
    ExactState phi = random_state<CycScalar>(5, Charge::Sigma, 1);
    EXPECT_THROW(run_teleport(phi, 1, {}), std::invalid_argument);
}

TEST(Teleport, rejects_cross_sector_state) {
    CycScalar h = CycScalar::inv_sqrt2();
    ExactState mixed(4, Charge::Vac, {h, h, 0, 0});
    EXPECT_THROW(run_teleport(mixed, 2, {}), SuperselectionError);
}

TEST(Teleport, rejects_unnormalized_state) {
    ExactState big(4, Charge::Vac, {2, 0, 0, 0});
    EXPECT_THROW(run_teleport(big, 2, {}), std::invalid_argument);
}

TEST(Teleport, sample_mode_is_deterministic) {
    FloatState phi = random_state<Complex>(4, Charge::Vac, 3);
    TeleportOptions opts{TeleportMode::Sample, 200, 77};
    TeleportReport a = run_teleport(phi, 2, opts);
    TeleportReport b = run_teleport(phi, 2, opts);
    ASSERT_EQ(a.branches.size(), b.branches.size());
    size_t total = 0;
    for (size_t t = 0; t < a.branches.size(); t++) {
        EXPECT_EQ(a.branches[t].outcome_string(), b.branches[t].outcome_string());
        EXPECT_EQ(a.branches[t].samples, b.branches[t].samples);
        total += a.branches[t].samples;
    }
    EXPECT_EQ(total, 200u);
    EXPECT_TRUE(a.all_pass);
}

TEST(Teleport, threads_do_not_change_the_report) {
    FloatState phi = random_state<Complex>(5, Charge::Sigma, 9);
    TeleportOptions one;
    TeleportOptions four;
    four.threads = 4;
    TeleportReport a = run_teleport(phi, 2, one);
    TeleportReport b = run_teleport(phi, 2, four);
    ASSERT_EQ(a.branches.size(), b.branches.size());
    for (size_t t = 0; t < a.branches.size(); t++) {
        EXPECT_EQ(a.branches[t].outcome_string(), b.branches[t].outcome_string());
        EXPECT_EQ(a.branches[t].probability, b.branches[t].probability);
        EXPECT_EQ(a.branches[t].fidelity, b.branches[t].fidelity);
    }
}

TEST(Teleport, measurement_order_does_not_matter) {
    ExactState phi = random_state<CycScalar>(4, Charge::Vac, 21);
    Layout layout = Layout::make(4, 2);
    ExactState state = embed(phi, layout);
    apply_in_place(TangleSpec{layout.bell_copies(), 0}.word(layout.total_anyons()), state);
    apply_in_place(alice_word(layout), state);
    for (std::string_view outcomes : {"0000", "0110", "1011", "1111"}) {
        auto labels = labels_of(outcomes);
        ExactState forward = measure_in_order(state, layout, labels, {1, 2, 3, 4});
        ExactState backward = measure_in_order(state, layout, labels, {4, 3, 2, 1});
        ExactState shuffled = measure_in_order(state, layout, labels, {2, 4, 1, 3});
        EXPECT_EQ(forward, backward) << outcomes;
        EXPECT_EQ(forward, shuffled) << outcomes;
    }
}
