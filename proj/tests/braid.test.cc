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

#include "ising/braid.h"

#include <random>

#include "gtest/gtest.h"
#include "oracle.h"

#include "ising/anyon_ops.h"
#include "ising/braid_verify.h"

using namespace ising;

namespace {

ExactMatrix tau3_on_all(size_t n) {
    ExactMatrix z{{CycScalar(1), CycScalar(0)}, {CycScalar(0), CycScalar(-1)}};
    ExactMatrix out = ExactMatrix::identity(1);
    for (size_t q = 0; q < n; q++) {
        out = kron(out, z);
    }
    return out;
}

}  // namespace

TEST(Generator, four_anyons_odd_index_is_phase_gate_on_qubit_one) {
    ExactMatrix d = to_dense(generator(4, 1));
    CycScalar i = CycScalar::i();
    EXPECT_EQ(d, ExactMatrix::diagonal({1, 1, i, i}));
    EXPECT_EQ(d, oracle::dense_generator(4, 1));
}

TEST(Generator, four_anyons_even_index_is_entangling_block) {
    ExactMatrix d = to_dense(generator(4, 2));
    EXPECT_EQ(d, oracle::xx_block());
    EXPECT_EQ(d(0, 0), CycScalar(1, 0, 1, 0, 1));
    EXPECT_EQ(d(0, 3), CycScalar(1, 0, -1, 0, 1));
}

TEST(Generator, three_anyons_trailing_index) {
    ExactMatrix d = to_dense(generator(3, 2));
    EXPECT_EQ(d, oracle::x_block());
    EXPECT_EQ(to_dense(generator(3, 1)), oracle::s_block());
}

TEST(Generator, matches_kronecker_oracle_up_to_twelve_anyons) {
    for (size_t k = 3; k <= 12; k++) {
        for (int j = 1; j < static_cast<int>(k); j++) {
            EXPECT_EQ(to_dense(generator(k, j)), oracle::dense_generator(k, j)) << "K=" << k << " j=" << j;
        }
    }
}

TEST(Generator, rejects_out_of_range_index) {
    EXPECT_THROW(generator(4, 0), std::out_of_range);
    EXPECT_THROW(generator(4, 4), std::out_of_range);
    EXPECT_THROW(BraidWord(4, {{5, 1}}), std::out_of_range);
    EXPECT_THROW(BraidWord(4, {{0, 1}}), std::out_of_range);
}

TEST(Generator, unitary_exactly) {
    for (size_t k = 3; k <= 12; k++) {
        for (int j = 1; j < static_cast<int>(k); j++) {
            ExactMatrix d = to_dense(generator(k, j));
            ASSERT_EQ(d * d.adjoint(), ExactMatrix::identity(d.rows())) << "K=" << k << " j=" << j;
            ASSERT_EQ(to_dense(generator(k, j).adjoint()), d.adjoint());
        }
    }
}

TEST(Generator, commutes_with_total_parity_for_even_anyon_counts) {
    for (size_t k = 4; k <= 12; k += 2) {
        ExactMatrix z = tau3_on_all(k / 2);
        for (int j = 1; j < static_cast<int>(k); j++) {
            ExactMatrix d = to_dense(generator(k, j));
            ASSERT_EQ(d * z, z * d) << "K=" << k << " j=" << j;
        }
    }
}

TEST(Monodromy, four_anyon_examples) {
    EXPECT_EQ(to_dense(monodromy(4, 1)), ExactMatrix::diagonal({1, 1, -1, -1}));
    EXPECT_EQ(to_dense(monodromy(4, 2)), pauli_string("XX"));
    EXPECT_EQ(to_dense(monodromy(3, 2)), pauli_string("X"));
}

TEST(Monodromy, closed_form_equals_literal_square_and_is_involution) {
    for (size_t k = 3; k <= 12; k++) {
        for (int j = 1; j < static_cast<int>(k); j++) {
            ExactMatrix m = to_dense(monodromy(k, j));
            ExactMatrix g = oracle::dense_generator(k, j);
            ASSERT_EQ(m, g * g) << "K=" << k << " j=" << j;
            ASSERT_EQ(m * m, ExactMatrix::identity(m.rows()));
        }
    }
}

TEST(Apply, empty_word_is_identity) {
    ExactState s = random_state<CycScalar>(6, Charge::Psi, 5);
    EXPECT_EQ(apply(BraidWord(6), s), s);
}

TEST(Apply, letter_then_inverse_restores_state_exactly) {
    for (std::uint64_t seed = 0; seed < 5; seed++) {
        ExactState s = random_state<CycScalar>(5, Charge::Sigma, seed);
        ExactState t = apply(BraidWord(5, {{2, 1}}), s);
        EXPECT_EQ(apply(BraidWord(5, {{2, -1}}), t), s);
        EXPECT_EQ(apply(BraidWord(5, {{1, -1}, {1, 1}}), s), s);
    }
}

TEST(Apply, monodromy_on_odd_label_flips_sign) {
    ExactState s = basis_state<CycScalar>(4, {1, 0});
    ExactState t = apply(BraidWord(4, {{1, 2}}), s);
    EXPECT_EQ(t, s.scaled(CycScalar(-1)));
}

TEST(Apply, matches_dense_oracle_on_every_basis_state) {
    std::mt19937_64 rng(17);
    for (size_t k = 3; k <= 13; k++) {
        for (int trial = 0; trial < 3; trial++) {
            std::vector<BraidLetter> letters;
            std::vector<std::pair<int, int>> pairs;
            size_t len = 1 + rng() % 6;
            for (size_t t = 0; t < len; t++) {
                int j = 1 + static_cast<int>(rng() % (k - 1));
                int p = static_cast<int>(rng() % 5) - 2;
                letters.push_back({j, p});
                pairs.emplace_back(j, p);
            }
            BraidWord word(k, letters);
            ExactMatrix oracle_matrix = oracle::dense_word(k, pairs);
            size_t dim = size_t{1} << (k / 2);
            for (size_t b = 0; b < dim; b++) {
                ExactState s = basis_state_at<CycScalar>(k, b);
                ExactState out = apply(word, s);
                std::vector<CycScalar> col(dim);
                for (size_t r = 0; r < dim; r++) {
                    col[r] = oracle_matrix(r, b);
                }
                ASSERT_EQ(std::vector<CycScalar>(out.amplitudes().begin(), out.amplitudes().end()), col)
                    << word.str() << " K=" << k << " basis " << b;
            }
        }
    }
}

TEST(Apply, float_backend_tracks_exact_backend) {
    ExactState s = random_state<CycScalar>(9, Charge::Sigma, 3);
    BraidWord w = BraidWord::parse(9, "b8 b3^-1 b4 b7^2 b1 b2^-3 b5 b6");
    ExactState e = apply(w, s);
    FloatState f = ising::apply(w, s.to_float());
    for (size_t i = 0; i < e.dimension(); i++) {
        EXPECT_LE(std::abs(e[i].to_complex() - f[i]), 1e-13);
    }
}

TEST(Apply, rejects_mismatched_anyon_count) {
    ExactState s = basis_state<CycScalar>(4, {0, 0});
    EXPECT_THROW(apply(BraidWord(6, {{1, 1}}), s), std::invalid_argument);
}

TEST(UCnot, two_qubit_examples) {
    auto ops = u_cnot(2);
    std::vector<CycScalar> amps = {0, 0, 1, 0};
    apply_sequence<CycScalar>(ops, amps);
    EXPECT_EQ(amps, (std::vector<CycScalar>{0, 0, 0, 1}));
    std::vector<CycScalar> zero = {1, 0, 0, 0};
    apply_sequence<CycScalar>(ops, zero);
    EXPECT_EQ(zero, (std::vector<CycScalar>{1, 0, 0, 0}));
}

TEST(UCnot, single_qubit_is_identity) {
    EXPECT_EQ(to_dense(u_cnot(1), 1), ExactMatrix::identity(2));
}

TEST(UCnot, inverse_is_reversed_chain) {
    for (size_t n = 2; n <= 4; n++) {
        auto ops = u_cnot(n);
        auto reversed = std::vector<GateOp>(ops.rbegin(), ops.rend());
        ExactMatrix u = to_dense(ops, n);
        EXPECT_EQ(to_dense(reversed, n) * u, ExactMatrix::identity(u.rows()));
    }
    // Not an involution once there are three qubits.
    ExactMatrix u3 = to_dense(u_cnot(3), 3);
    EXPECT_NE(u3 * u3, ExactMatrix::identity(8));
}

TEST(ParityProjector, examples) {
    ExactMatrix plus = to_dense(parity_projector(1, +1));
    ExactMatrix minus = to_dense(parity_projector(1, -1));
    EXPECT_EQ(plus, ExactMatrix::diagonal({1, 0, 0, 1}));
    EXPECT_EQ(plus * plus, plus);
    EXPECT_EQ(minus * minus, minus);
    EXPECT_EQ(plus + minus, ExactMatrix::identity(4));
    ExactMatrix g = to_dense(generator(4, 2));
    EXPECT_EQ(plus * g, g * plus);
}

TEST(BraidRelations, hold_for_four_and_five_anyons) {
    for (size_t k : {3, 4, 5, 6}) {
        VerifyReport r = verify_braid_relations(k);
        EXPECT_TRUE(r.ok()) << k << ": " << (r.failures.empty() ? "" : r.failures[0].detail);
        EXPECT_GT(r.checked, 0u);
    }
}

TEST(BraidRelations, sabotaged_generator_breaks_yang_baxter) {
    GeneratorFn sabotaged = [](size_t k, int j) {
        GateOp g = generator(k, j);
        if (j == 2) {
            g.block(0, 3) = -g.block(0, 3);
        }
        return g;
    };
    VerifyReport r = verify_braid_relations(4, sabotaged);
    ASSERT_FALSE(r.ok());
    bool yang_baxter = false;
    for (const auto &f : r.failures) {
        yang_baxter |= f.identity.find("b1 b2 b1") != std::string::npos ||
                       f.identity.find("Yang") != std::string::npos;
    }
    EXPECT_TRUE(yang_baxter) << r.failures[0].identity;
}

TEST(Pauli, scalar_relation_is_i_for_four_anyons) {
    ExactMatrix lhs = oracle::dense_word(4, {{1, 1}, {2, 2}, {1, 1}, {2, 2}});
    EXPECT_EQ(lhs, ExactMatrix::identity(4).scaled(CycScalar::i()));
}

TEST(Pauli, tau1_chains) {
    EXPECT_EQ(oracle::dense_word(5, {{2, 2}, {4, 2}}), pauli_string("XI"));
    EXPECT_EQ(oracle::dense_word(6, {{2, 2}, {4, 2}}), pauli_string("XIX"));
}

TEST(Pauli, identities_hold_for_both_families) {
    for (size_t n = 1; n <= 4; n++) {
        for (PauliFamily fam : {PauliFamily::Odd, PauliFamily::Even}) {
            VerifyReport r = verify_pauli_identities(n, fam);
            EXPECT_TRUE(r.ok()) << n << ": " << (r.failures.empty() ? "" : r.failures[0].detail);
        }
        EXPECT_TRUE(verify_parity_projectors(n).ok()) << n;
    }
    EXPECT_THROW(parse_family("both"), std::invalid_argument);
}

TEST(Pauli, pauli_string_is_a_kronecker_product) {
    ExactMatrix y = pauli_string("Y");
    EXPECT_EQ(y(0, 1), -CycScalar::i());
    EXPECT_EQ(pauli_string("ZX"), kron(pauli_string("Z"), pauli_string("X")));
}

TEST(Derivation, even_generators_follow_from_f_and_r) {
    for (size_t k = 4; k <= 9; k++) {
        VerifyReport r = verify_generator_derivation(k);
        EXPECT_TRUE(r.ok()) << k << ": " << (r.failures.empty() ? "" : r.failures[0].detail);
    }
}

TEST(BraidWord, text_form) {
    BraidWord w(5, {{3, 1}, {2, 1}, {1, -2}});
    EXPECT_EQ(w.str(), "b3 b2 b1^-2");
    EXPECT_EQ(BraidWord::parse(5, w.str()), w);
    EXPECT_EQ(BraidWord(5).str(), "I");
    EXPECT_EQ(BraidWord::parse(5, "I"), BraidWord(5));
    EXPECT_EQ(w.exchange_count(), 4u);
    EXPECT_EQ(w.inverse().str(), "b1^2 b2^-1 b3^-1");
    EXPECT_THROW(BraidWord::parse(5, "b9"), std::out_of_range);
    EXPECT_THROW(BraidWord::parse(5, "x1"), std::invalid_argument);
}

TEST(BraidWord, product_applies_right_factor_first) {
    BraidWord a = BraidWord::parse(4, "b2");
    BraidWord b = BraidWord::parse(4, "b1");
    EXPECT_EQ(to_dense(a * b), oracle::dense_generator(4, 2) * oracle::dense_generator(4, 1));
    EXPECT_EQ(b.shifted(2, 6).str(), "b3");
}
