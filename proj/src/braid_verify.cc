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

#include "ising/braid_verify.h"

#include <sstream>
#include <stdexcept>

#include "ising/ising_model.h"

namespace ising {

namespace {

std::string b(int index, int power = 1) {
    std::string out = "b" + std::to_string(index);
    if (power != 1) {
        out += "^" + std::to_string(power);
    }
    return out;
}

ExactMatrix word_matrix(size_t anyon_count, const std::vector<BraidLetter> &letters, const GeneratorFn &source) {
    return to_dense(BraidWord(anyon_count, letters), source);
}

/// Single-qubit operator on qubit q of an n-qubit register.
ExactMatrix on_qubit(const ExactMatrix &op, size_t q, size_t n) {
    ExactMatrix left = ExactMatrix::identity(size_t{1} << (q - 1));
    ExactMatrix right = ExactMatrix::identity(size_t{1} << (n - q));
    return kron(kron(left, op), right);
}

std::string pauli_on(size_t n, std::initializer_list<std::pair<size_t, char>> factors) {
    std::string s(n, 'I');
    for (const auto &[q, p] : factors) {
        s[q - 1] = p;
    }
    return s;
}

}  // namespace

void VerifyReport::merge(const VerifyReport &other) {
    checked += other.checked;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

bool expect_equal_operator(
    VerifyReport &report, const std::string &identity, const ExactMatrix &lhs, const ExactMatrix &rhs) {
    report.checked++;
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
        report.failures.push_back({identity, "shape mismatch"});
        return false;
    }
    for (size_t r = 0; r < lhs.rows(); r++) {
        for (size_t c = 0; c < lhs.cols(); c++) {
            if (lhs(r, c) != rhs(r, c)) {
                std::stringstream detail;
                detail << "entry (" << r << "," << c << "): lhs = " << lhs(r, c) << " ~ " << lhs(r, c).to_complex()
                       << ", rhs = " << rhs(r, c) << " ~ " << rhs(r, c).to_complex();
                report.failures.push_back({identity, detail.str()});
                return false;
            }
        }
    }
    return true;
}

VerifyReport verify_braid_relations(size_t anyon_count, const GeneratorFn &source) {
    if (anyon_count < 3) {
        throw std::invalid_argument("verify_braid_relations: need K >= 3");
    }
    VerifyReport report;
    report.name = "braid relations K=" + std::to_string(anyon_count);
    int last = static_cast<int>(anyon_count) - 1;
    size_t dim = size_t{1} << qubit_count_for(anyon_count);
    ExactMatrix id = ExactMatrix::identity(dim);

    for (int i = 1; i <= last; i++) {
        ExactMatrix g = to_dense(source(anyon_count, i));
        expect_equal_operator(report, "unitarity " + b(i) + " " + b(i) + "^dagger = I", g * g.adjoint(), id);
    }
    for (int i = 1; i + 1 <= last; i++) {
        std::vector<BraidLetter> lhs = {{i, 1}, {i + 1, 1}, {i, 1}};
        std::vector<BraidLetter> rhs = {{i + 1, 1}, {i, 1}, {i + 1, 1}};
        expect_equal_operator(
            report, "Yang-Baxter " + b(i) + " " + b(i + 1) + " " + b(i) + " = " + b(i + 1) + " " + b(i) + " " + b(i + 1),
            word_matrix(anyon_count, lhs, source), word_matrix(anyon_count, rhs, source));
    }
    for (int i = 1; i <= last; i++) {
        for (int j = i + 2; j <= last; j++) {
            expect_equal_operator(
                report, "far commutation " + b(i) + " " + b(j) + " = " + b(j) + " " + b(i),
                word_matrix(anyon_count, {{i, 1}, {j, 1}}, source), word_matrix(anyon_count, {{j, 1}, {i, 1}}, source));
        }
    }
    return report;
}

PauliFamily parse_family(std::string_view text) {
    if (text == "odd") {
        return PauliFamily::Odd;
    }
    if (text == "even") {
        return PauliFamily::Even;
    }
    throw std::invalid_argument("unknown family '" + std::string(text) + "' (expected odd|even)");
}

VerifyReport verify_pauli_identities(size_t n, PauliFamily family) {
    if (n == 0) {
        throw std::invalid_argument("verify_pauli_identities: need n >= 1");
    }
    bool even = family == PauliFamily::Even;
    size_t anyons = even ? 2 * n + 2 : 2 * n + 1;
    size_t qubits = qubit_count_for(anyons);
    int nn = static_cast<int>(n);

    VerifyReport report;
    report.name = std::string("Pauli identities n=") + std::to_string(n) + (even ? " even" : " odd") +
                  " family (K=" + std::to_string(anyons) + ")";

    for (size_t j = 1; j <= n; j++) {
        int idx = 2 * static_cast<int>(j) - 1;
        expect_equal_operator(
            report, "tau_3^(" + std::to_string(j) + ") = " + b(idx, 2), word_matrix(anyons, {{idx, 2}}, generator),
            pauli_string(pauli_on(qubits, {{j, 'Z'}})));
    }

    for (size_t j = 1; j <= n; j++) {
        std::vector<BraidLetter> chain;
        std::string chain_text;
        for (int m = static_cast<int>(j); m <= nn; m++) {
            chain.push_back({2 * m, 2});
            chain_text += (chain_text.empty() ? "" : " ") + b(2 * m, 2);
        }
        std::string target =
            even ? pauli_on(qubits, {{j, 'X'}, {n + 1, 'X'}}) : pauli_on(qubits, {{j, 'X'}});
        std::string lhs_name = even ? "tau_1^(" + std::to_string(j) + ") x tau_1^(" + std::to_string(n + 1) + ")"
                                    : "tau_1^(" + std::to_string(j) + ")";
        expect_equal_operator(
            report, lhs_name + " = " + chain_text, word_matrix(anyons, chain, generator), pauli_string(target));
    }

    {
        std::vector<BraidLetter> scalar = {{2 * nn - 1, 1}, {2 * nn, 2}, {2 * nn - 1, 1}, {2 * nn, 2}};
        size_t dim = size_t{1} << qubits;
        expect_equal_operator(
            report,
            b(2 * nn - 1) + " " + b(2 * nn, 2) + " " + b(2 * nn - 1) + " " + b(2 * nn, 2) + " = i",
            word_matrix(anyons, scalar, generator), ExactMatrix::identity(dim).scaled(CycScalar::i()));
    }

    for (int j = 1; j <= static_cast<int>(anyons) - 1; j++) {
        expect_equal_operator(
            report, "monodromy closed form " + b(j, 2), to_dense(monodromy(anyons, j)),
            word_matrix(anyons, {{j, 2}}, generator));
    }
    return report;
}

VerifyReport verify_parity_projectors(size_t n) {
    size_t anyons = 2 * n + 2;
    size_t dim = size_t{1} << (n + 1);
    VerifyReport report;
    report.name = "parity projectors n=" + std::to_string(n) + " (K=" + std::to_string(anyons) + ")";
    ExactMatrix plus = to_dense(parity_projector(n, +1));
    ExactMatrix minus = to_dense(parity_projector(n, -1));
    ExactMatrix id = ExactMatrix::identity(dim);
    // Independent form (I +/- tau_3^{x(n+1)})/2.
    ExactMatrix z_all = pauli_string(std::string(n + 1, 'Z'));
    expect_equal_operator(report, "P+ = (I + tau_3^x(n+1))/2", plus, (id + z_all).scaled(CycScalar::inv_pow2(1)));
    expect_equal_operator(report, "P- = (I - tau_3^x(n+1))/2", minus, (id - z_all).scaled(CycScalar::inv_pow2(1)));
    expect_equal_operator(report, "P+^2 = P+", plus * plus, plus);
    expect_equal_operator(report, "P-^2 = P-", minus * minus, minus);
    expect_equal_operator(report, "P+ + P- = I", plus + minus, id);
    for (int j = 1; j <= static_cast<int>(anyons) - 1; j++) {
        ExactMatrix g = to_dense(generator(anyons, j));
        expect_equal_operator(report, "[P+, " + b(j) + "] = 0", plus * g, g * plus);
        expect_equal_operator(report, "[P-, " + b(j) + "] = 0", minus * g, g * minus);
        expect_equal_operator(report, "[tau_3^x(n+1), " + b(j) + "] = 0", z_all * g, g * z_all);
    }
    return report;
}

VerifyReport verify_generator_derivation(size_t anyon_count) {
    size_t n = qubit_count_for(anyon_count);
    VerifyReport report;
    report.name = "generator derivation from F and R, K=" + std::to_string(anyon_count);
    ExactMatrix frf = f_matrix() * r_matrix() * f_matrix();
    for (int idx = 2; idx <= static_cast<int>(anyon_count) - 1; idx += 2) {
        size_t q = static_cast<size_t>(idx / 2);
        ExactMatrix local = on_qubit(frf, q, n);
        ExactMatrix expected;
        if (q == n) {
            // Odd K: the trailing sigma is fused last; no CNOT partner.
            expected = local;
        } else {
            std::vector<GateOp> chain = u_cnot(n);
            ExactMatrix cn = to_dense(chain[q - 1]);
            expected = cn * local * cn;
        }
        expect_equal_operator(
            report, b(idx) + " = U_CN (F x I)(R x I)(F x I) U_CN", to_dense(generator(anyon_count, idx)), expected);
    }
    return report;
}

}  // namespace ising
