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

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace ising {

namespace {

void check_index(size_t anyon_count, int index, const char *where) {
    if (anyon_count < 2 || index < 1 || static_cast<size_t>(index) > anyon_count - 1) {
        throw std::out_of_range(
            std::string(where) + ": generator index " + std::to_string(index) + " out of range for " +
            std::to_string(anyon_count) + " anyons");
    }
}

// (1+i)/2 = e^{i pi/4}/sqrt(2).
CycScalar omega_over_sqrt2() {
    return CycScalar(1, 0, 1, 0, 1);
}

}  // namespace

BraidWord::BraidWord(size_t anyon_count, std::vector<BraidLetter> letters)
    : anyon_count_(anyon_count), letters_(std::move(letters)) {
    for (const auto &l : letters_) {
        check_index(anyon_count_, l.index, "BraidWord");
    }
}

size_t BraidWord::exchange_count() const {
    size_t total = 0;
    for (const auto &l : letters_) {
        total += static_cast<size_t>(l.power < 0 ? -l.power : l.power);
    }
    return total;
}

BraidWord BraidWord::inverse() const {
    std::vector<BraidLetter> out(letters_.rbegin(), letters_.rend());
    for (auto &l : out) {
        l.power = -l.power;
    }
    return BraidWord(anyon_count_, std::move(out));
}

BraidWord BraidWord::shifted(int offset, size_t new_anyon_count) const {
    std::vector<BraidLetter> out = letters_;
    for (auto &l : out) {
        l.index += offset;
    }
    return BraidWord(new_anyon_count, std::move(out));
}

BraidWord operator*(const BraidWord &a, const BraidWord &b) {
    if (a.anyon_count_ != b.anyon_count_) {
        throw std::invalid_argument("BraidWord: cannot multiply words on different anyon counts");
    }
    std::vector<BraidLetter> out = a.letters_;
    out.insert(out.end(), b.letters_.begin(), b.letters_.end());
    return BraidWord(a.anyon_count_, std::move(out));
}

std::string BraidWord::str() const {
    if (letters_.empty()) {
        return "I";
    }
    std::string out;
    for (const auto &l : letters_) {
        if (!out.empty()) {
            out += ' ';
        }
        out += 'b';
        out += std::to_string(l.index);
        if (l.power != 1) {
            out += '^';
            out += std::to_string(l.power);
        }
    }
    return out;
}

BraidWord BraidWord::parse(size_t anyon_count, std::string_view text) {
    std::vector<BraidLetter> letters;
    std::stringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        if (token == "I") {
            continue;
        }
        if (token.size() < 2 || token[0] != 'b') {
            throw std::invalid_argument("BraidWord: bad token '" + token + "'");
        }
        BraidLetter letter{0, 1};
        const char *begin = token.data() + 1;
        const char *end = token.data() + token.size();
        auto [p, ec] = std::from_chars(begin, end, letter.index);
        if (ec != std::errc() || p == begin) {
            throw std::invalid_argument("BraidWord: bad generator index in '" + token + "'");
        }
        if (p != end) {
            if (*p != '^') {
                throw std::invalid_argument("BraidWord: expected '^' in '" + token + "'");
            }
            ++p;
            auto [q, ec2] = std::from_chars(p, end, letter.power);
            if (ec2 != std::errc() || q != end) {
                throw std::invalid_argument("BraidWord: bad power in '" + token + "'");
            }
        }
        letters.push_back(letter);
    }
    return BraidWord(anyon_count, std::move(letters));
}

GateOp GateOp::adjoint() const {
    GateOp out = *this;
    if (kind == Kind::Scalar) {
        out.phase = phase.conj();
    } else if (kind != Kind::ParityProjector) {
        out.block = block.adjoint();
    }
    return out;
}

GateOp generator(size_t anyon_count, int index) {
    check_index(anyon_count, index, "generator");
    size_t n = qubit_count_for(anyon_count);
    const CycScalar z = CycScalar::zero();
    const CycScalar one = CycScalar::one();
    const CycScalar mi = -CycScalar::i();
    if (index % 2 == 1) {
        return GateOp{GateOp::Kind::Diag1q, n, static_cast<size_t>((index + 1) / 2),
                      ExactMatrix{{one, z}, {z, CycScalar::i()}}};
    }
    size_t q = static_cast<size_t>(index / 2);
    CycScalar w = omega_over_sqrt2();
    CycScalar wmi = w * mi;
    if (anyon_count % 2 == 1 && static_cast<size_t>(index) == anyon_count - 1) {
        return GateOp{GateOp::Kind::Block1q, n, q, ExactMatrix{{w, wmi}, {wmi, w}}};
    }
    return GateOp{GateOp::Kind::Block2q, n, q,
                  ExactMatrix{{w, z, z, wmi}, {z, w, wmi, z}, {z, wmi, w, z}, {wmi, z, z, w}}};
}

GateOp monodromy(size_t anyon_count, int index) {
    check_index(anyon_count, index, "monodromy");
    size_t n = qubit_count_for(anyon_count);
    const CycScalar z = CycScalar::zero();
    const CycScalar one = CycScalar::one();
    if (index % 2 == 1) {
        return GateOp{GateOp::Kind::Diag1q, n, static_cast<size_t>((index + 1) / 2),
                      ExactMatrix{{one, z}, {z, -one}}};
    }
    size_t q = static_cast<size_t>(index / 2);
    if (anyon_count % 2 == 1 && static_cast<size_t>(index) == anyon_count - 1) {
        return GateOp{GateOp::Kind::Block1q, n, q, ExactMatrix{{z, one}, {one, z}}};
    }
    return GateOp{GateOp::Kind::Block2q, n, q,
                  ExactMatrix{{z, z, z, one}, {z, z, one, z}, {z, one, z, z}, {one, z, z, z}}};
}

std::vector<GateOp> u_cnot(size_t num_qubits) {
    if (num_qubits == 0) {
        throw std::invalid_argument("u_cnot: need at least one qubit");
    }
    const CycScalar z = CycScalar::zero();
    const CycScalar one = CycScalar::one();
    // Control is the more significant qubit of the block.
    ExactMatrix cnot{{one, z, z, z}, {z, one, z, z}, {z, z, z, one}, {z, z, one, z}};
    std::vector<GateOp> ops;
    for (size_t q = 1; q < num_qubits; q++) {
        ops.push_back(GateOp{GateOp::Kind::Block2q, num_qubits, q, cnot});
    }
    return ops;
}

GateOp parity_projector(size_t n, int sign) {
    if (n == 0) {
        throw std::invalid_argument("parity_projector: need n >= 1");
    }
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("parity_projector: sign must be +1 or -1");
    }
    GateOp op{GateOp::Kind::ParityProjector, n + 1, 0, ExactMatrix()};
    op.kept_parity = sign > 0 ? 0 : 1;
    return op;
}

ExactMatrix pauli_string(std::string_view paulis) {
    const CycScalar z = CycScalar::zero();
    const CycScalar one = CycScalar::one();
    const CycScalar i = CycScalar::i();
    ExactMatrix out = ExactMatrix::identity(1);
    for (char p : paulis) {
        ExactMatrix m;
        switch (p) {
            case 'I':
                m = ExactMatrix::identity(2);
                break;
            case 'X':
                m = ExactMatrix{{z, one}, {one, z}};
                break;
            case 'Y':
                m = ExactMatrix{{z, -i}, {i, z}};
                break;
            case 'Z':
                m = ExactMatrix{{one, z}, {z, -one}};
                break;
            default:
                throw std::invalid_argument(std::string("pauli_string: unknown Pauli '") + p + "'");
        }
        out = kron(out, m);
    }
    return out;
}

namespace {

template <typename Fn>
ExactMatrix dense_from_columns(size_t num_qubits, Fn &&transform) {
    size_t dim = size_t{1} << num_qubits;
    ExactMatrix m(dim, dim);
    for (size_t col = 0; col < dim; col++) {
        std::vector<CycScalar> amps(dim, CycScalar::zero());
        amps[col] = CycScalar::one();
        transform(std::span<CycScalar>(amps));
        for (size_t row = 0; row < dim; row++) {
            m(row, col) = std::move(amps[row]);
        }
    }
    return m;
}

}  // namespace

ExactMatrix to_dense(const GateOp &gate) {
    return dense_from_columns(gate.num_qubits, [&](std::span<CycScalar> amps) {
        apply_gate<CycScalar>(gate, amps);
    });
}

ExactMatrix to_dense(const std::vector<GateOp> &ops, size_t num_qubits) {
    return dense_from_columns(num_qubits, [&](std::span<CycScalar> amps) {
        apply_sequence<CycScalar>(ops, amps);
    });
}

ExactMatrix to_dense(const BraidWord &word, const GeneratorFn &source) {
    size_t n = qubit_count_for(word.anyon_count());
    return dense_from_columns(n, [&](std::span<CycScalar> amps) {
        const auto &letters = word.letters();
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
            apply_letter<CycScalar>(*it, word.anyon_count(), amps, source);
        }
    });
}

}  // namespace ising
