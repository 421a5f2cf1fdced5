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

#include "ising/anyon_ops.h"

#include <string>

namespace ising {

Layout Layout::make(size_t phi_anyons, size_t num_pairs) {
    if (phi_anyons == 0) {
        throw std::invalid_argument("layout: phi must have at least one anyon");
    }
    if (phi_anyons > 2 * num_pairs + 1) {
        throw std::invalid_argument(
            "layout: M = " + std::to_string(phi_anyons) + " exceeds 2N+1 = " + std::to_string(2 * num_pairs + 1));
    }
    return Layout{num_pairs, phi_anyons};
}

int Layout::measured_pair_generator(size_t k) const {
    if (k < 1 || k > phi_anyons) {
        throw std::out_of_range("layout: measured pair index out of range");
    }
    return static_cast<int>(alice_block_offset() + 2 * k - 1);
}

size_t Layout::bob_local_to_global_anyon(size_t local) const {
    if (local > phi_anyons) {
        throw std::out_of_range("layout: Bob-local anyon label out of range");
    }
    return phi_anyons + 1 - local;
}

int Layout::bob_local_generator_to_global(int local) const {
    if (local < 0 || local >= static_cast<int>(phi_anyons)) {
        throw std::out_of_range("layout: Bob-local generator out of range");
    }
    return static_cast<int>(phi_anyons) - local;
}

BraidWord random_braid_word(size_t anyon_count, size_t length, std::mt19937_64 &engine) {
    std::vector<BraidLetter> letters;
    if (anyon_count < 2) {
        return BraidWord(anyon_count);
    }
    letters.reserve(length);
    uint64_t generators = anyon_count - 1;
    for (size_t t = 0; t < length; t++) {
        uint64_t draw = engine();
        int index = static_cast<int>(draw % generators) + 1;
        int power = ((draw >> 32) & 1) ? 1 : -1;
        letters.push_back({index, power});
    }
    return BraidWord(anyon_count, std::move(letters));
}

namespace {

void check_sector(size_t anyon_count, Charge sector) {
    if ((anyon_count % 2 == 1) != (sector == Charge::Sigma)) {
        throw std::invalid_argument(
            "random_state: sector " + std::string(charge_name(sector)) + " is incompatible with " +
            std::to_string(anyon_count) + " anyons");
    }
}

bool in_sector(uint64_t index, Charge sector) {
    return sector == Charge::Sigma || bitstring_parity(index) == parity(sector);
}

}  // namespace

template <>
AnyonState<Complex> random_state<Complex>(size_t anyon_count, Charge sector, uint64_t seed) {
    check_sector(anyon_count, sector);
    GaussianSource gauss(seed);
    size_t dim = size_t{1} << qubit_count_for(anyon_count);
    std::vector<Complex> amps(dim, Complex(0));
    double total = 0;
    for (size_t i = 0; i < dim; i++) {
        if (in_sector(i, sector)) {
            double re = gauss.next();
            double im = gauss.next();
            amps[i] = {re, im};
            total += re * re + im * im;
        }
    }
    double scale = 1.0 / std::sqrt(total);
    for (auto &a : amps) {
        a *= scale;
    }
    return AnyonState<Complex>(anyon_count, sector, std::move(amps));
}

template <>
AnyonState<CycScalar> random_state<CycScalar>(size_t anyon_count, Charge sector, uint64_t seed) {
    check_sector(anyon_count, sector);
    std::mt19937_64 engine(seed);
    size_t n = qubit_count_for(anyon_count);
    size_t dim = size_t{1} << n;
    // Uniform label in the sector: draw n-1 free bits, fix the last by parity.
    uint64_t index = dim > 1 ? engine() % dim : 0;
    if (!in_sector(index, sector)) {
        index ^= 1;
    }
    auto state = basis_state_at<CycScalar>(anyon_count, index);
    BraidWord word = random_braid_word(anyon_count, 4 * anyon_count, engine);
    apply_in_place(word, state);
    return state;
}

namespace detail {

CycScalar inverse_sqrt_of_power_of_half(std::int64_t e) {
    BigInt power = BigInt(1) << static_cast<unsigned>(e / 2);
    CycScalar out(power, 0, 0, 0, 0);
    if (e % 2) {
        out *= CycScalar::sqrt2();
    }
    return out;
}

}  // namespace detail

}  // namespace ising
