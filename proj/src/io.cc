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

#include "ising/io.h"

#include <fstream>
#include <limits>
#include <stdexcept>

namespace ising {

namespace {

Json bigint_to_json(const BigInt &value) {
    if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(value);
    }
    return value.str();
}

BigInt bigint_from_json(const Json &value) {
    if (value.is_number_integer()) {
        return BigInt(value.get<std::int64_t>());
    }
    if (value.is_string()) {
        return BigInt(value.get<std::string>());
    }
    throw std::invalid_argument("state file: cyclotomic coefficients must be integers");
}

Json header(size_t anyons, Charge sector) {
    Json doc;
    doc["anyons"] = anyons;
    doc["sector"] = std::string(charge_name(sector));
    return doc;
}

size_t read_anyons(const Json &doc) {
    if (!doc.contains("anyons") || !doc["anyons"].is_number_unsigned()) {
        throw std::invalid_argument("state file: missing or invalid \"anyons\"");
    }
    return doc["anyons"].get<size_t>();
}

Charge read_sector(const Json &doc) {
    if (!doc.contains("sector") || !doc["sector"].is_string()) {
        throw std::invalid_argument("state file: missing or invalid \"sector\"");
    }
    return parse_charge(doc["sector"].get<std::string>());
}

Json complex_pair(const Complex &z) {
    return Json::array({z.real(), z.imag()});
}

}  // namespace

Json state_to_json(const ExactState &state) {
    Json doc = header(state.anyon_count(), state.sector());
    Json amps = Json::array();
    Json cyc = Json::array();
    for (const auto &a : state.amplitudes()) {
        amps.push_back(complex_pair(a.to_complex()));
        const auto &c = a.coefficients();
        cyc.push_back(Json::array(
            {bigint_to_json(c[0]), bigint_to_json(c[1]), bigint_to_json(c[2]), bigint_to_json(c[3]),
             a.denominator_exponent()}));
    }
    doc["amplitudes"] = std::move(amps);
    doc["cyclotomic"] = std::move(cyc);
    return doc;
}

Json state_to_json(const FloatState &state) {
    Json doc = header(state.anyon_count(), state.sector());
    Json amps = Json::array();
    for (const auto &a : state.amplitudes()) {
        amps.push_back(complex_pair(a));
    }
    doc["amplitudes"] = std::move(amps);
    return doc;
}

ExactState exact_state_from_json(const Json &doc) {
    size_t anyons = read_anyons(doc);
    Charge sector = read_sector(doc);
    if (!doc.contains("cyclotomic") || !doc["cyclotomic"].is_array()) {
        throw std::invalid_argument("state file: the exact backend needs a \"cyclotomic\" array");
    }
    std::vector<CycScalar> amps;
    for (const auto &entry : doc["cyclotomic"]) {
        if (!entry.is_array() || entry.size() != 5 || !entry[4].is_number_unsigned()) {
            throw std::invalid_argument("state file: cyclotomic entries are [c0, c1, c2, c3, k]");
        }
        amps.emplace_back(
            bigint_from_json(entry[0]), bigint_from_json(entry[1]), bigint_from_json(entry[2]),
            bigint_from_json(entry[3]), entry[4].get<std::uint32_t>());
    }
    return ExactState(anyons, sector, std::move(amps));
}

FloatState float_state_from_json(const Json &doc) {
    if (!doc.contains("amplitudes") && doc.contains("cyclotomic")) {
        return exact_state_from_json(doc).to_float();
    }
    size_t anyons = read_anyons(doc);
    Charge sector = read_sector(doc);
    if (!doc.contains("amplitudes") || !doc["amplitudes"].is_array()) {
        throw std::invalid_argument("state file: missing \"amplitudes\" array");
    }
    std::vector<Complex> amps;
    for (const auto &entry : doc["amplitudes"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
            throw std::invalid_argument("state file: amplitudes are [re, im] pairs");
        }
        amps.emplace_back(entry[0].get<double>(), entry[1].get<double>());
    }
    return FloatState(anyons, sector, std::move(amps));
}

Json braid_word_to_json(const BraidWord &word) {
    Json out = Json::array();
    for (const auto &l : word.letters()) {
        out.push_back(Json::array({l.index, l.power}));
    }
    return out;
}

BraidWord braid_word_from_json(size_t anyon_count, const Json &doc) {
    if (!doc.is_array()) {
        throw std::invalid_argument("braid word JSON must be an array of [index, power]");
    }
    std::vector<BraidLetter> letters;
    for (const auto &entry : doc) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() || !entry[1].is_number_integer()) {
            throw std::invalid_argument("braid word JSON entries are [index, power]");
        }
        letters.push_back({entry[0].get<int>(), entry[1].get<int>()});
    }
    return BraidWord(anyon_count, std::move(letters));
}

Json report_to_json(const TeleportReport &report) {
    Json doc;
    doc["M"] = report.phi_anyons;
    doc["N"] = report.num_pairs;
    doc["anyons"] = report.total_anyons;
    doc["backend"] = std::string(backend_name(report.backend));
    doc["mode"] = report.mode == TeleportMode::Exhaustive ? "exhaustive" : "sample";
    if (report.mode == TeleportMode::Sample) {
        doc["samples"] = report.samples;
    }
    doc["seed"] = report.seed;
    doc["tolerance"] = report.tolerance;
    doc["bell_word"] = report.bell_word;
    doc["alice_word"] = report.alice_word;
    Json branches = Json::array();
    for (const auto &b : report.branches) {
        Json entry;
        entry["outcomes"] = b.outcome_string();
        entry["probability"] = b.probability;
        if (b.probability_exact) {
            entry["probability_exact"] = *b.probability_exact;
        }
        entry["correction"] = b.correction;
        entry["correction_global"] = b.correction_global;
        entry["fidelity"] = b.fidelity ? Json(*b.fidelity) : Json(nullptr);
        if (report.backend == Backend::Exact) {
            entry["exact_unit"] = b.exact_unit;
        }
        if (report.mode == TeleportMode::Sample) {
            entry["samples"] = b.samples;
        }
        entry["pass"] = b.pass;
        branches.push_back(std::move(entry));
    }
    doc["branches"] = std::move(branches);
    doc["probability_sum"] = report.probability_sum;
    if (report.probability_sum_exact) {
        doc["probability_sum_exact"] = *report.probability_sum_exact;
    }
    doc["all_pass"] = report.all_pass;
    doc["timing"] = {{"elapsed_ms", report.elapsed_ms}};
    return doc;
}

Json verify_report_to_json(const VerifyReport &report) {
    Json doc;
    doc["name"] = report.name;
    doc["checked"] = report.checked;
    doc["pass"] = report.ok();
    Json failures = Json::array();
    for (const auto &f : report.failures) {
        failures.push_back({{"identity", f.identity}, {"detail", f.detail}});
    }
    doc["failures"] = std::move(failures);
    if (!report.notes.empty()) {
        doc["notes"] = report.notes;
    }
    return doc;
}

Json lemma_report_to_json(const LemmaReport &report) {
    Json doc;
    Json cases = Json::array();
    for (const auto &c : report.cases) {
        Json entry;
        entry["a1"] = c.a1;
        entry["a2"] = c.a2;
        entry["fidelity"] = c.result.value;
        entry["exact_unit"] = c.result.exact_unit;
        if (c.result.phase) {
            entry["phase"] = c.result.phase->str();
            Complex z = c.result.phase->to_complex();
            entry["phase_float"] = Json::array({z.real(), z.imag()});
        }
        cases.push_back(std::move(entry));
    }
    doc["cases"] = std::move(cases);
    doc["phase_state_independent"] = report.phase_state_independent;
    doc["pass"] = report.ok();
    return doc;
}

Json table1_to_json(const std::vector<Table1Row> &rows) {
    Json out = Json::array();
    for (const auto &r : rows) {
        out.push_back(
            {{"outcomes", r.outcomes}, {"expected", r.expected}, {"generated", r.generated}, {"match", r.match()}});
    }
    return out;
}

Json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open '" + path + "'");
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error &e) {
        throw std::invalid_argument("'" + path + "' is not valid JSON: " + e.what());
    }
}

void write_json_file(const std::string &path, const Json &doc) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    out << doc.dump(2) << '\n';
}

}  // namespace ising
