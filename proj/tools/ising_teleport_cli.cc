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

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "ising/braid_verify.h"
#include "ising/io.h"
#include "ising/teleport.h"

using namespace ising;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

/// Raised for configuration problems detected after parsing.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct TeleportArgs {
    std::optional<size_t> m;
    size_t n = 1;
    bool exhaustive = false;
    std::optional<size_t> samples;
    std::optional<std::string> backend;
    uint64_t seed = 0;
    std::optional<std::string> sector;
    std::optional<std::string> state_path;
    std::optional<std::string> out_path;
    double tolerance = 1e-10;
    size_t threads = 1;
    bool json = false;
};

struct VerifyArgs {
    std::string what;
    std::optional<size_t> n;
    std::optional<size_t> k;
    std::string family = "both";
    std::optional<std::string> out_path;
    bool json = false;
};

struct StateArgs {
    size_t anyons = 0;
    std::optional<std::string> sector;
    uint64_t seed = 0;
    std::string backend = "exact";
    std::optional<std::string> out_path;
};

void emit(const Json &doc, const std::optional<std::string> &out_path, bool to_stdout) {
    if (out_path) {
        write_json_file(*out_path, doc);
    }
    if (to_stdout) {
        std::cout << doc.dump(2) << '\n';
    }
}

Charge default_sector(size_t anyons) {
    return anyons % 2 ? Charge::Sigma : Charge::Vac;
}

void print_report_summary(const TeleportReport &r) {
    size_t passed = 0;
    for (const auto &b : r.branches) {
        passed += b.pass;
    }
    std::cout << "teleport M=" << r.phi_anyons << " N=" << r.num_pairs << " K=" << r.total_anyons
              << " backend=" << backend_name(r.backend)
              << " mode=" << (r.mode == TeleportMode::Exhaustive ? "exhaustive" : "sample") << '\n';
    for (const auto &b : r.branches) {
        std::cout << "  " << b.outcome_string() << "  p=";
        if (b.probability_exact) {
            std::cout << *b.probability_exact;
        } else {
            std::cout << b.probability;
        }
        std::cout << "  F=";
        if (b.fidelity) {
            std::cout << *b.fidelity;
        } else {
            std::cout << "n/a";
        }
        if (b.samples) {
            std::cout << "  samples=" << b.samples;
        }
        std::cout << "  correction=" << b.correction << "  " << (b.pass ? "PASS" : "FAIL") << '\n';
    }
    std::cout << passed << "/" << r.branches.size() << " branches pass, probability sum " << r.probability_sum
              << '\n';
}

template <Amplitude S>
int run_teleport_command(const AnyonState<S> &phi, const TeleportArgs &args, const TeleportOptions &options) {
    TeleportReport report = run_teleport(phi, args.n, options);
    emit(report_to_json(report), args.out_path, args.json);
    if (!args.json) {
        print_report_summary(report);
    }
    return report.all_pass ? kExitPass : kExitFail;
}

int cmd_teleport(const TeleportArgs &args) {
    std::optional<Json> state_doc;
    if (args.state_path) {
        state_doc = read_json_file(*args.state_path);
    }
    size_t m = 0;
    if (state_doc) {
        if (!state_doc->contains("anyons") || !(*state_doc)["anyons"].is_number_unsigned()) {
            throw ConfigError("state file: missing or invalid \"anyons\"");
        }
        m = (*state_doc)["anyons"].get<size_t>();
        if (args.m && *args.m != m) {
            throw ConfigError(
                "--m " + std::to_string(*args.m) + " disagrees with the state file (" + std::to_string(m) +
                " anyons)");
        }
    } else if (args.m) {
        m = *args.m;
    } else {
        throw ConfigError("teleport needs --m or --state");
    }
    Layout layout = Layout::make(m, args.n);
    size_t k = layout.total_anyons();

    if (args.exhaustive && args.samples) {
        throw ConfigError("--exhaustive and --samples are mutually exclusive");
    }
    TeleportOptions options;
    options.seed = args.seed;
    options.tolerance = args.tolerance;
    options.threads = args.threads;
    if (args.samples) {
        options.mode = TeleportMode::Sample;
        options.samples = *args.samples;
    } else if (!args.exhaustive && m > 12) {
        options.mode = TeleportMode::Sample;
        options.samples = 1024;
    }

    Backend backend;
    if (args.backend) {
        backend = parse_backend(*args.backend);
    } else if (state_doc && !state_doc->contains("cyclotomic")) {
        backend = Backend::Float;
    } else {
        backend = k <= 16 ? Backend::Exact : Backend::Float;
    }

    Charge sector = args.sector ? parse_charge(*args.sector) : default_sector(m);
    if (backend == Backend::Exact) {
        ExactState phi = state_doc ? exact_state_from_json(*state_doc) : random_state<CycScalar>(m, sector, args.seed);
        return run_teleport_command(phi, args, options);
    }
    FloatState phi = state_doc ? float_state_from_json(*state_doc) : random_state<Complex>(m, sector, args.seed);
    return run_teleport_command(phi, args, options);
}

void print_verify_report(const VerifyReport &r) {
    std::cout << r.name << ": " << (r.checked - r.failures.size()) << "/" << r.checked << " identities hold"
              << '\n';
    for (const auto &f : r.failures) {
        std::cout << "  FAIL " << f.identity << "\n       " << f.detail << '\n';
    }
    for (const auto &note : r.notes) {
        std::cout << "  note: " << note << '\n';
    }
}

int finish_verify(const std::vector<VerifyReport> &reports, const VerifyArgs &args) {
    bool ok = true;
    Json doc = Json::array();
    for (const auto &r : reports) {
        ok = ok && r.ok();
        doc.push_back(verify_report_to_json(r));
        if (!args.json) {
            print_verify_report(r);
        }
    }
    emit(doc, args.out_path, args.json);
    return ok ? kExitPass : kExitFail;
}

std::vector<PauliFamily> families_of(const std::string &text) {
    if (text == "both") {
        return {PauliFamily::Odd, PauliFamily::Even};
    }
    return {parse_family(text)};
}

int cmd_verify(const VerifyArgs &args) {
    if (args.what == "table1") {
        auto rows = table1();
        size_t matched = 0;
        for (const auto &row : rows) {
            matched += row.match();
            if (!args.json) {
                std::cout << "  " << row.outcomes << "  " << row.generated;
                if (!row.match()) {
                    std::cout << "  MISMATCH, expected " << row.expected;
                }
                std::cout << '\n';
            }
        }
        if (!args.json) {
            std::cout << "table1: " << matched << "/" << rows.size() << " rows match\n";
        }
        emit(table1_to_json(rows), args.out_path, args.json);
        return matched == rows.size() ? kExitPass : kExitFail;
    }
    if (args.what == "lemma") {
        LemmaReport r = verify_lemma();
        if (!args.json) {
            size_t passed = 0;
            for (const auto &c : r.cases) {
                passed += c.result.exact_unit;
                std::cout << "  (" << c.a1 << "," << c.a2 << ")  F=" << c.result.value
                          << "  phase=" << (c.result.phase ? c.result.phase->str() : std::string("none")) << '\n';
            }
            std::cout << "lemma: " << passed << "/" << r.cases.size() << " label pairs pass; phase "
                      << (r.phase_state_independent ? "is" : "is not") << " the same for all pairs\n";
        }
        emit(lemma_report_to_json(r), args.out_path, args.json);
        return r.ok() ? kExitPass : kExitFail;
    }
    if (args.what == "gate") {
        GateMatch g = verify_two_qubit_gate();
        Json doc;
        doc["matches"] = g.matches;
        doc["phase"] = g.phase.str();
        Complex z = g.phase.to_complex();
        doc["phase_float"] = Json::array({z.real(), z.imag()});
        if (!args.json) {
            std::cout << "gate: 4-anyon tangle " << (g.matches ? "matches" : "does not match")
                      << " the two-qubit gate, phase " << g.phase << " = " << z << '\n';
        }
        emit(doc, args.out_path, args.json);
        return g.matches ? kExitPass : kExitFail;
    }
    if (args.what == "pauli") {
        size_t n = args.n.value_or(1);
        if (n < 1 || n > 5) {
            throw ConfigError("verify pauli: --n must be in 1..5");
        }
        std::vector<VerifyReport> reports;
        for (PauliFamily fam : families_of(args.family)) {
            reports.push_back(verify_pauli_identities(n, fam));
            if (fam == PauliFamily::Even) {
                reports.push_back(verify_parity_projectors(n));
            }
        }
        return finish_verify(reports, args);
    }
    if (args.what == "braid-relations") {
        size_t k = args.k.value_or(4);
        if (k < 3 || k > 12) {
            throw ConfigError("verify braid-relations: --k must be in 3..12");
        }
        return finish_verify({verify_braid_relations(k), verify_generator_derivation(k)}, args);
    }
    if (args.what == "bell") {
        size_t n = args.n.value_or(1);
        if (n < 1 || n > 5) {
            throw ConfigError("verify bell: --n must be in 1..5");
        }
        return finish_verify({verify_bell(n)}, args);
    }
    throw ConfigError("unknown verification '" + args.what + "'");
}

int cmd_state_random(const StateArgs &args) {
    Charge sector = args.sector ? parse_charge(*args.sector) : default_sector(args.anyons);
    Json doc = parse_backend(args.backend) == Backend::Exact
                   ? state_to_json(random_state<CycScalar>(args.anyons, sector, args.seed))
                   : state_to_json(random_state<Complex>(args.anyons, sector, args.seed));
    emit(doc, args.out_path, !args.out_path);
    return kExitPass;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Teleportation of Ising anyon states through braiding"};
    app.require_subcommand(1);

    TeleportArgs t;
    auto *teleport = app.add_subcommand("teleport", "Teleport an M-anyon state through a 4N+2 anyon Bell state");
    teleport->add_option("--m", t.m, "Anyons in the teleported state")->check(CLI::PositiveNumber);
    teleport->add_option("--n", t.n, "Bell state size parameter N (4N+2 anyons)")->check(CLI::PositiveNumber);
    teleport->add_flag("--exhaustive", t.exhaustive, "Enumerate all 2^M outcome branches");
    teleport->add_option("--samples", t.samples, "Sample this many measurement records")->check(CLI::PositiveNumber);
    teleport->add_option("--backend", t.backend, "exact or float (default: exact for K <= 16)")
        ->check(CLI::IsMember({"exact", "float"}));
    teleport->add_option("--seed", t.seed, "Seed for the random input state and sampling");
    teleport->add_option("--sector", t.sector, "Sector of the random input state: 0, 1 or sigma")
        ->check(CLI::IsMember({"0", "1", "sigma"}));
    teleport->add_option("--state", t.state_path, "Input state file (JSON)");
    teleport->add_option("--out", t.out_path, "Write the JSON report here");
    teleport->add_option("--tolerance", t.tolerance, "Float pass threshold on 1 - fidelity")
        ->check(CLI::PositiveNumber);
    teleport->add_option("--threads", t.threads, "Worker threads for branch enumeration")
        ->check(CLI::PositiveNumber);
    teleport->add_flag("--json", t.json, "Print the JSON report instead of the summary");

    VerifyArgs v;
    auto *verify = app.add_subcommand("verify", "Check operator identities and protocol tables");
    verify->add_option("what", v.what, "lemma, pauli, braid-relations, table1, bell or gate")
        ->required()
        ->check(CLI::IsMember({"lemma", "pauli", "braid-relations", "table1", "bell", "gate"}));
    verify->add_option("--n", v.n, "Qubit count (pauli) or Bell size N (bell)");
    verify->add_option("--k", v.k, "Anyon count (braid-relations)");
    verify->add_option("--family", v.family, "odd, even or both (pauli)")
        ->check(CLI::IsMember({"odd", "even", "both"}));
    verify->add_option("--out", v.out_path, "Write the JSON report here");
    verify->add_flag("--json", v.json, "Print JSON instead of text");

    StateArgs s;
    auto *state = app.add_subcommand("state", "State file utilities");
    auto *random = state->add_subcommand("random", "Write a seeded random state");
    state->require_subcommand(1);
    random->add_option("--anyons", s.anyons, "Anyon count")->required()->check(CLI::PositiveNumber);
    random->add_option("--sector", s.sector, "0, 1 or sigma")->check(CLI::IsMember({"0", "1", "sigma"}));
    random->add_option("--seed", s.seed, "Seed");
    random->add_option("--backend", s.backend, "exact or float")->check(CLI::IsMember({"exact", "float"}));
    random->add_option("--out", s.out_path, "Output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*teleport) {
            return cmd_teleport(t);
        }
        if (*verify) {
            return cmd_verify(v);
        }
        return cmd_state_random(s);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
