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

#ifndef ISING_IO_H
#define ISING_IO_H

#include <string>

#include "json.hpp"

#include "ising/braid.h"
#include "ising/braid_verify.h"
#include "ising/state.h"
#include "ising/teleport.h"

namespace ising {

using Json = nlohmann::ordered_json;

/// State file:
///     { "anyons": K, "sector": "0"|"1"|"sigma",
///       "amplitudes": [[re, im], ...],             // big-endian label order
///       "cyclotomic": [[c0, c1, c2, c3, k], ...] }  // exact states only
Json state_to_json(const ExactState &state);
Json state_to_json(const FloatState &state);

/// Requires the "cyclotomic" field.
ExactState exact_state_from_json(const Json &doc);
/// Uses "amplitudes"; falls back to "cyclotomic" when only that is present.
FloatState float_state_from_json(const Json &doc);

Json braid_word_to_json(const BraidWord &word);
BraidWord braid_word_from_json(size_t anyon_count, const Json &doc);

/// Teleport report. Timing lives in the "timing" sub-object only, so two
/// runs with the same configuration differ nowhere else.
Json report_to_json(const TeleportReport &report);

Json verify_report_to_json(const VerifyReport &report);
Json lemma_report_to_json(const LemmaReport &report);
Json table1_to_json(const std::vector<Table1Row> &rows);

Json read_json_file(const std::string &path);
void write_json_file(const std::string &path, const Json &doc);

}  // namespace ising

#endif
