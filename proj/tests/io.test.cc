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

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "gtest/gtest.h"

using namespace ising;

namespace {

std::string temp_path(const std::string &name) {
    return (std::filesystem::temp_directory_path() / ("ising_io_test_" + name)).string();
}

Json without_timing(Json doc) {
    doc.erase("timing");
    return doc;
}

}  // namespace

TEST(StateJson, exact_round_trip) {
    ExactState s = random_state<CycScalar>(7, Charge::Sigma, 13);
    Json doc = state_to_json(s);
    EXPECT_EQ(doc["anyons"], 7);
    EXPECT_EQ(doc["sector"], "sigma");
    EXPECT_EQ(exact_state_from_json(doc), s);
    FloatState f = float_state_from_json(doc);
    for (size_t i = 0; i < s.dimension(); i++) {
        EXPECT_LE(std::abs(f[i] - s[i].to_complex()), 1e-15);
    }
}

TEST(StateJson, float_round_trip_through_a_file) {
    FloatState s = random_state<Complex>(6, Charge::Psi, 4);
    std::string path = temp_path("state.json");
    write_json_file(path, state_to_json(s));
    FloatState back = float_state_from_json(read_json_file(path));
    std::remove(path.c_str());
    EXPECT_EQ(back, s);
}

TEST(StateJson, exact_reader_needs_cyclotomic_field) {
    Json doc = state_to_json(random_state<Complex>(4, Charge::Vac, 1));
    EXPECT_THROW(exact_state_from_json(doc), std::invalid_argument);
}

TEST(StateJson, bad_documents_are_rejected) {
    EXPECT_THROW(float_state_from_json(Json::parse(R"({"anyons": 4})")), std::invalid_argument);
    EXPECT_THROW(float_state_from_json(Json::parse(R"({"anyons": 4, "sector": "0", "amplitudes": [[1, 0]]})")),
                 std::invalid_argument);
    EXPECT_THROW(
        float_state_from_json(Json::parse(R"({"anyons": 4, "sector": "tau", "amplitudes": [[1,0],[0,0],[0,0],[0,0]]})")),
        std::invalid_argument);
    EXPECT_THROW(
        float_state_from_json(Json::parse(R"({"anyons": 4, "sector": "0", "amplitudes": [1, 0, 0, 0]})")),
        std::invalid_argument);
    EXPECT_THROW(read_json_file(temp_path("does_not_exist.json")), std::invalid_argument);
    std::string path = temp_path("garbage.json");
    std::ofstream(path) << "{ not json";
    EXPECT_THROW(read_json_file(path), std::invalid_argument);
    std::remove(path.c_str());
}

TEST(BraidWordJson, round_trip) {
    BraidWord w = BraidWord::parse(7, "b6 b2^-1 b3^2");
    Json doc = braid_word_to_json(w);
    EXPECT_EQ(doc.dump(), "[[6,1],[2,-1],[3,2]]");
    EXPECT_EQ(braid_word_from_json(7, doc), w);
    EXPECT_THROW(braid_word_from_json(3, doc), std::out_of_range);
}

TEST(ReportJson, identical_runs_match_outside_timing) {
    FloatState phi = random_state<Complex>(4, Charge::Vac, 5);
    Json a = report_to_json(run_teleport(phi, 2, {}));
    Json b = report_to_json(run_teleport(phi, 2, {}));
    ASSERT_TRUE(a.contains("timing"));
    EXPECT_EQ(without_timing(a).dump(), without_timing(b).dump());
    EXPECT_EQ(a["branches"].size(), 16u);
    EXPECT_EQ(a["M"], 4);
    EXPECT_EQ(a["N"], 2);
    EXPECT_EQ(a["backend"], "float");
    EXPECT_TRUE(a["all_pass"].get<bool>());
}

TEST(ReportJson, exact_report_carries_rational_probabilities) {
    ExactState phi = basis_state<CycScalar>(3, {1});
    Json r = report_to_json(run_teleport(phi, 1, {}));
    EXPECT_EQ(r["branches"][0]["probability_exact"], "1/8");
    EXPECT_EQ(r["branches"][0]["outcomes"], "000");
    EXPECT_EQ(r["branches"][0]["correction"], "I");
    EXPECT_TRUE(r["probability_sum_exact"].get<bool>());
}

TEST(VerifyJson, carries_failures) {
    VerifyReport r;
    r.name = "demo";
    r.checked = 2;
    r.failures.push_back({"x = y", "entry (0,0)"});
    Json doc = verify_report_to_json(r);
    EXPECT_EQ(doc["name"], "demo");
    EXPECT_FALSE(doc["pass"].get<bool>());
    EXPECT_EQ(doc["failures"][0]["identity"], "x = y");
}
