/**************************************************************************
 * test_cli.cpp
 *
 * Copyright 2026 The grscount Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include <nlohmann/json.hpp>

#include "grscount/cli.hpp"
#include "grscount/error.hpp"

using namespace grscount;

namespace {

std::string strip_elapsed(const std::string& s) {
    return std::regex_replace(s, std::regex(R"("elapsed_ms": [0-9.eE+-]+)"), "\"elapsed_ms\": 0");
}

RunConfig verify_config(std::string name) {
    RunConfig c;
    c.command = "verify";
    c.name = std::move(name);
    c.workers = 1;
    return c;
}

Errc code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("table rendering as CSV") {
    const auto rows = table1_rows({}, false);
    REQUIRE(rows.size() == 15);
    const std::string csv = render_table1(rows, OutputFormat::Csv);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "q,n,grs,mds,verified");
    int count = 0;
    while (std::getline(in, line)) ++count;
    CHECK(count == 15);
    CHECK(csv.find("\n8,10,290545970400,290545970400,false\n") != std::string::npos);
    CHECK(csv.find("\n7,6,466560,1088640,false\n") != std::string::npos);
}

TEST_CASE("table rendering as JSON") {
    const auto j = nlohmann::json::parse(render_table1(table1_rows({}, false), OutputFormat::Json));
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 15);
    for (const auto& row : j) {
        CHECK(row["grs"].is_string());
        CHECK(row["mds"].is_string());
        CHECK(row["q"].is_number_unsigned());
        CHECK(row["verified"].is_boolean());
    }
    CHECK(j[14]["grs"] == "676457349120");
    CHECK(j[0]["status"] == "formula");
}

TEST_CASE("table cells with a tiny budget are partial") {
    RunConfig c;
    c.command = "table1";
    c.workers = 1;
    c.budget = 5;
    c.format = OutputFormat::Csv;
    std::ostringstream out;
    CHECK(cmd_table1(c, out) == kExitPartial);
    CHECK(out.str().rfind("q,n,grs,mds,verified\n", 0) == 0);
    CHECK(out.str().find(",true\n") == std::string::npos);
}

TEST_CASE("verification report schema") {
    RunConfig c = verify_config("grs-count");
    c.q = 5;
    c.n = 6;
    std::ostringstream out;
    CHECK(cmd_verify(c, out) == kExitOk);
    const auto j = nlohmann::json::parse(out.str());
    CHECK(j["label"] == "grs-count");
    CHECK(j["params"]["q"] == 5);
    CHECK(j["params"]["k"] == 3);
    CHECK(j["params"]["n"] == 6);
    CHECK(j["params"]["r"].is_null());
    CHECK(j["expected"] == "6144");
    CHECK(j["observed"] == "6144");
    CHECK(j["method"].is_string());
    CHECK(j["workers"] == 1);
    CHECK(j["elapsed_ms"].is_number());
    CHECK(j["match"] == true);
    const std::vector<std::string> keys{"label", "params", "expected", "observed", "method", "workers", "elapsed_ms", "match"};
    std::vector<std::string> seen;
    for (auto it = j.begin(); it != j.end(); ++it) seen.push_back(it.key());
    std::sort(seen.begin(), seen.end());
    auto sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    CHECK(seen == sorted);
}

TEST_CASE("CSV report") {
    RunConfig c = verify_config("ratio");
    c.r = 3;
    c.format = OutputFormat::Csv;
    std::ostringstream out;
    CHECK(cmd_verify(c, out) == kExitOk);
    CHECK(out.str().rfind("label,q,k,n,r,expected,observed,method,workers,elapsed_ms,match\nratio,8,3,7,3,10/3,10/3,", 0) == 0);
}

TEST_CASE("bad names and missing parameters") {
    CHECK(code_of([] { run_verification(verify_config("nonsense")); }) == Errc::UnknownCommand);
    CHECK(code_of([] { run_verification(verify_config("grs-count")); }) == Errc::PreconditionViolated);
    CHECK(code_of([] { run_verification(verify_config("fiber")); }) == Errc::PreconditionViolated);
    RunConfig c = verify_config("dim2");
    c.q = 6;
    c.n = 4;
    CHECK(code_of([&] { run_verification(c); }) == Errc::PreconditionViolated);
}

TEST_CASE("reports are reproducible") {
    RunConfig c = verify_config("fiber");
    c.r = 1;
    c.seed = 11;
    std::ostringstream a, b;
    cmd_verify(c, a);
    c.workers = 3;
    cmd_verify(c, b);
    const std::string sa = strip_elapsed(a.str());
    std::string sb = strip_elapsed(b.str());
    sb = std::regex_replace(sb, std::regex(R"("workers": 3)"), "\"workers\": 1");
    CHECK(sa == sb);
}

TEST_CASE("reports can be written to a file") {
    const auto path = std::filesystem::temp_directory_path() / "grscount_cli_test.json";
    std::filesystem::remove(path);
    RunConfig c = verify_config("asymptotics");
    c.n = 7;
    c.out_path = path.string();
    std::ostringstream out;
    CHECK(cmd_verify(c, out) == kExitOk);
    CHECK(out.str().empty());
    std::ifstream in(path);
    const auto j = nlohmann::json::parse(in);
    CHECK(j["label"] == "asymptotics");
    std::filesystem::remove(path);
}

TEST_CASE("a small budget makes a verification fail with BudgetExceeded") {
    RunConfig c = verify_config("mds-count");
    c.q = 7;
    c.n = 7;
    c.budget = 10;
    std::ostringstream out;
    CHECK(code_of([&] { cmd_verify(c, out); }) == Errc::BudgetExceeded);
}
