/**************************************************************************
 * grscount_main.cpp
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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "grscount/cli.hpp"
#include "grscount/error.hpp"

int main(int argc, char** argv) {
    using namespace grscount;
    CLI::App app{"Count GRS and MDS codes of small length over finite fields"};
    app.require_subcommand(1);

    RunConfig config;
    std::string format = "json";
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--q", config.q, "field order");
        sub->add_option("--k", config.k, "code dimension");
        sub->add_option("--n", config.n, "code length");
        sub->add_option("--r", config.r, "number of punctured coordinates");
        sub->add_option("--workers", config.workers, "worker threads (0 = all cores)");
        sub->add_option("--format", format, "report format")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", config.out_path, "write the report here instead of stdout");
        sub->add_option("--budget", config.budget, "search node budget (0 = built-in guards)");
        sub->add_option("--seed", config.seed, "seed for sampled checks");
    };

    CLI::App* table1 = app.add_subcommand("table1", "formula table with enumeration cross-checks");
    add_common(table1);
    CLI::App* verify = app.add_subcommand("verify", "run one named verification");
    verify->add_option("name", config.name,
                       "grs-count, mds-count, orbit, fiber, ratio, dim2, equivariance, asymptotics or hyperovals")
        ->required();
    add_common(verify);

    CLI11_PARSE(app, argc, argv);
    config.format = format == "csv" ? OutputFormat::Csv : OutputFormat::Json;

    try {
        if (table1->parsed()) {
            config.command = "table1";
            const int code = cmd_table1(config, std::cout);
            if (code == kExitPartial) std::cerr << "partial report: a cell ran out of budget\n";
            return code;
        }
        config.command = "verify";
        return cmd_verify(config, std::cout);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
}
