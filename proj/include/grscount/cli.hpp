/**************************************************************************
 * cli.hpp
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

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "grscount/census.hpp"

namespace grscount {

enum class OutputFormat { Json, Csv };

struct RunConfig {
    std::string command;  ///< "table1" or "verify"
    std::string name;     ///< verification name for "verify"
    std::optional<unsigned> q, k, n, r;
    unsigned workers = 0;  ///< 0 = available parallelism
    OutputFormat format = OutputFormat::Json;
    std::string out_path;     ///< empty = standard output
    std::uint64_t budget = 0; ///< 0 = built-in guards only
    std::uint64_t seed = 1;
};

/// Exit statuses shared by the commands.
enum ExitCode : int {
    kExitOk = 0,
    kExitMismatch = 1,
    kExitPartial = 2,  ///< a budget ran out; the report is incomplete
    kExitError = 3,
};

/// One row of the dimension-3 count table.
struct Table1Row {
    unsigned q, n;
    BigInt grs, mds;
    bool verified = false;
    std::string status;  ///< "verified", "mismatch" or "budget-exceeded"
};

/// The 15 (q, n) cells of the table.
std::vector<std::pair<unsigned, unsigned>> table1_cells();

/// Formula values of one cell.
BigInt table1_grs(unsigned q, unsigned n);
BigInt table1_mds(unsigned q, unsigned n);

/// Formula rows; when `verify` is set each cell is also recounted by the
/// GRS-within-MDS census under the configured budget.
std::vector<Table1Row> table1_rows(const RunConfig& config, bool verify);

std::string render_table1(const std::vector<Table1Row>& rows, OutputFormat format);
std::string render_report(const CountReport& report, OutputFormat format);

/// Run a verification by name. Throws UnknownCommand or
/// PreconditionViolated for bad names or missing parameters.
CountReport run_verification(const RunConfig& config);

/// Full commands: write the report to config.out_path (or `out`) and
/// return the exit status.
int cmd_table1(const RunConfig& config, std::ostream& out);
int cmd_verify(const RunConfig& config, std::ostream& out);

}  // namespace grscount
