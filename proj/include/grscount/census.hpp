/**************************************************************************
 * census.hpp
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
#include <string>
#include <vector>

#include "grscount/formulas.hpp"
#include "grscount/gf.hpp"
#include "grscount/linalg.hpp"

namespace grscount {

/// Parallelism and limits shared by every census.
struct CensusOptions {
    unsigned workers = 1;     ///< 0 means default_workers()
    std::uint64_t budget = 0; ///< search node cap; 0 = built-in guard only
    std::uint64_t seed = 1;   ///< for sampled checks
};

/// Outcome of one verification. Counts are decimal strings (ratios may be
/// written p/r).
struct CountReport {
    std::string label;
    std::optional<unsigned> q, k, n, r;
    std::string expected;
    std::string observed;
    std::string method;
    unsigned workers = 1;
    double elapsed_ms = 0;
    bool match = false;
};

/// Result of enumerate_grs.
struct GrsEnumeration {
    BigInt count;                            ///< distinct codes seen
    std::uint64_t tuples = 0;                ///< (t, d) tuples visited
    unsigned passes = 1;                     ///< hash-partitioned passes over the tuples
    std::optional<std::vector<CodeKey>> keys;  ///< sorted, when requested
};

/// Keys kept in memory per pass; also the cap for key materialization.
inline constexpr std::uint64_t kKeyPassLimit = 10'000'000;

/**
 * Enumerate GRS generator matrices with t_1, t_2, t_3 = 0, 1, infinity and
 * d_1 = 1, the other t_i ranging over distinct remaining field values and
 * the other d_i over GF(q)^x. Every tuple is reduced to its code key and
 * the distinct keys are counted. When more than kKeyPassLimit tuples are
 * visited the keys are split by hash into several passes over the tuple
 * space. Throws OutOfRange unless 4 <= k+2 <= n <= q+1, TooLarge when keys
 * are requested for more than kKeyPassLimit tuples.
 */
GrsEnumeration enumerate_grs(const Field& f, unsigned k, unsigned n, const CensusOptions& opt = {},
                             bool want_keys = false);

/**
 * Number of [n, k] MDS codes, counted as systematic matrices [I_k | A]
 * with every minor of A nonzero. The columns of A are chosen left to right
 * as projective points in general position with e_1, ..., e_k and each
 * contributes q-1 scalings. Throws TooLarge when the search exceeds the
 * built-in node guard, BudgetExceeded when it exceeds opt.budget.
 */
BigInt count_mds_bruteforce(const Field& f, unsigned k, unsigned n, const CensusOptions& opt = {});

struct MdsGrsCount {
    BigInt mds;
    BigInt grs;
};

/// Both counts for dimension 3, classifying every systematic MDS matrix
/// with is_grs_dim3. Requires n >= 5.
MdsGrsCount count_grs_among_mds_dim3(const Field& f, unsigned n, const CensusOptions& opt = {});

/// Samples used by verify_fiber.
inline constexpr unsigned kFiberSamples = 20;

/**
 * For `samples` random hyperconic [q+2, 3] codes, puncture the last r
 * coordinates and count every extension [G_P | B] back to a hyperconic
 * code. Expected fiber: r! (q-1)^r. Requires q even, q >= 8, q+2-r >= 7.
 */
CountReport verify_fiber(const Field& f, unsigned r, const CensusOptions& opt = {},
                         unsigned samples = kFiberSamples);

/**
 * |MDS(q+2-r)| / |GRS(q+2-r)| against (q+2)/r for q = 8, r in {1, 2, 3},
 * from the closed formulas and again from brute-force counts of both.
 */
CountReport verify_ratio(const Field& f, unsigned r, const CensusOptions& opt = {});

/// Brute-force [n, 2] MDS count against the GRS formula.
CountReport verify_dim2_equality(const Field& f, unsigned n, const CensusOptions& opt = {});

/// Size limit for verify_orbit_partition.
inline constexpr std::uint64_t kOrbitLimit = 10'000'000;

/**
 * Enumerate all of S_{k,n} without normalization and group the matrices by
 * code key. Matches when every class has (q+1) q (q-1)^2 members and the
 * number of classes equals the GRS formula.
 */
CountReport verify_orbit_partition(const Field& f, unsigned k, unsigned n, const CensusOptions& opt = {});

/// enumerate_grs against the GRS formula.
CountReport verify_grs_count(const Field& f, unsigned k, unsigned n, const CensusOptions& opt = {});

/// count_mds_bruteforce against the closed dimension-3 MDS formula
/// (n in 6..9), or against the GRS formula for k = 2.
CountReport verify_mds_count(const Field& f, unsigned k, unsigned n, const CensusOptions& opt = {});

/// rho'(g) eps_k(t) = eps_k(g . t) for every g in GL_2(q) and t in P^1.
CountReport verify_equivariance(const Field& f, unsigned k, const CensusOptions& opt = {});

/// Coefficient checks of the GRS expansion (n >= 6) and, for n in 6..9,
/// of the dimension-3 MDS formula.
CountReport verify_asymptotics(unsigned n);

/// Hyperoval census against the number implied by the hyperconic count.
CountReport verify_hyperovals(const Field& f, const CensusOptions& opt = {});

/// Number of hyperovals implied by gamma_grs_hyper(q).
BigInt expected_hyperovals(unsigned q);

}  // namespace grscount
