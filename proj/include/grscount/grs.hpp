/**************************************************************************
 * grs.hpp
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

#include <cstddef>
#include <span>
#include <vector>

#include "grscount/geom.hpp"
#include "grscount/gf.hpp"
#include "grscount/linalg.hpp"

namespace grscount {

/// Evaluation points t and column multipliers d of the generator matrix
/// G_k(t, d) = [c(t_1) ... c(t_n)] diag(d_1, ..., d_n).
struct GrsParams {
    std::size_t k = 0;
    std::vector<EvalPoint> t;
    std::vector<Elem> d;

    std::size_t n() const noexcept { return t.size(); }
};

/// Throws DuplicateEvalPoint, ZeroMultiplier, BadDimension or OutOfRange.
void validate(const Field& f, const GrsParams& p);

/// The k x n matrix G_k(t, d). Always of full rank and MDS.
Matrix grs_generator(const Field& f, const GrsParams& p);

/**
 * Multipliers delta such that the rows of G_{n-k}(t, delta) span the null
 * space of G_k(t, d). For finite t_i,
 *   delta_i = d_i^{-1} prod_{j != i, t_j finite} (t_i - t_j)^{-1};
 * the infinite position is computed afterwards from the finite ones,
 *   delta_inf = -d_inf^{-1} sum_{j finite} t_j^{n-2} d_j delta_j.
 */
std::vector<Elem> dual_multipliers(const Field& f, const GrsParams& p);

/// A normal rational curve R * eps_k(P^1) through k+2 given points.
struct NrcFit {
    Matrix transform;  ///< invertible k x k matrix R
    GrsParams params;  ///< R * G_k(t, d) has the input points as columns
};

/**
 * Fit the unique normal rational curve through k+2 points of P^{k-1} in
 * general position. The points are moved to [I_k | v w] by a projective
 * map; then t_i = w_i / v_i (i <= k), t_{k+1} = 0, t_{k+2} = infinity and
 * d = (-v_1, ..., -v_k, 1, 1) make the rows of G_2(t, d) a basis of the
 * null space, and the dual multipliers of (t, d) give the curve.
 */
NrcFit fit_nrc(const Field& f, std::span<const ProjPoint> points);

/// The q+1 points R * eps_k(t), t in P^1, sorted.
std::vector<ProjPoint> nrc_point_set(const Field& f, const Matrix& transform);

/// A length q+1, dimension 3 GRS code with the nucleus of its conic
/// inserted as an extra column (characteristic 2).
struct HyperconicParams {
    GrsParams base;
    std::size_t nucleus_position = 0;  ///< in [0, q+1]
    Elem nucleus_multiplier = 1;
};

Matrix hyperconic_generator(const Field& f, const HyperconicParams& h);

/// Delete the last r coordinates. Throws DimensionDrop if the remaining
/// columns no longer have rank k.
CodeKey puncture(const Field& f, const CodeKey& key, std::size_t r);

/// Delete the listed coordinates (any positions).
CodeKey puncture_positions(const Field& f, const CodeKey& key, std::span<const std::size_t> positions);

/**
 * Decide whether a [n, 3] MDS code is GRS: its column points lie on a
 * nondegenerate conic (n <= q+1), or form a conic plus its nucleus
 * (n = q+2, q even). The conic is fitted through the first five columns in
 * lexicographic order that are in general position (for an MDS code, the
 * first five). Throws TooShort for n < 5 and NotMds for non-MDS input.
 * For n = 5 every MDS code qualifies.
 */
bool is_grs_dim3(const Field& f, const CodeKey& key);

/// Same decision from the column points directly (no MDS check).
bool column_points_grs_dim3(const Field& f, std::span<const ProjPoint> cols);

/// GRS recognition for any k >= 2, n >= k+2, via fit_nrc on the first k+2
/// columns. Throws NotMds for non-MDS input.
bool is_grs(const Field& f, const CodeKey& key);

/// Column points of a generator matrix (no zero columns allowed).
std::vector<ProjPoint> column_points(const Matrix& g);

}  // namespace grscount
