/**************************************************************************
 * geom.hpp
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

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "grscount/gf.hpp"
#include "grscount/linalg.hpp"

namespace grscount {

/// A point of the projective line: a field value or infinity.
class EvalPoint {
   public:
    static constexpr EvalPoint finite(Elem t) noexcept { return EvalPoint(false, t); }
    static constexpr EvalPoint infinity() noexcept { return EvalPoint(true, 0); }

    constexpr bool is_infinity() const noexcept { return inf_; }
    constexpr Elem value() const noexcept { return t_; }

    friend constexpr bool operator==(const EvalPoint&, const EvalPoint&) = default;
    friend constexpr auto operator<=>(const EvalPoint& a, const EvalPoint& b) {
        // field index order first, infinity last
        if (a.inf_ != b.inf_) return a.inf_ <=> b.inf_;
        return a.t_ <=> b.t_;
    }

   private:
    constexpr EvalPoint(bool inf, Elem t) noexcept : inf_(inf), t_(inf ? 0 : t) {}
    bool inf_;
    Elem t_;
};

/// All q+1 points of P^1 in the order 0, 1, ..., q-1, infinity.
std::vector<EvalPoint> projective_line(const Field& f);

/// Homogeneous coordinates normalized so the first nonzero entry is 1.
class ProjPoint {
   public:
    /// Throws Errc::InvalidArgument for the zero vector.
    static ProjPoint normalize(const Field& f, std::vector<Elem> coords);

    std::span<const Elem> coords() const noexcept { return coords_; }
    std::size_t dim() const noexcept { return coords_.size(); }
    const std::vector<Elem>& vec() const noexcept { return coords_; }

    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
    friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;

   private:
    explicit ProjPoint(std::vector<Elem> c) : coords_(std::move(c)) {}
    std::vector<Elem> coords_;
};

/// Scale v in place so its first nonzero entry is 1. Returns false for zero.
bool normalize_in_place(const Field& f, std::span<Elem> v) noexcept;

/// Point eps_k(t) = [1, t, ..., t^{k-1}] of the normal rational curve;
/// infinity maps to [0, ..., 0, 1]. Requires 2 <= k <= q.
ProjPoint nrc_point(const Field& f, std::size_t k, EvalPoint t);

/// Coordinates of the column c(t) without normalization (equal to the
/// normalized point, spelled out for generator matrix construction).
std::vector<Elem> nrc_column(const Field& f, std::size_t k, EvalPoint t);

/// Determinant test for three points of PG(2, q).
bool collinear(const Field& f, const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);

/// Cross product of two vectors of GF(q)^3.
std::array<Elem, 3> cross(const Field& f, std::span<const Elem> u, std::span<const Elem> v);

/**
 * Plane conic a x^2 + b y^2 + c z^2 + d xy + e yz + f xz, coefficients
 * stored in the order (a, b, c, d, e, f) with the first nonzero one equal
 * to 1.
 */
struct Conic {
    std::array<Elem, 6> coeffs{};
    bool degenerate = false;

    friend bool operator==(const Conic&, const Conic&) = default;
};

/// Normalize coefficients and decide degeneracy exactly.
Conic make_conic(const Field& f, std::array<Elem, 6> coeffs);
Elem evaluate(const Field& f, const Conic& c, std::span<const Elem> x);
bool contains(const Field& f, const Conic& c, std::span<const Elem> x);
/// Rational points of the conic in point-index order.
std::vector<ProjPoint> conic_points(const Field& f, const Conic& c);

/// The conic through five points, no three of them collinear.
Conic conic_through_five(const Field& f, std::span<const ProjPoint> points);

/// Common point of all tangent lines of a nondegenerate conic in
/// characteristic 2: [e : f : d].
ProjPoint nucleus(const Field& f, const Conic& c);

/// Tangent line coefficients at a point of the conic (polar form).
std::array<Elem, 3> tangent_line(const Field& f, const Conic& c, std::span<const Elem> x);

/**
 * The points of PG(k-1, q) with fast index lookup. Points are listed by
 * the position of their leading 1, then lexicographically in the
 * remaining coordinates.
 */
class ProjectiveSpace {
   public:
    ProjectiveSpace(const Field& f, std::size_t k);

    const Field& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return k_; }
    std::size_t size() const noexcept { return count_; }

    std::span<const Elem> point(std::size_t i) const noexcept { return {coords_.data() + i * k_, k_}; }
    /// Index of the point spanned by v (v need not be normalized, nonzero).
    std::size_t index_of(std::span<const Elem> v) const;
    /// Points of the hyperplane with the given normal (as a point index).
    std::span<const std::uint32_t> hyperplane(std::size_t normal) const noexcept {
        return {incidence_.data() + normal * per_hyperplane_, per_hyperplane_};
    }
    std::size_t points_per_hyperplane() const noexcept { return per_hyperplane_; }
    /// Normal of the hyperplane through k-1 independent points. Returns
    /// size() when the points are dependent.
    std::size_t hyperplane_through(std::span<const std::size_t> points) const;

   private:
    Field field_;
    std::size_t k_;
    std::size_t count_ = 0;
    std::size_t per_hyperplane_ = 0;
    std::vector<Elem> coords_;
    std::vector<std::size_t> offset_;  // index of the first point with leading 1 at position l
    std::vector<std::uint32_t> incidence_;
};

struct HyperovalCensus {
    std::uint64_t count = 0;           ///< all hyperovals of PG(2, q)
    bool all_hyperconic = false;
    std::uint64_t through_frame = 0;   ///< hyperovals containing the standard frame
    std::uint64_t ordered_frames_per_hyperoval = 0;  ///< (q+2)(q+1)q(q-1)
};

/**
 * Count every (q+2)-arc of PG(2, q), q in {2, 4, 8}, and check that each one
 * is a conic together with its nucleus.
 *
 * The search fixes the frame e1, e2, e3, [1,1,1] and extends it by points in
 * increasing index order. PGL(3, q) is regular on ordered frames and every
 * hyperoval holds (q+2)(q+1)q(q-1) of them, so
 *   count = |PGL(3, q)| * through_frame / ((q+2)(q+1)q(q-1)).
 * The first extension point is dealt round-robin to `workers` threads.
 */
HyperovalCensus hyperoval_census(const Field& f, unsigned workers = 1);

/// True iff the q+2 points are a nondegenerate conic plus its nucleus.
bool is_hyperconic(const Field& f, std::span<const ProjPoint> points);

/// Number of complete n-arcs containing the standard frame (as point sets).
/// Every arc of size >= 4 is projectively equivalent to one of these, so a
/// zero result means no complete n-arcs exist in PG(2, q).
std::uint64_t complete_arcs_through_frame(const Field& f, std::size_t n, unsigned workers = 1);

/// |PGL(k, q)|.
std::uint64_t pgl_order(unsigned q, std::size_t k);

}  // namespace grscount
