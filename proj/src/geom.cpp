/**************************************************************************
 * geom.cpp
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

#include "grscount/geom.hpp"

#include <algorithm>
#include <string>

#include "grscount/arcs.hpp"
#include "grscount/error.hpp"

namespace grscount {

namespace {

// Visit every normalized point of PG(k-1, q) in index order.
template <class Fn>
void for_each_point(const Field& f, std::size_t k, Fn&& fn) {
    const unsigned q = f.order();
    std::vector<Elem> v(k);
    for (std::size_t lead = 0; lead < k; ++lead) {
        std::fill(v.begin(), v.end(), 0);
        v[lead] = 1;
        while (true) {
            fn(std::span<const Elem>(v));
            // odometer over the coordinates after the leading 1
            bool wrapped = true;
            for (std::size_t i = k; i > lead + 1;) {
                --i;
                if (++v[i] < q) {
                    wrapped = false;
                    break;
                }
                v[i] = 0;
            }
            if (wrapped) break;
        }
    }
}

Elem dot(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
    Elem s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
    return s;
}

std::array<Elem, 6> monomials(const Field& f, std::span<const Elem> x) {
    return {f.mul(x[0], x[0]), f.mul(x[1], x[1]), f.mul(x[2], x[2]),
            f.mul(x[0], x[1]), f.mul(x[1], x[2]), f.mul(x[0], x[2])};
}

}  // namespace

std::vector<EvalPoint> projective_line(const Field& f) {
    std::vector<EvalPoint> pts;
    pts.reserve(f.order() + 1);
    for (unsigned t = 0; t < f.order(); ++t) pts.push_back(EvalPoint::finite(Elem(t)));
    pts.push_back(EvalPoint::infinity());
    return pts;
}

bool normalize_in_place(const Field& f, std::span<Elem> v) noexcept {
    auto it = std::find_if(v.begin(), v.end(), [](Elem e) { return e != 0; });
    if (it == v.end()) return false;
    const Elem s = f.inv(*it);
    if (s != 1)
        for (; it != v.end(); ++it) *it = f.mul(*it, s);
    return true;
}

ProjPoint ProjPoint::normalize(const Field& f, std::vector<Elem> coords) {
    if (!normalize_in_place(f, coords)) throw Error(Errc::InvalidArgument, "zero vector is not a projective point");
    return ProjPoint(std::move(coords));
}

std::vector<Elem> nrc_column(const Field& f, std::size_t k, EvalPoint t) {
    if (k < 2 || k > f.order())
        throw Error(Errc::BadDimension, "normal rational curve needs 2 <= k <= q, got k=" + std::to_string(k));
    std::vector<Elem> c(k, 0);
    if (t.is_infinity()) {
        c[k - 1] = 1;
        return c;
    }
    c[0] = 1;
    for (std::size_t i = 1; i < k; ++i) c[i] = f.mul(c[i - 1], t.value());
    return c;
}

ProjPoint nrc_point(const Field& f, std::size_t k, EvalPoint t) {
    return ProjPoint::normalize(f, nrc_column(f, k, t));
}

std::array<Elem, 3> cross(const Field& f, std::span<const Elem> u, std::span<const Elem> v) {
    return {f.sub(f.mul(u[1], v[2]), f.mul(u[2], v[1])), f.sub(f.mul(u[2], v[0]), f.mul(u[0], v[2])),
            f.sub(f.mul(u[0], v[1]), f.mul(u[1], v[0]))};
}

bool collinear(const Field& f, const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
    if (a.dim() != 3 || b.dim() != 3 || c.dim() != 3)
        throw Error(Errc::BadDimension, "collinearity is defined for points of PG(2, q)");
    const auto n = cross(f, a.coords(), b.coords());
    return dot(f, n, c.coords()) == 0;
}

Elem evaluate(const Field& f, const Conic& c, std::span<const Elem> x) {
    return dot(f, c.coeffs, monomials(f, x));
}

bool contains(const Field& f, const Conic& c, std::span<const Elem> x) { return evaluate(f, c, x) == 0; }

std::vector<ProjPoint> conic_points(const Field& f, const Conic& c) {
    std::vector<ProjPoint> pts;
    for_each_point(f, 3, [&](std::span<const Elem> x) {
        if (contains(f, c, x)) pts.push_back(ProjPoint::normalize(f, {x.begin(), x.end()}));
    });
    return pts;
}

Conic make_conic(const Field& f, std::array<Elem, 6> coeffs) {
    if (!normalize_in_place(f, coeffs)) throw Error(Errc::InvalidArgument, "all conic coefficients are zero");
    Conic c{coeffs, false};
    // Nondegenerate iff exactly q+1 rational points that do not fill a line.
    // Two rational lines give 2q+1 points, a conjugate pair 1, a double line
    // q+1 collinear ones.
    const auto pts = conic_points(f, c);
    if (pts.size() != f.order() + 1) {
        c.degenerate = true;
        return c;
    }
    const auto line = cross(f, pts[0].coords(), pts[1].coords());
    c.degenerate = std::all_of(pts.begin(), pts.end(), [&](const ProjPoint& p) { return dot(f, line, p.coords()) == 0; });
    return c;
}

Conic conic_through_five(const Field& f, std::span<const ProjPoint> points) {
    if (points.size() != 5) throw Error(Errc::InvalidArgument, "a conic is fitted through exactly five points");
    for (const auto& p : points)
        if (p.dim() != 3) throw Error(Errc::BadDimension, "conic points must lie in PG(2, q)");
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j)
            for (std::size_t l = j + 1; l < 5; ++l)
                if (collinear(f, points[i], points[j], points[l]))
                    throw Error(Errc::DegeneratePosition, "three of the five points are collinear");
    Matrix system(f, 5, 6);
    for (std::size_t i = 0; i < 5; ++i) {
        const auto m = monomials(f, points[i].coords());
        for (std::size_t j = 0; j < 6; ++j) system(i, j) = m[j];
    }
    const Matrix ker = kernel(system);
    if (ker.rows() != 1) throw Error(Errc::RankDeficient, "five points in general position gave a non-unique conic");
    std::array<Elem, 6> coeffs{};
    for (std::size_t j = 0; j < 6; ++j) coeffs[j] = ker(0, j);
    Conic c = make_conic(f, coeffs);
    if (c.degenerate) throw Error(Errc::RankDeficient, "conic through five points in general position is degenerate");
    return c;
}

std::array<Elem, 3> tangent_line(const Field& f, const Conic& c, std::span<const Elem> x) {
    const auto& [a, b, cc, d, e, g] = c.coeffs;
    const Elem two = f.from_integer(2);
    return {f.add(f.add(f.mul(f.mul(two, a), x[0]), f.mul(d, x[1])), f.mul(g, x[2])),
            f.add(f.add(f.mul(f.mul(two, b), x[1]), f.mul(d, x[0])), f.mul(e, x[2])),
            f.add(f.add(f.mul(f.mul(two, cc), x[2]), f.mul(e, x[1])), f.mul(g, x[0]))};
}

ProjPoint nucleus(const Field& f, const Conic& c) {
    if (f.characteristic() != 2) throw Error(Errc::OddCharacteristic, "nucleus requires characteristic 2");
    if (c.degenerate) throw Error(Errc::Degenerate, "nucleus of a degenerate conic");
    const auto& k = c.coeffs;
    return ProjPoint::normalize(f, {k[4], k[5], k[3]});
}

bool is_hyperconic(const Field& f, std::span<const ProjPoint> points) {
    const unsigned q = f.order();
    if (f.characteristic() != 2 || points.size() != q + 2) return false;
    std::vector<ProjPoint> rest;
    for (std::size_t skip = 0; skip < points.size(); ++skip) {
        rest.clear();
        for (std::size_t i = 0; i < points.size(); ++i)
            if (i != skip) rest.push_back(points[i]);
        if (q + 1 >= 5) {
            Conic c;
            try {
                c = conic_through_five(f, std::span(rest).first(5));
            } catch (const Error&) {
                continue;
            }
            const bool on = std::all_of(rest.begin(), rest.end(), [&](const ProjPoint& p) { return contains(f, c, p.coords()); });
            if (on && nucleus(f, c) == points[skip]) return true;
        } else {
            // Fewer than five conic points: try every nondegenerate conic.
            std::array<Elem, 6> coeffs{};
            const std::size_t total = std::size_t(q) * q * q * q * q * q;
            for (std::size_t code = 1; code < total; ++code) {
                std::size_t v = code;
                for (auto& x : coeffs) {
                    x = Elem(v % q);
                    v /= q;
                }
                if (!std::all_of(rest.begin(), rest.end(), [&](const ProjPoint& p) { return evaluate(f, Conic{coeffs, false}, p.coords()) == 0; }))
                    continue;
                const Conic c = make_conic(f, coeffs);
                if (c.degenerate || conic_points(f, c).size() != rest.size()) continue;
                if (nucleus(f, c) == points[skip]) return true;
            }
        }
    }
    return false;
}

ProjectiveSpace::ProjectiveSpace(const Field& f, std::size_t k) : field_(f), k_(k) {
    if (k < 2) throw Error(Errc::BadDimension, "projective space needs k >= 2");
    const std::size_t q = f.order();
    offset_.assign(k + 1, 0);
    std::size_t block = 1;
    for (std::size_t i = 1; i < k; ++i) block *= q;  // q^{k-1}
    for (std::size_t l = 0; l < k; ++l) {
        offset_[l + 1] = offset_[l] + block;
        block /= q;
    }
    count_ = offset_[k];
    per_hyperplane_ = count_ / q;  // (q^{k-1}-1)/(q-1) = ((q^k-1)/(q-1) - 1)/q
    if (count_ * per_hyperplane_ > (std::size_t(1) << 26))
        throw Error(Errc::TooLarge, "projective space too large for an incidence table");
    coords_.reserve(count_ * k);
    for_each_point(f, k, [&](std::span<const Elem> x) { coords_.insert(coords_.end(), x.begin(), x.end()); });

    incidence_.reserve(count_ * per_hyperplane_);
    for (std::size_t h = 0; h < count_; ++h)
        for (std::size_t x = 0; x < count_; ++x)
            if (dot(f, point(h), point(x)) == 0) incidence_.push_back(std::uint32_t(x));
    if (incidence_.size() != count_ * per_hyperplane_) throw Error(Errc::RankDeficient, "hyperplane incidence mismatch");
}

std::size_t ProjectiveSpace::index_of(std::span<const Elem> v) const {
    if (v.size() != k_) throw Error(Errc::BadDimension, "coordinate vector has the wrong length");
    std::size_t lead = 0;
    while (lead < k_ && v[lead] == 0) ++lead;
    if (lead == k_) throw Error(Errc::InvalidArgument, "zero vector is not a projective point");
    const Elem s = field_.inv(v[lead]);
    std::size_t idx = 0;
    for (std::size_t i = lead + 1; i < k_; ++i) idx = idx * field_.order() + field_.mul(v[i], s);
    return offset_[lead] + idx;
}

std::size_t ProjectiveSpace::hyperplane_through(std::span<const std::size_t> pts) const {
    if (pts.size() + 1 != k_) throw Error(Errc::InvalidArgument, "a hyperplane is spanned by k-1 points");
    if (k_ == 3) {
        const auto n = cross(field_, point(pts[0]), point(pts[1]));
        if (n[0] == 0 && n[1] == 0 && n[2] == 0) return count_;
        return index_of(n);
    }
    Matrix m(field_, pts.size(), k_);
    for (std::size_t r = 0; r < pts.size(); ++r)
        for (std::size_t c = 0; c < k_; ++c) m(r, c) = point(pts[r])[c];
    const Matrix ker = kernel(m);
    if (ker.rows() != 1) return count_;
    return index_of(ker.entries());
}

std::size_t PointSet::count_clear(std::size_t from) const noexcept {
    std::size_t c = 0;
    for (std::size_t w = from >> 6; w < words_.size(); ++w) {
        std::uint64_t free = ~words_[w];
        if (w == (from >> 6)) free &= ~std::uint64_t(0) << (from & 63);
        const std::size_t base = w << 6;
        if (n_ - base < 64) free &= (std::uint64_t(1) << (n_ - base)) - 1;
        c += std::size_t(std::popcount(free));
    }
    return c;
}

std::size_t PointSet::next_clear(std::size_t from) const noexcept {
    while (from < n_) {
        const std::size_t w = from >> 6;
        const std::uint64_t free = ~words_[w] & (~std::uint64_t(0) << (from & 63));
        if (free) {
            const std::size_t i = (w << 6) + std::size_t(std::countr_zero(free));
            return i < n_ ? i : n_;
        }
        from = (w + 1) << 6;
    }
    return n_;
}

bool ArcExtender::extend(const PointSet& base, std::span<const std::size_t> chosen, std::size_t a,
                         PointSet& out) const {
    out = base;
    out.set(a);
    const std::size_t k = space_.dim();
    if (k == 2) return true;  // a hyperplane of P^1 is a single point
    const std::size_t need = k - 2;
    if (chosen.size() < need) {
        // Too few points to span a hyperplane yet; only check independence.
        Matrix m(space_.field(), chosen.size() + 1, k);
        for (std::size_t r = 0; r < chosen.size(); ++r)
            for (std::size_t c = 0; c < k; ++c) m(r, c) = space_.point(chosen[r])[c];
        for (std::size_t c = 0; c < k; ++c) m(chosen.size(), c) = space_.point(a)[c];
        return rank(m) == chosen.size() + 1;
    }
    std::vector<std::size_t> span_pts(need + 1);
    return for_each_subset(chosen.size(), need, [&](std::span<const std::size_t> sub) {
        for (std::size_t i = 0; i < need; ++i) span_pts[i] = chosen[sub[i]];
        span_pts[need] = a;
        const std::size_t h = space_.hyperplane_through(span_pts);
        if (h == space_.size()) return false;
        for (std::uint32_t x : space_.hyperplane(h)) out.set(x);
        return true;
    });
}

PointSet ArcExtender::forbidden_by(std::span<const std::size_t> points) const {
    PointSet cur(space_.size()), next(space_.size());
    std::vector<std::size_t> chosen;
    for (std::size_t p : points) {
        if (cur.test(p) || !extend(cur, chosen, p, next))
            throw Error(Errc::NotGeneralPosition, "initial points are not in general position");
        std::swap(cur, next);
        chosen.push_back(p);
    }
    return cur;
}

std::vector<std::size_t> unit_points(const ProjectiveSpace& space) {
    std::vector<std::size_t> idx;
    std::vector<Elem> e(space.dim(), 0);
    for (std::size_t i = 0; i < space.dim(); ++i) {
        std::fill(e.begin(), e.end(), 0);
        e[i] = 1;
        idx.push_back(space.index_of(e));
    }
    return idx;
}

std::uint64_t pgl_order(unsigned q, std::size_t k) {
    unsigned __int128 qk = 1;
    for (std::size_t i = 0; i < k; ++i) qk *= q;
    unsigned __int128 order = 1, qi = 1;
    for (std::size_t i = 0; i < k; ++i) {
        order *= (qk - qi);
        qi *= q;
    }
    return std::uint64_t(order / (q - 1));
}

namespace {

std::vector<std::size_t> standard_frame(const ProjectiveSpace& plane) {
    auto frame = unit_points(plane);
    const std::vector<Elem> ones(3, 1);
    frame.push_back(plane.index_of(ones));
    return frame;
}

void require_small_even(const Field& f) {
    if (f.characteristic() != 2) throw Error(Errc::OddCharacteristic, "hyperovals exist only for even q");
    if (f.order() >= 16) throw Error(Errc::TooLarge, "hyperoval census is limited to q <= 8");
}

}  // namespace

HyperovalCensus hyperoval_census(const Field& f, unsigned workers) {
    require_small_even(f);
    const unsigned q = f.order();
    const ProjectiveSpace plane(f, 3);
    const auto frame = standard_frame(plane);
    Budget budget(~std::uint64_t(0));
    std::vector<char> all_ok(std::max(1u, workers), 1);

    const auto counts = enumerate_arc_sets(plane, frame, q + 2 - 4, workers, budget,
                                           [&](unsigned w, std::span<const std::size_t> chosen, const PointSet&) {
                                               std::vector<ProjPoint> pts;
                                               for (std::size_t i : chosen)
                                                   pts.push_back(ProjPoint::normalize(f, {plane.point(i).begin(), plane.point(i).end()}));
                                               if (!is_hyperconic(f, pts)) all_ok[w] = 0;
                                           });
    HyperovalCensus out;
    for (auto c : counts) out.through_frame += c;
    out.all_hyperconic = std::all_of(all_ok.begin(), all_ok.end(), [](char c) { return c != 0; });
    out.ordered_frames_per_hyperoval = std::uint64_t(q + 2) * (q + 1) * q * (q - 1);
    const unsigned __int128 num = (unsigned __int128)pgl_order(q, 3) * out.through_frame;
    if (num % out.ordered_frames_per_hyperoval != 0)
        throw Error(Errc::RankDeficient, "frame count is inconsistent with a regular PGL(3, q) action");
    out.count = std::uint64_t(num / out.ordered_frames_per_hyperoval);
    return out;
}

std::uint64_t complete_arcs_through_frame(const Field& f, std::size_t n, unsigned workers) {
    if (n < 4) throw Error(Errc::OutOfRange, "arcs through a frame have at least four points");
    const ProjectiveSpace plane(f, 3);
    const auto frame = standard_frame(plane);
    Budget budget(~std::uint64_t(0));
    std::vector<std::uint64_t> complete(std::max(1u, workers), 0);
    enumerate_arc_sets(plane, frame, n - 4, workers, budget,
                       [&](unsigned w, std::span<const std::size_t>, const PointSet& forbidden) {
                           if (forbidden.count_clear() == 0) ++complete[w];
                       });
    std::uint64_t total = 0;
    for (auto c : complete) total += c;
    return total;
}

}  // namespace grscount
