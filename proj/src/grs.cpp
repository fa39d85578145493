/**************************************************************************
 * grs.cpp
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

#include "grscount/grs.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "grscount/error.hpp"

namespace grscount {

namespace {

// c(t) for any k >= 1; k = 1 gives the constant column (1).
std::vector<Elem> column(const Field& f, std::size_t k, EvalPoint t) {
    std::vector<Elem> c(k, 0);
    if (t.is_infinity()) {
        c[k - 1] = 1;
        return c;
    }
    c[0] = 1;
    for (std::size_t i = 1; i < k; ++i) c[i] = f.mul(c[i - 1], t.value());
    return c;
}

Matrix generator(const Field& f, std::size_t k, std::span<const EvalPoint> t, std::span<const Elem> d) {
    Matrix g(f, k, t.size());
    for (std::size_t j = 0; j < t.size(); ++j) {
        const auto c = column(f, k, t[j]);
        for (std::size_t r = 0; r < k; ++r) g(r, j) = f.mul(c[r], d[j]);
    }
    return g;
}

}  // namespace

void validate(const Field& f, const GrsParams& p) {
    if (p.t.size() != p.d.size()) throw Error(Errc::InvalidArgument, "t and d differ in length");
    if (p.k == 0 || p.k > p.n()) throw Error(Errc::BadDimension, "need 1 <= k <= n");
    if (p.n() > f.order() + 1) throw Error(Errc::OutOfRange, "n exceeds q+1");
    for (std::size_t i = 0; i < p.n(); ++i) {
        if (!p.t[i].is_infinity() && p.t[i].value() >= f.order())
            throw Error(Errc::InvalidArgument, "evaluation point is not a field element");
        if (p.d[i] == 0) throw Error(Errc::ZeroMultiplier, "column multiplier " + std::to_string(i) + " is zero");
        if (p.d[i] >= f.order()) throw Error(Errc::InvalidArgument, "multiplier is not a field element");
        for (std::size_t j = 0; j < i; ++j)
            if (p.t[i] == p.t[j]) throw Error(Errc::DuplicateEvalPoint, "evaluation points repeat");
    }
}

Matrix grs_generator(const Field& f, const GrsParams& p) {
    validate(f, p);
    return generator(f, p.k, p.t, p.d);
}

std::vector<Elem> dual_multipliers(const Field& f, const GrsParams& p) {
    validate(f, p);
    const std::size_t n = p.n();
    std::size_t finite = 0;
    for (const auto& t : p.t) finite += !t.is_infinity();
    if (finite < 2) throw Error(Errc::PreconditionViolated, "dual multipliers need at least two finite points");

    std::vector<Elem> delta(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (p.t[i].is_infinity()) continue;
        Elem prod = 1;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i && !p.t[j].is_infinity()) prod = f.mul(prod, f.sub(p.t[i].value(), p.t[j].value()));
        delta[i] = f.inv(f.mul(p.d[i], prod));
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!p.t[i].is_infinity()) continue;
        Elem sum = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) sum = f.add(sum, f.mul(f.mul(f.pow(p.t[j].value(), n - 2), p.d[j]), delta[j]));
        delta[i] = f.neg(f.div(sum, p.d[i]));
    }
    return delta;
}

NrcFit fit_nrc(const Field& f, std::span<const ProjPoint> points) {
    if (points.empty()) throw Error(Errc::InvalidArgument, "no points to fit");
    const std::size_t k = points.front().dim();
    if (k < 2 || points.size() != k + 2)
        throw Error(Errc::InvalidArgument, "fit_nrc needs k+2 points of P^{k-1}");
    std::vector<std::vector<Elem>> cols;
    for (const auto& p : points) {
        if (p.dim() != k) throw Error(Errc::BadDimension, "points of mixed dimension");
        cols.push_back(p.vec());
    }
    const Matrix all = Matrix::from_columns(f, cols);
    std::vector<Elem> sub(k * k);
    const bool general = for_each_subset(k + 2, k, [&](std::span<const std::size_t> idx) {
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t j = 0; j < k; ++j) sub[r * k + j] = all(r, idx[j]);
        return rref_inplace(f, sub, k, k) == k;
    });
    if (!general) throw Error(Errc::NotGeneralPosition, "k of the points lie on a hyperplane");

    std::vector<std::size_t> first(k);
    for (std::size_t i = 0; i < k; ++i) first[i] = i;
    const Matrix basis = all.select_columns(first);
    const Matrix to_frame = *inverse(basis);
    const auto v = to_frame * std::span<const Elem>(cols[k]);
    const auto w = to_frame * std::span<const Elem>(cols[k + 1]);

    GrsParams dual{2, {}, {}};
    for (std::size_t i = 0; i < k; ++i) {
        dual.t.push_back(EvalPoint::finite(f.div(w[i], v[i])));
        dual.d.push_back(f.neg(v[i]));
    }
    dual.t.push_back(EvalPoint::finite(0));
    dual.t.push_back(EvalPoint::infinity());
    dual.d.push_back(1);
    dual.d.push_back(1);

    GrsParams curve{k, dual.t, dual_multipliers(f, dual)};
    const Matrix g = grs_generator(f, curve);
    const Matrix to_curve = *inverse(g.select_columns(first));

    // Sanity: to_curve * g must be [I | v w].
    const Matrix framed = to_curve * g;
    for (std::size_t r = 0; r < k; ++r)
        if (framed(r, k) != v[r] || framed(r, k + 1) != w[r])
            throw Error(Errc::RankDeficient, "fitted curve does not pass through the last two points");
    return {basis * to_curve, std::move(curve)};
}

std::vector<ProjPoint> nrc_point_set(const Field& f, const Matrix& transform) {
    std::vector<ProjPoint> pts;
    for (const auto& t : projective_line(f)) {
        const auto c = column(f, transform.cols(), t);
        pts.push_back(ProjPoint::normalize(f, transform * std::span<const Elem>(c)));
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

std::vector<ProjPoint> column_points(const Matrix& g) {
    std::vector<ProjPoint> pts;
    pts.reserve(g.cols());
    for (std::size_t j = 0; j < g.cols(); ++j) pts.push_back(ProjPoint::normalize(g.field(), g.column(j)));
    return pts;
}

Matrix hyperconic_generator(const Field& f, const HyperconicParams& h) {
    if (f.characteristic() != 2) throw Error(Errc::OddCharacteristic, "hyperconic codes need characteristic 2");
    if (f.degree() < 2) throw Error(Errc::PreconditionViolated, "hyperconic codes need q >= 4");
    const unsigned q = f.order();
    if (h.base.k != 3 || h.base.n() != q + 1)
        throw Error(Errc::InvalidArgument, "hyperconic base must be a [q+1, 3] GRS code");
    if (h.nucleus_position > q + 1) throw Error(Errc::OutOfRange, "nucleus position past the end");
    if (h.nucleus_multiplier == 0) throw Error(Errc::ZeroMultiplier, "nucleus multiplier is zero");

    const Matrix base = grs_generator(f, h.base);
    const auto pts = column_points(base);
    const Conic conic = conic_through_five(f, std::span(pts).first(5));
    const ProjPoint nuc = nucleus(f, conic);

    Matrix g(f, 3, q + 2);
    for (std::size_t j = 0, src = 0; j < q + 2; ++j) {
        for (std::size_t r = 0; r < 3; ++r)
            g(r, j) = j == h.nucleus_position ? f.mul(nuc.coords()[r], h.nucleus_multiplier) : base(r, src);
        if (j != h.nucleus_position) ++src;
    }
    return g;
}

CodeKey puncture(const Field& f, const CodeKey& key, std::size_t r) {
    if (r > key.n() || key.n() - r < key.k()) throw Error(Errc::OutOfRange, "cannot puncture below the dimension");
    std::vector<std::size_t> last(r);
    for (std::size_t i = 0; i < r; ++i) last[i] = key.n() - r + i;
    return puncture_positions(f, key, last);
}

CodeKey puncture_positions(const Field& f, const CodeKey& key, std::span<const std::size_t> positions) {
    std::vector<bool> drop(key.n(), false);
    for (std::size_t p : positions) {
        if (p >= key.n()) throw Error(Errc::OutOfRange, "puncture position past the end");
        drop[p] = true;
    }
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < key.n(); ++j)
        if (!drop[j]) keep.push_back(j);
    if (keep.size() < key.k()) throw Error(Errc::OutOfRange, "cannot puncture below the dimension");
    const Matrix g = key.generator(f).select_columns(keep);
    if (rank(g) < key.k()) throw Error(Errc::DimensionDrop, "punctured code lost dimension");
    return CodeKey::from_generator(g);
}

bool column_points_grs_dim3(const Field& f, std::span<const ProjPoint> cols) {
    const std::size_t n = cols.size();
    const unsigned q = f.order();
    if (n < 5) throw Error(Errc::TooShort, "GRS recognition in dimension 3 needs n >= 5");
    if (n == q + 2) return is_hyperconic(f, cols);
    if (n > q + 1) return false;

    std::optional<Conic> conic;
    for_each_subset(n, 5, [&](std::span<const std::size_t> idx) {
        std::vector<ProjPoint> five;
        for (std::size_t i : idx) five.push_back(cols[i]);
        try {
            conic = conic_through_five(f, five);
            return false;
        } catch (const Error& e) {
            if (e.code() != Errc::DegeneratePosition) throw;
            return true;
        }
    });
    if (!conic) return false;
    return std::all_of(cols.begin(), cols.end(), [&](const ProjPoint& p) { return contains(f, *conic, p.coords()); });
}

bool is_grs_dim3(const Field& f, const CodeKey& key) {
    if (key.k() != 3) throw Error(Errc::InvalidArgument, "is_grs_dim3 expects a dimension-3 code");
    if (key.n() < 5) throw Error(Errc::TooShort, "GRS recognition in dimension 3 needs n >= 5");
    const Matrix g = key.generator(f);
    if (!is_mds(g)) throw Error(Errc::NotMds, "code is not MDS");
    return column_points_grs_dim3(f, column_points(g));
}

bool is_grs(const Field& f, const CodeKey& key) {
    const std::size_t k = key.k(), n = key.n();
    if (n < k + 2) throw Error(Errc::TooShort, "GRS recognition needs n >= k+2");
    const Matrix g = key.generator(f);
    if (!is_mds(g)) throw Error(Errc::NotMds, "code is not MDS");
    const auto cols = column_points(g);
    if (k == 3 && n == f.order() + 2) return is_hyperconic(f, cols);
    if (n > f.order() + 1) return false;
    const NrcFit fit = fit_nrc(f, std::span(cols).first(k + 2));
    const auto curve = nrc_point_set(f, fit.transform);
    return std::all_of(cols.begin(), cols.end(),
                       [&](const ProjPoint& p) { return std::binary_search(curve.begin(), curve.end(), p); });
}

}  // namespace grscount
