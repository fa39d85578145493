/**************************************************************************
 * nrcauto.cpp
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

#include "grscount/nrcauto.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "grscount/error.hpp"

namespace grscount {

namespace {

Elem det(const Field& f, const Mobius& g) {
    return f.sub(f.mul(g.alpha, g.delta), f.mul(g.beta, g.gamma));
}

// (u0 + u1 x)^e as a coefficient vector.
std::vector<Elem> linear_power(const Field& f, Elem u0, Elem u1, std::size_t e) {
    std::vector<Elem> p{1};
    for (std::size_t i = 0; i < e; ++i) {
        std::vector<Elem> next(p.size() + 1, 0);
        for (std::size_t j = 0; j < p.size(); ++j) {
            next[j] = f.add(next[j], f.mul(p[j], u0));
            next[j + 1] = f.add(next[j + 1], f.mul(p[j], u1));
        }
        p = std::move(next);
    }
    return p;
}

std::vector<Elem> poly_mul(const Field& f, const std::vector<Elem>& a, const std::vector<Elem>& b) {
    std::vector<Elem> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
    return c;
}

}  // namespace

Mobius Mobius::make(const Field& f, Elem alpha, Elem beta, Elem gamma, Elem delta) {
    Mobius g{alpha, beta, gamma, delta};
    if (det(f, g) == 0) throw Error(Errc::SingularG, "Mobius matrix is singular");
    return g;
}

EvalPoint apply(const Field& f, const Mobius& g, EvalPoint t) {
    const Elem x = t.is_infinity() ? 0 : 1;
    const Elem y = t.is_infinity() ? 1 : t.value();
    const Elem nx = f.add(f.mul(g.alpha, x), f.mul(g.beta, y));
    const Elem ny = f.add(f.mul(g.gamma, x), f.mul(g.delta, y));
    if (nx == 0) return EvalPoint::infinity();
    return EvalPoint::finite(f.div(ny, nx));
}

Mobius compose(const Field& f, const Mobius& g, const Mobius& h) {
    return {f.add(f.mul(g.alpha, h.alpha), f.mul(g.beta, h.gamma)), f.add(f.mul(g.alpha, h.beta), f.mul(g.beta, h.delta)),
            f.add(f.mul(g.gamma, h.alpha), f.mul(g.delta, h.gamma)), f.add(f.mul(g.gamma, h.beta), f.mul(g.delta, h.delta))};
}

std::vector<Mobius> pgl2_elements(const Field& f) {
    const unsigned q = f.order();
    std::vector<Mobius> out;
    out.reserve(std::size_t(q + 1) * q * (q - 1));
    for (unsigned a = 0; a < q; ++a)
        for (unsigned b = 0; b < q; ++b)
            for (unsigned c = 0; c < q; ++c)
                for (unsigned d = 0; d < q; ++d) {
                    const std::array<unsigned, 4> e{a, b, c, d};
                    const auto lead = std::find_if(e.begin(), e.end(), [](unsigned v) { return v != 0; });
                    if (lead == e.end() || *lead != 1) continue;
                    const Mobius g{Elem(a), Elem(b), Elem(c), Elem(d)};
                    if (det(f, g) != 0) out.push_back(g);
                }
    return out;
}

Matrix projective_normalize(const Matrix& m) {
    const auto e = m.entries();
    const auto lead = std::find_if(e.begin(), e.end(), [](Elem v) { return v != 0; });
    if (lead == e.end()) throw Error(Errc::InvalidArgument, "zero matrix has no projective class");
    return m.scaled(m.field().inv(*lead));
}

Matrix rho_prime_matrix(const Field& f, const Mobius& g, std::size_t k) {
    if (k < 2 || k > f.order()) throw Error(Errc::BadDimension, "rho' needs 2 <= k <= q, got k=" + std::to_string(k));
    if (det(f, g) == 0) throw Error(Errc::SingularG, "Mobius matrix is singular");
    Matrix m(f, k, k);
    for (std::size_t i = 0; i < k; ++i) {
        const auto row = poly_mul(f, linear_power(f, g.alpha, g.beta, k - 1 - i), linear_power(f, g.gamma, g.delta, i));
        for (std::size_t j = 0; j < k; ++j) m(i, j) = row[j];
    }
    return m;
}

RhoImage rho_prime(const Field& f, const Mobius& g, std::size_t k) {
    return {k, projective_normalize(rho_prime_matrix(f, g, k))};
}

bool check_equivariance(const Field& f, const Mobius& g, std::size_t k, EvalPoint t) {
    const Matrix m = rho_prime_matrix(f, g, k);
    const auto image = m * std::span<const Elem>(nrc_column(f, k, t));
    std::vector<Elem> v(image.begin(), image.end());
    if (!normalize_in_place(f, v)) return false;
    return ProjPoint::normalize(f, v) == nrc_point(f, k, apply(f, g, t));
}

std::uint64_t group_order_G(const Field& f) {
    const std::uint64_t q = f.order();
    return (q + 1) * q * (q - 1) * (q - 1);
}

std::vector<Matrix> materialize_G(const Field& f, std::size_t k) {
    if (f.order() > 9) throw Error(Errc::TooLarge, "G is materialized only for q <= 9");
    std::vector<Matrix> out;
    out.reserve(group_order_G(f));
    for (const auto& g : pgl2_elements(f)) {
        const Matrix base = rho_prime(f, g, k).m;
        for (unsigned s = 1; s < f.order(); ++s) out.push_back(base.scaled(Elem(s)));
    }
    return out;
}

bool stabilizer_is_trivial(const Field& f, const GrsParams& p, std::uint64_t seed, std::size_t samples) {
    if (p.n() < 3) throw Error(Errc::PreconditionViolated, "stabilizer check needs n >= 3 (Mobius maps fix two points)");
    const Matrix g = grs_generator(f, p);
    const Matrix id = Matrix::identity(f, p.k);
    auto fixes = [&](const Matrix& r) { return !(r == id) && r * g == g; };

    if (f.order() <= 9) {
        for (const auto& r : materialize_G(f, p.k))
            if (fixes(r)) return false;
        return true;
    }
    const auto pgl = pgl2_elements(f);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, pgl.size() - 1);
    std::uniform_int_distribution<unsigned> scalar(1, f.order() - 1);
    for (std::size_t i = 0; i < samples; ++i) {
        const Matrix r = rho_prime(f, pgl[pick(rng)], p.k).m.scaled(Elem(scalar(rng)));
        if (fixes(r)) return false;
    }
    return true;
}

}  // namespace grscount
