/**************************************************************************
 * test_nrcauto.cpp
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

#include <algorithm>
#include <set>

#include "grscount/error.hpp"
#include "grscount/nrcauto.hpp"
#include "helpers.hpp"

using namespace grscount;

namespace {

Mobius random_mobius(const Field& f) {
    while (true) {
        const Mobius g{testutil::random_elem(f), testutil::random_elem(f), testutil::random_elem(f), testutil::random_elem(f)};
        if (f.sub(f.mul(g.alpha, g.delta), f.mul(g.beta, g.gamma)) != 0) return g;
    }
}

bool is_scalar(const Matrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if ((r == c && m(r, c) != m(0, 0)) || (r != c && m(r, c) != 0)) return false;
    return true;
}

}  // namespace

TEST_CASE("rho' in dimension 3 is the quadratic matrix") {
    for (unsigned q : {5u, 8u}) {
        const Field f = Field::of_order(q);
        const Elem two = f.from_integer(2);
        for (const auto& g : pgl2_elements(f)) {
            const Elem a = g.alpha, b = g.beta, c = g.gamma, d = g.delta;
            const Matrix expect(f, 3, 3,
                                {f.mul(a, a), f.mul(two, f.mul(a, b)), f.mul(b, b),
                                 f.mul(a, c), f.add(f.mul(a, d), f.mul(c, b)), f.mul(b, d),
                                 f.mul(c, c), f.mul(two, f.mul(c, d)), f.mul(d, d)});
            REQUIRE(rho_prime_matrix(f, g, 3) == expect);
            if (q == 8) {
                REQUIRE(rho_prime_matrix(f, g, 3)(0, 1) == 0);
                REQUIRE(rho_prime_matrix(f, g, 3)(2, 1) == 0);
            }
        }
    }
}

TEST_CASE("rho' of the identity") {
    const Field f = Field::of_order(7);
    for (std::size_t k = 2; k <= 7; ++k) CHECK(rho_prime(f, Mobius{}, k).m == Matrix::identity(f, k));
    CHECK_THROWS_AS(rho_prime(f, Mobius{}, 8), Error);
    try {
        rho_prime(f, Mobius{1, 1, 1, 1}, 3);
        FAIL("expected SingularG");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::SingularG);
    }
    CHECK_THROWS_AS(Mobius::make(f, 2, 4, 1, 2), Error);
}

TEST_CASE("equivariance, exhaustive over GL_2(5)") {
    const Field f = Field::of_order(5);
    std::size_t checks = 0;
    for (unsigned a = 0; a < 5; ++a)
        for (unsigned b = 0; b < 5; ++b)
            for (unsigned c = 0; c < 5; ++c)
                for (unsigned d = 0; d < 5; ++d) {
                    const Mobius g{Elem(a), Elem(b), Elem(c), Elem(d)};
                    if (f.sub(f.mul(g.alpha, g.delta), f.mul(g.beta, g.gamma)) == 0) continue;
                    for (const auto& t : projective_line(f))
                        for (std::size_t k : {3u, 4u}) {
                            REQUIRE(check_equivariance(f, g, k, t));
                            ++checks;
                        }
                }
    CHECK(checks == 480 * 6 * 2);
}

TEST_CASE("Mobius action conventions") {
    const Field f = Field::of_order(7);
    const Mobius swap{0, 1, 1, 0};
    CHECK(apply(f, swap, EvalPoint::finite(0)).is_infinity());
    for (std::size_t k : {3u, 4u, 5u}) {
        const auto img = rho_prime_matrix(f, swap, k) * std::span<const Elem>(nrc_column(f, k, EvalPoint::finite(0)));
        CHECK(ProjPoint::normalize(f, img) == nrc_point(f, k, EvalPoint::infinity()));
    }
    for (Elem c = 0; c < 7; ++c) CHECK(apply(f, Mobius{1, 0, c, 1}, EvalPoint::infinity()).is_infinity());
    // t -> (gamma + delta t) / (alpha + beta t)
    CHECK(apply(f, Mobius{1, 0, 3, 1}, EvalPoint::finite(2)) == EvalPoint::finite(5));
    CHECK(apply(f, Mobius{2, 0, 0, 1}, EvalPoint::finite(2)) == EvalPoint::finite(1));
}

TEST_CASE("group orders") {
    CHECK(group_order_G(Field::of_order(5)) == 480);
    CHECK(group_order_G(Field::of_order(2)) == 6);
    CHECK(group_order_G(Field::of_order(8)) == 3528);
    for (unsigned q : {2u, 3u, 4u, 5u}) {
        const Field f = Field::of_order(q);
        CHECK(pgl2_elements(f).size() == std::size_t(q + 1) * q * (q - 1));
        const auto all = materialize_G(f, 2);
        CHECK(all.size() == group_order_G(f));
        std::set<std::vector<Elem>> distinct;
        for (const auto& m : all) distinct.insert({m.entries().begin(), m.entries().end()});
        CHECK(distinct.size() == all.size());
    }
    CHECK_THROWS_AS(materialize_G(Field::of_order(11), 3), Error);
}

TEST_CASE("rho' is a homomorphism up to scalars") {
    for (unsigned q : {5u, 7u, 8u, 9u}) {
        const Field f = Field::of_order(q);
        for (std::size_t k : {3u, 4u, 5u}) {
            for (int i = 0; i < 1000; ++i) {
                const Mobius g = random_mobius(f), h = random_mobius(f);
                const Matrix lhs = rho_prime(f, compose(f, g, h), k).m;
                const Matrix rhs = projective_normalize(rho_prime(f, g, k).m * rho_prime(f, h, k).m);
                REQUIRE(lhs == rhs);
            }
        }
    }
}

TEST_CASE("rho' is injective on PGL_2") {
    for (unsigned q : {3u, 4u, 5u, 7u}) {
        const Field f = Field::of_order(q);
        for (const auto& g : pgl2_elements(f)) {
            const bool scalar_g = g.beta == 0 && g.gamma == 0 && g.alpha == g.delta;
            REQUIRE(is_scalar(rho_prime_matrix(f, g, 3)) == scalar_g);
        }
    }
}

TEST_CASE("rho'(g) permutes the curve") {
    for (unsigned q : {5u, 7u, 8u, 9u, 16u}) {
        const Field f = Field::of_order(q);
        for (std::size_t k : {3u, 4u}) {
            std::vector<ProjPoint> curve;
            for (const auto& t : projective_line(f)) curve.push_back(nrc_point(f, k, t));
            std::sort(curve.begin(), curve.end());
            for (int i = 0; i < 50; ++i) {
                const Matrix r = rho_prime_matrix(f, random_mobius(f), k);
                std::vector<ProjPoint> image;
                for (const auto& p : curve) image.push_back(ProjPoint::normalize(f, r * p.coords()));
                std::sort(image.begin(), image.end());
                REQUIRE(image == curve);
            }
        }
    }
}

TEST_CASE("trivial stabilizers") {
    const Field f5 = Field::of_order(5);
    const GrsParams p{2, {EvalPoint::finite(0), EvalPoint::finite(1), EvalPoint::finite(2), EvalPoint::infinity()}, {1, 1, 1, 1}};
    CHECK(stabilizer_is_trivial(f5, p));
    CHECK(stabilizer_is_trivial(f5, testutil::random_grs(f5, 3, 5)));
    CHECK(stabilizer_is_trivial(f5, testutil::random_grs(f5, 2, 3)));
    CHECK(stabilizer_is_trivial(Field::of_order(11), testutil::random_grs(Field::of_order(11), 3, 6), 7, 2000));
    try {
        stabilizer_is_trivial(f5, GrsParams{2, {EvalPoint::finite(0), EvalPoint::infinity()}, {1, 1}});
        FAIL("expected PreconditionViolated");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::PreconditionViolated);
    }
}
