/**************************************************************************
 * test_linalg.cpp
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
#include <numeric>

#include "grscount/error.hpp"
#include "grscount/grs.hpp"
#include "grscount/linalg.hpp"
#include "helpers.hpp"

using namespace grscount;
using testutil::random_invertible;
using testutil::random_matrix;

namespace {

// Leibniz expansion over all permutations.
Elem leibniz(const Matrix& m) {
    const Field& f = m.field();
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Elem det = 0;
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        Elem term = 1;
        for (std::size_t i = 0; i < n; ++i) term = f.mul(term, m(i, perm[i]));
        det = inversions % 2 ? f.sub(det, term) : f.add(det, term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

bool all_maximal_minors_nonzero(const Matrix& g) {
    const std::size_t k = g.rows();
    return for_each_subset(g.cols(), k, [&](std::span<const std::size_t> idx) {
        return leibniz(g.select_columns(std::vector<std::size_t>(idx.begin(), idx.end()))) != 0;
    });
}

}  // namespace

TEST_CASE("rref basics") {
    const Field f = Field::of_order(5);
    const Matrix id = Matrix::identity(f, 3);
    const auto r = rref(id);
    CHECK(r.form == id);
    CHECK(r.rank == 3);

    const Matrix prop(f, 2, 4, {1, 2, 3, 4, 2, 4, 1, 3});
    const auto rp = rref(prop);
    CHECK(rp.rank == 1);
    CHECK(rp.form.row(0) == std::vector<Elem>{1, 2, 3, 4});
    CHECK(rp.form.row(1) == std::vector<Elem>{0, 0, 0, 0});
    CHECK(rp.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("rref is idempotent") {
    for (unsigned q : {2u, 5u, 8u, 9u}) {
        const Field f = Field::of_order(q);
        for (int i = 0; i < 50; ++i) {
            const Matrix m = random_matrix(f, 3, 6);
            const auto once = rref(m);
            CHECK(rref(once.form).form == once.form);
        }
    }
}

TEST_CASE("code key is invariant under row operations") {
    for (unsigned q : {3u, 7u, 8u, 16u}) {
        const Field f = Field::of_order(q);
        const Matrix g = grs_generator(f, testutil::random_grs(f, 3, std::min(7u, q + 1)));
        const CodeKey key = CodeKey::from_generator(g);
        for (int i = 0; i < 100; ++i) CHECK(CodeKey::from_generator(random_invertible(f, 3) * g) == key);
        const Matrix other = grs_generator(f, testutil::random_grs(f, 3, std::min(7u, q + 1)));
        if (rref(other).form != rref(g).form) CHECK_FALSE(CodeKey::from_generator(other) == key);
    }
}

TEST_CASE("code key round trip") {
    const Field f = Field::of_order(7);
    const Matrix g = random_invertible(f, 3) * grs_generator(f, testutil::random_grs(f, 3, 6));
    const CodeKey key = CodeKey::from_generator(g);
    CHECK(key.k() == 3);
    CHECK(key.n() == 6);
    CHECK(key.bytes().size() == 18);
    CHECK(key.generator(f) == rref(g).form);
    CHECK_THROWS_AS(CodeKey::from_generator(Matrix(f, 2, 3, {1, 1, 1, 2, 2, 2})), Error);
}

TEST_CASE("determinant and inverse") {
    for (unsigned q : {2u, 5u, 9u}) {
        const Field f = Field::of_order(q);
        for (int i = 0; i < 40; ++i) {
            const Matrix m = random_matrix(f, 4, 4);
            CHECK(determinant(m) == leibniz(m));
            const auto inv = inverse(m);
            CHECK(inv.has_value() == (leibniz(m) != 0));
            if (inv) CHECK(*inv * m == Matrix::identity(f, 4));
        }
    }
}

TEST_CASE("is_mds examples") {
    const Field f5 = Field::of_order(5);
    GrsParams p{3, {}, {1, 1, 1, 1, 1, 1}};
    for (unsigned t = 0; t < 5; ++t) p.t.push_back(EvalPoint::finite(Elem(t)));
    p.t.push_back(EvalPoint::infinity());
    CHECK(is_mds(grs_generator(f5, p)));

    CHECK_FALSE(is_mds(Matrix(f5, 2, 3, {1, 0, 1, 0, 1, 0})));

    const Field f7 = Field::of_order(7);
    Matrix ones(f7, 3, 6);
    for (std::size_t r = 0; r < 3; ++r) {
        ones(r, r) = 1;
        for (std::size_t c = 3; c < 6; ++c) ones(r, c) = 1;
    }
    CHECK_FALSE(is_mds(ones));

    try {
        is_mds(Matrix(f7, 2, 3, {1, 1, 1, 2, 2, 2}));
        FAIL("expected NotFullRank");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotFullRank);
    }
}

TEST_CASE("is_mds agrees with every maximal minor") {
    for (unsigned q : {4u, 5u, 7u}) {
        const Field f = Field::of_order(q);
        for (int i = 0; i < 200; ++i) {
            const Matrix g = random_matrix(f, 3, 5);
            if (rank(g) < 3) continue;
            CHECK(is_mds(g) == all_maximal_minors_nonzero(g));
        }
    }
}

TEST_CASE("null space") {
    const Field f = Field::of_order(7);
    // [I | B] -> [-B^T | I]
    Matrix g(f, 2, 5, {1, 0, 3, 4, 5, 0, 1, 6, 1, 2});
    const Matrix h = null_space_basis(g);
    Matrix expect(f, 3, 5);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 2; ++j) expect(i, j) = f.neg(g(j, 2 + i));
        expect(i, 2 + i) = 1;
    }
    CHECK(CodeKey::from_generator(h) == CodeKey::from_generator(expect));

    const Field f8 = Field::of_order(8);
    for (int i = 0; i < 30; ++i) {
        const Matrix m = random_matrix(f8, 3, 6);
        if (rank(m) < 3) continue;
        const Matrix basis = null_space_basis(m);
        CHECK(basis.rows() == 3);
        CHECK(rank(basis) == 3);
        CHECK((m * basis.transpose()).is_zero());
    }
    CHECK_THROWS_AS(null_space_basis(Matrix(f, 2, 3, {1, 1, 1, 2, 2, 2})), Error);
    CHECK(kernel(Matrix(f, 2, 3, {1, 1, 1, 2, 2, 2})).rows() == 2);
}

TEST_CASE("the dual of an MDS code is MDS") {
    for (unsigned q : {5u, 8u, 9u}) {
        const Field f = Field::of_order(q);
        for (int i = 0; i < 30; ++i) {
            const Matrix g = random_invertible(f, 3) * grs_generator(f, testutil::random_grs(f, 3, std::min(7u, q + 1)));
            CHECK(is_mds(g));
            CHECK(is_mds(null_space_basis(g)));
        }
        for (int i = 0; i < 30; ++i) {
            const Matrix g = random_matrix(f, 3, 6);
            if (rank(g) < 3) continue;
            CHECK(is_mds(g) == is_mds(null_space_basis(g)));
        }
    }
}

TEST_CASE("subset walk") {
    std::size_t count = 0;
    std::vector<std::size_t> first, last;
    for_each_subset(7, 3, [&](std::span<const std::size_t> s) {
        if (count == 0) first.assign(s.begin(), s.end());
        last.assign(s.begin(), s.end());
        ++count;
        return true;
    });
    CHECK(count == 35);
    CHECK(first == std::vector<std::size_t>{0, 1, 2});
    CHECK(last == std::vector<std::size_t>{4, 5, 6});
    CHECK_FALSE(for_each_subset(5, 2, [](std::span<const std::size_t>) { return false; }));
}
