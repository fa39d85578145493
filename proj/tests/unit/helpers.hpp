/**************************************************************************
 * helpers.hpp
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

#include <algorithm>
#include <random>
#include <vector>

#include "grscount/gf.hpp"
#include "grscount/grs.hpp"
#include "grscount/linalg.hpp"

namespace testutil {

using namespace grscount;

inline std::mt19937_64& rng() {
    static std::mt19937_64 r(20261017);
    return r;
}

inline Elem random_elem(const Field& f) { return Elem(std::uniform_int_distribution<unsigned>(0, f.order() - 1)(rng())); }
inline Elem random_nonzero(const Field& f) { return Elem(std::uniform_int_distribution<unsigned>(1, f.order() - 1)(rng())); }

inline Matrix random_matrix(const Field& f, std::size_t r, std::size_t c) {
    Matrix m(f, r, c);
    for (auto& e : m.entries()) e = random_elem(f);
    return m;
}

inline Matrix random_invertible(const Field& f, std::size_t n) {
    while (true) {
        Matrix m = random_matrix(f, n, n);
        if (rank(m) == n) return m;
    }
}

/// Random valid GrsParams with n distinct evaluation points.
inline GrsParams random_grs(const Field& f, std::size_t k, std::size_t n) {
    auto line = projective_line(f);
    std::shuffle(line.begin(), line.end(), rng());
    GrsParams p{k, {line.begin(), line.begin() + std::ptrdiff_t(n)}, {}};
    for (std::size_t i = 0; i < n; ++i) p.d.push_back(random_nonzero(f));
    return p;
}

/// Fields exercised by exhaustive property tests.
inline std::vector<unsigned> small_orders() { return {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}; }

}  // namespace testutil
