/**************************************************************************
 * nrcauto.hpp
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
#include <vector>

#include "grscount/geom.hpp"
#include "grscount/grs.hpp"
#include "grscount/linalg.hpp"

namespace grscount {

/// g = (alpha beta; gamma delta), invertible, acting on P^1 by
/// t -> (gamma + delta t) / (alpha + beta t).
struct Mobius {
    Elem alpha = 1, beta = 0, gamma = 0, delta = 1;

    /// Throws Errc::SingularG when alpha delta - beta gamma = 0.
    static Mobius make(const Field& f, Elem alpha, Elem beta, Elem gamma, Elem delta);
    friend bool operator==(const Mobius&, const Mobius&) = default;
};

/// Image of t under g, with [x, y] -> [alpha x + beta y, gamma x + delta y]
/// on homogeneous coordinates (t = y / x).
EvalPoint apply(const Field& f, const Mobius& g, EvalPoint t);

/// g * h as 2 x 2 matrices.
Mobius compose(const Field& f, const Mobius& g, const Mobius& h);

/// Representatives of PGL_2(q): first nonzero entry of (alpha, beta, gamma,
/// delta) equal to 1.
std::vector<Mobius> pgl2_elements(const Field& f);

/// k x k matrix representing rho'([g]), normalized so its first nonzero
/// entry is 1.
struct RhoImage {
    std::size_t k;
    Matrix m;
};

/// Scale m so its first nonzero entry is 1 (projective representative).
Matrix projective_normalize(const Matrix& m);

/**
 * rho'([g]) = rho(g^T)^T where rho is the (k-1)-th symmetric power
 * representation. Entry (i, j) is the coefficient of x^j in
 * (alpha + beta x)^{k-1-i} (gamma + delta x)^i, expanded in the field, so
 * binomial coefficients are reduced in the characteristic automatically.
 * For k = 3:
 *   [[a^2, 2ab, b^2], [ac, ad + bc, bd], [c^2, 2cd, d^2]].
 */
RhoImage rho_prime(const Field& f, const Mobius& g, std::size_t k);

/// Unnormalized rho(g^T)^T (an honest homomorphism GL_2 -> GL_k).
Matrix rho_prime_matrix(const Field& f, const Mobius& g, std::size_t k);

/// rho'(g) * eps_k(t) is projectively equal to eps_k(g . t).
bool check_equivariance(const Field& f, const Mobius& g, std::size_t k, EvalPoint t);

/// |G| = |PGL_2(q)| * |GF(q)^x| = (q+1) q (q-1)^2.
std::uint64_t group_order_G(const Field& f);

/// Every element lambda * rho'(g) of G (k x k matrices), for q <= 9.
std::vector<Matrix> materialize_G(const Field& f, std::size_t k);

/**
 * True iff the identity is the only element of G with R G_k(t, d) =
 * G_k(t, d). Exhaustive over G for q <= 9; for larger q the check runs over
 * `samples` random elements drawn with `seed`. Requires n >= 3.
 */
bool stabilizer_is_trivial(const Field& f, const GrsParams& p, std::uint64_t seed = 1,
                           std::size_t samples = 20000);

}  // namespace grscount
