/**************************************************************************
 * formulas.hpp
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

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace grscount {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Polynomial in q with exact rational coefficients (index = power of q).
class QPolynomial {
   public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<Rational> coeffs);
    /// The polynomial q - c.
    static QPolynomial linear(long c);
    static QPolynomial constant(const Rational& c);

    /// -1 for the zero polynomial.
    long degree() const noexcept { return long(coeffs_.size()) - 1; }
    /// Coefficient of q^power (zero past the degree).
    Rational coeff(long power) const;
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    Rational evaluate(const Rational& q) const;
    BigInt evaluate_integer(long q) const;  ///< throws if the value is not an integer

    QPolynomial operator+(const QPolynomial& o) const;
    QPolynomial operator-(const QPolynomial& o) const;
    QPolynomial operator*(const QPolynomial& o) const;
    QPolynomial pow(unsigned e) const;

    bool operator==(const QPolynomial& o) const { return coeffs_ == o.coeffs_; }
    std::string to_string() const;

   private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Number of [n, k] GRS codes over GF(q): (q-1)^{n-1} (q-2) ... (q-n+2),
/// for 4 <= k+2 <= n <= q+1.
BigInt gamma_grs(unsigned k, unsigned n, unsigned q);

/// Number of [q+2, 3] GRS codes for q = 2^e: (q+2)(q-1)^{q+1}(q-2)! for
/// e >= 3 and (q-1)^{q+1}(q-2)! = 486 for q = 4.
BigInt gamma_grs_hyper(unsigned q);

/// Indicator and root-count functions from the dimension-3 MDS formulas.
/// b, d, e count roots in GF(q) by scanning (q must be a supported order).
unsigned helper_a(unsigned q);  ///< q a power of 2
unsigned helper_b(unsigned q);  ///< #{x : x^2 + x + 1 = 0}
unsigned helper_c(unsigned q);  ///< q a power of 3
unsigned helper_d(unsigned q);  ///< #{x : x^2 + x - 1 = 0}
unsigned helper_e(unsigned q);  ///< #{x : x^2 + 1 = 0}

/// Number of [n, 3] MDS codes over GF(q), n in {6, 7, 8, 9}.
BigInt gamma_mds3(unsigned n, unsigned q);

/// Part of the gamma_mds3 closed formula that does not involve a..e.
QPolynomial mds3_polynomial_part(unsigned n);

/// |S_{k,n}(GF(q))| = (q+1) q (q-1) [(q-2)...(q-n+2)] (q-1)^n.
BigInt s_kn_size(unsigned k, unsigned n, unsigned q);

/// (q-1)^{n-1} (q-2) ... (q-n+2) expanded; n >= 4.
QPolynomial grs_expansion(unsigned n);

/// Parameters of the three-term MDS asymptotic.
struct AsymptoticParams {
    unsigned k, n;
    long delta;  ///< k(n-k)
    BigInt N;    ///< binomial(n, k)
    Rational a2;
};
AsymptoticParams asymptotic_params(unsigned k, unsigned n);

struct CoefficientCheck {
    long power;
    Rational expected;  ///< from the closed coefficient formula
    Rational observed;  ///< from the exact expansion
    bool match() const { return expected == observed; }
};

/// Top four coefficients of grs_expansion(n) against their closed forms.
std::vector<CoefficientCheck> asymptotic_grs_checks(unsigned n);
bool check_asymptotic_grs(unsigned n);

/// Top three coefficients of the n-point MDS polynomial part against
/// 1, 1 - N and a2 (k = 3).
std::vector<CoefficientCheck> asymptotic_mds3_checks(unsigned n);
bool check_asymptotic_mds3(unsigned n);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

}  // namespace grscount
