/**************************************************************************
 * formulas.cpp
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

#include "grscount/formulas.hpp"

#include <sstream>
#include <string>

#include "grscount/error.hpp"
#include "grscount/gf.hpp"

namespace grscount {

QPolynomial::QPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

QPolynomial QPolynomial::linear(long c) { return QPolynomial({Rational(-c), Rational(1)}); }

QPolynomial QPolynomial::constant(const Rational& c) { return QPolynomial({c}); }

void QPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational QPolynomial::coeff(long power) const {
    if (power < 0 || power > degree()) return 0;
    return coeffs_[std::size_t(power)];
}

Rational QPolynomial::evaluate(const Rational& q) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
    return acc;
}

BigInt QPolynomial::evaluate_integer(long q) const {
    const Rational v = evaluate(Rational(q));
    if (v.get_den() != 1) throw Error(Errc::InvalidArgument, "polynomial value is not an integer");
    return v.get_num();
}

QPolynomial QPolynomial::operator+(const QPolynomial& o) const {
    std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::operator-(const QPolynomial& o) const {
    std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
    return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::operator*(const QPolynomial& o) const {
    if (coeffs_.empty() || o.coeffs_.empty()) return {};
    std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::pow(unsigned e) const {
    QPolynomial r = constant(1);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

std::string QPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[std::size_t(i)];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        if (mag != 1 || i == 0) os << mag.get_str();
        if (i > 0) os << (mag != 1 ? "*q" : "q");
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(unsigned n, unsigned k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

namespace {

BigInt ipow(long base, unsigned e) {
    BigInt r;
    mpz_class b(base);
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

// (q-2)(q-3)...(q-n+2)
BigInt falling_tail(unsigned n, unsigned q) {
    BigInt r = 1;
    for (unsigned i = 2; i + 2 <= n; ++i) r *= long(q) - long(i);
    return r;
}

bool is_power_of(unsigned q, unsigned p) {
    if (q < p) return false;
    while (q % p == 0) q /= p;
    return q == 1;
}

unsigned count_roots(unsigned q, long b, long c) {
    const Field f = Field::of_order(q);
    return unsigned(roots_of_quadratic(f, 1, f.from_integer(b), f.from_integer(c)).size());
}

QPolynomial from_ints(std::initializer_list<long> high_to_low) {
    std::vector<Rational> c(high_to_low.size());
    std::size_t i = high_to_low.size();
    for (long v : high_to_low) c[--i] = v;
    return QPolynomial(std::move(c));
}

QPolynomial q_minus(long c) { return QPolynomial::linear(c); }

}  // namespace

BigInt gamma_grs(unsigned k, unsigned n, unsigned q) {
    if (k + 2 < 4 || k + 2 > n || n > q + 1)
        throw Error(Errc::OutOfRange, "gamma_grs needs 4 <= k+2 <= n <= q+1, got k=" + std::to_string(k) +
                                          " n=" + std::to_string(n) + " q=" + std::to_string(q));
    return ipow(long(q) - 1, n - 1) * falling_tail(n, q);
}

BigInt gamma_grs_hyper(unsigned q) {
    if (q == 2) throw Error(Errc::Unsupported, "q = 2 has no hyperconic count");
    if (!is_power_of(q, 2)) throw Error(Errc::NotPowerOfTwo, "q = " + std::to_string(q) + " is not a power of 2");
    const BigInt base = ipow(long(q) - 1, q + 1) * factorial(q - 2);
    return q == 4 ? base : BigInt(q + 2) * base;
}

unsigned helper_a(unsigned q) { return is_power_of(q, 2) ? 1 : 0; }
unsigned helper_b(unsigned q) { return count_roots(q, 1, 1); }
unsigned helper_c(unsigned q) { return is_power_of(q, 3) ? 1 : 0; }
unsigned helper_d(unsigned q) { return count_roots(q, 1, -1); }
unsigned helper_e(unsigned q) { return count_roots(q, 0, 1); }

QPolynomial mds3_polynomial_part(unsigned n) {
    switch (n) {
        case 6:
            return q_minus(1).pow(5) * q_minus(2) * q_minus(3) * from_ints({1, -9, 21});
        case 7:
            return q_minus(1).pow(6) * q_minus(3) * q_minus(5) * from_ints({1, -20, 148, -468, 498});
        case 8:
            return q_minus(1).pow(7) * q_minus(5) *
                   from_ints({1, -43, 788, -7937, 47097, -162834, 299280, -222960});
        case 9:
            return q_minus(1).pow(8) * from_ints({1, -75, 2530, -50466, 657739, -5835825, 35563770, -146288034,
                                                  386490120, -588513120, 389442480});
        default:
            throw Error(Errc::UnsupportedLength, "closed MDS formula exists for n in 6..9, got " + std::to_string(n));
    }
}

BigInt gamma_mds3(unsigned n, unsigned q) {
    const BigInt poly = mds3_polynomial_part(n).evaluate_integer(long(q));
    if (n == 6) return poly;

    const long Q = long(q);
    const long a = helper_a(q);
    BigInt extra;
    if (n == 7) {
        extra = -30 * a;
    } else if (n == 8) {
        extra = BigInt(-240) * (Q * Q - 20 * Q + 78) * a + 840 * long(helper_b(q));
    } else {
        const BigInt quartic = ((((BigInt(Q) - 47) * Q + 807) * Q - 5921) * Q + 15134);
        extra = BigInt(-1080) * quartic * a + BigInt(840) * (9 * Q * Q - 243 * Q + 1684) * long(helper_b(q)) +
                BigInt(30240) * (-9 * long(helper_c(q)) + 9 * long(helper_d(q)) + 2 * long(helper_e(q)));
    }
    return poly + ipow(Q - 1, n - 1) * extra;
}

BigInt s_kn_size(unsigned k, unsigned n, unsigned q) {
    if (n > q + 1 || n < 3 || k < 1 || k > n)
        throw Error(Errc::OutOfRange, "s_kn_size needs 1 <= k <= n, 3 <= n <= q+1");
    return BigInt(q + 1) * q * (q - 1) * falling_tail(n, q) * ipow(long(q) - 1, n);
}

QPolynomial grs_expansion(unsigned n) {
    if (n < 4) throw Error(Errc::OutOfRange, "grs_expansion needs n >= 4");
    QPolynomial p = q_minus(1).pow(n - 1);
    for (unsigned i = 2; i + 2 <= n; ++i) p = p * q_minus(long(i));
    return p;
}

AsymptoticParams asymptotic_params(unsigned k, unsigned n) {
    if (k < 1 || k >= n) throw Error(Errc::OutOfRange, "asymptotic_params needs 1 <= k < n");
    AsymptoticParams s{k, n, long(k) * long(n - k), binomial(n, k), 0};
    const Rational N(s.N);
    const long K = k, Nn = n;
    s.a2 = N * Rational(K * (Nn - K)) * Rational(K * K - Nn * K + Nn + 3, 2 * (K + 1) * (Nn - K + 1)) +
           N * N / 2 - Rational(5) * N / 2 + 2;
    s.a2.canonicalize();
    return s;
}

std::vector<CoefficientCheck> asymptotic_grs_checks(unsigned n) {
    if (n < 6) throw Error(Errc::OutOfRange, "asymptotic_grs_checks needs n >= 6");
    const QPolynomial p = grs_expansion(n);
    const long N = n, top = 2 * N - 4;
    std::vector<CoefficientCheck> out;
    out.push_back({top, Rational(1), p.coeff(top)});
    out.push_back({top - 1, Rational(-(N - 2) * (N + 1), 2), p.coeff(top - 1)});
    out.push_back({top - 2, Rational((N - 2) * (3 * N * N * N - 4 * N * N + N - 24), 24), p.coeff(top - 2)});
    out.push_back({top - 3,
                   Rational(-(N - 2) * (N - 3) * (N * N * N * N - 2 * N * N * N + 7 * N * N - 14 * N - 16), 48),
                   p.coeff(top - 3)});
    for (auto& c : out) c.expected.canonicalize();
    return out;
}

bool check_asymptotic_grs(unsigned n) {
    for (const auto& c : asymptotic_grs_checks(n))
        if (!c.match()) return false;
    return true;
}

std::vector<CoefficientCheck> asymptotic_mds3_checks(unsigned n) {
    const QPolynomial p = mds3_polynomial_part(n);
    const AsymptoticParams s = asymptotic_params(3, n);
    return {{s.delta, Rational(1), p.coeff(s.delta)},
            {s.delta - 1, Rational(1 - s.N), p.coeff(s.delta - 1)},
            {s.delta - 2, s.a2, p.coeff(s.delta - 2)}};
}

bool check_asymptotic_mds3(unsigned n) {
    for (const auto& c : asymptotic_mds3_checks(n))
        if (!c.match()) return false;
    return true;
}

}  // namespace grscount
