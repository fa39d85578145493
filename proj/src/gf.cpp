/**************************************************************************
 * gf.cpp
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

#include "grscount/gf.hpp"

#include <string>

#include "grscount/error.hpp"

namespace grscount {

namespace {

using Poly = std::vector<unsigned>;  // coefficients over GF(p), constant first

Poly digits(unsigned index, unsigned p, unsigned e) {
    Poly c(e, 0);
    for (unsigned i = 0; i < e; ++i) {
        c[i] = index % p;
        index /= p;
    }
    return c;
}

unsigned from_digits(const Poly& c, unsigned p) {
    unsigned v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * p + *it;
    return v;
}

unsigned inv_mod(unsigned a, unsigned p) {
    for (unsigned x = 1; x < p; ++x)
        if (a * x % p == 1) return x;
    return 0;
}

// Remainder of a modulo m over GF(p); m need not be monic.
Poly poly_rem(Poly a, const Poly& m, unsigned p) {
    const std::size_t dm = m.size() - 1;
    const unsigned lead_inv = inv_mod(m.back(), p);
    for (std::size_t i = a.size(); i-- > dm;) {
        if (a[i] == 0) continue;
        const unsigned factor = a[i] * lead_inv % p;
        for (std::size_t j = 0; j <= dm; ++j)
            a[i - dm + j] = (a[i - dm + j] + p * p - factor * m[j] % p) % p;
    }
    a.resize(dm);
    return a;
}

bool is_irreducible(const Poly& m, unsigned p) {
    const unsigned e = unsigned(m.size() - 1);
    // Trial division by every monic polynomial of degree 1..e/2.
    for (unsigned d = 1; 2 * d <= e; ++d) {
        unsigned count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (unsigned low = 0; low < count; ++low) {
            Poly divisor = digits(low, p, d);
            divisor.push_back(1);
            Poly r = poly_rem(m, divisor, p);
            bool zero = true;
            for (unsigned c : r) zero = zero && c == 0;
            if (zero) return false;
        }
    }
    return true;
}

Poly fixed_modulus(unsigned p, unsigned e) {
    if (e == 1) return {0, 1};
    if (p == 2 && e == 2) return {1, 1, 1};
    if (p == 2 && e == 3) return {1, 1, 0, 1};
    if (p == 3 && e == 2) return {1, 0, 1};
    if (p == 2 && e == 4) return {1, 1, 0, 0, 1};
    throw Error(Errc::NoFixedModulus, "no fixed modulus for GF(" + std::to_string(p) + "^" +
                                          std::to_string(e) + "); supply one");
}

}  // namespace

bool is_prime(unsigned n) noexcept {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::create(unsigned p, unsigned e) {
    if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (e == 0) throw Error(Errc::Unsupported, "extension degree must be positive");
    unsigned long long q = 1;
    for (unsigned i = 0; i < e && q <= 256; ++i) q *= p;
    if (q > 256) throw Error(Errc::Unsupported, "field order exceeds 256");
    return create(p, e, fixed_modulus(p, e));
}

Field Field::create(unsigned p, unsigned e, std::vector<unsigned> modulus) {
    if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (e == 0) throw Error(Errc::Unsupported, "extension degree must be positive");
    unsigned long long q = 1;
    for (unsigned i = 0; i < e; ++i) {
        q *= p;
        if (q > 256) throw Error(Errc::Unsupported, "field order exceeds 256");
    }
    if (modulus.size() != e + 1 || modulus.back() != 1)
        throw Error(Errc::InvalidArgument, "modulus must be monic of degree e");
    for (unsigned c : modulus)
        if (c >= p) throw Error(Errc::InvalidArgument, "modulus coefficient out of range");
    if (e > 1 && !is_irreducible(modulus, p))
        throw Error(Errc::ReducibleModulus, "modulus is reducible over GF(p)");

    auto t = std::make_shared<Tables>();
    t->q = unsigned(q);
    t->p = p;
    t->e = e;
    t->modulus = std::move(modulus);
    const unsigned n = t->q;
    t->add.resize(std::size_t(n) * n);
    t->mul.resize(std::size_t(n) * n);
    t->inv.assign(n, 0);
    t->neg.resize(n);

    std::vector<Poly> polys(n);
    for (unsigned a = 0; a < n; ++a) polys[a] = digits(a, p, e);

    for (unsigned a = 0; a < n; ++a) {
        Poly na(e);
        for (unsigned i = 0; i < e; ++i) na[i] = (p - polys[a][i]) % p;
        t->neg[a] = Elem(from_digits(na, p));
        for (unsigned b = 0; b < n; ++b) {
            Poly s(e);
            for (unsigned i = 0; i < e; ++i) s[i] = (polys[a][i] + polys[b][i]) % p;
            t->add[std::size_t(a) * n + b] = Elem(from_digits(s, p));

            Poly prod(2 * e - 1, 0);
            for (unsigned i = 0; i < e; ++i)
                for (unsigned j = 0; j < e; ++j)
                    prod[i + j] = (prod[i + j] + polys[a][i] * polys[b][j]) % p;
            t->mul[std::size_t(a) * n + b] = Elem(from_digits(poly_rem(prod, t->modulus, p), p));
        }
    }
    for (unsigned a = 1; a < n; ++a)
        for (unsigned b = 1; b < n; ++b)
            if (t->mul[std::size_t(a) * n + b] == 1) {
                t->inv[a] = Elem(b);
                break;
            }
    return Field(std::move(t));
}

Field Field::of_order(unsigned q) {
    if (q < 2) throw Error(Errc::InvalidArgument, "field order must be at least 2");
    unsigned p = 2;
    while (q % p != 0) ++p;
    unsigned e = 0, rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1) throw Error(Errc::NotPrime, std::to_string(q) + " is not a prime power");
    return create(p, e);
}

Elem Field::pow(Elem a, unsigned long long n) const noexcept {
    Elem result = 1, base = a;
    while (n) {
        if (n & 1) result = mul(result, base);
        base = mul(base, base);
        n >>= 1;
    }
    return result;
}

Elem Field::from_integer(long long n) const noexcept {
    const long long p = t_->p;
    return Elem(((n % p) + p) % p);
}

std::vector<Elem> roots_of_quadratic(const Field& f, Elem a, Elem b, Elem c) {
    if (a == 0 && b == 0 && c == 0)
        throw Error(Errc::InvalidArgument, "zero polynomial has every element as a root");
    std::vector<Elem> roots;
    for (unsigned x = 0; x < f.order(); ++x) {
        const Elem e = Elem(x);
        if (f.add(f.add(f.mul(a, f.mul(e, e)), f.mul(b, e)), c) == 0) roots.push_back(e);
    }
    return roots;
}

const char* errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::NotPrime: return "NotPrime";
        case Errc::Unsupported: return "Unsupported";
        case Errc::NoFixedModulus: return "NoFixedModulus";
        case Errc::ReducibleModulus: return "ReducibleModulus";
        case Errc::BadDimension: return "BadDimension";
        case Errc::NotFullRank: return "NotFullRank";
        case Errc::DegeneratePosition: return "DegeneratePosition";
        case Errc::RankDeficient: return "RankDeficient";
        case Errc::OddCharacteristic: return "OddCharacteristic";
        case Errc::Degenerate: return "Degenerate";
        case Errc::TooLarge: return "TooLarge";
        case Errc::DuplicateEvalPoint: return "DuplicateEvalPoint";
        case Errc::ZeroMultiplier: return "ZeroMultiplier";
        case Errc::NotGeneralPosition: return "NotGeneralPosition";
        case Errc::DimensionDrop: return "DimensionDrop";
        case Errc::NotMds: return "NotMds";
        case Errc::TooShort: return "TooShort";
        case Errc::SingularG: return "SingularG";
        case Errc::OutOfRange: return "OutOfRange";
        case Errc::PreconditionViolated: return "PreconditionViolated";
        case Errc::NotPowerOfTwo: return "NotPowerOfTwo";
        case Errc::UnsupportedLength: return "UnsupportedLength";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::UnknownCommand: return "UnknownCommand";
    }
    return "Unknown";
}

}  // namespace grscount
