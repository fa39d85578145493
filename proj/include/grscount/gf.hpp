/**************************************************************************
 * gf.hpp
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
#include <memory>
#include <span>
#include <vector>

namespace grscount {

/// Element of GF(q), stored as its index in [0, q). The index is the
/// integer sum c_i p^i of the coefficients of the element written as a
/// polynomial over GF(p) modulo the field's fixed modulus.
using Elem = std::uint8_t;

/**
 * Table-driven arithmetic in GF(p^e) for q = p^e <= 256.
 *
 * The object is immutable once built and cheap to copy (the tables are
 * shared), so it can be handed to any number of worker threads. Fields of
 * degree e > 1 use a fixed modulus so that every canonical form built on
 * top of them is reproducible byte for byte:
 *
 *   GF(4): x^2+x+1   GF(8): x^3+x+1   GF(9): x^2+1   GF(16): x^4+x+1
 *
 * Other extension fields need an explicit modulus.
 */
class Field {
   public:
    /// Field with the fixed modulus for (p, e).
    static Field create(unsigned p, unsigned e);
    /// Field with a caller-chosen monic irreducible modulus, coefficients
    /// listed from the constant term up (length e+1).
    static Field create(unsigned p, unsigned e, std::vector<unsigned> modulus);
    /// Factor q as p^e and build the field with the fixed modulus.
    static Field of_order(unsigned q);

    unsigned order() const noexcept { return t_->q; }
    unsigned characteristic() const noexcept { return t_->p; }
    unsigned degree() const noexcept { return t_->e; }
    const std::vector<unsigned>& modulus() const noexcept { return t_->modulus; }

    Elem add(Elem a, Elem b) const noexcept { return t_->add[idx(a, b)]; }
    Elem sub(Elem a, Elem b) const noexcept { return t_->add[idx(a, t_->neg[b])]; }
    Elem neg(Elem a) const noexcept { return t_->neg[a]; }
    Elem mul(Elem a, Elem b) const noexcept { return t_->mul[idx(a, b)]; }
    /// Multiplicative inverse; inv(0) is 0 by convention, callers check.
    Elem inv(Elem a) const noexcept { return t_->inv[a]; }
    Elem div(Elem a, Elem b) const noexcept { return mul(a, inv(b)); }
    Elem pow(Elem a, unsigned long long n) const noexcept;
    Elem frobenius(Elem a) const noexcept { return pow(a, t_->p); }
    /// Image of the integer n under Z -> GF(p) -> GF(q).
    Elem from_integer(long long n) const noexcept;

    std::span<const Elem> add_table() const noexcept { return t_->add; }
    std::span<const Elem> mul_table() const noexcept { return t_->mul; }
    std::span<const Elem> inv_table() const noexcept { return t_->inv; }
    std::span<const Elem> neg_table() const noexcept { return t_->neg; }

    bool operator==(const Field& other) const noexcept {
        return t_ == other.t_ || (t_->p == other.t_->p && t_->e == other.t_->e &&
                                  t_->modulus == other.t_->modulus);
    }

   private:
    struct Tables {
        unsigned q = 0, p = 0, e = 0;
        std::vector<unsigned> modulus;
        std::vector<Elem> add, mul, inv, neg;
    };

    explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
    std::size_t idx(Elem a, Elem b) const noexcept { return std::size_t(a) * t_->q + b; }

    std::shared_ptr<const Tables> t_;
};

/// Every x in GF(q) with a x^2 + b x + c = 0, found by scanning the field
/// in index order. (a, b, c) must not all be zero.
std::vector<Elem> roots_of_quadratic(const Field& f, Elem a, Elem b, Elem c);

/// True when n is prime.
bool is_prime(unsigned n) noexcept;

}  // namespace grscount
