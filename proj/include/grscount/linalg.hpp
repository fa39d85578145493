/**************************************************************************
 * linalg.hpp
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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "grscount/gf.hpp"

namespace grscount {

/// Dense row-major matrix over GF(q).
class Matrix {
   public:
    Matrix(const Field& f, std::size_t rows, std::size_t cols);
    Matrix(const Field& f, std::size_t rows, std::size_t cols, std::vector<Elem> entries);
    static Matrix identity(const Field& f, std::size_t n);
    /// Matrix whose columns are the given vectors (all of equal length).
    static Matrix from_columns(const Field& f, std::span<const std::vector<Elem>> columns);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Elem operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    Elem& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    std::span<const Elem> entries() const noexcept { return data_; }
    std::span<Elem> entries() noexcept { return data_; }

    std::vector<Elem> column(std::size_t c) const;
    std::vector<Elem> row(std::size_t r) const;
    Matrix select_columns(std::span<const std::size_t> cols) const;
    Matrix transpose() const;
    Matrix scaled(Elem s) const;

    Matrix operator*(const Matrix& rhs) const;
    std::vector<Elem> operator*(std::span<const Elem> v) const;

    bool is_zero() const noexcept;

    friend bool operator==(const Matrix& a, const Matrix& b) noexcept {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

   private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Elem> data_;
};

/// Reduce rows x cols row-major storage to reduced row echelon form in
/// place. Returns the rank; pivot columns are appended to `pivots` when
/// given. This is the hot path used by the enumeration engines.
std::size_t rref_inplace(const Field& f, std::span<Elem> data, std::size_t rows,
                         std::size_t cols, std::vector<std::size_t>* pivots = nullptr);

struct RrefResult {
    Matrix form;
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
Elem determinant(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

/// True iff every maximal minor of the full-rank k x n matrix g is nonzero.
/// Throws Errc::NotFullRank otherwise.
bool is_mds(const Matrix& g);

/// Rows of the result form a basis of {x : g x = 0}. Requires full row rank.
Matrix null_space_basis(const Matrix& g);

/// Kernel basis for any matrix (rank-deficient allowed).
Matrix kernel(const Matrix& m);

/**
 * Canonical identity of a linear code: the reduced row echelon form of a
 * full-rank generator matrix, serialized row-major. Two generator matrices
 * give equal keys exactly when they span the same row space.
 */
class CodeKey {
   public:
    static CodeKey from_generator(const Matrix& g);

    std::size_t k() const noexcept { return k_; }
    std::size_t n() const noexcept { return n_; }
    std::span<const std::uint8_t> bytes() const noexcept { return bytes_; }
    /// The RREF generator matrix itself.
    Matrix generator(const Field& f) const;

    friend bool operator==(const CodeKey&, const CodeKey&) = default;
    friend std::strong_ordering operator<=>(const CodeKey& a, const CodeKey& b) {
        if (auto c = a.k_ <=> b.k_; c != 0) return c;
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.bytes_ <=> b.bytes_;
    }

   private:
    CodeKey(std::size_t k, std::size_t n, std::vector<std::uint8_t> bytes)
        : k_(k), n_(n), bytes_(std::move(bytes)) {}

    std::size_t k_ = 0, n_ = 0;
    std::vector<std::uint8_t> bytes_;
};

/// Visit every k-subset of {0..n-1} in lexicographic order; the visitor
/// returns false to stop early. Returns false when stopped.
template <class Visit>
bool for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
    if (k > n) return true;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (!visit(std::span<const std::size_t>(idx))) return false;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return true;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace grscount
