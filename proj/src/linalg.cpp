/**************************************************************************
 * linalg.cpp
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

#include "grscount/linalg.hpp"

#include <algorithm>

#include "grscount/error.hpp"

namespace grscount {

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(f), rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols)
        throw Error(Errc::InvalidArgument, "entry count does not match dimensions");
    for (Elem e : data_)
        if (e >= f.order()) throw Error(Errc::InvalidArgument, "entry is not a field element");
}

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(const Field& f, std::span<const std::vector<Elem>> columns) {
    const std::size_t rows = columns.empty() ? 0 : columns.front().size();
    Matrix m(f, rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw Error(Errc::InvalidArgument, "ragged columns");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

std::vector<Elem> Matrix::column(std::size_t c) const {
    std::vector<Elem> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

std::vector<Elem> Matrix::row(std::size_t r) const {
    return {data_.begin() + std::ptrdiff_t(r * cols_), data_.begin() + std::ptrdiff_t((r + 1) * cols_)};
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
    Matrix m(field_, rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < cols.size(); ++j) m(r, j) = (*this)(r, cols[j]);
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
    return m;
}

Matrix Matrix::scaled(Elem s) const {
    Matrix m = *this;
    for (Elem& e : m.data_) e = field_.mul(e, s);
    return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw Error(Errc::InvalidArgument, "dimension mismatch in product");
    Matrix m(field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t l = 0; l < cols_; ++l) {
            const Elem a = (*this)(i, l);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                m(i, j) = field_.add(m(i, j), field_.mul(a, rhs(l, j)));
        }
    return m;
}

std::vector<Elem> Matrix::operator*(std::span<const Elem> v) const {
    if (v.size() != cols_) throw Error(Errc::InvalidArgument, "dimension mismatch in product");
    std::vector<Elem> out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out[i] = field_.add(out[i], field_.mul((*this)(i, j), v[j]));
    return out;
}

bool Matrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
}

std::size_t rref_inplace(const Field& f, std::span<Elem> a, std::size_t rows, std::size_t cols,
                         std::vector<std::size_t>* pivots) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != rank)
            for (std::size_t j = c; j < cols; ++j) std::swap(a[piv * cols + j], a[rank * cols + j]);
        const Elem s = f.inv(a[rank * cols + c]);
        if (s != 1)
            for (std::size_t j = c; j < cols; ++j) a[rank * cols + j] = f.mul(a[rank * cols + j], s);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank) continue;
            const Elem factor = a[r * cols + c];
            if (factor == 0) continue;
            const Elem nf = f.neg(factor);
            for (std::size_t j = c; j < cols; ++j)
                a[r * cols + j] = f.add(a[r * cols + j], f.mul(nf, a[rank * cols + j]));
        }
        if (pivots) pivots->push_back(c);
        ++rank;
    }
    return rank;
}

RrefResult rref(const Matrix& m) {
    Matrix form = m;
    std::vector<std::size_t> pivots;
    const std::size_t r = rref_inplace(m.field(), form.entries(), m.rows(), m.cols(), &pivots);
    return {std::move(form), r, std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
    std::vector<Elem> tmp(m.entries().begin(), m.entries().end());
    return rref_inplace(m.field(), tmp, m.rows(), m.cols());
}

Elem determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw Error(Errc::InvalidArgument, "determinant of non-square matrix");
    const Field& f = m.field();
    const std::size_t n = m.rows();
    std::vector<Elem> a(m.entries().begin(), m.entries().end());
    Elem det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv * n + c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[c * n + j]);
            det = f.neg(det);
        }
        det = f.mul(det, a[c * n + c]);
        const Elem s = f.inv(a[c * n + c]);
        for (std::size_t r = c + 1; r < n; ++r) {
            const Elem factor = f.neg(f.mul(a[r * n + c], s));
            if (factor == 0) continue;
            for (std::size_t j = c; j < n; ++j) a[r * n + j] = f.add(a[r * n + j], f.mul(factor, a[c * n + j]));
        }
    }
    return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw Error(Errc::InvalidArgument, "inverse of non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(m.field(), n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    std::vector<std::size_t> pivots;
    rref_inplace(m.field(), aug.entries(), n, 2 * n, &pivots);
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    std::vector<std::size_t> right(n);
    for (std::size_t i = 0; i < n; ++i) right[i] = n + i;
    return aug.select_columns(right);
}

bool is_mds(const Matrix& g) {
    const std::size_t k = g.rows(), n = g.cols();
    if (k == 0 || k > n || rank(g) != k) throw Error(Errc::NotFullRank, "generator is not of full row rank");
    std::vector<Elem> sub(k * k);
    const Field& f = g.field();
    return for_each_subset(n, k, [&](std::span<const std::size_t> cols) {
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t j = 0; j < k; ++j) sub[r * k + j] = g(r, cols[j]);
        return rref_inplace(f, sub, k, k) == k;
    });
}

Matrix kernel(const Matrix& m) {
    auto [form, r, pivots] = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    Matrix basis(m.field(), n - r, n);
    const Field& f = m.field();
    std::size_t row = 0;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        basis(row, free) = 1;
        for (std::size_t i = 0; i < r; ++i) basis(row, pivots[i]) = f.neg(form(i, free));
        ++row;
    }
    return basis;
}

Matrix null_space_basis(const Matrix& g) {
    if (rank(g) != g.rows()) throw Error(Errc::NotFullRank, "generator is not of full row rank");
    return kernel(g);
}

CodeKey CodeKey::from_generator(const Matrix& g) {
    auto [form, r, pivots] = rref(g);
    if (r != g.rows() || r == 0) throw Error(Errc::NotFullRank, "generator is not of full row rank");
    return CodeKey(g.rows(), g.cols(), std::vector<std::uint8_t>(form.entries().begin(), form.entries().end()));
}

Matrix CodeKey::generator(const Field& f) const {
    return Matrix(f, k_, n_, std::vector<Elem>(bytes_.begin(), bytes_.end()));
}

}  // namespace grscount
