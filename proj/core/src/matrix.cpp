// agtrellis: trellis state complexity of codes from curves
// Copyright 2026 The agtrellis authors.
// Licensed under the Apache License, Version 2.0.
#include "agtrellis/matrix.hpp"

#include <algorithm>

namespace agtrellis {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<felem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows_ * cols_)
        throw Error(Errc::ShapeMismatch, "entry count does not match rows*cols");
    for (felem v : a_)
        if (v >= field_->order())
            throw Error(Errc::IndexOutOfRange, "entry index >= field order");
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = m.field()->one();
    return m;
}

felem Matrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw Error(Errc::IndexOutOfRange, "matrix access");
    return a_[r * cols_ + c];
}

Matrix Matrix::transposed() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](felem v) { return v == 0; });
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_->same_as(*b.field_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.a_ == b.a_;
}

Matrix::Echelon Matrix::rref() const {
    const Field& f = *field_;
    Matrix r = *this;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols_ && lead < rows_; ++col) {
        std::size_t sel = lead;
        while (sel < rows_ && r(sel, col) == 0) ++sel;
        if (sel == rows_) continue;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(r(lead, c), r(sel, c));
        felem s = f.inv(r(lead, col));
        for (std::size_t c = col; c < cols_; ++c) r(lead, c) = f.mul(r(lead, c), s);
        for (std::size_t row = 0; row < rows_; ++row) {
            if (row == lead || r(row, col) == 0) continue;
            felem factor = r(row, col);
            for (std::size_t c = col; c < cols_; ++c)
                r(row, c) = f.sub(r(row, c), f.mul(factor, r(lead, c)));
        }
        pivots.push_back(col);
        ++lead;
    }
    std::size_t rank = pivots.size();
    return {std::move(r), rank, std::move(pivots)};
}

std::size_t Matrix::rank() const { return rref().rank; }

std::size_t Matrix::rank_of_columns(std::span<const std::size_t> cols) const {
    for (std::size_t c : cols)
        if (c >= cols_) throw Error(Errc::IndexOutOfRange, "column selection");
    Matrix sub(field_, rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < cols.size(); ++j) sub(r, j) = (*this)(r, cols[j]);
    return sub.rank();
}

Matrix Matrix::kernel_basis() const {
    const Field& f = *field_;
    Echelon e = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : e.pivots) is_pivot[c] = true;

    Matrix basis(field_, cols_ - e.rank, cols_);
    std::size_t out = 0;
    for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        basis(out, free_col) = f.one();
        for (std::size_t i = 0; i < e.rank; ++i)
            basis(out, e.pivots[i]) = f.neg(e.reduced(i, free_col));
        ++out;
    }
    return basis;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (!a.field()->same_as(*b.field()))
        throw Error(Errc::MixedFields, "matrix product across fields");
    if (a.cols() != b.rows()) throw Error(Errc::ShapeMismatch, "inner dimensions differ");
    const Field& f = *a.field();
    Matrix c(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            felem v = a(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) = f.add(c(i, j), f.mul(v, b(k, j)));
        }
    }
    return c;
}

} // namespace agtrellis
