// agtrellis: trellis state complexity of codes from curves
// Copyright 2026 The agtrellis authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "agtrellis/field.hpp"

namespace agtrellis {

/// Dense row-major matrix over a finite field. Exact arithmetic, plain
/// Gaussian elimination with the first nonzero pivot in column order, so
/// all reductions are deterministic. Treated as immutable once built.
class Matrix {
  public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<felem> entries);

    static Matrix identity(FieldPtr field, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }

    felem operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    felem& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    felem at(std::size_t r, std::size_t c) const;
    std::span<const felem> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }

    Matrix transposed() const;
    bool is_zero() const;
    friend bool operator==(const Matrix& a, const Matrix& b);

    /// Reduced row echelon form; row-equivalent to *this.
    struct Echelon;
    Echelon rref() const;
    std::size_t rank() const;

    /// Rank of the submatrix formed by the selected columns.
    std::size_t rank_of_columns(std::span<const std::size_t> cols) const;

    /// Rows form a basis of the right kernel {v : M v^T = 0};
    /// (cols - rank) rows, possibly zero rows.
    Matrix kernel_basis() const;

  private:
    FieldPtr field_;
    std::size_t rows_, cols_;
    std::vector<felem> a_;
};

struct Matrix::Echelon {
    Matrix reduced;
    std::size_t rank;
    std::vector<std::size_t> pivots; // strictly increasing column indices
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }

} // namespace agtrellis
