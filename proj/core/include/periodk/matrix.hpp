#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "periodk/field.hpp"

namespace periodk {

/// Dense row-major matrix over a Field. Entries are always normalized.
class Matrix {
public:
    Matrix() : Matrix(Field::rationals(), 0, 0) {}
    Matrix(Field field, std::size_t rows, std::size_t cols);

    static Matrix identity(Field field, std::size_t n);
    static Matrix from_rows(Field field, const std::vector<std::vector<long>>& rows);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, const Scalar& value);
    void set(std::size_t r, std::size_t c, long value) { set(r, c, field_.from_int(value)); }

    bool is_zero() const;
    bool operator==(const Matrix& other) const;

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix operator-() const;
    Matrix scaled(const Scalar& factor) const;
    Matrix transpose() const;

    Matrix select_columns(std::span<const std::size_t> columns) const;
    Matrix select_rows(std::span<const std::size_t> rows) const;
    Matrix block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;
    void set_block(std::size_t row0, std::size_t col0, const Matrix& block);

    /// Column j as a rows x 1 matrix.
    Matrix column(std::size_t j) const;

    static Matrix hstack(const Matrix& left, const Matrix& right);
    static Matrix vstack(const Matrix& top, const Matrix& bottom);
    static Matrix direct_sum(const Matrix& a, const Matrix& b);

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> data_;

    friend struct MatrixAccess;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

struct RrefResult {
    Matrix reduced;                   ///< R, reduced row echelon form
    std::vector<std::size_t> pivots;  ///< pivot column per nonzero row of R
    Matrix transform;                 ///< T invertible with T * M = R
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Columns form a basis of ker M (cols - rank columns, possibly zero).
Matrix kernel_basis(const Matrix& m);

/// Some X with A X = B, or nullopt when a column of B is outside im A.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Inverse of a square invertible matrix; nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Basis of the column space, chosen among the columns of m (pivot columns).
Matrix column_space_basis(const Matrix& m);

}  // namespace periodk
