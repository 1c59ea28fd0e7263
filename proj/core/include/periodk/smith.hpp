#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace periodk {

/// Dense integer matrix with arbitrary-precision entries.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix& other) const = default;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> data_;
};

/// Z^free_rank + sum_i Z/torsion[i], torsion a divisibility chain of entries >= 2.
struct GroupInvariants {
    std::size_t free_rank = 0;
    std::vector<mpz_class> torsion;

    bool operator==(const GroupInvariants& other) const = default;
    std::string to_string() const;
};

struct SmithForm {
    IntMatrix u;  ///< unimodular, rows x rows
    IntMatrix d;  ///< diagonal with d_1 | d_2 | ...
    IntMatrix v;  ///< unimodular, cols x cols
};

/// U A V = D. Pivoting takes the nonzero entry of least absolute value.
SmithForm smith_normal_form(const IntMatrix& a);

/// Diagonal of an already diagonal matrix, min(rows, cols) entries.
std::vector<mpz_class> diagonal(const IntMatrix& d);

/// Fraction-free (Bareiss) determinant of a square matrix.
mpz_class determinant(const IntMatrix& a);

/// Sparse integer matrix stored by columns: entries (row, value), rows ascending.
struct SparseColumns {
    std::size_t rows = 0;
    std::vector<std::vector<std::pair<std::size_t, mpz_class>>> columns;
};

/// Invariants of Z^rows / (column span of A), dense input.
GroupInvariants cokernel_invariants(const IntMatrix& a);

/// Same quotient for a sparse relation matrix: unit pivots are eliminated in
/// place, the remainder goes through a dense Smith form.
GroupInvariants cokernel_invariants(const SparseColumns& a);

}  // namespace periodk
