#include "periodk/smith.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "periodk/error.hpp"

namespace periodk {

namespace {

int cmpabs(const mpz_class& a, const mpz_class& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }
int cmpabs(const mpz_class& a, unsigned long b) { return mpz_cmpabs_ui(a.get_mpz_t(), b); }

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw Error(ErrorKind::ShapeMismatch, "ragged integer matrix rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw Error(ErrorKind::ShapeMismatch, "integer matrix product shape mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const mpz_class& a = (*this)(i, k);
            if (sgn(a) == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

std::string GroupInvariants::to_string() const {
    std::ostringstream os;
    os << "(free_rank " << free_rank << ", torsion [";
    for (std::size_t i = 0; i < torsion.size(); ++i) os << (i ? "," : "") << torsion[i].get_str();
    os << "])";
    return os.str();
}

namespace {

// row_target -= q * row_source
void row_sub(IntMatrix& m, std::size_t target, std::size_t source, const mpz_class& q) {
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (sgn(m(source, c)) != 0) m(target, c) -= q * m(source, c);
}

void col_sub(IntMatrix& m, std::size_t target, std::size_t source, const mpz_class& q) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (sgn(m(r, source)) != 0) m(r, target) -= q * m(r, source);
}

// In-place Smith reduction of d. When u / v are given, row operations are
// mirrored on u and column operations on v so that U A V = D is maintained.
void smith_reduce(IntMatrix& d, IntMatrix* u, IntMatrix* v) {
    const std::size_t rows = d.rows(), cols = d.cols();
    const std::size_t steps = std::min(rows, cols);
    mpz_class q;

    auto swap_r = [&](std::size_t a, std::size_t b) {
        d.swap_rows(a, b);
        if (u) u->swap_rows(a, b);
    };
    auto swap_c = [&](std::size_t a, std::size_t b) {
        d.swap_cols(a, b);
        if (v) v->swap_cols(a, b);
    };

    for (std::size_t t = 0; t < steps; ++t) {
        // least |entry| in the trailing block
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (sgn(d(i, j)) != 0 && (pr == rows || cmpabs(d(i, j), d(pr, pc)) < 0)) {
                    pr = i;
                    pc = j;
                }
        if (pr == rows) break;
        swap_r(t, pr);
        swap_c(t, pc);

        for (;;) {
            bool remainder = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (sgn(d(i, t)) == 0) continue;
                mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
                row_sub(d, i, t, q);
                if (u) row_sub(*u, i, t, q);
                if (sgn(d(i, t)) != 0) remainder = true;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (sgn(d(t, j)) == 0) continue;
                mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
                col_sub(d, j, t, q);
                if (v) col_sub(*v, j, t, q);
                if (sgn(d(t, j)) != 0) remainder = true;
            }
            if (remainder) {
                std::size_t best_r = t, best_c = t;
                for (std::size_t i = t + 1; i < rows; ++i)
                    if (sgn(d(i, t)) != 0 && cmpabs(d(i, t), d(best_r, best_c)) < 0) {
                        best_r = i;
                        best_c = t;
                    }
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (sgn(d(t, j)) != 0 && cmpabs(d(t, j), d(best_r, best_c)) < 0) {
                        best_r = t;
                        best_c = j;
                    }
                swap_r(t, best_r);
                swap_c(t, best_c);
                continue;
            }
            // Divisibility: fold an offending row into the pivot row and redo.
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
                        bad = i;
                        break;
                    }
            if (bad == rows) break;
            row_sub(d, t, bad, -1);
            if (u) row_sub(*u, t, bad, -1);
        }
        if (sgn(d(t, t)) < 0) {
            for (std::size_t c = 0; c < cols; ++c) d(t, c) = -d(t, c);
            if (u)
                for (std::size_t c = 0; c < rows; ++c) (*u)(t, c) = -(*u)(t, c);
        }
    }
}

GroupInvariants invariants_from_diagonal(std::size_t rows, const std::vector<mpz_class>& diag) {
    GroupInvariants out;
    std::size_t nonzero = 0;
    for (const auto& x : diag) {
        if (sgn(x) == 0) continue;
        ++nonzero;
        if (cmpabs(x, 1) > 0) out.torsion.push_back(abs(x));
    }
    out.free_rank = rows - nonzero;
    return out;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
    SmithForm out{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols())};
    smith_reduce(out.d, &out.u, &out.v);
    return out;
}

std::vector<mpz_class> diagonal(const IntMatrix& d) {
    std::vector<mpz_class> out;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
    return out;
}

mpz_class determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw Error(ErrorKind::ShapeMismatch, "determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(m(k, k)) == 0) {
            std::size_t p = k + 1;
            while (p < n && sgn(m(p, k)) == 0) ++p;
            if (p == n) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

GroupInvariants cokernel_invariants(const IntMatrix& a) {
    IntMatrix d = a;
    smith_reduce(d, nullptr, nullptr);
    return invariants_from_diagonal(a.rows(), diagonal(d));
}

GroupInvariants cokernel_invariants(const SparseColumns& a) {
    const std::size_t n_rows = a.rows;
    const std::size_t n_cols = a.columns.size();
    std::vector<std::map<std::size_t, mpz_class>> cols(n_cols);
    std::vector<std::set<std::size_t>> row_cols(n_rows);
    for (std::size_t j = 0; j < n_cols; ++j)
        for (const auto& [r, value] : a.columns[j]) {
            if (r >= n_rows) throw Error(ErrorKind::ShapeMismatch, "sparse entry row out of range");
            if (sgn(value) == 0) continue;
            cols[j][r] += value;
            if (sgn(cols[j][r]) == 0) {
                cols[j].erase(r);
                row_cols[r].erase(j);
            } else {
                row_cols[r].insert(j);
            }
        }

    std::vector<bool> row_dead(n_rows, false);
    std::vector<bool> col_dead(n_cols, false);
    std::size_t unit_pivots = 0;

    // Eliminate +-1 pivots. A unit pivot at (r, j) lets column operations
    // clear row r everywhere else; row r and column j then split off as a
    // trivial Z/1 summand.
    bool progress = true;
    std::vector<std::size_t> order(n_cols);
    while (progress) {
        progress = false;
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t x, std::size_t y) { return cols[x].size() < cols[y].size(); });
        for (std::size_t j : order) {
            if (col_dead[j] || cols[j].empty()) continue;
            std::size_t pivot_row = n_rows;
            for (const auto& [r, value] : cols[j])
                if (cmpabs(value, 1) == 0 &&
                    (pivot_row == n_rows || row_cols[r].size() < row_cols[pivot_row].size()))
                    pivot_row = r;
            if (pivot_row == n_rows) continue;

            const mpz_class unit = cols[j][pivot_row];
            const std::vector<std::size_t> others(row_cols[pivot_row].begin(), row_cols[pivot_row].end());
            for (std::size_t k : others) {
                if (k == j) continue;
                const mpz_class factor = cols[k][pivot_row] * unit;
                for (const auto& [r, value] : cols[j]) {
                    mpz_class& target = cols[k][r];
                    target -= factor * value;
                    if (sgn(target) == 0) {
                        cols[k].erase(r);
                        row_cols[r].erase(k);
                    } else {
                        row_cols[r].insert(k);
                    }
                }
            }
            for (const auto& [r, value] : cols[j]) row_cols[r].erase(j);
            cols[j].clear();
            col_dead[j] = true;
            row_dead[pivot_row] = true;
            ++unit_pivots;
            progress = true;
        }
    }

    std::map<std::size_t, std::size_t> dense_row;
    std::vector<std::size_t> dense_cols;
    for (std::size_t j = 0; j < n_cols; ++j) {
        if (col_dead[j] || cols[j].empty()) continue;
        dense_cols.push_back(j);
        for (const auto& [r, value] : cols[j]) dense_row.emplace(r, 0);
    }
    std::size_t idx = 0;
    for (auto& [r, slot] : dense_row) slot = idx++;

    IntMatrix rest(dense_row.size(), dense_cols.size());
    for (std::size_t c = 0; c < dense_cols.size(); ++c)
        for (const auto& [r, value] : cols[dense_cols[c]]) rest(dense_row.at(r), c) = value;
    smith_reduce(rest, nullptr, nullptr);

    const std::size_t live_rows = n_rows - unit_pivots;
    GroupInvariants out = invariants_from_diagonal(rest.rows(), diagonal(rest));
    out.free_rank += live_rows - rest.rows();
    return out;
}

}  // namespace periodk
