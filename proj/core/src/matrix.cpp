#include "periodk/matrix.hpp"

#include <algorithm>
#include <utility>

#include "periodk/error.hpp"

namespace periodk {

struct MatrixAccess {
    static std::vector<Scalar>& data(Matrix& m) { return m.data_; }
    static const std::vector<Scalar>& data(const Matrix& m) { return m.data_; }
};

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field()))
        throw Error(ErrorKind::ShapeMismatch, "matrices over different fields");
}

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    auto& d = MatrixAccess::data(m);
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(d[a * m.cols() + c], d[b * m.cols() + c]);
}

void scale_row(Matrix& m, std::size_t r, const Scalar& factor, std::size_t from = 0) {
    auto& d = MatrixAccess::data(m);
    const Field& f = m.field();
    for (std::size_t c = from; c < m.cols(); ++c) {
        Scalar& x = d[r * m.cols() + c];
        if (sgn(x) != 0) x = f.mul(x, factor);
    }
}

// row_target -= factor * row_source
void axpy_row(Matrix& m, std::size_t target, std::size_t source, const Scalar& factor, std::size_t from = 0) {
    auto& d = MatrixAccess::data(m);
    const Field& f = m.field();
    const std::size_t n = m.cols();
    for (std::size_t c = from; c < n; ++c) {
        const Scalar& s = d[source * n + c];
        if (sgn(s) != 0) f.sub_mul_inplace(d[target * n + c], factor, s);
    }
}

// Gauss-Jordan to reduced row echelon form. Row operations are mirrored on
// `transform` when given. Returns pivot columns.
std::vector<std::size_t> eliminate(Matrix& work, Matrix* transform) {
    const Field& f = work.field();
    auto& d = MatrixAccess::data(work);
    const std::size_t rows = work.rows(), cols = work.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(d[p * cols + c]) == 0) ++p;
        if (p == rows) continue;
        swap_rows(work, p, r);
        if (transform) swap_rows(*transform, p, r);
        Scalar inv = f.inv(d[r * cols + c]);
        scale_row(work, r, inv, c);
        if (transform) scale_row(*transform, r, inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            Scalar factor = d[i * cols + c];
            if (sgn(factor) == 0) continue;
            axpy_row(work, i, r, factor, c);
            if (transform) axpy_row(*transform, i, r, factor);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(Field field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
    return m;
}

Matrix Matrix::from_rows(Field field, const std::vector<std::vector<long>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw Error(ErrorKind::ShapeMismatch, "ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& value) {
    data_[r * cols_ + c] = field_.normalize(value);
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

bool Matrix::operator==(const Matrix& other) const {
    return field_ == other.field_ && rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    require_same_field(*this, rhs);
    if (cols_ != rhs.rows_) throw Error(ErrorKind::ShapeMismatch, "matrix product shape mismatch");
    Matrix out(field_, rows_, rhs.cols_);
    if (field_.is_rational()) {
        Scalar tmp;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Scalar& a = data_[i * cols_ + k];
                if (sgn(a) == 0) continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j) {
                    const Scalar& b = rhs.data_[k * rhs.cols_ + j];
                    if (sgn(b) == 0) continue;
                    tmp = a * b;
                    out.data_[i * rhs.cols_ + j] += tmp;
                }
            }
        return out;
    }
    const unsigned long p = field_.characteristic();
    std::vector<unsigned long> acc(rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::fill(acc.begin(), acc.end(), 0ul);
        for (std::size_t k = 0; k < cols_; ++k) {
            unsigned long a = data_[i * cols_ + k].get_num().get_ui();
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                acc[j] = (acc[j] + a * rhs.data_[k * rhs.cols_ + j].get_num().get_ui()) % p;
        }
        for (std::size_t j = 0; j < rhs.cols_; ++j) out.data_[i * rhs.cols_ + j] = acc[j];
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    require_same_field(*this, rhs);
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(ErrorKind::ShapeMismatch, "matrix sum shape mismatch");
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], rhs.data_[i]);
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    require_same_field(*this, rhs);
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw Error(ErrorKind::ShapeMismatch, "matrix difference shape mismatch");
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.sub(data_[i], rhs.data_[i]);
    return out;
}

Matrix Matrix::operator-() const {
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.neg(data_[i]);
    return out;
}

Matrix Matrix::scaled(const Scalar& factor) const {
    Scalar f = field_.normalize(factor);
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.mul(data_[i], f);
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.data_[j * rows_ + i] = data_[i * cols_ + j];
    return out;
}

Matrix Matrix::select_columns(std::span<const std::size_t> columns) const {
    Matrix out(field_, rows_, columns.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < columns.size(); ++j)
            out.data_[i * columns.size() + j] = data_[i * cols_ + columns[j]];
    return out;
}

Matrix Matrix::select_rows(std::span<const std::size_t> rows) const {
    Matrix out(field_, rows.size(), cols_);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.data_[i * cols_ + j] = data_[rows[i] * cols_ + j];
    return out;
}

Matrix Matrix::block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const {
    if (row0 + rows > rows_ || col0 + cols > cols_) throw Error(ErrorKind::ShapeMismatch, "block out of range");
    Matrix out(field_, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) out.data_[i * cols + j] = data_[(row0 + i) * cols_ + col0 + j];
    return out;
}

void Matrix::set_block(std::size_t row0, std::size_t col0, const Matrix& block) {
    require_same_field(*this, block);
    if (row0 + block.rows_ > rows_ || col0 + block.cols_ > cols_)
        throw Error(ErrorKind::ShapeMismatch, "block out of range");
    for (std::size_t i = 0; i < block.rows_; ++i)
        for (std::size_t j = 0; j < block.cols_; ++j)
            data_[(row0 + i) * cols_ + col0 + j] = block.data_[i * block.cols_ + j];
}

Matrix Matrix::column(std::size_t j) const { return block(0, j, rows_, 1); }

Matrix Matrix::hstack(const Matrix& left, const Matrix& right) {
    require_same_field(left, right);
    if (left.rows_ != right.rows_) throw Error(ErrorKind::ShapeMismatch, "hstack row mismatch");
    Matrix out(left.field_, left.rows_, left.cols_ + right.cols_);
    out.set_block(0, 0, left);
    out.set_block(0, left.cols_, right);
    return out;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom) {
    require_same_field(top, bottom);
    if (top.cols_ != bottom.cols_) throw Error(ErrorKind::ShapeMismatch, "vstack column mismatch");
    Matrix out(top.field_, top.rows_ + bottom.rows_, top.cols_);
    out.set_block(0, 0, top);
    out.set_block(top.rows_, 0, bottom);
    return out;
}

Matrix Matrix::direct_sum(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    Matrix out(a.field_, a.rows_ + b.rows_, a.cols_ + b.cols_);
    out.set_block(0, 0, a);
    out.set_block(a.rows_, a.cols_, b);
    return out;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).get_str();
        os << ']';
    }
    return os << ']';
}

RrefResult rref(const Matrix& m) {
    RrefResult out{m, {}, Matrix::identity(m.field(), m.rows())};
    out.pivots = eliminate(out.reduced, &out.transform);
    return out;
}

std::size_t rank(const Matrix& m) {
    if (m.empty()) return 0;
    Matrix work = m;
    return eliminate(work, nullptr).size();
}

Matrix kernel_basis(const Matrix& m) {
    Matrix work = m;
    const auto pivots = eliminate(work, nullptr);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    Matrix basis(m.field(), m.cols(), m.cols() - pivots.size());
    std::size_t k = 0;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        basis.set(free, k, 1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (sgn(work(r, free)) != 0) basis.set(pivots[r], k, m.field().neg(work(r, free)));
        ++k;
    }
    return basis;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "solve: row counts differ");
    Matrix aug = Matrix::hstack(a, b);
    const auto pivots = eliminate(aug, nullptr);
    Matrix x(a.field(), a.cols(), b.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] >= a.cols()) return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j) x.set(pivots[r], j, aug(r, a.cols() + j));
    }
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    if (rank(m) != m.rows()) return std::nullopt;
    return solve(m, Matrix::identity(m.field(), m.rows()));
}

Matrix column_space_basis(const Matrix& m) {
    Matrix work = m;
    const auto pivots = eliminate(work, nullptr);
    return m.select_columns(pivots);
}

}  // namespace periodk
