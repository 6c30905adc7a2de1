#include "yhw/rep/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace yhw {

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rat(1);
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if ((*this)(r, c) != Rat(r == c ? 1 : 0)) return false;
    return true;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length does not match matrix");
    Vec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            const auto& x = (*this)(r, c);
            if (!x.is_zero() && !v[c].is_zero()) out[r] += x * v[c];
        }
    return out;
}

Vec Matrix::apply_left(const Vec& w) const {
    if (w.size() != rows_) throw std::invalid_argument("vector length does not match matrix");
    Vec out(cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        if (w[r].is_zero()) continue;
        for (std::size_t c = 0; c < cols_; ++c) {
            const auto& x = (*this)(r, c);
            if (!x.is_zero()) out[c] += w[r] * x;
        }
    }
    return out;
}

Matrix& Matrix::operator+=(const Matrix& b) {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (!b.data_[k].is_zero()) data_[k] += b.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& b) {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (!b.data_[k].is_zero()) data_[k] -= b.data_[k];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const auto& x = a(r, k);
            if (x.is_zero()) continue;
            for (std::size_t c = 0; c < b.cols_; ++c) {
                const auto& y = b(k, c);
                if (!y.is_zero()) out(r, c) += x * y;
            }
        }
    return out;
}

Matrix operator*(const Rat& s, Matrix a) {
    if (s.is_zero()) return Matrix(a.rows_, a.cols_);
    for (auto& x : a.data_)
        if (!x.is_zero()) x *= s;
    return a;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r) os << ", ";
        os << '[';
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
        os << ']';
    }
    os << ']';
    return os.str();
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t r1 = 0; r1 < a.rows(); ++r1)
        for (std::size_t c1 = 0; c1 < a.cols(); ++c1) {
            const auto& x = a(r1, c1);
            if (x.is_zero()) continue;
            for (std::size_t r2 = 0; r2 < b.rows(); ++r2)
                for (std::size_t c2 = 0; c2 < b.cols(); ++c2) {
                    const auto& y = b(r2, c2);
                    if (!y.is_zero()) out(r1 * b.rows() + r2, c1 * b.cols() + c2) = x * y;
                }
        }
    return out;
}

Matrix negate_columns(Matrix a, const std::vector<std::uint8_t>& odd) {
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (odd[c] && !a(r, c).is_zero()) a(r, c) = -a(r, c);
    return a;
}

Vec SpanBuilder::reduce(Vec v) const {
    if (v.size() != n_) throw std::invalid_argument("vector length does not match span");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Rat f = v[pivots_[k]];
        if (f.is_zero()) continue;
        for (std::size_t c = 0; c < n_; ++c)
            if (!rows_[k][c].is_zero()) v[c] -= f * rows_[k][c];
    }
    return v;
}

bool SpanBuilder::add(const Vec& v) {
    Vec w = reduce(v);
    std::size_t piv = 0;
    while (piv < n_ && w[piv].is_zero()) ++piv;
    if (piv == n_) return false;
    const Rat inv = w[piv].reciprocal();
    for (auto& x : w)
        if (!x.is_zero()) x *= inv;
    rows_.push_back(std::move(w));
    pivots_.push_back(piv);
    return true;
}

bool SpanBuilder::contains(const Vec& v) const { return is_zero(reduce(v)); }

namespace {

// Reduced row echelon form in place, pivoting only in the first `cols`
// columns; returns the pivot columns.
std::vector<std::size_t> rref(std::vector<Vec>& a, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
        std::size_t piv = row;
        while (piv < a.size() && a[piv][col].is_zero()) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[row]);
        const Rat inv = a[row][col].reciprocal();
        for (auto& x : a[row])
            if (!x.is_zero()) x *= inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][col].is_zero()) continue;
            const Rat f = a[r][col];
            for (std::size_t c = col; c < a[r].size(); ++c)
                if (!a[row][c].is_zero()) a[r][c] -= f * a[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<Vec> rows_of(const Matrix& a) {
    std::vector<Vec> rows(a.rows(), Vec(a.cols()));
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) rows[r][c] = a(r, c);
    return rows;
}

}  // namespace

std::vector<Vec> null_space(const Matrix& a) {
    auto rows = rows_of(a);
    const auto pivots = rref(rows, a.cols());
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec x(a.cols());
        x[free] = Rat(1);
        for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = -rows[k][free];
        basis.push_back(std::move(x));
    }
    return basis;
}

std::vector<std::size_t> pivot_columns(const std::vector<Vec>& rows) {
    if (rows.empty()) return {};
    auto copy = rows;
    return rref(copy, rows.front().size());
}

std::optional<Matrix> inverse(const Matrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    std::vector<Vec> aug(n, Vec(2 * n));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug[r][c] = a(r, c);
        aug[r][n + r] = Rat(1);
    }
    const auto pivots = rref(aug, n);
    if (pivots.size() != n) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug[r][n + c];
    return inv;
}

bool proportional(const Vec& u, const Vec& v) {
    if (u.size() != v.size() || is_zero(u) || is_zero(v)) return false;
    std::size_t k = 0;
    while (u[k].is_zero()) ++k;
    if (v[k].is_zero()) return false;
    const Rat f = v[k] / u[k];
    for (std::size_t c = 0; c < u.size(); ++c)
        if (v[c] != f * u[c]) return false;
    return true;
}

}  // namespace yhw
