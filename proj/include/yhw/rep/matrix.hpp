#pragma once

// Dense matrices over Q and the exact linear algebra the representation
// engine needs: echelon spans, null spaces, inverses.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "yhw/exact/rat.hpp"

namespace yhw {

using Vec = std::vector<Rat>;

bool is_zero(const Vec& v);

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    bool is_identity() const;
    Matrix transposed() const;

    /// M v for a column vector v.
    Vec apply(const Vec& v) const;
    /// wᵀ M for a row vector w.
    Vec apply_left(const Vec& w) const;

    Matrix& operator+=(const Matrix& b);
    Matrix& operator-=(const Matrix& b);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rat& s, Matrix a);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

    std::string str() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> data_;
};

/// Kronecker product a ⊗ b with row index (r₁, r₂) ↦ r₁·b.rows() + r₂.
Matrix kron(const Matrix& a, const Matrix& b);

/// a with every column c where odd[c] is set multiplied by −1.
Matrix negate_columns(Matrix a, const std::vector<std::uint8_t>& odd);

/// Incrementally grown subspace of Q^n kept in echelon form.
class SpanBuilder {
public:
    explicit SpanBuilder(std::size_t n) : n_(n) {}

    /// Adds v if it is independent of the current span; returns whether it was.
    bool add(const Vec& v);
    bool contains(const Vec& v) const;
    std::size_t rank() const { return rows_.size(); }

private:
    Vec reduce(Vec v) const;

    std::size_t n_;
    std::vector<Vec> rows_;  // each reduced against its predecessors, pivot entry 1
    std::vector<std::size_t> pivots_;
};

/// Basis of {x : a x = 0}.
std::vector<Vec> null_space(const Matrix& a);

/// Column indices of a maximal independent set of columns of the d×n matrix
/// whose rows are `rows`, chosen greedily from the left.
std::vector<std::size_t> pivot_columns(const std::vector<Vec>& rows);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& a);

/// True when u and v are both nonzero and proportional.
bool proportional(const Vec& u, const Vec& v);

}  // namespace yhw
