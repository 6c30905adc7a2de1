#pragma once

// Polynomials in u with square matrix coefficients.

#include <utility>
#include <vector>

#include "yhw/exact/poly.hpp"
#include "yhw/rep/matrix.hpp"

namespace yhw {

class PolyMatrix {
public:
    PolyMatrix() = default;
    explicit PolyMatrix(std::size_t dim) : dim_(dim) {}
    /// Coefficients in ascending powers of u; trailing zero matrices are trimmed.
    PolyMatrix(std::size_t dim, std::vector<Matrix> coeffs);

    /// p(u)·I for a scalar polynomial given by ascending coefficients.
    static PolyMatrix scalar(std::size_t dim, const std::vector<Rat>& coeffs);

    std::size_t dim() const { return dim_; }
    /// −1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Matrix>& coeffs() const { return coeffs_; }
    /// Coefficient of u^k, zero beyond the degree.
    Matrix coeff(std::size_t k) const;

    Matrix evaluate(const Rat& x) const;
    /// p(u + t).
    PolyMatrix shifted(const Rat& t) const;
    /// p(−u).
    PolyMatrix negated_argument() const;

    /// Coefficient vectors of p(u) v, ascending.
    std::vector<Vec> apply(const Vec& v) const;

    /// Quotient and remainder on division by a monic scalar polynomial.
    std::pair<PolyMatrix, PolyMatrix> divide(const MonicPoly& g) const;

    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator*(const Rat& s, const PolyMatrix& a);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) = default;

private:
    void trim();

    std::size_t dim_ = 0;
    std::vector<Matrix> coeffs_;
};

}  // namespace yhw
