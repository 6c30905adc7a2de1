#include "yhw/rep/poly_matrix.hpp"

#include <stdexcept>

namespace yhw {

PolyMatrix::PolyMatrix(std::size_t dim, std::vector<Matrix> coeffs) : dim_(dim), coeffs_(std::move(coeffs)) {
    for (const auto& m : coeffs_)
        if (m.rows() != dim_ || m.cols() != dim_) throw std::invalid_argument("coefficient matrix has wrong size");
    trim();
}

PolyMatrix PolyMatrix::scalar(std::size_t dim, const std::vector<Rat>& coeffs) {
    std::vector<Matrix> mats;
    for (const auto& c : coeffs) mats.push_back(c * Matrix::identity(dim));
    return PolyMatrix(dim, std::move(mats));
}

void PolyMatrix::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Matrix PolyMatrix::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Matrix(dim_, dim_); }

Matrix PolyMatrix::evaluate(const Rat& x) const {
    Matrix acc(dim_, dim_);
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = x * std::move(acc) + coeffs_[k];
    return acc;
}

PolyMatrix PolyMatrix::shifted(const Rat& t) const {
    // Σ_k C_k (u+t)^k = Σ_j u^j Σ_{k≥j} binom(k, j) t^{k−j} C_k
    std::vector<Matrix> out(coeffs_.size(), Matrix(dim_, dim_));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        Rat binom(1);
        for (std::size_t j = k + 1; j-- > 0;) {
            // binom(k, j) t^{k−j}, built downwards from j = k
            out[j] += binom * coeffs_[k];
            binom = binom * t * Rat(static_cast<std::int64_t>(j)) / Rat(static_cast<std::int64_t>(k - j + 1));
        }
    }
    return PolyMatrix(dim_, std::move(out));
}

PolyMatrix PolyMatrix::negated_argument() const {
    std::vector<Matrix> out = coeffs_;
    for (std::size_t k = 1; k < out.size(); k += 2) out[k] = Rat(-1) * std::move(out[k]);
    return PolyMatrix(dim_, std::move(out));
}

std::vector<Vec> PolyMatrix::apply(const Vec& v) const {
    std::vector<Vec> out;
    for (const auto& c : coeffs_) out.push_back(c.apply(v));
    return out;
}

std::pair<PolyMatrix, PolyMatrix> PolyMatrix::divide(const MonicPoly& g) const {
    const auto gc = g.coefficients();
    const std::size_t dg = gc.size() - 1;
    std::vector<Matrix> rem = coeffs_;
    if (rem.size() <= dg) return {PolyMatrix(dim_), *this};
    std::vector<Matrix> quot(rem.size() - dg, Matrix(dim_, dim_));
    for (std::size_t k = rem.size(); k-- > dg;) {
        const Matrix lead = rem[k];
        if (lead.is_zero()) continue;
        quot[k - dg] = lead;
        for (std::size_t j = 0; j <= dg; ++j)
            if (!gc[j].is_zero()) rem[k - dg + j] -= gc[j] * lead;
    }
    rem.resize(dg);
    return {PolyMatrix(dim_, std::move(quot)), PolyMatrix(dim_, std::move(rem))};
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("matrix polynomial size mismatch");
    std::vector<Matrix> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Matrix(a.dim_, a.dim_));
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) out[k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out[k] += b.coeffs_[k];
    return PolyMatrix(a.dim_, std::move(out));
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) { return a + Rat(-1) * b; }

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("matrix polynomial size mismatch");
    if (a.is_zero() || b.is_zero()) return PolyMatrix(a.dim_);
    std::vector<Matrix> out(a.coeffs_.size() + b.coeffs_.size() - 1, Matrix(a.dim_, a.dim_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return PolyMatrix(a.dim_, std::move(out));
}

PolyMatrix operator*(const Rat& s, const PolyMatrix& a) {
    std::vector<Matrix> out;
    for (const auto& c : a.coeffs_) out.push_back(s * c);
    return PolyMatrix(a.dim_, std::move(out));
}

}  // namespace yhw
