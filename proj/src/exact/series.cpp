#include "yhw/exact/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace yhw {

TruncatedSeries::TruncatedSeries(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("series needs at least the constant term");
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
    TruncatedSeries s(order);
    s[0] = Rat(1);
    return s;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    TruncatedSeries out(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= n; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
    if (coeffs_[0].is_zero()) throw std::domain_error("series with zero constant term is not invertible");
    const std::size_t n = order();
    const Rat c0inv = coeffs_[0].reciprocal();
    TruncatedSeries out(n);
    out[0] = c0inv;
    for (std::size_t k = 1; k <= n; ++k) {
        Rat acc;
        for (std::size_t r = 1; r <= k; ++r) acc += coeffs_[r] * out[k - r];
        out[k] = -acc * c0inv;
    }
    return out;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
    TruncatedSeries out(order);
    for (std::size_t k = 0; k <= std::min(order, this->order()); ++k) out[k] = coeffs_[k];
    return out;
}

std::string TruncatedSeries::str() const {
    std::string s;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += coeffs_[k].str();
        if (k > 0) s += "u^-" + std::to_string(k);
    }
    return s.empty() ? "0" : s;
}

TruncatedSeries series_of(const MonicPoly& p, std::size_t order) {
    const auto c = p.coefficients();
    const std::size_t d = p.degree();
    TruncatedSeries s(order);
    for (std::size_t j = 0; j <= std::min(d, order); ++j) s[j] = c[d - j];
    return s;
}

TruncatedSeries expand_series(const RationalFn& f, std::size_t order) {
    if (f.num().degree() != f.den().degree()) throw std::domain_error("series does not start at 1");
    return series_of(f.num(), order) * series_of(f.den(), order).inverse();
}

}  // namespace yhw
