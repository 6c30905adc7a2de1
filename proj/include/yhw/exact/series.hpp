#pragma once

#include <string>
#include <vector>

#include "yhw/exact/poly.hpp"

namespace yhw {

/// Power series in u⁻¹ truncated after u⁻ᴺ: c₀ + c₁u⁻¹ + … + c_N u⁻ᴺ.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}
    explicit TruncatedSeries(std::vector<Rat> coeffs);

    static TruncatedSeries one(std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    const Rat& operator[](std::size_t k) const { return coeffs_[k]; }
    Rat& operator[](std::size_t k) { return coeffs_[k]; }

    /// Product truncated at the smaller of the two orders.
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    /// Multiplicative inverse; needs a nonzero constant term.
    TruncatedSeries inverse() const;
    TruncatedSeries truncated(std::size_t order) const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    std::string str() const;

private:
    std::vector<Rat> coeffs_;
};

/// u^{-deg} P(u) = ∏(1 + r u⁻¹) as a series.
TruncatedSeries series_of(const MonicPoly& p, std::size_t order);

/// u⁻¹-expansion of f truncated at order N.  Requires deg num = deg den;
/// otherwise throws std::domain_error("series does not start at 1").
TruncatedSeries expand_series(const RationalFn& f, std::size_t order);

/// Default truncation order 2p + 2 for level-p contexts.
inline std::size_t default_order(std::size_t level) { return 2 * level + 2; }

}  // namespace yhw
