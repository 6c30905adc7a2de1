#pragma once

// Monic polynomials in u over Q, stored by their roots.
//
// Root convention: a stored value r stands for the linear factor (u + r), so
// the polynomial vanishes at u = -r.  Every function in this header follows
// that convention.

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "yhw/exact/rat.hpp"

namespace yhw {

/// Multiset of rationals kept sorted in descending order.
class RootMultiset {
public:
    RootMultiset() = default;
    explicit RootMultiset(std::vector<Rat> roots);
    RootMultiset(std::initializer_list<Rat> roots);

    const std::vector<Rat>& values() const { return roots_; }
    std::size_t size() const { return roots_.size(); }
    bool empty() const { return roots_.empty(); }
    auto begin() const { return roots_.begin(); }
    auto end() const { return roots_.end(); }
    const Rat& operator[](std::size_t i) const { return roots_[i]; }

    std::size_t count(const Rat& r) const;
    RootMultiset shifted(const Rat& t) const;

    friend bool operator==(const RootMultiset&, const RootMultiset&) = default;

    std::string str() const;

private:
    std::vector<Rat> roots_;
};

/// a ⊎ b
RootMultiset merge(const RootMultiset& a, const RootMultiset& b);
/// Multiset intersection (minimum multiplicity).
RootMultiset common(const RootMultiset& a, const RootMultiset& b);
/// Multiset difference a ∖ b; elements of b absent from a are ignored.
RootMultiset minus(const RootMultiset& a, const RootMultiset& b);

class MonicPoly {
public:
    /// The constant polynomial 1.
    MonicPoly() = default;
    explicit MonicPoly(RootMultiset roots) : roots_(std::move(roots)) {}
    MonicPoly(std::initializer_list<Rat> roots) : roots_(roots) {}

    /// u^k, i.e. k copies of the root 0.
    static MonicPoly power_of_u(std::size_t k);

    const RootMultiset& roots() const { return roots_; }
    std::size_t degree() const { return roots_.size(); }

    /// Coefficients of the expansion of ∏(u + r), ascending powers; the last
    /// entry is 1.
    std::vector<Rat> coefficients() const;
    Rat evaluate(const Rat& x) const;

    friend MonicPoly operator*(const MonicPoly& a, const MonicPoly& b) {
        return MonicPoly(merge(a.roots_, b.roots_));
    }
    friend bool operator==(const MonicPoly&, const MonicPoly&) = default;

    /// "1", "u", "(u+2)(u-1/2)".
    std::string str() const;

private:
    RootMultiset roots_;
};

/// P(u + t): every root r becomes r + t.
MonicPoly shift_poly(const MonicPoly& p, const Rat& t);

/// Rational roots of a monic polynomial given by ascending coefficients.
/// Throws NonRationalRoot if the polynomial does not split over Q, and
/// InputError if the leading coefficient is not 1.
RootMultiset roots_from_coefficients(std::span<const Rat> coeffs);

/// Expands ∏(u + r) into ascending coefficients.
std::vector<Rat> expand_roots(const RootMultiset& roots);

/// A quotient of monic polynomials without common roots.
class RationalFn {
public:
    RationalFn() = default;

    const MonicPoly& num() const { return num_; }
    const MonicPoly& den() const { return den_; }
    bool is_one() const { return num_.degree() == 0 && den_.degree() == 0; }

    friend bool operator==(const RationalFn&, const RationalFn&) = default;
    friend RationalFn reduce_ratio(const MonicPoly& num, const MonicPoly& den);

    std::string str() const;

private:
    MonicPoly num_;
    MonicPoly den_;
};

/// Cancels the common roots (multiset intersection) of num and den.
RationalFn reduce_ratio(const MonicPoly& num, const MonicPoly& den);

}  // namespace yhw
