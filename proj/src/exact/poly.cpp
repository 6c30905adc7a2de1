#include "yhw/exact/poly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "yhw/errors.hpp"

namespace yhw {

namespace {

void sort_desc(std::vector<Rat>& v) { std::sort(v.begin(), v.end(), std::greater<>()); }

// Positive divisors of |n|, n != 0, by trial division.
std::vector<mpz_class> divisors(const mpz_class& n) {
    mpz_class rest = abs(n);
    if (rest > mpz_class("10000000000000000"))
        throw InputError("coefficient too large for rational-root search");
    std::map<mpz_class, unsigned> factors;
    for (mpz_class d = 2; d * d <= rest; ++d) {
        while (rest % d == 0) {
            ++factors[d];
            rest /= d;
        }
    }
    if (rest > 1) ++factors[rest];
    std::vector<mpz_class> out{1};
    for (const auto& [prime, mult] : factors) {
        const std::size_t base = out.size();
        mpz_class power = 1;
        for (unsigned e = 1; e <= mult; ++e) {
            power *= prime;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
        }
    }
    return out;
}

Rat horner(const std::vector<Rat>& c, const Rat& x) {
    Rat acc;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// Divides by (u - z); z must be a zero.
std::vector<Rat> deflate(const std::vector<Rat>& c, const Rat& z) {
    const std::size_t n = c.size() - 1;
    std::vector<Rat> q(n);
    Rat carry;
    for (std::size_t k = n; k-- > 0;) {
        carry = c[k + 1] + carry * z;
        q[k] = carry;
    }
    return q;
}

}  // namespace

RootMultiset::RootMultiset(std::vector<Rat> roots) : roots_(std::move(roots)) { sort_desc(roots_); }

RootMultiset::RootMultiset(std::initializer_list<Rat> roots) : roots_(roots) { sort_desc(roots_); }

std::size_t RootMultiset::count(const Rat& r) const {
    return static_cast<std::size_t>(std::count(roots_.begin(), roots_.end(), r));
}

RootMultiset RootMultiset::shifted(const Rat& t) const {
    std::vector<Rat> out;
    out.reserve(roots_.size());
    for (const auto& r : roots_) out.push_back(r + t);
    return RootMultiset(std::move(out));
}

std::string RootMultiset::str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < roots_.size(); ++i) {
        if (i) s += ", ";
        s += roots_[i].str();
    }
    return s + "}";
}

RootMultiset merge(const RootMultiset& a, const RootMultiset& b) {
    std::vector<Rat> out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), std::greater<>());
    return RootMultiset(std::move(out));
}

RootMultiset common(const RootMultiset& a, const RootMultiset& b) {
    std::vector<Rat> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), std::greater<>());
    return RootMultiset(std::move(out));
}

RootMultiset minus(const RootMultiset& a, const RootMultiset& b) {
    std::vector<Rat> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), std::greater<>());
    return RootMultiset(std::move(out));
}

MonicPoly MonicPoly::power_of_u(std::size_t k) { return MonicPoly(RootMultiset(std::vector<Rat>(k, Rat(0)))); }

std::vector<Rat> expand_roots(const RootMultiset& roots) {
    std::vector<Rat> c{Rat(1)};
    for (const auto& r : roots) {
        // multiply by (u + r)
        std::vector<Rat> next(c.size() + 1);
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k + 1] += c[k];
            next[k] += c[k] * r;
        }
        c = std::move(next);
    }
    return c;
}

std::vector<Rat> MonicPoly::coefficients() const { return expand_roots(roots_); }

Rat MonicPoly::evaluate(const Rat& x) const {
    Rat acc(1);
    for (const auto& r : roots_) acc *= x + r;
    return acc;
}

std::string MonicPoly::str() const {
    if (roots_.empty()) return "1";
    std::string s;
    for (const auto& r : roots_) {
        if (r.is_zero()) s += "u";
        else if (r.sign() > 0) s += "(u+" + r.str() + ")";
        else s += "(u" + r.str() + ")";
    }
    return s;
}

MonicPoly shift_poly(const MonicPoly& p, const Rat& t) { return MonicPoly(p.roots().shifted(t)); }

RootMultiset roots_from_coefficients(std::span<const Rat> coeffs) {
    if (coeffs.empty() || coeffs.back() != Rat(1)) throw InputError("polynomial is not monic");
    std::vector<Rat> c(coeffs.begin(), coeffs.end());
    std::vector<Rat> roots;
    while (c.size() > 1 && c.front().is_zero()) {
        roots.emplace_back(0);
        c.erase(c.begin());
    }
    if (c.size() > 1) {
        mpz_class lcm = 1;
        for (const auto& x : c) lcm = ::lcm(lcm, x.denominator());
        const mpz_class a0 = c.front().numerator() * (lcm / c.front().denominator());
        const auto ps = divisors(a0);
        const auto qs = divisors(lcm);
        for (const auto& p : ps) {
            for (const auto& q : qs) {
                if (gcd(p, q) != 1) continue;
                for (int s : {1, -1}) {
                    const Rat zero(mpq_class(mpz_class(p * s), q));
                    while (c.size() > 1 && horner(c, zero).is_zero()) {
                        c = deflate(c, zero);
                        roots.push_back(-zero);
                    }
                }
            }
        }
        if (c.size() > 1) throw NonRationalRoot();
    }
    return RootMultiset(std::move(roots));
}

RationalFn reduce_ratio(const MonicPoly& num, const MonicPoly& den) {
    const RootMultiset shared = common(num.roots(), den.roots());
    RationalFn f;
    f.num_ = MonicPoly(minus(num.roots(), shared));
    f.den_ = MonicPoly(minus(den.roots(), shared));
    return f;
}

std::string RationalFn::str() const { return num_.str() + " / " + den_.str(); }

}  // namespace yhw
