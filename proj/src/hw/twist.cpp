#include "yhw/hw/twist.hpp"

#include <algorithm>

#include "yhw/errors.hpp"

namespace yhw {

namespace {

// Some solution of A x = b (free unknowns set to zero), or nullopt.
std::optional<std::vector<Rat>> solve(std::vector<std::vector<Rat>> a, std::vector<Rat> b, std::size_t unknowns) {
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < unknowns && row < a.size(); ++col) {
        std::size_t piv = row;
        while (piv < a.size() && a[piv][col].is_zero()) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[row]);
        std::swap(b[piv], b[row]);
        const Rat inv = a[row][col].reciprocal();
        for (auto& x : a[row]) x *= inv;
        b[row] *= inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][col].is_zero()) continue;
            const Rat f = a[r][col];
            for (std::size_t c = col; c < unknowns; ++c) a[r][c] -= f * a[row][c];
            b[r] -= f * b[row];
        }
        pivot_cols.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < a.size(); ++r)
        if (!b[r].is_zero()) return std::nullopt;
    std::vector<Rat> x(unknowns);
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) x[pivot_cols[r]] = b[r];
    return x;
}

// 1 + c₁u⁻¹ + … + c_d u⁻ᵈ  ↦  u^d + c₁u^{d−1} + … + c_d, trailing zeros dropped.
MonicPoly poly_from_inverse(std::vector<Rat> c) {
    if (c.empty() || c.front() != Rat(1)) throw InputError("component constant term must be 1");
    while (c.size() > 1 && c.back().is_zero()) c.pop_back();
    std::reverse(c.begin(), c.end());
    return MonicPoly(roots_from_coefficients(c));
}

}  // namespace

InverseRatio inverse_form(const MonicPoly& p) {
    auto c = p.coefficients();
    std::reverse(c.begin(), c.end());
    return InverseRatio{std::move(c), {Rat(1)}};
}

std::optional<InverseRatio> rational_form(const TruncatedSeries& series) {
    const std::size_t n = series.order();
    auto c = [&](std::size_t k, std::size_t j) { return k >= j ? series[k - j] : Rat(0); };
    for (std::size_t total = 0; total < n; ++total) {
        for (std::size_t e = 0; e <= total; ++e) {
            const std::size_t d = total - e;
            // Σ_{j=1..e} q_j c_{k−j} = −c_k for k = d+1..N
            std::vector<std::vector<Rat>> a;
            std::vector<Rat> b;
            for (std::size_t k = d + 1; k <= n; ++k) {
                std::vector<Rat> row(e);
                for (std::size_t j = 1; j <= e; ++j) row[j - 1] = c(k, j);
                a.push_back(std::move(row));
                b.push_back(-series[k]);
            }
            const auto q = solve(std::move(a), std::move(b), e);
            if (!q) continue;
            InverseRatio out;
            out.den.assign(1, Rat(1));
            out.den.insert(out.den.end(), q->begin(), q->end());
            out.num.assign(d + 1, Rat(0));
            for (std::size_t k = 0; k <= d; ++k)
                for (std::size_t j = 0; j <= std::min(e, k); ++j) out.num[k] += out.den[j] * series[k - j];
            return out;
        }
    }
    return std::nullopt;
}

Normalized normalize_twist(std::span<const WeightComponent> components) {
    if (components.empty()) throw InputError("highest weight needs at least one component");

    std::vector<RationalFn> ratios;
    for (std::size_t idx = 0; idx < components.size(); ++idx) {
        InverseRatio ratio;
        if (const auto* r = std::get_if<InverseRatio>(&components[idx])) {
            ratio = *r;
        } else {
            const auto& s = std::get<TruncatedSeries>(components[idx]);
            if (s[0] != Rat(1)) throw InputError("component constant term must be 1");
            auto found = rational_form(s);
            if (!found) throw NonRationalComponent(idx + 1);
            ratio = std::move(*found);
        }
        ratios.push_back(reduce_ratio(poly_from_inverse(ratio.num), poly_from_inverse(ratio.den)));
    }

    RootMultiset lcm;
    for (const auto& f : ratios) lcm = merge(lcm, minus(f.den().roots(), lcm));

    std::vector<RootMultiset> polys;
    std::size_t level = 0;
    for (const auto& f : ratios) {
        polys.push_back(merge(f.num().roots(), minus(lcm, f.den().roots())));
        level = std::max(level, polys.back().size());
    }
    std::vector<MonicPoly> comps;
    for (auto& g : polys) comps.emplace_back(merge(g, RootMultiset(std::vector<Rat>(level - g.size(), Rat(0)))));
    return Normalized{HighestWeight(level, std::move(comps)), MonicPoly(lcm)};
}

}  // namespace yhw
