#include "yhw/rep/verify.hpp"

#include <algorithm>
#include <functional>

#include "yhw/errors.hpp"
#include "yhw/rep/highest.hpp"
#include "yhw/rep/modules.hpp"

namespace yhw {

namespace {

CheckResult check(std::string name, bool passed, std::string detail = "") {
    return CheckResult{std::move(name), passed, passed ? "" : std::move(detail)};
}

// p(u)·v for a matrix polynomial equals f(u)·v for a scalar polynomial f.
bool acts_as_scalar(const PolyMatrix& p, const MonicPoly& f, const Vec& v) {
    const auto images = p.apply(v);
    const auto fc = f.coefficients();
    for (std::size_t k = 0; k < std::max(images.size(), fc.size()); ++k)
        for (std::size_t c = 0; c < v.size(); ++c) {
            const Rat lhs = k < images.size() ? images[k][c] : Rat(0);
            const Rat rhs = k < fc.size() ? fc[k] * v[c] : Rat(0);
            if (lhs != rhs) return false;
        }
    return true;
}

// Quotient of Σ_k w_k u^k by a monic scalar polynomial, nullopt if it leaves a remainder.
std::optional<std::vector<Vec>> divide_vector_poly(std::vector<Vec> w, const std::vector<Rat>& g) {
    const std::size_t dg = g.size() - 1;
    if (w.empty()) return std::vector<Vec>{};
    const std::size_t dim = w.front().size();
    if (w.size() <= dg) {
        for (const auto& x : w)
            if (!is_zero(x)) return std::nullopt;
        return std::vector<Vec>{};
    }
    std::vector<Vec> q(w.size() - dg, Vec(dim));
    for (std::size_t k = w.size(); k-- > dg;) {
        q[k - dg] = w[k];
        for (std::size_t j = 0; j <= dg; ++j)
            if (!g[j].is_zero())
                for (std::size_t c = 0; c < dim; ++c) w[k - dg + j][c] -= g[j] * q[k - dg][c];
    }
    for (std::size_t k = 0; k < dg; ++k)
        if (!is_zero(w[k])) return std::nullopt;
    return q;
}

bool annihilates(const PolyMatrix& p, const Vec& v) {
    for (const auto& img : p.apply(v))
        if (!is_zero(img)) return false;
    return true;
}

// Every product t^(r₁)···t^(r_len) of the given matrices vanishes.
bool all_products_vanish(const std::vector<Matrix>& mats, std::size_t len, std::size_t dim) {
    std::function<bool(const Matrix&, std::size_t)> rec = [&](const Matrix& prefix, std::size_t depth) {
        if (prefix.is_zero()) return true;
        if (depth == len) return false;
        for (const auto& m : mats)
            if (!rec(prefix * m, depth + 1)) return false;
        return true;
    };
    return rec(Matrix::identity(dim), 0);
}

KeyRelationsReport key_relations_01(const YangianRep& r) {
    KeyRelationsReport rep{.weight = read_highest_weight(r)};
    const std::size_t p = r.level();
    const Vec& xi = *r.xi();
    const PolyMatrix& t21 = r.T(1, 0);

    const bool anni = (t21.shifted(Rat(1)) * t21).is_zero();
    rep.checks.push_back(check("anni", anni, "T21(u+1) T21(u) != 0"));

    std::vector<Matrix> coeffs;
    for (std::size_t s = 1; s <= p; ++s) coeffs.push_back(r.t(1, 0, s));
    rep.checks.push_back(check("idep", all_products_vanish(coeffs, p + 1, r.dim()),
                               "a product of p+1 coefficients of T21 is nonzero"));

    const auto low = lowering_vector(r, rep.weight, 1);
    rep.k = low.split.k;
    const bool divisible = t21.divide(MonicPoly(low.split.shared)).second.is_zero();
    rep.checks.push_back(check("divisibility", divisible, "T21(u) is not divisible by gamma(u)"));
    if (!divisible || !low.divisible) return rep;

    const Vec& zeta = low.zeta;
    const bool nonzero = !is_zero(zeta);
    rep.checks.push_back(check("zeta_nonzero", nonzero, "zeta = 0"));
    if (nonzero) {
        const MonicPoly gamma(low.split.shared);
        const MonicPoly e1 = MonicPoly(low.split.a_distinct.shifted(Rat(-1))) * gamma;
        const MonicPoly e2 = MonicPoly(low.split.b_distinct.shifted(Rat(-1))) * gamma;
        rep.checks.push_back(check("too", acts_as_scalar(r.T(0, 0), e1, zeta), "T11(u) zeta != " + e1.str() + " zeta"));
        rep.checks.push_back(check("ttt", acts_as_scalar(r.T(1, 1), e2, zeta), "T22(u) zeta != " + e2.str() + " zeta"));
        rep.checks.push_back(check("tto", annihilates(t21, zeta), "T21(u) zeta != 0"));
        if (rep.k == p && p > 0) {
            Vec v = xi;
            for (std::size_t s = p; s >= 1; --s) v = coeffs[s - 1].apply(v);
            rep.checks.push_back(check("veze", proportional(zeta, v), "zeta is not proportional to t21^(1)...t21^(p) xi"));
        }
    }
    rep.ok = std::all_of(rep.checks.begin(), rep.checks.end(), [](const CheckResult& c) { return c.passed; });
    return rep;
}

}  // namespace

LoweringVector lowering_vector(const YangianRep& r, const HighestWeight& weight, std::size_t pos) {
    const auto& sigma = r.parity_seq();
    if (!sigma.is_odd_position(pos)) throw InputError("not an odd position");
    const std::size_t a = pos - 1, b = pos;
    LoweringVector out;
    out.split = partition_common_roots(weight[a], weight[b]);
    out.order = out.split.a_distinct.values();  // stored descending
    if (sigma[a] == 1) std::reverse(out.order.begin(), out.order.end());

    const auto gamma = MonicPoly(out.split.shared).coefficients();
    Vec v = *r.xi();
    for (auto it = out.order.rbegin(); it != out.order.rend(); ++it) {
        auto quotient = divide_vector_poly(r.T(b, a).apply(v), gamma);
        if (!quotient) return out;
        // evaluate the quotient at u = −α
        Vec next(v.size());
        for (std::size_t k = quotient->size(); k-- > 0;)
            for (std::size_t c = 0; c < v.size(); ++c) next[c] = next[c] * -*it + (*quotient)[k][c];
        v = std::move(next);
    }
    out.divisible = true;
    out.zeta = std::move(v);
    return out;
}

KeyRelationsReport verify_key_relations(const YangianRep& r) {
    const auto& sigma = r.parity_seq();
    if (sigma.size() != 2 || sigma[0] == sigma[1]) throw InputError("key relations need the parity sequence 01 or 10");
    if (sigma[0] == 0) return key_relations_01(r);
    auto rep = key_relations_01(negate_spectral(r));
    rep.via_negation = true;
    rep.weight = read_highest_weight(r);
    return rep;
}

ReflectionReport verify_odd_reflection(const YangianRep& r, std::size_t pos) {
    const auto weight = read_highest_weight(r);
    const auto hw = odd_reflect(r.parity_seq(), weight, pos);
    ReflectionReport rep{
        .index = pos, .k = hw.step.k, .reflected_parity = hw.parity, .weight = weight, .expected = hw.weight};

    const auto low = lowering_vector(r, rep.weight, pos);
    rep.checks.push_back(check("divisibility", low.divisible, "T_{i+1,i}(u) v is not divisible by gamma(u)"));
    if (!low.divisible) return rep;
    rep.checks.push_back(check("zeta_nonzero", !is_zero(low.zeta), "zeta = 0"));
    if (is_zero(low.zeta)) return rep;

    YangianRep twisted = relabel(r, pos, low.zeta);
    try {
        rep.observed = read_highest_weight(twisted);
        rep.checks.push_back(check("relab", true));
    } catch (const NotSingular& e) {
        rep.checks.push_back(check("relab", false, e.what()));
        return rep;
    }
    rep.checks.push_back(check("weight_match", *rep.observed == rep.expected,
                               "rep-engine " + rep.observed->str() + " != hw-calculus " + rep.expected.str()));
    rep.reflected = std::move(twisted);
    rep.ok = std::all_of(rep.checks.begin(), rep.checks.end(), [](const CheckResult& c) { return c.passed; });
    return rep;
}

namespace {

using MatSeries = std::vector<Matrix>;

MatSeries mul(const MatSeries& a, const MatSeries& b, std::size_t order) {
    const std::size_t d = a.front().rows();
    MatSeries out(order + 1, Matrix(d, d));
    for (std::size_t i = 0; i <= order; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= order; ++j)
            if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
    return out;
}

// Inverse of a series with identity constant term.
MatSeries inverse(const MatSeries& a, std::size_t order) {
    const std::size_t d = a.front().rows();
    MatSeries out(order + 1, Matrix(d, d));
    out[0] = Matrix::identity(d);
    for (std::size_t k = 1; k <= order; ++k)
        for (std::size_t r = 1; r <= k; ++r)
            if (!a[r].is_zero()) out[k] -= a[r] * out[k - r];
    return out;
}

}  // namespace

BerezinianReport berezinian_action(const YangianRep& r, std::size_t order, BerezinianVariant variant) {
    const auto& sigma = r.parity_seq();
    if (sigma.size() != 2 || sigma[0] != 0 || sigma[1] != 1) throw InputError("Berezinian needs the parity sequence 01");
    const auto weight = read_highest_weight(r);
    const std::size_t d = r.dim();
    const std::size_t p = r.level();

    // t_ij(u) = T_ij(u)/u^p = Σ_k t_ij^(k) u^{−k}
    auto series = [&](std::size_t i, std::size_t j) {
        MatSeries s(order + 1, Matrix(d, d));
        if (i == j) s[0] = Matrix::identity(d);
        for (std::size_t k = 1; k <= std::min(p, order); ++k) s[k] = r.t(i, j, k);
        return s;
    };
    const MatSeries t11inv = inverse(series(0, 0), order);
    MatSeries core = series(1, 1);
    if (variant == BerezinianVariant::quantum) {
        const MatSeries corr = mul(mul(series(1, 0), t11inv, order), series(0, 1), order);
        for (std::size_t k = 0; k <= order; ++k) core[k] -= corr[k];
    }

    BerezinianReport rep;
    rep.order = order;
    rep.b_coeffs = mul(core, t11inv, order);
    rep.scalar_series = expand_series(reduce_ratio(weight[1], weight[0]), order);

    const auto gens = r.generators();
    rep.central = true;
    for (const auto& b : rep.b_coeffs) {
        for (const auto& g : gens)
            if (b * *g.matrix != *g.matrix * b) {
                rep.central = false;
                break;
            }
        if (!rep.central) break;
    }
    rep.scalar_match = true;
    const Vec& xi = *r.xi();
    for (std::size_t k = 0; k <= order && rep.scalar_match; ++k) {
        const Vec img = rep.b_coeffs[k].apply(xi);
        for (std::size_t c = 0; c < d; ++c)
            if (img[c] != rep.scalar_series[k] * xi[c]) rep.scalar_match = false;
    }
    return rep;
}

}  // namespace yhw
