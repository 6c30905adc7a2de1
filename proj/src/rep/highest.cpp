#include "yhw/rep/highest.hpp"

#include <deque>

#include "yhw/errors.hpp"

namespace yhw {

NotSingular::NotSingular(std::size_t i_, std::size_t j_, std::size_t power_)
    : std::runtime_error(i_ == j_ ? "highest vector is not an eigenvector of T_" + std::to_string(i_ + 1) +
                                        std::to_string(j_ + 1) + " at u^" + std::to_string(power_)
                                  : "highest vector is not annihilated by T_" + std::to_string(i_ + 1) +
                                        std::to_string(j_ + 1) + " at u^" + std::to_string(power_)),
      i(i_),
      j(j_),
      power(power_) {}

namespace {

// Restricted action A with g B = B A for a basis B of an invariant subspace,
// via the pivot rows J of B: A = B_J⁻¹ (g B)_J.
class SubspaceAction {
public:
    explicit SubspaceAction(const std::vector<Vec>& basis) : basis_(basis) {
        // pivot rows of B are pivot columns of Bᵀ
        rows_ = pivot_columns(basis);
        Matrix bj(basis.size(), basis.size());
        for (std::size_t a = 0; a < rows_.size(); ++a)
            for (std::size_t c = 0; c < basis.size(); ++c) bj(a, c) = basis[c][rows_[a]];
        inv_ = *inverse(bj);
    }

    Matrix restrict(const Matrix& g) const {
        const std::size_t d = basis_.size();
        Matrix gbj(d, d);
        for (std::size_t c = 0; c < d; ++c) {
            const Vec img = g.apply(basis_[c]);
            for (std::size_t a = 0; a < d; ++a) gbj(a, c) = img[rows_[a]];
        }
        return inv_ * gbj;
    }

private:
    const std::vector<Vec>& basis_;
    std::vector<std::size_t> rows_;
    Matrix inv_;
};

// Quotient action A with R g = A R for the rows R of a right-invariant
// subspace, via pivot columns J of R: A = (R g)_J R_J⁻¹.
class QuotientAction {
public:
    explicit QuotientAction(const std::vector<Vec>& rows) : rows_(rows) {
        cols_ = pivot_columns(rows);
        Matrix rj(rows.size(), rows.size());
        for (std::size_t a = 0; a < rows.size(); ++a)
            for (std::size_t c = 0; c < cols_.size(); ++c) rj(a, c) = rows[a][cols_[c]];
        inv_ = *inverse(rj);
    }

    Matrix restrict(const Matrix& g) const {
        const std::size_t d = rows_.size();
        Matrix rgj(d, d);
        for (std::size_t a = 0; a < d; ++a) {
            const Vec img = g.apply_left(rows_[a]);
            for (std::size_t c = 0; c < d; ++c) rgj(a, c) = img[cols_[c]];
        }
        return rgj * inv_;
    }

    Vec project(const Vec& v) const {
        Vec out(rows_.size());
        for (std::size_t a = 0; a < rows_.size(); ++a)
            for (std::size_t k = 0; k < v.size(); ++k)
                if (!v[k].is_zero() && !rows_[a][k].is_zero()) out[a] += rows_[a][k] * v[k];
        return out;
    }

private:
    const std::vector<Vec>& rows_;
    std::vector<std::size_t> cols_;
    Matrix inv_;
};

template <class Action>
std::vector<PolyMatrix> transform_all(const YangianRep& r, const Action& act, std::size_t d) {
    std::vector<PolyMatrix> t;
    for (const auto& p : r.all_T()) {
        std::vector<Matrix> coeffs;
        for (const auto& c : p.coeffs()) coeffs.push_back(act.restrict(c));
        t.emplace_back(d, std::move(coeffs));
    }
    return t;
}

const Vec& require_xi(const YangianRep& r) {
    if (!r.xi()) throw InputError("representation has no highest vector");
    if (is_zero(*r.xi())) throw InputError("highest vector is zero");
    if (!r.vector_parity(*r.xi())) throw InputError("highest vector is not homogeneous");
    return *r.xi();
}

}  // namespace

HighestWeight read_highest_weight(const YangianRep& r) {
    const Vec& xi = require_xi(r);
    std::size_t lead = 0;
    while (xi[lead].is_zero()) ++lead;
    const std::size_t n = r.size();
    std::vector<MonicPoly> comps;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto images = r.T(i, j).apply(xi);
            for (std::size_t pw = 0; pw < images.size(); ++pw)
                if (!is_zero(images[pw])) throw NotSingular(i, j, pw);
        }
        const auto images = r.T(i, i).apply(xi);
        std::vector<Rat> coeffs(r.level() + 1);
        for (std::size_t pw = 0; pw < images.size(); ++pw) {
            coeffs[pw] = images[pw][lead] / xi[lead];
            for (std::size_t c = 0; c < xi.size(); ++c)
                if (images[pw][c] != coeffs[pw] * xi[c]) throw NotSingular(i, i, pw);
        }
        comps.emplace_back(roots_from_coefficients(coeffs));
    }
    return HighestWeight(r.level(), std::move(comps));
}

HighestModule cyclic_highest_module(const YangianRep& r) {
    HighestWeight weight = read_highest_weight(r);
    const Vec& xi = *r.xi();
    const auto gens = r.generators();

    std::vector<Vec> basis;
    std::vector<std::uint8_t> parities;
    SpanBuilder span(r.dim());
    std::deque<std::size_t> queue;
    auto push = [&](Vec v) {
        if (!span.add(v)) return;
        parities.push_back(*r.vector_parity(v));
        basis.push_back(std::move(v));
        queue.push_back(basis.size() - 1);
    };
    push(xi);
    while (!queue.empty()) {
        const std::size_t k = queue.front();
        queue.pop_front();
        for (const auto& g : gens) push(g.matrix->apply(basis[k]));
    }

    const SubspaceAction act(basis);
    Vec e0(basis.size());
    e0[0] = Rat(1);
    YangianRep module(r.parity_seq(), r.level(), SuperVec{parities}, transform_all(r, act, basis.size()), e0);
    return HighestModule{std::move(basis), std::move(weight), std::move(module)};
}

YangianRep irreducible_quotient(const YangianRep& r) {
    const HighestModule hm = cyclic_highest_module(r);
    const YangianRep& v = hm.module;
    const std::size_t d = v.dim();
    if (v.level() == 0 || d == 1) return v;

    // ξ*: the left joint eigenvector of the t_ii^(1) with the eigenvalues of ξ
    Matrix stacked(v.size() * d, d);
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Matrix ti = v.t(i, i, 1);
        const Rat mu = ti(0, 0);  // ξ = e₀ and ti e₀ = μ e₀
        for (std::size_t r1 = 0; r1 < d; ++r1)
            for (std::size_t c = 0; c < d; ++c) stacked(i * d + c, r1) = ti(r1, c) - (r1 == c ? mu : Rat(0));
    }
    auto dual = null_space(stacked);
    if (dual.size() != 1) throw std::logic_error("highest weight space of a cyclic module is not one-dimensional");
    Vec xi_star = std::move(dual.front());
    const Rat scale = xi_star[0].reciprocal();
    for (auto& x : xi_star) x *= scale;

    const auto gens = v.generators();
    std::vector<Vec> rows;
    std::vector<std::uint8_t> parities;
    SpanBuilder span(d);
    std::deque<std::size_t> queue;
    auto push = [&](Vec w) {
        if (!span.add(w)) return;
        parities.push_back(*v.vector_parity(w));
        rows.push_back(std::move(w));
        queue.push_back(rows.size() - 1);
    };
    push(xi_star);
    while (!queue.empty()) {
        const std::size_t k = queue.front();
        queue.pop_front();
        for (const auto& g : gens) push(g.matrix->apply_left(rows[k]));
    }
    if (rows.size() == d) return v;

    const QuotientAction act(rows);
    Vec xi_bar = act.project(*v.xi());
    return YangianRep(v.parity_seq(), v.level(), SuperVec{parities}, transform_all(v, act, rows.size()),
                      std::move(xi_bar));
}

}  // namespace yhw
