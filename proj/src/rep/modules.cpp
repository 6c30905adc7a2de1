#include "yhw/rep/modules.hpp"

#include "yhw/errors.hpp"

namespace yhw {

namespace {

Vec unit(std::size_t dim, std::size_t k) {
    Vec v(dim);
    v[k] = Rat(1);
    return v;
}

// Level-1 module T_ij(u) = δ_ij (u − a) + (−1)^{ī} E_ij.
YangianRep level_one(const ParitySeq& sigma, SuperVec space, const std::vector<Matrix>& e, const Rat& a, Vec xi) {
    const std::size_t n = sigma.size();
    const std::size_t d = space.dim();
    std::vector<PolyMatrix> t;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix c0 = sigma[i] ? Rat(-1) * e[i * n + j] : e[i * n + j];
            std::vector<Matrix> coeffs{std::move(c0)};
            if (i == j) {
                coeffs[0] -= a * Matrix::identity(d);
                coeffs.push_back(Matrix::identity(d));
            }
            t.emplace_back(d, std::move(coeffs));
        }
    return YangianRep(sigma, 1, std::move(space), std::move(t), std::move(xi));
}

}  // namespace

YangianRep build_vector_module(const ParitySeq& sigma, const Rat& a) {
    const std::size_t n = sigma.size();
    std::vector<Matrix> e(n * n, Matrix(n, n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) e[i * n + j](i, j) = Rat(1);
    return level_one(sigma, SuperVec{sigma.bits()}, e, a, unit(n, 0));
}

YangianRep build_kac_module(const ParitySeq& sigma, const Rat& a1, const Rat& a2, const Rat& a, bool quotient) {
    if (sigma.size() != 2 || sigma[0] == sigma[1]) throw InputError("Kac modules need the parity sequence 01 or 10");
    if (quotient && (a1 + a2).is_zero()) {
        std::vector<Matrix> e(4, Matrix(1, 1));
        e[0](0, 0) = a1;
        e[3](0, 0) = a2;
        return level_one(sigma, SuperVec{{0}}, e, a, unit(1, 0));
    }
    std::vector<Matrix> e(4, Matrix(2, 2));
    e[0](0, 0) = a1;
    e[0](1, 1) = a1 - Rat(1);
    e[1](0, 1) = a1 + a2;
    e[2](1, 0) = Rat(1);
    e[3](0, 0) = a2;
    e[3](1, 1) = a2 + Rat(1);
    return level_one(sigma, SuperVec{{0, 1}}, e, a, unit(2, 0));
}

YangianRep build_trivial_module(const ParitySeq& sigma, const Rat& a) {
    const std::size_t n = sigma.size();
    return level_one(sigma, SuperVec{{0}}, std::vector<Matrix>(n * n, Matrix(1, 1)), a, unit(1, 0));
}

YangianRep tensor_modules(const YangianRep& r1, const YangianRep& r2, std::size_t max_dim) {
    if (r1.parity_seq() != r2.parity_seq()) throw InputError("tensor factors have different parity sequences");
    const std::size_t d = r1.dim() * r2.dim();
    if (d > max_dim) throw DimensionCapExceeded(d, max_dim);
    const auto& sigma = r1.parity_seq();
    const std::size_t n = sigma.size();
    const auto& par1 = r1.space().parities;

    SuperVec space;
    for (auto p1 : par1)
        for (auto p2 : r2.space().parities) space.parities.push_back(p1 ^ p2);

    std::vector<PolyMatrix> t;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Matrix> coeffs(r1.level() + r2.level() + 1, Matrix(d, d));
            for (std::size_t k = 0; k < n; ++k) {
                const bool odd_y = sigma[k] != sigma[j];
                const auto& a = r1.T(i, k).coeffs();
                const auto& b = r2.T(k, j).coeffs();
                for (std::size_t x = 0; x < a.size(); ++x) {
                    if (a[x].is_zero()) continue;
                    const Matrix ax = odd_y ? negate_columns(a[x], par1) : a[x];
                    for (std::size_t y = 0; y < b.size(); ++y)
                        if (!b[y].is_zero()) coeffs[x + y] += kron(ax, b[y]);
                }
            }
            t.emplace_back(d, std::move(coeffs));
        }

    std::optional<Vec> xi;
    if (r1.xi() && r2.xi()) {
        xi.emplace();
        for (const auto& x : *r1.xi())
            for (const auto& y : *r2.xi()) xi->push_back(x * y);
    }
    return YangianRep(sigma, r1.level() + r2.level(), std::move(space), std::move(t), std::move(xi));
}

YangianRep relabel(const YangianRep& r, std::size_t pos, std::optional<Vec> xi) {
    const std::size_t n = r.size();
    if (pos < 1 || pos >= n) throw InputError("relabel position out of range");
    auto s = [pos](std::size_t a) { return a == pos - 1 ? pos : a == pos ? pos - 1 : a; };
    std::vector<PolyMatrix> t;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t.push_back(r.T(s(a), s(b)));
    return YangianRep(r.parity_seq().swapped(pos), r.level(), r.space(), std::move(t), xi ? std::move(xi) : r.xi());
}

YangianRep negate_spectral(const YangianRep& r) {
    if (r.size() != 2) throw InputError("spectral negation needs a parity sequence of length 2");
    const Rat sign(r.level() % 2 ? -1 : 1);
    std::vector<PolyMatrix> t;
    for (const auto& p : r.all_T()) t.push_back(sign * p.negated_argument());
    const auto& bits = r.parity_seq().bits();
    ParitySeq flipped({static_cast<std::uint8_t>(1 - bits[0]), static_cast<std::uint8_t>(1 - bits[1])});
    return YangianRep(flipped, r.level(), r.space(), std::move(t), r.xi());
}

}  // namespace yhw
