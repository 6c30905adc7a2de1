#include "yhw/rep/yangian_rep.hpp"

#include "yhw/errors.hpp"

namespace yhw {

YangianRep::YangianRep(ParitySeq sigma, std::size_t level, SuperVec space, std::vector<PolyMatrix> t,
                       std::optional<Vec> xi)
    : sigma_(std::move(sigma)), level_(level), space_(std::move(space)), t_(std::move(t)), xi_(std::move(xi)) {
    const std::size_t n = size();
    const std::size_t d = dim();
    if (t_.size() != n * n) throw InputError("representation needs (m+n)^2 matrix polynomials");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto& p = T(i, j);
            if (p.dim() != d) throw InputError("matrix polynomial size does not match the module");
            if (p.degree() > static_cast<int>(level_)) throw InputError("matrix polynomial degree exceeds the level");
            const Matrix lead = p.coeff(level_);
            if (i == j ? !lead.is_identity() : !lead.is_zero())
                throw InputError("T_ij(u) is not monic-normalized");
            const unsigned gen_parity = sigma_[i] ^ sigma_[j];
            for (const auto& c : p.coeffs())
                for (std::size_t r = 0; r < d; ++r)
                    for (std::size_t col = 0; col < d; ++col)
                        if (!c(r, col).is_zero() && (space_.parities[r] ^ space_.parities[col]) != gen_parity)
                            throw InputError("matrix entry violates parity consistency");
        }
    if (xi_ && xi_->size() != d) throw InputError("highest vector has wrong length");
}

YangianRep YangianRep::with_xi(Vec xi) const {
    YangianRep out = *this;
    if (xi.size() != dim()) throw InputError("highest vector has wrong length");
    out.xi_ = std::move(xi);
    return out;
}

Matrix YangianRep::t(std::size_t i, std::size_t j, std::size_t r) const { return T(i, j).coeff(level_ - r); }

std::vector<Generator> YangianRep::generators() const {
    std::vector<Generator> out;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j) {
            const auto& coeffs = T(i, j).coeffs();
            for (std::size_t r = 1; r <= level_; ++r) {
                if (level_ - r >= coeffs.size()) continue;  // zero coefficient
                out.push_back({i, j, r, static_cast<std::uint8_t>(sigma_[i] ^ sigma_[j]), &coeffs[level_ - r]});
            }
        }
    return out;
}

std::optional<std::uint8_t> YangianRep::vector_parity(const Vec& v) const {
    std::optional<std::uint8_t> par;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        if (par && *par != space_.parities[k]) return std::nullopt;
        par = space_.parities[k];
    }
    return par;
}

}  // namespace yhw
