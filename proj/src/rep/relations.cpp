#include "yhw/rep/relations.hpp"

#include <sstream>

namespace yhw {

namespace {

struct Sparse {
    std::vector<std::vector<std::pair<std::size_t, Rat>>> rows;
};

Sparse sparsify(const Matrix& m) {
    Sparse s;
    s.rows.resize(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m(r, c).is_zero()) s.rows[r].emplace_back(c, m(r, c));
    return s;
}

// Dense accumulator that remembers which entries it touched.
class Accumulator {
public:
    explicit Accumulator(std::size_t dim) : dim_(dim), data_(dim * dim), touched_flag_(dim * dim, 0) {}

    void add(const Sparse& a, const Sparse& b, int sign) {
        for (std::size_t r = 0; r < a.rows.size(); ++r)
            for (const auto& [k, x] : a.rows[r])
                for (const auto& [c, y] : b.rows[k]) {
                    const std::size_t idx = r * dim_ + c;
                    if (!touched_flag_[idx]) {
                        touched_flag_[idx] = 1;
                        touched_.push_back(idx);
                    }
                    if (sign > 0) data_[idx] += x * y;
                    else data_[idx] -= x * y;
                }
    }

    std::optional<std::pair<std::size_t, std::size_t>> first_nonzero() const {
        std::optional<std::size_t> best;
        for (auto idx : touched_)
            if (!data_[idx].is_zero() && (!best || idx < *best)) best = idx;
        if (!best) return std::nullopt;
        return std::make_pair(*best / dim_, *best % dim_);
    }

    void clear() {
        for (auto idx : touched_) {
            data_[idx] = Rat(0);
            touched_flag_[idx] = 0;
        }
        touched_.clear();
    }

private:
    std::size_t dim_;
    std::vector<Rat> data_;
    std::vector<std::uint8_t> touched_flag_;
    std::vector<std::size_t> touched_;
};

// Sparse copies of every coefficient matrix A^{ij}_a, a = 0..p.
class CoeffTable {
public:
    explicit CoeffTable(const YangianRep& r) : width_(r.level() + 1) {
        for (const auto& p : r.all_T())
            for (std::size_t a = 0; a < width_; ++a) coeffs_.push_back(sparsify(p.coeff(a)));
    }

    const Sparse& operator()(std::size_t gen, std::size_t a) const { return coeffs_[gen * width_ + a]; }

private:
    std::size_t width_;
    std::vector<Sparse> coeffs_;
};

// Entry (row, col) of the product a·b.
Rat product_entry(const Sparse& a, const Sparse& b, std::size_t row, std::size_t col) {
    Rat total(0);
    for (const auto& [k, x] : a.rows[row])
        for (const auto& [c, y] : b.rows[k])
            if (c == col) total += x * y;
    return total;
}

}  // namespace

std::string RelationViolation::str() const {
    std::ostringstream os;
    os << "T_" << i + 1 << j + 1 << ", T_" << k + 1 << l + 1 << " at u^" << u_power << " v^" << v_power << " entry ("
       << row << ", " << col << "): lhs " << lhs << " != rhs " << rhs;
    return os.str();
}

RelationReport check_defining_relations(const YangianRep& r) {
    const std::size_t n = r.size();
    const std::size_t p = r.level();
    const auto& sigma = r.parity_seq();
    CoeffTable table(r);
    Accumulator acc(r.dim());
    RelationReport report;

    auto gen = [n](std::size_t a, std::size_t b) { return a * n + b; };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    const unsigned bi = sigma[i], bj = sigma[j], bk = sigma[k], bl = sigma[l];
                    const int s1 = ((bi ^ bj) & (bk ^ bl)) ? -1 : 1;
                    const int s2 = ((bi & bj) ^ (bi & bk) ^ (bj & bk)) ? -1 : 1;
                    const std::size_t ij = gen(i, j), kl = gen(k, l), kj = gen(k, j), il = gen(i, l);
                    // X_{a,b} = A^{ij}_a A^{kl}_b − s1 A^{kl}_b A^{ij}_a
                    auto add_x = [&](std::size_t a, std::size_t b, int sign) {
                        acc.add(table(ij, a), table(kl, b), sign);
                        acc.add(table(kl, b), table(ij, a), -sign * s1);
                    };
                    for (std::size_t a = 0; a <= p + 1; ++a)
                        for (std::size_t b = 0; b <= p + 1; ++b) {
                            // lhs − rhs, lhs = X_{a−1,b} − X_{a,b−1}
                            if (a >= 1 && b <= p) add_x(a - 1, b, 1);
                            if (b >= 1 && a <= p) add_x(a, b - 1, -1);
                            if (a <= p && b <= p) {
                                acc.add(table(kj, a), table(il, b), -s2);
                                acc.add(table(kj, b), table(il, a), s2);
                            }
                            ++report.equations_checked;
                            if (auto bad = acc.first_nonzero()) {
                                RelationViolation v{i, j, k, l, a, b, bad->first, bad->second, Rat(0), Rat(0)};
                                // recompute both sides for the report
                                auto side = [&](bool lhs_side) {
                                    Rat total(0);
                                    auto prod = [&](std::size_t x, std::size_t xa, std::size_t y, std::size_t yb) {
                                        return product_entry(table(x, xa), table(y, yb), v.row, v.col);
                                    };
                                    if (lhs_side) {
                                        if (a >= 1 && b <= p)
                                            total += prod(ij, a - 1, kl, b) - Rat(s1) * prod(kl, b, ij, a - 1);
                                        if (b >= 1 && a <= p)
                                            total -= prod(ij, a, kl, b - 1) - Rat(s1) * prod(kl, b - 1, ij, a);
                                    } else if (a <= p && b <= p) {
                                        total += Rat(s2) * (prod(kj, a, il, b) - prod(kj, b, il, a));
                                    }
                                    return total;
                                };
                                v.lhs = side(true);
                                v.rhs = side(false);
                                report.ok = false;
                                report.violation = v;
                                return report;
                            }
                            acc.clear();
                        }
                }
    return report;
}

}  // namespace yhw
