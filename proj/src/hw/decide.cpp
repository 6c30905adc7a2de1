#include "yhw/hw/decide.hpp"

#include <map>

#include "yhw/errors.hpp"

namespace yhw {

namespace {

Rat fractional_part(const Rat& r) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
    return r - Rat(mpq_class(fl));
}

std::map<Rat, std::vector<Rat>> by_class(const RootMultiset& roots) {
    std::map<Rat, std::vector<Rat>> classes;
    for (const auto& r : roots) classes[fractional_part(r)].push_back(r);  // stays descending
    return classes;
}

}  // namespace

std::optional<MonicPoly> is_P_shift_ratio(const RationalFn& f) {
    if (f.num().degree() != f.den().degree()) return std::nullopt;
    const auto tops = by_class(f.num().roots());
    const auto bottoms = by_class(f.den().roots());
    if (tops.size() != bottoms.size()) return std::nullopt;

    std::vector<Rat> string_roots;
    for (const auto& [cls, a] : tops) {
        const auto it = bottoms.find(cls);
        if (it == bottoms.end() || it->second.size() != a.size()) return std::nullopt;
        const auto& b = it->second;
        for (std::size_t j = 0; j < a.size(); ++j) {
            const Rat gap = a[j] - b[j];
            if (gap < Rat(1)) return std::nullopt;
            for (Rat r = b[j]; r < a[j]; r += Rat(1)) string_roots.push_back(r);
        }
    }
    return MonicPoly(RootMultiset(std::move(string_roots)));
}

RationalFn even_pair_ratio(const ParitySeq& parity, const HighestWeight& weight, std::size_t pos) {
    const std::size_t i = pos - 1;
    if (parity[i] == 0) return reduce_ratio(weight[i], weight[i + 1]);
    return reduce_ratio(weight[i + 1], weight[i]);
}

std::optional<std::size_t> necessary_condition_failure(const ParitySeq& parity, const HighestWeight& weight) {
    for (std::size_t pos = 1; pos < parity.size(); ++pos) {
        if (parity.is_odd_position(pos)) continue;
        if (!is_P_shift_ratio(even_pair_ratio(parity, weight, pos))) return pos;
    }
    return std::nullopt;
}

Decision decide_finite_dimensional(const ParitySeq& parity, const HighestWeight& weight, ReflectionOrder order) {
    if (weight.size() != parity.size()) throw InputError("weight and parity sequence have different lengths");

    ParitySeq sigma = parity;
    HighestWeight lambda = weight;
    std::vector<ReflectionStep> trail;
    while (!sigma.is_standard()) {
        std::size_t pos = 0;
        for (std::size_t i = 1; i < sigma.size(); ++i) {
            if (sigma[i - 1] == 1 && sigma[i] == 0) {
                pos = i;
                if (order == ReflectionOrder::smallest_first) break;
            }
        }
        auto r = odd_reflect(sigma, lambda, pos);
        sigma = std::move(r.parity);
        lambda = std::move(r.weight);
        trail.push_back(std::move(r.step));
    }

    Decision d{Verdict::finite_dim, sigma, lambda, std::move(trail), std::nullopt, std::nullopt};
    DrinfeldData cert;
    const std::size_t m = sigma.m();
    for (std::size_t pos = 1; pos < sigma.size(); ++pos) {
        const auto ratio = even_pair_ratio(sigma, lambda, pos);
        if (pos == m) {
            // boundary between the last 0 and the first 1: no condition
            cert.boundary = reduce_ratio(lambda[pos - 1], lambda[pos]);
            continue;
        }
        auto P = is_P_shift_ratio(ratio);
        if (!P) {
            d.verdict = Verdict::infinite_dim;
            d.failure = FailureWitness{pos, ratio};
            return d;
        }
        cert.polys.emplace_back(pos, std::move(*P));
    }
    d.certificate = std::move(cert);
    return d;
}

bool validate_certificate(const Decision& d) {
    const auto& sigma = d.final_parity;
    const auto& lambda = d.final_weight;
    if (!sigma.is_standard() || lambda.size() != sigma.size()) return false;
    const std::size_t m = sigma.m();

    if (d.verdict == Verdict::infinite_dim) {
        if (!d.failure || d.certificate) return false;
        const std::size_t pos = d.failure->position;
        if (pos < 1 || pos >= sigma.size() || pos == m) return false;
        return d.failure->ratio == even_pair_ratio(sigma, lambda, pos) && !is_P_shift_ratio(d.failure->ratio);
    }

    if (!d.certificate || d.failure) return false;
    std::size_t expected = 0;
    for (const auto& [pos, P] : d.certificate->polys) {
        if (pos < 1 || pos >= sigma.size() || pos == m) return false;
        if (reduce_ratio(shift_poly(P, Rat(1)), P) != even_pair_ratio(sigma, lambda, pos)) return false;
        ++expected;
    }
    const bool has_boundary = m > 0 && m < sigma.size();
    if (expected + (has_boundary ? 1 : 0) + 1 != sigma.size()) return false;
    if (has_boundary != d.certificate->boundary.has_value()) return false;
    if (has_boundary) {
        const auto& q = *d.certificate->boundary;
        if (q.num().degree() != q.den().degree()) return false;
        if (q != reduce_ratio(lambda[m - 1], lambda[m])) return false;
    }
    return true;
}

}  // namespace yhw
