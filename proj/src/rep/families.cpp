#include "yhw/rep/families.hpp"

#include <algorithm>

#include "yhw/errors.hpp"
#include "yhw/rep/highest.hpp"
#include "yhw/rep/relations.hpp"

namespace yhw {

std::optional<Family> parse_family(std::string_view name) {
    if (name == "rtt") return Family::rtt;
    if (name == "prop42") return Family::prop42;
    if (name == "reflection") return Family::reflection;
    if (name == "berezinian") return Family::berezinian;
    return std::nullopt;
}

const char* to_string(Family f) {
    switch (f) {
        case Family::rtt: return "rtt";
        case Family::prop42: return "prop42";
        case Family::reflection: return "reflection";
        case Family::berezinian: return "berezinian";
    }
    return "";
}

Rat random_root(std::mt19937_64& rng) {
    static const std::vector<Rat> pool = [] {
        std::vector<Rat> v;
        for (int k = -5; k <= 5; ++k) v.emplace_back(k);
        for (int k : {-3, -1, 1, 3}) v.emplace_back(k, 2);
        return v;
    }();
    return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
}

namespace {

bool is_gl11(const ParitySeq& sigma) { return sigma.size() == 2 && sigma[0] != sigma[1]; }

// Kac module over σ with λ = (u+α, u+β) at shift s.
YangianRep kac_with_weight(const ParitySeq& sigma, const Rat& alpha, const Rat& beta, const Rat& s) {
    // σ = 01: λ = (u − s + a₁, u − s − a₂);  σ = 10: λ = (u − s − a₁, u − s + a₂)
    if (sigma[0] == 0) return build_kac_module(sigma, alpha + s, -(beta + s), s);
    return build_kac_module(sigma, -(alpha + s), beta + s, s);
}

YangianRep tensor_all(std::vector<YangianRep> factors, std::size_t max_dim) {
    YangianRep r = std::move(factors.front());
    for (std::size_t k = 1; k < factors.size(); ++k) r = tensor_modules(r, factors[k], max_dim);
    return r;
}

ParitySeq random_parity(std::mt19937_64& rng, std::size_t size) {
    std::vector<std::uint8_t> bits;
    for (std::size_t j = 0; j < size; ++j) bits.push_back(static_cast<std::uint8_t>(rng() % 2));
    return ParitySeq(std::move(bits));
}

std::size_t draw(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool all_passed(const std::vector<CheckResult>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

void prefix_checks(std::vector<CheckResult>& into, const std::vector<CheckResult>& from, const std::string& prefix) {
    for (auto c : from) {
        c.name = prefix + c.name;
        into.push_back(std::move(c));
    }
}

InstanceOutcome run_rtt(std::mt19937_64& rng, const FamilyParams& params) {
    const ParitySeq sigma = params.parity ? *params.parity : random_parity(rng, draw(rng, 1, 3));
    const std::size_t factors = params.level.value_or(2);
    const auto r = random_eval_tensor(rng, sigma, factors, params.max_dim);
    const auto report = check_defining_relations(r);
    InstanceOutcome out{.parity = sigma.str(), .level = r.level(), .dim = r.dim(),
                        .weight = read_highest_weight(r).str()};
    out.checks.push_back({"rtt", report.ok, report.violation ? report.violation->str() : ""});
    return out;
}

InstanceOutcome run_prop42(std::mt19937_64& rng, const FamilyParams& params) {
    const ParitySeq sigma = params.parity.value_or(ParitySeq::parse("01"));
    if (!is_gl11(sigma)) throw InputError("family prop42 needs the parity sequence 01 or 10");
    const std::size_t p = params.level ? *params.level : draw(rng, 1, 3);
    const auto r = irreducible_quotient(random_kac_tensor(rng, sigma, p, params.max_dim));
    const auto report = verify_key_relations(r);
    InstanceOutcome out{.parity = sigma.str(), .level = p, .dim = r.dim(), .weight = report.weight.str()};
    out.checks = report.checks;
    if (out.checks.empty()) out.checks.push_back({"key_relations", report.ok, "no checks ran"});
    return out;
}

InstanceOutcome run_reflection(std::mt19937_64& rng, const FamilyParams& params) {
    static const char* defaults[] = {"10", "101", "110"};
    const ParitySeq sigma = params.parity ? *params.parity : ParitySeq::parse(defaults[draw(rng, 0, 2)]);
    const std::size_t p = params.level ? *params.level : draw(rng, 1, 2);
    const auto r = irreducible_quotient(random_eval_tensor(rng, sigma, p, params.max_dim));
    const auto weight = read_highest_weight(r);
    InstanceOutcome out{.parity = sigma.str(), .level = p, .dim = r.dim(), .weight = weight.str()};
    bool any = false;
    for (std::size_t pos = 1; pos < sigma.size(); ++pos) {
        if (!sigma.is_odd_position(pos)) continue;
        any = true;
        const std::string tag = "i=" + std::to_string(pos) + ":";
        const auto rep = verify_odd_reflection(r, pos);
        prefix_checks(out.checks, rep.checks, tag);
        if (!rep.reflected) continue;
        const auto back = verify_odd_reflection(*rep.reflected, pos);
        const bool identity = back.ok && back.reflected_parity == sigma && back.observed && *back.observed == weight &&
                              back.expected == weight;
        out.checks.push_back({tag + "double_reflection", identity, identity ? "" : "reflecting twice did not restore (sigma, lambda)"});
    }
    if (!any) throw InputError("family reflection needs a parity sequence with an odd position");
    return out;
}

InstanceOutcome run_berezinian(std::mt19937_64& rng, const FamilyParams& params) {
    const ParitySeq sigma = params.parity.value_or(ParitySeq::parse("01"));
    if (sigma.str() != "01") throw InputError("family berezinian needs the parity sequence 01");
    const std::size_t p = params.level ? *params.level : draw(rng, 1, 3);
    const std::size_t order = params.order.value_or(default_order(p));
    std::vector<Rat> alpha, beta;
    for (std::size_t k = 0; k < p; ++k) {
        alpha.push_back(random_root(rng));
        beta.push_back(random_root(rng));
    }
    const auto r = kac_tensor_for(alpha, beta, params.max_dim);
    const auto b = berezinian_action(r, order);
    InstanceOutcome out{.parity = sigma.str(), .level = p, .dim = r.dim(), .weight = read_highest_weight(r).str()};
    out.checks.push_back({"central", b.central, b.central ? "" : "a coefficient of b(u) does not commute with a generator"});
    out.checks.push_back({"scalar_match", b.scalar_match, b.scalar_match ? "" : "b(u) xi differs from lambda2/lambda1"});
    return out;
}

}  // namespace

YangianRep random_eval_tensor(std::mt19937_64& rng, const ParitySeq& sigma, std::size_t factors, std::size_t max_dim) {
    if (factors == 0) throw InputError("need at least one tensor factor");
    std::vector<YangianRep> mods;
    for (std::size_t k = 0; k < factors; ++k) {
        const Rat shift = random_root(rng);
        if (is_gl11(sigma) && rng() % 2) {
            const Rat alpha = random_root(rng);
            Rat beta = random_root(rng);
            if (beta == alpha) beta += Rat(1, 3);
            mods.push_back(kac_with_weight(sigma, alpha, beta, shift));
        } else {
            mods.push_back(build_vector_module(sigma, shift));
        }
    }
    return tensor_all(std::move(mods), max_dim);
}

YangianRep random_kac_tensor(std::mt19937_64& rng, const ParitySeq& sigma, std::size_t p, std::size_t max_dim) {
    if (!is_gl11(sigma)) throw InputError("Kac modules need the parity sequence 01 or 10");
    if (p == 0) throw InputError("need at least one tensor factor");
    std::vector<Rat> alpha, beta;
    for (std::size_t k = 0; k < p; ++k) {
        alpha.push_back(random_root(rng));
        Rat b = random_root(rng);
        while (b == alpha.back()) b = random_root(rng);
        beta.push_back(b);
    }
    if (p > 1 && rng() % 2) {
        const std::size_t from = draw(rng, 0, p - 1);
        const std::size_t to = (from + draw(rng, 1, p - 1)) % p;
        if (alpha[from] != alpha[to]) beta[to] = alpha[from];
    }
    std::vector<YangianRep> mods;
    for (std::size_t k = 0; k < p; ++k) mods.push_back(kac_with_weight(sigma, alpha[k], beta[k], random_root(rng)));
    return tensor_all(std::move(mods), max_dim);
}

YangianRep kac_tensor_for(const std::vector<Rat>& alpha, const std::vector<Rat>& beta, std::size_t max_dim) {
    if (alpha.size() != beta.size() || alpha.empty()) throw InputError("weight components must have equal positive degree");
    const auto sigma = ParitySeq::parse("01");
    std::vector<YangianRep> mods;
    for (std::size_t k = 0; k < alpha.size(); ++k) mods.push_back(kac_with_weight(sigma, alpha[k], beta[k], Rat(0)));
    return tensor_all(std::move(mods), max_dim);
}

FamilyRun run_family(const FamilyParams& params) {
    FamilyRun run;
    for (std::size_t k = 0; k < params.count; ++k) {
        std::seed_seq seq{static_cast<std::uint32_t>(params.seed), static_cast<std::uint32_t>(params.seed >> 32),
                          static_cast<std::uint32_t>(k)};
        std::mt19937_64 rng(seq);
        InstanceOutcome out;
        switch (params.family) {
            case Family::rtt: out = run_rtt(rng, params); break;
            case Family::prop42: out = run_prop42(rng, params); break;
            case Family::reflection: out = run_reflection(rng, params); break;
            case Family::berezinian: out = run_berezinian(rng, params); break;
        }
        out.index = k;
        out.passed = all_passed(out.checks);
        run.passed += out.passed;
        run.instances.push_back(std::move(out));
    }
    return run;
}

}  // namespace yhw
