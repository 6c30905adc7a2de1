#include "yhw/cli/commands.hpp"

#include <chrono>

#include "yhw/errors.hpp"
#include "yhw/rep/families.hpp"

namespace yhw::cli {

json to_json(const RootMultiset& roots) {
    json out = json::array();
    for (const auto& r : roots.values()) out.push_back(r.str());
    return out;
}

json to_json(const HighestWeight& w) {
    json comps = json::array();
    for (const auto& c : w.components()) comps.push_back(to_json(c.roots()));
    return {{"level", w.level()}, {"roots", comps}, {"display", w.str()}};
}

json to_json(const RationalFn& f) {
    return {{"num_roots", to_json(f.num().roots())}, {"den_roots", to_json(f.den().roots())}, {"display", f.str()}};
}

json to_json(const ReflectionStep& s) {
    return {{"index", s.index},           {"direction", to_string(s.direction)}, {"k", s.k},
            {"shared", to_json(s.shared)}, {"moved_i", to_json(s.moved_i)},      {"moved_i1", to_json(s.moved_i1)}};
}

json to_json(const Decision& d) {
    json trail = json::array();
    for (const auto& s : d.trail) trail.push_back(to_json(s));
    json out{{"verdict", to_string(d.verdict)},
             {"final_parity", d.final_parity.str()},
             {"final_weight", to_json(d.final_weight)},
             {"trail", trail}};
    if (d.certificate) {
        json polys = json::array();
        for (const auto& [pos, P] : d.certificate->polys)
            polys.push_back({{"position", pos}, {"roots", to_json(P.roots())}, {"display", P.str()}});
        out["certificate"] = {{"polys", polys}};
        if (d.certificate->boundary) out["certificate"]["boundary"] = to_json(*d.certificate->boundary);
    }
    if (d.failure) out["failure"] = {{"position", d.failure->position}, {"ratio", to_json(d.failure->ratio)}};
    return out;
}

namespace {

json checks_json(const std::vector<CheckResult>& checks) {
    json out = json::array();
    for (const auto& c : checks) {
        json j{{"name", c.name}, {"passed", c.passed}};
        if (!c.detail.empty()) j["detail"] = c.detail;
        out.push_back(j);
    }
    return out;
}

json weight_block(const ResolvedWeight& w) {
    json out{{"weight", to_json(w.weight)}};
    if (w.twist) out["twist"] = {{"roots", to_json(w.twist->roots())}, {"display", w.twist->str()}};
    return out;
}

Outcome run_decide(const JobSpec& s) {
    std::optional<ResolvedWeight> w;
    try {
        w = resolve_weight(s);
    } catch (const NonRationalComponent& e) {
        // no rational form for λ_i/λ_{i+1}-type data: the module is infinite-dimensional
        return {{{"verdict", "InfiniteDim"}, {"reason", "non-rational component"}, {"component", e.component()}}};
    }
    const auto d = decide_finite_dimensional(*s.parity, w->weight, s.reflection_order);
    json result = weight_block(*w);
    result.update(to_json(d));
    result["certificate_valid"] = validate_certificate(d);
    return {result};
}

Outcome run_reflect(const JobSpec& s) {
    const auto w = resolve_weight(s);
    const auto r = odd_reflect(*s.parity, w.weight, *s.index);
    json result = weight_block(w);
    result["parity"] = r.parity.str();
    result["reflected_weight"] = to_json(r.weight);
    result["step"] = to_json(r.step);
    return {result};
}

Outcome run_chain(const JobSpec& s) {
    const auto w = resolve_weight(s);
    ParitySeq sigma = *s.parity;
    HighestWeight lambda = w.weight;
    json steps = json::array();
    for (const auto pos : chain_to_standard(sigma)) {
        auto r = odd_reflect(sigma, lambda, pos);
        steps.push_back({{"step", to_json(r.step)}, {"parity", r.parity.str()}, {"weight", to_json(r.weight)}});
        sigma = std::move(r.parity);
        lambda = std::move(r.weight);
    }
    json result = weight_block(w);
    result["steps"] = steps;
    result["final_parity"] = sigma.str();
    result["final_weight"] = to_json(lambda);
    return {result};
}

Outcome run_verify(const JobSpec& s) {
    const auto family = parse_family(*s.family);
    if (!family) throw InputError("family: unknown family \"" + *s.family + "\"");
    FamilyParams params;
    params.family = *family;
    params.parity = s.parity;
    params.level = s.level;
    params.count = s.count;
    params.seed = s.seed;
    params.order = s.order;
    params.max_dim = s.max_dim;
    const auto run = run_family(params);

    json instances = json::array();
    json first_failure;
    for (const auto& inst : run.instances) {
        json j{{"index", inst.index}, {"passed", inst.passed}, {"parity", inst.parity}, {"level", inst.level},
               {"dim", inst.dim},     {"weight", inst.weight},  {"checks", checks_json(inst.checks)}};
        if (!inst.passed && first_failure.is_null()) first_failure = j;
        instances.push_back(std::move(j));
    }
    json result{{"family", to_string(*family)},
                {"seed", s.seed},
                {"count", s.count},
                {"passed", run.passed},
                {"all_passed", run.passed == run.instances.size()},
                {"instances", instances}};
    if (!first_failure.is_null()) result["first_failure"] = first_failure;
    return {result, run.passed == run.instances.size() ? kExitOk : kExitVerifyFailure};
}

Outcome run_berezinian(const JobSpec& s) {
    const auto w = resolve_weight(s);
    const auto& alpha = w.weight[0].roots().values();
    const auto& beta = w.weight[1].roots().values();
    const auto r = kac_tensor_for(alpha, beta, s.max_dim);
    const std::size_t order = s.order.value_or(default_order(w.weight.level()));
    const auto b = berezinian_action(r, order);
    json series = json::array();
    for (const auto& c : b.scalar_series.coeffs()) series.push_back(c.str());
    json result = weight_block(w);
    result.update({{"dim", r.dim()},
                   {"order", b.order},
                   {"central", b.central},
                   {"scalar_match", b.scalar_match},
                   {"scalar_series", series},
                   {"expected_ratio", to_json(reduce_ratio(w.weight[1], w.weight[0]))}});
    return {result, b.central && b.scalar_match ? kExitOk : kExitVerifyFailure};
}

}  // namespace

Outcome run_job(const json& job) {
    const auto spec = parse_jobspec(job);
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    switch (spec.command) {
        case Command::decide: out = run_decide(spec); break;
        case Command::reflect: out = run_reflect(spec); break;
        case Command::chain: out = run_chain(spec); break;
        case Command::verify: out = run_verify(spec); break;
        case Command::berezinian: out = run_berezinian(spec); break;
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    out.report = {{"job", job}, {"result", std::move(out.report)}, {"timing", {{"elapsed_ms", ms}}}};
    return out;
}

}  // namespace yhw::cli
