#include "yhw/cli/jobspec.hpp"

#include <algorithm>
#include <array>

#include "yhw/errors.hpp"

namespace yhw::cli {

namespace {

constexpr std::array kCommands{"decide", "reflect", "chain", "verify", "berezinian"};

constexpr std::array kJobKeys{"command", "parity", "level", "weights", "index", "reflection_order", "family",
                              "factors", "count", "seed", "order", "max_dim"};

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw InputError(where + ": " + what); }

Rat rat_of(const json& v, const std::string& where) {
    if (v.is_number_integer()) return Rat(v.get<std::int64_t>());
    if (!v.is_string()) fail(where, "expected a rational as a string");
    try {
        return Rat::parse(v.get<std::string>());
    } catch (const std::exception& e) {
        fail(where, e.what());
    }
}

std::vector<Rat> rat_list(const json& v, const std::string& where) {
    if (!v.is_array()) fail(where, "expected an array of rationals");
    std::vector<Rat> out;
    for (std::size_t k = 0; k < v.size(); ++k) out.push_back(rat_of(v[k], where + "[" + std::to_string(k) + "]"));
    return out;
}

std::size_t count_of(const json& v, const std::string& where, std::size_t min = 0) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
        fail(where, "expected a non-negative integer");
    const auto n = v.get<std::size_t>();
    if (n < min) fail(where, "must be at least " + std::to_string(min));
    return n;
}

WeightInput component_of(const json& c, const std::string& where) {
    if (!c.is_object()) fail(where, "expected an object");
    for (const auto& [key, _] : c.items())
        if (key != "roots" && key != "num_coeffs" && key != "den_coeffs" && key != "series")
            fail(where, "unknown key \"" + key + "\"");
    const bool roots = c.contains("roots"), ratio = c.contains("num_coeffs") || c.contains("den_coeffs"),
               series = c.contains("series");
    if (roots + ratio + series != 1) fail(where, "give exactly one of roots, num_coeffs/den_coeffs, series");
    if (roots) return rat_list(c["roots"], where + ".roots");
    if (series) {
        auto coeffs = rat_list(c["series"], where + ".series");
        if (coeffs.empty()) fail(where + ".series", "must not be empty");
        return WeightComponent(TruncatedSeries(std::move(coeffs)));
    }
    InverseRatio r;
    if (c.contains("num_coeffs")) r.num = rat_list(c["num_coeffs"], where + ".num_coeffs");
    if (c.contains("den_coeffs")) r.den = rat_list(c["den_coeffs"], where + ".den_coeffs");
    for (const auto* list : {&r.num, &r.den})
        if (list->empty() || (*list)[0] != Rat(1)) fail(where, "u^-1 coefficient lists start with \"1\"");
    return WeightComponent(r);
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
    for (std::size_t k = 0; k < kCommands.size(); ++k)
        if (name == kCommands[k]) return static_cast<Command>(k);
    return std::nullopt;
}

const char* to_string(Command c) { return kCommands[static_cast<std::size_t>(c)]; }

json apply_overrides(json job, const Overrides& o) {
    if (!job.is_object()) throw InputError("job: expected a JSON object");
    if (o.command) {
        if (job.contains("command") && job["command"] != to_string(*o.command))
            throw InputError("job: command \"" + job["command"].dump() + "\" does not match subcommand \"" +
                             to_string(*o.command) + "\"");
        job["command"] = to_string(*o.command);
    }
    if (o.seed) job["seed"] = *o.seed;
    if (o.count) job["count"] = *o.count;
    if (o.order) job["order"] = *o.order;
    if (o.max_dim) job["max_dim"] = *o.max_dim;
    if (o.index) job["index"] = *o.index;
    return job;
}

JobSpec parse_jobspec(const json& job) {
    if (!job.is_object()) throw InputError("job: expected a JSON object");
    for (const auto& [key, _] : job.items())
        if (std::find(kJobKeys.begin(), kJobKeys.end(), key) == kJobKeys.end())
            fail("job", "unknown key \"" + key + "\"");

    JobSpec s;
    if (!job.contains("command") || !job["command"].is_string()) fail("command", "required string");
    const auto cmd = parse_command(job["command"].get<std::string>());
    if (!cmd) fail("command", "unknown command " + job["command"].dump());
    s.command = *cmd;

    if (job.contains("parity")) {
        if (!job["parity"].is_string()) fail("parity", "expected a string of 0 and 1");
        try {
            s.parity = ParitySeq::parse(job["parity"].get<std::string>());
        } catch (const std::exception& e) {
            fail("parity", e.what());
        }
    }
    if (job.contains("level")) s.level = count_of(job["level"], "level");
    if (job.contains("factors")) {
        const auto f = count_of(job["factors"], "factors", 1);
        if (s.level && *s.level != f) fail("factors", "conflicts with level");
        s.level = f;
    }
    if (job.contains("weights")) {
        const auto& w = job["weights"];
        if (!w.is_array()) fail("weights", "expected an array");
        for (std::size_t k = 0; k < w.size(); ++k) s.weights.push_back(component_of(w[k], "weights[" + std::to_string(k) + "]"));
    }
    if (job.contains("index")) s.index = count_of(job["index"], "index", 1);
    if (job.contains("reflection_order")) {
        const auto& v = job["reflection_order"];
        if (v == "smallest_first") s.reflection_order = ReflectionOrder::smallest_first;
        else if (v == "largest_first") s.reflection_order = ReflectionOrder::largest_first;
        else fail("reflection_order", "expected \"smallest_first\" or \"largest_first\"");
    }
    if (job.contains("family")) {
        if (!job["family"].is_string()) fail("family", "expected a string");
        s.family = job["family"].get<std::string>();
    }
    if (job.contains("count")) s.count = count_of(job["count"], "count", 1);
    if (job.contains("seed")) {
        if (!job["seed"].is_number_unsigned() && !(job["seed"].is_number_integer() && job["seed"].get<std::int64_t>() >= 0))
            fail("seed", "expected a non-negative integer");
        s.seed = job["seed"].get<std::uint64_t>();
    }
    if (job.contains("order")) s.order = count_of(job["order"], "order", 1);
    if (job.contains("max_dim")) s.max_dim = count_of(job["max_dim"], "max_dim", 1);

    // per-command requirements
    const bool needs_weight = s.command != Command::verify;
    if (needs_weight) {
        if (!s.parity) fail("parity", "required for " + std::string(to_string(s.command)));
        if (s.weights.size() != s.parity->size())
            fail("weights", "expected " + std::to_string(s.parity->size()) + " components, got " +
                                std::to_string(s.weights.size()));
    } else {
        if (!s.family) fail("family", "required for verify");
        if (!s.weights.empty()) fail("weights", "not used by verify");
    }
    if (s.command == Command::reflect && !s.index) fail("index", "required for reflect");
    if (s.command == Command::berezinian && s.parity->str() != "01") fail("parity", "berezinian needs \"01\"");
    return s;
}

ResolvedWeight resolve_weight(const JobSpec& spec) {
    const bool all_roots = std::all_of(spec.weights.begin(), spec.weights.end(),
                                       [](const WeightInput& w) { return std::holds_alternative<std::vector<Rat>>(w); });
    std::optional<ResolvedWeight> out;
    if (all_roots) {
        std::vector<MonicPoly> comps;
        for (std::size_t k = 0; k < spec.weights.size(); ++k) {
            const auto& roots = std::get<std::vector<Rat>>(spec.weights[k]);
            if (!comps.empty() && roots.size() != comps.front().degree())
                fail("weights[" + std::to_string(k) + "].roots", "all root lists must have equal length");
            comps.emplace_back(RootMultiset(roots));
        }
        const std::size_t p = comps.empty() ? 0 : comps.front().degree();
        out.emplace(ResolvedWeight{HighestWeight(p, std::move(comps)), std::nullopt});
    } else {
        std::vector<WeightComponent> comps;
        for (const auto& w : spec.weights) {
            if (const auto* roots = std::get_if<std::vector<Rat>>(&w))
                comps.push_back(inverse_form(MonicPoly(RootMultiset(*roots))));
            else
                comps.push_back(std::get<WeightComponent>(w));
        }
        auto n = normalize_twist(comps);
        out.emplace(ResolvedWeight{std::move(n.weight), std::move(n.twist)});
    }
    if (spec.level) {
        if (*spec.level < out->weight.level())
            fail("level", "weight has level " + std::to_string(out->weight.level()) + " above the requested " +
                              std::to_string(*spec.level));
        while (out->weight.level() < *spec.level) out->weight = out->weight.stabilized();
    }
    return std::move(*out);
}

}  // namespace yhw::cli
