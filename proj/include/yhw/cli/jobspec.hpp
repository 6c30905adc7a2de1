#pragma once

// Job descriptions for the `yhw` front end.  A job is a JSON object; the
// accepted shape is documented in docs/jobspec.schema.json and enforced by
// parse_jobspec, which rejects unknown keys and ill-typed values with
// InputError.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "yhw/hw/decide.hpp"
#include "yhw/hw/twist.hpp"

namespace yhw::cli {

using json = nlohmann::json;

enum class Command { decide, reflect, chain, verify, berezinian };

std::optional<Command> parse_command(std::string_view name);
const char* to_string(Command c);

/// One weight component: explicit roots, or a u⁻¹-form ratio / series.
using WeightInput = std::variant<std::vector<Rat>, WeightComponent>;

struct JobSpec {
    Command command = Command::decide;
    std::optional<ParitySeq> parity;
    std::optional<std::size_t> level;
    std::vector<WeightInput> weights;
    std::optional<std::size_t> index;  // reflect, 1-based
    ReflectionOrder reflection_order = ReflectionOrder::smallest_first;
    std::optional<std::string> family;  // verify
    std::size_t count = 1;
    std::uint64_t seed = 0;
    std::optional<std::size_t> order;
    std::size_t max_dim = 256;
};

/// Command-line flags; present values replace the job's fields.
struct Overrides {
    std::optional<Command> command;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> count;
    std::optional<std::size_t> order;
    std::optional<std::size_t> max_dim;
    std::optional<std::size_t> index;
};

/// Applies the overrides to the raw job (so the report can echo exactly what
/// ran) and validates it.  A "command" in the job that disagrees with the
/// subcommand is an InputError.
json apply_overrides(json job, const Overrides& o);
JobSpec parse_jobspec(const json& job);

struct ResolvedWeight {
    HighestWeight weight;
    std::optional<MonicPoly> twist;  // set when a u⁻¹-form component was normalized
};

/// Builds the level-p weight.  All-roots input is taken as is; otherwise
/// every component goes through normalize_twist.  A requested level above
/// the natural one pads every component with the root 0.  Throws
/// NonRationalComponent, and InputError for length mismatches.
ResolvedWeight resolve_weight(const JobSpec& spec);

}  // namespace yhw::cli
