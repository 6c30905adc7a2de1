#pragma once

#include "yhw/cli/jobspec.hpp"

namespace yhw::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitVerifyFailure = 3;

struct Outcome {
    json report;
    int exit_code = kExitOk;
};

/// Runs a validated job.  The report holds the echoed job under "job", the
/// command's answer under "result" and wall time under "timing"; everything
/// except "timing" is a deterministic function of the job.  InputError and
/// DimensionCapExceeded propagate to the caller.
Outcome run_job(const json& job);

// JSON renderings shared by the commands and their tests.
json to_json(const RootMultiset& roots);
json to_json(const HighestWeight& w);
json to_json(const RationalFn& f);
json to_json(const ReflectionStep& s);
json to_json(const Decision& d);

}  // namespace yhw::cli
