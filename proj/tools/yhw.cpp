// yhw: batch front end for the highest-weight calculus.
//
//   yhw decide --input job.json
//   echo '{"parity":"01","weights":[{"roots":["2"]},{"roots":["5"]}]}' | yhw decide

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "yhw/cli/commands.hpp"
#include "yhw/errors.hpp"

namespace {

struct Flags {
    std::string input = "-";
    std::string output = "-";
    yhw::cli::Overrides overrides;
};

void add_common(CLI::App* sub, Flags& f) {
    sub->add_option("-i,--input", f.input, "job file (default stdin)");
    sub->add_option("-o,--output", f.output, "report file (default stdout)");
    sub->add_option("--seed", f.overrides.seed, "random seed (verify)");
    sub->add_option("--count", f.overrides.count, "number of instances (verify)")->check(CLI::PositiveNumber);
    sub->add_option("--order", f.overrides.order, "series truncation order")->check(CLI::PositiveNumber);
    sub->add_option("--max-dim", f.overrides.max_dim, "module dimension cap")->check(CLI::PositiveNumber);
}

std::string read_all(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Highest-weight calculus for super-Yangians of gl(m|n)"};
    app.require_subcommand(1);
    Flags flags;
    for (const char* name : {"decide", "reflect", "chain", "verify", "berezinian"}) {
        auto* sub = app.add_subcommand(name);
        add_common(sub, flags);
        if (std::string(name) == "reflect") sub->add_option("--index", flags.overrides.index, "1-based odd position");
    }
    CLI11_PARSE(app, argc, argv);
    flags.overrides.command = yhw::cli::parse_command(app.get_subcommands().front()->get_name());

    try {
        std::string text;
        if (flags.input == "-") {
            text = read_all(std::cin);
        } else {
            std::ifstream in(flags.input);
            if (!in) throw yhw::InputError("cannot open " + flags.input);
            text = read_all(in);
        }
        yhw::cli::json job;
        try {
            job = text.find_first_not_of(" \t\r\n") == std::string::npos ? yhw::cli::json::object()
                                                                          : yhw::cli::json::parse(text);
        } catch (const yhw::cli::json::parse_error& e) {
            throw yhw::InputError(std::string("invalid JSON: ") + e.what());
        }
        const auto outcome = yhw::cli::run_job(yhw::cli::apply_overrides(std::move(job), flags.overrides));
        const std::string dumped = outcome.report.dump(2) + "\n";
        if (flags.output == "-") {
            std::cout << dumped;
        } else {
            std::ofstream out(flags.output);
            if (!out) throw yhw::InputError("cannot write " + flags.output);
            out << dumped;
        }
        return outcome.exit_code;
    } catch (const yhw::InputError& e) {
        std::cerr << "yhw: " << e.what() << "\n";
        return yhw::cli::kExitInputError;
    } catch (const yhw::NonRationalComponent& e) {
        // only decide turns this into a verdict; elsewhere there is no polynomial weight to work on
        std::cerr << "yhw: " << e.what() << "\n";
        return yhw::cli::kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "yhw: internal error: " << e.what() << "\n";
        return 1;
    }
}
