#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <memory>

#include "yhw/cli/commands.hpp"
#include "yhw/errors.hpp"

using namespace yhw;
using namespace yhw::cli;

namespace {

json roots_job(const std::string& command, const std::string& parity, const std::vector<std::vector<std::string>>& roots) {
    json w = json::array();
    for (const auto& r : roots) w.push_back({{"roots", r}});
    return {{"command", command}, {"parity", parity}, {"weights", w}};
}

json result_of(const json& job) { return run_job(job).report["result"]; }

MonicPoly poly_of(const json& roots) {
    std::vector<Rat> out;
    for (const auto& r : roots) out.push_back(Rat::parse(r.get<std::string>()));
    return MonicPoly(RootMultiset(out));
}

struct Run {
    int code;
    std::string out;
};

// Runs the built binary on a job given through --input.
Run run_binary(const std::string& args, const std::string& job_text) {
    const std::string path = ::testing::TempDir() + "yhw_job.json";
    std::ofstream(path) << job_text;
    const std::string cmd = std::string(YHW_BIN) + " " + args + " --input " + path + " 2>/dev/null";
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe.release());
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST(Decide, GlOneOneIsFinite) {
    const auto r = result_of(roots_job("decide", "01", {{"2"}, {"5"}}));
    EXPECT_EQ(r["verdict"], "FiniteDim");
    EXPECT_TRUE(r["certificate_valid"].get<bool>());
}

TEST(Decide, StandardSequenceFailsAtFirstPair) {
    const auto r = result_of(roots_job("decide", "0011", {{"0"}, {"1"}, {"0"}, {"0"}}));
    EXPECT_EQ(r["verdict"], "InfiniteDim");
    EXPECT_EQ(r["failure"]["position"], 1);
    EXPECT_TRUE(r["trail"].empty());
}

TEST(Decide, Sigma101ReflectsFirstThenFinds) {
    const auto r = result_of(roots_job("decide", "101", {{"2"}, {"5"}, {"7"}}));
    ASSERT_EQ(r["trail"].size(), 1u);
    EXPECT_EQ(r["trail"][0]["index"], 1);
    EXPECT_EQ(r["trail"][0]["direction"], "plus");
    EXPECT_EQ(r["final_parity"], "011");
    // (u+7)/(u+3) = P(u+1)/P(u) with P = (u+3)(u+4)(u+5)(u+6)
    EXPECT_EQ(r["verdict"], "FiniteDim");
    ASSERT_EQ(r["certificate"]["polys"].size(), 1u);
    EXPECT_EQ(r["certificate"]["polys"][0]["position"], 2);
    EXPECT_EQ(poly_of(r["certificate"]["polys"][0]["roots"]), (MonicPoly{Rat(3), Rat(4), Rat(5), Rat(6)}));
}

TEST(Decide, CertificatesRevalidateFromReportAlone) {
    std::size_t checked = 0;
    for (const auto& job : {roots_job("decide", "0110", {{"1", "4"}, {"3", "0"}, {"2", "-1"}, {"2", "-3"}}),
                            roots_job("decide", "1010", {{"0"}, {"2"}, {"1"}, {"0"}}),
                            roots_job("decide", "001", {{"3", "1/2"}, {"1", "1/2"}, {"7", "7"}})}) {
        const auto r = result_of(job);
        if (r["verdict"] != "FiniteDim") continue;
        const auto& fw = r["final_weight"]["roots"];
        const auto parity = ParitySeq::parse(r["final_parity"].get<std::string>());
        for (const auto& entry : r["certificate"]["polys"]) {
            const std::size_t i = entry["position"].get<std::size_t>() - 1;
            const auto P = poly_of(entry["roots"]);
            // λ_i/λ_{i+1} for 00 pairs, inverted for 11 pairs
            const auto ratio = parity[i] == 0 ? reduce_ratio(poly_of(fw[i]), poly_of(fw[i + 1]))
                                              : reduce_ratio(poly_of(fw[i + 1]), poly_of(fw[i]));
            EXPECT_EQ(reduce_ratio(shift_poly(P, Rat(1)), P), ratio) << job.dump();
            ++checked;
        }
    }
    EXPECT_EQ(checked, 3u);
}

TEST(Decide, NonRationalComponentIsInfinite) {
    json job{{"command", "decide"},
             {"parity", "01"},
             {"weights", {{{"series", {"1", "1", "1/2", "1/6", "1/24", "1/120"}}}, {{"roots", {"0"}}}}}};
    const auto r = result_of(job);
    EXPECT_EQ(r["verdict"], "InfiniteDim");
    EXPECT_EQ(r["reason"], "non-rational component");
    EXPECT_EQ(r["component"], 1);
}

TEST(Decide, InverseFormIsNormalized) {
    json job{{"command", "decide"},
             {"parity", "01"},
             {"weights", {{{"num_coeffs", {"1", "1"}}, {"den_coeffs", {"1", "2"}}}, {{"num_coeffs", {"1"}}}}}};
    const auto r = result_of(job);
    EXPECT_EQ(r["weight"]["display"], "((u+1), (u+2))");
    EXPECT_EQ(r["twist"]["roots"], json::array({"2"}));
}

TEST(Decide, LevelPadsWithZeroRoots) {
    auto job = roots_job("decide", "01", {{"2"}, {"5"}});
    job["level"] = 3;
    const auto r = result_of(job);
    EXPECT_EQ(r["weight"]["level"], 3);
    EXPECT_EQ(r["weight"]["roots"][0], json::array({"2", "0", "0"}));
}

TEST(Reflect, Sigma101AtOne) {
    auto job = roots_job("reflect", "101", {{"2"}, {"5"}, {"7"}});
    job["index"] = 1;
    const auto r = result_of(job);
    EXPECT_EQ(r["parity"], "011");
    EXPECT_EQ(r["reflected_weight"]["display"], "((u+6), (u+3), (u+7))");
}

TEST(Reflect, EqualComponentsUnchanged) {
    auto job = roots_job("reflect", "01", {{"3", "-1/2"}, {"3", "-1/2"}});
    job["index"] = 1;
    const auto r = result_of(job);
    EXPECT_EQ(r["parity"], "10");
    EXPECT_EQ(r["reflected_weight"]["roots"], r["weight"]["roots"]);
}

TEST(Reflect, TwiceEchoesOriginal) {
    auto job = roots_job("reflect", "1001", {{"1", "2"}, {"-1", "1/2"}, {"0", "0"}, {"4", "2"}});
    job["index"] = 3;
    const auto once = result_of(job);
    json back{{"command", "reflect"}, {"parity", once["parity"]}, {"index", 3}, {"weights", json::array()}};
    for (const auto& c : once["reflected_weight"]["roots"]) back["weights"].push_back({{"roots", c}});
    const auto twice = result_of(back);
    EXPECT_EQ(twice["parity"], "1001");
    EXPECT_EQ(twice["reflected_weight"]["roots"], once["weight"]["roots"]);
}

TEST(Reflect, EvenPositionIsInputError) {
    auto job = roots_job("reflect", "001", {{"1"}, {"2"}, {"3"}});
    job["index"] = 1;
    EXPECT_THROW(run_job(job), InputError);
}

TEST(Chain, EndsStandard) {
    const auto r = result_of(roots_job("chain", "1010", {{"0"}, {"2"}, {"1"}, {"0"}}));
    EXPECT_EQ(r["final_parity"], "0011");
    EXPECT_EQ(r["steps"].size(), 3u);
}

TEST(Verify, RttTwoFactors) {
    const auto out = run_job({{"command", "verify"}, {"family", "rtt"}, {"parity", "101"}, {"factors", 2}, {"count", 5}});
    EXPECT_EQ(out.exit_code, kExitOk);
    EXPECT_EQ(out.report["result"]["passed"], 5);
}

TEST(Verify, KeyRelationsLevelTwo) {
    const auto out = run_job({{"command", "verify"}, {"family", "prop42"}, {"level", 2}, {"count", 20}, {"seed", 7}});
    EXPECT_EQ(out.exit_code, kExitOk);
    EXPECT_EQ(out.report["result"]["passed"], 20);
}

TEST(Verify, ReflectionDualPath) {
    const auto out = run_job({{"command", "verify"}, {"family", "reflection"}, {"parity", "101"}, {"level", 2}, {"count", 3}});
    EXPECT_EQ(out.exit_code, kExitOk);
    for (const auto& inst : out.report["result"]["instances"])
        for (const auto& c : inst["checks"]) EXPECT_TRUE(c["passed"].get<bool>()) << c.dump();
}

TEST(Verify, DimensionCapIsInputError) {
    EXPECT_THROW(run_job({{"command", "verify"}, {"family", "rtt"}, {"parity", "111"}, {"factors", 3}, {"max_dim", 8}}),
                 DimensionCapExceeded);
}

TEST(Berezinian, KacTensor) {
    const auto out = run_job(roots_job("berezinian", "01", {{"1", "3"}, {"2", "-1"}}));
    EXPECT_EQ(out.exit_code, kExitOk);
    EXPECT_TRUE(out.report["result"]["central"].get<bool>());
    EXPECT_TRUE(out.report["result"]["scalar_match"].get<bool>());
    EXPECT_EQ(out.report["result"]["order"], 6);
}

TEST(JobSpec, RejectsMalformed) {
    EXPECT_THROW(parse_jobspec({{"command", "decide"}, {"parity", "01"}, {"weights", json::array()}}), InputError);
    EXPECT_THROW(parse_jobspec(roots_job("decide", "012", {{"1"}, {"1"}, {"1"}})), InputError);
    EXPECT_THROW(parse_jobspec({{"command", "decide"}, {"parity", "0"}, {"weights", {{{"roots", {"1"}}}}}, {"extra", 1}}),
                 InputError);
    EXPECT_THROW(parse_jobspec({{"command", "decide"}, {"parity", "0"}, {"weights", {{{"roots", {"1"}}, {"series", {"1"}}}}}}),
                 InputError);
    EXPECT_THROW(parse_jobspec(roots_job("decide", "01", {{"x"}, {"1"}})), InputError);
    EXPECT_THROW(parse_jobspec({{"command", "verify"}}), InputError);
    EXPECT_THROW(parse_jobspec(roots_job("berezinian", "10", {{"1"}, {"2"}})), InputError);
    EXPECT_THROW(parse_jobspec(roots_job("reflect", "01", {{"1"}, {"2"}})), InputError);
    EXPECT_THROW(resolve_weight(parse_jobspec(roots_job("decide", "01", {{"1", "2"}, {"1"}}))), InputError);
    auto low = roots_job("decide", "01", {{"1", "2"}, {"1", "3"}});
    low["level"] = 1;
    EXPECT_THROW(resolve_weight(parse_jobspec(low)), InputError);
}

TEST(JobSpec, OverridesReplaceFields) {
    Overrides o;
    o.command = Command::verify;
    o.seed = 11;
    o.count = 4;
    const auto job = apply_overrides({{"family", "rtt"}, {"seed", 1}}, o);
    EXPECT_EQ(job["seed"], 11);
    EXPECT_EQ(job["count"], 4);
    EXPECT_EQ(job["command"], "verify");
    EXPECT_THROW(apply_overrides({{"command", "decide"}}, o), InputError);
}

TEST(Binary, ExitCodes) {
    EXPECT_EQ(run_binary("decide", R"({"parity":"01","weights":[{"roots":["2"]},{"roots":["5"]}]})").code, 0);
    EXPECT_EQ(run_binary("decide", R"({"parity":"01","weights":[{"roots":["2"]}]})").code, 2);
    EXPECT_EQ(run_binary("decide", "{not json").code, 2);
    EXPECT_EQ(run_binary("reflect --index 1", R"({"parity":"00","weights":[{"roots":["2"]},{"roots":["5"]}]})").code, 2);
    EXPECT_EQ(run_binary("reflect --index 1", R"({"parity":"01","weights":[{"series":["1","1","1/2","1/6","1/24","1/120"]},{"roots":["0"]}]})").code, 2);
    EXPECT_EQ(run_binary("verify --max-dim 4", R"({"family":"rtt","parity":"111","factors":2})").code, 2);
}

TEST(Binary, ReportsAreDeterministicApartFromTiming) {
    const std::string job = R"({"family":"prop42","level":2})";
    auto a = json::parse(run_binary("verify --seed 5 --count 6", job).out);
    auto b = json::parse(run_binary("verify --seed 5 --count 6", job).out);
    EXPECT_EQ(a["job"]["seed"], 5);
    a.erase("timing");
    b.erase("timing");
    EXPECT_EQ(a.dump(), b.dump());
    auto c = json::parse(run_binary("verify --seed 6 --count 6", job).out);
    c.erase("timing");
    EXPECT_NE(a.dump(), c.dump());
}
