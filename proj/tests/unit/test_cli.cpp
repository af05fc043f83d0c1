#include <flagcoh/cli.hpp>

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <unistd.h>

using namespace flagcoh;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Examples) {
  EXPECT_EQ(invoke({"coxeter", "D4"}).out, "6\n");
  EXPECT_EQ(invoke({"degrees", "E6"}).out, "2 5 6 8 9 12\n");
  EXPECT_EQ(invoke({"cartan", "C2"}).out, "2 -1\n-2 2\n");
  auto gd = invoke({"gd", "A3(2)"});
  EXPECT_EQ(gd.code, 0);
  EXPECT_NE(gd.out.find("g.d. in [2, 2] (certified)"), std::string::npos) << gd.out;
  EXPECT_EQ(invoke({"schubert-mult", "4", "1,0", "1,0"}).out, "s(2,0) + s(1,1)\n");
  EXPECT_EQ(invoke({"tag-split", "3,1,1,0"}).out, "A3 tag (2,0,1), I0 = {2}\n");
}

TEST(Cli, CheckHJson) {
  auto r = invoke({"check-h", "B4(1)", "A2", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["result"], "Diagonalizable");
  EXPECT_EQ(j["schema_version"], kSchemaVersion);
  // Inconclusive is data, not failure
  EXPECT_EQ(invoke({"check-h", "A4(2)", "A1"}).code, 0);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({"coxeter", "X4"}).code, kExitInput);
  EXPECT_EQ(invoke({"betti", "D4(9)"}).code, kExitInput);
  EXPECT_EQ(invoke({"nonsense"}).code, kExitInput);
  EXPECT_EQ(invoke({}).code, kExitInput);
  EXPECT_EQ(invoke({"ed", "A5(3)"}).code, kExitInput);
  auto usage = invoke({"coxeter", "X4"});
  EXPECT_NE(usage.err.find("Usage"), std::string::npos);
  ::setenv("FLAGCOH_CACHE", "", 1);
  EXPECT_EQ(invoke({"normal-form", "A3(2)", "q1^9", "--cap", "4"}).code, kExitResource);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(Cli, JsonOutputsCarrySchemaVersion) {
  ::setenv("FLAGCOH_CACHE", "", 1);
  for (std::vector<std::string> args : {std::vector<std::string>{"--json", "coxeter", "B3"},
                                        {"--json", "betti", "Q4"},
                                        {"--json", "ed", "Q6"},
                                        {"--json", "veronese", "4"},
                                        {"--json", "table8"},
                                        {"--json", "normal-form", "A3(2)", "q1^3 - 2*q1*q2"}}) {
    auto r = invoke(args);
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["schema_version"], kSchemaVersion) << args[1];
  }
  auto nf = nlohmann::json::parse(invoke({"--json", "normal-form", "A3(2)", "q1^3 - 2*q1*q2"}).out);
  EXPECT_EQ(nf["zero"], true);
}

TEST(Cli, VerdictJsonRoundTrip) {
  for (auto [x, f] : {std::pair{"B4(1)", "A2"}, {"A4(2)", "A1"}, {"D6(5)", "D4"}, {"C5(5)", "B2"}}) {
    auto v = check_splitting_h(MarkedDiagram::parse(x), DynkinDiagram::parse(f));
    auto text = to_json(v).dump();
    auto back = verdict_from_json(nlohmann::json::parse(text));
    EXPECT_TRUE(back == v) << x << " " << f;
  }
  auto bad = to_json(check_splitting_h(MarkedDiagram::parse("B4(1)"), DynkinDiagram::parse("A2")));
  bad["schema_version"] = 99;
  EXPECT_THROW(verdict_from_json(bad), InputError);
}

TEST(Cli, SweepsAreDeterministicAcrossJobs) {
  EXPECT_EQ(invoke({"table6", "--max-rank", "6"}).out, invoke({"--jobs", "3", "table6", "--max-rank", "6"}).out);
  auto one = invoke({"--json", "table9-sweep"});
  auto four = invoke({"--json", "--jobs", "4", "table9-sweep"});
  EXPECT_EQ(one.out, four.out);
  auto j = nlohmann::json::parse(one.out);
  ASSERT_EQ(j["cells"].size(), 28u);
  for (const auto& c : j["cells"]) EXPECT_TRUE(c["consistent"].get<bool>()) << c.dump();
}

TEST(Cache, QuotientRoundTrip) {
  auto p = presentation_picard_one(MarkedDiagram::parse("A4(2)"));
  QuotientRing ring(p, 8);
  auto j = nlohmann::json::parse(quotient_to_json(ring).dump());
  auto back = quotient_from_json(j, p, 8);
  ASSERT_TRUE(back.has_value());
  EXPECT_EQ(back->betti(), ring.betti());
  auto q1 = Polynomial::variable(ring.table(), "q1"), q2 = Polynomial::variable(ring.table(), "q2");
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; 2 * b + a <= 8; ++b) EXPECT_EQ(back->normal_form(q1.pow(a) * q2.pow(b)), ring.normal_form(q1.pow(a) * q2.pow(b)));
  // cap or presentation mismatch is a miss
  EXPECT_FALSE(quotient_from_json(j, p, 7).has_value());
  EXPECT_FALSE(quotient_from_json(j, presentation_picard_one(MarkedDiagram::parse("A4(1)")), 8).has_value());
  EXPECT_NE(cache_key(p, 8), cache_key(p, 7));
}

TEST(Cache, HitAfterStore) {
  auto dir = std::filesystem::temp_directory_path() / ("flagcoh-test-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  auto p = presentation_picard_one(MarkedDiagram::parse("B3(2)"));
  auto first = cached_quotient(p, 8, dir);
  EXPECT_EQ(first.status, CacheStatus::Stored);
  auto second = cached_quotient(p, 8, dir);
  EXPECT_EQ(second.status, CacheStatus::Hit);
  EXPECT_EQ(first.ring.betti(), second.ring.betti());
  EXPECT_EQ(cached_quotient(p, 8, std::nullopt).status, CacheStatus::Off);

  ::setenv("FLAGCOH_CACHE", dir.c_str(), 1);
  auto r1 = invoke({"betti", "A3(2)"});
  auto r2 = invoke({"betti", "A3(2)"});
  EXPECT_NE(r1.out.find("cache: miss (stored)"), std::string::npos) << r1.out;
  EXPECT_NE(r2.out.find("cache: hit"), std::string::npos) << r2.out;
  EXPECT_NE(r2.out.find("betti: 1 1 2 1 1"), std::string::npos);
  ::setenv("FLAGCOH_CACHE", "", 1);
  std::filesystem::remove_all(dir);
}
