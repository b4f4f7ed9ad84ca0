#include "modrep/cli.hpp"
#include "modrep/errors.hpp"
#include "modrep/serialize.hpp"
#include "modrep/theorem_lab.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace modrep;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = runCommand(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(ParseSpec, Examples) {
  EXPECT_EQ(parseSpec("Z18").module.invariantFactors(), (std::vector<Int>{18}));
  EXPECT_EQ(parseSpec("Z2^2").module.invariantFactors(), (std::vector<Int>{2, 2}));
  EXPECT_EQ(parseSpec("Z2 + Z9").module.invariantFactors(), (std::vector<Int>{18}));
  const auto s = parseSpec("Z2^3 + Z9");
  EXPECT_EQ(s.factors, (std::vector<Int>{2, 2, 2, 9}));
  EXPECT_EQ(s.module.invariantFactors(), (std::vector<Int>{2, 2, 18}));
  EXPECT_EQ(parseSpec("  Z 4 ^ 2+Z3 ").module.invariantFactors(), (std::vector<Int>{4, 12}));
}

TEST(ParseSpec, ErrorsCarryPositions) {
  auto position = [](const std::string& text) -> std::size_t {
    try {
      parseSpec(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::string::npos;
  };
  EXPECT_EQ(position(""), 0u);
  EXPECT_EQ(position("Q5"), 0u);
  EXPECT_EQ(position("Z1"), 1u);
  EXPECT_EQ(position("Z0"), 1u);
  EXPECT_EQ(position("Z2 + "), 5u);
  EXPECT_EQ(position("Z2 Z3"), 3u);
  EXPECT_EQ(position("Z2^0"), 3u);
  EXPECT_EQ(position("Z99999999999999999999"), 1u);
  EXPECT_THROW(parseSpec("Z2^70"), ValidationError);
  EXPECT_THROW(parseSpec("Z1000000^4"), ValidationError);
}

TEST(RunCommand, SpecS) {
  const auto r = run({"spec-s", "Z18"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("(6)  prime 3"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("(9)  prime 2"), std::string::npos) << r.out;
}

TEST(RunCommand, RepSecondOfZ30) {
  const auto r = run({"rep", "--kind", "second", "Z30", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  const auto& rep = j["representation"];
  EXPECT_EQ(rep["summands"].size(), 3u);
  EXPECT_EQ(rep["attached"], json({2, 3, 5}));
  EXPECT_EQ(rep["is_minimal"], true);
}

TEST(RunCommand, JsonRoundTrip) {
  const auto m = makeModule({2, 18});
  for (const std::string kind : {"second", "secondary"}) {
    const auto r = run({"rep", "--kind", kind, "--all-minimal", "--json", "Z2+Z18"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    const auto reps = allMinimalRepresentations(m, kind == "second" ? RepKind::Second : RepKind::Secondary);
    ASSERT_EQ(j["representations"].size(), reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
      EXPECT_EQ(representationFromJson(m, j["representations"][i]), reps[i]);
    }
  }
  const auto lat = json::parse(run({"lattice", "--json", "Z2+Z18"}).out);
  const auto subs = enumerateSubmodules(m);
  ASSERT_EQ(lat["submodules"].size(), subs.size());
  for (std::size_t i = 0; i < subs.size(); ++i) EXPECT_EQ(submoduleFromJson(m, lat["submodules"][i]), subs[i]);
  const auto spec = json::parse(run({"spec-s", "--json", "Z2+Z18"}).out);
  for (const auto& s : spec["second_submodules"]) {
    const auto sub = submoduleFromJson(m, s);
    EXPECT_EQ(isSecond(sub)->p(), s["prime"].get<Int>());
    EXPECT_EQ(sub.order(), s["order"].get<Int>());
  }
}

TEST(RunCommand, OtherSubcommands) {
  EXPECT_EQ(run({"lattice", "Z6"}).code, 0);
  const auto att = json::parse(run({"att", "Z30", "--json"}).out);
  EXPECT_EQ(att["att"]["att_main"], json({2, 3, 5}));
  const auto cls = json::parse(run({"classify", "--json", "Z12"}).out);
  EXPECT_EQ(cls["profile"]["hollow_dim"], 2);
  EXPECT_EQ(cls["profile"]["is_s_lifting"], false);
  const auto none = run({"rep", "--kind", "second", "Z18"});
  EXPECT_EQ(none.code, 0);
  EXPECT_NE(none.out.find("no second representation"), std::string::npos);
}

TEST(RunCommand, ExitCodes) {
  EXPECT_EQ(run({}).code, exit_code::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, exit_code::kUsage);
  EXPECT_EQ(run({"lattice", "Z1"}).code, exit_code::kUsage);
  EXPECT_EQ(run({"lattice", "Zq"}).code, exit_code::kUsage);
  EXPECT_EQ(run({"rep", "--kind", "tertiary", "Z6"}).code, exit_code::kUsage);
  EXPECT_EQ(run({"verify", "--max-order", "10", "--theorem", "nope"}).code, exit_code::kUsage);
  EXPECT_EQ(run({"verify", "--max-order", "1"}).code, exit_code::kUsage);
  EXPECT_EQ(run({"verify"}).code, exit_code::kUsage);
  EXPECT_EQ(run({"lattice", "Z2^8", "--max-submodules", "100"}).code, exit_code::kResourceCap);
  EXPECT_EQ(run({"classify", "Z2^3", "--max-submodules", "10"}).code, exit_code::kResourceCap);
  EXPECT_EQ(run({"--help"}).code, exit_code::kOk);
}

TEST(RunCommand, VerifyIsDeterministic) {
  const auto a = run({"verify", "--max-order", "50", "--theorem", "all", "--json"});
  const auto b = run({"verify", "--max-order", "50", "--theorem", "all", "--json", "--jobs", "4"});
  ASSERT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  const auto j = json::parse(a.out);
  EXPECT_EQ(j["total_failures"], 0);
  EXPECT_EQ(j["theorems"].size(), theoremIds().size());
  const auto text = run({"verify", "--max-order", "12", "--theorem", "thm-4.23-2"});
  EXPECT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("thm-4.23-2"), std::string::npos);
}
