#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "support/brute_force.hpp"
#include "ultrauniform/cli.hpp"
#include "ultrauniform/io.hpp"

using namespace ultrauniform;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  json body() const { return json::parse(out); }
};

Outcome run(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "ultrauniform");
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const char* kSierpinski = R"({"n":2,"opens":[[],[1],[0,1]]})";
const char* kPathBasis = R"({"n":3,"entourages":[{"n":3,"pairs":[[0,0],[1,1],[2,2],[0,1],[1,0],[1,2],[2,1]]}]})";

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "ultrauniform_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Cli, GenPadicIsUltrametric) {
  const auto r = run({"gen", "padic", "--p", "2", "--size", "8"});
  ASSERT_EQ(r.code, cli::kExitTrue);
  const auto d = pseudometric_from_json(r.body());
  EXPECT_EQ(d.size(), 8U);
  EXPECT_EQ(d(0, 4), Rational(1, 4));
  EXPECT_EQ(d(1, 2), Rational(1));
  EXPECT_EQ(d(3, 3), kZero);
  EXPECT_TRUE(brute::strong_triangle(d));
  EXPECT_EQ(run({"check-na", "--in", r.out}).code, cli::kExitTrue);
}

TEST(Cli, GenIdealChain) {
  const auto r = run({"gen", "ideal-chain", "--modulus", "27", "--ideal", "3", "--depth", "3"});
  ASSERT_EQ(r.code, cli::kExitTrue);
  const auto b = diagonal_basis_from_json(r.body());
  ASSERT_EQ(b.entourages().size(), 4U);
  for (const auto& e : b.entourages()) EXPECT_TRUE(brute::is_equivalence(brute::to_matrix(e)));
  EXPECT_EQ(b.entourages().front(), Relation::full(27));
  EXPECT_EQ(b.entourages().back(), Relation::identity(27));

  const auto na = run({"check-na", "--in", r.out});
  EXPECT_EQ(na.code, cli::kExitTrue);
  EXPECT_EQ(na.body()["non_archimedean"], true);

  EXPECT_EQ(run({"gen", "ideal-chain", "--modulus", "10", "--ideal", "3", "--depth", "1"}).code,
            cli::kExitInputError);
}

TEST(Cli, TopoCheckSierpinski) {
  const auto r = run({"topo-check", "--in", kSierpinski});
  EXPECT_EQ(r.code, cli::kExitFalse);
  EXPECT_EQ(r.body(), json::parse(R"({"T_A":false,"zero_dim":false,"uniformizable":false})"));

  const auto discrete = run({"topo-check"}, R"({"n":2,"opens":[[],[0],[1],[0,1]]})");
  EXPECT_EQ(discrete.code, cli::kExitTrue);
}

TEST(Cli, ValidateReportsHalfWitness) {
  const auto r = run({"validate", "--in", kPathBasis});
  EXPECT_EQ(r.code, cli::kExitFalse);
  const auto body = r.body();
  EXPECT_EQ(body["valid"], false);
  bool half = false;
  for (const auto& v : body["violations"]) half = half || v["axiom"] == "half";
  EXPECT_TRUE(half);
}

TEST(Cli, PreconditionFailureAttachesReport) {
  const auto r = run({"check-na", "--in", kPathBasis});
  EXPECT_EQ(r.code, cli::kExitInputError);
  const auto body = r.body();
  EXPECT_TRUE(body.contains("error"));
  EXPECT_EQ(body["report"]["valid"], false);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, MalformedInputExitsTwoNamingTheField) {
  const auto bad_json = run({"validate"}, "{\"n\": 2, ");
  EXPECT_EQ(bad_json.code, cli::kExitInputError);

  const auto bad_field = run({"validate", "--in", R"({"n":2,"entourages":[{"n":2,"pairs":[[0,5]]}]})"});
  EXPECT_EQ(bad_field.code, cli::kExitInputError);
  EXPECT_NE(bad_field.err.find("/entourages/0/pairs/0/1"), std::string::npos) << bad_field.err;

  EXPECT_EQ(run({"validate", "--in", "/nonexistent/file.json"}).code, cli::kExitInputError);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitInputError);
  EXPECT_EQ(run({"sweep", "T9.9"}).code, cli::kExitInputError);
  EXPECT_EQ(run({"convert", "--to", "graph", "--in", kSierpinski}).code, cli::kExitInputError);
}

TEST(Cli, ConvertThroughFilesRoundTrips) {
  const auto basis_file = scratch("basis.json");
  const auto cover_file = scratch("cover.json");
  const auto back_file = scratch("back.json");
  ASSERT_EQ(run({"gen", "random-basis", "--n", "6", "--seed", "17", "--out", basis_file.string()}).code, 0);
  ASSERT_EQ(run({"convert", "--to", "cover", "--in", basis_file.string(), "--out", cover_file.string()}).code, 0);
  ASSERT_EQ(run({"convert", "--to", "diagonal", "--in", cover_file.string(), "--out", back_file.string()}).code, 0);

  auto load = [](const std::filesystem::path& p) {
    std::ifstream f(p);
    return json::parse(f);
  };
  EXPECT_TRUE(uniformity_equal(diagonal_basis_from_json(load(basis_file)), diagonal_basis_from_json(load(back_file))));
  EXPECT_EQ(run({"roundtrip", "--in", cover_file.string()}).code, cli::kExitTrue);
}

TEST(Cli, MetrizeAndPmSystem) {
  const char* basis = R"({"n":3,"entourages":[{"n":3,"pairs":[[0,0],[1,1],[2,2],[0,1],[1,0]]},
                                              {"n":3,"pairs":[[0,0],[1,1],[2,2]]}]})";
  const auto m = run({"metrize", "--in", basis});
  ASSERT_EQ(m.code, cli::kExitTrue);
  const auto d = pseudometric_from_json(m.body());
  EXPECT_EQ(d(0, 1), Rational(1, 2));
  EXPECT_EQ(d(0, 2), Rational(1));

  const auto s = run({"pm-system", "--in", basis});
  ASSERT_EQ(s.code, cli::kExitTrue);
  EXPECT_TRUE(uniformity_equal(basis_from_system(pseudometric_system_from_json(s.body())),
                               diagonal_basis_from_json(json::parse(basis))));

  const auto u = run({"uniformize", "--in", kSierpinski});
  EXPECT_EQ(u.code, cli::kExitFalse);
}

TEST(Cli, SweepOutputIsByteIdenticalApartFromTiming) {
  auto strip = [](const Outcome& r) {
    auto j = r.body();
    j.erase("ms");
    return j.dump();
  };
  const std::vector<std::string> args{"sweep", "T2.4", "--n", "8", "--trials", "100", "--seed", "42"};
  const auto a = run(args);
  const auto b = run(args);
  ASSERT_EQ(a.code, cli::kExitTrue);
  EXPECT_EQ(strip(a), strip(b));
  EXPECT_EQ(a.body()["seed"], 42);

  const auto gen_a = run({"gen", "random-topology", "--n", "5", "--seed", "9"});
  const auto gen_b = run({"gen", "random-topology", "--n", "5", "--seed", "9"});
  EXPECT_EQ(gen_a.out, gen_b.out);
}

TEST(Cli, SweepExhaustiveCounts) {
  const auto r = run({"sweep", "T3.2", "--n", "3"});
  ASSERT_EQ(r.code, cli::kExitTrue);
  EXPECT_EQ(r.body()["checked"], 29);
  EXPECT_EQ(r.body()["satisfying"], 5);
  EXPECT_EQ(r.body()["discrepancies"], 0);
}

TEST(Cli, EnvironmentSeedOverridesDefault) {
  const std::vector<std::string> args{"sweep", "R2.1-roundtrip", "--n", "6", "--trials", "20"};
  ::setenv("ULTRAUNIFORM_SEED", "1234", 1);
  const auto with_env = run(args);
  const auto explicit_seed = run({"sweep", "R2.1-roundtrip", "--n", "6", "--trials", "20", "--seed", "77"});
  ::setenv("ULTRAUNIFORM_SEED", "oops", 1);
  const auto bad_env = run(args);
  ::unsetenv("ULTRAUNIFORM_SEED");
  const auto without_env = run(args);

  EXPECT_EQ(with_env.body()["seed"], 1234);
  EXPECT_EQ(explicit_seed.body()["seed"], 77);
  EXPECT_EQ(bad_env.code, cli::kExitInputError);
  EXPECT_EQ(without_env.body()["seed"], 20190501);
}
