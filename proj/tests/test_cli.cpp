#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <unistd.h>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sfp/cli.hpp"

using namespace sfp;
namespace fs = std::filesystem;

namespace {

const char* kSampleSpec = R"({
  "kind": "sample",
  "params": {"d": 1, "alpha": 1.5, "tau": 2.0, "lambda": 1.0,
             "weight_law": {"kind": "standard_pareto"}},
  "geometry": {"sides": [16]},
  "seeds": [1, 2]
})";

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("sfp_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("spec parsing and validation basics") {
  const ExperimentSpec spec = spec_from_json(kSampleSpec);
  CHECK(spec.kind == "sample");
  CHECK(spec.sides == std::vector<std::int64_t>{16});
  CHECK(spec.seeds == std::vector<std::uint64_t>{1, 2});
  CHECK(validate_spec(kSampleSpec).substr(0, 2) == "ok");
}

TEST_CASE("spec seed ranges expand") {
  const ExperimentSpec spec = spec_from_json(R"({
    "kind": "sample",
    "params": {"d": 1, "alpha": 1.5, "tau": 2.0, "lambda": 1.0,
               "weight_law": {"kind": "standard_pareto"}},
    "seeds": {"base": 10, "count": 3}
  })");
  CHECK(spec.seeds == std::vector<std::uint64_t>{10, 11, 12});
}

TEST_CASE("spec rejection paths") {
  CHECK_THROWS_AS(spec_from_json("{"), validation_error);
  CHECK_THROWS_AS(spec_from_json(R"({"kind": "mystery", "params": {}})"),
                  validation_error);
  CHECK_THROWS_AS(spec_from_json(R"({"kind": "sample", "params": {"d": 1,
    "alpha": 1, "tau": 2, "lambda": 1,
    "weight_law": {"kind": "standard_pareto"}}, "seeds": []})"),
                  validation_error);
  // hct needs 1 < gamma < 2
  CHECK_THROWS_AS(validate_spec(R"({"kind": "hct", "params": {"d": 2,
    "alpha": 3, "tau": 2.4, "lambda": 1,
    "weight_law": {"kind": "standard_pareto"}}, "seeds": [1]})"),
                  validation_error);
}

TEST_CASE("run_spec writes outputs and a digest manifest") {
  TempDir tmp;
  run_spec(kSampleSpec, tmp.path.string(), 1);
  CHECK(fs::exists(tmp.path / "vertices_16_1.csv"));
  CHECK(fs::exists(tmp.path / "edges_16_2.csv"));
  const auto manifest = nlohmann::json::parse(slurp(tmp.path / "manifest.json"));
  CHECK(manifest.at("spec").at("kind") == "sample");
  CHECK(manifest.at("outputs").contains("vertices_16_1.csv"));
  CHECK(manifest.at("seeds").size() == 2);

  // identical runs give identical digests
  TempDir tmp2;
  run_spec(kSampleSpec, tmp2.path.string(), 1);
  const auto manifest2 = nlohmann::json::parse(slurp(tmp2.path / "manifest.json"));
  CHECK(manifest.at("outputs") == manifest2.at("outputs"));
}

TEST_CASE("bounds experiments run without seeds") {
  TempDir tmp;
  run_spec(R"({
    "kind": "bounds",
    "params": {"d": 1, "alpha": 2.0, "tau": 1.9, "lambda": 1.0,
               "weight_law": {"kind": "standard_pareto"}},
    "options": {"lemma": "transience", "n_max": 6}
  })",
           tmp.path.string(), 1);
  CHECK(fs::exists(tmp.path / "transience_sequences.csv"));
}

TEST_CASE("cli exit codes map error categories") {
  TempDir tmp;
  const fs::path spec = tmp.path / "bad.json";
  {
    std::ofstream os(spec);
    os << R"({"kind": "sample", "params": {"d": 1, "alpha": 1, "tau": 0.2,
      "lambda": 1, "weight_law": {"kind": "standard_pareto"}}, "seeds": [1]})";
  }
  std::string spec_arg = spec.string();
  const char* argv_bad[] = {"sfp", "validate", "--spec", spec_arg.c_str()};
  CHECK(cli_main(4, const_cast<char**>(argv_bad)) == 2);

  const fs::path big = tmp.path / "big.json";
  {
    std::ofstream os(big);
    os << R"({"kind": "sample", "params": {"d": 1, "alpha": 1.5, "tau": 2,
      "lambda": 1, "weight_law": {"kind": "standard_pareto"}},
      "geometry": {"sides": [64]}, "seeds": [1],
      "options": {"max_pairs": 10}})";
  }
  const fs::path out = tmp.path / "out";
  std::string big_arg = big.string(), out_arg = out.string();
  const char* argv_big[] = {"sfp", "run", "--spec", big_arg.c_str(),
                            "--out", out_arg.c_str()};
  CHECK(cli_main(6, const_cast<char**>(argv_big)) == 3);
}

TEST_CASE("cli run succeeds end to end") {
  TempDir tmp;
  const fs::path spec = tmp.path / "spec.json";
  {
    std::ofstream os(spec);
    os << kSampleSpec;
  }
  const fs::path out = tmp.path / "out";
  std::string spec_arg = spec.string(), out_arg = out.string();
  const char* argv[] = {"sfp", "run", "--spec", spec_arg.c_str(),
                        "--out", out_arg.c_str()};
  CHECK(cli_main(6, const_cast<char**>(argv)) == 0);
  CHECK(fs::exists(out / "manifest.json"));
}

TEST_CASE("seed overrides from the command line reach the manifest") {
  TempDir tmp;
  const fs::path spec = tmp.path / "spec.json";
  {
    std::ofstream os(spec);
    os << kSampleSpec;
  }
  const fs::path out = tmp.path / "out";
  std::string spec_arg = spec.string(), out_arg = out.string();
  const char* argv[] = {"sfp",  "run",  "--spec",      spec_arg.c_str(),
                        "--out", out_arg.c_str(), "--seed-base", "7",
                        "--seed-count", "1"};
  CHECK(cli_main(10, const_cast<char**>(argv)) == 0);
  const auto manifest = nlohmann::json::parse(slurp(out / "manifest.json"));
  CHECK(manifest.at("seeds") == nlohmann::json::array({7}));
}
