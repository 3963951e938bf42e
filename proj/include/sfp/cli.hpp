#ifndef SFP_CLI_HPP
#define SFP_CLI_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sfp/params.hpp"

namespace sfp {

// Parsed experiment description. `options_json` keeps the kind-specific block
// verbatim; each runner re-validates it against its own key set.
struct ExperimentSpec {
  std::string kind;  // sample | degrees | distances | walk | hct | bounds | renorm
  ModelParams params;
  std::vector<std::int64_t> sides;
  Boundary boundary = Boundary::Free;
  std::vector<std::uint64_t> seeds;
  std::string options_json = "{}";
};

ExperimentSpec spec_from_json(const std::string& text);

// Schema plus cross-field checks without running anything; returns a
// diagnostics line echoing derived quantities.
std::string validate_spec(const std::string& text);

// Executes the experiment, writing CSV/JSON outputs and manifest.json into
// out_dir. Throws the typed errors that the CLI maps to exit codes.
void run_spec(const std::string& text, const std::string& out_dir, int threads);

int cli_main(int argc, char** argv);

}  // namespace sfp

#endif
