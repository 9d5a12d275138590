#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "kegraph/budget.hpp"

namespace kegraph::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,  // bad arguments or unparsable input
  kExitBudget = 3  // work budget exhausted in strict mode
};

enum class OutputFormat { Text, Json, Csv };

struct RunConfig {
  std::string input = "-";
  std::uint64_t seed = 0;
  std::uint64_t count = 1;
  Budget budget = Budget::from_environment();
  OutputFormat format = OutputFormat::Text;
  int jobs = 1;
  bool strict = false;  // stop with kExitBudget on the first exhausted budget
};

struct VerifySource {
  enum class Kind { Gallery, CensusFile, CensusOrder, RandomKE };
  Kind kind = Kind::Gallery;
  std::string path;     // CensusFile
  int max_order = 0;    // CensusOrder: every graph with 0..max_order vertices
  int s = 0;            // RandomKE: gen_random_ke(s, a, p, seed + i)
  int a = 0;
  double p = 0.0;
};

int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, const VerifySource& source, std::ostream& out, std::ostream& err);
/// family is one of cycle, path, complete, ke, gpq, hk, census, gallery:<name>.
int cmd_gen(const RunConfig& config, const std::string& family, const std::vector<std::string>& params,
            std::ostream& out, std::ostream& err);
int cmd_gallery(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace kegraph::cli
