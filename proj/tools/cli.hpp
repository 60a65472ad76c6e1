#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sra/serialize.hpp"

namespace sra::cli {

enum Exit { kOk = 0, kInconsistent = 1, kNondegenerate = 2, kUsage = 3 };

struct RunConfig {
  std::string command;
  int n = 3;
  int kappa = 1;
  std::string nu;                   // "p/q"; even n: "nu0,nu1"
  std::vector<std::string> params;  // free parameters as scalar expressions
  std::string family;               // "z=K" or "half"
  std::string tau = "1";
  int degree = 3;
  std::string output;
  std::string format = "json";
  bool no_meta = false;
  std::string expr;
  std::vector<std::string> nu_list;
  std::optional<std::pair<long, long>> z_range;
  std::vector<std::pair<std::string, std::string>> mu_pairs;
};

// Applies the keys of a JSON config object on top of cfg.
void apply_config(RunConfig& cfg, const json& j);
void validate(const RunConfig& cfg);

// Report for a validated config; throws the library errors.
json execute(const RunConfig& cfg);

std::string to_csv(const json& report);

// Full command line handling; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sra::cli
