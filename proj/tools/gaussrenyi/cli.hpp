#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gr::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kValidation = 2,
  kCapTooSmall = 3,
  kBadPoint = 4,
};

/// Every flag of every command. Fields not used by a command keep their defaults and are
/// left out of its output.
struct RunConfig {
  std::string command;
  std::optional<bool> quenched;  // unset: quenched iff omega is given
  std::optional<std::string> omega;
  std::size_t n = 5;
  double p = 0.5;
  std::uint64_t cap = 200;
  double prune = 1e-10;
  std::size_t bins = 40;
  std::uint64_t seed = 0;
  std::size_t k = 1;
  double alpha = 0.9;
  std::string side = "ge";
  std::optional<std::size_t> n_min;
  std::optional<std::size_t> n_max;
  std::string x;
  std::string map = "t1";
  std::size_t budget = 10000;
  std::string word;
  std::optional<std::size_t> steps;
  unsigned workers = 1;
  std::optional<std::string> format;
  std::optional<std::string> out;
};

/// Runs one command; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Formats with 15 significant digits; "nan", "inf" and "-inf" for non-finite values.
std::string format15(long double v);

}  // namespace gr::cli
