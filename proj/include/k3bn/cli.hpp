#pragma once

#include "k3bn/criteria.hpp"

#include <iosfwd>

namespace k3bn {

/// A validated command invocation. Exit codes of run(): 0 pass/found,
/// 1 fail/none, 2 inconclusive, 3 usage error.
struct Invocation {
  enum class Command { Check, Suggest, Scan, Hk, OracleNoWall };
  Command command = Command::Check;
  std::int64_t g = 0, m = 1;
  MukaiVector v;
  std::int64_t n = 0;                          // hk
  std::int64_t g0 = 0, g1 = 0, m0 = 0, m1 = 0;  // scan
  std::int64_t y_max = 0, root_bound = 0;       // oracle
  bool non_strict = false;
  std::string format = "json";  // json | csv | text
  unsigned precision_cap_bits = 4096;
  bool timings = false;
};

int run(const Invocation& inv, std::ostream& out, std::ostream& err);

/// Parses argv into an Invocation and runs it.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace k3bn
