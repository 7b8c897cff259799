#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gradelic/lts.hpp"

namespace gradelic {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitTrue = 0,       // check: true, sat: sat, compare: no mismatch
  kExitFalse = 1,      // check: false, sat: unsat, compare: mismatches
  kExitInput = 2,      // bad arguments, files or formulas
  kExitAtBound = 3,    // sat: no model within the search bounds
  kExitBudget = 4,     // sat: full construction over budget
};

struct CompareSpec {
  std::string fragment;  // ex-count, ctlstar-g1 or breakpoint
  std::size_t cases = 200;
  std::uint64_t seed = 7;
  bool mutate = false;  // negate the main checker, to see the harness fail
};

/// One generated instance: the checked formula and, for the oracle, its
/// body (phi of E>=n X phi, psi of E>=g psi) and grade.
struct CompareInstance {
  Lts lts;
  Formula formula;
  Formula body;
  unsigned grade = 0;
};

/// The instances run_compare uses for the same spec, in order.
std::vector<CompareInstance> compare_instances(const CompareSpec& spec);

struct CompareRow {
  std::string instance;
  std::string main;
  std::string oracle;
  bool agree = true;
};

struct CompareReport {
  std::vector<CompareRow> rows;
  std::size_t mismatches = 0;
  std::size_t confirmed = 0;  // breakpoint fragment only
  std::string text() const;
};

/// Runs the main checker against the oracle that is exact (or sound) on
/// the fragment. Throws Error on an unknown fragment.
CompareReport run_compare(const CompareSpec& spec);

/// The whole tool; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gradelic
