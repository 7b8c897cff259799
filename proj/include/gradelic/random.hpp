#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gradelic/formula.hpp"
#include "gradelic/ltl.hpp"
#include "gradelic/lts.hpp"

namespace gradelic {

/// Seeded generator. The range reduction is done by hand so that the same
/// seed gives the same draws on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n); n must be positive.
  std::size_t below(std::size_t n);
  /// Uniform in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  bool chance(unsigned percent) { return below(100) < percent; }

 private:
  std::mt19937_64 engine_;
};

struct FormulaShape {
  std::vector<std::string> atoms{"p", "q"};
  std::size_t max_length = 12;  // metrics().length bound
  unsigned max_grade = 2;
  bool gctl_only = false;       // every temporal operator directly quantified
};

/// Random state formula with metrics(f).length <= shape.max_length.
Formula random_state_formula(Rng& rng, const FormulaShape& shape);

/// Boolean combination of atoms, at most `size` nodes.
Formula random_boolean(Rng& rng, const std::vector<std::string>& atoms, std::size_t size);

/// Random LTL formula over `atoms` opaque atoms with at most `size` nodes.
Ltl random_ltl(Rng& rng, unsigned atoms, std::size_t size);

/// Random total LTS with the given state count; every state gets 1..max_degree
/// successors, labels are random subsets of `atoms`.
Lts random_lts(Rng& rng, std::size_t states, std::size_t max_degree,
               const std::vector<std::string>& atoms);

/// Random finite tree with `nodes` tree nodes and branching <= max_degree,
/// made total by sending every leaf to a sink state labelled {"end"} with a
/// self-loop. Root is the initial state.
Lts random_tree(Rng& rng, std::size_t nodes, std::size_t max_degree,
                const std::vector<std::string>& atoms);

}  // namespace gradelic
