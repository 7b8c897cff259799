#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gradelic/games.hpp"

namespace gradelic {

/// A size limit was hit; distinct from any verdict.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// GRADELIC_BUDGET if set to a positive number, else `fallback`.
std::size_t budget_from_env(std::size_t fallback = 2000000);

/// Nondeterministic Buchi tree automaton over trees whose nodes have 1..d
/// sons. Priority 2 on accepting states, 1 elsewhere.
struct Nbt {
  struct Move {
    Letter letter = 0;
    std::vector<std::size_t> targets;  // one state per son, in order
  };

  std::vector<std::string> atoms;
  unsigned degree = 0;
  std::size_t initial = 0;
  std::vector<bool> accepting;
  std::vector<std::vector<Move>> moves;  // a state without moves rejects
  std::vector<std::string> names;

  std::size_t size() const noexcept { return moves.size(); }
  unsigned priority(std::size_t s) const { return accepting.at(s) ? 2 : 1; }
};

/// Ranks the universal parts and runs a breakpoint subset construction.
/// Throws BudgetExceeded once more than `budget` states and moves appear.
Nbt dealternate(const Ahta& a, std::size_t budget);

struct NbtEmptiness {
  bool empty = true;
  std::optional<Lts> witness;  // regular tree read off the winning strategy
};

NbtEmptiness nbt_emptiness(const Nbt& n);

enum class SatOutcome : std::uint8_t { Sat, UnsatAtBound, Unsat, BudgetExceeded };
std::string to_string(SatOutcome o);

enum class SatMode : std::uint8_t { Bounded, Full, Auto };

struct SatOptions {
  SatMode mode = SatMode::Auto;
  std::optional<unsigned> degree;  // full mode; default min(|Q|^2, degree_cap)
  unsigned degree_cap = 3;
  std::size_t max_states = 3;  // bounded mode
  std::size_t max_degree = 2;
  std::size_t budget = 0;  // 0 reads GRADELIC_BUDGET
};

struct SatResult {
  SatOutcome outcome = SatOutcome::UnsatAtBound;
  std::optional<Lts> witness;
  std::string method;  // "bounded" or "full"
  unsigned degree = 0;
  std::size_t max_states = 0;
  std::size_t candidates = 0;  // bounded mode: models checked
  std::string note;
};

/// First total LTS (by size, then in canonical order) satisfying phi at its
/// initial state, with at most max_states states and max_degree successors
/// per state. Never answers Unsat.
SatResult sat_bounded(const Formula& phi, std::size_t max_states, std::size_t max_degree,
                      std::size_t budget = 0);

/// Full pipeline or bounded search depending on the mode; Auto falls back
/// to bounded search when the full construction is over budget. Every Sat
/// witness has been re-checked with model_check.
SatResult sat(const Formula& phi, const SatOptions& options = {});

}  // namespace gradelic
