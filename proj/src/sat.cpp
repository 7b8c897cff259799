#include <algorithm>
#include <deque>

#include "gradelic/satisfiability.hpp"

namespace gradelic {

std::string to_string(SatOutcome o) {
  switch (o) {
    case SatOutcome::Sat: return "sat";
    case SatOutcome::UnsatAtBound: return "unsat-at-bound";
    case SatOutcome::Unsat: return "unsat";
    case SatOutcome::BudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

namespace {

// Nonempty successor sets over k states with at most d members, by size
// and then lexicographically.
std::vector<std::vector<StateId>> successor_sets(std::size_t k, std::size_t d) {
  std::vector<std::vector<StateId>> out;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << k); ++m) {
    std::vector<StateId> s;
    for (std::size_t i = 0; i < k; ++i) {
      if (m >> i & 1u) s.push_back(i);
    }
    if (s.size() <= d) out.push_back(std::move(s));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

// Every state is reached from 0 and breadth-first search in successor
// order discovers the states as 0, 1, 2, ... Each rooted reachable
// structure has at least one numbering of this shape.
bool canonical(const std::vector<std::vector<StateId>>& succ) {
  std::vector<char> seen(succ.size(), 0);
  std::deque<StateId> work{0};
  seen[0] = 1;
  StateId next = 1;
  while (!work.empty()) {
    const StateId x = work.front();
    work.pop_front();
    for (StateId y : succ[x]) {
      if (seen[y]) continue;
      if (y != next) return false;
      seen[y] = 1;
      ++next;
      work.push_back(y);
    }
  }
  return next == succ.size();
}

}  // namespace

SatResult sat_bounded(const Formula& phi, std::size_t max_states, std::size_t max_degree, std::size_t budget) {
  if (max_states == 0 || max_degree == 0) throw Error("sat: bounds must be at least 1");
  if (budget == 0) budget = budget_from_env();
  const Ghta a = compile(phi);
  const std::vector<std::string>& atoms = a.atoms();
  SatResult out;
  out.method = "bounded";
  out.max_states = max_states;
  out.degree = static_cast<unsigned>(max_degree);
  for (std::size_t k = 1; k <= max_states; ++k) {
    const auto sets = successor_sets(k, max_degree);
    const std::size_t per_state = sets.size() << atoms.size();
    std::vector<std::size_t> pick(k, 0);
    while (true) {
      std::vector<std::vector<StateId>> succ(k);
      for (std::size_t i = 0; i < k; ++i) succ[i] = sets[pick[i] >> atoms.size()];
      if (canonical(succ)) {
        if (++out.candidates > budget) {
          out.outcome = SatOutcome::BudgetExceeded;
          out.note = "candidate budget of " + std::to_string(budget) + " exceeded at " + std::to_string(k) + " states";
          return out;
        }
        std::vector<std::string> names;
        std::vector<std::vector<std::string>> labels(k);
        for (std::size_t i = 0; i < k; ++i) {
          names.push_back("s" + std::to_string(i));
          const std::size_t letter = pick[i] & ((std::size_t{1} << atoms.size()) - 1);
          for (std::size_t b = 0; b < atoms.size(); ++b) {
            if (letter >> b & 1u) labels[i].push_back(atoms[b]);
          }
        }
        Lts s(atoms, std::move(names), std::move(labels), succ, 0);
        if (model_check(s, 0, a)) {
          out.outcome = SatOutcome::Sat;
          out.witness = std::move(s);
          return out;
        }
      }
      std::size_t i = 0;
      while (i < k && ++pick[i] == per_state) pick[i++] = 0;
      if (i == k) break;
    }
  }
  out.outcome = SatOutcome::UnsatAtBound;
  out.note = "no model with at most " + std::to_string(max_states) + " states and " + std::to_string(max_degree) +
             " successors per state";
  return out;
}

SatResult sat(const Formula& phi, const SatOptions& options) {
  const std::size_t budget = options.budget ? options.budget : budget_from_env();
  if (options.mode == SatMode::Bounded) return sat_bounded(phi, options.max_states, options.max_degree, budget);

  const Ghta a = compile(phi);
  const std::size_t q = a.state_count();
  const unsigned d = options.degree ? *options.degree
                                    : static_cast<unsigned>(std::min<std::size_t>(q * q, options.degree_cap));
  SatResult out;
  out.method = "full";
  out.degree = std::max(1u, d);
  try {
    const Nbt n = dealternate(Ahta(std::make_shared<const Ghta>(a), out.degree), budget);
    NbtEmptiness e = nbt_emptiness(n);
    if (e.empty) {
      out.outcome = SatOutcome::Unsat;
      out.note = "no tree model with at most " + std::to_string(out.degree) + " sons per node";
      return out;
    }
    if (!model_check(*e.witness, e.witness->initial(), a)) {
      throw Error("sat: extracted witness does not satisfy the formula");
    }
    out.outcome = SatOutcome::Sat;
    out.witness = std::move(e.witness);
    return out;
  } catch (const BudgetExceeded& err) {
    if (options.mode == SatMode::Full) {
      out.outcome = SatOutcome::BudgetExceeded;
      out.note = err.what();
      return out;
    }
    SatResult b = sat_bounded(phi, options.max_states, options.max_degree, budget);
    b.note = std::string("full construction over budget; ") + (b.note.empty() ? "bounded search" : b.note);
    return b;
  }
}

}  // namespace gradelic
