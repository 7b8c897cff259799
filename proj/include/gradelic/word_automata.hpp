#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "gradelic/ltl.hpp"

namespace gradelic {

using Word = std::vector<Letter>;

inline constexpr std::size_t kNoState = std::numeric_limits<std::size_t>::max();

/// Positive Boolean formula kept as its set of minimal satisfying sets:
/// the empty disjunction is false, a disjunct with no members is true.
using Dnf = std::vector<std::vector<std::size_t>>;

/// Nondeterministic automaton on finite words (final states) or on infinite
/// words (Buchi states); the same record serves both.
struct WordAutomaton {
  unsigned atoms = 0;  // alphabet is all letters below 2^atoms
  std::size_t initial = 0;
  /// delta[q][letter] lists successors, sorted.
  std::vector<std::vector<std::vector<std::size_t>>> delta;
  std::vector<bool> accepting;
  std::vector<std::string> names;
  /// Accepting sink of a prefix-closure automaton, kNoState otherwise.
  std::size_t top = kNoState;

  std::size_t size() const noexcept { return delta.size(); }
  std::size_t letters() const noexcept { return std::size_t{1} << atoms; }
  const std::vector<std::size_t>& successors(std::size_t q, Letter a) const {
    return delta.at(q).at(a);
  }
};

using Nfw = WordAutomaton;
using Nbw = WordAutomaton;

/// The alternating finite-word automaton for weak semantics. States are
/// the subformulas of the input and their negations, plus the end-of-word
/// guess ew, which is the only final state.
class Afw {
 public:
  Afw(const Ltl& psi, unsigned atoms);

  std::size_t size() const noexcept { return states_.size(); }
  unsigned atoms() const noexcept { return atoms_; }
  std::size_t initial() const noexcept { return 0; }
  std::size_t ew() const noexcept { return ew_; }
  bool is_ew(std::size_t q) const noexcept { return q == ew_; }
  /// Formula of a state; invalid (default Ltl) for ew.
  const Ltl& formula(std::size_t q) const { return states_.at(q); }
  std::string name(std::size_t q) const;
  const Dnf& delta(std::size_t q, Letter a) const { return delta_.at(q).at(a); }

  /// Alternating acceptance by direct run search (memoized).
  bool accepts(const Word& w) const;

 private:
  std::size_t state_of(const Ltl& f);
  Dnf unfold(const Ltl& f, Letter a);

  unsigned atoms_;
  std::vector<Ltl> states_;
  std::size_t ew_ = 0;
  std::vector<std::vector<Dnf>> delta_;
};

Afw build_afw_weak(const Ltl& psi, unsigned atoms);

/// Subset construction; a subset is final iff it is contained in {ew}.
/// States that cannot reach a final state are dropped.
Nfw afw_to_nfw(const Afw& a);

/// Buchi automaton for the infinite words satisfying psi.
Nbw build_nbw(const Ltl& psi, unsigned atoms);

/// Buchi automaton for the words w with w satisfying psi, or some finite
/// prefix of w satisfying psi under weak semantics. `top` is set.
Nbw build_prefix_closure_nbw(const Ltl& psi, unsigned atoms);

bool accepts_finite(const Nfw& a, const Word& w);
bool accepts_lasso(const Nbw& a, const Word& stem, const Word& loop);

/// Reference evaluators, written straight from the semantics.
bool eval_weak(const Ltl& psi, const Word& w);
bool eval_lasso(const Ltl& psi, const Word& stem, const Word& loop);

/// Every word over `atoms` atoms with lengths in [min_len, max_len].
std::vector<Word> all_words(unsigned atoms, std::size_t min_len, std::size_t max_len);

std::string to_dot(const WordAutomaton& a);
std::string to_json(const WordAutomaton& a);

}  // namespace gradelic
