#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gradelic/ltl.hpp"
#include "gradelic/lts.hpp"

namespace gradelic {

/// Brute-force semantic checks that share no code with the tree automata
/// or the games. State subformulas are labelled with the reference CTL*
/// checker when every grade is at most 1, and with model_check otherwise.

/// Truth of a state formula at every state of s.
std::vector<bool> oracle_label(const Lts& s, const Formula& phi);

/// At least n successors of t satisfy phi.
bool count_x_successors(const Lts& s, StateId t, const Formula& phi, unsigned n);

/// Classic CTL* evaluation of a formula whose grades are all at most 1.
/// Throws Error on a grade of 2 or more.
bool ctlstar_reference_check(const Lts& s, StateId t, const Formula& phi);

/// One breakpoint y: the unwinding node `node` (its path from the root),
/// an infinite path through it satisfying psi, and an extension of the
/// father's path refuting psi. The root has no father to refute.
struct Breakpoint {
  Path node;
  Lasso through;
  bool finite_refutation = true;
  Path refuting_path;
  Lasso refuting_lasso;
};

struct BreakpointCertificate {
  std::vector<Breakpoint> points;
};

enum class BreakpointVerdict : std::uint8_t { Confirmed, Unknown };

struct BreakpointResult {
  BreakpointVerdict verdict = BreakpointVerdict::Unknown;
  BreakpointCertificate certificate;
};

/// Looks for g pairwise non-descendant breakpoints among the unwinding
/// nodes at most `depth` edges below t, with witnesses extending at most
/// `lasso_bound` states past the node. Confirmed implies E>=g psi at t;
/// Unknown only says no certificate exists within the bounds.
BreakpointResult breakpoint_search(const Lts& s, StateId t, const Formula& psi, unsigned g,
                                   std::size_t depth, std::size_t lasso_bound);

/// Re-checks a certificate using only paths and the word evaluators.
bool validate_certificate(const Lts& s, StateId t, const Formula& psi, unsigned g,
                          const BreakpointCertificate& c);

}  // namespace gradelic
