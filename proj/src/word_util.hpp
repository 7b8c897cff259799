#pragma once

#include "gradelic/word_automata.hpp"

namespace gradelic::detail {

// States from which some accepting state is reachable.
std::vector<bool> live_finite(const WordAutomaton& a);

// States from which an accepting cycle is reachable.
std::vector<bool> live_buchi(const WordAutomaton& a);

// Keeps the states marked in `keep` that are reachable from the initial
// state through kept states, renumbered in breadth-first order. The
// initial state always survives (possibly with no transitions).
WordAutomaton trim(WordAutomaton a, const std::vector<bool>& keep);

}  // namespace gradelic::detail
