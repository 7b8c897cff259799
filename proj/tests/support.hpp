#pragma once

// Shared by the unit tests and the acceptance run.

#include <functional>
#include <string>
#include <vector>

#include "gradelic/word_automata.hpp"

namespace gradelic::testing_support {

inline const std::vector<std::string> kLtlCorpus = {
    "X p",          "p U q",          "p R q",           "G p",
    "F q",          "!(p U (X q))",   "G (p -> X q)",    "!(X p) | (q R p)",
};

// LTL over the fixed atom order p < q, whatever atoms the text mentions.
inline Ltl ltl_pq(const std::string& text) {
  std::function<Ltl(const Formula&)> go = [&](const Formula& g) -> Ltl {
    switch (g.op()) {
      case Op::True: return Ltl::constant(true);
      case Op::False: return Ltl::constant(false);
      case Op::Atom: return Ltl::atom(g.name() == "p" ? 0 : 1);
      case Op::Not: return Ltl::negation(go(g.lhs()));
      case Op::Or: return Ltl::disjunction(go(g.lhs()), go(g.rhs()));
      case Op::And: return Ltl::conjunction(go(g.lhs()), go(g.rhs()));
      case Op::Next: return Ltl::next(go(g.lhs()));
      case Op::Until: return Ltl::until(go(g.lhs()), go(g.rhs()));
      case Op::Release: return Ltl::release(go(g.lhs()), go(g.rhs()));
      default: throw Error("not LTL");
    }
  };
  return go(parse_any(text));
}

inline Word unfold_word(const Word& stem, const Word& loop, std::size_t len) {
  Word w = stem;
  while (w.size() < len) w.push_back(loop[(w.size() - stem.size()) % loop.size()]);
  w.resize(len);
  return w;
}

// Some finite prefix satisfies f under the weak semantics. Prefixes of a
// lasso repeat their verdict pattern well before stem + (size(f) + 2) loops.
inline bool some_prefix_satisfies(const Ltl& f, const Word& stem, const Word& loop) {
  const std::size_t horizon = stem.size() + (size(f) + 2) * loop.size();
  for (std::size_t len = 1; len <= horizon; ++len) {
    if (eval_weak(f, unfold_word(stem, loop, len))) return true;
  }
  return false;
}

}  // namespace gradelic::testing_support
