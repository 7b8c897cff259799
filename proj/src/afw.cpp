#include <map>

#include "dnf.hpp"
#include "gradelic/word_automata.hpp"
#include "graph.hpp"
#include "word_util.hpp"

namespace gradelic {

Afw::Afw(const Ltl& psi, unsigned atoms) : atoms_(atoms) {
  if (psi.atom_bound() > atoms) throw Error("afw: formula uses atoms beyond the alphabet");
  if (atoms > 16) throw Error("afw: alphabet too large");
  states_.push_back(psi);
  states_.emplace_back();  // ew
  ew_ = 1;
  for (std::size_t q = 0; q < states_.size(); ++q) {
    std::vector<Dnf> row;
    const Ltl f = states_[q];  // unfold may grow states_
    for (Letter a = 0; a < (Letter{1} << atoms_); ++a) {
      row.push_back(q == ew_ ? dnf::falsity() : unfold(f, a));
    }
    delta_.push_back(std::move(row));
  }
}

std::size_t Afw::state_of(const Ltl& f) {
  for (std::size_t q = 0; q < states_.size(); ++q) {
    if (q != ew_ && states_[q] == f) return q;
  }
  states_.push_back(f);
  return states_.size() - 1;
}

std::string Afw::name(std::size_t q) const {
  return q == ew_ ? std::string("ew") : to_string(states_.at(q));
}

// One-step unfolding. Negated operators get their own dual rules; ew is
// the guess that the word ends here.
Dnf Afw::unfold(const Ltl& f, Letter a) {
  using K = Ltl::Kind;
  auto neg = [](const Ltl& x) { return Ltl::negation(x); };
  if (f.kind() != K::Not) {
    switch (f.kind()) {
      case K::True: return dnf::truth();
      case K::False: return dnf::falsity();
      case K::Atom: return (a >> f.index()) & 1u ? dnf::truth() : dnf::falsity();
      case K::Or: return dnf::lor(unfold(f.lhs(), a), unfold(f.rhs(), a));
      case K::And: return dnf::land(unfold(f.lhs(), a), unfold(f.rhs(), a));
      case K::Next: return dnf::atom(state_of(f.lhs()));
      case K::Until:
        return dnf::lor(unfold(f.rhs(), a),
                        dnf::land(unfold(f.lhs(), a), dnf::atom(state_of(f))));
      case K::Release:
        return dnf::lor(dnf::land(unfold(f.lhs(), a), unfold(f.rhs(), a)),
                        dnf::land(unfold(f.rhs(), a), dnf::atom(state_of(f))));
      case K::Not: break;
    }
  }
  const Ltl g = f.lhs();
  switch (g.kind()) {
    case K::True: return dnf::falsity();
    case K::False: return dnf::truth();
    case K::Atom: return (a >> g.index()) & 1u ? dnf::falsity() : dnf::truth();
    case K::Not: return unfold(g.lhs(), a);
    case K::Or: return dnf::land(unfold(neg(g.lhs()), a), unfold(neg(g.rhs()), a));
    case K::And: return dnf::lor(unfold(neg(g.lhs()), a), unfold(neg(g.rhs()), a));
    case K::Next: return dnf::lor(dnf::atom(ew_), dnf::atom(state_of(neg(g.lhs()))));
    case K::Until: {
      Dnf later = dnf::lor(dnf::atom(ew_), dnf::atom(state_of(f)));
      return dnf::land(unfold(neg(g.rhs()), a), dnf::lor(unfold(neg(g.lhs()), a), later));
    }
    case K::Release: {
      Dnf later = dnf::lor(dnf::atom(ew_), dnf::atom(state_of(f)));
      return dnf::lor(unfold(neg(g.rhs()), a), dnf::land(unfold(neg(g.lhs()), a), later));
    }
  }
  return dnf::falsity();
}

bool Afw::accepts(const Word& w) const {
  const std::size_t n = w.size();
  std::vector<signed char> memo(size() * (n + 1), -1);
  auto acc = [&](auto& self, std::size_t q, std::size_t i) -> bool {
    if (i == n) return q == ew_;
    signed char& m = memo[q * (n + 1) + i];
    if (m >= 0) return m;
    bool ok = false;
    for (const auto& clause : delta(q, w[i])) {
      bool all = true;
      for (std::size_t r : clause) {
        if (!self(self, r, i + 1)) {
          all = false;
          break;
        }
      }
      if (all) {
        ok = true;
        break;
      }
    }
    m = ok;
    return ok;
  };
  return !w.empty() && acc(acc, initial(), 0);
}

Afw build_afw_weak(const Ltl& psi, unsigned atoms) { return Afw(psi, atoms); }

Nfw afw_to_nfw(const Afw& a) {
  Nfw out;
  out.atoms = a.atoms();
  std::map<std::vector<std::size_t>, std::size_t> index;
  std::vector<std::vector<std::size_t>> subsets;
  auto intern = [&](const std::vector<std::size_t>& s) {
    auto [it, fresh] = index.emplace(s, subsets.size());
    if (fresh) subsets.push_back(s);
    return it->second;
  };
  intern({a.initial()});
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    std::vector<std::vector<std::size_t>> row;
    for (Letter l = 0; l < (Letter{1} << a.atoms()); ++l) {
      Dnf acc = dnf::truth();
      for (std::size_t q : subsets[i]) acc = dnf::land(acc, a.delta(q, l));
      std::vector<std::size_t> succ;
      for (const auto& clause : acc) succ.push_back(intern(clause));
      std::sort(succ.begin(), succ.end());
      row.push_back(std::move(succ));
    }
    out.delta.push_back(std::move(row));
  }
  for (const auto& s : subsets) {
    bool fin = std::all_of(s.begin(), s.end(), [&](std::size_t q) { return a.is_ew(q); });
    out.accepting.push_back(fin);
    std::string n = "{";
    for (std::size_t k = 0; k < s.size(); ++k) n += (k ? ", " : "") + a.name(s[k]);
    out.names.push_back(n + "}");
  }
  out.initial = 0;
  auto live = detail::live_finite(out);
  return detail::trim(std::move(out), live);
}

}  // namespace gradelic
