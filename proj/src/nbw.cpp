#include <map>
#include <sstream>

#include <json.hpp>

#include "dnf.hpp"
#include "gradelic/word_automata.hpp"
#include "graph.hpp"
#include "word_util.hpp"

namespace gradelic {

namespace detail {

namespace {
graph::Adjacency adjacency(const WordAutomaton& a) {
  graph::Adjacency adj(a.size());
  for (std::size_t q = 0; q < a.size(); ++q) {
    for (const auto& succ : a.delta[q]) adj[q].insert(adj[q].end(), succ.begin(), succ.end());
    std::sort(adj[q].begin(), adj[q].end());
    adj[q].erase(std::unique(adj[q].begin(), adj[q].end()), adj[q].end());
  }
  return adj;
}
}  // namespace

std::vector<bool> live_finite(const WordAutomaton& a) {
  return graph::can_reach(adjacency(a), a.accepting);
}

std::vector<bool> live_buchi(const WordAutomaton& a) {
  auto adj = adjacency(a);
  auto cyc = graph::on_cycle(adj);
  std::vector<bool> good(a.size());
  for (std::size_t q = 0; q < a.size(); ++q) good[q] = a.accepting[q] && cyc[q];
  return graph::can_reach(adj, good);
}

WordAutomaton trim(WordAutomaton a, const std::vector<bool>& keep) {
  std::vector<std::size_t> order{a.initial};
  std::vector<std::size_t> renum(a.size(), kNoState);
  renum[a.initial] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::size_t q = order[i];
    if (!keep[q]) continue;
    for (const auto& succ : a.delta[q]) {
      for (std::size_t r : succ) {
        if (keep[r] && renum[r] == kNoState) {
          renum[r] = order.size();
          order.push_back(r);
        }
      }
    }
  }
  if (a.top != kNoState && renum[a.top] == kNoState) {
    renum[a.top] = order.size();
    order.push_back(a.top);
  }
  WordAutomaton out;
  out.atoms = a.atoms;
  out.initial = 0;
  for (std::size_t q : order) {
    std::vector<std::vector<std::size_t>> row;
    for (const auto& succ : a.delta[q]) {
      std::vector<std::size_t> s;
      if (keep[q] || q == a.top) {
        for (std::size_t r : succ) {
          if (renum[r] != kNoState && (keep[r] || r == a.top)) s.push_back(renum[r]);
        }
      }
      std::sort(s.begin(), s.end());
      row.push_back(std::move(s));
    }
    out.delta.push_back(std::move(row));
    out.accepting.push_back(a.accepting[q]);
    out.names.push_back(a.names[q]);
  }
  if (a.top != kNoState) out.top = renum[a.top];
  return out;
}

}  // namespace detail

namespace {

// Alternating Buchi automaton over negation normal form; the accepting
// states are all states except eventualities (Until).
class Abw {
 public:
  Abw(const Ltl& psi, unsigned atoms) : atoms_(atoms) {
    states_.push_back(to_infinite_nnf(psi));
    for (std::size_t q = 0; q < states_.size(); ++q) {
      const Ltl f = states_[q];
      std::vector<Dnf> row;
      for (Letter a = 0; a < (Letter{1} << atoms_); ++a) row.push_back(unfold(f, a));
      delta_.push_back(std::move(row));
    }
  }

  std::size_t size() const { return states_.size(); }
  bool accepting(std::size_t q) const { return states_[q].kind() != Ltl::Kind::Until; }
  const Dnf& delta(std::size_t q, Letter a) const { return delta_[q][a]; }
  std::string name(std::size_t q) const { return to_string(states_[q]); }

 private:
  std::size_t state_of(const Ltl& f) {
    for (std::size_t q = 0; q < states_.size(); ++q) {
      if (states_[q] == f) return q;
    }
    states_.push_back(f);
    return states_.size() - 1;
  }

  Dnf unfold(const Ltl& f, Letter a) {
    using K = Ltl::Kind;
    switch (f.kind()) {
      case K::True: return dnf::truth();
      case K::False: return dnf::falsity();
      case K::Atom: return (a >> f.index()) & 1u ? dnf::truth() : dnf::falsity();
      case K::Not:  // literal
        return (a >> f.lhs().index()) & 1u ? dnf::falsity() : dnf::truth();
      case K::Or: return dnf::lor(unfold(f.lhs(), a), unfold(f.rhs(), a));
      case K::And: return dnf::land(unfold(f.lhs(), a), unfold(f.rhs(), a));
      case K::Next: return dnf::atom(state_of(f.lhs()));
      case K::Until:
        return dnf::lor(unfold(f.rhs(), a),
                        dnf::land(unfold(f.lhs(), a), dnf::atom(state_of(f))));
      case K::Release:
        return dnf::land(unfold(f.rhs(), a),
                         dnf::lor(unfold(f.lhs(), a), dnf::atom(state_of(f))));
    }
    return dnf::falsity();
  }

  unsigned atoms_;
  std::vector<Ltl> states_;
  std::vector<std::vector<Dnf>> delta_;
};

using Set = std::vector<std::size_t>;

Set set_union(const Set& a, const Set& b) {
  Set out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string set_name(const Abw& a, const Set& s) {
  std::string n = "{";
  for (std::size_t k = 0; k < s.size(); ++k) n += (k ? ", " : "") + a.name(s[k]);
  return n + "}";
}

}  // namespace

// Miyano-Hayashi breakpoint construction: a macro state (S, O) tracks all
// current obligations S and the ones O still owing a visit to an
// accepting state since the last breakpoint.
Nbw build_nbw(const Ltl& psi, unsigned atoms) {
  if (psi.atom_bound() > atoms) throw Error("nbw: formula uses atoms beyond the alphabet");
  if (atoms > 16) throw Error("nbw: alphabet too large");
  Abw abw(psi, atoms);
  using Macro = std::pair<Set, Set>;
  std::map<Macro, std::size_t> index;
  std::vector<Macro> macros;
  auto intern = [&](const Macro& m) {
    auto [it, fresh] = index.emplace(m, macros.size());
    if (fresh) macros.push_back(m);
    return it->second;
  };
  auto strip = [&](const Set& s) {
    Set out;
    for (std::size_t q : s) {
      if (!abw.accepting(q)) out.push_back(q);
    }
    return out;
  };
  intern({Set{0}, Set{}});
  Nbw out;
  out.atoms = atoms;
  for (std::size_t i = 0; i < macros.size(); ++i) {
    const Macro m = macros[i];
    const auto& [S, O] = m;
    std::vector<std::vector<std::size_t>> row;
    for (Letter a = 0; a < (Letter{1} << atoms); ++a) {
      std::vector<const Dnf*> choices;
      bool dead = false;
      for (std::size_t q : S) {
        choices.push_back(&abw.delta(q, a));
        if (choices.back()->empty()) dead = true;
      }
      std::vector<std::size_t> succ;
      if (!dead) {
        std::vector<std::size_t> pick(S.size(), 0);
        while (true) {
          Set s2, o2;
          for (std::size_t k = 0; k < S.size(); ++k) {
            const Set& c = (*choices[k])[pick[k]];
            Set c_sorted(c.begin(), c.end());
            s2 = set_union(s2, c_sorted);
            if (std::binary_search(O.begin(), O.end(), S[k])) o2 = set_union(o2, c_sorted);
          }
          o2 = O.empty() ? strip(s2) : strip(o2);
          succ.push_back(intern({s2, o2}));
          std::size_t k = 0;
          while (k < S.size() && ++pick[k] == choices[k]->size()) pick[k++] = 0;
          if (k == S.size()) break;
        }
      }
      std::sort(succ.begin(), succ.end());
      succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
      row.push_back(std::move(succ));
    }
    out.delta.push_back(std::move(row));
    out.accepting.push_back(O.empty());
    out.names.push_back(set_name(abw, S) + "/" + set_name(abw, O));
  }
  out.initial = 0;
  auto live = detail::live_buchi(out);
  return detail::trim(std::move(out), live);
}

Nbw build_prefix_closure_nbw(const Ltl& psi, unsigned atoms) {
  const Nbw inf = build_nbw(psi, atoms);
  const Nfw fin = afw_to_nfw(build_afw_weak(psi, atoms));
  const std::size_t base_inf = 1, base_fin = 1 + inf.size();
  const std::size_t top = base_fin + fin.size();
  Nbw out;
  out.atoms = atoms;
  out.initial = 0;
  out.top = top;
  out.delta.resize(top + 1);
  out.accepting.assign(top + 1, false);
  out.names.resize(top + 1);
  out.names[0] = "q~0";
  out.names[top] = "top";
  out.accepting[top] = true;
  for (std::size_t q = 0; q < inf.size(); ++q) {
    out.names[base_inf + q] = "A:" + inf.names[q];
    out.accepting[base_inf + q] = inf.accepting[q];
  }
  for (std::size_t q = 0; q < fin.size(); ++q) out.names[base_fin + q] = "B:" + fin.names[q];

  auto fin_row = [&](std::size_t q, Letter a) {
    std::vector<std::size_t> s;
    bool to_top = false;
    for (std::size_t r : fin.successors(q, a)) {
      s.push_back(base_fin + r);
      to_top = to_top || fin.accepting[r];
    }
    if (to_top) s.push_back(top);
    return s;
  };
  for (Letter a = 0; a < (Letter{1} << atoms); ++a) {
    std::vector<std::size_t> init;
    for (std::size_t r : inf.successors(inf.initial, a)) init.push_back(base_inf + r);
    auto f0 = fin_row(fin.initial, a);
    init.insert(init.end(), f0.begin(), f0.end());
    std::sort(init.begin(), init.end());
    out.delta[0].push_back(std::move(init));
    for (std::size_t q = 0; q < inf.size(); ++q) {
      std::vector<std::size_t> s;
      for (std::size_t r : inf.successors(q, a)) s.push_back(base_inf + r);
      out.delta[base_inf + q].push_back(std::move(s));
    }
    for (std::size_t q = 0; q < fin.size(); ++q) {
      auto s = fin_row(q, a);
      std::sort(s.begin(), s.end());
      out.delta[base_fin + q].push_back(std::move(s));
    }
    out.delta[top].push_back({top});
  }
  auto live = detail::live_buchi(out);
  return detail::trim(std::move(out), live);
}

bool accepts_finite(const Nfw& a, const Word& w) {
  if (w.empty()) return false;
  std::vector<bool> cur(a.size(), false);
  cur[a.initial] = true;
  for (Letter l : w) {
    std::vector<bool> next(a.size(), false);
    for (std::size_t q = 0; q < a.size(); ++q) {
      if (!cur[q]) continue;
      for (std::size_t r : a.successors(q, l)) next[r] = true;
    }
    cur = std::move(next);
  }
  for (std::size_t q = 0; q < a.size(); ++q) {
    if (cur[q] && a.accepting[q]) return true;
  }
  return false;
}

bool accepts_lasso(const Nbw& a, const Word& stem, const Word& loop) {
  if (loop.empty()) throw Error("accepts_lasso: empty loop");
  Word pos = stem;
  pos.insert(pos.end(), loop.begin(), loop.end());
  const std::size_t n = pos.size();
  auto next = [&](std::size_t i) { return i + 1 < n ? i + 1 : stem.size(); };
  const std::size_t nodes = n * a.size();
  graph::Adjacency adj(nodes);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t q = 0; q < a.size(); ++q) {
      for (std::size_t r : a.successors(q, pos[i])) adj[i * a.size() + q].push_back(next(i) * a.size() + r);
    }
  }
  auto reach = graph::reachable(adj, a.initial);
  auto cyc = graph::on_cycle(adj);
  for (std::size_t v = 0; v < nodes; ++v) {
    if (reach[v] && cyc[v] && a.accepting[v % a.size()]) return true;
  }
  return false;
}

std::vector<Word> all_words(unsigned atoms, std::size_t min_len, std::size_t max_len) {
  std::vector<Word> out;
  const Letter k = Letter{1} << atoms;
  for (std::size_t len = min_len; len <= max_len; ++len) {
    Word w(len, 0);
    while (true) {
      out.push_back(w);
      std::size_t i = 0;
      while (i < len && ++w[len - 1 - i] == k) w[len - 1 - i++] = 0;
      if (i == len) break;
    }
  }
  return out;
}

namespace {
std::string letter_name(Letter a, unsigned atoms) {
  std::string s = "{";
  bool first = true;
  for (unsigned i = 0; i < atoms; ++i) {
    if ((a >> i) & 1u) {
      s += (first ? "a" : ",a") + std::to_string(i + 1);
      first = false;
    }
  }
  return s + "}";
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}
}  // namespace

std::string to_dot(const WordAutomaton& a) {
  std::ostringstream o;
  o << "digraph automaton {\n  rankdir=LR;\n  init [shape=point];\n  init -> q" << a.initial << ";\n";
  for (std::size_t q = 0; q < a.size(); ++q) {
    o << "  q" << q << " [label=\"" << (q == a.top ? std::string("top") : escape(a.names[q]))
      << "\", shape=" << (a.accepting[q] ? "doublecircle" : "circle") << "];\n";
  }
  for (std::size_t q = 0; q < a.size(); ++q) {
    std::map<std::size_t, std::string> labels;
    for (Letter l = 0; l < a.letters(); ++l) {
      for (std::size_t r : a.successors(q, l)) {
        auto& s = labels[r];
        s += (s.empty() ? "" : " ") + letter_name(l, a.atoms);
      }
    }
    for (const auto& [r, lab] : labels) {
      o << "  q" << q << " -> q" << r << " [label=\"" << lab << "\"];\n";
    }
  }
  o << "}\n";
  return o.str();
}

std::string to_json(const WordAutomaton& a) {
  nlohmann::json j;
  j["atoms"] = a.atoms;
  j["initial"] = a.initial;
  j["states"] = nlohmann::json::array();
  for (std::size_t q = 0; q < a.size(); ++q) {
    j["states"].push_back({{"id", q}, {"name", a.names[q]}, {"accepting", bool(a.accepting[q])},
                           {"top", q == a.top}});
  }
  j["transitions"] = nlohmann::json::array();
  for (std::size_t q = 0; q < a.size(); ++q) {
    for (Letter l = 0; l < a.letters(); ++l) {
      for (std::size_t r : a.successors(q, l)) j["transitions"].push_back({q, l, r});
    }
  }
  return j.dump(2);
}

}  // namespace gradelic
