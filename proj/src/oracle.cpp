#include "gradelic/oracle.hpp"

#include <algorithm>
#include <optional>

#include "gradelic/games.hpp"
#include "gradelic/word_automata.hpp"
#include "graph.hpp"

namespace gradelic {

namespace {

std::vector<bool> reference_label(const Lts& s, const Formula& f);

// Letters of every state over the projected atoms of a path formula.
std::vector<Letter> letters_for(const Lts& s, const std::vector<Formula>& atoms,
                                std::vector<bool> (*label)(const Lts&, const Formula&)) {
  std::vector<Letter> out(s.size(), 0);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const std::vector<bool> v = label(s, atoms[i]);
    for (StateId t = 0; t < s.size(); ++t) {
      if (v[t]) out[t] |= Letter{1} << i;
    }
  }
  return out;
}

// E psi at every state: some state-letter run of the NBW is accepting.
std::vector<bool> exists_path(const Lts& s, const Formula& body) {
  LtlProjection p = ltl_project(body);
  const std::vector<Letter> letter = letters_for(s, p.atoms, reference_label);
  const Nbw a = build_nbw(p.formula, static_cast<unsigned>(p.atoms.size()));
  const std::size_t m = a.size();
  graph::Adjacency adj(s.size() * m);
  std::vector<bool> good(s.size() * m, false);
  for (StateId t = 0; t < s.size(); ++t) {
    for (std::size_t q = 0; q < m; ++q) {
      for (std::size_t r : a.successors(q, letter[t])) {
        for (StateId u : s.successors(t)) adj[t * m + q].push_back(u * m + r);
      }
    }
  }
  const std::vector<bool> cyc = graph::on_cycle(adj);
  for (std::size_t v = 0; v < adj.size(); ++v) good[v] = cyc[v] && a.accepting[v % m];
  const std::vector<bool> reach = graph::can_reach(adj, good);
  std::vector<bool> out(s.size());
  for (StateId t = 0; t < s.size(); ++t) out[t] = reach[t * m + a.initial];
  return out;
}

std::vector<bool> reference_label(const Lts& s, const Formula& f) {
  std::vector<bool> out(s.size());
  switch (f.op()) {
    case Op::True:
    case Op::False: out.assign(s.size(), f.op() == Op::True); return out;
    case Op::Atom:
      for (StateId t = 0; t < s.size(); ++t) out[t] = s.holds(t, f.name());
      return out;
    case Op::Not:
      out = reference_label(s, f.lhs());
      out.flip();
      return out;
    case Op::Or:
    case Op::And: {
      const std::vector<bool> a = reference_label(s, f.lhs()), b = reference_label(s, f.rhs());
      for (StateId t = 0; t < s.size(); ++t) out[t] = f.op() == Op::Or ? a[t] || b[t] : a[t] && b[t];
      return out;
    }
    case Op::Exists:
      if (f.grade() >= 2) throw Error("reference checker: grade " + std::to_string(f.grade()) + " above 1");
      if (f.grade() == 0) {
        out.assign(s.size(), true);
        return out;
      }
      return exists_path(s, f.lhs());
    default: throw Error("reference checker: not a state formula: " + to_string(f));
  }
}

std::vector<bool> main_label(const Lts& s, const Formula& f) {
  const Ghta a = compile(f);
  std::vector<bool> out(s.size());
  for (StateId t = 0; t < s.size(); ++t) out[t] = model_check(s, t, a);
  return out;
}

Word word_of(const std::vector<Letter>& letter, const Path& p) {
  Word w;
  w.reserve(p.size());
  for (StateId t : p) w.push_back(letter[t]);
  return w;
}

// First `len` states of stem . loop^omega.
Path unfold(const Lasso& l, std::size_t len) {
  Path p;
  for (std::size_t i = 0; p.size() < len; ++i) {
    if (i < l.stem.size()) {
      p.push_back(l.stem[i]);
    } else {
      if (l.loop.empty()) break;
      p.push_back(l.loop[(i - l.stem.size()) % l.loop.size()]);
    }
  }
  return p;
}

// Psi and the state letters it reads, shared by the search and validation.
struct PathCheck {
  Ltl psi;
  Ltl not_psi;
  std::vector<Letter> letter;

  PathCheck(const Lts& s, const Formula& body) {
    LtlProjection p = ltl_project(body);
    psi = p.formula;
    not_psi = Ltl::negation(p.formula);
    letter.assign(s.size(), 0);
    for (std::size_t i = 0; i < p.atoms.size(); ++i) {
      const std::vector<bool> v = oracle_label(s, p.atoms[i]);
      for (StateId t = 0; t < s.size(); ++t) {
        if (v[t]) letter[t] |= Letter{1} << i;
      }
    }
  }

  bool lasso(const Ltl& f, const Lasso& l) const {
    return eval_lasso(f, word_of(letter, l.stem), word_of(letter, l.loop));
  }
};

// Extensions of `prefix` by up to `extra` states, depth first in successor
// order. `visit` returns true to stop.
template <class Visit>
bool extend(const Lts& s, Path& p, std::size_t extra, Visit&& visit) {
  if (visit(p)) return true;
  if (extra == 0) return false;
  for (StateId u : s.successors(p.back())) {
    p.push_back(u);
    const bool stop = extend(s, p, extra - 1, visit);
    p.pop_back();
    if (stop) return true;
  }
  return false;
}

// Lassos closing p back onto one of its own positions, provided the
// unfolding keeps `keep` as a prefix.
template <class Visit>
bool closures(const Lts& s, const Path& p, std::size_t keep, Visit&& visit) {
  if (p.size() < keep) return false;
  const auto& succ = s.successors(p.back());
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (!std::binary_search(succ.begin(), succ.end(), p[j])) continue;
    Lasso l{Path(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(j)),
            Path(p.begin() + static_cast<std::ptrdiff_t>(j), p.end())};
    if (visit(l)) return true;
  }
  return false;
}

std::optional<Lasso> find_through(const Lts& s, const PathCheck& c, const Path& node, std::size_t bound) {
  std::optional<Lasso> found;
  Path p = node;
  extend(s, p, bound, [&](const Path& q) {
    return closures(s, q, node.size(), [&](const Lasso& l) {
      if (!c.lasso(c.psi, l)) return false;
      found = l;
      return true;
    });
  });
  return found;
}

// Fills the refutation of the father's path; finite extensions first.
bool find_refutation(const Lts& s, const PathCheck& c, const Path& node, std::size_t bound, Breakpoint& b) {
  if (node.size() == 1) return true;
  const Path father(node.begin(), node.end() - 1);
  Path p = father;
  if (extend(s, p, bound, [&](const Path& q) {
        if (!eval_weak(c.not_psi, word_of(c.letter, q))) return false;
        b.finite_refutation = true;
        b.refuting_path = q;
        return true;
      })) {
    return true;
  }
  p = father;
  return extend(s, p, bound, [&](const Path& q) {
    return closures(s, q, father.size(), [&](const Lasso& l) {
      if (!c.lasso(c.not_psi, l)) return false;
      b.finite_refutation = false;
      b.refuting_lasso = l;
      return true;
    });
  });
}

struct Node {
  Path path;
  std::vector<std::size_t> kids;
  std::optional<Breakpoint> point;
  std::size_t best = 0;  // largest antichain of breakpoints in the subtree
};

}  // namespace

std::vector<bool> oracle_label(const Lts& s, const Formula& phi) {
  return metrics(phi).degree <= 1 ? reference_label(s, phi) : main_label(s, phi);
}

bool count_x_successors(const Lts& s, StateId t, const Formula& phi, unsigned n) {
  if (n == 0) return true;
  const std::vector<bool> v = oracle_label(s, phi);
  std::size_t count = 0;
  for (StateId u : s.successors(t)) count += v[u] ? 1 : 0;
  return count >= n;
}

bool ctlstar_reference_check(const Lts& s, StateId t, const Formula& phi) {
  if (!phi.valid() || !phi.is_state()) throw Error("reference checker: expected a state formula");
  if (metrics(phi).degree > 1) throw Error("reference checker: grades above 1 are not supported");
  return reference_label(s, phi).at(t);
}

BreakpointResult breakpoint_search(const Lts& s, StateId t, const Formula& psi, unsigned g,
                                   std::size_t depth, std::size_t lasso_bound) {
  BreakpointResult out;
  if (g == 0) {
    out.verdict = BreakpointVerdict::Confirmed;
    return out;
  }
  const PathCheck c(s, psi);
  std::vector<Node> nodes;
  nodes.push_back(Node{{t}, {}, {}, 0});
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].path.size() > depth) continue;
    for (StateId u : s.successors(nodes[i].path.back())) {
      Path p = nodes[i].path;
      p.push_back(u);
      nodes[i].kids.push_back(nodes.size());
      nodes.push_back(Node{std::move(p), {}, {}, 0});
    }
  }
  for (Node& n : nodes) {
    std::optional<Lasso> through = find_through(s, c, n.path, lasso_bound);
    if (!through) continue;
    Breakpoint b;
    b.node = n.path;
    b.through = *through;
    if (find_refutation(s, c, n.path, lasso_bound, b)) n.point = std::move(b);
  }
  // children come after their father, so a reverse sweep sees them first
  for (std::size_t i = nodes.size(); i-- > 0;) {
    std::size_t sum = 0;
    for (std::size_t k : nodes[i].kids) sum += nodes[k].best;
    nodes[i].best = std::max<std::size_t>(sum, nodes[i].point ? 1 : 0);
  }
  if (nodes[0].best < g) return out;
  auto collect = [&](auto& self, std::size_t i) -> void {
    if (out.certificate.points.size() == g) return;
    std::size_t sum = 0;
    for (std::size_t k : nodes[i].kids) sum += nodes[k].best;
    if (sum == 0) {
      if (nodes[i].point) out.certificate.points.push_back(*nodes[i].point);
      return;
    }
    for (std::size_t k : nodes[i].kids) self(self, k);
  };
  collect(collect, 0);
  out.verdict = BreakpointVerdict::Confirmed;
  return out;
}

bool validate_certificate(const Lts& s, StateId t, const Formula& psi, unsigned g,
                          const BreakpointCertificate& c) {
  if (c.points.size() != g) return false;
  const PathCheck pc(s, psi);
  for (std::size_t i = 0; i < c.points.size(); ++i) {
    const Breakpoint& b = c.points[i];
    if (b.node.empty() || b.node[0] != t || !is_path(s, b.node)) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (is_prefix(b.node, c.points[j].node) || is_prefix(c.points[j].node, b.node)) return false;
    }
    if (!is_lasso(s, b.through) || unfold(b.through, b.node.size()) != b.node) return false;
    if (!pc.lasso(pc.psi, b.through)) return false;
    if (b.node.size() == 1) continue;
    const Path father(b.node.begin(), b.node.end() - 1);
    if (b.finite_refutation) {
      if (!is_path(s, b.refuting_path) || !is_prefix(father, b.refuting_path)) return false;
      if (!eval_weak(pc.not_psi, word_of(pc.letter, b.refuting_path))) return false;
    } else {
      if (!is_lasso(s, b.refuting_lasso) || unfold(b.refuting_lasso, father.size()) != father) return false;
      if (!pc.lasso(pc.not_psi, b.refuting_lasso)) return false;
    }
  }
  return true;
}

}  // namespace gradelic
