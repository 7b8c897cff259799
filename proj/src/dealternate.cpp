#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <tuple>

#include "gradelic/satisfiability.hpp"

namespace gradelic {

std::size_t budget_from_env(std::size_t fallback) {
  if (const char* v = std::getenv("GRADELIC_BUDGET")) {
    char* end = nullptr;
    const unsigned long long n = std::strtoull(v, &end, 10);
    if (end != v && *end == '\0' && n > 0) return static_cast<std::size_t>(n);
  }
  return fallback;
}

namespace {

using Atom = std::uint64_t;  // direction << 32 | state
using Clause = std::vector<Atom>;
using Dnf = std::vector<Clause>;

Atom atom(unsigned dir, QState q) { return (Atom{dir} << 32) | q; }
unsigned dir_of(Atom a) { return static_cast<unsigned>(a >> 32); }
QState state_of(Atom a) { return static_cast<QState>(a & 0xffffffffu); }

void minimise(Dnf& d) {
  for (Clause& c : d) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }
  std::sort(d.begin(), d.end(), [](const Clause& a, const Clause& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  d.erase(std::unique(d.begin(), d.end()), d.end());
  Dnf out;
  for (const Clause& c : d) {
    bool covered = false;
    for (const Clause& k : out) {
      if (std::includes(c.begin(), c.end(), k.begin(), k.end())) {
        covered = true;
        break;
      }
    }
    if (!covered) out.push_back(c);
  }
  d = std::move(out);
}

class Budget {
 public:
  explicit Budget(std::size_t limit) : limit_(limit) {}
  void charge(std::size_t n) {
    spent_ += n;
    if (spent_ > limit_) throw BudgetExceeded("dealternation: budget of " + std::to_string(limit_) + " exceeded");
  }

 private:
  std::size_t limit_;
  std::size_t spent_ = 0;
};

// Transitions as minimal sets of (son, state) obligations, with moves that
// stay on the node inlined.
class Clauses {
 public:
  Clauses(const Ahta& a, Budget& b) : a_(a), g_(a.ghta()), budget_(b) {}

  const Dnf& of(QState q, Letter sigma, unsigned sons) {
    const auto key = std::make_tuple(q, sigma, sons);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    Dnf d = dnf(a_.transition(q, sigma, sons), q, sigma, sons);
    for (const Clause& c : d) budget_.charge(c.size() + 1);
    return cache_.emplace(key, std::move(d)).first->second;
  }

 private:
  Dnf dnf(const PosBool& f, QState q, Letter sigma, unsigned sons) {
    using K = PosBool::Kind;
    switch (f.kind()) {
      case K::True: return {Clause{}};
      case K::False: return {};
      case K::Or: {
        Dnf out;
        for (const auto& k : f.kids()) {
          Dnf d = dnf(k, q, sigma, sons);
          out.insert(out.end(), d.begin(), d.end());
        }
        budget_.charge(out.size());
        minimise(out);
        return out;
      }
      case K::And: {
        Dnf out{Clause{}};
        for (const auto& k : f.kids()) {
          const Dnf d = dnf(k, q, sigma, sons);
          budget_.charge(out.size() * d.size());
          Dnf next;
          for (const Clause& a : out) {
            for (const Clause& b : d) {
              Clause c = a;
              c.insert(c.end(), b.begin(), b.end());
              next.push_back(std::move(c));
            }
          }
          minimise(next);
          out = std::move(next);
          if (out.empty()) break;
        }
        return out;
      }
      case K::Dir: return {Clause{atom(f.direction(), f.states()[0])}};
      case K::State: {
        const QState to = f.states()[0];
        // ranks are kept only across levels, so a same-node move must leave the part
        if (g_.part(to) == g_.part(q)) throw Error("dealternation: same-node move inside a part");
        return of(to, sigma, sons);
      }
      default: throw Error("dealternation: unexpanded transition");
    }
  }

  const Ahta& a_;
  const Ghta& g_;
  Budget& budget_;
  std::map<std::tuple<QState, Letter, unsigned>, Dnf> cache_;
};

// A node of the run carries each automaton state once, with a rank when
// the state lies in a universal part (-1 otherwise), and the subset of
// states still owing a visit to an accepting state.
struct Level {
  std::vector<std::pair<QState, int>> ranked;  // sorted by state
  std::vector<QState> owing;

  friend bool operator<(const Level& a, const Level& b) {
    return std::tie(a.ranked, a.owing) < std::tie(b.ranked, b.owing);
  }
};

}  // namespace

// Universal parts are co-Buchi: a thread there must eventually stop
// visiting bad states. Ranks that never grow inside a part, are never odd
// on a bad state and settle on an odd value turn that into a Buchi
// condition; the owing set is the usual breakpoint for the Buchi threads.
// At each son a ranked state takes the largest allowed rank or the next
// allowed one below, which is enough to follow any odd ranking downwards.
Nbt dealternate(const Ahta& a, std::size_t budget) {
  const Ghta& g = a.ghta();
  Budget b(budget);
  Clauses clauses(a, b);
  std::map<std::size_t, int> top_rank;
  for (QState q : g.reachable_states()) top_rank[g.part(q)] += 2;

  auto accepting = [&](QState q, int r) {
    return r >= 0 ? r % 2 == 1 : g.type(q) == SetType::Exist && g.good(q);
  };
  auto allowed = [&](QState q, int bound) {
    std::vector<int> out;
    for (int r = bound; r >= 0 && out.size() < 2; --r) {
      if (r % 2 == 0 || !g.bad(q)) out.push_back(r);
    }
    return out;
  };

  Nbt out;
  out.atoms = g.atoms();
  out.degree = a.degree();
  std::map<Level, std::size_t> ids;
  std::vector<Level> levels;
  auto intern = [&](Level l) {
    auto [it, added] = ids.try_emplace(l, levels.size());
    if (added) {
      b.charge(1);
      std::string name = "{";
      for (std::size_t i = 0; i < l.ranked.size(); ++i) {
        const auto [q, r] = l.ranked[i];
        name += (i ? "," : "") + g.name(q) + (r >= 0 ? "/" + std::to_string(r) : "");
        if (std::binary_search(l.owing.begin(), l.owing.end(), q)) name += "*";
      }
      out.names.push_back(name + "}");
      out.accepting.push_back(l.owing.empty());
      out.moves.emplace_back();
      levels.push_back(std::move(l));
    }
    return it->second;
  };

  {
    const QState q0 = g.initial();
    Level l;
    l.ranked.emplace_back(q0, g.type(q0) == SetType::Univ ? allowed(q0, top_rank.at(g.part(q0))).at(0) : -1);
    out.initial = intern(std::move(l));
  }
  for (std::size_t x = 0; x < levels.size(); ++x) {
    const Level cur = levels[x];
    // nothing left to check: any son will do
    if (cur.ranked.empty()) {
      out.moves[x].push_back({0, {x}});
      continue;
    }
    const bool breakpoint = cur.owing.empty();
    std::set<std::pair<Letter, std::vector<std::size_t>>> seen;
    for (Letter sigma = 0; sigma < g.letters(); ++sigma) {
      for (unsigned n = 1; n <= a.degree(); ++n) {
        std::vector<const Dnf*> options;
        bool dead = false;
        for (const auto& [q, r] : cur.ranked) {
          options.push_back(&clauses.of(q, sigma, n));
          dead = dead || options.back()->empty();
        }
        if (dead) continue;
        std::vector<std::size_t> pick(cur.ranked.size(), 0);
        while (true) {
          // per son: state -> (rank bound, owes)
          std::vector<std::map<QState, std::pair<int, bool>>> sons(n);
          for (std::size_t i = 0; i < cur.ranked.size(); ++i) {
            const auto [q, r] = cur.ranked[i];
            const bool owes = breakpoint || std::binary_search(cur.owing.begin(), cur.owing.end(), q);
            for (Atom t : (*options[i])[pick[i]]) {
              const QState to = state_of(t);
              int bound = -1;
              if (g.type(to) == SetType::Univ) {
                bound = r >= 0 && g.part(to) == g.part(q) ? r : top_rank.at(g.part(to));
              }
              auto [it, added] = sons[dir_of(t) - 1].try_emplace(to, bound, owes);
              if (!added) {
                it->second.first = std::min(it->second.first, bound);
                it->second.second = it->second.second || owes;
              }
            }
          }
          // rank choices per son, then every combination across sons
          std::vector<std::vector<Level>> per_son(n);
          bool blocked = false;
          for (unsigned j = 0; j < n && !blocked; ++j) {
            std::vector<std::pair<QState, std::vector<int>>> choice;
            for (const auto& [q, bo] : sons[j]) {
              choice.emplace_back(q, bo.first < 0 ? std::vector<int>{-1} : allowed(q, bo.first));
              blocked = blocked || choice.back().second.empty();
            }
            if (blocked) break;
            std::vector<std::size_t> at(choice.size(), 0);
            while (true) {
              Level l;
              for (std::size_t k = 0; k < choice.size(); ++k) {
                const QState q = choice[k].first;
                const int r = choice[k].second[at[k]];
                l.ranked.emplace_back(q, r);
                if (sons[j].at(q).second && !accepting(q, r)) l.owing.push_back(q);
              }
              b.charge(1);
              per_son[j].push_back(std::move(l));
              std::size_t k = 0;
              while (k < choice.size() && ++at[k] == choice[k].second.size()) at[k++] = 0;
              if (k == choice.size()) break;
            }
          }
          if (!blocked) {
            std::vector<std::size_t> at(n, 0);
            while (true) {
              std::vector<std::size_t> targets;
              for (unsigned j = 0; j < n; ++j) targets.push_back(intern(per_son[j][at[j]]));
              if (seen.emplace(sigma, targets).second) {
                b.charge(1);
                out.moves[x].push_back({sigma, std::move(targets)});
              }
              unsigned j = 0;
              while (j < n && ++at[j] == per_son[j].size()) at[j++] = 0;
              if (j == n) break;
            }
          }
          std::size_t i = 0;
          while (i < cur.ranked.size() && ++pick[i] == options[i]->size()) pick[i++] = 0;
          if (i == cur.ranked.size()) break;
        }
      }
    }
  }
  return out;
}

NbtEmptiness nbt_emptiness(const Nbt& n) {
  ParityGame game;
  for (std::size_t x = 0; x < n.size(); ++x) game.add(Player::Automaton, n.priority(x), n.names[x]);
  const std::size_t bottom = game.add(Player::Automaton, 1, "reject");
  game.moves[bottom].push_back(bottom);
  std::vector<std::vector<std::size_t>> move_pos(n.size());
  for (std::size_t x = 0; x < n.size(); ++x) {
    if (n.moves[x].empty()) game.moves[x].push_back(bottom);
    for (const Nbt::Move& m : n.moves[x]) {
      const std::size_t v = game.add(Player::Pathfinder, 0, "move");
      game.moves[v] = m.targets;
      game.moves[x].push_back(v);
      move_pos[x].push_back(v);
    }
  }
  game.initial = n.initial;
  const ParitySolution sol = solve_parity(game);
  NbtEmptiness out;
  out.empty = sol.winner[n.initial] != Player::Automaton;
  if (out.empty) return out;

  // One LTS state per (automaton state, son index) keeps equal subtrees on
  // different sons apart.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> ids;
  std::vector<std::pair<std::size_t, std::size_t>> order;
  auto id = [&](std::size_t x, std::size_t j) {
    auto [it, added] = ids.try_emplace({x, j}, order.size());
    if (added) order.emplace_back(x, j);
    return it->second;
  };
  id(n.initial, 0);
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> labels;
  std::vector<std::vector<StateId>> succ;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto [x, j] = order[i];
    const std::size_t v = sol.strategy[x];
    const auto at = std::find(move_pos[x].begin(), move_pos[x].end(), v) - move_pos[x].begin();
    const Nbt::Move& m = n.moves[x].at(static_cast<std::size_t>(at));
    names.push_back("n" + std::to_string(x) + "_" + std::to_string(j));
    std::vector<std::string> label;
    for (std::size_t k = 0; k < n.atoms.size(); ++k) {
      if (m.letter >> k & 1u) label.push_back(n.atoms[k]);
    }
    labels.push_back(std::move(label));
    std::vector<StateId> kids;
    for (std::size_t k = 0; k < m.targets.size(); ++k) kids.push_back(id(m.targets[k], k + 1));
    succ.push_back(std::move(kids));
  }
  out.witness = Lts(n.atoms, std::move(names), std::move(labels), std::move(succ), 0);
  return out;
}

}  // namespace gradelic
