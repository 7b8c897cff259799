#include <deque>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "gradelic/games.hpp"

namespace gradelic {

Ahta::Ahta(std::shared_ptr<const Ghta> a, unsigned d) : a_(std::move(a)), d_(d) {
  if (!a_) throw Error("ahta: no automaton");
  if (d_ == 0) throw Error("ahta: degree must be at least 1");
}

PosBool Ahta::transition(QState q, Letter sigma, unsigned sons) const {
  if (sons == 0 || sons > d_) throw Error("ahta: node degree outside 1.." + std::to_string(d_));
  return expand(a_->transition(q, sigma), sons, a_.get());
}

Ahta ghta_to_ahta(const Ghta& a, unsigned d) { return Ahta(std::make_shared<const Ghta>(a), d); }

std::size_t reachable_degree(const Lts& s, StateId t) {
  std::vector<char> seen(s.size(), 0);
  std::vector<StateId> work{t};
  seen[t] = 1;
  std::size_t d = 0;
  while (!work.empty()) {
    StateId x = work.back();
    work.pop_back();
    d = std::max(d, s.degree(x));
    for (StateId y : s.successors(x)) {
      if (!seen[y]) {
        seen[y] = 1;
        work.push_back(y);
      }
    }
  }
  return d;
}

namespace {

class GameBuilder {
 public:
  GameBuilder(const Ahta& a, const Lts& s, Arena arena) : a_(a), g_(a.ghta()), s_(s), arena_(arena) {
    out_.top = out_.game.add(Player::Automaton, 2, "top");
    out_.game.moves[out_.top].push_back(out_.top);
    out_.bottom = out_.game.add(Player::Automaton, 1, "bottom");
    out_.game.moves[out_.bottom].push_back(out_.bottom);
  }

  MembershipGame run(StateId root) {
    if (reachable_degree(s_, root) > a_.degree()) {
      throw Error("membership game: a node has more than " + std::to_string(a_.degree()) + " sons");
    }
    out_.game.initial = main(g_.initial(), root);
    while (!work_.empty()) {
      auto [q, t] = work_.front();
      work_.pop_front();
      const Letter sigma = g_.letter_of(s_, t);
      const PosBool f = arena_ == Arena::Expanded
                            ? a_.transition(q, sigma, static_cast<unsigned>(s_.degree(t)))
                            : g_.transition(q, sigma);
      const std::size_t root_node = formula(f, t);
      out_.game.moves[out_.main.at({q, t})].push_back(root_node);
    }
    return std::move(out_);
  }

 private:
  std::size_t main(QState q, StateId t) {
    auto [it, added] = out_.main.try_emplace({q, t}, 0);
    if (added) {
      it->second = out_.game.add(Player::Automaton, g_.priority(q), g_.name(q) + "@" + s_.name(t));
      work_.emplace_back(q, t);
    }
    return it->second;
  }

  std::size_t aux(Player who, std::string name) { return out_.game.add(who, 0, std::move(name)); }

  std::size_t formula(const PosBool& f, StateId t) {
    using K = PosBool::Kind;
    switch (f.kind()) {
      case K::True: return out_.top;
      case K::False: return out_.bottom;
      case K::Or:
      case K::And: {
        const std::size_t v = aux(f.kind() == K::Or ? Player::Automaton : Player::Pathfinder,
                                  f.kind() == K::Or ? "or" : "and");
        for (const auto& k : f.kids()) {
          const std::size_t w = formula(k, t);
          out_.game.moves[v].push_back(w);
        }
        return v;
      }
      case K::State: return main(f.states()[0], t);
      case K::Dir: return main(f.states()[0], s_.successors(t).at(f.direction() - 1));
      case K::Diamond:
      case K::Box: return distribution(f.states(), t, f.kind() == K::Diamond);
      case K::Legal:
      case K::CoLegal: {
        const QState v = f.states()[0];
        return legal(v, f.sub_letter(), 0, g_.active_mask(v), t, f.kind() == K::Legal);
      }
    }
    return out_.bottom;
  }

  // Diamond: the automaton places the states on distinct sons and the
  // pathfinder picks one placed state; Box swaps the roles.
  std::size_t distribution(const std::vector<QState>& qs, StateId t, bool diamond) {
    const auto& sons = s_.successors(t);
    if (qs.empty()) return diamond ? out_.top : out_.bottom;
    if (qs.size() > sons.size()) return diamond ? out_.bottom : out_.top;
    const Player placer = diamond ? Player::Automaton : Player::Pathfinder;
    const std::size_t v = aux(placer, diamond ? "diamond" : "box");
    std::vector<std::size_t> pick;
    std::vector<char> used(sons.size(), 0);
    auto rec = [&](auto& self) -> void {
      if (pick.size() == qs.size()) {
        const std::size_t w = aux(opponent(placer), "placement");
        for (std::size_t i = 0; i < qs.size(); ++i) {
          const std::size_t m = main(qs[i], sons[pick[i]]);
          out_.game.moves[w].push_back(m);
        }
        out_.game.moves[v].push_back(w);
        return;
      }
      for (std::size_t j = 0; j < sons.size(); ++j) {
        if (used[j]) continue;
        used[j] = 1;
        pick.push_back(j);
        self(self);
        pick.pop_back();
        used[j] = 0;
      }
    };
    rec(rec);
    return v;
  }

  // Son-by-son play of a distribution term. At son k the placer either
  // leaves the son empty or puts on it a member covering part of the
  // remaining coordinates; the other player then challenges that member
  // or lets the placement continue. Covering everything wins for the
  // placer.
  std::size_t legal(QState v, Letter sub, std::size_t k, std::uint64_t rem, StateId t, bool positive) {
    const auto& sons = s_.successors(t);
    if (k == sons.size()) return (rem == 0) == positive ? out_.top : out_.bottom;
    const auto key = std::make_tuple(v, sub, k, rem, t);
    if (auto it = legal_.find(key); it != legal_.end()) return it->second;
    const Player placer = positive ? Player::Automaton : Player::Pathfinder;
    const std::size_t node = aux(placer, "place " + std::to_string(k + 1));
    legal_.emplace(key, node);
    const std::size_t skip = legal(v, sub, k + 1, rem, t, positive);
    out_.game.moves[node].push_back(skip);
    for (const auto& [m, mask] : members(v, sub)) {
      if ((mask & ~rem) != 0) continue;
      const std::size_t c = aux(opponent(placer), "member " + std::to_string(k + 1));
      const std::size_t challenge = main(m, sons[k]);
      const std::size_t next = legal(v, sub, k + 1, rem & ~mask, t, positive);
      out_.game.moves[c] = {challenge, next};
      out_.game.moves[node].push_back(c);
    }
    return node;
  }

  const std::vector<std::pair<QState, std::uint64_t>>& members(QState v, Letter sub) {
    auto [it, added] = members_.try_emplace({v, sub});
    if (added) {
      for (QState m : g_.legal_members(v, sub)) it->second.emplace_back(m, g_.active_mask(m));
    }
    return it->second;
  }

  const Ahta& a_;
  const Ghta& g_;
  const Lts& s_;
  Arena arena_;
  MembershipGame out_;
  std::deque<std::pair<QState, StateId>> work_;
  std::map<std::tuple<QState, Letter, std::size_t, std::uint64_t, StateId>, std::size_t> legal_;
  std::map<std::pair<QState, Letter>, std::vector<std::pair<QState, std::uint64_t>>> members_;
};

}  // namespace

MembershipGame build_membership_game(const Ahta& a, const Lts& s, StateId root, Arena arena) {
  if (root >= s.size()) throw Error("membership game: root out of range");
  return GameBuilder(a, s, arena).run(root);
}

bool model_check(const Lts& s, StateId t, const Ghta& a) {
  const auto d = static_cast<unsigned>(std::max<std::size_t>(1, reachable_degree(s, t)));
  Ahta ahta(std::make_shared<const Ghta>(a), d);
  MembershipGame m = build_membership_game(ahta, s, t);
  return solve_parity(m.game).winner[m.game.initial] == Player::Automaton;
}

bool model_check(const Lts& s, StateId t, const Formula& phi) { return model_check(s, t, compile(phi)); }

std::string to_dot(const ParityGame& g) {
  std::ostringstream out;
  out << "digraph game {\n";
  for (std::size_t v = 0; v < g.size(); ++v) {
    out << "  v" << v << " [label=\"" << g.label[v] << "\\n" << g.priority[v] << "\", shape="
        << (g.owner[v] == Player::Automaton ? "ellipse" : "box") << (v == g.initial ? ", peripheries=2" : "")
        << "];\n";
  }
  for (std::size_t v = 0; v < g.size(); ++v) {
    for (std::size_t w : g.moves[v]) out << "  v" << v << " -> v" << w << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_json(const ParityGame& g) {
  nlohmann::json j;
  j["initial"] = g.initial;
  nlohmann::json ps = nlohmann::json::array();
  for (std::size_t v = 0; v < g.size(); ++v) {
    ps.push_back({{"id", v},
                  {"owner", to_string(g.owner[v])},
                  {"priority", g.priority[v]},
                  {"label", g.label[v]},
                  {"moves", g.moves[v]}});
  }
  j["positions"] = ps;
  return j.dump(2);
}

}  // namespace gradelic
