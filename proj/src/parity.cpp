#include <algorithm>
#include <deque>

#include "gradelic/games.hpp"

namespace gradelic {

std::string to_string(Player p) { return p == Player::Automaton ? "automaton" : "pathfinder"; }

std::size_t ParityGame::add(Player who, unsigned prio, std::string name) {
  owner.push_back(who);
  priority.push_back(prio);
  moves.emplace_back();
  label.push_back(std::move(name));
  return owner.size() - 1;
}

void ParityGame::validate() const {
  if (initial >= size() && size() > 0) throw Error("parity game: initial position out of range");
  for (std::size_t v = 0; v < size(); ++v) {
    if (moves[v].empty()) throw Error("parity game: position " + std::to_string(v) + " has no move");
    for (std::size_t w : moves[v]) {
      if (w >= size()) throw Error("parity game: move out of range at " + std::to_string(v));
    }
  }
}

namespace {

inline Player player_of(unsigned prio) { return prio % 2 == 0 ? Player::Automaton : Player::Pathfinder; }

class Zielonka {
 public:
  explicit Zielonka(const ParityGame& g)
      : g_(g), succ_(g.moves), pred_(g.size()), strategy_(g.size(), kNoMove) {
    for (auto& s : succ_) {
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    for (std::size_t v = 0; v < g.size(); ++v) {
      for (std::size_t w : succ_[v]) pred_[w].push_back(v);
    }
  }

  ParitySolution run() {
    const std::size_t n = g_.size();
    std::vector<char> all(n, 1);
    std::vector<char> win_a(n, 0);
    solve(all, win_a);
    ParitySolution s;
    s.winner.resize(n);
    s.strategy.assign(n, kNoMove);
    for (std::size_t v = 0; v < n; ++v) {
      s.winner[v] = win_a[v] ? Player::Automaton : Player::Pathfinder;
      if (s.winner[v] == g_.owner[v]) s.strategy[v] = strategy_[v];
    }
    return s;
  }

 private:
  // Positions of `sub` from which `who` can force a visit to `target`.
  // Records attractor moves for the newly added positions of `who`.
  std::vector<char> attract(const std::vector<char>& sub, const std::vector<char>& target, Player who) {
    const std::size_t n = g_.size();
    std::vector<char> in(n, 0);
    std::vector<std::size_t> left(n, kNoMove);
    std::deque<std::size_t> work;
    for (std::size_t v = 0; v < n; ++v) {
      if (sub[v] && target[v]) {
        in[v] = 1;
        work.push_back(v);
      }
    }
    while (!work.empty()) {
      const std::size_t v = work.front();
      work.pop_front();
      for (std::size_t u : pred_[v]) {
        if (!sub[u] || in[u]) continue;
        if (g_.owner[u] == who) {
          strategy_[u] = v;
        } else {
          if (left[u] == kNoMove) {
            left[u] = 0;
            for (std::size_t w : succ_[u]) left[u] += sub[w] ? 1 : 0;
          }
          if (--left[u] > 0) continue;
        }
        in[u] = 1;
        work.push_back(u);
      }
    }
    return in;
  }

  // Solves the subgame `sub` (a trap for both players' escapes), marking
  // the automaton's winning positions in `win_a`.
  void solve(std::vector<char> sub, std::vector<char>& win_a) {
    const std::size_t n = g_.size();
    while (true) {
      unsigned top = 0;
      bool any = false;
      for (std::size_t v = 0; v < n; ++v) {
        if (sub[v]) {
          top = any ? std::max(top, g_.priority[v]) : g_.priority[v];
          any = true;
        }
      }
      if (!any) return;
      const Player me = player_of(top);
      std::vector<char> heads(n, 0);
      for (std::size_t v = 0; v < n; ++v) heads[v] = sub[v] && g_.priority[v] == top;
      // top-priority positions of mine stay inside the subgame
      for (std::size_t v = 0; v < n; ++v) {
        if (!heads[v] || g_.owner[v] != me) continue;
        for (std::size_t w : succ_[v]) {
          if (sub[w]) {
            strategy_[v] = w;
            break;
          }
        }
      }
      std::vector<char> a = attract(sub, heads, me);
      std::vector<char> rest(n, 0);
      for (std::size_t v = 0; v < n; ++v) rest[v] = sub[v] && !a[v];
      std::vector<char> rest_a(n, 0);
      solve(rest, rest_a);
      std::vector<char> theirs(n, 0);
      bool opp_wins = false;
      for (std::size_t v = 0; v < n; ++v) {
        const bool auto_wins = rest_a[v];
        theirs[v] = rest[v] && (me == Player::Automaton ? !auto_wins : auto_wins);
        opp_wins = opp_wins || theirs[v];
      }
      if (!opp_wins) {
        if (me == Player::Automaton) {
          for (std::size_t v = 0; v < n; ++v) win_a[v] = win_a[v] || sub[v];
        }
        return;
      }
      std::vector<char> b = attract(sub, theirs, opponent(me));
      for (std::size_t v = 0; v < n; ++v) {
        if (!b[v]) continue;
        if (me == Player::Pathfinder) win_a[v] = 1;
        sub[v] = 0;
      }
    }
  }

  const ParityGame& g_;
  std::vector<std::vector<std::size_t>> succ_;
  std::vector<std::vector<std::size_t>> pred_;
  std::vector<std::size_t> strategy_;
};

}  // namespace

ParitySolution solve_parity(const ParityGame& g) {
  g.validate();
  return Zielonka(g).run();
}

}  // namespace gradelic
