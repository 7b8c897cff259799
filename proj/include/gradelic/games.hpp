#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gradelic/ghta.hpp"
#include "gradelic/lts.hpp"

namespace gradelic {

enum class Player : std::uint8_t { Automaton, Pathfinder };

inline constexpr Player opponent(Player p) {
  return p == Player::Automaton ? Player::Pathfinder : Player::Automaton;
}
std::string to_string(Player p);

inline constexpr std::size_t kNoMove = std::numeric_limits<std::size_t>::max();

/// Max-parity game: a play is won by the automaton when the largest
/// priority seen infinitely often is even.
struct ParityGame {
  std::vector<Player> owner;
  std::vector<unsigned> priority;
  std::vector<std::vector<std::size_t>> moves;
  std::vector<std::string> label;
  std::size_t initial = 0;

  std::size_t add(Player who, unsigned prio, std::string name = {});
  std::size_t size() const noexcept { return owner.size(); }
  /// Throws if a position has no move or a move leaves the arena.
  void validate() const;
};

struct ParitySolution {
  std::vector<Player> winner;
  /// For every position won by its owner, a move that keeps the win.
  std::vector<std::size_t> strategy;
};

/// Zielonka's recursive algorithm with positional strategies.
ParitySolution solve_parity(const ParityGame& g);

/// A graded automaton read at bounded branching: at a node with n <= d
/// sons the transition is expand_n of the graded transition.
class Ahta {
 public:
  Ahta(std::shared_ptr<const Ghta> a, unsigned d);

  const Ghta& ghta() const noexcept { return *a_; }
  unsigned degree() const noexcept { return d_; }
  PosBool transition(QState q, Letter sigma, unsigned sons) const;

 private:
  std::shared_ptr<const Ghta> a_;
  unsigned d_;
};

Ahta ghta_to_ahta(const Ghta& a, unsigned d);

struct MembershipGame {
  ParityGame game;
  std::map<std::pair<QState, StateId>, std::size_t> main;  // (state, node) -> position
  std::size_t top = 0;
  std::size_t bottom = 0;
};

enum class Arena : std::uint8_t {
  /// Distribution terms of vector states are played son by son.
  Sequential,
  /// Every transition is expanded to directions first (small inputs only).
  Expanded,
};

/// Game over (state, node) pairs of the unwinding of s from root. Throws
/// if a reachable node has more sons than the automaton's degree.
MembershipGame build_membership_game(const Ahta& a, const Lts& s, StateId root,
                                     Arena arena = Arena::Sequential);

/// Degree of the unwinding from t: the largest out-degree reachable from t.
std::size_t reachable_degree(const Lts& s, StateId t);

bool model_check(const Lts& s, StateId t, const Formula& phi);
bool model_check(const Lts& s, StateId t, const Ghta& a);

std::string to_dot(const ParityGame& g);
std::string to_json(const ParityGame& g);

}  // namespace gradelic
