#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gradelic/formula.hpp"
#include "gradelic/ltl.hpp"
#include "gradelic/lts.hpp"
#include "gradelic/word_automata.hpp"

namespace gradelic {

/// Automaton states are (base, polarity) pairs packed into one integer.
/// The negative copy of a base state is the corresponding state of the
/// dual automaton, so an automaton and its dual share one pool.
using QState = std::size_t;

inline constexpr QState make_state(std::size_t base, bool negative) {
  return base * 2 + (negative ? 1 : 0);
}
inline constexpr std::size_t base_of(QState q) { return q / 2; }
inline constexpr bool is_negative(QState q) { return q % 2 == 1; }
inline constexpr QState flip(QState q) { return q ^ 1u; }

enum class SetType : std::uint8_t { Trans, Exist, Univ };
std::string to_string(SetType t);

class Ghta;

/// Positive Boolean formula over automaton states.
///
/// Leaves are plain states, direction/state pairs, distribution terms
/// Diamond(q1..qk) / Box(q1..qk), or the compact forms Legal(v, s) and
/// CoLegal(v, s) standing for the disjunction of Diamond(X) over all legal
/// distributions X of the vector state v on sub-letter s (resp. the
/// conjunction of Box(X)).
class PosBool {
 public:
  enum class Kind : std::uint8_t { True, False, Or, And, State, Dir, Diamond, Box, Legal, CoLegal };

  PosBool() : kind_(Kind::False) {}

  static PosBool constant(bool value);
  /// Flattening, constant-absorbing constructors.
  static PosBool lor(std::vector<PosBool> kids);
  static PosBool land(std::vector<PosBool> kids);
  static PosBool state(QState q);
  static PosBool dir(unsigned direction, QState q);  // directions are 1-based
  static PosBool diamond(std::vector<QState> qs);
  static PosBool box(std::vector<QState> qs);
  static PosBool legal(QState vector_state, Letter sub);
  static PosBool colegal(QState vector_state, Letter sub);

  Kind kind() const noexcept { return kind_; }
  const std::vector<PosBool>& kids() const noexcept { return kids_; }
  const std::vector<QState>& states() const noexcept { return states_; }
  unsigned direction() const noexcept { return dir_; }
  Letter sub_letter() const noexcept { return sub_; }
  bool is_constant() const noexcept { return kind_ == Kind::True || kind_ == Kind::False; }

  friend bool operator==(const PosBool&, const PosBool&) = default;

 private:
  Kind kind_;
  std::vector<PosBool> kids_;
  std::vector<QState> states_;
  unsigned dir_ = 0;
  Letter sub_ = 0;
};

/// Swaps or/and, true/false, Diamond/Box, Legal/CoLegal and flips the
/// polarity of every state mentioned.
PosBool dual(const PosBool& f);

std::string to_string(const PosBool& f, const Ghta* names = nullptr);

/// Replaces every distribution term by its expansion over directions
/// 1..d. Legal/CoLegal terms need the owning automaton.
PosBool expand(const PosBool& f, unsigned d, const Ghta* owner = nullptr);

/// True when no Diamond, Box, Legal or CoLegal term remains.
bool is_expanded(const PosBool& f);

/// Bookkeeping for one compiled E>=g psi occurrence.
struct ExistsInfo {
  Formula formula;
  unsigned grade = 0;
  Ltl psi;                       // projection of the body
  std::vector<Formula> atoms;    // max state subformulas, atom i of psi
  std::vector<QState> theta;     // initial state compiled for atoms[i]
  std::shared_ptr<const Nbw> plus;   // infinite words satisfying psi
  std::shared_ptr<const Nbw> minus;  // prefix closure of !psi, has top
  std::uint64_t q1_raw = 0;      // |(Q+ u {bot})^g x (Q- u {bot})^g| - 1, by enumeration
  std::size_t q1_reachable = 0;  // vectors reachable from the initial one
  std::vector<std::size_t> parts;  // base parts Q_I, one per reachable active set
  std::map<std::vector<std::int32_t>, std::size_t> vectors;  // coordinates -> base
};

struct HesitancyReport {
  std::vector<std::string> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Graded hesitant tree automaton.
///
/// Built either by hand (states with explicit per-letter transition tables)
/// or by `compile`. Parts are stored per base; the negative copy of a part
/// has the dual type, and the order on parts ignores polarity.
class Ghta {
 public:
  explicit Ghta(std::vector<std::string> atoms = {});

  // Hand construction.
  std::size_t add_part(SetType type);
  void add_order(std::size_t lower, std::size_t upper);  // lower strictly below upper
  QState add_state(std::string name, std::size_t part, bool good = false, bool bad = false);
  void set_transition(QState q, Letter sigma, PosBool f);  // q must be positive
  void set_initial(QState q) { initial_ = q; }

  const std::vector<std::string>& atoms() const noexcept { return atoms_; }
  std::size_t letters() const noexcept { return std::size_t{1} << atoms_.size(); }
  Letter letter_of(const Lts& s, StateId t) const;
  QState initial() const noexcept { return initial_; }
  std::size_t base_count() const noexcept { return bases_.size(); }
  std::size_t base_part_count() const noexcept { return parts_.size(); }

  /// Polarised part index: base part * 2 + polarity.
  std::size_t part(QState q) const;
  SetType part_type(std::size_t polarised_part) const;
  SetType type(QState q) const { return part_type(part(q)); }
  /// Reflexive order on polarised parts.
  bool below(std::size_t lower, std::size_t upper) const;
  bool good(QState q) const;
  bool bad(QState q) const;
  /// Max-parity priority: exist sets 2 on G else 1, univ sets 1 on B else
  /// 0, transient states 0.
  unsigned priority(QState q) const;
  std::string name(QState q) const;

  PosBool transition(QState q, Letter sigma) const;

  /// Same pool, dual initial state.
  Ghta dualize() const;

  /// States reachable from the initial state (through all letters).
  std::vector<QState> reachable_states() const;
  std::size_t state_count() const { return reachable_states().size(); }
  /// Longest strictly increasing chain of parts among reachable states.
  std::size_t depth() const;

  // Compiled structure.
  const std::vector<ExistsInfo>& components() const noexcept { return components_; }
  bool is_vector(QState q) const;
  const std::vector<std::int32_t>& coordinates(QState q) const;
  std::uint64_t active_mask(QState q) const;
  std::size_t component_of(QState q) const;
  /// Every member vector that can occur in some legal distribution of
  /// (v, sub); polarity follows v.
  std::vector<QState> legal_members(QState v, Letter sub) const;
  /// All legal distributions, each a canonically sorted member list,
  /// ordered by (size, members).
  std::vector<std::vector<QState>> legal_distributions(QState v, Letter sub) const;

  friend bool operator==(const Ghta&, const Ghta&);

 private:
  friend class Compiler;

  enum class BaseKind : std::uint8_t { Table, Const, Atom, Or, And, Vector };
  struct Base {
    BaseKind kind = BaseKind::Table;
    std::string name;
    std::size_t part = 0;
    bool good = false;
    bool bad = false;
    bool value = false;          // Const
    unsigned atom = 0;           // Atom
    QState a = 0, b = 0;         // Or / And operands (child initial states)
    std::size_t component = 0;   // Vector
    std::vector<std::int32_t> coords;  // Vector, -1 is bottom
    std::vector<PosBool> table;  // Table, indexed by letter
    friend bool operator==(const Base&, const Base&) = default;
  };
  struct Part {
    SetType type;
    std::vector<std::size_t> lower;
    friend bool operator==(const Part&, const Part&) = default;
  };

  std::size_t new_base(Base b);
  const std::vector<std::vector<bool>>& closure() const;

  std::vector<std::string> atoms_;
  std::vector<Base> bases_;
  std::vector<Part> parts_;
  std::vector<ExistsInfo> components_;
  QState initial_ = 0;
  mutable std::shared_ptr<std::vector<std::vector<bool>>> closure_;
};

/// Compiles a state formula. Every formula occurrence gets fresh states;
/// an automaton for a negated subformula is the dual of the automaton of
/// the subformula and shares its states.
Ghta compile(const Formula& phi);

/// Checks the hesitancy conditions on expand_n(delta(q, s)) for every
/// reachable q, every letter s and every n in 1..d_max.
HesitancyReport validate_hesitancy(const Ghta& a, unsigned d_max);

std::string to_json(const Ghta& a);
std::string to_dot(const Ghta& a);

}  // namespace gradelic
