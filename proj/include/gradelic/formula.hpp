#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gradelic {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax or classification error while reading a formula.
class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

enum class Op : std::uint8_t {
  True,
  False,
  Atom,
  Not,
  Or,
  And,
  Exists,  // E^{>=g} over a path formula
  Next,
  Until,
  Release,
};

/// Immutable, hash-consed GCTL* formula.
///
/// Structurally identical formulas share one node, so equality is pointer
/// equality. A formula is a *state* formula when it is a constant, an atom,
/// a graded quantifier, or a Boolean combination of state formulas; every
/// other formula is a path formula.
class Formula {
 public:
  struct Node;

  Formula() = default;

  static Formula constant(bool value);
  static Formula atom(std::string name);
  static Formula negation(Formula f);
  static Formula disjunction(Formula a, Formula b);
  static Formula conjunction(Formula a, Formula b);
  static Formula exists(unsigned grade, Formula body);
  static Formula next(Formula f);
  static Formula until(Formula a, Formula b);
  static Formula release(Formula a, Formula b);

  // Sugar. These never introduce new node kinds.
  static Formula implies(Formula a, Formula b);
  static Formula eventually(Formula f);             // true U f
  static Formula globally(Formula f);               // false R f
  static Formula forall(Formula f);                 // !E>=1 !f
  static Formula forall_but(unsigned g, Formula f); // !E>=g !f

  bool valid() const noexcept { return node_ != nullptr; }
  Op op() const noexcept;
  const std::string& name() const;  // atoms only
  unsigned grade() const;           // Exists only
  std::size_t arity() const noexcept;
  Formula child(std::size_t i) const;
  Formula lhs() const { return child(0); }
  Formula rhs() const { return child(1); }
  bool is_state() const noexcept;
  bool is_path() const noexcept { return !is_state(); }
  std::size_t hash() const noexcept;

  friend bool operator==(const Formula& a, const Formula& b) noexcept {
    return a.node_ == b.node_;
  }
  friend bool operator!=(const Formula& a, const Formula& b) noexcept {
    return a.node_ != b.node_;
  }

  const Node* raw() const noexcept { return node_.get(); }

 private:
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula intern(Op op, std::string atom, unsigned grade,
                        std::vector<Formula> kids);

  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

/// Fully parenthesized canonical rendering; `parse(to_string(f)) == f`.
std::string to_string(const Formula& f);

/// Parses a GCTL* state formula. Sugar is expanded on the fly.
/// Throws ParseError on syntax errors and when the root is a path formula.
Formula parse(std::string_view text);

/// Same grammar, but the root may be a path formula.
Formula parse_any(std::string_view text);

struct Metrics {
  std::size_t length = 0;
  unsigned degree = 0;
};

/// Length with |E>=g psi| = g + 1 + |psi|; degree is the largest grade.
Metrics metrics(const Formula& f);

/// True when every temporal operator sits directly under a quantifier,
/// possibly through one negation (the GCTL fragment).
bool is_gctl(const Formula& f);

/// Maximal state subformulas of a path formula, sorted by canonical
/// rendering. Boolean constants are evaluated in place and never listed.
/// A state formula returns itself (unless it is a constant).
std::vector<Formula> max_state_subformulas(const Formula& psi);

/// Atom names occurring anywhere in f, sorted.
std::vector<std::string> atoms_of(const Formula& f);

}  // namespace gradelic
