#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gradelic/formula.hpp"

namespace gradelic {

/// A letter over at most 32 opaque atoms: bit i set means atom i holds.
using Letter = std::uint32_t;

/// Hash-consed LTL formula over opaque atom indices. No graded quantifier
/// can be represented.
class Ltl {
 public:
  enum class Kind : std::uint8_t {
    True, False, Atom, Not, Or, And, Next, Until, Release
  };
  struct Node;

  Ltl() = default;

  static Ltl constant(bool value);
  static Ltl atom(unsigned index);
  /// Negation with double negations collapsed.
  static Ltl negation(Ltl f);
  static Ltl disjunction(Ltl a, Ltl b);
  static Ltl conjunction(Ltl a, Ltl b);
  static Ltl next(Ltl f);
  static Ltl until(Ltl a, Ltl b);
  static Ltl release(Ltl a, Ltl b);

  bool valid() const noexcept { return node_ != nullptr; }
  Kind kind() const noexcept;
  unsigned index() const;  // atoms only
  std::size_t arity() const noexcept;
  Ltl child(std::size_t i) const;
  Ltl lhs() const { return child(0); }
  Ltl rhs() const { return child(1); }
  /// Dense id, stable for the process lifetime; usable as a map key.
  std::size_t id() const noexcept;
  /// One more than the largest atom index used (0 for constant formulas).
  unsigned atom_bound() const noexcept;

  friend bool operator==(const Ltl& a, const Ltl& b) noexcept {
    return a.node_ == b.node_;
  }
  friend bool operator!=(const Ltl& a, const Ltl& b) noexcept {
    return a.node_ != b.node_;
  }

 private:
  explicit Ltl(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Ltl intern(Kind k, unsigned index, std::vector<Ltl> kids);

  std::shared_ptr<const Node> node_;
};

/// Renders with atoms printed as a1, a2, ... (1-based).
std::string to_string(const Ltl& f);

/// Same, but atoms printed with the supplied names.
std::string to_string(const Ltl& f, const std::vector<std::string>& names);

/// Negation normal form: negations pushed down to atoms, using the dual
/// pairs U/R and X/X. Valid on infinite words only (X is not self-dual on
/// finite words).
Ltl to_infinite_nnf(const Ltl& f);

/// Number of nodes in the syntax tree.
std::size_t size(const Ltl& f);

/// A path formula seen as LTL over its maximal state subformulas.
struct LtlProjection {
  Ltl formula;
  std::vector<Formula> atoms;  // atom i of `formula` stands for atoms[i]
};

/// Replaces each maximal state subformula by an opaque atom and keeps the
/// temporal/Boolean skeleton.
LtlProjection ltl_project(const Formula& psi);

/// Substitutes the atoms back; inverse of ltl_project up to identity.
Formula ltl_unproject(const LtlProjection& p);

/// Converts an LTL formula to a GCTL* path formula over atoms named by
/// `names` (used to build test corpora).
Formula ltl_to_formula(const Ltl& f, const std::vector<std::string>& names);

/// Parses a pure LTL formula; atom names are assigned indices in sorted
/// order and returned in `names`.
Ltl parse_ltl(std::string_view text, std::vector<std::string>* names);

}  // namespace gradelic
