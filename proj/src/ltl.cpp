#include "gradelic/ltl.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_map>

namespace gradelic {

struct Ltl::Node {
  Kind kind;
  unsigned index;
  std::vector<Ltl> kids;
  std::size_t id;
  unsigned atom_bound;
};

namespace {

struct LKey {
  Ltl::Kind kind;
  unsigned index;
  std::vector<const void*> kids;
  friend bool operator==(const LKey&, const LKey&) = default;
};

struct LKeyHash {
  std::size_t operator()(const LKey& k) const noexcept {
    std::size_t h = static_cast<std::size_t>(k.kind) * 1315423911u + k.index;
    for (const void* p : k.kids) {
      h ^= std::hash<const void*>{}(p) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct LTable {
  std::mutex mutex;
  std::unordered_map<LKey, std::shared_ptr<const Ltl::Node>, LKeyHash> nodes;
};

LTable& ltable() {
  static LTable t;
  return t;
}

}  // namespace

Ltl Ltl::intern(Kind k, unsigned index, std::vector<Ltl> kids) {
  LKey key{k, index, {}};
  unsigned bound = k == Kind::Atom ? index + 1 : 0;
  for (const auto& c : kids) {
    if (!c.valid()) throw Error("ltl: null operand");
    key.kids.push_back(c.node_.get());
    bound = std::max(bound, c.atom_bound());
  }
  auto& t = ltable();
  std::lock_guard lock(t.mutex);
  if (auto it = t.nodes.find(key); it != t.nodes.end()) return Ltl(it->second);
  auto node = std::make_shared<const Node>(
      Node{k, index, std::move(kids), t.nodes.size(), bound});
  t.nodes.emplace(std::move(key), node);
  return Ltl(node);
}

Ltl Ltl::constant(bool value) {
  return intern(value ? Kind::True : Kind::False, 0, {});
}
Ltl Ltl::atom(unsigned index) {
  if (index >= 32) throw Error("ltl: at most 32 atoms are supported");
  return intern(Kind::Atom, index, {});
}
Ltl Ltl::negation(Ltl f) {
  if (f.kind() == Kind::Not) return f.lhs();
  return intern(Kind::Not, 0, {f});
}
Ltl Ltl::disjunction(Ltl a, Ltl b) { return intern(Kind::Or, 0, {a, b}); }
Ltl Ltl::conjunction(Ltl a, Ltl b) { return intern(Kind::And, 0, {a, b}); }
Ltl Ltl::next(Ltl f) { return intern(Kind::Next, 0, {f}); }
Ltl Ltl::until(Ltl a, Ltl b) { return intern(Kind::Until, 0, {a, b}); }
Ltl Ltl::release(Ltl a, Ltl b) { return intern(Kind::Release, 0, {a, b}); }

Ltl::Kind Ltl::kind() const noexcept { return node_->kind; }
unsigned Ltl::index() const {
  if (node_->kind != Kind::Atom) throw Error("ltl: index() on a non-atom");
  return node_->index;
}
std::size_t Ltl::arity() const noexcept { return node_->kids.size(); }
Ltl Ltl::child(std::size_t i) const { return node_->kids.at(i); }
std::size_t Ltl::id() const noexcept { return node_->id; }
unsigned Ltl::atom_bound() const noexcept { return node_->atom_bound; }

std::string to_string(const Ltl& f, const std::vector<std::string>& names) {
  using K = Ltl::Kind;
  auto bin = [&](const char* op) {
    return "(" + to_string(f.lhs(), names) + " " + op + " " + to_string(f.rhs(), names) + ")";
  };
  switch (f.kind()) {
    case K::True: return "true";
    case K::False: return "false";
    case K::Atom:
      return f.index() < names.size() ? names[f.index()]
                                      : "a" + std::to_string(f.index() + 1);
    case K::Not: return "(! " + to_string(f.lhs(), names) + ")";
    case K::Or: return bin("|");
    case K::And: return bin("&");
    case K::Next: return "(X " + to_string(f.lhs(), names) + ")";
    case K::Until: return bin("U");
    case K::Release: return bin("R");
  }
  return {};
}

std::string to_string(const Ltl& f) { return to_string(f, {}); }

std::size_t size(const Ltl& f) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < f.arity(); ++i) n += size(f.child(i));
  return n;
}

Ltl to_infinite_nnf(const Ltl& f) {
  using K = Ltl::Kind;
  switch (f.kind()) {
    case K::True:
    case K::False:
    case K::Atom:
      return f;
    case K::Or: return Ltl::disjunction(to_infinite_nnf(f.lhs()), to_infinite_nnf(f.rhs()));
    case K::And: return Ltl::conjunction(to_infinite_nnf(f.lhs()), to_infinite_nnf(f.rhs()));
    case K::Next: return Ltl::next(to_infinite_nnf(f.lhs()));
    case K::Until: return Ltl::until(to_infinite_nnf(f.lhs()), to_infinite_nnf(f.rhs()));
    case K::Release: return Ltl::release(to_infinite_nnf(f.lhs()), to_infinite_nnf(f.rhs()));
    case K::Not: break;
  }
  Ltl g = f.lhs();
  auto neg = [](const Ltl& x) { return to_infinite_nnf(Ltl::negation(x)); };
  switch (g.kind()) {
    case K::True: return Ltl::constant(false);
    case K::False: return Ltl::constant(true);
    case K::Atom: return f;
    case K::Not: return to_infinite_nnf(g.lhs());
    case K::Or: return Ltl::conjunction(neg(g.lhs()), neg(g.rhs()));
    case K::And: return Ltl::disjunction(neg(g.lhs()), neg(g.rhs()));
    case K::Next: return Ltl::next(neg(g.lhs()));
    case K::Until: return Ltl::release(neg(g.lhs()), neg(g.rhs()));
    case K::Release: return Ltl::until(neg(g.lhs()), neg(g.rhs()));
  }
  return f;
}

namespace {

Ltl project_rec(const Formula& f, const std::vector<Formula>& atoms) {
  if (f.op() == Op::True) return Ltl::constant(true);
  if (f.op() == Op::False) return Ltl::constant(false);
  if (f.is_state()) {
    auto it = std::find(atoms.begin(), atoms.end(), f);
    return Ltl::atom(static_cast<unsigned>(it - atoms.begin()));
  }
  auto c = [&](std::size_t i) { return project_rec(f.child(i), atoms); };
  switch (f.op()) {
    case Op::Not: return Ltl::negation(c(0));
    case Op::Or: return Ltl::disjunction(c(0), c(1));
    case Op::And: return Ltl::conjunction(c(0), c(1));
    case Op::Next: return Ltl::next(c(0));
    case Op::Until: return Ltl::until(c(0), c(1));
    case Op::Release: return Ltl::release(c(0), c(1));
    default: throw Error("ltl_project: unexpected node");
  }
}

template <class Leaf>
Formula lift(const Ltl& f, const Leaf& leaf) {
  using K = Ltl::Kind;
  auto c = [&](std::size_t i) { return lift(f.child(i), leaf); };
  switch (f.kind()) {
    case K::True: return Formula::constant(true);
    case K::False: return Formula::constant(false);
    case K::Atom: return leaf(f.index());
    case K::Not: return Formula::negation(c(0));
    case K::Or: return Formula::disjunction(c(0), c(1));
    case K::And: return Formula::conjunction(c(0), c(1));
    case K::Next: return Formula::next(c(0));
    case K::Until: return Formula::until(c(0), c(1));
    case K::Release: return Formula::release(c(0), c(1));
  }
  return {};
}

Ltl from_formula(const Formula& f, const std::vector<std::string>& names) {
  auto c = [&](std::size_t i) { return from_formula(f.child(i), names); };
  switch (f.op()) {
    case Op::True: return Ltl::constant(true);
    case Op::False: return Ltl::constant(false);
    case Op::Atom: {
      auto it = std::lower_bound(names.begin(), names.end(), f.name());
      return Ltl::atom(static_cast<unsigned>(it - names.begin()));
    }
    case Op::Not: return Ltl::negation(c(0));
    case Op::Or: return Ltl::disjunction(c(0), c(1));
    case Op::And: return Ltl::conjunction(c(0), c(1));
    case Op::Next: return Ltl::next(c(0));
    case Op::Until: return Ltl::until(c(0), c(1));
    case Op::Release: return Ltl::release(c(0), c(1));
    case Op::Exists: break;
  }
  throw Error("parse_ltl: graded quantifiers are not LTL");
}

}  // namespace

LtlProjection ltl_project(const Formula& psi) {
  LtlProjection p;
  p.atoms = max_state_subformulas(psi);
  p.formula = project_rec(psi, p.atoms);
  return p;
}

Formula ltl_unproject(const LtlProjection& p) {
  return lift(p.formula, [&](unsigned i) { return p.atoms.at(i); });
}

Formula ltl_to_formula(const Ltl& f, const std::vector<std::string>& names) {
  return lift(f, [&](unsigned i) { return Formula::atom(names.at(i)); });
}

Ltl parse_ltl(std::string_view text, std::vector<std::string>* names) {
  Formula f = parse_any(text);
  std::vector<std::string> n = atoms_of(f);
  Ltl out = from_formula(f, n);
  if (names) *names = std::move(n);
  return out;
}

}  // namespace gradelic
