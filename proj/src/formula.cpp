#include "gradelic/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <mutex>
#include <set>
#include <unordered_map>

namespace gradelic {

struct Formula::Node {
  Op op;
  std::string atom;
  unsigned grade;
  std::vector<Formula> kids;
  std::size_t hash;
  bool state;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

struct Key {
  Op op;
  std::string atom;
  unsigned grade;
  std::vector<const void*> kids;
  friend bool operator==(const Key&, const Key&) = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    std::size_t h = std::hash<int>{}(static_cast<int>(k.op));
    h = mix(h, std::hash<std::string>{}(k.atom));
    h = mix(h, k.grade);
    for (const void* p : k.kids) h = mix(h, std::hash<const void*>{}(p));
    return h;
  }
};

struct Table {
  std::mutex mutex;
  std::unordered_map<Key, std::shared_ptr<const Formula::Node>, KeyHash> nodes;
};

Table& table() {
  static Table t;
  return t;
}

}  // namespace

Formula Formula::intern(Op op, std::string atom, unsigned grade,
                        std::vector<Formula> kids) {
  for (const auto& k : kids) {
    if (!k.valid()) throw Error("formula: null operand");
  }
  Key key{op, atom, grade, {}};
  for (const auto& k : kids) key.kids.push_back(k.raw());
  auto& t = table();
  std::lock_guard lock(t.mutex);
  if (auto it = t.nodes.find(key); it != t.nodes.end()) return Formula(it->second);

  bool state = false;
  switch (op) {
    case Op::True:
    case Op::False:
    case Op::Atom:
    case Op::Exists:
      state = true;
      break;
    case Op::Not:
    case Op::Or:
    case Op::And:
      state = std::all_of(kids.begin(), kids.end(),
                          [](const Formula& k) { return k.is_state(); });
      break;
    default:
      state = false;
  }
  auto node = std::make_shared<const Node>(
      Node{op, std::move(atom), grade, std::move(kids), KeyHash{}(key), state});
  t.nodes.emplace(std::move(key), node);
  return Formula(node);
}

Formula Formula::constant(bool value) {
  return intern(value ? Op::True : Op::False, {}, 0, {});
}
Formula Formula::atom(std::string name) {
  if (name.empty()) throw Error("formula: empty atom name");
  return intern(Op::Atom, std::move(name), 0, {});
}
Formula Formula::negation(Formula f) { return intern(Op::Not, {}, 0, {f}); }
Formula Formula::disjunction(Formula a, Formula b) {
  return intern(Op::Or, {}, 0, {a, b});
}
Formula Formula::conjunction(Formula a, Formula b) {
  return intern(Op::And, {}, 0, {a, b});
}
Formula Formula::exists(unsigned grade, Formula body) {
  return intern(Op::Exists, {}, grade, {body});
}
Formula Formula::next(Formula f) { return intern(Op::Next, {}, 0, {f}); }
Formula Formula::until(Formula a, Formula b) {
  return intern(Op::Until, {}, 0, {a, b});
}
Formula Formula::release(Formula a, Formula b) {
  return intern(Op::Release, {}, 0, {a, b});
}
Formula Formula::implies(Formula a, Formula b) {
  return disjunction(negation(a), b);
}
Formula Formula::eventually(Formula f) { return until(constant(true), f); }
Formula Formula::globally(Formula f) { return release(constant(false), f); }
Formula Formula::forall(Formula f) { return forall_but(1, f); }
Formula Formula::forall_but(unsigned g, Formula f) {
  return negation(exists(g, negation(f)));
}

Op Formula::op() const noexcept { return node_->op; }
const std::string& Formula::name() const {
  if (node_->op != Op::Atom) throw Error("formula: name() on a non-atom");
  return node_->atom;
}
unsigned Formula::grade() const {
  if (node_->op != Op::Exists) throw Error("formula: grade() on a non-quantifier");
  return node_->grade;
}
std::size_t Formula::arity() const noexcept { return node_->kids.size(); }
Formula Formula::child(std::size_t i) const { return node_->kids.at(i); }
bool Formula::is_state() const noexcept { return node_->state; }
std::size_t Formula::hash() const noexcept { return node_->hash; }

std::string to_string(const Formula& f) {
  switch (f.op()) {
    case Op::True: return "true";
    case Op::False: return "false";
    case Op::Atom: return f.name();
    case Op::Not: return "(! " + to_string(f.lhs()) + ")";
    case Op::Or: return "(" + to_string(f.lhs()) + " | " + to_string(f.rhs()) + ")";
    case Op::And: return "(" + to_string(f.lhs()) + " & " + to_string(f.rhs()) + ")";
    case Op::Exists:
      return "(E>=" + std::to_string(f.grade()) + " " + to_string(f.lhs()) + ")";
    case Op::Next: return "(X " + to_string(f.lhs()) + ")";
    case Op::Until: return "(" + to_string(f.lhs()) + " U " + to_string(f.rhs()) + ")";
    case Op::Release:
      return "(" + to_string(f.lhs()) + " R " + to_string(f.rhs()) + ")";
  }
  return {};
}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok {
  End, Ident, True, False, Not, Next, Eventually, Globally, Until, Release,
  And, Or, Implies, LParen, RParen, Exists, Forall,
};

struct Token {
  Tok kind;
  std::string text;
  unsigned grade = 0;  // quantifiers; 0 with has_grade=false means plain E/A
  bool has_grade = false;
  std::size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip();
      Token t;
      t.pos = i_;
      if (i_ >= s_.size()) {
        t.kind = Tok::End;
        out.push_back(t);
        return out;
      }
      char c = s_[i_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i_;
        while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) ||
                                 s_[j] == '_' || s_[j] == '\'' || s_[j] == '.')) {
          ++j;
        }
        t.text = std::string(s_.substr(i_, j - i_));
        i_ = j;
        if (t.text == "true") t.kind = Tok::True;
        else if (t.text == "false") t.kind = Tok::False;
        else if (t.text == "X") t.kind = Tok::Next;
        else if (t.text == "F") t.kind = Tok::Eventually;
        else if (t.text == "G") t.kind = Tok::Globally;
        else if (t.text == "U") t.kind = Tok::Until;
        else if (t.text == "R") t.kind = Tok::Release;
        else if (t.text == "E") { t.kind = Tok::Exists; grade(t, ">="); }
        else if (t.text == "A") { t.kind = Tok::Forall; grade(t, "<"); }
        else t.kind = Tok::Ident;
        out.push_back(t);
        continue;
      }
      switch (c) {
        case '!': t.kind = Tok::Not; ++i_; break;
        case '&': t.kind = Tok::And; ++i_; break;
        case '|': t.kind = Tok::Or; ++i_; break;
        case '(': t.kind = Tok::LParen; ++i_; break;
        case ')': t.kind = Tok::RParen; ++i_; break;
        case '-':
          if (i_ + 1 < s_.size() && s_[i_ + 1] == '>') {
            t.kind = Tok::Implies;
            i_ += 2;
            break;
          }
          [[fallthrough]];
        default:
          throw ParseError(std::string("unexpected character '") + c + "'", i_);
      }
      out.push_back(t);
    }
  }

 private:
  void skip() {
    while (i_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[i_]))) {
        ++i_;
      } else if (s_[i_] == '#') {
        while (i_ < s_.size() && s_[i_] != '\n') ++i_;
      } else {
        break;
      }
    }
  }

  // Optional ">=" n / "<" n suffix of a quantifier keyword.
  void grade(Token& t, std::string_view rel) {
    std::size_t save = i_;
    skip();
    if (s_.substr(i_, rel.size()) != rel) {
      i_ = save;
      return;
    }
    i_ += rel.size();
    skip();
    std::size_t start = i_;
    unsigned long long v = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      v = v * 10 + static_cast<unsigned>(s_[i_] - '0');
      if (v > 1'000'000) throw ParseError("grade too large", start);
      ++i_;
    }
    if (i_ == start) throw ParseError("expected a natural number", start);
    t.grade = static_cast<unsigned>(v);
    t.has_grade = true;
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula formula() {
    Formula f = implication();
    if (peek().kind != Tok::End) throw ParseError("unexpected token", peek().pos);
    return f;
  }

 private:
  const Token& peek() const { return toks_[k_]; }
  Token take() { return toks_[k_++]; }
  bool accept(Tok t) {
    if (peek().kind != t) return false;
    ++k_;
    return true;
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (accept(Tok::Implies)) return Formula::implies(lhs, implication());
    return lhs;
  }
  Formula disjunction() {
    Formula f = conjunction();
    while (accept(Tok::Or)) f = Formula::disjunction(f, conjunction());
    return f;
  }
  Formula conjunction() {
    Formula f = temporal();
    while (accept(Tok::And)) f = Formula::conjunction(f, temporal());
    return f;
  }
  Formula temporal() {
    Formula f = unary();
    if (accept(Tok::Until)) return Formula::until(f, temporal());
    if (accept(Tok::Release)) return Formula::release(f, temporal());
    return f;
  }
  Formula unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Not: take(); return Formula::negation(unary());
      case Tok::Next: take(); return Formula::next(unary());
      case Tok::Eventually: take(); return Formula::eventually(unary());
      case Tok::Globally: take(); return Formula::globally(unary());
      case Tok::Exists: {
        Token q = take();
        return Formula::exists(q.has_grade ? q.grade : 1, unary());
      }
      case Tok::Forall: {
        Token q = take();
        return Formula::forall_but(q.has_grade ? q.grade : 1, unary());
      }
      default: return primary();
    }
  }
  Formula primary() {
    Token t = take();
    switch (t.kind) {
      case Tok::Ident: return Formula::atom(t.text);
      case Tok::True: return Formula::constant(true);
      case Tok::False: return Formula::constant(false);
      case Tok::LParen: {
        Formula f = implication();
        if (!accept(Tok::RParen)) throw ParseError("expected ')'", peek().pos);
        return f;
      }
      case Tok::End: throw ParseError("unexpected end of input", t.pos);
      default: throw ParseError("unexpected token '" + t.text + "'", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t k_ = 0;
};

}  // namespace

Formula parse_any(std::string_view text) {
  return Parser(Lexer(text).run()).formula();
}

Formula parse(std::string_view text) {
  Formula f = parse_any(text);
  if (!f.is_state()) {
    throw ParseError("root must be a state formula (found a path formula)", 0);
  }
  return f;
}

// ---------------------------------------------------------------------------
// Metrics and subformula queries

Metrics metrics(const Formula& f) {
  Metrics m;
  m.length = 1;
  for (std::size_t i = 0; i < f.arity(); ++i) {
    Metrics c = metrics(f.child(i));
    m.length += c.length;
    m.degree = std::max(m.degree, c.degree);
  }
  if (f.op() == Op::Exists) {
    m.length += f.grade();
    m.degree = std::max(m.degree, f.grade());
  }
  return m;
}

namespace {

bool is_temporal(Op op) {
  return op == Op::Next || op == Op::Until || op == Op::Release;
}

// Path-level subformulas (not crossing quantifiers) contain no temporal op.
bool temporal_free(const Formula& f) {
  if (f.op() == Op::Exists) return true;
  if (is_temporal(f.op())) return false;
  for (std::size_t i = 0; i < f.arity(); ++i) {
    if (!temporal_free(f.child(i))) return false;
  }
  return true;
}

bool gctl_state(const Formula& f);

bool gctl_body(const Formula& b) {
  Formula t = b.op() == Op::Not ? b.lhs() : b;
  if (!is_temporal(t.op())) return gctl_state(t) && t.is_state();
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (!t.child(i).is_state() || !gctl_state(t.child(i))) return false;
  }
  return true;
}

bool gctl_state(const Formula& f) {
  switch (f.op()) {
    case Op::Exists: return gctl_body(f.lhs());
    case Op::Not:
    case Op::Or:
    case Op::And:
      for (std::size_t i = 0; i < f.arity(); ++i) {
        if (!gctl_state(f.child(i))) return false;
      }
      return true;
    default: return temporal_free(f);
  }
}

void collect_max(const Formula& f, std::vector<Formula>& out) {
  if (f.op() == Op::True || f.op() == Op::False) return;
  if (f.is_state()) {
    out.push_back(f);
    return;
  }
  for (std::size_t i = 0; i < f.arity(); ++i) collect_max(f.child(i), out);
}

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  if (f.op() == Op::Atom) out.insert(f.name());
  for (std::size_t i = 0; i < f.arity(); ++i) collect_atoms(f.child(i), out);
}

}  // namespace

bool is_gctl(const Formula& f) { return f.is_state() && gctl_state(f); }

std::vector<Formula> max_state_subformulas(const Formula& psi) {
  std::vector<Formula> found;
  collect_max(psi, found);
  std::vector<std::pair<std::string, Formula>> keyed;
  for (const auto& f : found) keyed.emplace_back(to_string(f), f);
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Formula> out;
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (i == 0 || keyed[i].first != keyed[i - 1].first) out.push_back(keyed[i].second);
  }
  return out;
}

std::vector<std::string> atoms_of(const Formula& f) {
  std::set<std::string> s;
  collect_atoms(f, s);
  return {s.begin(), s.end()};
}

}  // namespace gradelic
