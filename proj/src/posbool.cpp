#include <algorithm>
#include <numeric>

#include "gradelic/ghta.hpp"

namespace gradelic {

PosBool PosBool::constant(bool value) {
  PosBool p;
  p.kind_ = value ? Kind::True : Kind::False;
  return p;
}

namespace {
PosBool junction(PosBool::Kind kind, std::vector<PosBool> kids) {
  using K = PosBool::Kind;
  const K unit = kind == K::Or ? K::False : K::True;
  const K zero = kind == K::Or ? K::True : K::False;
  std::vector<PosBool> flat;
  for (auto& k : kids) {
    if (k.kind() == zero) return PosBool::constant(zero == K::True);
    if (k.kind() == unit) continue;
    if (k.kind() == kind) {
      for (const auto& g : k.kids()) flat.push_back(g);
    } else {
      flat.push_back(std::move(k));
    }
  }
  if (flat.empty()) return PosBool::constant(unit == K::True);
  if (flat.size() == 1) return std::move(flat.front());
  return kind == K::Or ? PosBool::lor(std::move(flat)) : PosBool::land(std::move(flat));
}
}  // namespace

PosBool PosBool::lor(std::vector<PosBool> kids) {
  bool simple = kids.size() >= 2 && std::none_of(kids.begin(), kids.end(), [](const PosBool& k) {
    return k.is_constant() || k.kind() == Kind::Or;
  });
  if (!simple) return junction(Kind::Or, std::move(kids));
  PosBool p;
  p.kind_ = Kind::Or;
  p.kids_ = std::move(kids);
  return p;
}

PosBool PosBool::land(std::vector<PosBool> kids) {
  bool simple = kids.size() >= 2 && std::none_of(kids.begin(), kids.end(), [](const PosBool& k) {
    return k.is_constant() || k.kind() == Kind::And;
  });
  if (!simple) return junction(Kind::And, std::move(kids));
  PosBool p;
  p.kind_ = Kind::And;
  p.kids_ = std::move(kids);
  return p;
}

PosBool PosBool::state(QState q) {
  PosBool p;
  p.kind_ = Kind::State;
  p.states_ = {q};
  return p;
}

PosBool PosBool::dir(unsigned direction, QState q) {
  if (direction == 0) throw Error("directions are 1-based");
  PosBool p;
  p.kind_ = Kind::Dir;
  p.dir_ = direction;
  p.states_ = {q};
  return p;
}

PosBool PosBool::diamond(std::vector<QState> qs) {
  PosBool p;
  p.kind_ = Kind::Diamond;
  p.states_ = std::move(qs);
  return p;
}

PosBool PosBool::box(std::vector<QState> qs) {
  PosBool p;
  p.kind_ = Kind::Box;
  p.states_ = std::move(qs);
  return p;
}

PosBool PosBool::legal(QState v, Letter sub) {
  PosBool p;
  p.kind_ = Kind::Legal;
  p.states_ = {v};
  p.sub_ = sub;
  return p;
}

PosBool PosBool::colegal(QState v, Letter sub) {
  PosBool p = legal(v, sub);
  p.kind_ = Kind::CoLegal;
  return p;
}

PosBool dual(const PosBool& f) {
  using K = PosBool::Kind;
  std::vector<QState> flipped;
  for (QState q : f.states()) flipped.push_back(flip(q));
  switch (f.kind()) {
    case K::True: return PosBool::constant(false);
    case K::False: return PosBool::constant(true);
    case K::Or:
    case K::And: {
      std::vector<PosBool> kids;
      for (const auto& k : f.kids()) kids.push_back(dual(k));
      return f.kind() == K::Or ? PosBool::land(std::move(kids)) : PosBool::lor(std::move(kids));
    }
    case K::State: return PosBool::state(flipped[0]);
    case K::Dir: return PosBool::dir(f.direction(), flipped[0]);
    case K::Diamond: return PosBool::box(flipped);
    case K::Box: return PosBool::diamond(flipped);
    case K::Legal: return PosBool::colegal(flipped[0], f.sub_letter());
    case K::CoLegal: return PosBool::legal(flipped[0], f.sub_letter());
  }
  return f;
}

std::string to_string(const PosBool& f, const Ghta* names) {
  using K = PosBool::Kind;
  auto nm = [&](QState q) {
    if (names) return names->name(q);
    return std::string(is_negative(q) ? "~q" : "q") + std::to_string(base_of(q));
  };
  auto list = [&](const std::vector<QState>& qs) {
    std::string s = "(";
    for (std::size_t i = 0; i < qs.size(); ++i) s += (i ? ", " : "") + nm(qs[i]);
    return s + ")";
  };
  switch (f.kind()) {
    case K::True: return "true";
    case K::False: return "false";
    case K::Or:
    case K::And: {
      std::string s = "(";
      for (std::size_t i = 0; i < f.kids().size(); ++i) {
        if (i) s += f.kind() == K::Or ? " | " : " & ";
        s += to_string(f.kids()[i], names);
      }
      return s + ")";
    }
    case K::State: return nm(f.states()[0]);
    case K::Dir: return "(" + std::to_string(f.direction()) + ", " + nm(f.states()[0]) + ")";
    case K::Diamond: return "<>" + list(f.states());
    case K::Box: return "[]" + list(f.states());
    case K::Legal: return "Legal(" + nm(f.states()[0]) + ", " + std::to_string(f.sub_letter()) + ")";
    case K::CoLegal:
      return "CoLegal(" + nm(f.states()[0]) + ", " + std::to_string(f.sub_letter()) + ")";
  }
  return {};
}

namespace {

// Ordered k-tuples of distinct directions in 1..d, lexicographic.
std::vector<std::vector<unsigned>> injections(std::size_t k, unsigned d) {
  std::vector<std::vector<unsigned>> out;
  if (k > d) return out;
  std::vector<unsigned> cur;
  std::vector<bool> used(d + 1, false);
  auto rec = [&](auto& self) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (unsigned s = 1; s <= d; ++s) {
      if (used[s]) continue;
      used[s] = true;
      cur.push_back(s);
      self(self);
      cur.pop_back();
      used[s] = false;
    }
  };
  rec(rec);
  return out;
}

PosBool expand_distribution(const std::vector<QState>& qs, unsigned d, bool diamond) {
  if (qs.size() > d) return PosBool::constant(!diamond);
  std::vector<PosBool> outer;
  for (const auto& tuple : injections(qs.size(), d)) {
    std::vector<PosBool> inner;
    for (std::size_t i = 0; i < qs.size(); ++i) inner.push_back(PosBool::dir(tuple[i], qs[i]));
    outer.push_back(diamond ? PosBool::land(std::move(inner)) : PosBool::lor(std::move(inner)));
  }
  return diamond ? PosBool::lor(std::move(outer)) : PosBool::land(std::move(outer));
}

}  // namespace

PosBool expand(const PosBool& f, unsigned d, const Ghta* owner) {
  using K = PosBool::Kind;
  switch (f.kind()) {
    case K::Or:
    case K::And: {
      std::vector<PosBool> kids;
      for (const auto& k : f.kids()) kids.push_back(expand(k, d, owner));
      return f.kind() == K::Or ? PosBool::lor(std::move(kids)) : PosBool::land(std::move(kids));
    }
    case K::Diamond: return expand_distribution(f.states(), d, true);
    case K::Box: return expand_distribution(f.states(), d, false);
    case K::Legal:
    case K::CoLegal: {
      if (!owner) throw Error("expand: distribution term without its automaton");
      const bool legal = f.kind() == K::Legal;
      std::vector<PosBool> parts;
      for (const auto& x : owner->legal_distributions(f.states()[0], f.sub_letter())) {
        parts.push_back(expand_distribution(x, d, legal));
      }
      return legal ? PosBool::lor(std::move(parts)) : PosBool::land(std::move(parts));
    }
    default: return f;
  }
}

bool is_expanded(const PosBool& f) {
  using K = PosBool::Kind;
  switch (f.kind()) {
    case K::Diamond:
    case K::Box:
    case K::Legal:
    case K::CoLegal:
      return false;
    case K::Or:
    case K::And:
      return std::all_of(f.kids().begin(), f.kids().end(), [](const PosBool& k) { return is_expanded(k); });
    default: return true;
  }
}

}  // namespace gradelic
