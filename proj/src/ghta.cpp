#include "gradelic/ghta.hpp"

#include <algorithm>
#include <set>

#include "ghta_internal.hpp"

namespace gradelic {

std::string to_string(SetType t) {
  switch (t) {
    case SetType::Trans: return "trans";
    case SetType::Exist: return "exist";
    case SetType::Univ: return "univ";
  }
  return {};
}

Ghta::Ghta(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
  std::sort(atoms_.begin(), atoms_.end());
  atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
  if (atoms_.size() > 16) throw Error("ghta: at most 16 atoms are supported");
}

std::size_t Ghta::add_part(SetType type) {
  parts_.push_back({type, {}});
  closure_.reset();
  return parts_.size() - 1;
}

void Ghta::add_order(std::size_t lower, std::size_t upper) {
  if (lower >= parts_.size() || upper >= parts_.size()) throw Error("ghta: unknown part");
  if (lower == upper) throw Error("ghta: a part is not strictly below itself");
  parts_[upper].lower.push_back(lower);
  closure_.reset();
}

std::size_t Ghta::new_base(Base b) {
  if (b.part >= parts_.size()) throw Error("ghta: unknown part");
  bases_.push_back(std::move(b));
  return bases_.size() - 1;
}

QState Ghta::add_state(std::string name, std::size_t part, bool good, bool bad) {
  Base b;
  b.kind = BaseKind::Table;
  b.name = std::move(name);
  b.part = part;
  b.good = good;
  b.bad = bad;
  b.table.assign(letters(), PosBool::constant(false));
  return make_state(new_base(std::move(b)), false);
}

void Ghta::set_transition(QState q, Letter sigma, PosBool f) {
  if (is_negative(q)) throw Error("ghta: transitions are set on positive states");
  Base& b = bases_.at(base_of(q));
  if (b.kind != BaseKind::Table) throw Error("ghta: state has a compiled transition");
  b.table.at(sigma) = std::move(f);
}

Letter Ghta::letter_of(const Lts& s, StateId t) const {
  Letter l = 0;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (s.holds(t, atoms_[i])) l |= Letter{1} << i;
  }
  return l;
}

std::size_t Ghta::part(QState q) const { return bases_.at(base_of(q)).part * 2 + (q & 1u); }

SetType Ghta::part_type(std::size_t pp) const {
  SetType t = parts_.at(pp / 2).type;
  if (pp % 2 == 1 && t != SetType::Trans) t = t == SetType::Exist ? SetType::Univ : SetType::Exist;
  return t;
}

const std::vector<std::vector<bool>>& Ghta::closure() const {
  if (closure_) return *closure_;
  const std::size_t n = parts_.size();
  auto c = std::make_shared<std::vector<std::vector<bool>>>(n, std::vector<bool>(n, false));
  for (std::size_t p = 0; p < n; ++p) {
    std::vector<std::size_t> work = parts_[p].lower;
    while (!work.empty()) {
      std::size_t x = work.back();
      work.pop_back();
      if ((*c)[p][x]) continue;
      (*c)[p][x] = true;
      for (std::size_t y : parts_[x].lower) work.push_back(y);
    }
  }
  closure_ = c;
  return *closure_;
}

bool Ghta::below(std::size_t lower, std::size_t upper) const {
  if (lower == upper) return true;
  if (lower / 2 == upper / 2) return false;
  return closure()[upper / 2][lower / 2];
}

bool Ghta::good(QState q) const {
  const Base& b = bases_.at(base_of(q));
  return is_negative(q) ? b.bad : b.good;
}

bool Ghta::bad(QState q) const {
  const Base& b = bases_.at(base_of(q));
  return is_negative(q) ? b.good : b.bad;
}

unsigned Ghta::priority(QState q) const {
  switch (type(q)) {
    case SetType::Exist: return good(q) ? 2 : 1;
    case SetType::Univ: return bad(q) ? 1 : 0;
    case SetType::Trans: return 0;
  }
  return 0;
}

std::string Ghta::name(QState q) const {
  const std::string& n = bases_.at(base_of(q)).name;
  return is_negative(q) ? "~" + n : n;
}

PosBool Ghta::transition(QState q, Letter sigma) const {
  const Base& b = bases_.at(base_of(q));
  PosBool f;
  switch (b.kind) {
    case BaseKind::Table: f = b.table.at(sigma); break;
    case BaseKind::Const: f = PosBool::constant(b.value); break;
    case BaseKind::Atom: f = PosBool::constant((sigma >> b.atom) & 1u); break;
    case BaseKind::Or: f = PosBool::lor({transition(b.a, sigma), transition(b.b, sigma)}); break;
    case BaseKind::And: f = PosBool::land({transition(b.a, sigma), transition(b.b, sigma)}); break;
    case BaseKind::Vector: {
      const ExistsInfo& c = components_[b.component];
      const QState self = make_state(base_of(q), false);
      std::vector<PosBool> branches;
      for (Letter sub = 0; sub < (Letter{1} << c.atoms.size()); ++sub) {
        if (!detail::all_coordinates_move(c, b.coords, sub)) continue;
        std::vector<PosBool> conj{PosBool::legal(self, sub)};
        for (std::size_t i = 0; i < c.atoms.size(); ++i) {
          QState launch = (sub >> i) & 1u ? c.theta[i] : flip(c.theta[i]);
          conj.push_back(transition(launch, sigma));
        }
        branches.push_back(PosBool::land(std::move(conj)));
      }
      f = PosBool::lor(std::move(branches));
      break;
    }
  }
  return is_negative(q) ? dual(f) : f;
}

Ghta Ghta::dualize() const {
  Ghta d = *this;
  d.initial_ = flip(initial_);
  return d;
}

bool Ghta::is_vector(QState q) const { return bases_.at(base_of(q)).kind == BaseKind::Vector; }

const std::vector<std::int32_t>& Ghta::coordinates(QState q) const {
  const Base& b = bases_.at(base_of(q));
  if (b.kind != BaseKind::Vector) throw Error("ghta: not a vector state");
  return b.coords;
}

std::uint64_t Ghta::active_mask(QState q) const { return detail::mask_of(coordinates(q)); }

std::size_t Ghta::component_of(QState q) const {
  const Base& b = bases_.at(base_of(q));
  if (b.kind != BaseKind::Vector) throw Error("ghta: not a vector state");
  return b.component;
}

std::vector<QState> Ghta::legal_members(QState v, Letter sub) const {
  const ExistsInfo& c = components_.at(component_of(v));
  std::vector<QState> out;
  detail::for_each_member(c, coordinates(v), sub, [&](const std::vector<std::int32_t>& m) {
    out.push_back(make_state(c.vectors.at(m), is_negative(v)));
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<QState>> Ghta::legal_distributions(QState v, Letter sub) const {
  const ExistsInfo& c = components_.at(component_of(v));
  std::set<std::vector<QState>> found;
  detail::for_each_distribution(c, coordinates(v), sub, [&](const std::vector<std::vector<std::int32_t>>& x) {
    std::vector<QState> members;
    for (const auto& m : x) members.push_back(make_state(c.vectors.at(m), is_negative(v)));
    std::sort(members.begin(), members.end());
    found.insert(std::move(members));
  });
  std::vector<std::vector<QState>> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

namespace {
void occurring(const Ghta& a, const PosBool& f, std::vector<QState>& out) {
  using K = PosBool::Kind;
  switch (f.kind()) {
    case K::Or:
    case K::And:
      for (const auto& k : f.kids()) occurring(a, k, out);
      break;
    case K::Legal:
    case K::CoLegal: {
      auto m = a.legal_members(f.states()[0], f.sub_letter());
      out.insert(out.end(), m.begin(), m.end());
      break;
    }
    default: out.insert(out.end(), f.states().begin(), f.states().end());
  }
}
}  // namespace

std::vector<QState> Ghta::reachable_states() const {
  std::set<QState> seen{initial_};
  std::vector<QState> order{initial_};
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::vector<QState> next;
    for (Letter s = 0; s < letters(); ++s) occurring(*this, transition(order[i], s), next);
    for (QState r : next) {
      if (seen.insert(r).second) order.push_back(r);
    }
  }
  return order;
}

std::size_t Ghta::depth() const {
  std::set<std::size_t> present;
  for (QState q : reachable_states()) present.insert(part(q));
  std::vector<std::size_t> ps(present.begin(), present.end());
  // longest chain, by memoised search over the strict order
  std::map<std::size_t, std::size_t> memo;
  auto chain = [&](auto& self, std::size_t p) -> std::size_t {
    if (auto it = memo.find(p); it != memo.end()) return it->second;
    std::size_t best = 1;
    for (std::size_t r : ps) {
      if (r != p && below(r, p)) best = std::max(best, 1 + self(self, r));
    }
    memo[p] = best;
    return best;
  };
  std::size_t d = 0;
  for (std::size_t p : ps) d = std::max(d, chain(chain, p));
  return d;
}

bool operator==(const Ghta& a, const Ghta& b) {
  return a.atoms_ == b.atoms_ && a.bases_ == b.bases_ && a.parts_ == b.parts_ &&
         a.initial_ == b.initial_;
}

}  // namespace gradelic
