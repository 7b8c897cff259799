#include <algorithm>
#include <deque>

#include "ghta_internal.hpp"

namespace gradelic {

class Compiler {
 public:
  explicit Compiler(Ghta& a) : a_(a) {}

  QState run(const Formula& f) {
    using Kind = Ghta::BaseKind;
    switch (f.op()) {
      case Op::True:
      case Op::False: {
        Ghta::Base b;
        b.kind = Kind::Const;
        b.value = f.op() == Op::True;
        b.name = b.value ? "true" : "false";
        return fresh(std::move(b), SetType::Trans);
      }
      case Op::Atom: {
        Ghta::Base b;
        b.kind = Kind::Atom;
        auto it = std::lower_bound(a_.atoms_.begin(), a_.atoms_.end(), f.name());
        b.atom = static_cast<unsigned>(it - a_.atoms_.begin());
        b.name = f.name();
        return fresh(std::move(b), SetType::Trans);
      }
      case Op::Not: return flip(run(f.lhs()));
      case Op::Or:
      case Op::And: {
        Ghta::Base b;
        b.kind = f.op() == Op::Or ? Kind::Or : Kind::And;
        b.a = run(f.lhs());
        b.b = run(f.rhs());
        b.name = (f.op() == Op::Or ? "or" : "and") + std::to_string(counter_++);
        const std::size_t pa = part_of(b.a), pb = part_of(b.b);
        QState q = fresh(std::move(b), SetType::Trans);
        a_.add_order(pa, part_of(q));
        a_.add_order(pb, part_of(q));
        return q;
      }
      case Op::Exists: return exists(f);
      default: throw Error("compile: path formula outside a quantifier: " + to_string(f));
    }
  }

 private:
  std::size_t part_of(QState q) const { return a_.bases_[base_of(q)].part; }

  QState fresh(Ghta::Base b, SetType type) {
    b.part = a_.add_part(type);
    return make_state(a_.new_base(std::move(b)), false);
  }

  QState exists(const Formula& f) {
    if (f.grade() == 0) {
      Ghta::Base b;
      b.kind = Ghta::BaseKind::Const;
      b.value = true;
      b.name = "E>=0#" + std::to_string(counter_++);
      return fresh(std::move(b), SetType::Trans);
    }
    const std::size_t id = counter_++;
    LtlProjection proj = ltl_project(f.lhs());
    if (proj.atoms.size() > 16) throw Error("compile: too many state subformulas under a quantifier");
    ExistsInfo info;
    info.formula = f;
    info.grade = f.grade();
    info.psi = proj.formula;
    info.atoms = proj.atoms;
    for (const Formula& t : proj.atoms) info.theta.push_back(run(t));
    const unsigned n = static_cast<unsigned>(proj.atoms.size());
    info.plus = std::make_shared<const Nbw>(build_nbw(proj.formula, n));
    info.minus = std::make_shared<const Nbw>(build_prefix_closure_nbw(Ltl::negation(proj.formula), n));

    const unsigned g = info.grade;
    std::uint64_t raw = 1;
    for (unsigned i = 0; i < 2 * g; ++i) {
      const std::uint64_t r = (i < g ? info.plus->size() : info.minus->size()) + 1;
      raw = raw > UINT64_MAX / r ? UINT64_MAX : raw * r;
    }
    info.q1_raw = raw == UINT64_MAX ? raw : raw - 1;

    const std::size_t comp = a_.components_.size();
    a_.components_.push_back(std::move(info));
    ExistsInfo& c = a_.components_.back();

    std::map<std::uint64_t, std::size_t> mask_part;
    std::deque<std::vector<std::int32_t>> queue;
    auto intern = [&](const std::vector<std::int32_t>& v) {
      if (c.vectors.count(v)) return;
      const std::uint64_t m = detail::mask_of(v);
      auto [it, added] = mask_part.try_emplace(m, 0);
      if (added) {
        it->second = a_.add_part(SetType::Exist);
        c.parts.push_back(it->second);
      }
      Ghta::Base b;
      b.kind = Ghta::BaseKind::Vector;
      b.part = it->second;
      b.component = comp;
      b.coords = v;
      b.good = good_vector(c, v);
      b.name = vector_name(c, id, v);
      c.vectors.emplace(v, a_.new_base(std::move(b)));
      queue.push_back(v);
    };
    std::vector<std::int32_t> init;
    for (unsigned i = 0; i < g; ++i) init.push_back(static_cast<std::int32_t>(c.plus->initial));
    for (unsigned i = 0; i < g; ++i) init.push_back(static_cast<std::int32_t>(c.minus->initial));
    intern(init);
    // With one path to find, the root itself may be the breakpoint; it has
    // no father whose path the negation copy could refute.
    std::vector<std::int32_t> rooted = init;
    if (g == 1) {
      rooted[1] = -1;
      intern(rooted);
    }
    while (!queue.empty()) {
      std::vector<std::int32_t> v = queue.front();
      queue.pop_front();
      for (Letter sub = 0; sub < (Letter{1} << n); ++sub) detail::for_each_member(c, v, sub, intern);
    }
    c.q1_reachable = c.vectors.size();

    for (const auto& [m, p] : mask_part) {
      for (QState t : c.theta) a_.add_order(part_of(t), p);
      for (const auto& [m2, p2] : mask_part) {
        if (m2 != m && (m2 & m) == m2) a_.add_order(p2, p);
      }
    }
    const QState start = make_state(c.vectors.at(init), false);
    if (g != 1) return start;
    Ghta::Base b;
    b.kind = Ghta::BaseKind::Or;
    b.a = start;
    b.b = make_state(c.vectors.at(rooted), false);
    b.name = "E>=1#" + std::to_string(id);
    QState q = fresh(std::move(b), SetType::Trans);
    for (const auto& [m, p] : mask_part) a_.add_order(p, part_of(q));
    return q;
  }

  // A vector with one path still obliged to satisfy psi is good when that
  // coordinate is accepting and every negation coordinate on the same path
  // has reached the sink; with no psi coordinate left, when every negation
  // coordinate is accepting. Two or more psi coordinates still share a path
  // and are never good.
  static bool good_vector(const ExistsInfo& c, const std::vector<std::int32_t>& v) {
    const std::size_t g = c.grade;
    std::size_t psi = 0, at = 0;
    for (std::size_t i = 0; i < g; ++i) {
      if (v[i] >= 0) ++psi, at = i;
    }
    if (psi > 1) return false;
    if (psi == 1 && !c.plus->accepting[static_cast<std::size_t>(v[at])]) return false;
    for (std::size_t i = g; i < 2 * g; ++i) {
      if (v[i] < 0) continue;
      const auto s = static_cast<std::size_t>(v[i]);
      if (psi == 1 ? s != c.minus->top : !c.minus->accepting[s]) return false;
    }
    return true;
  }

  static std::string vector_name(const ExistsInfo& c, std::size_t id, const std::vector<std::int32_t>& v) {
    std::string s = "E>=" + std::to_string(c.grade) + "#" + std::to_string(id) + "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      if (v[i] < 0) {
        s += "_";
      } else if (i >= c.grade && static_cast<std::size_t>(v[i]) == c.minus->top) {
        s += "T";
      } else {
        s += (i < c.grade ? "+" : "-") + std::to_string(v[i]);
      }
    }
    return s + "]";
  }

  Ghta& a_;
  std::size_t counter_ = 0;
};

Ghta compile(const Formula& phi) {
  if (!phi.valid() || !phi.is_state()) throw Error("compile: expected a state formula");
  Ghta a(atoms_of(phi));
  Compiler c(a);
  a.set_initial(c.run(phi));
  return a;
}

}  // namespace gradelic
