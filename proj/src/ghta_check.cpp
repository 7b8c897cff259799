#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "gradelic/ghta.hpp"

namespace gradelic {

namespace {

std::uint64_t arrangements(std::size_t k, unsigned n) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < k; ++i) r *= n - i;
  return r;
}

// Largest number of same-part occurrences in one disjunct (dnf) or one
// conjunct (cnf) of expand_n(f), computed without expanding.
std::uint64_t same_part(const Ghta& a, const PosBool& f, unsigned n, std::size_t part, bool dnf) {
  using K = PosBool::Kind;
  auto leaves = [&](const std::vector<QState>& qs) {
    std::uint64_t s = 0;
    for (QState q : qs) s += a.part(q) == part;
    return s;
  };
  // Diamond(X) is an or of ands, Box(X) an and of ors.
  auto term = [&](const std::vector<QState>& qs, bool diamond) -> std::uint64_t {
    if (qs.size() > n) return 0;
    const std::uint64_t s = leaves(qs);
    if (s == 0) return 0;
    return diamond == dnf ? s : arrangements(qs.size(), n);
  };
  switch (f.kind()) {
    case K::True:
    case K::False: return 0;
    case K::Or:
    case K::And: {
      const bool sum = (f.kind() == K::And) == dnf;
      std::uint64_t r = 0;
      for (const auto& k : f.kids()) {
        std::uint64_t c = same_part(a, k, n, part, dnf);
        r = sum ? r + c : std::max(r, c);
      }
      return r;
    }
    case K::State:
    case K::Dir: return leaves(f.states());
    case K::Diamond: return term(f.states(), true);
    case K::Box: return term(f.states(), false);
    case K::Legal:
    case K::CoLegal: {
      const bool legal = f.kind() == K::Legal;
      const bool sum = legal != dnf;
      std::uint64_t r = 0;
      for (const auto& x : a.legal_distributions(f.states()[0], f.sub_letter())) {
        std::uint64_t c = term(x, legal);
        r = sum ? r + c : std::max(r, c);
      }
      return r;
    }
  }
  return 0;
}

void occurring(const Ghta& a, const PosBool& f, unsigned n, std::set<QState>& out) {
  using K = PosBool::Kind;
  switch (f.kind()) {
    case K::Or:
    case K::And:
      for (const auto& k : f.kids()) occurring(a, k, n, out);
      break;
    case K::Diamond:
    case K::Box:
      if (f.states().size() <= n) out.insert(f.states().begin(), f.states().end());
      break;
    case K::Legal:
    case K::CoLegal:
      for (const auto& x : a.legal_distributions(f.states()[0], f.sub_letter())) {
        if (x.size() <= n) out.insert(x.begin(), x.end());
      }
      break;
    default: out.insert(f.states().begin(), f.states().end());
  }
}

}  // namespace

HesitancyReport validate_hesitancy(const Ghta& a, unsigned d_max) {
  HesitancyReport rep;
  for (QState q : a.reachable_states()) {
    const std::size_t p = a.part(q);
    const SetType t = a.type(q);
    for (Letter s = 0; s < a.letters(); ++s) {
      const PosBool f = a.transition(q, s);
      for (unsigned n = 1; n <= d_max; ++n) {
        const std::string where = a.name(q) + " on letter " + std::to_string(s) + " at degree " +
                                  std::to_string(n);
        std::set<QState> occ;
        occurring(a, f, n, occ);
        for (QState r : occ) {
          if (!a.below(a.part(r), p)) rep.violations.push_back(where + ": " + a.name(r) + " is not below");
          if (t == SetType::Trans && a.part(r) == p) {
            rep.violations.push_back(where + ": transient part reaches itself through " + a.name(r));
          }
        }
        if (t != SetType::Trans && same_part(a, f, n, p, t == SetType::Exist) > 1) {
          rep.violations.push_back(where + ": more than one same-part state in a " +
                                   (t == SetType::Exist ? "disjunct" : "conjunct"));
        }
      }
    }
  }
  return rep;
}

std::string to_json(const Ghta& a) {
  using nlohmann::json;
  json j;
  j["atoms"] = a.atoms();
  j["initial"] = a.name(a.initial());
  const auto reach = a.reachable_states();
  const bool with_delta = reach.size() * a.letters() <= 2000;
  json states = json::array();
  std::set<std::size_t> parts;
  for (QState q : reach) {
    json s{{"id", q},
           {"name", a.name(q)},
           {"part", a.part(q)},
           {"type", to_string(a.type(q))},
           {"good", a.good(q)},
           {"bad", a.bad(q)},
           {"priority", a.priority(q)}};
    if (with_delta) {
      json d = json::object();
      for (Letter l = 0; l < a.letters(); ++l) d[std::to_string(l)] = to_string(a.transition(q, l), &a);
      s["delta"] = d;
    }
    states.push_back(s);
    parts.insert(a.part(q));
  }
  j["states"] = states;
  json ps = json::array();
  for (std::size_t p : parts) {
    json below = json::array();
    for (std::size_t r : parts) {
      if (r != p && a.below(r, p)) below.push_back(r);
    }
    ps.push_back({{"part", p}, {"type", to_string(a.part_type(p))}, {"above", below}});
  }
  j["parts"] = ps;
  json comps = json::array();
  for (const auto& c : a.components()) {
    comps.push_back({{"formula", to_string(c.formula)},
                     {"grade", c.grade},
                     {"psi_automaton_states", c.plus->size()},
                     {"negation_automaton_states", c.minus->size()},
                     {"vectors_raw", c.q1_raw},
                     {"vectors_reachable", c.q1_reachable}});
  }
  j["components"] = comps;
  j["depth"] = a.depth();
  return j.dump(2);
}

std::string to_dot(const Ghta& a) {
  std::ostringstream out;
  out << "digraph ghta {\n  rankdir=LR;\n";
  const auto reach = a.reachable_states();
  for (QState q : reach) {
    out << "  n" << q << " [label=\"" << a.name(q) << "\\n" << to_string(a.type(q)) << " "
        << a.part(q) << " pri " << a.priority(q) << "\"" << (q == a.initial() ? ", shape=doublecircle" : "")
        << "];\n";
  }
  for (QState q : reach) {
    std::set<QState> succ;
    for (Letter l = 0; l < a.letters(); ++l) {
      const PosBool f = a.transition(q, l);
      std::set<QState> occ;
      occurring(a, f, 64, occ);
      succ.insert(occ.begin(), occ.end());
    }
    for (QState r : succ) out << "  n" << q << " -> n" << r << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace gradelic
