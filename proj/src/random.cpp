#include "gradelic/random.hpp"

#include <algorithm>
#include <limits>

namespace gradelic {

std::size_t Rng::below(std::size_t n) {
  if (n == 0) throw Error("Rng::below(0)");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return static_cast<std::size_t>(x % n);
}

namespace {

class FormulaGen {
 public:
  FormulaGen(Rng& rng, const FormulaShape& shape) : rng_(rng), shape_(shape) {}

  Formula atom() { return Formula::atom(shape_.atoms[rng_.below(shape_.atoms.size())]); }

  Formula state(std::size_t b) {
    if (b < 2 || (b < 4 && rng_.chance(30))) return atom();
    std::size_t r = rng_.below(10);
    if (r < 2) return Formula::negation(state(b - 1));
    if (r < 4 && b >= 3) {
      auto [l, rr] = split(b - 1);
      return rng_.chance(50) ? Formula::disjunction(state(l), state(rr))
                             : Formula::conjunction(state(l), state(rr));
    }
    const std::size_t body_min = shape_.gctl_only ? 2 : 1;
    if (b < body_min + 1) return atom();
    unsigned g = rng_.chance(10) ? 0u : static_cast<unsigned>(rng_.between(1, shape_.max_grade));
    if (shape_.max_grade == 0) g = 0;
    while (g > 0 && g + 1 + body_min > b) --g;
    const std::size_t rest = b - g - 1;
    return Formula::exists(g, shape_.gctl_only ? gctl_body(rest) : path(rest));
  }

  Formula path(std::size_t b) {
    if (b < 2) return atom();
    std::size_t r = rng_.below(12);
    if (r < 3) return Formula::next(path(b - 1));
    if (r < 6 && b >= 3) {
      auto [l, rr] = split(b - 1);
      return rng_.chance(50) ? Formula::until(path(l), path(rr)) : Formula::release(path(l), path(rr));
    }
    if (r < 7) return Formula::negation(path(b - 1));
    if (r < 9 && b >= 3) {
      auto [l, rr] = split(b - 1);
      return rng_.chance(50) ? Formula::disjunction(path(l), path(rr))
                             : Formula::conjunction(path(l), path(rr));
    }
    return state(b);
  }

  Formula gctl_body(std::size_t b) {
    bool negate = b >= 3 && rng_.chance(25);
    if (negate) --b;
    Formula body;
    if (b >= 3 && rng_.chance(50)) {
      auto [l, rr] = split(b - 1);
      body = rng_.chance(50) ? Formula::until(state(l), state(rr)) : Formula::release(state(l), state(rr));
    } else {
      body = Formula::next(state(b - 1));
    }
    return negate ? Formula::negation(body) : body;
  }

 private:
  std::pair<std::size_t, std::size_t> split(std::size_t total) {
    std::size_t l = rng_.between(1, total - 1);
    return {l, total - l};
  }

  Rng& rng_;
  const FormulaShape& shape_;
};

}  // namespace

Formula random_state_formula(Rng& rng, const FormulaShape& shape) {
  if (shape.atoms.empty()) throw Error("random_state_formula: no atoms");
  FormulaGen gen(rng, shape);
  return gen.state(rng.between(1, std::max<std::size_t>(1, shape.max_length)));
}

Formula random_boolean(Rng& rng, const std::vector<std::string>& atoms, std::size_t size) {
  auto leaf = [&] { return Formula::atom(atoms[rng.below(atoms.size())]); };
  if (size < 2 || rng.chance(30)) return leaf();
  if (size < 3 || rng.chance(30)) return Formula::negation(random_boolean(rng, atoms, size - 1));
  std::size_t l = rng.between(1, size - 2);
  Formula a = random_boolean(rng, atoms, l);
  Formula b = random_boolean(rng, atoms, size - 1 - l);
  return rng.chance(50) ? Formula::disjunction(a, b) : Formula::conjunction(a, b);
}

Ltl random_ltl(Rng& rng, unsigned atoms, std::size_t size) {
  if (size < 2 || rng.chance(20)) return Ltl::atom(static_cast<unsigned>(rng.below(atoms)));
  std::size_t r = rng.below(8);
  if (r < 2) return Ltl::negation(random_ltl(rng, atoms, size - 1));
  if (r < 4) return Ltl::next(random_ltl(rng, atoms, size - 1));
  if (size < 3) return Ltl::atom(static_cast<unsigned>(rng.below(atoms)));
  std::size_t l = rng.between(1, size - 2);
  Ltl a = random_ltl(rng, atoms, l);
  Ltl b = random_ltl(rng, atoms, size - 1 - l);
  switch (r) {
    case 4: return Ltl::until(a, b);
    case 5: return Ltl::release(a, b);
    case 6: return Ltl::disjunction(a, b);
    default: return Ltl::conjunction(a, b);
  }
}

namespace {
std::vector<std::string> random_label(Rng& rng, const std::vector<std::string>& atoms) {
  std::vector<std::string> l;
  for (const auto& a : atoms) {
    if (rng.chance(50)) l.push_back(a);
  }
  return l;
}
}  // namespace

Lts random_lts(Rng& rng, std::size_t states, std::size_t max_degree,
               const std::vector<std::string>& atoms) {
  if (states == 0 || max_degree == 0) throw Error("random_lts: empty bounds");
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> labels;
  std::vector<std::vector<StateId>> succ(states);
  for (std::size_t s = 0; s < states; ++s) {
    names.push_back("s" + std::to_string(s));
    labels.push_back(random_label(rng, atoms));
    std::size_t k = rng.between(1, std::min(max_degree, states));
    std::vector<StateId> pool(states);
    for (std::size_t i = 0; i < states; ++i) pool[i] = i;
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t j = i + rng.below(states - i);
      std::swap(pool[i], pool[j]);
      succ[s].push_back(pool[i]);
    }
  }
  return Lts(atoms, std::move(names), std::move(labels), std::move(succ), 0);
}

Lts random_tree(Rng& rng, std::size_t nodes, std::size_t max_degree,
                const std::vector<std::string>& atoms) {
  if (nodes == 0 || max_degree == 0) throw Error("random_tree: empty bounds");
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> labels;
  std::vector<std::vector<StateId>> succ(nodes + 1);
  for (std::size_t s = 0; s < nodes; ++s) {
    names.push_back("t" + std::to_string(s));
    labels.push_back(random_label(rng, atoms));
    if (s == 0) continue;
    std::vector<std::size_t> open;
    for (std::size_t p = 0; p < s; ++p) {
      if (succ[p].size() < max_degree) open.push_back(p);
    }
    succ[open[rng.below(open.size())]].push_back(s);
  }
  const StateId sink = nodes;
  names.push_back("end");
  labels.push_back({"end"});
  for (std::size_t s = 0; s < nodes; ++s) {
    if (succ[s].empty()) succ[s].push_back(sink);
  }
  succ[sink].push_back(sink);
  auto all = atoms;
  all.push_back("end");
  return Lts(all, std::move(names), std::move(labels), std::move(succ), 0);
}

}  // namespace gradelic
