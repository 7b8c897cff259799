#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "../src/ghta_internal.hpp"
#include "gradelic/ghta.hpp"
#include "gradelic/random.hpp"

using namespace gradelic;

namespace {

const std::vector<std::string> kCorpus = {
    "p",
    "!p | q",
    "E>=0 X p",
    "E>=1 X p",
    "E>=2 X p",
    "E>=2 (p U q)",
    "A X (p -> E>=2 X q)",
    "!E>=1 G p",
    "E>=2 G (p -> X q)",
    "E>=1 (p U E>=2 X q)",
    "A<2 F p",
};

PosBool D(unsigned d, QState q) { return PosBool::dir(d, q); }

}  // namespace

TEST(Expand, DiamondTooWideIsFalse) {
  EXPECT_EQ(expand(PosBool::diamond({0, 2}), 1), PosBool::constant(false));
}

TEST(Expand, BoxTooWideIsTrue) {
  EXPECT_EQ(expand(PosBool::box({0, 2}), 1), PosBool::constant(true));
}

TEST(Expand, SingleDiamondTwoDirections) {
  EXPECT_EQ(expand(PosBool::diamond({4}), 2), PosBool::lor({D(1, 4), D(2, 4)}));
}

TEST(Expand, PairOverTwoDirections) {
  PosBool want = PosBool::lor({PosBool::land({D(1, 0), D(2, 2)}), PosBool::land({D(2, 0), D(1, 2)})});
  EXPECT_EQ(expand(PosBool::diamond({0, 2}), 2), want);
  PosBool box = expand(PosBool::box({0, 2}), 2);
  EXPECT_EQ(box, dual(PosBool::lor({PosBool::land({D(1, 1), D(2, 3)}), PosBool::land({D(2, 1), D(1, 3)})})));
}

TEST(Expand, CountsArrangements) {
  for (unsigned d = 1; d <= 5; ++d) {
    for (std::size_t k = 1; k <= d; ++k) {
      std::vector<QState> qs;
      for (std::size_t i = 0; i < k; ++i) qs.push_back(2 * i);
      PosBool e = expand(PosBool::diamond(qs), d);
      std::size_t expect = 1;
      for (std::size_t i = 0; i < k; ++i) expect *= d - i;
      std::size_t got = e.kind() == PosBool::Kind::Or ? e.kids().size() : 1;
      EXPECT_EQ(got, expect) << "k=" << k << " d=" << d;
      EXPECT_TRUE(is_expanded(e));
    }
  }
}

TEST(Dual, Involution) {
  PosBool f = PosBool::lor({PosBool::land({PosBool::state(0), PosBool::diamond({2, 5})}),
                            PosBool::box({3}), PosBool::legal(6, 1), PosBool::constant(false),
                            D(2, 8)});
  EXPECT_EQ(dual(dual(f)), f);
  EXPECT_EQ(dual(PosBool::diamond({2})), PosBool::box({3}));
}

TEST(Dualize, InvolutionAndNegation) {
  for (const auto& text : kCorpus) {
    Formula phi = parse(text);
    Ghta a = compile(phi);
    EXPECT_EQ(a.dualize().dualize(), a) << text;
    EXPECT_EQ(compile(Formula::negation(phi)), a.dualize()) << text;
  }
}

TEST(Dualize, SwapsTypesAndAcceptance) {
  Ghta a = compile(parse("E>=2 G (p -> X q)"));
  Ghta d = a.dualize();
  for (QState q : a.reachable_states()) {
    QState r = flip(q);
    EXPECT_EQ(a.good(q), d.bad(r));
    EXPECT_EQ(a.bad(q), d.good(r));
    SetType t = a.type(q), u = d.type(r);
    if (t == SetType::Trans) {
      EXPECT_EQ(u, SetType::Trans);
    } else {
      EXPECT_NE(t, u);
    }
    for (Letter s = 0; s < a.letters(); ++s) EXPECT_EQ(d.transition(r, s), dual(a.transition(q, s)));
  }
}

TEST(Compile, AtomTransitions) {
  Ghta a = compile(parse("p"));
  EXPECT_EQ(a.transition(a.initial(), 1), PosBool::constant(true));
  EXPECT_EQ(a.transition(a.initial(), 0), PosBool::constant(false));
  EXPECT_EQ(a.type(a.initial()), SetType::Trans);
}

TEST(Compile, GradeZeroIsTrue) {
  Ghta a = compile(parse("E>=0 X p"));
  for (Letter s = 0; s < a.letters(); ++s) EXPECT_EQ(a.transition(a.initial(), s), PosBool::constant(true));
}

TEST(Compile, VectorSpaceSize) {
  for (const char* text : {"E>=1 X p", "E>=2 X p", "E>=2 (p U q)", "E>=3 X p", "E>=2 G (p -> X q)"}) {
    Ghta a = compile(parse(text));
    ASSERT_EQ(a.components().size(), 1u);
    const ExistsInfo& c = a.components()[0];
    // enumerate (Q+ u bot)^g x (Q- u bot)^g without the all-bot vector
    std::vector<std::size_t> radix;
    for (unsigned i = 0; i < c.grade; ++i) radix.push_back(c.plus->size() + 1);
    for (unsigned i = 0; i < c.grade; ++i) radix.push_back(c.minus->size() + 1);
    std::vector<std::size_t> digit(radix.size(), 0);
    std::uint64_t count = 0;
    while (true) {
      std::size_t k = 0;
      while (k < digit.size() && ++digit[k] == radix[k]) digit[k++] = 0;
      if (k == digit.size()) break;
      ++count;
    }
    EXPECT_EQ(c.q1_raw, count) << text;
    EXPECT_LE(c.q1_reachable, c.q1_raw);
  }
}

TEST(Compile, OccurrencesAreDisjoint) {
  Ghta a = compile(parse("E>=1 X p | E>=1 X p"));
  ASSERT_EQ(a.components().size(), 2u);
  std::set<std::size_t> first, second;
  for (const auto& [v, b] : a.components()[0].vectors) first.insert(b);
  for (const auto& [v, b] : a.components()[1].vectors) second.insert(b);
  for (std::size_t b : second) EXPECT_FALSE(first.count(b));
  EXPECT_NE(base_of(a.components()[0].theta[0]), base_of(a.components()[1].theta[0]));
  std::set<std::size_t> parts0(a.components()[0].parts.begin(), a.components()[0].parts.end());
  for (std::size_t p : a.components()[1].parts) EXPECT_FALSE(parts0.count(p));
}

TEST(Compile, DepthGrowsLinearlyWithNesting) {
  std::vector<std::size_t> depth;
  std::string text = "p";
  for (int k = 0; k < 6; ++k) {
    depth.push_back(compile(parse(text)).depth());
    text = "E>=1 X (" + text + ")";
  }
  for (std::size_t k = 2; k < depth.size(); ++k) {
    EXPECT_GT(depth[k], depth[k - 1]);
    EXPECT_EQ(depth[k] - depth[k - 1], depth[2] - depth[1]);
  }
}

TEST(Compile, ParityPrioritiesInRange) {
  for (const auto& text : kCorpus) {
    Ghta a = compile(parse(text));
    for (QState q : a.reachable_states()) {
      unsigned p = a.priority(q);
      switch (a.type(q)) {
        case SetType::Trans: EXPECT_EQ(p, 0u); break;
        case SetType::Exist: EXPECT_TRUE(p == 1 || p == 2); break;
        case SetType::Univ: EXPECT_TRUE(p == 0 || p == 1); break;
      }
    }
  }
}

class Hesitancy : public ::testing::TestWithParam<std::string> {};

TEST_P(Hesitancy, CompiledAutomataAreHesitant) {
  Ghta a = compile(parse(GetParam()));
  HesitancyReport r = validate_hesitancy(a, 4);
  EXPECT_TRUE(r.ok()) << (r.ok() ? "" : r.violations.front());
  EXPECT_TRUE(validate_hesitancy(a.dualize(), 4).ok());
}

INSTANTIATE_TEST_SUITE_P(Corpus, Hesitancy, ::testing::ValuesIn(kCorpus));

TEST(Hesitancy, TransientSelfReference) {
  Ghta a({"p"});
  std::size_t t = a.add_part(SetType::Trans);
  QState q = a.add_state("q", t);
  a.set_transition(q, 0, PosBool::diamond({q}));
  a.set_initial(q);
  HesitancyReport r = validate_hesitancy(a, 2);
  ASSERT_FALSE(r.ok());
  EXPECT_NE(r.violations.front().find("transient"), std::string::npos);
}

TEST(Hesitancy, TwoSamePartStatesInOneDisjunct) {
  Ghta a({"p"});
  std::size_t e = a.add_part(SetType::Exist);
  QState q = a.add_state("q", e);
  QState r = a.add_state("r", e);
  a.set_transition(q, 0, PosBool::diamond({q, r}));
  a.set_transition(r, 0, PosBool::diamond({r}));
  a.set_initial(q);
  // one son cannot host both, so degree 1 is fine
  HesitancyReport at1 = validate_hesitancy(a, 1);
  EXPECT_TRUE(at1.ok());
  HesitancyReport at2 = validate_hesitancy(a, 2);
  ASSERT_FALSE(at2.ok());
  EXPECT_NE(at2.violations.front().find("disjunct"), std::string::npos);
}

TEST(Hesitancy, OccurrenceAboveOwnPart) {
  Ghta a({"p"});
  std::size_t lo = a.add_part(SetType::Exist);
  std::size_t hi = a.add_part(SetType::Exist);
  a.add_order(lo, hi);
  QState q = a.add_state("q", lo);
  QState r = a.add_state("r", hi);
  a.set_transition(q, 0, PosBool::diamond({r}));
  a.set_transition(r, 0, PosBool::diamond({r}));
  a.set_initial(q);
  HesitancyReport rep = validate_hesitancy(a, 1);
  ASSERT_FALSE(rep.ok());
  EXPECT_NE(rep.violations.front().find("not below"), std::string::npos);
  a.set_initial(r);
  EXPECT_TRUE(validate_hesitancy(a, 3).ok());
}

TEST(Hesitancy, UniversalConjunctCounts) {
  Ghta a({"p"});
  std::size_t u = a.add_part(SetType::Univ);
  QState q = a.add_state("q", u);
  a.set_transition(q, 0, PosBool::box({q}));
  a.set_transition(q, 1, PosBool::lor({PosBool::box({q}), PosBool::box({q})}));
  a.set_initial(q);
  HesitancyReport r = validate_hesitancy(a, 2);
  ASSERT_FALSE(r.ok());
  for (const auto& v : r.violations) EXPECT_NE(v.find("letter 1"), std::string::npos);
}

namespace {

// Tiny automaton over one atom: `succ[q][letter]`, optional sink.
std::shared_ptr<const Nbw> tiny(std::vector<std::vector<std::vector<std::size_t>>> succ, bool with_top) {
  Nbw a;
  a.atoms = 1;
  a.initial = 0;
  a.delta = std::move(succ);
  a.accepting.assign(a.delta.size(), false);
  for (std::size_t i = 0; i < a.delta.size(); ++i) a.names.push_back("s" + std::to_string(i));
  if (with_top) {
    a.top = a.delta.size();
    a.delta.push_back({{a.top}, {a.top}});
    a.accepting.push_back(true);
    a.names.push_back("top");
  }
  return std::make_shared<const Nbw>(std::move(a));
}

using Vec = std::vector<std::int32_t>;
using Dist = std::vector<Vec>;

std::set<Dist> enumerate(const ExistsInfo& c, const Vec& q, Letter sub) {
  std::set<Dist> out;
  detail::for_each_distribution(c, q, sub, [&](const Dist& x) {
    Dist s = x;
    std::sort(s.begin(), s.end());
    out.insert(s);
  });
  return out;
}

// Brute force: all sets of distinct vectors, filtered by the four
// conditions.
std::set<Dist> brute(const ExistsInfo& c, const Vec& q, Letter sub) {
  const std::size_t w = q.size(), g = c.grade;
  std::vector<Vec> all;
  Vec v(w, -1);
  auto gen = [&](auto& self, std::size_t i) -> void {
    if (i == w) {
      if (std::any_of(v.begin(), v.end(), [](std::int32_t x) { return x >= 0; })) all.push_back(v);
      return;
    }
    v[i] = -1;
    self(self, i + 1);
    // a member can only hold a value some coordinate may move to
    if (q[i] < 0) return;
    for (std::size_t x : detail::automaton_for(c, i).successors(static_cast<std::size_t>(q[i]), sub)) {
      v[i] = static_cast<std::int32_t>(x);
      self(self, i + 1);
    }
  };
  gen(gen, 0);
  std::size_t active = 0;
  for (auto x : q) active += x >= 0;
  std::set<Dist> out;
  Dist cur;
  auto pick = [&](auto& self, std::size_t from) -> void {
    if (!cur.empty()) {
      bool ok = true;
      for (std::size_t i = 0; i < w && ok; ++i) {
        std::size_t holders = 0;
        for (const auto& m : cur) {
          if (m[i] < 0) continue;
          ++holders;
          // (iv) the coordinate evolves on the sub-letter
          if (q[i] < 0) {
            ok = false;
            continue;
          }
          const auto succ = detail::automaton_for(c, i).successors(static_cast<std::size_t>(q[i]), sub);
          if (std::find(succ.begin(), succ.end(), static_cast<std::size_t>(m[i])) == succ.end()) ok = false;
        }
        // (i) exactly the active coordinates, (ii) each in one member
        if (holders != (q[i] >= 0 ? 1u : 0u)) ok = false;
      }
      // (iii)
      for (const auto& m : cur) {
        std::size_t psi = 0;
        for (std::size_t i = 0; i < g; ++i) psi += m[i] >= 0;
        if (psi < 2) continue;
        for (std::size_t i = 0; i < g; ++i) {
          if (m[i] >= 0 && (m[i + g] < 0 || static_cast<std::size_t>(m[i + g]) == c.minus->top)) ok = false;
        }
      }
      if (ok) out.insert(cur);
    }
    if (cur.size() == active) return;
    for (std::size_t j = from; j < all.size(); ++j) {
      cur.push_back(all[j]);
      self(self, j + 1);
      cur.pop_back();
    }
  };
  pick(pick, 0);
  return out;
}

}  // namespace

TEST(Legal, KeepTogetherOrSplit) {
  ExistsInfo c;
  c.grade = 1;
  c.plus = tiny({{{1}, {1}}, {{1}, {1}}}, false);
  c.minus = tiny({{{1}, {1}}, {{1}, {1}}}, true);
  std::set<Dist> got = enumerate(c, {0, 0}, 0);
  std::set<Dist> want = {{{1, 1}}, {{-1, 1}, {1, -1}}};
  EXPECT_EQ(got, want);
  EXPECT_EQ(brute(c, {0, 0}, 0), want);
}

TEST(Legal, SingleActiveCoordinateGivesSingletons) {
  ExistsInfo c;
  c.grade = 1;
  c.plus = tiny({{{0, 1}, {1}}, {{1}, {0}}}, false);
  c.minus = tiny({{{1}, {1}}, {{1}, {1}}}, true);
  for (const auto& x : enumerate(c, {0, -1}, 0)) EXPECT_EQ(x.size(), 1u);
  EXPECT_EQ(enumerate(c, {0, -1}, 0).size(), 2u);
}

TEST(Legal, SinkExcludesSharedPsiMember) {
  ExistsInfo c;
  c.grade = 2;
  c.plus = tiny({{{0}, {0}}}, false);
  c.minus = tiny({{{1}, {1}}}, true);  // state 0 moves to the sink at 1
  for (const auto& x : enumerate(c, {0, 0, 0, 0}, 0)) {
    for (const auto& m : x) EXPECT_FALSE(m[0] >= 0 && m[1] >= 0);
  }
  EXPECT_EQ(enumerate(c, {0, 0, 0, 0}, 0), brute(c, {0, 0, 0, 0}, 0));
}

TEST(Legal, MatchesBruteForce) {
  Rng rng(17);
  for (int round = 0; round < 60; ++round) {
    ExistsInfo c;
    c.grade = 1 + static_cast<unsigned>(rng.below(2));
    auto random_delta = [&](std::size_t n, std::size_t targets) {
      std::vector<std::vector<std::vector<std::size_t>>> d(n, std::vector<std::vector<std::size_t>>(2));
      for (auto& row : d) {
        for (auto& s : row) {
          for (std::size_t t = 0; t < targets; ++t) {
            if (rng.chance(45)) s.push_back(t);
          }
        }
      }
      return d;
    };
    c.plus = tiny(random_delta(2, 2), false);
    c.minus = tiny(random_delta(2, 3), true);  // target 2 is the sink
    const std::size_t w = 2 * c.grade;
    Vec q(w);
    for (std::size_t i = 0; i < w; ++i) {
      const std::size_t states = detail::automaton_for(c, i).size();
      q[i] = rng.chance(25) ? -1 : static_cast<std::int32_t>(rng.below(states));
    }
    if (std::all_of(q.begin(), q.end(), [](std::int32_t x) { return x < 0; })) q[0] = 0;
    for (Letter sub = 0; sub < 2; ++sub) {
      ASSERT_EQ(enumerate(c, q, sub), brute(c, q, sub)) << "round " << round;
    }
  }
}

TEST(Legal, CompiledMembersMatchDistributions) {
  Ghta a = compile(parse("E>=2 (p U q)"));
  for (QState v : a.reachable_states()) {
    if (!a.is_vector(v)) continue;
    for (Letter sub = 0; sub < 4; ++sub) {
      std::set<QState> in;
      for (const auto& x : a.legal_distributions(v, sub)) in.insert(x.begin(), x.end());
      auto members = a.legal_members(v, sub);
      EXPECT_EQ(std::set<QState>(members.begin(), members.end()), in);
    }
  }
}
