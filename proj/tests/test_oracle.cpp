#include <gtest/gtest.h>

#include "gradelic/games.hpp"
#include "gradelic/oracle.hpp"
#include "gradelic/random.hpp"

using namespace gradelic;

namespace {

Lts sons_tree(std::size_t with_p, std::size_t without_p) {
  LtsBuilder b;
  b.atoms({"p"}).state("r");
  for (std::size_t i = 0; i < with_p + without_p; ++i) {
    const std::string id = "s" + std::to_string(i);
    b.state(id, i < with_p ? std::vector<std::string>{"p"} : std::vector<std::string>{});
    b.edge("r", id).edge(id, "tail");
  }
  b.state("tail").edge("tail", "tail").initial("r");
  return b.build();
}

}  // namespace

TEST(CountX, SonsTrees) {
  const Formula p = parse("p");
  EXPECT_FALSE(count_x_successors(sons_tree(1, 1), 0, p, 2));
  EXPECT_TRUE(count_x_successors(sons_tree(2, 0), 0, p, 2));
  EXPECT_TRUE(count_x_successors(sons_tree(0, 2), 0, p, 0));
  EXPECT_FALSE(count_x_successors(sons_tree(0, 2), 0, p, 1));
}

TEST(CountX, MatchesModelCheck) {
  Rng rng(17);
  FormulaShape shape;
  shape.max_grade = 1;
  shape.max_length = 8;
  for (int round = 0; round < 120; ++round) {
    Lts t = random_tree(rng, 5, 3, {"p", "q"});
    Formula phi = round % 2 ? random_boolean(rng, {"p", "q"}, 5) : random_state_formula(rng, shape);
    const unsigned n = static_cast<unsigned>(rng.below(4));
    Formula f = Formula::exists(n, Formula::next(phi));
    ASSERT_EQ(count_x_successors(t, t.initial(), phi, n), model_check(t, t.initial(), f)) << to_string(f);
  }
}

TEST(CtlStar, Examples) {
  Lts loop = LtsBuilder().atoms({"p", "q"}).state("s", {"p"}).edge("s", "s").build();
  EXPECT_TRUE(ctlstar_reference_check(loop, 0, parse("E>=1 G p")));
  EXPECT_FALSE(ctlstar_reference_check(loop, 0, parse("E>=1 F q")));
  EXPECT_TRUE(ctlstar_reference_check(loop, 0, parse("E>=0 F q")));
  EXPECT_THROW(ctlstar_reference_check(loop, 0, parse("E>=2 F p")), Error);
}

TEST(CtlStar, MatchesModelCheck) {
  Rng rng(23);
  FormulaShape shape;
  shape.max_grade = 1;
  for (int round = 0; round < 200; ++round) {
    Lts s = random_lts(rng, rng.between(1, 5), 2, {"p", "q"});
    Formula f = random_state_formula(rng, shape);
    ASSERT_EQ(ctlstar_reference_check(s, s.initial(), f), model_check(s, s.initial(), f)) << to_string(f);
  }
}

TEST(Breakpoints, SonsTrees) {
  const Formula xp = parse_any("X p");
  BreakpointResult two = breakpoint_search(sons_tree(2, 0), 0, xp, 2, 2, 3);
  ASSERT_EQ(two.verdict, BreakpointVerdict::Confirmed);
  EXPECT_TRUE(validate_certificate(sons_tree(2, 0), 0, xp, 2, two.certificate));
  for (std::size_t bound = 1; bound <= 4; ++bound) {
    EXPECT_EQ(breakpoint_search(sons_tree(1, 1), 0, xp, 2, bound, bound).verdict, BreakpointVerdict::Unknown);
  }
  EXPECT_EQ(breakpoint_search(sons_tree(0, 1), 0, xp, 0, 1, 1).verdict, BreakpointVerdict::Confirmed);
}

TEST(Breakpoints, LoopCountsOnce) {
  Lts loop = LtsBuilder().state("s", {"p"}).edge("s", "s").build();
  const Formula fp = parse_any("F p");
  EXPECT_EQ(breakpoint_search(loop, 0, fp, 1, 3, 3).verdict, BreakpointVerdict::Confirmed);
  EXPECT_EQ(breakpoint_search(loop, 0, fp, 2, 3, 3).verdict, BreakpointVerdict::Unknown);
}

TEST(Breakpoints, TamperedCertificatesFail) {
  Lts t = sons_tree(2, 0);
  const Formula xp = parse_any("X p");
  BreakpointCertificate c = breakpoint_search(t, 0, xp, 2, 2, 3).certificate;
  ASSERT_TRUE(validate_certificate(t, 0, xp, 2, c));
  BreakpointCertificate same = c;
  same.points[1] = same.points[0];
  EXPECT_FALSE(validate_certificate(t, 0, xp, 2, same));
  EXPECT_FALSE(validate_certificate(t, 0, xp, 1, c));
  EXPECT_FALSE(validate_certificate(sons_tree(1, 1), 0, xp, 2, c));
}

TEST(Breakpoints, SoundAgainstModelCheck) {
  Rng rng(41);
  std::size_t confirmed = 0;
  for (int round = 0; round < 150; ++round) {
    Lts s = random_lts(rng, rng.between(1, 4), 3, {"p", "q"});
    Formula psi = ltl_to_formula(random_ltl(rng, 2, 5), {"p", "q"});
    const unsigned g = static_cast<unsigned>(rng.between(1, 3));
    BreakpointResult r = breakpoint_search(s, s.initial(), psi, g, 3, 3);
    if (r.verdict != BreakpointVerdict::Confirmed) continue;
    ++confirmed;
    ASSERT_TRUE(validate_certificate(s, s.initial(), psi, g, r.certificate)) << to_string(psi);
    ASSERT_TRUE(model_check(s, s.initial(), Formula::exists(g, psi))) << "E>=" << g << " " << to_string(psi);
  }
  EXPECT_GE(confirmed, 20u);
}
