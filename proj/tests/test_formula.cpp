#include <gtest/gtest.h>

#include "gradelic/formula.hpp"
#include "gradelic/ltl.hpp"
#include "gradelic/random.hpp"

using namespace gradelic;

namespace {

Formula A(const char* n) { return Formula::atom(n); }

// Brute-force subformula scan: a state subformula is maximal when no
// strict ancestor on its path from the root is a state formula.
void collect_maximal(const Formula& f, bool under_state, std::vector<std::string>& out) {
  if (f.is_state() && !under_state) {
    if (f.op() != Op::True && f.op() != Op::False) out.push_back(to_string(f));
    return;
  }
  for (std::size_t i = 0; i < f.arity(); ++i) collect_maximal(f.child(i), under_state, out);
}

bool contains_exists(const Formula& f) {
  if (f.op() == Op::Exists) return true;
  for (std::size_t i = 0; i < f.arity(); ++i) {
    if (contains_exists(f.child(i))) return true;
  }
  return false;
}

void subformulas(const Formula& f, std::vector<Formula>& out) {
  out.push_back(f);
  for (std::size_t i = 0; i < f.arity(); ++i) subformulas(f.child(i), out);
}

}  // namespace

TEST(Parse, GradedNext) {
  EXPECT_EQ(parse("E>=2 X p"), Formula::exists(2, Formula::next(A("p"))));
}

TEST(Parse, SchedulerExampleDesugars) {
  Formula expected = Formula::exists(
      2, Formula::release(Formula::constant(false),
                          Formula::disjunction(Formula::negation(A("req")),
                                               Formula::until(A("req"), A("grant")))));
  EXPECT_EQ(parse("E>=2 G (req -> (req U grant))"), expected);
}

TEST(Parse, PathRootRejected) {
  EXPECT_THROW(parse("p U q"), ParseError);
  EXPECT_NO_THROW(parse_any("p U q"));
}

TEST(Parse, SyntaxErrorCarriesPosition) {
  try {
    parse("E>=2 X (p &");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_GE(e.position(), 10u);
  }
}

TEST(Parse, Sugar) {
  EXPECT_EQ(parse("E X p"), Formula::exists(1, Formula::next(A("p"))));
  EXPECT_EQ(parse("A X p"),
            Formula::negation(Formula::exists(1, Formula::negation(Formula::next(A("p"))))));
  EXPECT_EQ(parse("A<3 F p"),
            Formula::negation(Formula::exists(
                3, Formula::negation(Formula::until(Formula::constant(true), A("p"))))));
  EXPECT_EQ(parse("p -> q -> r"), parse("p -> (q -> r)"));
  EXPECT_EQ(parse("p | q & r"), parse("p | (q & r)"));
  EXPECT_EQ(parse("E (p U q U r)"), parse("E (p U (q U r))"));
  EXPECT_EQ(parse("E>=2 X p # comment"), parse("E>=2 X p"));
}

TEST(Metrics, Examples) {
  auto m = metrics(parse("E>=2 X p"));
  EXPECT_EQ(m.length, 5u);
  EXPECT_EQ(m.degree, 2u);
  m = metrics(parse("p"));
  EXPECT_EQ(m.length, 1u);
  EXPECT_EQ(m.degree, 0u);
  m = metrics(parse("E>=0 X p"));
  EXPECT_EQ(m.length, 3u);
  EXPECT_EQ(m.degree, 0u);
}

TEST(MaxState, WorkedExample) {
  Formula psi = parse_any("((X p) U (E>=2 X q)) | p");
  auto m = max_state_subformulas(psi);
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m[0], parse("E>=2 X q"));
  EXPECT_EQ(m[1], A("p"));
}

TEST(MaxState, StateFormulaIsItself) {
  auto m = max_state_subformulas(A("p"));
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0], A("p"));
}

TEST(MaxState, BooleanUnderNext) {
  auto m = max_state_subformulas(parse_any("X (p | q)"));
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0], parse("p | q"));
}

TEST(Project, WorkedExample) {
  auto p = ltl_project(parse_any("((X p) U (E>=2 X q)) | p"));
  // atoms sorted by rendering: a1 = E>=2 X q, a2 = p
  EXPECT_EQ(to_string(p.formula), "(((X a2) U a1) | a2)");
  EXPECT_EQ(ltl_unproject(p), parse_any("((X p) U (E>=2 X q)) | p"));
}

TEST(Project, StateFormulaIsOneAtom) {
  auto p = ltl_project(parse("E X p"));
  EXPECT_EQ(p.formula, Ltl::atom(0));
  ASSERT_EQ(p.atoms.size(), 1u);
}

TEST(Project, PureLtlKeepsShape) {
  auto p = ltl_project(parse_any("p U (X q)"));
  EXPECT_EQ(to_string(p.formula, {"p", "q"}), "(p U (X q))");
}

TEST(Properties, RandomFormulas) {
  Rng rng(11);
  FormulaShape shape;
  shape.atoms = {"p", "q", "r"};
  shape.max_length = 16;
  shape.max_grade = 3;
  for (int i = 0; i < 500; ++i) {
    Formula f = random_state_formula(rng, shape);
    ASSERT_TRUE(f.is_state());
    // round trip
    ASSERT_EQ(parse(to_string(f)), f) << to_string(f);
    auto m = metrics(f);
    EXPECT_LE(m.degree, m.length);
    // length strictly monotone under subformulas
    std::vector<Formula> subs;
    subformulas(f, subs);
    for (const auto& s : subs) {
      if (s != f) {
        EXPECT_LT(metrics(s).length, m.length);
      }
      if (s.op() == Op::Exists) {
        const Formula& body = s.lhs();
        auto proj = ltl_project(body);
        std::vector<std::string> brute;
        collect_maximal(body, false, brute);
        std::sort(brute.begin(), brute.end());
        brute.erase(std::unique(brute.begin(), brute.end()), brute.end());
        std::vector<std::string> got;
        for (const auto& a : proj.atoms) got.push_back(to_string(a));
        EXPECT_EQ(got, brute);
        for (const auto& a : proj.atoms) EXPECT_TRUE(a.is_state());
        EXPECT_EQ(ltl_unproject(proj), body);
        std::vector<std::string> names;
        for (std::size_t k = 0; k < proj.atoms.size(); ++k) names.push_back("x" + std::to_string(k));
        EXPECT_FALSE(contains_exists(ltl_to_formula(proj.formula, names)));
      }
    }
  }
}

TEST(Properties, GctlGenerator) {
  Rng rng(5);
  FormulaShape shape;
  shape.gctl_only = true;
  for (int i = 0; i < 200; ++i) {
    Formula f = random_state_formula(rng, shape);
    EXPECT_TRUE(is_gctl(f)) << to_string(f);
  }
  EXPECT_FALSE(is_gctl(parse("E (X X p)")));
  EXPECT_TRUE(is_gctl(parse("E>=2 X (E>=2 X p)")));
}
