// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gradelic/cli.hpp"
#include "gradelic/ghta.hpp"
#include "gradelic/oracle.hpp"
#include "gradelic/satisfiability.hpp"
#include "support.hpp"

using namespace gradelic;

namespace {

constexpr std::uint64_t kSeed = 7;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string model(const std::string& name) { return std::string(GRADELIC_SOURCE_DIR) + "/models/" + name; }

std::string nested(const std::string& prefix, int k) {
  std::string text = "p";
  for (int i = 0; i < k; ++i) text = prefix + " (" + text + ")";
  return text;
}

Outcome sons_trees() {
  std::ostringstream out2, out1, err;
  const int two = run_cli({"check", model("two_p_sons.json"), "E>=2 X p"}, out2, err);
  const int one = run_cli({"check", model("one_p_son.json"), "E>=2 X p"}, out1, err);
  Outcome o;
  o.pass = two == kExitTrue && out2.str() == "true\n" && one == kExitFalse && out1.str() == "false\n";
  o.detail = "two p-sons: " + std::to_string(two) + ", one p-son: " + std::to_string(one);
  return o;
}

Outcome compare_fragment(const std::string& fragment, std::size_t cases) {
  CompareReport r = run_compare({fragment, cases, kSeed, false});
  Outcome o;
  o.pass = r.mismatches == 0 && r.rows.size() == cases;
  o.detail = fragment + ": " + std::to_string(r.rows.size()) + " cases, " + std::to_string(r.mismatches) +
             " mismatches";
  return o;
}

Outcome word_automata() {
  using namespace testing_support;
  std::size_t finite = 0, lassos = 0, closures = 0, wrong = 0;
  for (const std::string& text : kLtlCorpus) {
    Ltl f = ltl_pq(text);
    Afw a = build_afw_weak(f, 2);
    Nfw n = afw_to_nfw(a);
    for (const Word& w : all_words(2, 1, 5)) {
      const bool expect = eval_weak(f, w);
      wrong += (a.accepts(w) != expect) + (accepts_finite(n, w) != expect);
      ++finite;
    }
    Nbw b = build_nbw(f, 2);
    Nbw c = build_prefix_closure_nbw(f, 2);
    for (const Word& stem : all_words(2, 0, 3)) {
      for (const Word& loop : all_words(2, 1, 3)) {
        const bool infinite = eval_lasso(f, stem, loop);
        wrong += accepts_lasso(b, stem, loop) != infinite;
        wrong += accepts_lasso(c, stem, loop) != (infinite || some_prefix_satisfies(f, stem, loop));
        ++lassos;
        ++closures;
      }
    }
  }
  Outcome o;
  o.pass = wrong == 0;
  o.detail = std::to_string(finite) + " finite words, " + std::to_string(lassos) + " lassos, " +
             std::to_string(closures) + " closure lassos, " + std::to_string(wrong) + " disagreements";
  return o;
}

Outcome breakpoints() {
  CompareReport r = run_compare({"breakpoint", 400, kSeed, false});
  Outcome o;
  o.pass = r.mismatches == 0 && r.confirmed >= 50;
  o.detail = std::to_string(r.confirmed) + " confirmed of " + std::to_string(r.rows.size()) + ", " +
             std::to_string(r.mismatches) + " violations";
  return o;
}

Outcome negation_and_unrolling() {
  std::size_t checks = 0, violations = 0;
  for (const CompareInstance& c : compare_instances({"ctlstar-g1", 200, kSeed, false})) {
    const bool verdict = model_check(c.lts, c.lts.initial(), c.formula);
    violations += model_check(c.lts, c.lts.initial(), Formula::negation(c.formula)) == verdict;
    ++checks;
    for (std::size_t k = 1; k <= 3; ++k) {
      Lts u = unroll(c.lts, k);
      violations += model_check(u, u.initial(), c.formula) != verdict;
      ++checks;
    }
  }
  Outcome o;
  o.pass = violations == 0;
  o.detail = std::to_string(checks) + " checks, " + std::to_string(violations) + " violations";
  return o;
}

std::uint64_t power(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Counts (Q+ u bot)^g x (Q- u bot)^g without the all-bot vector digit by digit.
std::uint64_t enumerate_vectors(std::size_t plus, std::size_t minus, unsigned g) {
  std::vector<std::size_t> radix(g, plus + 1);
  radix.insert(radix.end(), g, minus + 1);
  std::vector<std::size_t> digit(radix.size(), 0);
  std::uint64_t count = 0;
  while (true) {
    std::size_t k = 0;
    while (k < digit.size() && ++digit[k] == radix[k]) digit[k++] = 0;
    if (k == digit.size()) return count;
    ++count;
  }
}

const std::vector<std::string> kGradedCorpus = {
    "p",           "!p | q",       "E>=0 X p",    "E>=1 X p",
    "E>=2 X p",    "E>=2 (p U q)", "A X (p -> E>=2 X q)",
    "!E>=1 G p",   "E>=2 G (p -> X q)", "E>=1 (p U E>=2 X q)", "A<2 F p",
};

Outcome structural_counts() {
  std::size_t components = 0, count_errors = 0, automata = 0, hesitancy_errors = 0;
  for (const std::string& text : kGradedCorpus) {
    Ghta a = compile(parse(text));
    for (const ExistsInfo& c : a.components()) {
      const std::size_t plus = c.plus->size(), minus = c.minus->size();
      const std::uint64_t closed = power(plus + 1, c.grade) * power(minus + 1, c.grade) - 1;
      count_errors += c.q1_raw != closed || enumerate_vectors(plus, minus, c.grade) != closed;
      ++components;
    }
    hesitancy_errors += validate_hesitancy(a, 4).violations.size();
    hesitancy_errors += validate_hesitancy(a.dualize(), 4).violations.size();
    automata += 2;
  }
  std::vector<std::size_t> depth;
  for (int k = 1; k <= 6; ++k) depth.push_back(compile(parse(nested("E>=1 X", k))).depth());
  double worst_ratio = 0;
  bool constant_steps = true;
  for (std::size_t k = 1; k < depth.size(); ++k) {
    worst_ratio = std::max(worst_ratio, double(depth[k]) / double(depth[k - 1]));
    constant_steps = constant_steps && depth[k] - depth[k - 1] == depth[1] - depth[0];
  }
  std::string depths;
  for (std::size_t d : depth) depths += (depths.empty() ? "" : " ") + std::to_string(d);
  char ratio[32];
  std::snprintf(ratio, sizeof ratio, "%.3f", worst_ratio);
  Outcome o;
  o.pass = count_errors == 0 && hesitancy_errors == 0 && constant_steps && worst_ratio <= 2.0;
  o.detail = std::to_string(components) + " vector spaces, " + std::to_string(count_errors) +
             " count errors; " + std::to_string(automata) + " automata, " + std::to_string(hesitancy_errors) +
             " hesitancy violations; depths " + depths + ", max ratio " + ratio;
  return o;
}

Outcome linear_growth() {
  std::vector<double> xs, ys;
  std::string counts;
  for (int k = 1; k <= 6; ++k) {
    const std::size_t n = compile(parse(nested("E>=2 X", k))).state_count();
    xs.push_back(k);
    ys.push_back(double(n));
    counts += (counts.empty() ? "" : " ") + std::to_string(n);
  }
  const double m = double(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
    syy += ys[i] * ys[i];
  }
  const double cov = sxy - sx * sy / m, vx = sxx - sx * sx / m, vy = syy - sy * sy / m;
  const double r2 = vy == 0 ? 1.0 : cov * cov / (vx * vy);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", r2);
  Outcome o;
  o.pass = r2 >= 0.99;
  o.detail = "states " + counts + ", R^2 " + buf;
  return o;
}

const std::vector<std::string> kSatCorpus = {
    "p",        "p & !p",   "E>=1 X p",           "E>=2 X p",  "E>=2 X p & !E>=1 X p",
    "!E>=1 X p", "A G p",   "A G p & E>=1 F !p",  "E>=1 G p",  "E>=2 F p",
};

Outcome sat_round_trip() {
  constexpr unsigned d = 2;
  std::size_t witnesses = 0, disagreements = 0, bad_witnesses = 0;
  std::string verdicts;
  for (const std::string& text : kSatCorpus) {
    const Formula phi = parse(text);
    SatOptions options;
    options.mode = SatMode::Full;
    options.degree = d;
    SatResult full = sat(phi, options);
    SatResult bounded = sat_bounded(phi, 3, d);
    disagreements += full.outcome == SatOutcome::BudgetExceeded;
    disagreements += (full.outcome == SatOutcome::Sat) != (bounded.outcome == SatOutcome::Sat);
    for (const SatResult* r : {&full, &bounded}) {
      if (r->outcome != SatOutcome::Sat) continue;
      ++witnesses;
      const Lts& w = *r->witness;
      bad_witnesses += !model_check(w, w.initial(), phi) || w.max_degree() > d;
    }
    verdicts += (verdicts.empty() ? "" : ",") + to_string(full.outcome);
  }
  bool contradictions = sat(parse("p & !p"), {SatMode::Full}).outcome == SatOutcome::Unsat;
  const Formula graded = parse("E>=2 X p & !E>=1 X p");
  SatOptions options;
  options.mode = SatMode::Full;
  options.degree = d;
  contradictions = contradictions && sat(graded, options).outcome == SatOutcome::Unsat;
  for (std::size_t n = 1; n <= 3; ++n) {
    contradictions = contradictions && sat_bounded(graded, n, d).outcome == SatOutcome::UnsatAtBound;
  }
  Outcome o;
  o.pass = disagreements == 0 && bad_witnesses == 0 && contradictions;
  o.detail = "verdicts " + verdicts + "; " + std::to_string(disagreements) + " disagreements, " +
             std::to_string(witnesses) + " witnesses, " + std::to_string(bad_witnesses) + " failing" +
             (contradictions ? "; contradictions unsat" : "; contradiction verdict wrong");
  return o;
}

struct Criterion {
  int number;
  double limit_seconds;  // 0: no limit
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, 1, sons_trees},
      {2, 60, [] { return compare_fragment("ex-count", 200); }},
      {3, 300, [] { return compare_fragment("ctlstar-g1", 200); }},
      {4, 120, word_automata},
      {5, 0, breakpoints},
      {6, 0, negation_and_unrolling},
      {7, 0, structural_counts},
      {8, 0, linear_growth},
      {9, 0, sat_round_trip},
  };
  return all;
}

void report(int number, bool pass, const std::string& detail, double seconds) {
  char time[32];
  std::snprintf(time, sizeof time, "%.2f s", seconds);
  std::cout << (pass ? "PASS " : "FAIL ") << number << ": " << detail << " (" << time << ")" << std::endl;
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  bool all_pass = true;
  std::vector<std::string> first;
  for (const Criterion& c : criteria()) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds > c.limit_seconds) {
      o.pass = false;
      o.detail += "; over the time limit";
    }
    report(c.number, o.pass, o.detail, seconds);
    all_pass = all_pass && o.pass;
    first.push_back(o.detail);
  }

  // Second pass over everything with the same seed; reports must match byte for byte.
  const auto start = Clock::now();
  std::size_t differing = 0;
  for (std::size_t i = 0; i < criteria().size(); ++i) {
    std::string again;
    try {
      again = criteria()[i].run().detail;
    } catch (const std::exception& e) {
      again = std::string("threw: ") + e.what();
    }
    differing += again != first[i];
  }
  for (const char* fragment : {"ex-count", "ctlstar-g1", "breakpoint"}) {
    differing += run_compare({fragment, 100, kSeed, false}).text() != run_compare({fragment, 100, kSeed, false}).text();
  }
  const bool same = differing == 0;
  report(10, same, std::to_string(criteria().size()) + " criterion reports and 3 compare tables rerun, " +
                       std::to_string(differing) + " differ",
         std::chrono::duration<double>(Clock::now() - start).count());
  all_pass = all_pass && same;
  return all_pass ? 0 : 1;
}
