// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sawstrip/enumerator.hpp"
#include "sawstrip/error.hpp"
#include "sawstrip/guesser.hpp"
#include "sawstrip/pipeline.hpp"
#include "sawstrip/width2.hpp"

using namespace sawstrip;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;

  void fail(const std::string& why) {
    if (pass) note = why;
    pass = false;
  }
};

// 1. a_n for the two-column strip up to n = 30 from DFS, closed form and gf.
Outcome theorem_reproduction() {
  Outcome o;
  constexpr unsigned kN = 30;
  const auto counts = count_saws(width2::kStrip, kN);
  const auto series = integer_coeffs(series_expand(width2::full_gf(), kN));
  for (unsigned n = 0; n <= kN; ++n) {
    if (counts[n] != width2::closed_form_a(n)) o.fail("closed form differs at n=" + std::to_string(n));
    if (counts[n] != series[n]) o.fail("gf coefficient differs at n=" + std::to_string(n));
  }
  const std::vector<std::pair<unsigned, long>> spots{{0, 1}, {1, 3}, {5, 36}, {7, 100}, {15, 4876}};
  for (const auto& [n, v] : spots)
    if (counts[n] != v) o.fail("spot value a_" + std::to_string(n));
  if (o.pass) o.note = "a_30 = " + to_string(counts[kN]);
  return o;
}

// 2. gf identities, rebuilt here from scratch.
Outcome gf_identities() {
  Outcome o;
  const Poly one{1}, omt{1, -1}, opt{1, 1};
  const Poly den = omt * omt * opt * opt * Poly{1, -1, -1};
  const RatFun expected(Poly{1, 2, 0, -1, -1, 0, 0, 1}, den);
  const RatFun full = width2::full_gf();
  if (!(full == expected)) o.fail("full gf is " + full.to_string());
  if (full.num() != expected.num() || full.den() != expected.den()) o.fail("canonical form differs");

  const RatFun t = RatFun::t();
  const RatFun r1(1);
  const RatFun even = r1 / (r1 - t * t);
  const RatFun product = (r1 + t * even) * (r1 / (r1 - t * t / (r1 - t))) * (r1 / (r1 - t)) *
                         (r1 + t * t * t * t * even);
  const RatFun nb = width2::northbound_gf();
  if (!(nb == product)) o.fail("northbound gf is not the four-factor product");
  if (!(nb == width2::gf_via_weighted_automaton())) o.fail("automaton gf differs");
  if (!(RatFun(2) * nb - RatFun(opt) == full)) o.fail("full != 2*northbound - (1+t)");
  return o;
}

// 3. grammar words plus their mirrors are exactly the strip's walks.
Outcome grammar_completeness() {
  Outcome o;
  for (unsigned n = 0; n <= 12; ++n) {
    const auto nb = width2::generate_northbound(n);
    const std::set<StepWord> north(nb.begin(), nb.end());
    if (north.size() != nb.size()) o.fail("duplicate word at n=" + std::to_string(n));

    std::set<StepWord> mirror;
    for (const auto& w : nb) mirror.insert(mirror_x(w));
    std::set<StepWord> overlap, all = north;
    for (const auto& w : mirror) {
      if (north.count(w)) overlap.insert(w);
      all.insert(w);
    }
    const auto listed = list_saws(width2::kStrip, n);
    if (all != std::set<StepWord>(listed.begin(), listed.end()))
      o.fail("union differs from enumeration at n=" + std::to_string(n));

    std::set<StepWord> want;
    if (n == 0) want.insert(StepWord(""));
    if (n == 1) want.insert(StepWord("r"));
    if (overlap != want) o.fail("unexpected overlap at n=" + std::to_string(n));

    const auto ds = width2::decompositions_of_length(n);
    const std::set<width2::GrammarDecomposition> tuples(ds.begin(), ds.end());
    std::set<StepWord> realized;
    for (const auto& d : ds) realized.insert(width2::realize_word(d));
    if (tuples.size() != ds.size() || realized.size() != ds.size() || realized != north)
      o.fail("ambiguous grammar at n=" + std::to_string(n));
  }
  return o;
}

// 4. guess from 16 oracle terms, compare, then 5 fresh terms.
Outcome semi_rigorous() {
  Outcome o;
  const auto r = semi_rigorous_width2();
  if (!r.ok()) o.fail(r.detail.empty() ? "report not ok" : r.detail);
  if (r.oracle_terms.size() != kSemiRigorousTerms) o.fail("wrong number of oracle terms");
  if (r.fresh_terms.size() != kSemiRigorousFresh) o.fail("wrong number of fresh terms");
  return o;
}

// 5. random rational functions recovered from their series.
Outcome guesser_round_trip() {
  Outcome o;
  std::mt19937 rng(20261016);
  std::uniform_int_distribution<int> coef(-9, 9);
  std::uniform_int_distribution<int> deg(0, 5);
  int recovered = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<BigRat> d(static_cast<std::size_t>(deg(rng)) + 1);
    d[0] = 1;
    for (std::size_t k = 1; k < d.size(); ++k) d[k] = coef(rng);
    Poly num = testing::random_poly(rng, 5, -9, 9);
    if (num.is_zero()) num = Poly{1};
    const RatFun f(num, Poly(d));
    const std::size_t p = static_cast<std::size_t>(std::max(0L, f.num().degree()));
    const std::size_t q = static_cast<std::size_t>(std::max(0L, f.den().degree()));
    const auto terms = integer_coeffs(series_expand(f, p + q + 4));
    const auto g = guess_auto(terms, 2);
    if (fitted(g) && std::get<GuessResult>(g).gf == f) {
      ++recovered;
    } else {
      o.fail("trial " + std::to_string(trial) + ": " + f.to_string());
    }
  }
  if (o.pass) o.note = std::to_string(recovered) + "/100 recovered";
  return o;
}

// 6. connective-constant bounds for widths 1, 2, 3.
Outcome connective_bounds() {
  Outcome o;
  const BigRat tol = default_tolerance();
  std::vector<RootInterval> mus;
  std::ostringstream note;

  const auto bound = [&](const StripSpec& s, unsigned n_train) -> std::optional<BoundReport> {
    const auto c = conjecture_strip_gf(s, n_train, 2);
    if (const auto* nf = std::get_if<NoFit>(&c)) {
      o.fail("width " + std::to_string(s.width()) + " (n_train=" + std::to_string(n_train) +
             "): no holdout-validated gf: " + nf->reason);
      return std::nullopt;
    }
    return connective_bound(s, std::get<StripConjecture>(c).guess, tol);
  };

  if (auto r = bound(StripSpec(0, 0), 10)) {
    if (!(r->gf == RatFun(Poly{1, 1}, Poly{1, -1}))) o.fail("width 1 gf is " + r->gf.to_string());
    if (r->mu.lo != 1 || r->mu.hi != 1) o.fail("mu_1 != 1");
    mus.push_back(r->mu);
  }
  if (auto r = bound(StripSpec(0, 1), 20)) {
    const BigRat target = parse_rational("1.6180339887");
    if (abs(r->mu.lo - target) > parse_rational("1e-9") || abs(r->mu.hi - target) > parse_rational("1e-9"))
      o.fail("mu_2 not within 1e-9 of 1.6180339887");
    note << "mu_2 in [" << rounded_decimal(r->mu.lo, 12, Rounding::Down) << ", "
         << rounded_decimal(r->mu.hi, 12, Rounding::Up) << "]";
    mus.push_back(r->mu);
  }
  // Longest training run the DFS finishes in about a minute on one core.
  if (auto r = bound(StripSpec(0, 2), 30)) {
    note << ", mu_3 in [" << rounded_decimal(r->mu.lo, 12, Rounding::Down) << ", "
         << rounded_decimal(r->mu.hi, 12, Rounding::Up) << "]";
    mus.push_back(r->mu);
  }
  if (mus.size() == 3) {
    for (std::size_t k = 1; k < mus.size(); ++k)
      if (mus[k - 1].hi > mus[k].lo) o.fail("mu not monotone in width");
  }
  if (o.pass) o.note = note.str();
  return o;
}

// 7. enumerator self-consistency.
Outcome oracle_consistency() {
  Outcome o;
  const std::vector<StripSpec> strips{StripSpec(0, 0), StripSpec(0, 1), StripSpec(-1, 0), StripSpec(0, 2),
                                      StripSpec(-1, 1), StripSpec(-2, 1), StripSpec(0, 3)};
  constexpr unsigned kN = 12;
  for (const auto& s : strips) {
    const auto counts = count_saws(s, kN);
    const std::string tag = "[" + std::to_string(s.xlo()) + "," + std::to_string(s.xhi()) + "]";
    for (unsigned n = 0; n <= kN; ++n) {
      const auto words = list_saws(s, n);
      if (counts[n] != BigInt(static_cast<unsigned long>(words.size())))
        o.fail("list/count mismatch on " + tag + " n=" + std::to_string(n));
      std::size_t ups = 0, downs = 0;
      for (const auto& w : words) {
        if (w.size() == 0) continue;
        if (w[0] == Step::Up) ++ups;
        if (w[0] == Step::Down) ++downs;
      }
      if (ups != downs) o.fail("u/d asymmetry on " + tag + " n=" + std::to_string(n));
      if (n <= 8) {
        const auto brute = testing::brute_force_saws(s.xlo(), s.xhi(), n);
        if (brute.size() != words.size()) o.fail("brute force differs on " + tag + " n=" + std::to_string(n));
      }
    }
    if (count_saws(s.reflected(), kN) != counts) o.fail("reflection changes counts on " + tag);

    // wider strips never have fewer walks
    for (const auto& wider : {StripSpec(s.xlo() - 1, s.xhi()), StripSpec(s.xlo(), s.xhi() + 1)}) {
      const auto w = count_saws(wider, kN);
      for (unsigned n = 0; n <= kN; ++n)
        if (w[n] < counts[n]) o.fail("widening lost walks on " + tag);
    }

    for (unsigned workers : {2U, 3U, 8U})
      for (unsigned split : {1U, 4U, 7U}) {
        EnumerationOptions opts;
        opts.workers = workers;
        opts.split_depth = split;
        if (count_saws(s, kN, opts) != counts) o.fail("parallel schedule changed counts on " + tag);
      }
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"theorem reproduction", theorem_reproduction},
      {"gf identities", gf_identities},
      {"grammar completeness", grammar_completeness},
      {"semi-rigorous reproduction", semi_rigorous},
      {"guesser round trip", guesser_round_trip},
      {"connective bounds", connective_bounds},
      {"oracle self-consistency", oracle_consistency},
  };

  int failures = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = check();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!out.pass) ++failures;
    std::printf("[%s] %d %s (%.1fs)%s%s\n", out.pass ? "PASS" : "FAIL", index, name.c_str(), secs,
                out.note.empty() ? "" : ": ", out.note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
