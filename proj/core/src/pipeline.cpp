#include "sawstrip/pipeline.hpp"

#include <algorithm>
#include <sstream>

#include "sawstrip/error.hpp"

namespace sawstrip {

BigRat default_tolerance() { return make_rat(1, BigInt("1000000000000")); }

ConjectureOutcome conjecture_strip_gf(const StripSpec& s, unsigned n_train, unsigned holdout,
                                      const ConjectureOptions& opts) {
  if (n_train < 8) throw Error("n_train must be at least 8");
  if (holdout < 2) throw Error("holdout must be at least 2");

  auto counts = count_saws(s, n_train + holdout, opts.enumeration);
  const std::span<const BigInt> training(counts.data(), n_train + 1);
  auto outcome = guess_auto(training, holdout, opts.guess);
  if (!fitted(outcome)) return std::get<NoFit>(outcome);

  auto guess = std::get<GuessResult>(std::move(outcome));
  const Series predicted = series_expand(guess.gf, n_train + holdout);
  for (std::size_t n = n_train + 1; n < counts.size(); ++n) {
    if (predicted[n] != BigRat(counts[n])) {
      std::ostringstream why;
      why << "fresh term mismatch at n=" << n << ": predicted " << to_string(predicted[n]) << ", oracle "
          << to_string(counts[n]);
      return NoFit{why.str()};
    }
  }
  return StripConjecture{s, std::move(counts), std::move(guess), holdout};
}

BoundReport connective_bound(const StripSpec& s, const GuessResult& g, const BigRat& tol) {
  const Poly& den = g.gf.den();
  std::optional<RootInterval> rho;
  if (den.degree() >= 1) rho = smallest_positive_root(den, tol);
  if (!rho) throw Error("no growth singularity in (0,1]");
  RootInterval mu{1 / rho->hi, 1 / rho->lo};
  return BoundReport{s, g.gf, *rho, std::move(mu)};
}

unsigned default_train_length(int width) {
  switch (width) {
    case 1: return 10;
    case 2: return 20;
    case 3: return 26;
    case 4: return 20;
    default: return 16;
  }
}

MuTable mu_table(const std::vector<StripSpec>& strips, std::optional<unsigned> n_train, unsigned holdout,
                 const BigRat& tol, const ConjectureOptions& opts) {
  if (strips.empty()) throw Error("no strips given");
  std::vector<StripSpec> sorted = strips;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const StripSpec& a, const StripSpec& b) { return a.width() < b.width(); });

  MuTable table;
  for (const auto& s : sorted) {
    MuEntry entry{s, std::nullopt, "ok", ""};
    try {
      auto outcome = conjecture_strip_gf(s, n_train.value_or(default_train_length(s.width())), holdout, opts);
      if (auto* c = std::get_if<StripConjecture>(&outcome)) {
        entry.report = connective_bound(s, c->guess, tol);
      } else {
        entry.status = "unconjectured";
        entry.reason = std::get<NoFit>(outcome).reason;
      }
    } catch (const Error& e) {
      entry.status = "error";
      entry.reason = e.what();
    }
    table.entries.push_back(std::move(entry));
  }

  const MuEntry* prev = nullptr;
  for (const auto& e : table.entries) {
    if (!e.report) continue;
    if (prev != nullptr) {
      const bool wider = e.strip.width() > prev->strip.width();
      const auto& a = prev->report->mu;
      const auto& b = e.report->mu;
      // Strictly wider strips must be certified; equal widths only consistent.
      if (wider ? a.hi > b.lo : a.lo > b.hi) table.monotone = false;
    }
    prev = &e;
  }
  return table;
}

}  // namespace sawstrip
