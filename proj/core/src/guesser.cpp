#include "sawstrip/guesser.hpp"

#include <sstream>

#include "sawstrip/enumerator.hpp"
#include "sawstrip/error.hpp"
#include "sawstrip/linsolve.hpp"
#include "sawstrip/width2.hpp"

namespace sawstrip {

namespace {

// First index where the expansion of f disagrees with terms, if any.
std::optional<std::size_t> first_mismatch(const RatFun& f, std::span<const BigInt> terms) {
  if (terms.empty()) return std::nullopt;
  const Series s = series_expand(f, terms.size() - 1);
  for (std::size_t k = 0; k < terms.size(); ++k)
    if (s[k] != BigRat(terms[k])) return k;
  return std::nullopt;
}

}  // namespace

FitOutcome fit_rational(std::span<const BigInt> terms, unsigned p, unsigned q, unsigned holdout) {
  const std::size_t total = terms.size();
  if (total < static_cast<std::size_t>(p) + q + 1 + holdout) throw Error("insufficient terms");
  const std::size_t fit_len = total - holdout;

  auto term = [&](long k) { return k < 0 ? BigRat(0) : BigRat(terms[static_cast<std::size_t>(k)]); };

  // Coefficients t^k, p < k < fit_len, of Q * A vanish:
  //   sum_{j=1..q} Q_j a_{k-j} = -a_k.
  std::vector<BigRat> den_coeffs{BigRat(1)};
  if (q > 0) {
    Matrix<BigRat> a;
    std::vector<BigRat> b;
    for (std::size_t k = p + 1; k < fit_len; ++k) {
      std::vector<BigRat> row(q);
      for (unsigned j = 1; j <= q; ++j) row[j - 1] = term(static_cast<long>(k) - j);
      a.push_back(std::move(row));
      b.push_back(-term(static_cast<long>(k)));
    }
    auto solved = solve_linear_system(std::move(a), std::move(b));
    if (std::holds_alternative<NoSolution>(solved)) return NoFit{"inconsistent linear system"};
    const auto& x = std::holds_alternative<std::vector<BigRat>>(solved)
                        ? std::get<std::vector<BigRat>>(solved)
                        : std::get<UnderDeterminedSolution<BigRat>>(solved).particular;
    den_coeffs.insert(den_coeffs.end(), x.begin(), x.end());
  }
  const Poly den(den_coeffs);

  std::vector<BigRat> num_coeffs(p + 1);
  for (unsigned k = 0; k <= p; ++k)
    for (unsigned j = 0; j <= k && j <= q; ++j) num_coeffs[k] += den[j] * term(static_cast<long>(k - j));
  RatFun gf(Poly(std::move(num_coeffs)), den);

  if (auto bad = first_mismatch(gf, terms)) {
    std::ostringstream why;
    why << (*bad < fit_len ? "fit" : "holdout") << " mismatch at n=" << *bad;
    return NoFit{why.str()};
  }
  return GuessResult{gf, gf.num().is_zero() ? -1 : gf.num().degree(), gf.den().degree(), fit_len, holdout};
}

FitOutcome guess_auto(std::span<const BigInt> terms, unsigned holdout, const GuessOptions& opts) {
  if (holdout == 0) throw Error("holdout must be at least 1");
  const std::size_t total = terms.size();
  if (total < 1 + static_cast<std::size_t>(holdout)) throw Error("insufficient terms");
  const std::size_t max_sum = total - 1 - holdout;
  for (std::size_t sum = 0; sum <= max_sum; ++sum) {
    for (std::size_t q = 0; q <= sum; ++q) {
      const std::size_t p = sum - q;
      if (opts.max_degree && (p > *opts.max_degree || q > *opts.max_degree)) continue;
      auto outcome = fit_rational(terms, static_cast<unsigned>(p), static_cast<unsigned>(q), holdout);
      if (fitted(outcome)) return outcome;
    }
  }
  return NoFit{"no rational fit with p + q <= " + std::to_string(max_sum)};
}

SemiRigorousReport semi_rigorous_from_terms(std::vector<BigInt> terms, std::vector<BigInt> fresh) {
  SemiRigorousReport report;
  report.oracle_terms = std::move(terms);
  report.fresh_terms = std::move(fresh);

  auto outcome = guess_auto(report.oracle_terms, kSemiRigorousHoldout);
  if (!fitted(outcome)) {
    report.detail = "no fit: " + std::get<NoFit>(outcome).reason;
    return report;
  }
  report.guess = std::get<GuessResult>(outcome);
  report.matches_theorem_gf = report.guess->gf == width2::full_gf();

  std::vector<BigInt> all = report.oracle_terms;
  all.insert(all.end(), report.fresh_terms.begin(), report.fresh_terms.end());
  const auto bad = first_mismatch(report.guess->gf, all);
  report.fresh_terms_match = !bad.has_value();

  std::ostringstream why;
  why << "guessed " << report.guess->gf.to_string() << "; "
      << (report.matches_theorem_gf ? "equals" : "differs from") << " the grammar gf; ";
  if (bad)
    why << "fresh term mismatch at n=" << *bad;
  else
    why << report.fresh_terms.size() << " fresh terms reproduced";
  report.detail = why.str();
  return report;
}

SemiRigorousReport semi_rigorous_width2() {
  auto counts = count_saws(width2::kStrip, kSemiRigorousTerms + kSemiRigorousFresh - 1);
  std::vector<BigInt> fresh(counts.begin() + kSemiRigorousTerms, counts.end());
  counts.resize(kSemiRigorousTerms);
  return semi_rigorous_from_terms(std::move(counts), std::move(fresh));
}

}  // namespace sawstrip
