#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "sawstrip/numeric.hpp"
#include "sawstrip/ratfun.hpp"

namespace sawstrip {

struct GuessResult {
  RatFun gf;
  long num_deg = 0;
  long den_deg = 0;
  // Terms that entered the linear system.
  std::size_t terms_used = 0;
  // Held-out terms checked after the fit.
  std::size_t validated_terms = 0;
};

struct NoFit {
  std::string reason;
};

using FitOutcome = std::variant<GuessResult, NoFit>;

inline bool fitted(const FitOutcome& o) { return std::holds_alternative<GuessResult>(o); }

// Looks for P/Q with deg P <= p, deg Q <= q, Q(0) = 1 whose expansion matches
// every term. The last `holdout` terms stay out of the linear system and are
// only compared afterwards. Requires |terms| >= p + q + 1 + holdout and
// throws Error("insufficient terms") otherwise. When the system leaves free
// coefficients, they are set to zero and the candidate must still survive
// the full comparison.
FitOutcome fit_rational(std::span<const BigInt> terms, unsigned p, unsigned q, unsigned holdout);

struct GuessOptions {
  // Upper bound on both p and q; nullopt = whatever the term count allows.
  std::optional<unsigned> max_degree;
};

// Tries (p, q) by increasing p + q, smaller q first on ties, and returns the
// first holdout-validated fit. Throws Error if holdout == 0.
FitOutcome guess_auto(std::span<const BigInt> terms, unsigned holdout, const GuessOptions& opts = {});

struct SemiRigorousReport {
  std::vector<BigInt> oracle_terms;   // a_0..a_15 from the enumerator
  std::optional<GuessResult> guess;
  bool matches_theorem_gf = false;
  std::vector<BigInt> fresh_terms;    // a_16..a_20 from the enumerator
  bool fresh_terms_match = false;
  std::string detail;

  bool ok() const { return guess && matches_theorem_gf && fresh_terms_match; }
};

inline constexpr unsigned kSemiRigorousTerms = 16;
inline constexpr unsigned kSemiRigorousFresh = 5;
inline constexpr unsigned kSemiRigorousHoldout = 2;

// Enumerate a_0..a_15 in {0,1} x Z, guess the gf, compare with the
// grammar-derived gf, then check five further oracle terms.
SemiRigorousReport semi_rigorous_width2();
// Same procedure on caller-supplied terms (used for corruption checks).
SemiRigorousReport semi_rigorous_from_terms(std::vector<BigInt> terms, std::vector<BigInt> fresh);

}  // namespace sawstrip
