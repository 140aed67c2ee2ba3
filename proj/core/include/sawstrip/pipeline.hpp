#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sawstrip/enumerator.hpp"
#include "sawstrip/guesser.hpp"
#include "sawstrip/lattice.hpp"
#include "sawstrip/roots.hpp"

namespace sawstrip {

struct ConjectureOptions {
  EnumerationOptions enumeration;
  GuessOptions guess;
};

struct StripConjecture {
  StripSpec strip;
  std::vector<BigInt> counts;  // a_0..a_{n_train + holdout}
  GuessResult guess;
  std::size_t fresh_terms_checked = 0;
};

using ConjectureOutcome = std::variant<StripConjecture, NoFit>;

// Enumerates a_0..a_{n_train + holdout}; a_0..a_{n_train} go to guess_auto
// (which holds out its own last `holdout` terms), the remaining `holdout`
// fresh terms must be reproduced by the guessed gf. Requires n_train >= 8
// and holdout >= 2.
ConjectureOutcome conjecture_strip_gf(const StripSpec& s, unsigned n_train, unsigned holdout,
                                      const ConjectureOptions& opts = {});

// 10^-12
BigRat default_tolerance();

struct BoundReport {
  StripSpec strip;
  RatFun gf;
  RootInterval rho;  // smallest positive root of the reduced denominator
  RootInterval mu;   // [1/rho.hi, 1/rho.lo], a lower bound on the connective constant
};

// Throws Error("no growth singularity in (0,1]") when the denominator has no
// root there.
BoundReport connective_bound(const StripSpec& s, const GuessResult& g, const BigRat& tol);

struct MuEntry {
  StripSpec strip;
  std::optional<BoundReport> report;  // nullopt: unconjectured
  std::string status;                 // "ok", "unconjectured", "error"
  std::string reason;
};

struct MuTable {
  std::vector<MuEntry> entries;  // sorted by strip width
  // Nondecreasing mu intervals over the conjectured entries.
  bool monotone = true;
};

// Training length used by `mu` when none is given: the largest length that
// keeps the enumeration for that width within a few seconds.
unsigned default_train_length(int width);

MuTable mu_table(const std::vector<StripSpec>& strips, std::optional<unsigned> n_train,
                 unsigned holdout, const BigRat& tol, const ConjectureOptions& opts = {});

}  // namespace sawstrip
