#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sawstrip/automaton.hpp"
#include "sawstrip/lattice.hpp"
#include "sawstrip/numeric.hpp"
#include "sawstrip/ratfun.hpp"

namespace sawstrip::width2 {

// Walks in the two-column strip {0, 1} x Z. A northbound walk is one of
//
//   U  L*  I  U'
//
//   U   optional U-turn d^i r u^i, i >= 0 ("r" alone when i = 0)
//   L   u^i h, i >= 1, with h the step to the other column
//   I   u^k, k >= 0
//   U'  optional u^(i+1) h d^i, i >= 1
//
// Horizontal steps are forced by the current column: r from column 0, l
// from column 1. Southbound walks are the u<->d mirrors.

inline const StripSpec kStrip{0, 1};

struct GrammarDecomposition {
  std::optional<unsigned> u_turn;
  std::vector<unsigned> l_parts;
  unsigned i_len = 0;
  std::optional<unsigned> u_prime;

  friend auto operator<=>(const GrammarDecomposition&, const GrammarDecomposition&) = default;
};

std::size_t length(const GrammarDecomposition& d);
StepWord realize_word(const GrammarDecomposition& d);

enum class Piece { U, LSingle, LStar, I, UPrime };

RatFun piece_gf(Piece piece);
const char* piece_name(Piece piece);

// Product of the U, L*, I and U' piece gfs.
RatFun northbound_gf();
// 2 * northbound_gf() - (1 + t): the empty walk and "r" are self-mirror.
RatFun full_gf();

// Chain q0 -U-> q1, q1 -L-> q1, q1 -I-> q2, q2 -U'-> accept.
WeightedAutomaton grammar_automaton();
RatFun gf_via_weighted_automaton();

// Calls visit(d) for every decomposition of total length n, in a fixed order.
void for_each_decomposition(std::size_t n, const std::function<void(const GrammarDecomposition&)>& visit);
std::vector<GrammarDecomposition> decompositions_of_length(std::size_t n);
std::uint64_t count_decompositions(std::size_t n);
// Realized northbound words of length n, sorted.
std::vector<StepWord> generate_northbound(std::size_t n);

std::optional<GrammarDecomposition> parse_northbound(const StepWord& w);

// n = 0 -> 1, n = 1 -> 3, else 8 F_n - n for even n, 8 F_n - 4 for odd n.
BigInt closed_form_a(std::uint64_t n);

struct VerificationReport {
  unsigned n_max = 0;
  bool ok = true;
  std::optional<unsigned> first_failure;
  std::string detail;
};

// Checks, for 0 <= n <= n_max, oracle == [t^n] gf == closed form and
// |generate_northbound(n)| == [t^n] northbound_gf(). Mismatches land in the
// report. Throws Error when n_max < 2.
VerificationReport verify_theorem(unsigned n_max);
// Same check with a caller-supplied full gf.
VerificationReport verify_theorem(unsigned n_max, const RatFun& claimed_full_gf);

// Finite certificate that closed_form_a(n) = [t^n] full_gf() for every n:
// both sides satisfy the order-6 recurrence read off the denominator, and
// they agree on enough initial terms to pin the solution.
struct ClosedFormCertificate {
  bool characteristic_divides = false;
  bool initial_terms_match = false;
  unsigned terms_checked = 0;

  bool ok() const { return characteristic_divides && initial_terms_match; }
};

ClosedFormCertificate certify_closed_form();

}  // namespace sawstrip::width2
