#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sawstrip/lattice.hpp"
#include "sawstrip/numeric.hpp"

namespace sawstrip {

inline constexpr std::uint64_t kDefaultWalkCap = 10'000'000;

// Value of SAW_WALK_CAP if set to a positive integer, else kDefaultWalkCap.
std::uint64_t walk_cap_from_env();

struct EnumerationOptions {
  // Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned workers = 1;
  // Length of the prefixes handed to workers when workers > 1.
  unsigned split_depth = 6;
  // Abort with Error("enumeration cap exceeded") once more than this many
  // walks (summed over all lengths) have been visited.
  std::optional<std::uint64_t> walk_budget;
};

// a_0..a_{n_max}: number of n-step SAWs from the origin inside the strip.
// Depth-first search with an exact visited set; walks are never stored.
std::vector<BigInt> count_saws(const StripSpec& s, unsigned n_max,
                               const EnumerationOptions& opts = {});

// All n-step SAWs in the strip, sorted. Throws Error("too many walks") once
// more than `cap` words would be produced.
std::vector<StepWord> list_saws(const StripSpec& s, unsigned n, std::uint64_t cap = kDefaultWalkCap);

}  // namespace sawstrip
