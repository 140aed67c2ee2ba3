#pragma once

#include <optional>
#include <vector>

#include "sawstrip/poly.hpp"

namespace sawstrip {

struct RootInterval {
  BigRat lo;
  BigRat hi;

  BigRat width() const { return hi - lo; }
  bool exact() const { return lo == hi; }
};

// Sturm chain of the square-free part of p.
std::vector<Poly> sturm_chain(const Poly& p);

// Number of distinct real roots of p in (a, b].
std::size_t count_roots(const std::vector<Poly>& chain, const BigRat& a, const BigRat& b);

// Certified enclosure of the smallest real root of p in (0, 1], of width at
// most tol, with lo > 0. A rational root found exactly is returned as [r, r].
// nullopt when p has no root in (0, 1] (including nonzero constants).
std::optional<RootInterval> smallest_positive_root(const Poly& p, const BigRat& tol);

}  // namespace sawstrip
