#include "sawstrip/roots.hpp"

#include "sawstrip/error.hpp"

namespace sawstrip {

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain;
  Poly a = square_free_part(p);
  if (a.is_zero()) return chain;
  Poly b = a.derivative();
  chain.push_back(a);
  while (!b.is_zero()) {
    chain.push_back(b);
    Poly r = -divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return chain;
}

namespace {

std::size_t sign_changes(const std::vector<Poly>& chain, const BigRat& x) {
  std::size_t changes = 0;
  int prev = 0;
  for (const auto& p : chain) {
    const int s = sgn(p.eval(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

}  // namespace

std::size_t count_roots(const std::vector<Poly>& chain, const BigRat& a, const BigRat& b) {
  if (chain.empty() || !(a < b)) return 0;
  return sign_changes(chain, a) - sign_changes(chain, b);
}

std::optional<RootInterval> smallest_positive_root(const Poly& p, const BigRat& tol) {
  if (p.is_zero()) throw Error("zero polynomial has no isolated roots");
  if (tol <= 0) throw Error("tolerance must be positive");
  if (p.degree() == 0) return std::nullopt;

  const auto chain = sturm_chain(p);
  const Poly& sqf = chain.front();

  BigRat lo = 0, hi = 1;
  if (count_roots(chain, lo, hi) == 0) return std::nullopt;

  // Invariant: no root in (0, lo], at least one root in (lo, hi].
  while (true) {
    if (sqf.eval(hi) == 0 && count_roots(chain, lo, hi) == 1) return RootInterval{hi, hi};
    if (lo > 0 && hi - lo <= tol) break;
    BigRat mid = (lo + hi) / 2;
    if (count_roots(chain, lo, mid) > 0)
      hi = std::move(mid);
    else
      lo = std::move(mid);
  }
  return RootInterval{lo, hi};
}

}  // namespace sawstrip
