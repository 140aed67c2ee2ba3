#include "sawstrip/width2.hpp"

#include <algorithm>
#include <sstream>

#include "sawstrip/enumerator.hpp"
#include "sawstrip/error.hpp"

namespace sawstrip::width2 {

namespace {

Step across(int column) { return column == 0 ? Step::Right : Step::Left; }

}  // namespace

std::size_t length(const GrammarDecomposition& d) {
  std::size_t n = d.i_len;
  if (d.u_turn) n += 2 * *d.u_turn + 1;
  for (unsigned l : d.l_parts) n += l + 1;
  if (d.u_prime) n += 2 * *d.u_prime + 2;
  return n;
}

StepWord realize_word(const GrammarDecomposition& d) {
  StepWord w;
  int column = 0;
  if (d.u_turn) {
    w.append(Step::Down, *d.u_turn).append(Step::Right, 1).append(Step::Up, *d.u_turn);
    column = 1;
  }
  for (unsigned l : d.l_parts) {
    w.append(Step::Up, l).append(across(column), 1);
    column = 1 - column;
  }
  w.append(Step::Up, d.i_len);
  if (d.u_prime) w.append(Step::Up, *d.u_prime + 1).append(across(column), 1).append(Step::Down, *d.u_prime);
  return w;
}

const char* piece_name(Piece piece) {
  switch (piece) {
    case Piece::U: return "U";
    case Piece::LSingle: return "L";
    case Piece::LStar: return "L*";
    case Piece::I: return "I";
    case Piece::UPrime: return "U'";
  }
  return "?";
}

RatFun piece_gf(Piece piece) {
  const RatFun one(1);
  const RatFun t = RatFun::t();
  // sum_{i>=0} t^(2i) = 1/(1 - t^2)
  const RatFun even_run = one / (one - t * t);
  switch (piece) {
    case Piece::U: return one + t * even_run;                      // nothing, or d^i r u^i
    case Piece::LSingle: return t * t / (one - t);                 // u^i h, i >= 1
    case Piece::LStar: return one / (one - piece_gf(Piece::LSingle));
    case Piece::I: return one / (one - t);                         // u^k, k >= 0
    case Piece::UPrime: return one + t.num().pow(4) * even_run;    // nothing, or u^(i+1) h d^i
  }
  throw Error("unknown piece");
}

RatFun northbound_gf() {
  return piece_gf(Piece::U) * piece_gf(Piece::LStar) * piece_gf(Piece::I) * piece_gf(Piece::UPrime);
}

RatFun full_gf() { return RatFun(2) * northbound_gf() - RatFun(Poly{1, 1}); }

WeightedAutomaton grammar_automaton() {
  WeightedAutomaton a(4, 0, 3);
  a.add_edge(0, 1, piece_gf(Piece::U));
  a.add_edge(1, 1, piece_gf(Piece::LSingle));
  a.add_edge(1, 2, piece_gf(Piece::I));
  a.add_edge(2, 3, piece_gf(Piece::UPrime));
  return a;
}

RatFun gf_via_weighted_automaton() { return grammar_automaton().path_gf(); }

namespace {

// Fills l_parts and i_len from a budget of `rest` letters.
void each_middle(std::size_t rest, GrammarDecomposition& d,
                 const std::function<void(const GrammarDecomposition&)>& visit) {
  d.i_len = static_cast<unsigned>(rest);
  visit(d);
  for (std::size_t l = 1; l + 1 <= rest; ++l) {
    d.l_parts.push_back(static_cast<unsigned>(l));
    each_middle(rest - l - 1, d, visit);
    d.l_parts.pop_back();
  }
}

}  // namespace

void for_each_decomposition(std::size_t n, const std::function<void(const GrammarDecomposition&)>& visit) {
  GrammarDecomposition d;
  std::vector<std::optional<unsigned>> u_choices{std::nullopt};
  for (unsigned i = 0; 2 * i + 1 <= n; ++i) u_choices.emplace_back(i);
  std::vector<std::optional<unsigned>> up_choices{std::nullopt};
  for (unsigned i = 1; 2 * i + 2 <= n; ++i) up_choices.emplace_back(i);

  for (const auto& u : u_choices) {
    const std::size_t u_len = u ? 2 * *u + 1 : 0;
    for (const auto& up : up_choices) {
      const std::size_t up_len = up ? 2 * *up + 2 : 0;
      if (u_len + up_len > n) continue;
      d.u_turn = u;
      d.u_prime = up;
      d.l_parts.clear();
      each_middle(n - u_len - up_len, d, visit);
    }
  }
}

std::vector<GrammarDecomposition> decompositions_of_length(std::size_t n) {
  std::vector<GrammarDecomposition> out;
  for_each_decomposition(n, [&](const GrammarDecomposition& d) { out.push_back(d); });
  return out;
}

std::uint64_t count_decompositions(std::size_t n) {
  std::uint64_t count = 0;
  for_each_decomposition(n, [&](const GrammarDecomposition&) { ++count; });
  return count;
}

std::vector<StepWord> generate_northbound(std::size_t n) {
  std::vector<StepWord> out;
  for_each_decomposition(n, [&](const GrammarDecomposition& d) { out.push_back(realize_word(d)); });
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<GrammarDecomposition> parse_northbound(const StepWord& w) {
  const std::string& s = w.str();
  const std::size_t n = s.size();
  std::size_t pos = 0;
  int column = 0;
  GrammarDecomposition d;

  auto run = [&](char c) {
    std::size_t k = 0;
    while (pos < n && s[pos] == c) ++pos, ++k;
    return k;
  };

  if (n > 0 && s[0] == 'r') {
    d.u_turn = 0;
    pos = 1;
    column = 1;
  } else if (n > 0 && s[0] == 'd') {
    const std::size_t i = run('d');
    if (pos >= n || s[pos] != 'r') return std::nullopt;
    ++pos;
    const std::size_t start = pos;
    while (pos < n && pos - start < i && s[pos] == 'u') ++pos;
    if (pos - start != i) return std::nullopt;
    d.u_turn = static_cast<unsigned>(i);
    column = 1;
  }

  while (true) {
    const std::size_t ups = run('u');
    if (pos == n) {
      d.i_len = static_cast<unsigned>(ups);
      break;
    }
    if (s[pos] != static_cast<char>(across(column)) || ups == 0) return std::nullopt;
    ++pos;
    if (pos < n && s[pos] == 'd') {
      const std::size_t downs = run('d');
      if (pos != n || ups < downs + 1) return std::nullopt;
      d.u_prime = static_cast<unsigned>(downs);
      d.i_len = static_cast<unsigned>(ups - downs - 1);
      break;
    }
    d.l_parts.push_back(static_cast<unsigned>(ups));
    column = 1 - column;
  }

  if (realize_word(d) != w) return std::nullopt;
  return d;
}

BigInt closed_form_a(std::uint64_t n) {
  if (n == 0) return 1;
  if (n == 1) return 3;
  const BigInt eight_f = 8 * fibonacci(n);
  return n % 2 == 0 ? BigInt(eight_f - BigInt(std::to_string(n))) : BigInt(eight_f - 4);
}

VerificationReport verify_theorem(unsigned n_max) { return verify_theorem(n_max, full_gf()); }

VerificationReport verify_theorem(unsigned n_max, const RatFun& claimed_full_gf) {
  if (n_max < 2) throw Error("verify_theorem needs n_max >= 2");
  VerificationReport report;
  report.n_max = n_max;

  const auto oracle = count_saws(kStrip, n_max);
  const auto full = series_expand(claimed_full_gf, n_max);
  const auto north = series_expand(northbound_gf(), n_max);

  std::ostringstream why;
  for (unsigned n = 0; n <= n_max && report.ok; ++n) {
    const BigRat a = oracle[n];
    const BigRat closed = closed_form_a(n);
    if (a != full[n] || a != closed) {
      report.ok = false;
      report.first_failure = n;
      why << "n=" << n << ": oracle " << to_string(oracle[n]) << ", gf " << to_string(full[n])
          << ", closed form " << to_string(closed);
      break;
    }
    const BigRat generated(BigInt(std::to_string(count_decompositions(n))));
    if (generated != north[n]) {
      report.ok = false;
      report.first_failure = n;
      why << "n=" << n << ": grammar generates " << to_string(generated) << " northbound walks, gf says "
          << to_string(north[n]);
    }
  }
  report.detail = report.ok ? "oracle == gf == closed form for n <= " + std::to_string(n_max) : why.str();
  return report;
}

ClosedFormCertificate certify_closed_form() {
  ClosedFormCertificate cert;
  const RatFun f = full_gf();
  const Poly& den = f.den();

  // Characteristic polynomial of the recurrence: den with reversed coefficients.
  std::vector<BigRat> rev(den.coeffs().rbegin(), den.coeffs().rend());
  const Poly characteristic(std::move(rev));
  // Roots of the closed form: golden pair, double 1, double -1.
  const Poly closed_roots = Poly{-1, -1, 1} * Poly{-1, 1}.pow(2) * Poly{1, 1}.pow(2);
  cert.characteristic_divides = divmod(characteristic, closed_roots).second.is_zero();

  // Both sides obey the recurrence from here on; the closed form only from n = 2.
  const std::size_t order = static_cast<std::size_t>(den.degree());
  const std::size_t start =
      std::max({static_cast<std::size_t>(f.num().degree() + 1), order, 2 + order});
  const auto series = series_expand(f, start + order);
  cert.terms_checked = static_cast<unsigned>(start + order + 1);
  cert.initial_terms_match = true;
  for (std::size_t n = 0; n < cert.terms_checked; ++n)
    if (series[n] != BigRat(closed_form_a(n))) cert.initial_terms_match = false;
  return cert;
}

}  // namespace sawstrip::width2
