#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sawstrip/enumerator.hpp"
#include "sawstrip/error.hpp"
#include "sawstrip/guesser.hpp"
#include "sawstrip/pipeline.hpp"
#include "sawstrip/serialize.hpp"
#include "sawstrip/width2.hpp"

namespace {

using namespace sawstrip;
using json::Json;

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t\r");
    if (b == std::string::npos) throw Error("empty item in list \"" + text + "\"");
    out.push_back(item.substr(b, e - b + 1));
  }
  if (out.empty()) throw Error("empty list");
  return out;
}

std::vector<BigInt> read_terms_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::vector<BigInt> terms;
  std::string line;
  while (std::getline(in, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    terms.push_back(parse_integer(line.substr(b, e - b + 1)));
  }
  return terms;
}

void print(const Json& j) { std::cout << j.dump() << '\n'; }

struct CountArgs {
  int xlo = 0, xhi = 0;
  unsigned n = 0;
  bool json = false;
  bool northbound = false;
};

int run_count(const CountArgs& a) {
  const StripSpec s(a.xlo, a.xhi);
  const auto counts = count_saws(s, a.n);
  if (a.json) {
    print(json::counts_json(s, counts));
  } else {
    for (std::size_t n = 0; n < counts.size(); ++n) std::cout << n << ' ' << counts[n] << '\n';
  }
  return 0;
}

int run_words(const CountArgs& a) {
  const StripSpec s(a.xlo, a.xhi);
  if (a.northbound) {
    if (!(s == width2::kStrip)) throw Error("northbound words exist only for the strip [0,1]");
    const auto words = width2::generate_northbound(a.n);
    if (words.size() > walk_cap_from_env()) throw Error("too many walks");
    Json out = Json::array();
    for (const auto& w : words) {
      const auto d = width2::parse_northbound(w);
      if (a.json) {
        Json item = Json::object();
        item["word"] = w.str();
        item["walk"] = json::to_json(realize(w));
        item["decomposition"] = json::to_json(*d);
        out.push_back(std::move(item));
      } else {
        std::cout << w.str() << ' ' << json::to_json(*d).dump() << '\n';
      }
    }
    if (a.json) print(out);
    return 0;
  }

  const auto words = list_saws(s, a.n, walk_cap_from_env());
  if (a.json) {
    Json out = Json::array();
    for (const auto& w : words) {
      Json item = Json::object();
      item["word"] = w.str();
      item["walk"] = json::to_json(realize(w));
      out.push_back(std::move(item));
    }
    print(out);
  } else {
    for (const auto& w : words) std::cout << w.str() << '\n';
  }
  return 0;
}

struct GfArgs {
  bool northbound = false, full = false, pieces = false, json = false;
  std::optional<unsigned> series;
};

int run_gf(const GfArgs& a) {
  if (a.pieces) {
    using width2::Piece;
    Json out = Json::object();
    for (Piece p : {Piece::U, Piece::LSingle, Piece::LStar, Piece::I, Piece::UPrime}) {
      const RatFun f = width2::piece_gf(p);
      if (a.json) {
        out[width2::piece_name(p)] = json::to_json(f);
      } else {
        std::cout << width2::piece_name(p) << ": " << f.to_string() << '\n';
      }
    }
    if (a.json) print(out);
    return 0;
  }

  const RatFun f = a.northbound ? width2::northbound_gf() : width2::full_gf();
  std::optional<Series> coeffs;
  if (a.series) coeffs = series_expand(f, *a.series);
  if (a.json) {
    Json out = Json::object();
    out["gf"] = json::to_json(f);
    if (coeffs) {
      Json arr = Json::array();
      for (const auto& c : coeffs->coeffs()) arr.push_back(to_string(c));
      out["series"] = std::move(arr);
    }
    print(out);
  } else {
    std::cout << f.to_string() << '\n';
    if (coeffs) {
      for (std::size_t n = 0; n < coeffs->order(); ++n) std::cout << n << ' ' << to_string((*coeffs)[n]) << '\n';
    }
  }
  return 0;
}

int run_theorem(unsigned n) {
  const auto r = width2::verify_theorem(n);
  if (!r.ok) throw Error(r.detail.empty() ? "verification failed" : r.detail);
  std::cout << "OK: oracle == gf == closed form for n ≤ " << n << '\n';
  return 0;
}

struct GuessArgs {
  std::string terms, file;
  unsigned holdout = 3;
  std::optional<unsigned> max_deg;
};

int run_guess(const GuessArgs& a) {
  std::vector<BigInt> terms;
  if (!a.file.empty()) {
    terms = read_terms_file(a.file);
  } else {
    for (const auto& t : split_list(a.terms)) terms.push_back(parse_integer(t));
  }
  const auto outcome = guess_auto(terms, a.holdout, GuessOptions{a.max_deg});
  if (!fitted(outcome)) throw Error("no fit: " + std::get<NoFit>(outcome).reason);
  print(json::to_json(std::get<GuessResult>(outcome)));
  return 0;
}

struct PipelineArgs {
  int xlo = 0, xhi = 0;
  unsigned train = 0, holdout = 2;
  std::string tol;
};

int run_pipeline(const PipelineArgs& a) {
  const StripSpec s(a.xlo, a.xhi);
  const BigRat tol = a.tol.empty() ? default_tolerance() : parse_rational(a.tol);
  const auto outcome = conjecture_strip_gf(s, a.train, a.holdout);
  if (const auto* nf = std::get_if<NoFit>(&outcome)) throw Error("no fit: " + nf->reason);
  const auto& c = std::get<StripConjecture>(outcome);
  const auto bound = connective_bound(s, c.guess, tol);

  Json out = Json::object();
  out["anchor"] = Json::array({0, 0});
  out["strip"] = json::to_json(s);
  out["counts"] = json::counts_json(s, c.counts)["counts"];
  out["guess"] = json::to_json(c.guess);
  out["fresh_terms_checked"] = c.fresh_terms_checked;
  out["bound"] = json::to_json(bound);
  print(out);
  return 0;
}

struct MuArgs {
  std::string widths = "1,2,3";
  std::string tol;
  std::optional<unsigned> train;
  unsigned holdout = 2;
};

int run_mu(const MuArgs& a) {
  std::vector<StripSpec> strips;
  for (const auto& w : split_list(a.widths)) {
    const long width = std::stol(w);
    if (width < 1) throw Error("strip width must be positive");
    strips.emplace_back(0, static_cast<int>(width - 1));
  }
  const BigRat tol = a.tol.empty() ? default_tolerance() : parse_rational(a.tol);
  print(json::to_json(mu_table(strips, a.train, a.holdout, tol)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Self-avoiding walks in vertical lattice strips"};
  app.require_subcommand(1);

  CountArgs count;
  auto* c = app.add_subcommand("count", "number of walks of each length 0..n in the strip");
  c->add_option("--xlo", count.xlo)->required();
  c->add_option("--xhi", count.xhi)->required();
  c->add_option("--n", count.n)->required();
  c->add_flag("--json", count.json);

  CountArgs words;
  auto* w = app.add_subcommand("words", "list the walks of length n");
  w->add_option("--xlo", words.xlo)->default_val(0);
  w->add_option("--xhi", words.xhi)->default_val(1);
  w->add_option("--n", words.n)->required();
  w->add_flag("--northbound", words.northbound, "grammar words with their decompositions (strip [0,1])");
  w->add_flag("--json", words.json);

  GfArgs gf;
  auto* g = app.add_subcommand("gf", "generating functions of the two-column strip");
  auto* which = g->add_option_group("which");
  which->add_flag("--northbound", gf.northbound);
  which->add_flag("--full", gf.full);
  which->add_flag("--pieces", gf.pieces);
  which->require_option(0, 1);
  g->add_option("--series", gf.series, "also print coefficients up to t^N");
  g->add_flag("--json", gf.json);

  unsigned theorem_n = 15;
  auto* th = app.add_subcommand("theorem", "check enumeration, gf and closed form against each other");
  th->add_option("--n", theorem_n)->required();

  GuessArgs guess;
  auto* gu = app.add_subcommand("guess", "fit a rational gf to a sequence");
  auto* src = gu->add_option_group("source");
  src->add_option("--terms", guess.terms, "comma-separated integers c0,c1,...");
  src->add_option("--file", guess.file, "one integer per line");
  src->require_option(1);
  gu->add_option("--holdout", guess.holdout)->default_val(3);
  gu->add_option("--max-deg", guess.max_deg);

  PipelineArgs pipe;
  auto* pi = app.add_subcommand("pipeline", "enumerate, guess, validate and bound one strip");
  pi->add_option("--xlo", pipe.xlo)->required();
  pi->add_option("--xhi", pipe.xhi)->required();
  pi->add_option("--train", pipe.train)->required();
  pi->add_option("--holdout", pipe.holdout)->default_val(2);
  pi->add_option("--tol", pipe.tol);

  MuArgs mu;
  auto* m = app.add_subcommand("mu", "connective-constant bounds for strips [0, w-1]");
  m->add_option("--widths", mu.widths)->default_val("1,2,3");
  m->add_option("--tol", mu.tol);
  m->add_option("--train", mu.train);
  m->add_option("--holdout", mu.holdout)->default_val(2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (c->parsed()) return run_count(count);
    if (w->parsed()) return run_words(words);
    if (g->parsed()) return run_gf(gf);
    if (th->parsed()) return run_theorem(theorem_n);
    if (gu->parsed()) return run_guess(guess);
    if (pi->parsed()) return run_pipeline(pipe);
    if (m->parsed()) return run_mu(mu);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
