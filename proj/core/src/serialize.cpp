#include "sawstrip/serialize.hpp"

#include "sawstrip/error.hpp"

namespace sawstrip::json {

namespace {

constexpr unsigned kMuDigits = 24;

std::string decimal_or_bound(const BigRat& v, Rounding mode) {
  if (auto exact = exact_decimal(v)) return *exact;
  return rounded_decimal(v, kMuDigits, mode);
}

Json interval(const RootInterval& r) {
  return Json::array({decimal_or_bound(r.lo, Rounding::Down), decimal_or_bound(r.hi, Rounding::Up)});
}

}  // namespace

Json to_json(const Poly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

Json to_json(const RatFun& f) {
  Json out = Json::object();
  out["num"] = to_json(f.num());
  out["den"] = to_json(f.den());
  return out;
}

Json to_json(const Walk& w) {
  Json out = Json::array();
  for (const auto& p : w) out.push_back(Json::array({p.x, p.y}));
  return out;
}

Json to_json(const StripSpec& s) { return Json::array({s.xlo(), s.xhi()}); }

Json to_json(const width2::GrammarDecomposition& d) {
  Json out = Json::object();
  out["u"] = d.u_turn ? Json(*d.u_turn) : Json(nullptr);
  out["l"] = Json(d.l_parts);
  out["i"] = d.i_len;
  out["uprime"] = d.u_prime ? Json(*d.u_prime) : Json(nullptr);
  return out;
}

Json to_json(const GuessResult& g) {
  Json out = Json::object();
  out["gf"] = to_json(g.gf);
  out["num_deg"] = g.num_deg;
  out["den_deg"] = g.den_deg;
  out["terms_used"] = g.terms_used;
  out["validated_terms"] = g.validated_terms;
  return out;
}

Json to_json(const BoundReport& r) {
  Json out = Json::object();
  out["strip"] = to_json(r.strip);
  out["gf"] = to_json(r.gf);
  out["rho"] = interval(r.rho);
  out["mu"] = interval(r.mu);
  return out;
}

Json to_json(const MuEntry& e) {
  Json out = e.report ? to_json(*e.report) : Json::object({{"strip", to_json(e.strip)}});
  out["status"] = e.status;
  if (!e.reason.empty()) out["reason"] = e.reason;
  return out;
}

Json to_json(const MuTable& t) {
  Json out = Json::object();
  out["anchor"] = Json::array({0, 0});
  Json reports = Json::array();
  for (const auto& e : t.entries) reports.push_back(to_json(e));
  out["reports"] = std::move(reports);
  out["monotone"] = t.monotone;
  return out;
}

Json counts_json(const StripSpec& s, const std::vector<BigInt>& counts) {
  Json out = Json::object();
  out["strip"] = to_json(s);
  Json arr = Json::array();
  for (const auto& c : counts) arr.push_back(to_string(c));
  out["counts"] = std::move(arr);
  return out;
}

Poly poly_from_json(const Json& j) {
  if (!j.is_array()) throw Error("polynomial must be a JSON array");
  std::vector<BigRat> coeffs;
  for (const auto& c : j) {
    if (!c.is_string()) throw Error("polynomial coefficients must be decimal strings");
    coeffs.push_back(parse_rational(c.get<std::string>()));
  }
  return Poly(std::move(coeffs));
}

RatFun ratfun_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw Error("rational function must have \"num\" and \"den\"");
  return RatFun(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

}  // namespace sawstrip::json
