#pragma once

#include <nlohmann/json.hpp>

#include <vector>

#include "sawstrip/guesser.hpp"
#include "sawstrip/lattice.hpp"
#include "sawstrip/pipeline.hpp"
#include "sawstrip/ratfun.hpp"
#include "sawstrip/width2.hpp"

namespace sawstrip::json {

// Key order is part of the output contract.
using Json = nlohmann::ordered_json;

Json to_json(const Poly& p);
Json to_json(const RatFun& f);
Json to_json(const Walk& w);
Json to_json(const StripSpec& s);
Json to_json(const width2::GrammarDecomposition& d);
Json to_json(const GuessResult& g);
Json to_json(const BoundReport& r);
Json to_json(const MuEntry& e);
Json to_json(const MuTable& t);
Json counts_json(const StripSpec& s, const std::vector<BigInt>& counts);

Poly poly_from_json(const Json& j);
RatFun ratfun_from_json(const Json& j);

}  // namespace sawstrip::json
