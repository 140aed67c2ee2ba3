#include "sawstrip/automaton.hpp"

#include "sawstrip/error.hpp"
#include "sawstrip/linsolve.hpp"

namespace sawstrip {

WeightedAutomaton::WeightedAutomaton(std::size_t states, std::size_t start, std::size_t accept)
    : states_(states), start_(start), accept_(accept) {
  if (start >= states || accept >= states) throw Error("automaton state out of range");
}

void WeightedAutomaton::add_edge(std::size_t from, std::size_t to, RatFun weight) {
  if (from >= states_ || to >= states_) throw Error("automaton state out of range");
  if (weight.den()[0] == 0) throw Error("edge weight has no power series expansion");
  edges_.push_back(Edge{from, to, std::move(weight)});
}

RatFun WeightedAutomaton::path_gf() const {
  // x_s = [s == accept] + sum over edges s -> u of w * x_u
  Matrix<RatFun> a(states_, std::vector<RatFun>(states_, RatFun(0)));
  for (std::size_t i = 0; i < states_; ++i) a[i][i] = RatFun(1);
  for (const auto& e : edges_) a[e.from][e.to] -= e.weight;
  std::vector<RatFun> b(states_, RatFun(0));
  b[accept_] = RatFun(1);

  auto solution = solve_linear_system(std::move(a), std::move(b));
  auto* x = std::get_if<std::vector<RatFun>>(&solution);
  if (x == nullptr) throw Error("divergent automaton");
  return (*x)[start_];
}

}  // namespace sawstrip
