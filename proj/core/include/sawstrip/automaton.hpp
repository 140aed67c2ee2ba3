#pragma once

#include <cstddef>
#include <vector>

#include "sawstrip/ratfun.hpp"

namespace sawstrip {

// Finite digraph with rational-function edge weights. The path gf from
// `start` to `accept` is the sum over all paths of the product of weights;
// it is computed by solving (I - W) x = e_accept exactly over RatFun.
class WeightedAutomaton {
 public:
  struct Edge {
    std::size_t from;
    std::size_t to;
    RatFun weight;
  };

  explicit WeightedAutomaton(std::size_t states, std::size_t start, std::size_t accept);

  // Throws Error if a state is out of range or den(weight)(0) == 0.
  void add_edge(std::size_t from, std::size_t to, RatFun weight);

  std::size_t states() const { return states_; }
  std::size_t start() const { return start_; }
  std::size_t accept() const { return accept_; }
  const std::vector<Edge>& edges() const { return edges_; }

  // Throws Error("divergent automaton") when I - W is singular.
  RatFun path_gf() const;

 private:
  std::size_t states_;
  std::size_t start_;
  std::size_t accept_;
  std::vector<Edge> edges_;
};

}  // namespace sawstrip
