#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <stdexcept>

#include "isoclique/graph.hpp"

// Exponential reference implementations. They only use Graph accessors and
// share no code with the search engine, so they can be used to check it.
namespace isoclique::oracle {

struct OracleLimit {
  std::size_t max_vertices = 20;
};

class TooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

using CliqueSet = std::set<VertexSet>;

/// Every maximal clique, found by scanning all 2^n vertex subsets.
CliqueSet all_maximal_cliques_bruteforce(const Graph& g, OracleLimit limit = {});

/// Maximal cliques I with fewer than ell·|I| cut edges.
CliqueSet l_isolated_maximal_cliques_bruteforce(const Graph& g, std::int64_t ell,
                                                OracleLimit limit = {});

/// Clique number of G[p]; 0 for empty p.
std::size_t clique_number_bruteforce(const Graph& g, std::span<const VertexId> p,
                                     OracleLimit limit = {});

}  // namespace isoclique::oracle
