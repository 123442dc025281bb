#include "isoclique/oracle.hpp"

#include <string>
#include <vector>

namespace isoclique::oracle {

namespace {

using Mask = std::uint32_t;

void check_size(std::size_t n, OracleLimit limit) {
  if (n > limit.max_vertices || n > 31) {
    throw TooLarge("oracle refuses " + std::to_string(n) + " vertices (limit " +
                   std::to_string(limit.max_vertices) + ")");
  }
}

// Adjacency bitmasks of G[members], indexed by position in `members`.
std::vector<Mask> local_adjacency(const Graph& g, std::span<const VertexId> members) {
  std::vector<Mask> adj(members.size(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (i != j && g.has_edge(members[i], members[j])) adj[i] |= Mask{1} << j;
    }
  }
  return adj;
}

// is_clique[s] for every subset s, built from s minus its lowest member.
std::vector<bool> clique_table(const std::vector<Mask>& adj) {
  const std::size_t n = adj.size();
  std::vector<bool> is_clique(std::size_t{1} << n, false);
  is_clique[0] = true;
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    const int low = __builtin_ctz(s);
    const Mask rest = s & (s - 1);
    is_clique[s] = is_clique[rest] && (rest & ~adj[low]) == 0;
  }
  return is_clique;
}

VertexSet to_vertex_set(Mask s, std::span<const VertexId> members) {
  VertexSet out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (s & (Mask{1} << i)) out.push_back(members[i]);
  }
  return out;
}

}  // namespace

CliqueSet all_maximal_cliques_bruteforce(const Graph& g, OracleLimit limit) {
  const std::size_t n = g.vertex_count();
  check_size(n, limit);
  std::vector<VertexId> all(n);
  for (VertexId v = 0; v < n; ++v) all[v] = v;
  const auto adj = local_adjacency(g, all);
  const auto is_clique = clique_table(adj);

  CliqueSet out;
  const Mask full = n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1);
  for (Mask s = 1; s <= full && s != 0; ++s) {
    if (!is_clique[s]) continue;
    bool maximal = true;
    for (std::size_t w = 0; w < n && maximal; ++w) {
      if (s & (Mask{1} << w)) continue;
      if ((s & ~adj[w]) == 0) maximal = false;
    }
    if (maximal) out.insert(to_vertex_set(s, all));
  }
  return out;
}

CliqueSet l_isolated_maximal_cliques_bruteforce(const Graph& g, std::int64_t ell,
                                                OracleLimit limit) {
  if (ell < 1) throw std::invalid_argument("ell must be positive");
  const auto edges = g.edges();
  CliqueSet out;
  for (const auto& clique : all_maximal_cliques_bruteforce(g, limit)) {
    std::vector<bool> inside(g.vertex_count(), false);
    for (VertexId v : clique) inside[v] = true;
    std::int64_t cut = 0;
    for (auto [u, v] : edges) {
      if (inside[u] != inside[v]) ++cut;
    }
    if (cut < ell * static_cast<std::int64_t>(clique.size())) out.insert(clique);
  }
  return out;
}

std::size_t clique_number_bruteforce(const Graph& g, std::span<const VertexId> p,
                                     OracleLimit limit) {
  check_size(p.size(), limit);
  const auto adj = local_adjacency(g, p);
  const auto is_clique = clique_table(adj);
  std::size_t best = 0;
  for (Mask s = 0; s < is_clique.size(); ++s) {
    if (is_clique[s]) best = std::max<std::size_t>(best, __builtin_popcount(s));
  }
  return best;
}

}  // namespace isoclique::oracle
