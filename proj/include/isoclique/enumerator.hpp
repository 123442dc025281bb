#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>

#include "isoclique/graph.hpp"
#include "isoclique/pruning.hpp"

namespace isoclique {

/// One (C, P, X) triple of the search tree together with δ_e(C, P), the
/// number of edges from C to vertices outside C ∪ P.
struct SearchNode {
  VertexSet c;
  VertexSet p;
  VertexSet x;
  std::uint64_t ext_cp = 0;
};

struct RunStats {
  std::uint64_t recursive_calls = 0;
  std::array<std::uint64_t, kBoundCount> prune_firings{};  // indexed by Bound
  std::uint64_t emitted = 0;
  std::uint64_t filtered_at_leaf = 0;   // maximal but not ℓ-isolated
  std::uint64_t ext_cp_checks = 0;      // from-scratch verifications performed
  std::chrono::nanoseconds wall_time{0};

  std::uint64_t total_prune_firings() const;
  double elapsed_ms() const { return std::chrono::duration<double, std::milli>(wall_time).count(); }
};

/// A clique handed to the sink: ascending vertex ids and its external degree.
struct CliqueReport {
  std::span<const VertexId> vertices;
  std::uint64_t external_degree = 0;

  std::size_t size() const noexcept { return vertices.size(); }
};

using CliqueSink = std::function<void(const CliqueReport&)>;

/// Read-only view of a search node on entry, before any pruning decision.
struct NodeView {
  std::span<const VertexId> c;  // insertion order, not sorted
  std::span<const VertexId> p;
  std::span<const VertexId> x;
  std::uint64_t ext_cp = 0;
};

struct EnumerateOptions {
  /// Recompute δ_e(C, P) from scratch at every node and check the
  /// adjacency/disjointness invariants; throws std::logic_error on mismatch.
  bool verify_invariants = false;
  std::function<void(const NodeView&)> on_node;
};

/// The vertex of p ∪ x with the most neighbors in p; ties go to the smaller id.
/// Throws std::invalid_argument when both sets are empty.
VertexId select_pivot(const Graph& g, std::span<const VertexId> p, std::span<const VertexId> x);

/// δ_e(C ∪ {v}, P ∩ N(v)) from the parent's δ_e(C, P). `p_child_size` is
/// |P ∩ N(v)|. Every vertex of P outside N(v) ∪ {v} becomes external to all
/// of C, and v keeps its edges leaving C ∪ (P ∩ N(v)).
std::uint64_t child_ext_cp(std::uint64_t parent_ext_cp, std::size_t c_size, std::size_t p_size,
                           std::size_t p_child_size, std::size_t degree_v);
std::uint64_t child_ext_cp(const SearchNode& parent, VertexId v, std::size_t p_child_size,
                           const Graph& g);

/// Σ_{u ∈ C} |N(u) \ (C ∪ P)|, computed directly.
std::uint64_t ext_cp_from_scratch(const Graph& g, std::span<const VertexId> c,
                                  std::span<const VertexId> p);

/// Reports every ℓ-isolated maximal clique of `g` exactly once, in
/// depth-first order. Nodes are tested against `strategy` on entry; cliques
/// reaching a leaf are still checked against δ_e(C) < ℓ|C| before the sink
/// sees them. PruneStrategy::none() gives the filtering baseline.
RunStats enumerate(const Graph& g, IsolationParams params, const PruneStrategy& strategy,
                   const CliqueSink& sink, const EnumerateOptions& options = {});

/// Reports every maximal clique, with no isolation filter.
RunStats enumerate_all_maximal(const Graph& g, const CliqueSink& sink,
                               const EnumerateOptions& options = {});

}  // namespace isoclique
