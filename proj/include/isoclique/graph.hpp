#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace isoclique {

using VertexId = std::uint32_t;

// Strictly ascending, duplicate-free list of vertex ids.
using VertexSet = std::vector<VertexId>;

using Edge = std::pair<VertexId, VertexId>;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Counts of input records dropped while building a simple graph.
struct LoadReport {
  std::size_t data_lines = 0;
  std::size_t self_loops = 0;
  std::size_t duplicate_edges = 0;
};

/// Immutable undirected simple graph over dense ids 0..n-1.
///
/// Adjacency is stored as one flat CSR array with every row strictly
/// ascending. Optional string labels map internal ids back to the ids used in
/// the source file.
class Graph {
 public:
  Graph() = default;

  /// Builds a simple graph from an arbitrary edge multiset. Self-loops and
  /// repeated edges (in either orientation) are dropped and tallied in
  /// `report` when provided. Throws std::out_of_range for endpoints >= n.
  static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges,
                          std::vector<std::string> labels = {},
                          LoadReport* report = nullptr);

  std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return neighbors_.size() / 2; }
  bool empty() const noexcept { return vertex_count() == 0; }

  std::span<const VertexId> neighbors(VertexId v) const {
    check_vertex(v);
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }

  std::size_t degree(VertexId v) const {
    check_vertex(v);
    return offsets_[v + 1] - offsets_[v];
  }

  bool has_edge(VertexId u, VertexId v) const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  /// External label of `v`, or its decimal id when the graph is unlabeled.
  std::string label(VertexId v) const;

  /// All edges as (u, v) with u < v, ordered by u then v.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(VertexId v) const {
    if (v >= vertex_count()) throw std::out_of_range("vertex id " + std::to_string(v) + " out of range");
  }

  std::vector<std::size_t> offsets_;
  std::vector<VertexId> neighbors_;
  std::vector<std::string> labels_;
};

inline std::size_t degree(const Graph& g, VertexId v) { return g.degree(v); }

/// Reads a whitespace-separated edge list. Lines starting with '#' or '%' are
/// comments, except `# vertex <label>` which declares a vertex (this keeps
/// isolated vertices and the id order across a write/read round trip).
/// Tokens after the first two on a data line are ignored.
Graph load_edge_list(std::istream& in, LoadReport* report = nullptr);
Graph load_edge_list_file(const std::string& path, LoadReport* report = nullptr);

/// Canonical form: `# vertices` / `# edges` header, one `# vertex` line per
/// vertex in id order, then one `u v` line per edge with u < v.
void write_edge_list(std::ostream& out, const Graph& g);

/// Calls fn(i, j) for every a[i] == b[j], in ascending order. Switches from a
/// linear merge to binary search when one side is much longer than the other.
template <class Fn>
void for_each_common(std::span<const VertexId> a, std::span<const VertexId> b, Fn&& fn) {
  constexpr std::size_t kSkewRatio = 16;
  if (a.empty() || b.empty()) return;
  if (a.size() * kSkewRatio < b.size()) {
    auto lo = b.begin();
    for (std::size_t i = 0; i < a.size(); ++i) {
      lo = std::lower_bound(lo, b.end(), a[i]);
      if (lo == b.end()) return;
      if (*lo == a[i]) fn(i, static_cast<std::size_t>(lo - b.begin()));
    }
    return;
  }
  if (b.size() * kSkewRatio < a.size()) {
    auto lo = a.begin();
    for (std::size_t j = 0; j < b.size(); ++j) {
      lo = std::lower_bound(lo, a.end(), b[j]);
      if (lo == a.end()) return;
      if (*lo == b[j]) fn(static_cast<std::size_t>(lo - a.begin()), j);
    }
    return;
  }
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      fn(i, j);
      ++i;
      ++j;
    }
  }
}

/// s ∩ N(v), ascending.
VertexSet intersect_with_neighbors(const Graph& g, std::span<const VertexId> s, VertexId v);

/// |a ∩ b| for two ascending sequences.
std::size_t intersection_size(std::span<const VertexId> a, std::span<const VertexId> b);

/// Degree of every member of `p` inside G[p], aligned with `p`.
std::vector<std::uint32_t> induced_degrees(const Graph& g, std::span<const VertexId> p);

bool is_valid_vertex_set(const Graph& g, std::span<const VertexId> s);

}  // namespace isoclique
