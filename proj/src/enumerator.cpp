#include "isoclique/enumerator.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

namespace isoclique {

std::uint64_t RunStats::total_prune_firings() const {
  return std::accumulate(prune_firings.begin(), prune_firings.end(), std::uint64_t{0});
}

VertexId select_pivot(const Graph& g, std::span<const VertexId> p, std::span<const VertexId> x) {
  if (p.empty() && x.empty()) throw std::invalid_argument("select_pivot: P and X are both empty");
  VertexId best = 0;
  std::size_t best_count = 0;
  bool found = false;
  auto consider = [&](VertexId u) {
    const std::size_t count = intersection_size(g.neighbors(u), p);
    if (!found || count > best_count || (count == best_count && u < best)) {
      best = u;
      best_count = count;
      found = true;
    }
  };
  for (VertexId u : p) consider(u);
  for (VertexId u : x) consider(u);
  return best;
}

std::uint64_t child_ext_cp(std::uint64_t parent_ext_cp, std::size_t c_size, std::size_t p_size,
                           std::size_t p_child_size, std::size_t degree_v) {
  return parent_ext_cp + c_size * (p_size - p_child_size - 1) + (degree_v - c_size - p_child_size);
}

std::uint64_t child_ext_cp(const SearchNode& parent, VertexId v, std::size_t p_child_size,
                           const Graph& g) {
  if (!std::binary_search(parent.p.begin(), parent.p.end(), v)) {
    throw std::invalid_argument("child_ext_cp: v is not a candidate of the parent node");
  }
  return child_ext_cp(parent.ext_cp, parent.c.size(), parent.p.size(), p_child_size, g.degree(v));
}

std::uint64_t ext_cp_from_scratch(const Graph& g, std::span<const VertexId> c,
                                  std::span<const VertexId> p) {
  VertexSet sorted_c(c.begin(), c.end());
  std::sort(sorted_c.begin(), sorted_c.end());
  std::uint64_t total = 0;
  for (VertexId u : sorted_c) {
    auto row = g.neighbors(u);
    total += row.size() - intersection_size(row, sorted_c) - intersection_size(row, p);
  }
  return total;
}

namespace {

void insert_sorted(VertexSet& s, VertexId v) { s.insert(std::lower_bound(s.begin(), s.end(), v), v); }

void erase_sorted(VertexSet& s, VertexId v) {
  auto it = std::lower_bound(s.begin(), s.end(), v);
  if (it != s.end() && *it == v) s.erase(it);
}

// Depth-first search over (C, P, X) with an explicit stack, so clique size
// never limits depth.
class Engine {
 public:
  Engine(const Graph& g, std::optional<IsolationParams> params, const PruneStrategy& strategy,
         const CliqueSink& sink, const EnumerateOptions& options)
      : g_(g), params_(params), strategy_(strategy), sink_(sink), options_(options) {}

  RunStats run() {
    const auto start = std::chrono::steady_clock::now();
    if (!g_.empty()) {
      VertexSet all(g_.vertex_count());
      std::iota(all.begin(), all.end(), VertexId{0});
      enter(std::move(all), {}, 0);
      loop();
    }
    stats_.wall_time = std::chrono::steady_clock::now() - start;
    return stats_;
  }

 private:
  struct Frame {
    VertexSet p;
    VertexSet x;
    VertexSet branch;  // P \ N(pivot), fixed when the node is expanded
    std::size_t next = 0;
    std::uint64_t ext_cp = 0;
  };

  void loop() {
    while (!stack_.empty()) {
      const std::size_t top = stack_.size() - 1;
      Frame& f = stack_[top];
      if (f.next == f.branch.size()) {
        stack_.pop_back();
        if (!stack_.empty()) finish_child(stack_.back());
        continue;
      }
      const VertexId v = f.branch[f.next];
      VertexSet p_child = intersect_with_neighbors(g_, f.p, v);
      VertexSet x_child = intersect_with_neighbors(g_, f.x, v);
      const std::uint64_t ext_child =
          child_ext_cp(f.ext_cp, clique_.size(), f.p.size(), p_child.size(), g_.degree(v));
      clique_.push_back(v);
      // `f` may dangle once enter() pushes a frame.
      if (!enter(std::move(p_child), std::move(x_child), ext_child)) finish_child(stack_[top]);
    }
  }

  // Moves the vertex just explored from P to X in its parent frame.
  void finish_child(Frame& parent) {
    const VertexId v = parent.branch[parent.next++];
    clique_.pop_back();
    erase_sorted(parent.p, v);
    insert_sorted(parent.x, v);
    // v now lies outside C ∪ P and is adjacent to every vertex of C.
    parent.ext_cp += clique_.size();
  }

  // Processes a node on entry. Returns true when it pushed a frame to expand.
  bool enter(VertexSet p, VertexSet x, std::uint64_t ext_cp) {
    ++stats_.recursive_calls;
    if (options_.on_node) options_.on_node(NodeView{clique_, p, x, ext_cp});
    if (options_.verify_invariants) verify(p, x, ext_cp);

    if (p.empty()) {
      if (x.empty()) leaf(ext_cp);
      return false;
    }

    std::vector<std::uint32_t> induced;
    if (params_) {
      NodeContext ctx(g_, clique_.size(), p, ext_cp, *params_);
      if (auto stage = evaluate_strategy(strategy_, ctx)) {
        ++stats_.prune_firings[static_cast<std::size_t>(*stage)];
        return false;
      }
      induced = ctx.take_induced_degrees();
    } else {
      induced = induced_degrees(g_, p);
    }

    const VertexId pivot = pick_pivot(p, x, induced);
    Frame f;
    auto pivot_row = g_.neighbors(pivot);
    std::set_difference(p.begin(), p.end(), pivot_row.begin(), pivot_row.end(),
                        std::back_inserter(f.branch));
    f.p = std::move(p);
    f.x = std::move(x);
    f.ext_cp = ext_cp;
    stack_.push_back(std::move(f));
    return true;
  }

  // Same rule as select_pivot, reusing |N(u) ∩ P| for u ∈ P from `induced`.
  VertexId pick_pivot(std::span<const VertexId> p, std::span<const VertexId> x,
                      std::span<const std::uint32_t> induced) const {
    VertexId best = p[0];
    std::size_t best_count = induced[0];
    for (std::size_t i = 1; i < p.size(); ++i) {
      if (induced[i] > best_count) {
        best = p[i];
        best_count = induced[i];
      }
    }
    for (VertexId u : x) {
      const std::size_t count = intersection_size(g_.neighbors(u), p);
      if (count > best_count || (count == best_count && u < best)) {
        best = u;
        best_count = count;
      }
    }
    return best;
  }

  void leaf(std::uint64_t ext_c) {
    if (params_ && static_cast<std::int64_t>(ext_c) >=
                       params_->ell() * static_cast<std::int64_t>(clique_.size())) {
      ++stats_.filtered_at_leaf;
      return;
    }
    ++stats_.emitted;
    emit_buffer_.assign(clique_.begin(), clique_.end());
    std::sort(emit_buffer_.begin(), emit_buffer_.end());
    sink_(CliqueReport{emit_buffer_, ext_c});
  }

  void verify(std::span<const VertexId> p, std::span<const VertexId> x, std::uint64_t ext_cp) {
    ++stats_.ext_cp_checks;
    const std::uint64_t expected = ext_cp_from_scratch(g_, clique_, p);
    if (expected != ext_cp) {
      throw std::logic_error("incremental ext_cp " + std::to_string(ext_cp) +
                             " != recomputed " + std::to_string(expected));
    }
    if (!is_valid_vertex_set(g_, p) || !is_valid_vertex_set(g_, x) || intersection_size(p, x) != 0) {
      throw std::logic_error("P and X must be disjoint ascending vertex sets");
    }
    for (VertexId c : clique_) {
      auto row = g_.neighbors(c);
      if (intersection_size(row, p) != p.size() || intersection_size(row, x) != x.size()) {
        throw std::logic_error("a vertex of P or X is not adjacent to all of C");
      }
    }
  }

  const Graph& g_;
  std::optional<IsolationParams> params_;
  const PruneStrategy& strategy_;
  const CliqueSink& sink_;
  const EnumerateOptions& options_;

  std::vector<Frame> stack_;
  VertexSet clique_;
  VertexSet emit_buffer_;
  RunStats stats_;
};

}  // namespace

RunStats enumerate(const Graph& g, IsolationParams params, const PruneStrategy& strategy,
                   const CliqueSink& sink, const EnumerateOptions& options) {
  return Engine(g, params, strategy, sink, options).run();
}

RunStats enumerate_all_maximal(const Graph& g, const CliqueSink& sink,
                               const EnumerateOptions& options) {
  const auto none = PruneStrategy::none();
  return Engine(g, std::nullopt, none, sink, options).run();
}

}  // namespace isoclique
