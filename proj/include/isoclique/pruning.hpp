#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "isoclique/graph.hpp"

namespace isoclique {

/// Isolation factor ℓ. A vertex set I is ℓ-isolated when fewer than ℓ·|I|
/// edges leave it.
class IsolationParams {
 public:
  explicit IsolationParams(std::int64_t ell);
  std::int64_t ell() const noexcept { return ell_; }

 private:
  std::int64_t ell_;
};

/// Number of edges with exactly one endpoint in `i`.
std::uint64_t external_degree(const Graph& g, std::span<const VertexId> i);

/// external_degree(g, i) < ℓ·|i|. Throws std::invalid_argument for empty `i`.
bool is_l_isolated(const Graph& g, std::span<const VertexId> i, IsolationParams params);

// Upper bounds on the clique number of G[P]. Each requires a non-empty P and
// returns a value >= 1. `induced` holds the degree of every member of P inside
// G[P], aligned with P.

std::size_t ub_size(std::size_t p_size);
std::size_t ub_degree(std::span<const std::uint32_t> induced);

/// Largest k such that at least k vertices have induced degree >= k-1.
std::size_t ub_softcore(std::span<const std::uint32_t> induced);

/// Degeneracy of G[P] plus one, by bucket-queue min-degree peeling.
std::size_t ub_degeneracy(const Graph& g, std::span<const VertexId> p,
                          std::span<const std::uint32_t> induced);

/// True when no ℓ-isolated maximal clique can lie below a search node:
///   ext_cp + |C||P| - ℓ|C| >= omega_bar · (ℓ + |C|)
/// for any `omega_bar` that upper-bounds the clique number of G[P].
bool prune_test(std::int64_t c_size, std::int64_t p_size, std::int64_t ext_cp,
                std::int64_t omega_bar, IsolationParams params);

enum class Bound : std::uint8_t { kSize, kDegree, kSoftcore, kDegeneracy, kOmega };
inline constexpr std::size_t kBoundCount = 5;

std::string_view to_string(Bound b);

/// An ordered list of bounds tried at every search node; the node is pruned
/// by the first stage whose test fires. An empty list never prunes.
class PruneStrategy {
 public:
  static PruneStrategy none();
  static PruneStrategy size();
  static PruneStrategy degree();
  static PruneStrategy softcore();
  static PruneStrategy degeneracy();
  /// size, then softcore when size does not prune.
  static PruneStrategy combo();
  /// Exact clique number via brute force. Test use only: refuses |P| > 20.
  static PruneStrategy omega();
  static PruneStrategy custom(std::string name, std::vector<Bound> stages);

  /// Accepts none|size|degree|softcore|degeneracy|combo.
  static PruneStrategy parse(std::string_view name);
  static const std::array<std::string_view, 6>& names();

  const std::string& name() const noexcept { return name_; }
  std::span<const Bound> stages() const noexcept { return stages_; }

  friend bool operator==(const PruneStrategy&, const PruneStrategy&) = default;

 private:
  PruneStrategy(std::string name, std::vector<Bound> stages)
      : name_(std::move(name)), stages_(std::move(stages)) {}

  std::string name_;
  std::vector<Bound> stages_;
};

/// The quantities a prune decision may look at for one search node. Induced
/// degrees of G[P] are computed at most once, on first request.
class NodeContext {
 public:
  NodeContext(const Graph& g, std::size_t c_size, std::span<const VertexId> p,
              std::uint64_t ext_cp, IsolationParams params)
      : g_(g), c_size_(c_size), p_(p), ext_cp_(ext_cp), params_(params) {}

  const Graph& graph() const noexcept { return g_; }
  std::size_t c_size() const noexcept { return c_size_; }
  std::span<const VertexId> p() const noexcept { return p_; }
  std::uint64_t ext_cp() const noexcept { return ext_cp_; }
  IsolationParams params() const noexcept { return params_; }

  std::span<const std::uint32_t> induced_degrees();
  bool has_induced_degrees() const noexcept { return induced_ready_; }
  std::size_t induced_degree_computations() const noexcept { return induced_computations_; }

  /// Moves the cached induced degrees out, computing them if needed.
  std::vector<std::uint32_t> take_induced_degrees();

 private:
  const Graph& g_;
  std::size_t c_size_;
  std::span<const VertexId> p_;
  std::uint64_t ext_cp_;
  IsolationParams params_;
  std::vector<std::uint32_t> induced_;
  bool induced_ready_ = false;
  std::size_t induced_computations_ = 0;
};

/// Value of one bound for the node's G[P].
std::size_t omega_bar(Bound b, NodeContext& ctx);

/// Runs the strategy's stages in order and returns the stage that pruned, or
/// nullopt when the node must be expanded.
std::optional<Bound> evaluate_strategy(const PruneStrategy& strategy, NodeContext& ctx);

}  // namespace isoclique
