#include "isoclique/pruning.hpp"

#include <algorithm>
#include <stdexcept>

#include "isoclique/oracle.hpp"

namespace isoclique {

IsolationParams::IsolationParams(std::int64_t ell) : ell_(ell) {
  if (ell < 1) throw std::invalid_argument("isolation factor must be >= 1, got " + std::to_string(ell));
}

std::uint64_t external_degree(const Graph& g, std::span<const VertexId> i) {
  std::uint64_t total = 0;
  for (VertexId v : i) total += g.degree(v) - intersection_size(g.neighbors(v), i);
  return total;
}

bool is_l_isolated(const Graph& g, std::span<const VertexId> i, IsolationParams params) {
  if (i.empty()) throw std::invalid_argument("isolation is undefined for an empty set");
  return static_cast<std::int64_t>(external_degree(g, i)) <
         params.ell() * static_cast<std::int64_t>(i.size());
}

std::size_t ub_size(std::size_t p_size) {
  if (p_size == 0) throw std::invalid_argument("ub_size: empty candidate set");
  return p_size;
}

std::size_t ub_degree(std::span<const std::uint32_t> induced) {
  if (induced.empty()) throw std::invalid_argument("ub_degree: empty candidate set");
  return *std::max_element(induced.begin(), induced.end()) + std::size_t{1};
}

std::size_t ub_softcore(std::span<const std::uint32_t> induced) {
  if (induced.empty()) throw std::invalid_argument("ub_softcore: empty candidate set");
  const std::size_t n = induced.size();
  // Induced degrees are < n, so a counting sort over 0..n-1 suffices.
  std::vector<std::size_t> count(n, 0);
  for (auto d : induced) ++count[d];
  std::size_t at_least = 0;  // vertices with degree >= k-1
  for (std::size_t k = n; k >= 1; --k) {
    at_least += count[k - 1];
    if (at_least >= k) return k;
  }
  return 1;
}

std::size_t ub_degeneracy(const Graph& g, std::span<const VertexId> p,
                          std::span<const std::uint32_t> induced) {
  if (p.empty()) throw std::invalid_argument("ub_degeneracy: empty candidate set");
  if (induced.size() != p.size()) throw std::invalid_argument("ub_degeneracy: degree list size mismatch");
  const std::size_t n = p.size();

  // G[P] in local CSR form.
  std::vector<std::size_t> offsets(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] = offsets[i] + induced[i];
  std::vector<std::uint32_t> adj(offsets[n]);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t at = offsets[i];
    for_each_common(g.neighbors(p[i]), p, [&](std::size_t, std::size_t j) {
      adj[at++] = static_cast<std::uint32_t>(j);
    });
  }

  // Bucket queue over current degrees: `order` is sorted by degree, `bin[d]`
  // is the first slot of degree d, `pos[v]` is v's slot.
  std::uint32_t max_deg = *std::max_element(induced.begin(), induced.end());
  std::vector<std::uint32_t> deg(induced.begin(), induced.end());
  std::vector<std::size_t> bin(max_deg + 2, 0);
  for (auto d : deg) ++bin[d + 1];
  for (std::size_t d = 1; d < bin.size(); ++d) bin[d] += bin[d - 1];
  std::vector<std::size_t> pos(n);
  std::vector<std::uint32_t> order(n);
  {
    std::vector<std::size_t> fill(bin.begin(), bin.end() - 1);
    for (std::uint32_t v = 0; v < n; ++v) {
      pos[v] = fill[deg[v]]++;
      order[pos[v]] = v;
    }
  }

  std::uint32_t degeneracy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t v = order[i];
    degeneracy = std::max(degeneracy, deg[v]);
    for (std::size_t e = offsets[v]; e < offsets[v + 1]; ++e) {
      const std::uint32_t u = adj[e];
      if (deg[u] <= deg[v]) continue;  // already peeled, or not above v
      // Swap u with the first vertex of its bucket, then shrink the bucket.
      const std::uint32_t du = deg[u];
      const std::size_t first = bin[du];
      const std::uint32_t w = order[first];
      if (w != u) {
        std::swap(order[pos[u]], order[first]);
        std::swap(pos[u], pos[w]);
      }
      bin[du] = first + 1;
      --deg[u];
    }
  }
  return std::size_t{degeneracy} + 1;
}

bool prune_test(std::int64_t c_size, std::int64_t p_size, std::int64_t ext_cp,
                std::int64_t omega_bar, IsolationParams params) {
  const std::int64_t ell = params.ell();
  return ext_cp + c_size * p_size - ell * c_size >= omega_bar * (ell + c_size);
}

std::string_view to_string(Bound b) {
  switch (b) {
    case Bound::kSize: return "size";
    case Bound::kDegree: return "degree";
    case Bound::kSoftcore: return "softcore";
    case Bound::kDegeneracy: return "degeneracy";
    case Bound::kOmega: return "omega";
  }
  return "?";
}

PruneStrategy PruneStrategy::none() { return {"none", {}}; }
PruneStrategy PruneStrategy::size() { return {"size", {Bound::kSize}}; }
PruneStrategy PruneStrategy::degree() { return {"degree", {Bound::kDegree}}; }
PruneStrategy PruneStrategy::softcore() { return {"softcore", {Bound::kSoftcore}}; }
PruneStrategy PruneStrategy::degeneracy() { return {"degeneracy", {Bound::kDegeneracy}}; }
PruneStrategy PruneStrategy::combo() { return {"combo", {Bound::kSize, Bound::kSoftcore}}; }
PruneStrategy PruneStrategy::omega() { return {"omega", {Bound::kOmega}}; }

PruneStrategy PruneStrategy::custom(std::string name, std::vector<Bound> stages) {
  return {std::move(name), std::move(stages)};
}

const std::array<std::string_view, 6>& PruneStrategy::names() {
  static const std::array<std::string_view, 6> kNames = {"none",     "size",       "degree",
                                                         "softcore", "degeneracy", "combo"};
  return kNames;
}

PruneStrategy PruneStrategy::parse(std::string_view name) {
  if (name == "none") return none();
  if (name == "size") return size();
  if (name == "degree") return degree();
  if (name == "softcore") return softcore();
  if (name == "degeneracy") return degeneracy();
  if (name == "combo") return combo();
  throw std::invalid_argument("unknown strategy '" + std::string(name) + "'");
}

std::span<const std::uint32_t> NodeContext::induced_degrees() {
  if (!induced_ready_) {
    induced_ = isoclique::induced_degrees(g_, p_);
    induced_ready_ = true;
    ++induced_computations_;
  }
  return induced_;
}

std::vector<std::uint32_t> NodeContext::take_induced_degrees() {
  induced_degrees();
  induced_ready_ = false;
  return std::move(induced_);
}

std::size_t omega_bar(Bound b, NodeContext& ctx) {
  switch (b) {
    case Bound::kSize: return ub_size(ctx.p().size());
    case Bound::kDegree: return ub_degree(ctx.induced_degrees());
    case Bound::kSoftcore: return ub_softcore(ctx.induced_degrees());
    case Bound::kDegeneracy: return ub_degeneracy(ctx.graph(), ctx.p(), ctx.induced_degrees());
    case Bound::kOmega: return oracle::clique_number_bruteforce(ctx.graph(), ctx.p());
  }
  throw std::logic_error("unhandled bound");
}

std::optional<Bound> evaluate_strategy(const PruneStrategy& strategy, NodeContext& ctx) {
  if (strategy.stages().empty() || ctx.p().empty()) return std::nullopt;
  const auto c = static_cast<std::int64_t>(ctx.c_size());
  const auto p = static_cast<std::int64_t>(ctx.p().size());
  const auto ext = static_cast<std::int64_t>(ctx.ext_cp());
  // Every bound is >= 1, so a node failing the test at omega_bar = 1 cannot be
  // pruned by any stage. This covers the root, where C is empty.
  if (!prune_test(c, p, ext, 1, ctx.params())) return std::nullopt;
  for (Bound b : strategy.stages()) {
    const auto bound = static_cast<std::int64_t>(omega_bar(b, ctx));
    if (prune_test(c, p, ext, bound, ctx.params())) return b;
  }
  return std::nullopt;
}

}  // namespace isoclique
