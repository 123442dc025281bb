#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "isoclique/graph.hpp"

namespace isoclique {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Barabási–Albert preferential attachment: a complete graph on m+1 seed
/// vertices, then every further vertex links to m distinct existing vertices
/// drawn with probability proportional to their degree.
struct BAConfig {
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t seed = 1;
};

/// Feature model G(n, m, p): every vertex holds each of m features
/// independently with probability p, and each feature's holders form a clique.
struct FeatureModelConfig {
  std::size_t n = 0;
  std::size_t m = 0;
  double p = 0.0;
  std::uint64_t seed = 1;
};

using GeneratorConfig = std::variant<BAConfig, FeatureModelConfig>;

Graph generate_ba(const BAConfig& cfg);
Graph generate_feature_model(const FeatureModelConfig& cfg);

/// The holders of each feature, as drawn by generate_feature_model.
std::vector<VertexSet> draw_feature_classes(const FeatureModelConfig& cfg);
Graph generate(const GeneratorConfig& cfg);

/// Parses `ba:n=..,m=..[,seed=..]` or `gnmp:n=..,m=..,p=..[,seed=..]`.
/// A missing seed takes `default_seed`.
GeneratorConfig parse_generator_spec(std::string_view spec, std::uint64_t default_seed = 1);

/// Spec string with every field spelled out, seed included.
std::string to_spec(const GeneratorConfig& cfg);

/// C(m+1, 2) seed-clique edges plus m per attached vertex.
std::size_t ba_edge_count(std::size_t n, std::size_t m);

}  // namespace isoclique
