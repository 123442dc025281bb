#include "isoclique/generators.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <random>
#include <vector>

namespace isoclique {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// mt19937_64 is fully specified by the standard; the distributions below are
// written out so the same seed gives the same graph with any standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  // Uniform in [0, bound), by rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = engine_();
      if (r >= threshold) return r % bound;
    }
  }

  bool bernoulli(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

std::size_t ba_edge_count(std::size_t n, std::size_t m) { return m * (m + 1) / 2 + m * (n - m - 1); }

Graph generate_ba(const BAConfig& cfg) {
  if (cfg.m < 1 || cfg.m >= cfg.n) throw ConfigError("ba: need 1 <= m < n");
  Rng rng(cfg.seed);
  std::vector<Edge> edges;
  edges.reserve(ba_edge_count(cfg.n, cfg.m));
  // Every edge contributes both endpoints, so a uniform draw from this list
  // picks a vertex with probability proportional to its degree.
  std::vector<VertexId> endpoints;
  endpoints.reserve(2 * ba_edge_count(cfg.n, cfg.m));
  for (VertexId u = 0; u <= cfg.m; ++u) {
    for (VertexId v = u + 1; v <= cfg.m; ++v) {
      edges.emplace_back(u, v);
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }
  std::vector<VertexId> targets;
  for (auto t = static_cast<VertexId>(cfg.m + 1); t < cfg.n; ++t) {
    targets.clear();
    while (targets.size() < cfg.m) {
      const VertexId u = endpoints[rng.below(endpoints.size())];
      if (std::find(targets.begin(), targets.end(), u) == targets.end()) targets.push_back(u);
    }
    for (VertexId u : targets) {
      edges.emplace_back(u, t);
      endpoints.push_back(u);
      endpoints.push_back(t);
    }
  }
  return Graph::from_edges(cfg.n, edges);
}

std::vector<VertexSet> draw_feature_classes(const FeatureModelConfig& cfg) {
  if (cfg.m < 1) throw ConfigError("gnmp: need m >= 1");
  if (!(cfg.p >= 0.0 && cfg.p <= 1.0)) throw ConfigError("gnmp: need 0 <= p <= 1");
  Rng rng(cfg.seed);
  std::vector<VertexSet> holders(cfg.m);
  for (VertexId v = 0; v < cfg.n; ++v) {
    for (std::size_t f = 0; f < cfg.m; ++f) {
      if (rng.bernoulli(cfg.p)) holders[f].push_back(v);
    }
  }
  return holders;
}

Graph generate_feature_model(const FeatureModelConfig& cfg) {
  std::vector<Edge> edges;
  for (const auto& cls : draw_feature_classes(cfg)) {
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (std::size_t j = i + 1; j < cls.size(); ++j) edges.emplace_back(cls[i], cls[j]);
    }
  }
  return Graph::from_edges(cfg.n, edges);
}

Graph generate(const GeneratorConfig& cfg) {
  return std::visit(
      [](const auto& c) -> Graph {
        if constexpr (std::is_same_v<std::decay_t<decltype(c)>, BAConfig>) {
          return generate_ba(c);
        } else {
          return generate_feature_model(c);
        }
      },
      cfg);
}

namespace {

template <class T>
T parse_number(std::string_view key, std::string_view text) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError("invalid value '" + std::string(text) + "' for " + std::string(key));
  }
  return value;
}

std::map<std::string, std::string, std::less<>> parse_fields(std::string_view body) {
  std::map<std::string, std::string, std::less<>> fields;
  while (!body.empty()) {
    const auto comma = body.find(',');
    const auto item = body.substr(0, comma);
    body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw ConfigError("expected key=value, got '" + std::string(item) + "'");
    }
    if (!fields.emplace(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1))).second) {
      throw ConfigError("duplicate key '" + std::string(item.substr(0, eq)) + "'");
    }
  }
  return fields;
}

}  // namespace

GeneratorConfig parse_generator_spec(std::string_view spec, std::uint64_t default_seed) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw ConfigError("generator spec needs a 'kind:' prefix");
  const auto kind = spec.substr(0, colon);
  auto fields = parse_fields(spec.substr(colon + 1));

  auto take = [&](std::string_view key) -> std::optional<std::string> {
    auto it = fields.find(key);
    if (it == fields.end()) return std::nullopt;
    std::string v = it->second;
    fields.erase(it);
    return v;
  };
  auto require = [&](std::string_view key) {
    auto v = take(key);
    if (!v) throw ConfigError(std::string(kind) + ": missing " + std::string(key));
    return *v;
  };
  auto seed_of = [&] {
    auto s = take("seed");
    return s ? parse_number<std::uint64_t>("seed", *s) : default_seed;
  };
  auto reject_extra = [&] {
    if (!fields.empty()) throw ConfigError("unknown key '" + fields.begin()->first + "'");
  };

  if (kind == "ba") {
    BAConfig cfg;
    cfg.n = parse_number<std::size_t>("n", require("n"));
    cfg.m = parse_number<std::size_t>("m", require("m"));
    cfg.seed = seed_of();
    reject_extra();
    if (cfg.m < 1 || cfg.m >= cfg.n) throw ConfigError("ba: need 1 <= m < n");
    return cfg;
  }
  if (kind == "gnmp") {
    FeatureModelConfig cfg;
    cfg.n = parse_number<std::size_t>("n", require("n"));
    cfg.m = parse_number<std::size_t>("m", require("m"));
    cfg.p = parse_number<double>("p", require("p"));
    cfg.seed = seed_of();
    reject_extra();
    if (cfg.m < 1) throw ConfigError("gnmp: need m >= 1");
    if (!(cfg.p >= 0.0 && cfg.p <= 1.0)) throw ConfigError("gnmp: need 0 <= p <= 1");
    return cfg;
  }
  throw ConfigError("unknown generator '" + std::string(kind) + "'");
}

std::string to_spec(const GeneratorConfig& cfg) {
  if (const auto* ba = std::get_if<BAConfig>(&cfg)) {
    return "ba:n=" + std::to_string(ba->n) + ",m=" + std::to_string(ba->m) +
           ",seed=" + std::to_string(ba->seed);
  }
  const auto& fm = std::get<FeatureModelConfig>(cfg);
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, fm.p);
  return "gnmp:n=" + std::to_string(fm.n) + ",m=" + std::to_string(fm.m) + ",p=" +
         std::string(buf, end) + ",seed=" + std::to_string(fm.seed);
}

}  // namespace isoclique
