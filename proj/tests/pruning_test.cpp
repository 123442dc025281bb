#include "isoclique/pruning.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "isoclique/enumerator.hpp"
#include "isoclique/oracle.hpp"
#include "test_support.hpp"

namespace isoclique {
namespace {

using testing::all_vertices;

TEST(ExternalDegree, Examples) {
  EXPECT_EQ(external_degree(testing::triangle(), VertexSet{0, 1, 2}), 0u);
  EXPECT_EQ(external_degree(testing::triangle_pendant(), VertexSet{0, 1, 2}), 1u);
  EXPECT_EQ(external_degree(testing::star(4), VertexSet{0}), 4u);
}

TEST(ExternalDegree, MatchesCutCount) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testing::erdos_renyi(15, 0.3, trial);
    const VertexSet s = testing::random_subset(15, 0.5, rng);
    std::uint64_t cut = 0;
    for (auto [u, v] : g.edges()) {
      const bool iu = std::binary_search(s.begin(), s.end(), u);
      const bool iv = std::binary_search(s.begin(), s.end(), v);
      if (iu != iv) ++cut;
    }
    EXPECT_EQ(external_degree(g, s), cut);
  }
}

TEST(IsLIsolated, Examples) {
  const Graph g = testing::triangle_pendant();
  EXPECT_TRUE(is_l_isolated(g, VertexSet{0, 1, 2}, IsolationParams{1}));  // 1 < 3
  // δ_e({a,d}) = 2 = ℓ·|I|: the inequality is strict.
  EXPECT_FALSE(is_l_isolated(g, VertexSet{0, 3}, IsolationParams{1}));
  EXPECT_TRUE(is_l_isolated(g, VertexSet{0, 3}, IsolationParams{2}));
  EXPECT_TRUE(is_l_isolated(testing::complete(5), all_vertices(testing::complete(5)), IsolationParams{1}));
}

TEST(IsLIsolated, ContractViolations) {
  EXPECT_THROW(is_l_isolated(testing::triangle(), VertexSet{}, IsolationParams{1}), std::invalid_argument);
  EXPECT_THROW(IsolationParams{0}, std::invalid_argument);
  EXPECT_THROW(IsolationParams{-3}, std::invalid_argument);
}

TEST(UpperBounds, SizeAndDegree) {
  EXPECT_EQ(ub_size(5), 5u);
  EXPECT_EQ(ub_size(1), 1u);
  EXPECT_THROW(ub_size(0), std::invalid_argument);

  const Graph tri = testing::triangle();
  EXPECT_EQ(ub_degree(induced_degrees(tri, all_vertices(tri))), 3u);
  const Graph empty5 = testing::graph_from(5, {});
  EXPECT_EQ(ub_degree(induced_degrees(empty5, all_vertices(empty5))), 1u);
}

TEST(UpperBounds, BinaryTreeOfFourLevels) {
  const Graph tree = testing::complete_binary_tree(4);
  ASSERT_EQ(tree.vertex_count(), 15u);
  const VertexSet p = all_vertices(tree);
  const auto induced = induced_degrees(tree, p);
  EXPECT_EQ(ub_softcore(induced), 4u);
  EXPECT_EQ(ub_degeneracy(tree, p, induced), 2u);
  EXPECT_EQ(ub_degree(induced), 4u);
  EXPECT_EQ(oracle::clique_number_bruteforce(tree, p), 2u);
}

TEST(UpperBounds, CompleteGraphIsTightEverywhere) {
  for (std::size_t t = 1; t <= 8; ++t) {
    const Graph k = testing::complete(t);
    const VertexSet p = all_vertices(k);
    const auto induced = induced_degrees(k, p);
    EXPECT_EQ(ub_size(p.size()), t);
    EXPECT_EQ(ub_degree(induced), t);
    EXPECT_EQ(ub_softcore(induced), t);
    EXPECT_EQ(ub_degeneracy(k, p, induced), t);
  }
}

// τ by trying every k from |P| down.
std::size_t softcore_naive(const std::vector<std::uint32_t>& d) {
  for (std::size_t k = d.size(); k >= 1; --k) {
    const auto count = std::count_if(d.begin(), d.end(), [&](auto x) { return x + 1 >= k; });
    if (static_cast<std::size_t>(count) >= k) return k;
  }
  return 0;
}

TEST(UpperBounds, SoftcoreAndDegeneracyMatchNaiveOracles) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 500; ++trial) {
    const Graph g = testing::erdos_renyi(14, 0.1 + 0.1 * (trial % 8), 900 + trial);
    VertexSet p = testing::random_subset(14, 0.7, rng);
    if (p.empty() || p.size() > 10) p.resize(std::min<std::size_t>(p.size(), 10));
    if (p.empty()) continue;
    const auto induced = testing::induced_degrees_pairscan(g, p);
    EXPECT_EQ(ub_degree(induced), *std::max_element(induced.begin(), induced.end()) + 1u);
    EXPECT_EQ(ub_softcore(induced), softcore_naive(induced));
    EXPECT_EQ(ub_degeneracy(g, p, induced), testing::degeneracy_bruteforce(g, p) + 1);
  }
}

TEST(UpperBounds, ChainHoldsOnRandomInducedSubgraphs) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + trial % 10;
    const Graph g = testing::erdos_renyi(n, std::uniform_real_distribution<>(0, 1)(rng), rng());
    const VertexSet p = all_vertices(g);
    const auto induced = induced_degrees(g, p);
    const auto omega = oracle::clique_number_bruteforce(g, p);
    const auto kappa1 = ub_degeneracy(g, p, induced);
    const auto tau = ub_softcore(induced);
    const auto delta1 = ub_degree(induced);
    ASSERT_LE(omega, kappa1);
    ASSERT_LE(kappa1, tau);
    ASSERT_LE(tau, delta1);
    ASSERT_LE(delta1, ub_size(p.size()));
  }
}

TEST(UpperBounds, DegeneracyOnLargerSparseGraph) {
  // A 5-clique attached to a long path has degeneracy 4.
  std::vector<Edge> e;
  for (VertexId u = 0; u < 5; ++u)
    for (VertexId v = u + 1; v < 5; ++v) e.emplace_back(u, v);
  for (VertexId v = 5; v < 200; ++v) e.emplace_back(v - 1, v);
  const Graph g = testing::graph_from(200, e);
  const VertexSet p = all_vertices(g);
  EXPECT_EQ(ub_degeneracy(g, p, induced_degrees(g, p)), 5u);
}

TEST(PruneTest, RootIsNeverPruned) {
  for (std::int64_t ell = 1; ell <= 10; ++ell)
    for (std::int64_t bound = 1; bound <= 10; ++bound)
      EXPECT_FALSE(prune_test(0, 50, 0, bound, IsolationParams{ell}));
}

TEST(PruneTest, WorkedArithmetic) {
  // 50 + 10 - 5 = 55 >= 3 * 6 = 18
  EXPECT_TRUE(prune_test(1, 10, 50, 3, IsolationParams{5}));
  // 55 >= 9 * 6 = 54, but not >= 10 * 6
  EXPECT_TRUE(prune_test(1, 10, 50, 9, IsolationParams{5}));
  EXPECT_FALSE(prune_test(1, 10, 50, 10, IsolationParams{5}));
}

TEST(PruneTest, WorkedArithmeticOnConstructedInstance) {
  // c = 0; P = 1..10 forming a 10-cycle, every vertex adjacent to c;
  // 50 pendant vertices 11..60 hang off c, so δ_e({c}, P) = 50.
  std::vector<Edge> e;
  for (VertexId v = 1; v <= 10; ++v) {
    e.emplace_back(0, v);
    e.emplace_back(v, v == 10 ? 1 : v + 1);
  }
  for (VertexId v = 11; v <= 60; ++v) e.emplace_back(0, v);
  const Graph g = testing::graph_from(61, e);
  VertexSet p(10);
  for (VertexId v = 1; v <= 10; ++v) p[v - 1] = v;
  const VertexSet c{0};
  ASSERT_EQ(ext_cp_from_scratch(g, c, p), 50u);

  NodeContext ctx(g, 1, p, 50, IsolationParams{5});
  ASSERT_LE(omega_bar(Bound::kSoftcore, ctx), 3u);
  EXPECT_TRUE(prune_test(1, 10, 50, 3, IsolationParams{5}));

  // No maximal clique inside {c} ∪ P that contains c is 5-isolated.
  std::size_t checked = 0;
  enumerate_all_maximal(g, [&](const CliqueReport& r) {
    if (r.vertices.front() != 0) return;
    if (std::any_of(r.vertices.begin(), r.vertices.end(), [](VertexId v) { return v > 10; })) return;
    ++checked;
    EXPECT_FALSE(is_l_isolated(g, r.vertices, IsolationParams{5}));
  });
  EXPECT_EQ(checked, 10u);
}

TEST(PruneTest, MonotoneInBound) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> small(0, 30), big(0, 400);
  for (int trial = 0; trial < 20000; ++trial) {
    const std::int64_t c = small(rng), p = 1 + small(rng), ext = big(rng), ell = 1 + small(rng) % 10;
    const std::int64_t w1 = 1 + small(rng);
    if (prune_test(c, p, ext, w1, IsolationParams{ell})) {
      for (std::int64_t w2 = 1; w2 <= w1; ++w2) ASSERT_TRUE(prune_test(c, p, ext, w2, IsolationParams{ell}));
    }
  }
}

// Random clique C and candidate set P ⊆ common neighbors of C.
struct RandomNode {
  VertexSet c;
  VertexSet p;
};

RandomNode random_node(const Graph& g, std::mt19937_64& rng) {
  RandomNode node;
  VertexSet common = all_vertices(g);
  const std::size_t target = 1 + rng() % 3;
  while (node.c.size() < target && !common.empty()) {
    const VertexId v = common[rng() % common.size()];
    node.c.insert(std::lower_bound(node.c.begin(), node.c.end(), v), v);
    common = intersect_with_neighbors(g, common, v);
  }
  std::bernoulli_distribution keep(0.8);
  for (VertexId v : common)
    if (keep(rng)) node.p.push_back(v);
  return node;
}

TEST(LemmaProperty, NestedCandidateSubsetsAreNotIsolated) {
  std::mt19937_64 rng(99);
  std::size_t premise_held = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    const Graph g = testing::erdos_renyi(14, 0.5 + 0.1 * (trial % 4), rng());
    const RandomNode node = random_node(g, rng);
    if (node.c.empty() || node.p.empty()) continue;
    const auto ext = static_cast<std::int64_t>(ext_cp_from_scratch(g, node.c, node.p));
    const auto c = static_cast<std::int64_t>(node.c.size());
    const auto p = static_cast<std::int64_t>(node.p.size());
    const std::int64_t ell = 1 + static_cast<std::int64_t>(rng() % 3);

    VertexSet p2 = testing::random_subset(g.vertex_count(), 0.7, rng);
    VertexSet tmp;
    std::set_intersection(p2.begin(), p2.end(), node.p.begin(), node.p.end(), std::back_inserter(tmp));
    p2 = tmp;
    if (p2.empty()) continue;
    VertexSet p1;
    for (VertexId v : p2)
      if (p1.empty() || rng() % 2) p1.push_back(v);

    const auto s2 = static_cast<std::int64_t>(p2.size());
    if (ext + c * (p - s2) < ell * (c + s2)) continue;
    ++premise_held;
    auto joined = [&](const VertexSet& extra) {
      VertexSet u;
      std::set_union(node.c.begin(), node.c.end(), extra.begin(), extra.end(), std::back_inserter(u));
      return u;
    };
    EXPECT_FALSE(is_l_isolated(g, joined(p2), IsolationParams{ell}));
    EXPECT_FALSE(is_l_isolated(g, joined(p1), IsolationParams{ell}));
  }
  EXPECT_GT(premise_held, 100u);
}

TEST(PruneStrategy, NamesAndStages) {
  EXPECT_EQ(PruneStrategy::combo().stages().size(), 2u);
  EXPECT_EQ(PruneStrategy::combo().stages()[0], Bound::kSize);
  EXPECT_EQ(PruneStrategy::combo().stages()[1], Bound::kSoftcore);
  EXPECT_TRUE(PruneStrategy::none().stages().empty());
  for (auto name : PruneStrategy::names()) EXPECT_EQ(PruneStrategy::parse(name).name(), name);
  EXPECT_THROW(PruneStrategy::parse("omega"), std::invalid_argument);
  EXPECT_THROW(PruneStrategy::parse("fast"), std::invalid_argument);
}

TEST(EvaluateStrategy, ComboShortCircuitsWhenSizePrunes) {
  const Graph g = testing::complete(6);
  const VertexSet p{1, 2};
  // 100 + 2 - 1 >= 2 * 2: size alone prunes.
  NodeContext ctx(g, 1, p, 100, IsolationParams{1});
  EXPECT_EQ(evaluate_strategy(PruneStrategy::combo(), ctx), Bound::kSize);
  EXPECT_EQ(ctx.induced_degree_computations(), 0u);

  NodeContext soft(g, 1, p, 100, IsolationParams{1});
  EXPECT_EQ(evaluate_strategy(PruneStrategy::softcore(), soft), Bound::kSoftcore);
  EXPECT_EQ(soft.induced_degree_computations(), 1u);
}

TEST(EvaluateStrategy, ComboFallsThroughToSoftcore) {
  // P = 10-cycle; size gives 10, softcore gives 3.
  std::vector<Edge> e;
  for (VertexId v = 1; v <= 10; ++v) e.emplace_back(v, v == 10 ? 1 : v + 1);
  const Graph g = testing::graph_from(11, e);
  VertexSet p{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  // LHS = 20 + 10 - 2 = 28; size needs 10 * 3 = 30, softcore 3 * 3 = 9.
  NodeContext ctx(g, 1, p, 20, IsolationParams{2});
  EXPECT_EQ(evaluate_strategy(PruneStrategy::combo(), ctx), Bound::kSoftcore);
  EXPECT_EQ(ctx.induced_degree_computations(), 1u);
}

TEST(EvaluateStrategy, NoneNeverPrunes) {
  const Graph g = testing::complete(4);
  const VertexSet p{1, 2};
  NodeContext ctx(g, 1, p, 1000, IsolationParams{1});
  EXPECT_FALSE(evaluate_strategy(PruneStrategy::none(), ctx).has_value());
  EXPECT_EQ(ctx.induced_degree_computations(), 0u);
}

TEST(EvaluateStrategy, ComboAndSoftcoreAgreeAtEveryNode) {
  std::size_t nodes = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = testing::erdos_renyi(25, 0.3 + 0.01 * static_cast<double>(seed % 30), seed);
    for (std::int64_t ell : {1, 2, 4}) {
      EnumerateOptions opts;
      opts.on_node = [&](const NodeView& node) {
        if (node.p.empty()) return;
        ++nodes;
        NodeContext a(g, node.c.size(), node.p, node.ext_cp, IsolationParams{ell});
        NodeContext b(g, node.c.size(), node.p, node.ext_cp, IsolationParams{ell});
        ASSERT_EQ(evaluate_strategy(PruneStrategy::combo(), a).has_value(),
                  evaluate_strategy(PruneStrategy::softcore(), b).has_value());
      };
      enumerate(g, IsolationParams{ell}, PruneStrategy::none(), [](const CliqueReport&) {}, opts);
    }
  }
  EXPECT_GT(nodes, 1000u);
}

TEST(EvaluateStrategy, SoundAgainstOmegaAtEveryNode) {
  // Whenever C plus a maximum clique of G[P] is ℓ-isolated, no bound may prune.
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = testing::erdos_renyi(11, 0.5, 500 + seed);
    for (std::int64_t ell : {1, 2, 3}) {
      EnumerateOptions opts;
      opts.on_node = [&](const NodeView& node) {
        if (node.p.empty()) return;
        NodeContext ctx(g, node.c.size(), node.p, node.ext_cp, IsolationParams{ell});
        const auto omega = static_cast<std::int64_t>(omega_bar(Bound::kOmega, ctx));
        const auto c = static_cast<std::int64_t>(node.c.size());
        const auto p = static_cast<std::int64_t>(node.p.size());
        const auto ext = static_cast<std::int64_t>(node.ext_cp);
        // Lower bound on the cut of C ∪ T for a maximum clique T of G[P].
        if (ext + c * (p - omega) < ell * (c + omega)) {
          for (Bound b : {Bound::kSize, Bound::kDegree, Bound::kSoftcore, Bound::kDegeneracy}) {
            NodeContext fresh(g, node.c.size(), node.p, node.ext_cp, IsolationParams{ell});
            const auto bound = static_cast<std::int64_t>(omega_bar(b, fresh));
            ASSERT_FALSE(prune_test(c, p, ext, bound, IsolationParams{ell})) << to_string(b);
          }
        }
      };
      enumerate(g, IsolationParams{ell}, PruneStrategy::none(), [](const CliqueReport&) {}, opts);
    }
  }
}

}  // namespace
}  // namespace isoclique
