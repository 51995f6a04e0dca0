#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "gzeta/graph.hpp"
#include "gzeta/graph_io.hpp"

namespace gzeta {
namespace {

void expect_graph_invariants(const Graph& g) {
  const int arcs = g.num_arcs();
  for (int e = 0; e < arcs; ++e) {
    EXPECT_NE(Graph::inverse(e), e);
    EXPECT_EQ(Graph::inverse(Graph::inverse(e)), e);
    EXPECT_GE(g.origin(e), 0);
    EXPECT_LT(g.terminus(e), g.num_vertices());
    EXPECT_NE(g.origin(e), g.terminus(e));
    EXPECT_EQ(g.origin(Graph::inverse(e)), g.terminus(e));
    EXPECT_EQ(g.terminus(Graph::inverse(e)), g.origin(e));
  }
  for (int i = 0; i < g.num_edges(); ++i) EXPECT_LT(g.origin(2 * i), g.terminus(2 * i));
  EXPECT_TRUE(std::is_sorted(g.edges().begin(), g.edges().end()));
  EXPECT_EQ(std::adjacent_find(g.edges().begin(), g.edges().end()), g.edges().end());
  EXPECT_EQ(std::accumulate(g.degrees().begin(), g.degrees().end(), 0), arcs);
}

TEST(Cycle, Triangle) {
  const Graph g = build_cycle(3);
  EXPECT_EQ(g.num_vertices(), 3);
  EXPECT_EQ(g.num_edges(), 3);
  EXPECT_EQ(g.degrees(), (std::vector<int>{2, 2, 2}));
  EXPECT_TRUE(g.vertex_transitive());
  expect_graph_invariants(g);
}

TEST(Cycle, RejectsTwoCycle) {
  EXPECT_THROW(build_cycle(2), Error);
  try {
    build_cycle(2);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::invalid_parameter);
  }
}

TEST(Torus, EdgeCounts) {
  const Graph t23 = build_torus(2, 3);
  EXPECT_EQ(t23.num_vertices(), 9);
  EXPECT_EQ(t23.num_edges(), 18);
  const Graph t34 = build_torus(3, 4);
  EXPECT_EQ(t34.num_vertices(), 64);
  EXPECT_EQ(t34.num_edges(), 192);
  EXPECT_EQ(t34.regular_degree(), 6);
  expect_graph_invariants(t34);
}

TEST(Torus, OneDimensionalTorusIsTheCycle) {
  for (int N = 3; N <= 9; ++N) EXPECT_EQ(build_torus(1, N), build_cycle(N)) << N;
}

TEST(Torus, RejectsSmallN) {
  EXPECT_THROW(build_torus(2, 2), Error);
  EXPECT_THROW(build_torus(0, 4), Error);
}

TEST(Circulant, Families) {
  EXPECT_EQ(build_circulant(5, {1}), build_cycle(5));
  const Graph k5 = build_circulant(5, {1, 2});
  EXPECT_EQ(k5, build_complete(5));
  EXPECT_EQ(k5.regular_degree(), 4);
  EXPECT_THROW(build_circulant(8, {2}), Error);
  // N/2 offset contributes a single neighbour.
  EXPECT_EQ(build_circulant(8, {1, 4}).regular_degree(), 3);
}

TEST(Named, CompleteAndPetersen) {
  const Graph k4 = build_named("complete(4)");
  EXPECT_EQ(k4.num_vertices(), 4);
  EXPECT_EQ(k4.num_edges(), 6);
  const Graph petersen = build_named("petersen");
  EXPECT_EQ(petersen.regular_degree(), 3);
  EXPECT_EQ(petersen.num_edges() - petersen.num_vertices(), 5);
  expect_graph_invariants(petersen);
  EXPECT_THROW(build_named("complete(2)"), Error);
  EXPECT_THROW(build_named("heawood"), Error);
}

TEST(RandomRegular, SixCycle) {
  const Graph g = build_random_regular(6, 2, 1);
  EXPECT_EQ(g.num_edges(), 6);
  EXPECT_EQ(g.regular_degree(), 2);
  // The only connected 2-regular graph on six vertices is C_6.
  const auto spectrum = transition_spectrum(g);
  const auto cycle = transition_spectrum(build_cycle(6));
  for (std::size_t i = 0; i < spectrum.size(); ++i) EXPECT_NEAR(spectrum[i], cycle[i], 1e-12);
}

TEST(RandomRegular, CubicAndReproducible) {
  const Graph g = build_random_regular(8, 3, 7);
  EXPECT_EQ(g.num_edges(), 12);
  EXPECT_EQ(g.regular_degree(), 3);
  EXPECT_FALSE(g.vertex_transitive());
  EXPECT_EQ(g.edges(), build_random_regular(8, 3, 7).edges());
  expect_graph_invariants(g);
}

TEST(RandomRegular, Infeasible) {
  try {
    build_random_regular(5, 3, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::generation_failure);
  }
}

TEST(RandomGraphs, PropertyInvariantsOverSeeds) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 4 + static_cast<int>(seed % 7);
    const Graph g = build_random_connected(n, 0.4, seed);
    expect_graph_invariants(g);
    EXPECT_EQ(g.edges(), build_random_connected(n, 0.4, seed).edges());
    const Graph min2 = build_random_connected(n, 0.5, seed, 2);
    EXPECT_GE(min2.min_degree(), 2);
    if (n > 3 && (n * 3) % 2 == 0) expect_graph_invariants(build_random_regular(n, 3, seed));
  }
}

TEST(Matrices, TriangleLaplacian) {
  const auto m = matrices(build_cycle(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_DOUBLE_EQ(m.transition(i, j), i == j ? 0.0 : 0.5);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.laplacian);
  EXPECT_NEAR(solver.eigenvalues()[0], 0.0, 1e-12);
  EXPECT_NEAR(solver.eigenvalues()[1], 3.0, 1e-12);
  EXPECT_NEAR(solver.eigenvalues()[2], 3.0, 1e-12);
  EXPECT_EQ(m.betti, 1);
}

TEST(Matrices, CompleteGraphTransitionSpectrum) {
  const auto mu = transition_spectrum(build_complete(4));
  ASSERT_EQ(mu.size(), 4u);
  EXPECT_NEAR(mu[0], -1.0 / 3.0, 1e-12);
  EXPECT_NEAR(mu[1], -1.0 / 3.0, 1e-12);
  EXPECT_NEAR(mu[2], -1.0 / 3.0, 1e-12);
  EXPECT_NEAR(mu[3], 1.0, 1e-12);
}

TEST(Matrices, PropertyInvariants) {
  std::vector<Graph> graphs{build_petersen(), build_torus(2, 4), build_circulant(9, {1, 3})};
  for (std::uint64_t seed = 0; seed < 10; ++seed) graphs.push_back(build_random_connected(7, 0.4, seed));
  for (const auto& g : graphs) {
    const auto m = matrices(g);
    EXPECT_TRUE(m.adjacency.isApprox(m.adjacency.transpose()));
    EXPECT_EQ(m.adjacency.diagonal().sum(), 0.0);
    for (int v = 0; v < g.num_vertices(); ++v) {
      EXPECT_EQ(m.adjacency.row(v).sum(), g.degree(v));
      EXPECT_NEAR(m.transition.row(v).sum(), 1.0, 1e-14);
      EXPECT_NEAR(m.laplacian.row(v).sum(), 0.0, 1e-14);
      for (int w = 0; w < g.num_vertices(); ++w) {
        EXPECT_GE(m.transition(v, w), 0.0);
        EXPECT_LE(m.transition(v, w), 1.0);
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.laplacian, Eigen::EigenvaluesOnly);
    EXPECT_GE(solver.eigenvalues().minCoeff(), -1e-10);
    EXPECT_EQ(m.betti, g.num_edges() - g.num_vertices() + 1);
  }
}

TEST(TorusSpectrum, SmallCases) {
  EXPECT_EQ(transition_spectrum_torus(1, 4).size(), 4u);
  const auto s = transition_spectrum_torus(1, 4);
  EXPECT_NEAR(s[0], -1.0, 1e-15);
  EXPECT_NEAR(s[1], 0.0, 1e-15);
  EXPECT_NEAR(s[2], 0.0, 1e-15);
  EXPECT_NEAR(s[3], 1.0, 1e-15);
  const auto s23 = transition_spectrum_torus(2, 3);
  EXPECT_EQ(s23.size(), 9u);
  EXPECT_NEAR(s23.back(), 1.0, 1e-15);
}

TEST(TorusSpectrum, MatchesDenseEigenSolve) {
  for (int d = 1; d <= 3; ++d)
    for (int N = 3; N <= 6; ++N) {
      const auto formula = transition_spectrum_torus(d, N);
      const auto numeric = transition_spectrum(build_torus(d, N));
      ASSERT_EQ(formula.size(), numeric.size());
      for (std::size_t i = 0; i < formula.size(); ++i) EXPECT_NEAR(formula[i], numeric[i], 1e-9) << d << " " << N;
    }
}

TEST(GraphJson, CanonicalRoundTrip) {
  const Graph g = build_torus(2, 3);
  const std::string text = graph_to_json(g);
  EXPECT_TRUE(text.starts_with("{\"n\":9,\"edges\":[[0,1],"));
  EXPECT_EQ(graph_from_json(text), g);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph r = build_random_connected(8, 0.3, seed);
    EXPECT_EQ(graph_from_json(graph_to_json(r)), r);
  }
}

TEST(GraphJson, RejectsViolations) {
  const char* bad[] = {
      R"({"n":3,"edges":[[1,0],[1,2],[0,2]]})",          // u > v
      R"({"n":3,"edges":[[0,2],[0,1],[1,2]]})",          // unsorted
      R"({"n":3,"edges":[[0,1],[0,1],[1,2]]})",          // duplicate
      R"({"n":3,"edges":[[0,0],[0,1],[1,2]]})",          // loop
      R"({"n":4,"edges":[[0,1],[2,3]]})",                // disconnected
      R"({"n":3,"edges":[[0,1],[1,5]]})",                // out of range
      R"({"edges":[[0,1]]})",                            // missing n
      R"({"n":3,"edges":[[0,1,2]]})",                    // not a pair
      R"(not json)",
  };
  for (const char* text : bad) {
    try {
      graph_from_json(text);
      ADD_FAILURE() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::malformed_input) << text;
    }
  }
}

}  // namespace
}  // namespace gzeta
