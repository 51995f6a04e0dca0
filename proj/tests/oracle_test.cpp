#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "gzeta/graph.hpp"
#include "gzeta/linalg.hpp"
#include "gzeta/oracle.hpp"

namespace gzeta {
namespace {

ErrorCode thrown_code(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no gzeta::Error thrown";
  return ErrorCode::invalid_parameter;
}

double matrix_power_trace(const Eigen::MatrixXd& m, int r) {
  Eigen::MatrixXd power = Eigen::MatrixXd::Identity(m.rows(), m.cols());
  for (int i = 0; i < r; ++i) power = (power * m).eval();
  return power.trace();
}

TEST(WalkSums, AgreeWithMatrixPowers) {
  std::vector<Graph> graphs{build_complete(4), build_cycle(5), Graph::from_edges(4, {{0, 1}, {1, 2}, {1, 3}})};
  for (std::uint64_t seed = 0; seed < 4; ++seed) graphs.push_back(build_random_connected(5, 0.5, seed));
  for (const auto& g : graphs)
    for (double a : {0.0, 0.6, 1.0})
      for (double b : {-1.5, 0.5, 2.0}) {
        const CoinParams p(a, b);
        const Eigen::MatrixXd u = build_generalized_grover(g, p).values;
        for (int r = 1; r <= 6; ++r)
          EXPECT_NEAR(oracle::brute_N_r(g, p, r), matrix_power_trace(u, r), 1e-9 * std::max(1.0, std::abs(matrix_power_trace(u, r))))
              << g.name() << " r=" << r;
      }
}

TEST(WalkSums, EnumerationIsConsistent) {
  const Graph g = build_complete(4);
  for (int r = 1; r <= 4; ++r) {
    const CoinParams p(0.3, 0.8);
    const auto cycles = oracle::enumerate_cycles(g, p, r);
    double total = 0.0;
    for (const auto& c : cycles) {
      total += c.weight;
      EXPECT_EQ(static_cast<int>(c.arcs.size()), r);
      EXPECT_EQ(c.based_at, g.origin(c.arcs.front()));
    }
    EXPECT_NEAR(total, oracle::brute_N_r(g, p, r), 1e-12);
    // With a = 0 and b = 1 only the cyclically reduced sequences carry weight (1).
    int reduced = 0;
    double nb_total = 0.0;
    for (const auto& c : oracle::enumerate_cycles(g, CoinParams(0.0, 1.0), r)) {
      reduced += c.reduced;
      nb_total += c.weight;
    }
    EXPECT_EQ(nb_total, reduced);
  }
}

TEST(ReducedCycles, SmallGraphs) {
  const Graph c4 = build_cycle(4);
  EXPECT_EQ(oracle::count_reduced_based_cycles(c4, 0, 4), 2);
  EXPECT_EQ(oracle::count_reduced_based_cycles(c4, 0, 3), 0);
  EXPECT_EQ(oracle::count_reduced_based_cycles(c4, 0, 8), 2);
  EXPECT_EQ(oracle::count_reduced_based_cycles(build_complete(4), 0, 3), 6);
  EXPECT_EQ(thrown_code([] { oracle::count_reduced_based_cycles(Graph::from_edges(3, {{0, 1}, {1, 2}}), 0, 3); }),
            ErrorCode::invalid_parameter);
}

TEST(ReducedCycles, NonBacktrackingTraceOverVertices) {
  // Summed over all base vertices, the counts equal tr(B^r) of the
  // non-backtracking matrix.
  for (const Graph& g : {build_petersen(), build_complete(5), build_random_connected(6, 0.6, 4, 2)}) {
    const Eigen::MatrixXd nb = build_generalized_grover(g, CoinParams(0.0, 1.0)).values;
    for (int r = 1; r <= 7; ++r) {
      std::int64_t total = 0;
      for (int v = 0; v < g.num_vertices(); ++v) total += oracle::count_reduced_based_cycles(g, v, r);
      EXPECT_NEAR(static_cast<double>(total), matrix_power_trace(nb, r), 1e-8) << g.name() << " r=" << r;
    }
  }
}

TEST(CofactorDeterminant, KnownValues) {
  EXPECT_EQ(oracle::naive_det(Eigen::MatrixXd::Identity(5, 5)), 1.0);
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(2, 2);
  d.diagonal() << 2.0, 3.0;
  EXPECT_EQ(oracle::naive_det(d), 6.0);
  Eigen::Matrix3d m;
  m << 2, -1, 0, -1, 2, -1, 0, -1, 2;
  EXPECT_NEAR(oracle::naive_det(m), 4.0, 1e-15);
}

TEST(CofactorDeterminant, AgreesWithLU) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::MatrixXcd m(6, 6);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) m(i, j) = cplx(dist(rng), dist(rng));
    const cplx naive = oracle::naive_det(m);
    EXPECT_LE(std::abs(naive - determinant(m)), 1e-12 * std::max(1.0, std::abs(naive)));
  }
}

TEST(CofactorDeterminant, RefusesLargeMatrices) {
  EXPECT_EQ(thrown_code([] { oracle::naive_det(Eigen::MatrixXd::Identity(9, 9)); }), ErrorCode::dimension_too_large);
}

TEST(Budget, EnumerationStopsCleanly) {
  EXPECT_EQ(thrown_code([] { oracle::brute_N_r(build_petersen(), CoinParams(0.5, 1.0), 10, 1000); }),
            ErrorCode::budget_exceeded);
  EXPECT_EQ(thrown_code([] { oracle::enumerate_cycles(build_petersen(), CoinParams(0.5, 1.0), 10, 1000); }),
            ErrorCode::budget_exceeded);
  EXPECT_EQ(thrown_code([] { oracle::count_reduced_based_cycles(build_petersen(), 0, 30, 1000); }),
            ErrorCode::budget_exceeded);
}

}  // namespace
}  // namespace gzeta
