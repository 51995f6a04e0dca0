#pragma once

// Brute-force ground truth, written without reference to the matrix builders:
// weighted closed arc sequences, reduced based-cycle counts, and cofactor
// determinants for tiny matrices.

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "gzeta/error.hpp"
#include "gzeta/graph.hpp"
#include "gzeta/grover.hpp"

namespace gzeta::oracle {

inline constexpr std::int64_t default_budget = 10'000'000;

/// w(f, e): weight of stepping from arc f onto arc e.
inline double step_weight(const Graph& g, const CoinParams& p, int f, int e) {
  if (g.terminus(f) != g.origin(e)) return 0.0;
  const double coin = (2.0 / g.degree(g.terminus(f)) - 1.0) * p.a();
  return f == Graph::inverse(e) ? coin : coin + p.b();
}

struct CycleRecord {
  std::vector<int> arcs;
  double weight = 0.0;
  /// No step e_{i+1} = e_i^-1, the wrap step from e_r to e_1 included.
  bool reduced = false;
  int based_at = -1;
};

namespace detail {

class Budget {
 public:
  explicit Budget(std::int64_t limit) : remaining_(limit) {}
  void spend() {
    if (--remaining_ < 0)
      throw Error(ErrorCode::budget_exceeded, "cycle enumeration exceeded its extension budget");
  }

 private:
  std::int64_t remaining_;
};

/// Calls visit(path) for every arc sequence (e_1, ..., e_r) with
/// t(e_i) = o(e_{i+1}) and t(e_r) = o(e_1), starting from the given first arcs.
/// `admit(prev, next)` can prune steps.
template <typename Admit, typename Visit>
void for_each_closed_sequence(const Graph& g, int length, const std::vector<int>& first_arcs,
                              Budget& budget, Admit&& admit, Visit&& visit) {
  std::vector<int> path;
  path.reserve(static_cast<std::size_t>(length));
  auto extend = [&](auto&& self) -> void {
    const int last = path.back();
    if (static_cast<int>(path.size()) == length) {
      if (g.terminus(last) == g.origin(path.front())) visit(path);
      return;
    }
    for (int next : g.out_arcs(g.terminus(last))) {
      if (!admit(last, next)) continue;
      budget.spend();
      path.push_back(next);
      self(self);
      path.pop_back();
    }
  };
  for (int e : first_arcs) {
    budget.spend();
    path.assign(1, e);
    extend(extend);
  }
}

inline std::vector<int> all_arcs(const Graph& g) {
  std::vector<int> arcs(static_cast<std::size_t>(g.num_arcs()));
  for (int e = 0; e < g.num_arcs(); ++e) arcs[static_cast<std::size_t>(e)] = e;
  return arcs;
}

inline bool cyclically_reduced(const std::vector<int>& path) {
  for (std::size_t i = 0; i < path.size(); ++i)
    if (path[(i + 1) % path.size()] == Graph::inverse(path[i])) return false;
  return true;
}

}  // namespace detail

/// Every closed arc sequence of length r, with weight and reduced flag.
inline std::vector<CycleRecord> enumerate_cycles(const Graph& g, const CoinParams& p, int r,
                                                 std::int64_t budget = default_budget) {
  if (r < 1) throw Error(ErrorCode::invalid_parameter, "cycle length must be >= 1");
  detail::Budget spent(budget);
  std::vector<CycleRecord> out;
  detail::for_each_closed_sequence(
      g, r, detail::all_arcs(g), spent, [](int, int) { return true; },
      [&](const std::vector<int>& path) {
        CycleRecord record{path, 1.0, detail::cyclically_reduced(path), g.origin(path.front())};
        for (std::size_t i = 0; i < path.size(); ++i)
          record.weight *= step_weight(g, p, path[i], path[(i + 1) % path.size()]);
        out.push_back(std::move(record));
      });
  return out;
}

/// N_r = sum of w(C) over closed arc sequences of length r; equals tr(U~^r).
/// Products and the running sum are kept in long double: N_r reaches 1e4-1e5
/// on small dense graphs, where double rounding alone is ~1e-11 per term.
inline double brute_N_r(const Graph& g, const CoinParams& p, int r,
                        std::int64_t budget = default_budget) {
  if (r < 1) throw Error(ErrorCode::invalid_parameter, "cycle length must be >= 1");
  detail::Budget spent(budget);
  long double total = 0.0L;
  detail::for_each_closed_sequence(
      g, r, detail::all_arcs(g), spent,
      [&](int prev, int next) { return step_weight(g, p, prev, next) != 0.0; },
      [&](const std::vector<int>& path) {
        long double weight = 1.0L;
        for (std::size_t i = 0; i < path.size(); ++i) weight *= step_weight(g, p, path[i], path[(i + 1) % path.size()]);
        total += weight;
      });
  return static_cast<double>(total);
}

/// Closed non-backtracking arc sequences of length r starting at x0, where the
/// wrap step from the last arc back to the first must not backtrack either.
inline std::int64_t count_reduced_based_cycles(const Graph& g, int x0, int r,
                                               std::int64_t budget = default_budget) {
  if (g.min_degree() < 2)
    throw Error(ErrorCode::invalid_parameter, "reduced cycle counts need minimum degree >= 2");
  if (x0 < 0 || x0 >= g.num_vertices()) throw Error(ErrorCode::invalid_parameter, "base vertex out of range");
  if (r < 1) throw Error(ErrorCode::invalid_parameter, "cycle length must be >= 1");
  detail::Budget spent(budget);
  const auto first = g.out_arcs(x0);
  std::int64_t count = 0;
  detail::for_each_closed_sequence(
      g, r, std::vector<int>(first.begin(), first.end()), spent,
      [](int prev, int next) { return next != Graph::inverse(prev); },
      [&](const std::vector<int>& path) {
        if (path.front() != Graph::inverse(path.back())) ++count;
      });
  return count;
}

/// Cofactor expansion along the first row.
template <typename Derived>
typename Derived::Scalar naive_det(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw Error(ErrorCode::invalid_parameter, "naive_det needs a square matrix");
  if (n > 8) throw Error(ErrorCode::dimension_too_large, "naive_det is limited to 8 x 8");
  if (n == 0) return Scalar(1);
  if (n == 1) return m(0, 0);
  Scalar total(0);
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> minor(n - 1, n - 1);
  for (Eigen::Index col = 0; col < n; ++col) {
    if (m(0, col) == Scalar(0)) continue;
    for (Eigen::Index i = 1; i < n; ++i)
      for (Eigen::Index j = 0, k = 0; j < n; ++j)
        if (j != col) minor(i - 1, k++) = m(i, j);
    const Scalar term = m(0, col) * naive_det(minor);
    total += (col % 2 == 0) ? term : -term;
  }
  return total;
}

}  // namespace gzeta::oracle
