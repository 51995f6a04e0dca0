#pragma once

// Generalized zeta of the d-dimensional torus T^d_N and its N -> infinity
// limit.
//
// For the torus the transition spectrum is {(1/d) sum_j cos(2 pi k_j / N)}, so
//   zeta(T^d_N, u)^-1 = (1 - b^2 u^2)^(d-1)
//       * exp[ N^-d sum_k log((1 + sigma u^2) - (eta u / d) sum_j cos(2 pi k_j / N)) ]
// is exactly the N-point tensor rectangle rule for the limit integral over
// [0, 2 pi)^d. The limit is therefore computed by the same grid sum with N
// doubled until successive values settle.
//
// All routines are templated on the working precision. Double is enough for
// the values themselves; the gaps between finite N and the limit drop below
// double epsilon by N = 16 for typical u, so convergence tables default to a
// 100-digit binary float.

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <thread>
#include <vector>

#include "gzeta/error.hpp"
#include "gzeta/grover.hpp"
#include "gzeta/linalg.hpp"

namespace gzeta {

using extended_real = boost::multiprecision::cpp_bin_float_100;

/// eta and sigma of the 2d-regular torus (q = 2d - 1).
class TorusParams {
 public:
  TorusParams(int d, const CoinParams& coin) : d_(d), coin_(coin) {
    if (d < 1) throw Error(ErrorCode::invalid_parameter, "torus dimension must be >= 1");
  }

  int d() const noexcept { return d_; }
  const CoinParams& coin() const noexcept { return coin_; }
  double eta() const noexcept { return 2.0 * (1 - d_) * coin_.a() + 2.0 * d_ * coin_.b(); }
  double sigma() const noexcept {
    const double a = coin_.a(), b = coin_.b();
    return b * (2.0 * a - b) + 2.0 * d_ * b * (b - a);
  }

 private:
  int d_;
  CoinParams coin_;
};

struct QuadratureResult {
  double value = 0.0;
  int grid_points_per_axis = 0;
  double error_estimate = 0.0;
  bool converged = false;
};

class QuadratureNotConverged : public Error {
 public:
  explicit QuadratureNotConverged(QuadratureResult best)
      : Error(ErrorCode::no_convergence, "torus quadrature did not reach the requested tolerance"),
        best_(best) {}
  const QuadratureResult& best() const noexcept { return best_; }

 private:
  QuadratureResult best_;
};

namespace detail {

/// Mean of log(constant - slope * sum_j cos(2 pi k_j / N)) over {0..N-1}^d.
/// The outer axis is split into one slab per k_1; each slab is summed with
/// compensation and the slabs are combined in increasing k_1, so the result
/// does not depend on `workers`.
template <typename Real>
Real torus_log_mean(int d, int N, const Real& constant, const Real& slope, int workers = 1) {
  using std::cos;
  using std::log;
  std::vector<Real> cosines(static_cast<std::size_t>(N));
  const Real two_pi = boost::math::constants::two_pi<Real>();
  for (int k = 0; k < N; ++k) cosines[static_cast<std::size_t>(k)] = cos(two_pi * k / N);

  std::vector<CompensatedSum<Real>> slabs(static_cast<std::size_t>(N));
  std::vector<char> bad(static_cast<std::size_t>(N), 0);
  auto run_slab = [&](int k1) {
    std::vector<int> index(static_cast<std::size_t>(d), 0);
    index[0] = k1;
    CompensatedSum<Real>& acc = slabs[static_cast<std::size_t>(k1)];
    while (true) {
      Real cos_sum = 0;
      for (int j = 0; j < d; ++j) cos_sum += cosines[static_cast<std::size_t>(index[static_cast<std::size_t>(j)])];
      const Real arg = constant - slope * cos_sum;
      if (!(arg > 0)) {
        bad[static_cast<std::size_t>(k1)] = 1;
        return;
      }
      acc.add(log(arg));
      int j = d - 1;
      while (j >= 1 && ++index[static_cast<std::size_t>(j)] == N) index[static_cast<std::size_t>(j--)] = 0;
      if (j < 1) break;
    }
  };

  workers = std::clamp(workers, 1, N);
  if (workers == 1) {
    for (int k1 = 0; k1 < N; ++k1) run_slab(k1);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (int k1 = w; k1 < N; k1 += workers) run_slab(k1);
      });
    for (auto& t : pool) t.join();
  }
  if (std::any_of(bad.begin(), bad.end(), [](char c) { return c != 0; }))
    throw Error(ErrorCode::outside_domain, "torus log argument is not positive");

  CompensatedSum<Real> total;
  for (const auto& slab : slabs) total.add(slab);
  Real points = 1;
  for (int j = 0; j < d; ++j) points *= N;
  return total.value() / points;
}

template <typename Real>
void require_torus_prefactor(const TorusParams& t, const Real& u) {
  const Real b = t.coin().b();
  if (!(1 - b * b * u * u > 0))
    throw Error(ErrorCode::outside_domain, "1 - b^2 u^2 must be positive");
}

template <typename Real>
Real torus_value(const TorusParams& t, const Real& u, const Real& log_mean) {
  using std::exp;
  using std::pow;
  const Real b = t.coin().b();
  if (t.d() == 1) return exp(log_mean);
  return pow(1 - b * b * u * u, t.d() - 1) * exp(log_mean);
}

inline int max_grid_per_axis(int d) {
  if (d <= 2) return 1 << 12;
  if (d == 3) return 1 << 8;
  int N = 8;
  while (std::pow(2.0 * N, d) <= static_cast<double>(1 << 24)) N *= 2;
  return N;
}

}  // namespace detail

/// Finite-N torus value:
/// (1 - b^2 u^2)^(d-1) exp[N^-d sum_k log((1 + sigma u^2) - (eta u / d) sum_j cos(2 pi k_j / N))].
template <typename Real = double>
Real torus_zeta_reciprocal_finite(int d, int N, const CoinParams& p, const Real& u, int workers = 1) {
  if (N < 3) throw Error(ErrorCode::invalid_parameter, "torus needs N >= 3");
  const TorusParams t(d, p);
  detail::require_torus_prefactor(t, u);
  const Real constant = 1 + Real(t.sigma()) * u * u;
  const Real slope = Real(t.eta()) * u / d;
  return detail::torus_value(t, u, detail::torus_log_mean(d, N, constant, slope, workers));
}

/// Same quantity with the prefactor (1 - u^2)^(d-1) in place of
/// (1 - b^2 u^2)^(d-1). The two coincide only for b = +-1; this variant exists
/// so the choice of prefactor can be tested against the determinant route.
inline double torus_zeta_reciprocal_finite_unit_prefactor(int d, int N, const CoinParams& p, double u) {
  const TorusParams t(d, p);
  const double log_mean = detail::torus_log_mean<double>(d, N, 1.0 + t.sigma() * u * u, t.eta() * u / d);
  return std::pow(1.0 - u * u, d - 1) * std::exp(log_mean);
}

/// (1 - b^2 u^2)^(d-1) exp[ integral over the uniform measure on [0, 2 pi)^d of
/// log((1 + sigma u^2) - (eta u / d) sum_j cos theta_j) ], by the tensor
/// rectangle rule with N = 8, 16, ... until successive values differ by at
/// most `tol`.
template <typename Real = double>
QuadratureResult torus_limit_integral(int d, const CoinParams& p, const Real& u, const Real& tol,
                                      int workers = 1, int max_grid = 0) {
  using std::abs;
  const TorusParams t(d, p);
  detail::require_torus_prefactor(t, u);
  const Real constant = 1 + Real(t.sigma()) * u * u;
  const Real slope = Real(t.eta()) * u / d;
  if (!(constant - abs(Real(t.eta()) * u) > 0))
    throw Error(ErrorCode::outside_domain, "(1 + sigma u^2) - |eta u| must be positive");
  if (max_grid <= 0) max_grid = detail::max_grid_per_axis(d);

  int N = 8;
  Real previous = detail::torus_value(t, u, detail::torus_log_mean(d, N, constant, slope, workers));
  QuadratureResult best{static_cast<double>(previous), N, std::numeric_limits<double>::infinity(), false};
  while (2 * N <= max_grid) {
    N *= 2;
    const Real current = detail::torus_value(t, u, detail::torus_log_mean(d, N, constant, slope, workers));
    const Real gap = abs(current - previous);
    best = {static_cast<double>(current), N, static_cast<double>(gap), gap <= tol};
    if (best.converged) return best;
    previous = current;
  }
  throw QuadratureNotConverged(best);
}

struct ConvergenceRow {
  int N = 0;
  double finite_value = 0.0;
  double gap = 0.0;
};

struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;
  double limit = 0.0;
  int limit_grid = 0;
};

/// |finite(N) - limit| for each requested N, all in `Real` arithmetic. The
/// limit is the rectangle rule at the first doubling whose change is below
/// 100 epsilon of `Real`, capped at `max_points` grid points in total.
template <typename Real = extended_real>
ConvergenceTable torus_convergence_table(int d, const CoinParams& p, double u, const std::vector<int>& sizes,
                                         long long max_points = 1LL << 18) {
  using std::abs;
  const TorusParams t(d, p);
  const Real u_r = u;
  detail::require_torus_prefactor(t, u_r);
  const Real constant = 1 + Real(t.sigma()) * u_r * u_r;
  const Real slope = Real(t.eta()) * u_r / d;
  if (!(constant - abs(Real(t.eta()) * u_r) > 0))
    throw Error(ErrorCode::outside_domain, "(1 + sigma u^2) - |eta u| must be positive");

  std::map<int, Real> cache;
  auto value_at = [&](int N) -> const Real& {
    auto it = cache.find(N);
    if (it == cache.end())
      it = cache.emplace(N, detail::torus_value(t, u_r, detail::torus_log_mean(d, N, constant, slope))).first;
    return it->second;
  };

  const Real tolerance = 100 * std::numeric_limits<Real>::epsilon();
  int N = 8;
  while (true) {
    const double next_points = std::pow(2.0 * N, d);
    if (next_points > static_cast<double>(max_points)) break;
    if (abs(value_at(2 * N) - value_at(N)) <= tolerance) {
      N *= 2;
      break;
    }
    N *= 2;
  }
  ConvergenceTable out;
  const Real limit = value_at(N);
  out.limit = static_cast<double>(limit);
  out.limit_grid = N;
  for (int size : sizes) {
    if (size < 3) throw Error(ErrorCode::invalid_parameter, "torus needs N >= 3");
    const Real& finite = value_at(size);
    out.rows.push_back({size, static_cast<double>(finite), static_cast<double>(abs(finite - limit))});
  }
  return out;
}

/// True iff the Grover matrix of C_N equals its own positive support.
inline bool d1_collapse_check(const Graph& g) {
  const Eigen::MatrixXd grover = build_generalized_grover(g, CoinParams(1.0, 1.0)).values;
  return (grover.array() == positive_support(grover).array()).all();
}

inline bool d1_collapse_check(int N) { return d1_collapse_check(build_cycle(N)); }

}  // namespace gzeta
