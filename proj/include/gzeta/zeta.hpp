#pragma once

// Routes to the (a, b)-zeta function Z_{a,b}(G, u), defined by
//   Z_{a,b}(G, u)^-1 = det(I_2m - u U~(a, b)),
// and to the generalized zeta function zeta_{a,b}(G, u) = Z_{a,b}(G, u)^(1/n)
// of a vertex-transitive graph.
//
// Each route is computed from its own ingredients: the 2m x 2m determinant,
// the n x n vertex determinant, a product over Spec(P) or Spec(Laplacian), the
// exponential of the trace series, and the closed-form eigenvalues. None of
// them calls another, so any pair of them can be compared as an identity.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "gzeta/error.hpp"
#include "gzeta/graph.hpp"
#include "gzeta/grover.hpp"
#include "gzeta/linalg.hpp"

namespace gzeta {

// ---------------------------------------------------------------------------
// Determinant routes

/// det(I_2m - u U~), by pivoted LU.
inline LogDeterminant zeta_reciprocal_log_det(const Graph& g, const CoinParams& p, cplx u) {
  const Eigen::MatrixXcd grover = build_generalized_grover(g, p).values.cast<cplx>();
  const Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(grover.rows(), grover.cols()) - u * grover;
  return log_determinant(m);
}

inline cplx zeta_reciprocal_det(const Graph& g, const CoinParams& p, cplx u) {
  return zeta_reciprocal_log_det(g, p, u).value();
}

/// (1 - b^2 u^2)^(m-n) / prod deg v
///   * det(D {(1 + b(2a - b) u^2) I + b(b - a) u^2 D} - u A_d).
inline cplx zeta_reciprocal_vertex_det(const Graph& g, const CoinParams& p, cplx u) {
  const int n = g.num_vertices();
  const double a = p.a(), b = p.b();
  const Eigen::MatrixXcd A_d = build_A_d(g, p).cast<cplx>();
  Eigen::MatrixXcd m = -u * A_d;
  double degree_product_log = 0.0;
  for (int v = 0; v < n; ++v) {
    const double d = g.degree(v);
    m(v, v) += d * ((1.0 + b * (2.0 * a - b) * u * u) + b * (b - a) * u * u * d);
    degree_product_log += std::log(d);
  }
  const LogDeterminant det = log_determinant(m);
  const cplx prefactor = integer_power(1.0 - b * b * u * u, g.num_edges() - n);
  return prefactor * std::polar(std::exp(det.log_abs - degree_product_log), det.arg);
}

/// Konno-Sato: (1 - u^2)^(m-n) det((1 + u^2) I - 2u P).
inline cplx konno_sato_rhs(const Graph& g, cplx u) {
  const int n = g.num_vertices();
  const Eigen::MatrixXcd P = matrices(g).transition.cast<cplx>();
  const Eigen::MatrixXcd m = (1.0 + u * u) * Eigen::MatrixXcd::Identity(n, n) - 2.0 * u * P;
  return integer_power(1.0 - u * u, g.num_edges() - n) * determinant(m);
}

/// Konno-Sato, degree form: (1 - u^2)^(m-n) / prod deg v * det((1 + u^2) D - 2u A).
inline cplx konno_sato_rhs_degree_form(const Graph& g, cplx u) {
  const auto mats = matrices(g);
  const Eigen::MatrixXcd m = (1.0 + u * u) * mats.degree.cast<cplx>() - 2.0 * u * mats.adjacency.cast<cplx>();
  double degree_product = 1.0;
  for (int d : g.degrees()) degree_product *= d;
  return integer_power(1.0 - u * u, g.num_edges() - g.num_vertices()) * determinant(m) / degree_product;
}

/// det(I - u A + u^2 (D - I)).
inline cplx ihara_vertex_determinant(const Graph& g, cplx u) {
  const auto mats = matrices(g);
  const int n = g.num_vertices();
  const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(n, n);
  const Eigen::MatrixXcd m =
      I - u * mats.adjacency.cast<cplx>() + u * u * (mats.degree.cast<cplx>() - I);
  return determinant(m);
}

/// Ihara-Bass: (1 - u^2)^(r-1) det(I - u A + u^2 (D - I)), r the Betti number.
inline cplx ihara_bass_reciprocal(const Graph& g, cplx u) {
  return integer_power(1.0 - u * u, g.betti() - 1) * ihara_vertex_determinant(g, u);
}

// ---------------------------------------------------------------------------
// Spectral products on regular graphs

namespace detail {

inline int regular_q(const Graph& g) {
  const auto degree = g.regular_degree();
  if (!degree) throw Error(ErrorCode::not_regular, g.name() + " is not regular");
  return *degree - 1;
}

}  // namespace detail

/// (1 - b^2 u^2)^(m-n) prod_{mu in Spec(P)} ((1 + sigma u^2) - eta mu u).
inline cplx zeta_reciprocal_regular(const Graph& g, const CoinParams& p, cplx u,
                                    const std::vector<double>& transition_spectrum) {
  const int q = detail::regular_q(g);
  const double eta = p.eta(q), sigma = p.sigma(q);
  cplx product(1.0, 0.0);
  for (double mu : transition_spectrum) product *= (1.0 + sigma * u * u) - eta * mu * u;
  return integer_power(1.0 - p.b() * p.b() * u * u, g.num_edges() - g.num_vertices()) * product;
}

inline cplx zeta_reciprocal_regular(const Graph& g, const CoinParams& p, cplx u) {
  return zeta_reciprocal_regular(g, p, u, transition_spectrum(g));
}

/// (1 - b^2 u^2)^(m-n) prod_{lambda in Spec(Laplacian)}
///   ((1 - eta u + sigma u^2) + eta u lambda / (q + 1)).
inline cplx zeta_reciprocal_regular_laplacian(const Graph& g, const CoinParams& p, cplx u,
                                              const std::vector<double>& laplacian_eigenvalues) {
  const int q = detail::regular_q(g);
  const double eta = p.eta(q), sigma = p.sigma(q);
  cplx product(1.0, 0.0);
  for (double lambda : laplacian_eigenvalues)
    product *= (1.0 - eta * u + sigma * u * u) + eta * u * lambda / (q + 1.0);
  return integer_power(1.0 - p.b() * p.b() * u * u, g.num_edges() - g.num_vertices()) * product;
}

inline cplx zeta_reciprocal_regular_laplacian(const Graph& g, const CoinParams& p, cplx u) {
  return zeta_reciprocal_regular_laplacian(g, p, u, laplacian_spectrum(g));
}

/// prod (1 - u lambda) over a full eigenvalue multiset of U~.
inline cplx zeta_reciprocal_from_spectrum(const SpectrumReport& spectrum, cplx u) {
  cplx product(1.0, 0.0);
  for (const cplx& lambda : spectrum.values()) product *= 1.0 - u * lambda;
  return product;
}

// ---------------------------------------------------------------------------
// Trace series: log Z_{a,b}(u) = sum_r N_r u^r / r with N_r = tr(U~^r).

struct LogZetaSeries {
  std::string graph;
  double a = 0.0;
  double b = 0.0;
  /// traces[r - 1] = N_r.
  std::vector<double> traces;

  int order() const noexcept { return static_cast<int>(traces.size()); }
  double coefficient(int r) const { return traces[static_cast<std::size_t>(r - 1)] / r; }

  /// sum_{r <= R} N_r u^r / r, Horner form.
  cplx evaluate(cplx u) const {
    cplx acc(0.0, 0.0);
    for (int r = order(); r >= 1; --r) acc = (acc + coefficient(r)) * u;
    return acc;
  }
};

inline LogZetaSeries log_zeta_series(const Graph& g, const CoinParams& p, int order) {
  if (order < 1) throw Error(ErrorCode::invalid_parameter, "series order must be >= 1");
  // Powers are formed in long double so that N_r is correctly rounded to
  // double even when it is large.
  using MatrixXld = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  const MatrixXld grover = build_generalized_grover(g, p).values.cast<long double>();
  LogZetaSeries out{g.name(), p.a(), p.b(), {}};
  out.traces.reserve(static_cast<std::size_t>(order));
  MatrixXld power = grover;
  out.traces.push_back(static_cast<double>(power.trace()));
  for (int r = 2; r <= order; ++r) {
    power = (power * grover).eval();
    out.traces.push_back(static_cast<double>(power.trace()));
  }
  return out;
}

/// Bound on |sum_{r > R} N_r u^r / r| given |N_r| <= 2m rho^r:
/// 2m (rho |u|)^(R+1) / ((R + 1)(1 - rho |u|)). Infinite when rho |u| >= 1.
inline double series_tail_bound(int arcs, double rho, double abs_u, int order) {
  const double x = rho * abs_u;
  if (x >= 1.0) return std::numeric_limits<double>::infinity();
  return arcs * std::pow(x, order + 1) / ((order + 1) * (1.0 - x));
}

// ---------------------------------------------------------------------------
// Generalized zeta of a vertex-transitive regular graph (real u only)

namespace detail {

inline int vertex_transitive_q(const Graph& g) {
  if (!g.vertex_transitive())
    throw Error(ErrorCode::unsupported_graph, g.name() + " is not tagged vertex-transitive");
  return regular_q(g);
}

inline void require_prefactor_domain(double b, double u) {
  if (!(1.0 - b * b * u * u > 0.0))
    throw Error(ErrorCode::outside_domain, "1 - b^2 u^2 must be positive");
}

}  // namespace detail

/// log zeta_{a,b}(G, u)^-1
///   = ((q - 1) / 2) log(1 - b^2 u^2) + (1/n) sum_{mu} log((1 + sigma u^2) - eta mu u).
inline double generalized_log_zeta_reciprocal(const Graph& g, const CoinParams& p, double u,
                                              const std::vector<double>& transition_spectrum) {
  const int q = detail::vertex_transitive_q(g);
  detail::require_prefactor_domain(p.b(), u);
  const double eta = p.eta(q), sigma = p.sigma(q);
  CompensatedSum<double> sum;
  for (double mu : transition_spectrum) {
    const double factor = (1.0 + sigma * u * u) - eta * mu * u;
    if (!(factor > 0.0))
      throw Error(ErrorCode::outside_domain, "spectral factor is not positive");
    sum.add(std::log(factor));
  }
  return 0.5 * (q - 1) * std::log1p(-p.b() * p.b() * u * u) +
         sum.value() / static_cast<double>(transition_spectrum.size());
}

inline double generalized_zeta_reciprocal(const Graph& g, const CoinParams& p, double u,
                                          const std::vector<double>& transition_spectrum) {
  return std::exp(generalized_log_zeta_reciprocal(g, p, u, transition_spectrum));
}

inline double generalized_zeta_reciprocal(const Graph& g, const CoinParams& p, double u) {
  detail::vertex_transitive_q(g);
  return generalized_zeta_reciprocal(g, p, u, transition_spectrum(g));
}

/// Laplacian form: sum over Spec(Laplacian) of
/// log((1 - eta u + sigma u^2) + eta u lambda / (q + 1)).
inline double generalized_zeta_reciprocal_laplacian(const Graph& g, const CoinParams& p, double u) {
  const int q = detail::vertex_transitive_q(g);
  detail::require_prefactor_domain(p.b(), u);
  const double eta = p.eta(q), sigma = p.sigma(q);
  const auto spectrum = laplacian_spectrum(g);
  CompensatedSum<double> sum;
  for (double lambda : spectrum) {
    const double factor = (1.0 - eta * u + sigma * u * u) + eta * u * lambda / (q + 1.0);
    if (!(factor > 0.0))
      throw Error(ErrorCode::outside_domain, "spectral factor is not positive");
    sum.add(std::log(factor));
  }
  return std::exp(0.5 * (q - 1) * std::log1p(-p.b() * p.b() * u * u) +
                  sum.value() / static_cast<double>(spectrum.size()));
}

}  // namespace gzeta
