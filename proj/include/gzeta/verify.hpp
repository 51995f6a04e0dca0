#pragma once

// Identity checks between independent routes, reported one sample at a time.

#include <json.hpp>

#include <cmath>
#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "gzeta/error.hpp"
#include "gzeta/graph.hpp"
#include "gzeta/grover.hpp"
#include "gzeta/oracle.hpp"
#include "gzeta/zeta.hpp"

namespace gzeta {

struct VerificationReport {
  std::string identity;
  std::string graph;
  double a = 0.0;
  double b = 0.0;
  cplx u;
  cplx lhs;
  cplx rhs;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// pass iff rel_err <= tolerance, or abs_err <= tolerance when |lhs| < 1e-8.
inline VerificationReport make_report(std::string identity, const Graph& g, double a, double b, cplx u,
                                      cplx lhs, cplx rhs, double tolerance) {
  VerificationReport r{std::move(identity), g.name(), a, b, u, lhs, rhs};
  r.abs_err = std::abs(lhs - rhs);
  r.rel_err = std::abs(lhs) > 0.0 ? r.abs_err / std::abs(lhs) : r.abs_err;
  r.tolerance = tolerance;
  r.pass = std::abs(lhs) < 1e-8 ? r.abs_err <= tolerance : r.rel_err <= tolerance;
  return r;
}

inline nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["identity"] = r.identity;
  j["graph"] = r.graph;
  j["a"] = r.a;
  j["b"] = r.b;
  j["u_re"] = r.u.real();
  j["u_im"] = r.u.imag();
  j["lhs_re"] = r.lhs.real();
  j["lhs_im"] = r.lhs.imag();
  j["rhs_re"] = r.rhs.real();
  j["rhs_im"] = r.rhs.imag();
  j["abs_err"] = r.abs_err;
  j["rel_err"] = r.rel_err;
  j["pass"] = r.pass;
  return j;
}

struct VerifyOptions {
  /// Relative tolerance for determinant identities.
  double det_tolerance = 1e-9;
  /// Closed-form eigenvalue product against the determinant.
  double spectral_tolerance = 1e-8;
  /// Base tolerance of the series check, before the tail bound is added.
  double series_tolerance = 1e-8;
  double log_tolerance = 1e-10;
  int series_order = 20;
};

inline const std::vector<std::string_view>& identity_names() {
  static const std::vector<std::string_view> names{
      "konno-sato-generalized", "regular-closed-form", "laplacian-form", "spectral-map",
      "series-vs-det",          "ihara-bass",          "konno-sato-grover", "vt-power"};
  return names;
}

inline std::vector<VerificationReport> verify_identity(std::string_view name, const Graph& g,
                                                       const CoinParams& p, const std::vector<cplx>& samples,
                                                       const VerifyOptions& options = {}) {
  std::vector<VerificationReport> out;
  const std::string id(name);
  if (name == "konno-sato-generalized") {
    for (cplx u : samples)
      out.push_back(make_report(id, g, p.a(), p.b(), u, zeta_reciprocal_det(g, p, u), zeta_reciprocal_vertex_det(g, p, u),
                                options.det_tolerance));
  } else if (name == "regular-closed-form") {
    const auto spectrum = transition_spectrum(g);
    for (cplx u : samples)
      out.push_back(make_report(id, g, p.a(), p.b(), u, zeta_reciprocal_det(g, p, u),
                                zeta_reciprocal_regular(g, p, u, spectrum), options.det_tolerance));
  } else if (name == "laplacian-form") {
    if (!g.is_regular()) throw Error(ErrorCode::not_regular, g.name() + " is not regular");
    const auto spectrum = laplacian_spectrum(g);
    for (cplx u : samples)
      out.push_back(make_report(id, g, p.a(), p.b(), u, zeta_reciprocal_det(g, p, u),
                                zeta_reciprocal_regular_laplacian(g, p, u, spectrum), options.det_tolerance));
  } else if (name == "spectral-map") {
    const SpectrumReport spectrum = spectrum_closed_form(g, p);
    for (cplx u : samples)
      out.push_back(make_report(id, g, p.a(), p.b(), u, zeta_reciprocal_det(g, p, u),
                                zeta_reciprocal_from_spectrum(spectrum, u), options.spectral_tolerance));
  } else if (name == "series-vs-det") {
    const LogZetaSeries series = log_zeta_series(g, p, options.series_order);
    const double rho = spectral_radius(build_generalized_grover(g, p).values);
    for (cplx u : samples) {
      const double tail = series_tail_bound(g.num_arcs(), rho, std::abs(u), options.series_order);
      const cplx product = std::exp(series.evaluate(u)) * zeta_reciprocal_det(g, p, u);
      auto report = make_report(id, g, p.a(), p.b(), u, product, cplx(1.0, 0.0),
                                options.series_tolerance + std::expm1(tail));
      if (!std::isfinite(tail)) report.pass = false;
      out.push_back(std::move(report));
    }
  } else if (name == "ihara-bass") {
    const CoinParams ihara(0.0, 1.0);
    for (cplx u : samples) {
      const cplx rhs = integer_power(1.0 - u * u, g.num_edges() - g.num_vertices()) * ihara_vertex_determinant(g, u);
      out.push_back(make_report(id, g, 0.0, 1.0, u, zeta_reciprocal_det(g, ihara, u), rhs, options.det_tolerance));
    }
  } else if (name == "konno-sato-grover") {
    const CoinParams grover(1.0, 1.0);
    for (cplx u : samples)
      out.push_back(make_report(id, g, 1.0, 1.0, u, zeta_reciprocal_det(g, grover, u), konno_sato_rhs(g, u),
                                options.det_tolerance));
  } else if (name == "vt-power") {
    const auto spectrum = transition_spectrum(g);
    for (cplx u : samples) {
      if (u.imag() != 0.0) throw Error(ErrorCode::outside_domain, "vt-power needs real u");
      const double log_zeta = generalized_log_zeta_reciprocal(g, p, u.real(), spectrum);
      const LogDeterminant det = zeta_reciprocal_log_det(g, p, u);
      if (std::abs(det.arg) > 1e-12)
        throw Error(ErrorCode::outside_domain, "determinant is not positive at this u");
      // A difference of logs is already a relative error of the values.
      auto report = make_report(id, g, p.a(), p.b(), u, g.num_vertices() * log_zeta, det.log_abs,
                                options.log_tolerance);
      report.pass = report.abs_err <= options.log_tolerance;
      out.push_back(std::move(report));
    }
  } else {
    throw Error(ErrorCode::unknown_identity, "unknown identity '" + id + "'");
  }
  return out;
}

/// brute_N_r against tr(U~^r) for r = 1..max_order; absolute tolerance.
inline std::vector<VerificationReport> verify_trace_oracle(const Graph& g, const CoinParams& p, int max_order,
                                                           double tolerance = 1e-10) {
  const LogZetaSeries series = log_zeta_series(g, p, max_order);
  std::vector<VerificationReport> out;
  for (int r = 1; r <= max_order; ++r) {
    const double brute = oracle::brute_N_r(g, p, r);
    auto report = make_report("trace-oracle[r=" + std::to_string(r) + "]", g, p.a(), p.b(), 0.0, brute,
                              series.traces[static_cast<std::size_t>(r - 1)], tolerance);
    report.pass = report.abs_err <= tolerance;
    out.push_back(std::move(report));
  }
  return out;
}

/// Reduced based-cycle counts at vertex 0 against tr((U+)^r) / n.
inline std::vector<VerificationReport> verify_reduced_cycles(const Graph& g, int max_order,
                                                             double rounding_tolerance = 1e-6) {
  const LogZetaSeries series = log_zeta_series(g, CoinParams(0.0, 1.0), max_order);
  std::vector<VerificationReport> out;
  for (int r = 1; r <= max_order; ++r) {
    const auto count = oracle::count_reduced_based_cycles(g, 0, r);
    const double per_vertex = series.traces[static_cast<std::size_t>(r - 1)] / g.num_vertices();
    const double rounded = std::round(per_vertex);
    auto report = make_report("reduced-cycles[r=" + std::to_string(r) + "]", g, 0.0, 1.0, 0.0,
                              static_cast<double>(count), per_vertex, rounding_tolerance);
    report.pass = std::abs(per_vertex - rounded) <= rounding_tolerance &&
                  static_cast<std::int64_t>(rounded) == count;
    out.push_back(std::move(report));
  }
  return out;
}

}  // namespace gzeta
