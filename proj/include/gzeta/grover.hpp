#pragma once

// The generalized Grover matrix of a graph and its closed-form spectrum on
// regular graphs.
//
// Rows and columns are indexed by arcs. Entry (e, f) is the weight of moving
// from arc f onto arc e, which is nonzero only when t(f) = o(e):
//
//   (2 / deg t(f) - 1) a + b   if f != e^-1
//   (2 / deg t(f) - 1) a       if f == e^-1
//
// a = b = 1 is the Grover walk, a = 0, b = 1 its positive support, and
// b = 1 the one-parameter extension U_a.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include "gzeta/error.hpp"
#include "gzeta/graph.hpp"
#include "gzeta/linalg.hpp"

namespace gzeta {

class CoinParams {
 public:
  CoinParams(double a, double b) : a_(a), b_(b) {
    if (!(a >= 0.0 && a <= 1.0))
      throw Error(ErrorCode::invalid_parameter, "coin parameter a must lie in [0, 1]");
    if (!std::isfinite(b)) throw Error(ErrorCode::invalid_parameter, "coin parameter b must be finite");
  }

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }

  /// eta = (1 - q) a + b (q + 1) for a (q + 1)-regular graph.
  double eta(int q) const noexcept { return (1.0 - q) * a_ + b_ * (q + 1.0); }
  /// sigma = b ((1 - q) a + b q).
  double sigma(int q) const noexcept { return b_ * ((1.0 - q) * a_ + b_ * q); }

  friend bool operator==(const CoinParams&, const CoinParams&) = default;

 private:
  double a_;
  double b_;
};

enum class OperatorTag { generalized_grover, grover, positive_support };

struct ArcMatrix {
  Eigen::MatrixXd values;
  OperatorTag tag = OperatorTag::generalized_grover;
};

inline ArcMatrix build_generalized_grover(const Graph& g, const CoinParams& p) {
  const int arcs = g.num_arcs();
  ArcMatrix out{Eigen::MatrixXd::Zero(arcs, arcs), OperatorTag::generalized_grover};
  for (int e = 0; e < arcs; ++e) {
    const int v = g.origin(e);
    const double coin = (2.0 / g.degree(v) - 1.0) * p.a();
    // Arcs ending at v are exactly the inverses of the arcs leaving v.
    for (int leaving : g.out_arcs(v)) {
      const int f = Graph::inverse(leaving);
      out.values(e, f) = (f == Graph::inverse(e)) ? coin : coin + p.b();
    }
  }
  return out;
}

/// The Grover matrix written directly from its own definition: 2/d on
/// forward moves and 2/d - 1 on backtracking.
inline ArcMatrix build_grover(const Graph& g) {
  const int arcs = g.num_arcs();
  ArcMatrix out{Eigen::MatrixXd::Zero(arcs, arcs), OperatorTag::grover};
  for (int e = 0; e < arcs; ++e) {
    const int v = g.origin(e);
    const double forward = 2.0 / g.degree(v);
    for (int leaving : g.out_arcs(v)) {
      const int f = Graph::inverse(leaving);
      out.values(e, f) = (f == Graph::inverse(e)) ? forward - 1.0 : forward;
    }
  }
  return out;
}

inline Eigen::MatrixXd positive_support(const Eigen::MatrixXd& m) {
  return (m.array() > 0.0).cast<double>().matrix();
}

inline ArcMatrix positive_support(const ArcMatrix& m) {
  return {positive_support(m.values), OperatorTag::positive_support};
}

/// n x n matrix with entry (u, v) = (2 - deg u) a + b deg u on arcs (u, v).
inline Eigen::MatrixXd build_A_d(const Graph& g, const CoinParams& p) {
  const int n = g.num_vertices();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  for (const auto& arc : g.arcs()) {
    const double d = g.degree(arc.origin);
    out(arc.origin, arc.terminus) = (2.0 - d) * p.a() + p.b() * d;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Spectra

enum class SpectrumSource { numerical, closed_form };

struct SpectrumEntry {
  cplx value;
  int multiplicity;
};

class SpectrumReport {
 public:
  /// Groups eigenvalues lying within `merge_tolerance` of the current group
  /// representative after sorting by (real, imag).
  SpectrumReport(std::vector<cplx> values, SpectrumSource source, double merge_tolerance = 1e-9)
      : source_(source), flat_(std::move(values)) {
    std::sort(flat_.begin(), flat_.end(), lexicographic_less);
    std::vector<char> taken(flat_.size(), 0);
    for (std::size_t i = 0; i < flat_.size(); ++i) {
      if (taken[i]) continue;
      SpectrumEntry entry{flat_[i], 0};
      for (std::size_t j = i; j < flat_.size(); ++j)
        if (!taken[j] && std::abs(flat_[j] - flat_[i]) <= merge_tolerance) {
          taken[j] = 1;
          ++entry.multiplicity;
        }
      entries_.push_back(entry);
    }
  }

  SpectrumSource source() const noexcept { return source_; }
  const std::vector<SpectrumEntry>& entries() const noexcept { return entries_; }
  /// Every eigenvalue repeated by multiplicity, sorted by (real, imag).
  const std::vector<cplx>& values() const noexcept { return flat_; }
  std::size_t dimension() const noexcept { return flat_.size(); }

  /// Number of eigenvalues within `tolerance` of z.
  int count_near(cplx z, double tolerance) const {
    return static_cast<int>(std::count_if(flat_.begin(), flat_.end(),
                                          [&](const cplx& x) { return std::abs(x - z) <= tolerance; }));
  }

 private:
  SpectrumSource source_;
  std::vector<cplx> flat_;
  std::vector<SpectrumEntry> entries_;
};

inline SpectrumReport spectrum_numerical(const ArcMatrix& m) {
  return SpectrumReport(eigenvalues(m.values), SpectrumSource::numerical);
}

/// Eigenvalues of the generalized Grover matrix of a (q + 1)-regular graph:
/// the roots of lambda^2 - mu eta lambda + sigma for each mu in Spec(P), and
/// +b, -b with multiplicity m - n each.
inline SpectrumReport spectrum_closed_form(const Graph& g, const CoinParams& p,
                                           const std::vector<double>& transition_spectrum) {
  const auto degree = g.regular_degree();
  if (!degree) throw Error(ErrorCode::not_regular, "closed-form spectrum needs a regular graph");
  if (static_cast<int>(transition_spectrum.size()) != g.num_vertices())
    throw Error(ErrorCode::invalid_parameter, "transition spectrum must have n entries");
  const int q = *degree - 1;
  const double eta = p.eta(q);
  const double sigma = p.sigma(q);
  std::vector<cplx> values;
  values.reserve(static_cast<std::size_t>(g.num_arcs()));
  for (double mu : transition_spectrum) {
    const cplx root = std::sqrt(cplx(mu * mu * eta * eta - 4.0 * sigma, 0.0));
    values.push_back((mu * eta + root) / 2.0);
    values.push_back((mu * eta - root) / 2.0);
  }
  for (int k = 0; k < g.num_edges() - g.num_vertices(); ++k) {
    values.emplace_back(p.b(), 0.0);
    values.emplace_back(-p.b(), 0.0);
  }
  return SpectrumReport(std::move(values), SpectrumSource::closed_form);
}

inline SpectrumReport spectrum_closed_form(const Graph& g, const CoinParams& p) {
  return spectrum_closed_form(g, p, transition_spectrum(g));
}

// ---------------------------------------------------------------------------
// CSV dump: row-major, canonical arc order, 17 significant digits.

inline std::string matrix_to_csv(const Eigen::MatrixXd& m) {
  std::string out;
  char buffer[32];
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      std::snprintf(buffer, sizeof buffer, "%.17g", m(i, j) == 0.0 ? 0.0 : m(i, j));
      out += buffer;
    }
    out += '\n';
  }
  return out;
}

}  // namespace gzeta
