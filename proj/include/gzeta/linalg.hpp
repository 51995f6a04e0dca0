#pragma once

// Dense kernels shared by the zeta routes: pivoted-LU determinants with log
// bookkeeping, eigenvalues of real nonsymmetric matrices, eigenvalue multiset
// matching, power-iteration spectral radius and compensated summation.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

namespace gzeta {

using cplx = std::complex<double>;

/// det = exp(log_abs) * exp(i * arg). A zero pivot gives log_abs = -inf.
struct LogDeterminant {
  double log_abs = 0.0;
  double arg = 0.0;

  cplx value() const {
    if (std::isinf(log_abs) && log_abs < 0) return {0.0, 0.0};
    return std::polar(std::exp(log_abs), arg);
  }
};

template <typename Derived>
LogDeterminant log_determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  LogDeterminant out;
  if (m.rows() == 0) return out;
  Eigen::PartialPivLU<Mat> lu(m.derived());
  const auto& packed = lu.matrixLU();
  for (Eigen::Index i = 0; i < packed.rows(); ++i) {
    const cplx pivot(packed(i, i));
    if (pivot == cplx(0.0, 0.0)) {
      out.log_abs = -std::numeric_limits<double>::infinity();
      return out;
    }
    out.log_abs += std::log(std::abs(pivot));
    out.arg += std::arg(pivot);
  }
  if (lu.permutationP().determinant() < 0) out.arg += std::numbers::pi;
  out.arg = std::remainder(out.arg, 2.0 * std::numbers::pi);
  return out;
}

template <typename Derived>
cplx determinant(const Eigen::MatrixBase<Derived>& m) {
  return log_determinant(m).value();
}

/// z^k for integer k, by repeated squaring.
inline cplx integer_power(cplx z, long long k) {
  if (k < 0) return 1.0 / integer_power(z, -k);
  cplx result(1.0, 0.0);
  while (k > 0) {
    if (k & 1) result *= z;
    z *= z;
    k >>= 1;
  }
  return result;
}

inline std::vector<cplx> eigenvalues(const Eigen::MatrixXd& m) {
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, false);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

inline bool lexicographic_less(const cplx& x, const cplx& y) {
  if (x.real() != y.real()) return x.real() < y.real();
  return x.imag() < y.imag();
}

/// Largest pairing distance after greedy nearest-neighbour matching of two
/// equally sized multisets (both sorted by (real, imag) first). Returns +inf
/// on a size mismatch.
inline double multiset_distance(std::vector<cplx> lhs, std::vector<cplx> rhs) {
  if (lhs.size() != rhs.size()) return std::numeric_limits<double>::infinity();
  std::sort(lhs.begin(), lhs.end(), lexicographic_less);
  std::sort(rhs.begin(), rhs.end(), lexicographic_less);
  std::vector<char> used(rhs.size(), 0);
  double worst = 0.0;
  for (const cplx& x : lhs) {
    std::size_t best = rhs.size();
    double best_distance = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < rhs.size(); ++j) {
      if (used[j]) continue;
      const double dist = std::abs(x - rhs[j]);
      if (dist < best_distance) {
        best_distance = dist;
        best = j;
      }
    }
    used[best] = 1;
    worst = std::max(worst, best_distance);
  }
  return worst;
}

/// Spectral radius by power iteration. The estimate is the geometric-mean
/// growth rate over the second half of the iterations, which also settles
/// when the dominant eigenvalues form a complex pair or a rotation.
inline double spectral_radius(const Eigen::MatrixXd& m, int iterations = 200, double tolerance = 1e-8) {
  if (m.rows() == 0) return 0.0;
  Eigen::VectorXd x = Eigen::VectorXd::Ones(m.rows());
  // An all-ones start can be orthogonal to the dominant eigenspace.
  for (Eigen::Index i = 0; i < x.size(); ++i) x[i] += 0.01 * std::sin(1.0 + static_cast<double>(i));
  x.normalize();
  std::vector<double> log_growth;
  log_growth.reserve(static_cast<std::size_t>(iterations));
  double previous = std::numeric_limits<double>::infinity();
  for (int it = 0; it < iterations; ++it) {
    Eigen::VectorXd y = m * x;
    const double norm = y.norm();
    if (norm == 0.0) return 0.0;
    log_growth.push_back(std::log(norm));
    x = y / norm;
    const std::size_t half = log_growth.size() / 2;
    if (log_growth.size() >= 20) {
      double acc = 0.0;
      for (std::size_t k = half; k < log_growth.size(); ++k) acc += log_growth[k];
      const double estimate = std::exp(acc / static_cast<double>(log_growth.size() - half));
      if (std::abs(estimate - previous) <= tolerance * std::max(1.0, estimate)) return estimate;
      previous = estimate;
    }
  }
  double acc = 0.0;
  const std::size_t half = log_growth.size() / 2;
  for (std::size_t k = half; k < log_growth.size(); ++k) acc += log_growth[k];
  return std::exp(acc / static_cast<double>(log_growth.size() - half));
}

/// Neumaier's variant of Kahan summation.
template <typename Real>
class CompensatedSum {
 public:
  void add(const Real& x) {
    const Real t = sum_ + x;
    using std::abs;
    if (abs(sum_) >= abs(x))
      compensation_ += (sum_ - t) + x;
    else
      compensation_ += (x - t) + sum_;
    sum_ = t;
  }
  void add(const CompensatedSum& other) {
    add(other.sum_);
    add(other.compensation_);
  }
  Real value() const { return sum_ + compensation_; }

 private:
  Real sum_{0};
  Real compensation_{0};
};

}  // namespace gzeta
