// Evaluates the (a,b)-zeta function of the Petersen graph three ways and
// prints the closed-form spectrum of its generalized Grover matrix.

#include <cstdio>

#include "gzeta/gzeta.hpp"

int main() {
  const gzeta::Graph g = gzeta::build_petersen();
  const gzeta::CoinParams p(0.5, 1.0);
  const double u = 0.15;

  const auto det = gzeta::zeta_reciprocal_det(g, p, u);
  const auto spectral = gzeta::zeta_reciprocal_regular(g, p, u);
  const auto series = gzeta::log_zeta_series(g, p, 30);
  std::printf("det route      %.15f\n", det.real());
  std::printf("spectral route %.15f\n", spectral.real());
  std::printf("series route   %.15f\n", std::exp(-series.evaluate(u)).real());
  std::printf("zeta^-1 (vertex-transitive) %.15f\n", gzeta::generalized_zeta_reciprocal(g, p, u));

  std::printf("\nclosed-form spectrum of U~(%.1f, %.1f):\n", p.a(), p.b());
  for (const auto& entry : gzeta::spectrum_closed_form(g, p).entries())
    std::printf("  %+.6f %+.6fi  x%d\n", entry.value.real(), entry.value.imag(), entry.multiplicity);
}
