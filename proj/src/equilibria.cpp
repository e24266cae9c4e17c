#include "repelwalk/equilibria.hpp"

#include <cmath>
#include <stdexcept>

namespace repelwalk {

double g_map(double w, const RepulsionParams& params) {
  return psi(2.0 * w - 1.0, params);
}

double critical_w(const RepulsionParams& params) {
  if (!(params.beta > 2.0)) {
    throw std::domain_error("critical_w: defined for beta > 2 only");
  }
  return (params.beta - std::acosh(params.beta - 1.0)) / (2.0 * params.beta);
}

namespace {

// Root of H(w) = g(1 - w) - w on [0, 1/2). H(0) = g(1) > 0; for beta > 2 the
// slope of g(1 - w) at 1/2 exceeds 1, so H is negative just below 1/2 and the
// bracket [0, 1/2 - delta] is guaranteed.
double bisect_w(const RepulsionParams& params) {
  auto H = [&](double w) { return g_map(1.0 - w, params) - w; };
  double lo = 0.0;
  double hi = 0.5 - 1e-9;
  for (int it = 0; it < 64; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (H(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

EquilibriumReport solve_equilibria(const RepulsionParams& params) {
  if (!(params.beta >= 0.0)) {
    throw std::invalid_argument("solve_equilibria: beta must be >= 0");
  }
  EquilibriumReport report;
  report.beta = params.beta;
  report.non_hyperbolic = params.beta == 2.0;

  Equilibrium center;
  center.point = center_point();
  center.w = 0.5;
  center.spectrum = spectrum_at_center(params);
  report.equilibria.push_back(center);

  if (params.beta > 2.0) {
    const double w = bisect_w(params);
    Equilibrium low;
    low.point = symmetric_point(w);
    low.w = w;
    low.spectrum = spectrum_at_asymmetric(w, params);
    report.equilibria.push_back(low);

    Equilibrium high;
    high.point = OccupationState{{1.0 - w, w, w, 1.0 - w}};
    high.w = 1.0 - w;
    high.spectrum = low.spectrum;  // swapped point, same spectrum
    report.equilibria.push_back(high);
  }
  return report;
}

}  // namespace repelwalk
