#include "repelwalk/field.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace repelwalk {

double FieldValue::l1_norm() const {
  return std::abs(f[0]) + std::abs(f[1]) + std::abs(f[2]) + std::abs(f[3]);
}

FieldValue field(const OccupationState& x, const RepulsionParams& params) {
  const OccupationState p = pi_map(x, params);
  FieldValue out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = -x[i] + p[i];
  return out;
}

std::string to_string(Stability s) {
  switch (s) {
    case Stability::linearly_stable: return "linearly-stable";
    case Stability::linearly_unstable: return "linearly-unstable";
    case Stability::non_hyperbolic: return "non-hyperbolic";
  }
  return "?";
}

Stability classify_spectrum(const std::array<std::complex<double>, 4>& eigs,
                            double tol) {
  bool any_zero = false;
  bool any_positive = false;
  for (const auto& e : eigs) {
    if (std::abs(e.real()) <= tol) {
      any_zero = true;
    } else if (e.real() > 0.0) {
      any_positive = true;
    }
  }
  if (any_zero) return Stability::non_hyperbolic;
  return any_positive ? Stability::linearly_unstable : Stability::linearly_stable;
}

Eigen::Matrix4d jacobian(const OccupationState& x, const RepulsionParams& params) {
  const OccupationState p = pi_map(x, params);
  // d pi^i_v / d x^j_v = -beta pi^i_l pi^i_r, and +beta pi^i_l pi^i_r for the
  // opposite coordinate; pi^i depends on walk j = 3-i only.
  const double d1 = params.beta * p[0] * p[1];  // walk-1 block, reads x^2
  const double d2 = params.beta * p[2] * p[3];  // walk-2 block, reads x^1
  Eigen::Matrix4d j = -Eigen::Matrix4d::Identity();
  j(0, 2) = -d1;
  j(0, 3) = d1;
  j(1, 2) = d1;
  j(1, 3) = -d1;
  j(2, 0) = -d2;
  j(2, 1) = d2;
  j(3, 0) = d2;
  j(3, 1) = -d2;
  return j;
}

namespace {

std::array<std::complex<double>, 4> sorted_eigs(
    std::array<std::complex<double>, 4> e) {
  std::sort(e.begin(), e.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return e;
}

}  // namespace

SpectrumReport numeric_spectrum(const Eigen::Matrix4d& m, double tol) {
  const Eigen::EigenSolver<Eigen::Matrix4d> solver(m, /*computeEigenvectors=*/false);
  std::array<std::complex<double>, 4> eigs;
  for (int i = 0; i < 4; ++i) eigs[i] = solver.eigenvalues()(i);
  SpectrumReport rep;
  rep.eigenvalues = sorted_eigs(eigs);
  rep.stability = classify_spectrum(rep.eigenvalues, tol);
  return rep;
}

SpectrumReport spectrum_at_center(const RepulsionParams& params) {
  SpectrumReport rep;
  rep.eigenvalues = sorted_eigs(
      {-1.0, -1.0, -1.0 - params.beta / 2.0, -1.0 + params.beta / 2.0});
  rep.stability = classify_spectrum(rep.eigenvalues);
  return rep;
}

double asymmetric_coupling(double w, const RepulsionParams& params) {
  return params.beta / (2.0 + 2.0 * std::cosh(params.beta - 2.0 * w * params.beta));
}

SpectrumReport spectrum_at_asymmetric(double w, const RepulsionParams& params) {
  if (!(params.beta > 2.0)) {
    throw std::domain_error(
        "spectrum_at_asymmetric: asymmetric equilibria require beta > 2");
  }
  const double h = asymmetric_coupling(w, params);
  SpectrumReport rep;
  rep.eigenvalues = sorted_eigs({-1.0, -1.0, -1.0 - 2.0 * h, -1.0 + 2.0 * h});
  rep.stability = classify_spectrum(rep.eigenvalues);
  return rep;
}

double divergence(const OccupationState& x, const RepulsionParams& params) {
  const Eigen::Matrix2d j = planar_jacobian(x[0], x[2], params);
  return j(0, 0) + j(1, 1);
}

Eigen::Matrix2d planar_jacobian(double u, double v, const RepulsionParams& params) {
  // Planar field G(u, v) = (-u + psi(2v - 1), -v + psi(2u - 1)); the diagonal
  // is exactly -1 and the off-diagonal is 2 psi'(.) = -2 beta psi (1 - psi).
  const RepulsionParams& p = params;
  const double puv = psi(2.0 * v - 1.0, p);
  const double pvu = psi(2.0 * u - 1.0, p);
  Eigen::Matrix2d j;
  j(0, 0) = -1.0;
  j(0, 1) = -2.0 * p.beta * puv * (1.0 - puv);
  j(1, 0) = -2.0 * p.beta * pvu * (1.0 - pvu);
  j(1, 1) = -1.0;
  return j;
}

ExcitationCheck excitation_bound_check(const OccupationState& x,
                                       const TangentVector& theta,
                                       const RepulsionParams& params) {
  constexpr double tol = 1e-9;
  if (std::abs(theta[0] + theta[1]) > tol || std::abs(theta[2] + theta[3]) > tol) {
    throw std::invalid_argument("excitation_bound_check: theta not tangent");
  }
  if (std::abs(theta.l1_norm() - 1.0) > tol) {
    throw std::invalid_argument("excitation_bound_check: theta must have unit L1 norm");
  }

  const OccupationState p = pi_map(x, params);
  double q = 0.0;
  for (int o1 = 0; o1 < 2; ++o1) {    // walk-1 outcome: 0 = left, 1 = right
    for (int o2 = 0; o2 < 2; ++o2) {  // walk-2 outcome
      const double prob = p[o1] * p[2 + o2];
      double inner = 0.0;
      for (int i = 0; i < 4; ++i) {
        const double xi = (i == o1 || i == 2 + o2) ? 1.0 : 0.0;
        inner += theta[i] * (xi - p[i]);
      }
      q += prob * std::max(inner, 0.0);
    }
  }
  const double pmin = std::min(std::min(p[0], p[1]), std::min(p[2], p[3]));
  const double s = 0.5 * pmin * pmin * pmin;
  return {q, s, q >= s};
}

}  // namespace repelwalk
