#pragma once

#include <Eigen/Core>
#include <array>
#include <complex>
#include <string>

#include "repelwalk/walks.hpp"

namespace repelwalk {

/// Value of the drift field F(x) = -x + pi(x); lies in the tangent space.
struct FieldValue {
  std::array<double, 4> f{};

  double operator[](std::size_t i) const { return f[i]; }
  double& operator[](std::size_t i) { return f[i]; }
  double l1_norm() const;
};

FieldValue field(const OccupationState& x, const RepulsionParams& params);

enum class Stability { linearly_stable, linearly_unstable, non_hyperbolic };
std::string to_string(Stability s);

struct SpectrumReport {
  std::array<std::complex<double>, 4> eigenvalues{};  // sorted by real part
  Stability stability = Stability::non_hyperbolic;
};

/// Classify by the sign pattern of the real parts; a real part within `tol`
/// of zero makes the point non-hyperbolic.
Stability classify_spectrum(const std::array<std::complex<double>, 4>& eigs,
                            double tol = 1e-9);

/// Analytic 4x4 Jacobian of F. Valid off the simplex as well (the transition
/// map depends only on coordinate differences), which is what the
/// finite-difference cross-checks rely on.
Eigen::Matrix4d jacobian(const OccupationState& x, const RepulsionParams& params);

/// Numeric spectrum of an arbitrary 4x4 matrix via a dense eigensolver,
/// sorted by (real, imag). Independent route against the closed forms.
SpectrumReport numeric_spectrum(const Eigen::Matrix4d& m, double tol = 1e-9);

/// Closed-form spectrum {-1, -1, -1 - beta/2, -1 + beta/2} at the center.
SpectrumReport spectrum_at_center(const RepulsionParams& params);

/// Off-diagonal coupling h(w, beta) = beta / (2 + 2 cosh(beta - 2 w beta))
/// of the Jacobian at the symmetric equilibria.
double asymmetric_coupling(double w, const RepulsionParams& params);

/// Closed-form spectrum {-1, -1, -1 -+ 2 h(w, beta)} at (w, 1-w, 1-w, w).
/// Requires beta > 2 (the asymmetric equilibria only exist there).
SpectrumReport spectrum_at_asymmetric(double w, const RepulsionParams& params);

/// Divergence of the planar reduction (x1_l, x2_l): identically -2.
double divergence(const OccupationState& x, const RepulsionParams& params);

/// 2x2 Jacobian of the planar reduction at (u, v) = (x1_l, x2_l).
Eigen::Matrix2d planar_jacobian(double u, double v, const RepulsionParams& params);

struct ExcitationCheck {
  double q = 0.0;  // exact E[<theta, U_n>^+ | X(n) = x] by enumeration
  double s = 0.0;  // (min pi)^3 / 2
  bool ok = false;
};

/// Enumerates the four joint transition outcomes with product probabilities
/// and compares the exact positive-part expectation against the excitation
/// floor s(x). theta must lie in the tangent space with unit L1 norm.
ExcitationCheck excitation_bound_check(const OccupationState& x,
                                       const TangentVector& theta,
                                       const RepulsionParams& params);

}  // namespace repelwalk
