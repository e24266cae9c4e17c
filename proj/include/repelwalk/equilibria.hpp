#pragma once

#include <vector>

#include "repelwalk/field.hpp"
#include "repelwalk/walks.hpp"

namespace repelwalk {

/// g(w) = 1 / (1 + e^{2 beta w - beta}); strictly decreasing for beta > 0
/// with g(1 - w) = 1 - g(w). Equilibria of F are exactly the points
/// (w, 1-w, 1-w, w) with w = g(1 - w).
double g_map(double w, const RepulsionParams& params);

/// The stability threshold w* = (beta - arcosh(beta - 1)) / (2 beta) where
/// -1 + 2 h(w, beta) changes sign. Requires beta > 2.
double critical_w(const RepulsionParams& params);

struct Equilibrium {
  OccupationState point;
  double w = 0.5;  // parameter of the (w, 1-w, 1-w, w) family
  SpectrumReport spectrum;
};

struct EquilibriumReport {
  double beta = 0.0;
  /// Center first; for beta > 2 followed by (w, 1-w, 1-w, w) and its swap.
  std::vector<Equilibrium> equilibria;
  bool non_hyperbolic = false;  // set exactly at beta == 2

  int count() const { return static_cast<int>(equilibria.size()); }
};

/// Solves w = g(1 - w) on [0, 1/2]. The center is always present; for
/// beta > 2 the unique interior root is found by bisection (64 iterations,
/// guaranteed bracket) to residual below 1e-12.
EquilibriumReport solve_equilibria(const RepulsionParams& params);

}  // namespace repelwalk
