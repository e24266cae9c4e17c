#pragma once

#include <stdexcept>
#include <vector>

#include "repelwalk/walks.hpp"

namespace repelwalk {

/// Step-halving certification failed: the trajectory cannot be trusted at
/// the requested step size.
struct CertificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Planar reduction coordinates (u, v) = (x1_l, x2_l); the other two
/// coordinates are 1 - u and 1 - v.
struct PlanarPoint {
  double u = 0.5;
  double v = 0.5;
};

PlanarPoint to_planar(const OccupationState& x);
OccupationState lift(const PlanarPoint& z);

/// Planar drift (-u + psi(2v - 1), -v + psi(2u - 1)). Tolerant of small
/// excursions outside the unit square (intermediate integrator stages).
PlanarPoint planar_field(const PlanarPoint& z, const RepulsionParams& params);

struct FlowTrajectory {
  std::vector<double> times;
  std::vector<OccupationState> points;  // lifted back to four coordinates
  RepulsionParams params;
  double dt = 0.0;  // realized step (t_max / n_steps <= requested dt)
};

/// Classical fixed-step 4th-order integration on the planar reduction.
/// Every run is certified by a step-halved rerun: if the two final states
/// disagree by more than 1e-8 (L1), a CertificationError is thrown.
/// Requires 0 < dt <= 0.01.
FlowTrajectory integrate(const OccupationState& x0, const RepulsionParams& params,
                         double t_max, double dt);

/// Checks the inward bound on all four boundary faces: at a face point the
/// vanished coordinate grows at rate psi(2z - 1) >= 1/(1 + e^beta) > 0.
/// `samples` positions of the free coordinate are tested per face,
/// endpoints included.
bool boundary_inward_check(const RepulsionParams& params, int samples);

/// Empirical attraction exponent toward the center: negated least-squares
/// slope of log ||phi_t(x0) - x*|| over the tail window [t_max/2, t_max].
/// Requires beta < 2 and an x0 distinct from the center; throws if the
/// trajectory fails to contract toward the center.
double attraction_rate(const RepulsionParams& params, const OccupationState& x0,
                       double t_max);

}  // namespace repelwalk
