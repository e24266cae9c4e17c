#include "repelwalk/flow.hpp"

#include <cmath>

#include "repelwalk/stats.hpp"

namespace repelwalk {

namespace {

// Logistic without the [-1, 1] domain guard; RK4 stage points may poke
// slightly outside the unit square.
double logistic_of(double beta_times_y) {
  const double t = beta_times_y;
  if (t >= 0.0) {
    const double e = std::exp(-t);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(t));
}

PlanarPoint rk4_step(const PlanarPoint& z, double h, const RepulsionParams& p) {
  const PlanarPoint k1 = planar_field(z, p);
  const PlanarPoint k2 =
      planar_field({z.u + 0.5 * h * k1.u, z.v + 0.5 * h * k1.v}, p);
  const PlanarPoint k3 =
      planar_field({z.u + 0.5 * h * k2.u, z.v + 0.5 * h * k2.v}, p);
  const PlanarPoint k4 = planar_field({z.u + h * k3.u, z.v + h * k3.v}, p);
  return {z.u + h / 6.0 * (k1.u + 2.0 * k2.u + 2.0 * k3.u + k4.u),
          z.v + h / 6.0 * (k1.v + 2.0 * k2.v + 2.0 * k3.v + k4.v)};
}

PlanarPoint run_to(const PlanarPoint& z0, double h, long n_steps,
                   const RepulsionParams& p) {
  PlanarPoint z = z0;
  for (long i = 0; i < n_steps; ++i) z = rk4_step(z, h, p);
  return z;
}

}  // namespace

PlanarPoint to_planar(const OccupationState& x) { return {x[0], x[2]}; }

OccupationState lift(const PlanarPoint& z) {
  return OccupationState{{z.u, 1.0 - z.u, z.v, 1.0 - z.v}};
}

PlanarPoint planar_field(const PlanarPoint& z, const RepulsionParams& params) {
  return {-z.u + logistic_of(params.beta * (2.0 * z.v - 1.0)),
          -z.v + logistic_of(params.beta * (2.0 * z.u - 1.0))};
}

FlowTrajectory integrate(const OccupationState& x0, const RepulsionParams& params,
                         double t_max, double dt) {
  if (!(t_max > 0.0)) throw std::invalid_argument("integrate: t_max must be > 0");
  if (!(dt > 0.0 && dt <= 0.01)) {
    throw std::invalid_argument("integrate: need 0 < dt <= 0.01");
  }
  const long n_steps = static_cast<long>(std::ceil(t_max / dt - 1e-12));
  const double h = t_max / static_cast<double>(n_steps);

  FlowTrajectory traj;
  traj.params = params;
  traj.dt = h;
  traj.times.reserve(n_steps + 1);
  traj.points.reserve(n_steps + 1);

  PlanarPoint z = to_planar(x0);
  traj.times.push_back(0.0);
  traj.points.push_back(lift(z));
  for (long i = 1; i <= n_steps; ++i) {
    z = rk4_step(z, h, params);
    traj.times.push_back(static_cast<double>(i) * h);
    traj.points.push_back(lift(z));
  }

  // Certificate: the halved-step endpoint must agree to 1e-8.
  const PlanarPoint fine = run_to(to_planar(x0), 0.5 * h, 2 * n_steps, params);
  const double disagreement =
      std::abs(fine.u - z.u) + std::abs(fine.v - z.v);
  if (!(disagreement <= 1e-8)) {
    throw CertificationError("integrate: step-halving certificate failed");
  }
  return traj;
}

bool boundary_inward_check(const RepulsionParams& params, int samples) {
  if (samples < 1) throw std::invalid_argument("boundary_inward_check: samples >= 1");
  const double bound = psi(1.0, params);  // 1 / (1 + e^beta)
  const int denom = samples > 1 ? samples - 1 : 1;
  for (int k = 0; k < samples; ++k) {
    const double t = static_cast<double>(k) / denom;
    // Four faces: one coordinate pinned to 0, the opposite walk free at t.
    const OccupationState faces[4] = {
        {{0.0, 1.0, t, 1.0 - t}},   // x1_l = 0
        {{1.0, 0.0, t, 1.0 - t}},   // x1_r = 0
        {{t, 1.0 - t, 0.0, 1.0}},   // x2_l = 0
        {{t, 1.0 - t, 1.0, 0.0}}};  // x2_r = 0
    const int vanished[4] = {0, 1, 2, 3};
    for (int f = 0; f < 4; ++f) {
      const FieldValue rate = field(faces[f], params);
      const double inward = rate[vanished[f]];
      // the inward rate equals psi at the opposite walk's imbalance
      const double opposite = f < 2 ? faces[f][2] : faces[f][0];
      const double expected =
          psi((f % 2 == 0 ? 1.0 : -1.0) * (2.0 * opposite - 1.0), params);
      if (std::abs(inward - expected) > 1e-12) return false;
      if (!(inward >= bound)) return false;
    }
  }
  return true;
}

double attraction_rate(const RepulsionParams& params, const OccupationState& x0,
                       double t_max) {
  if (!(params.beta < 2.0)) {
    throw std::domain_error("attraction_rate: requires beta < 2");
  }
  const OccupationState center = center_point();
  const double d0 = l1_distance(x0, center);
  if (d0 == 0.0) {
    throw std::invalid_argument("attraction_rate: x0 must differ from the center");
  }
  const FlowTrajectory traj = integrate(x0, params, t_max, 0.01);
  if (!(l1_distance(traj.points.back(), center) < d0)) {
    throw std::runtime_error("attraction_rate: trajectory is not contracting");
  }

  std::vector<double> ts;
  std::vector<double> logd;
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    if (traj.times[i] < 0.5 * t_max) continue;
    const double d = l1_distance(traj.points[i], center);
    if (d <= 0.0) break;  // fully converged; nothing left to fit
    ts.push_back(traj.times[i]);
    logd.push_back(std::log(d));
  }
  if (ts.size() < 2) {
    throw std::runtime_error("attraction_rate: tail window has no usable points");
  }
  return -least_squares_line(ts, logd).slope;
}

}  // namespace repelwalk
