#include "repelwalk/walks.hpp"

#include <cmath>
#include <stdexcept>

namespace repelwalk {

double psi(double y, const RepulsionParams& params) {
  if (!(y >= -1.0 && y <= 1.0)) {
    throw std::domain_error("psi: argument outside [-1, 1]");
  }
  const double t = params.beta * y;
  if (t >= 0.0) {
    const double e = std::exp(-t);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(t));
}

double TangentVector::l1_norm() const {
  return std::abs(v[0]) + std::abs(v[1]) + std::abs(v[2]) + std::abs(v[3]);
}

OccupationState center_point() { return OccupationState{}; }

OccupationState symmetric_point(double w) {
  return OccupationState{{w, 1.0 - w, 1.0 - w, w}};
}

double l1_distance(const OccupationState& a, const OccupationState& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < 4; ++i) d += std::abs(a[i] - b[i]);
  return d;
}

namespace {

// exp(-beta*xl) / (exp(-beta*xl) + exp(-beta*xr)) and its complement,
// with the larger exponential factored out so neither term can overflow.
void pi_pair(double xl, double xr, double beta, double& pl, double& pr) {
  if (xl <= xr) {
    const double er = std::exp(-beta * (xr - xl));
    const double s = 1.0 + er;
    pl = 1.0 / s;
    pr = er / s;
  } else {
    const double el = std::exp(-beta * (xl - xr));
    const double s = el + 1.0;
    pl = el / s;
    pr = 1.0 / s;
  }
}

}  // namespace

OccupationState pi_map(const OccupationState& x, const RepulsionParams& params) {
  OccupationState out;
  pi_pair(x[2], x[3], params.beta, out[0], out[1]);  // walk 1 reads walk 2
  pi_pair(x[0], x[1], params.beta, out[2], out[3]);  // walk 2 reads walk 1
  return out;
}

OccupationState pi_map_psi_form(const OccupationState& x,
                                const RepulsionParams& params) {
  OccupationState out;
  out[0] = psi(2.0 * x[2] - 1.0, params);
  out[1] = psi(2.0 * x[3] - 1.0, params);
  out[2] = psi(2.0 * x[0] - 1.0, params);
  out[3] = psi(2.0 * x[1] - 1.0, params);
  return out;
}

void InitialHistory::validate() const {
  for (std::int64_t c : counts) {
    if (c < 0) throw std::invalid_argument("initial history: negative count");
  }
  if (counts[0] + counts[1] != counts[2] + counts[3]) {
    throw std::invalid_argument(
        "initial history: walks must share the same history length");
  }
  if (n0() < 1) {
    throw std::invalid_argument("initial history: need n0 >= 1 prescribed steps");
  }
}

WalkPairState WalkPairState::from_history(const InitialHistory& history) {
  history.validate();
  WalkPairState s;
  s.n = history.n0();
  s.counts = history.counts;
  s.pos[0] = history.start[0] + (history.counts[1] - history.counts[0]);
  s.pos[1] = history.start[1] + (history.counts[3] - history.counts[2]);
  return s;
}

OccupationState occupation(const WalkPairState& state) {
  if (state.n < 1) throw std::logic_error("occupation: undefined at n = 0");
  const double inv = 1.0 / static_cast<double>(state.n);
  OccupationState x;
  for (std::size_t i = 0; i < 4; ++i) {
    x[i] = static_cast<double>(state.counts[i]) * inv;
  }
  return x;
}

std::pair<double, double> step_up_probabilities(const WalkPairState& state,
                                                const RepulsionParams& params) {
  const OccupationState p = pi_map(occupation(state), params);
  return {p[1], p[3]};
}

WalkPairState step(const WalkPairState& state, const RepulsionParams& params,
                   std::pair<double, double> draws) {
  const auto [up1, up2] = step_up_probabilities(state, params);
  WalkPairState next = state;
  next.n = state.n + 1;
  if (draws.first < up1) {
    ++next.counts[1];
    ++next.pos[0];
  } else {
    ++next.counts[0];
    --next.pos[0];
  }
  if (draws.second < up2) {
    ++next.counts[3];
    ++next.pos[1];
  } else {
    ++next.counts[2];
    --next.pos[1];
  }
  return next;
}

TangentVector noise_realization(const WalkPairState& before,
                                const WalkPairState& after,
                                const RepulsionParams& params) {
  if (after.n != before.n + 1) {
    throw std::invalid_argument("noise_realization: states are not consecutive");
  }
  const OccupationState pi = pi_map(occupation(before), params);
  TangentVector u;
  for (std::size_t i = 0; i < 4; ++i) {
    const double xi = static_cast<double>(after.counts[i] - before.counts[i]);
    u[i] = xi - pi[i];
  }
  return u;
}

}  // namespace repelwalk
