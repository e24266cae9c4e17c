#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <utility>

namespace repelwalk {

/// Repulsion strength; beta = 0 degenerates to two independent symmetric walks.
struct RepulsionParams {
  double beta = 0.0;
};

/// psi(y) = 1 / (1 + exp(beta * y)) for y in [-1, 1].
/// Throws std::domain_error outside the interval. Satisfies
/// psi(-y) = 1 - psi(y) to one ulp.
double psi(double y, const RepulsionParams& params);

/// Occupation proportions (x1_l, x1_r, x2_l, x2_r): a point of the product
/// of two 1-simplices. Index order is fixed once here and used everywhere.
struct OccupationState {
  std::array<double, 4> x{0.5, 0.5, 0.5, 0.5};

  double operator[](std::size_t i) const { return x[i]; }
  double& operator[](std::size_t i) { return x[i]; }
};

/// Element of the tangent space: component sums vanish per walk.
struct TangentVector {
  std::array<double, 4> v{};

  double operator[](std::size_t i) const { return v[i]; }
  double& operator[](std::size_t i) { return v[i]; }
  double l1_norm() const;
};

OccupationState center_point();
/// The symmetric family (w, 1-w, 1-w, w).
OccupationState symmetric_point(double w);
double l1_distance(const OccupationState& a, const OccupationState& b);

/// Transition map pi: each walk's step distribution reads the opponent's
/// occupation pair through an exponential ratio. Stable for any beta >= 0
/// (the larger exponential is factored out before evaluation).
OccupationState pi_map(const OccupationState& x, const RepulsionParams& params);

/// Same map expressed through psi(2 x - 1); kept as a cross-check route,
/// valid on the simplex only.
OccupationState pi_map_psi_form(const OccupationState& x,
                                const RepulsionParams& params);

/// Prescribed pre-law history, stored as its sufficient statistics: the four
/// left/right transition counts plus the step-0 positions. Both walks must
/// share the same history length n0 >= 1.
struct InitialHistory {
  std::array<std::int64_t, 4> counts{0, 1, 0, 1};  // l1, r1, l2, r2
  std::array<std::int64_t, 2> start{0, 0};         // S1_0, S2_0

  std::int64_t n0() const { return counts[0] + counts[1]; }
  void validate() const;  // throws std::invalid_argument
};

/// Exact joint state at step n: positions and integer transition counts.
/// Proportions are always derived from the counts, never accumulated.
struct WalkPairState {
  std::int64_t n = 0;
  std::array<std::int64_t, 2> pos{};
  std::array<std::int64_t, 4> counts{};  // l1, r1, l2, r2

  static WalkPairState from_history(const InitialHistory& history);

  /// S^i_0 recovered from position and counts (walk is 0 or 1).
  std::int64_t start_of(int walk) const {
    return pos[walk] - (counts[2 * walk + 1] - counts[2 * walk]);
  }
};

/// Occupation proportions counts/n. Requires n >= 1.
OccupationState occupation(const WalkPairState& state);

/// The two step-up probabilities (pi^1_r, pi^2_r) at the current state.
std::pair<double, double> step_up_probabilities(const WalkPairState& state,
                                                const RepulsionParams& params);

/// One joint transition: walk i steps right iff draws[i] < pi^i_r(X(n)).
/// The two draws must be independent uniforms in (0, 1), one per walk.
WalkPairState step(const WalkPairState& state, const RepulsionParams& params,
                   std::pair<double, double> draws);

/// Martingale increment U_n = xi(n) - pi(X(n)), where `before` is the state
/// at step n and `after` its successor.
TangentVector noise_realization(const WalkPairState& before,
                                const WalkPairState& after,
                                const RepulsionParams& params);

}  // namespace repelwalk
