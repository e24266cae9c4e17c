#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Core>
#include <cmath>

#include "repelwalk/equilibria.hpp"
#include "repelwalk/field.hpp"
#include "repelwalk/rng.hpp"

using namespace repelwalk;

namespace {

// Independent oracle: central finite differences of F.
Eigen::Matrix4d fd_jacobian(const OccupationState& x, const RepulsionParams& p,
                            double h = 1e-6) {
  Eigen::Matrix4d j;
  for (int col = 0; col < 4; ++col) {
    OccupationState xp = x, xm = x;
    xp[col] += h;
    xm[col] -= h;
    const FieldValue fp = field(xp, p);
    const FieldValue fm = field(xm, p);
    for (int row = 0; row < 4; ++row) j(row, col) = (fp[row] - fm[row]) / (2.0 * h);
  }
  return j;
}

OccupationState random_interior(PhiloxStream& rng) {
  const double a = 0.02 + 0.96 * rng.next_uniform();
  const double b = 0.02 + 0.96 * rng.next_uniform();
  return OccupationState{{a, 1.0 - a, b, 1.0 - b}};
}

TangentVector random_unit_tangent(PhiloxStream& rng) {
  for (;;) {
    const double a = 2.0 * rng.next_uniform() - 1.0;
    const double b = 2.0 * rng.next_uniform() - 1.0;
    const double norm = 2.0 * (std::abs(a) + std::abs(b));
    if (norm < 1e-12) continue;
    return TangentVector{{a / norm, -a / norm, b / norm, -b / norm}};
  }
}

}  // namespace

TEST_CASE("field values") {
  const RepulsionParams b1{1.0};
  const FieldValue zero = field(center_point(), b1);
  for (int i = 0; i < 4; ++i) CHECK(zero[i] == 0.0);

  const OccupationState x{{0.3, 0.7, 0.6, 0.4}};
  const FieldValue f0 = field(x, {0.0});
  CHECK(f0[0] == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(f0[1] == doctest::Approx(-0.2).epsilon(1e-15));
  CHECK(f0[2] == doctest::Approx(-0.1).epsilon(1e-15));
  CHECK(f0[3] == doctest::Approx(0.1).epsilon(1e-15));

  const FieldValue f1 = field(x, b1);
  CHECK(f1[0] == doctest::Approx(0.15016600268752209).epsilon(1e-14));
}

TEST_CASE("field stays in the tangent space") {
  PhiloxStream rng(5, 0);
  for (double beta : {0.0, 0.5, 1.0, 2.0, 3.0, 8.0}) {
    for (int i = 0; i < 300; ++i) {
      const FieldValue f = field(random_interior(rng), {beta});
      REQUIRE(std::abs(f[0] + f[1]) < 1e-14);
      REQUIRE(std::abs(f[2] + f[3]) < 1e-14);
    }
  }
}

TEST_CASE("analytic jacobian agrees with central differences") {
  PhiloxStream rng(6, 0);
  for (double beta : {0.0, 0.5, 1.0, 2.0, 3.0, 8.0}) {
    for (int i = 0; i < 1000; ++i) {
      const OccupationState x = random_interior(rng);
      const Eigen::Matrix4d a = jacobian(x, {beta});
      const Eigen::Matrix4d n = fd_jacobian(x, {beta});
      REQUIRE((a - n).cwiseAbs().maxCoeff() < 1e-6);
    }
  }
}

TEST_CASE("jacobian block structure at the equilibria") {
  const RepulsionParams p{3.0};
  const Eigen::Matrix4d jc = jacobian(center_point(), p);
  CHECK(jc(0, 2) == doctest::Approx(-p.beta / 4.0).epsilon(1e-15));
  CHECK(jc(0, 3) == doctest::Approx(p.beta / 4.0).epsilon(1e-15));
  CHECK(jc(1, 2) == doctest::Approx(p.beta / 4.0).epsilon(1e-15));
  CHECK(jc(3, 1) == doctest::Approx(-p.beta / 4.0).epsilon(1e-15));
  CHECK(jc(0, 0) == -1.0);
  CHECK(jc(0, 1) == 0.0);

  // h(1/2, beta) = beta/4 collapses the asymmetric pattern onto the center one.
  CHECK(asymmetric_coupling(0.5, p) == doctest::Approx(p.beta / 4.0).epsilon(1e-15));

  const double w = solve_equilibria(p).equilibria[1].w;
  const double h = asymmetric_coupling(w, p);
  const Eigen::Matrix4d jw = jacobian(symmetric_point(w), p);
  CHECK(jw(0, 2) == doctest::Approx(-h).epsilon(1e-12));
  CHECK(jw(2, 1) == doctest::Approx(h).epsilon(1e-12));
}

TEST_CASE("center spectrum closed form vs numeric") {
  {
    const SpectrumReport r = spectrum_at_center({1.0});
    CHECK(r.eigenvalues[0].real() == doctest::Approx(-1.5).epsilon(1e-15));
    CHECK(r.eigenvalues[1].real() == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(r.eigenvalues[2].real() == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(r.eigenvalues[3].real() == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(r.stability == Stability::linearly_stable);
  }
  {
    const SpectrumReport r = spectrum_at_center({4.0});
    CHECK(r.eigenvalues[0].real() == doctest::Approx(-3.0).epsilon(1e-15));
    CHECK(r.eigenvalues[3].real() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r.stability == Stability::linearly_unstable);
  }
  {
    const SpectrumReport r = spectrum_at_center({2.0});
    CHECK(r.eigenvalues[3].real() == 0.0);
    CHECK(r.stability == Stability::non_hyperbolic);
  }
  for (double beta : {0.0, 0.5, 1.0, 1.5, 2.5, 3.0, 4.0, 8.0}) {
    const SpectrumReport closed = spectrum_at_center({beta});
    const SpectrumReport numeric = numeric_spectrum(jacobian(center_point(), {beta}));
    for (int i = 0; i < 4; ++i) {
      REQUIRE(std::abs(closed.eigenvalues[i] - numeric.eigenvalues[i]) < 1e-9);
    }
  }
}

TEST_CASE("asymmetric spectrum closed form vs numeric, and swap symmetry") {
  CHECK_THROWS_AS(spectrum_at_asymmetric(0.3, {1.5}), std::domain_error);
  for (double beta : {2.5, 3.0, 4.0, 8.0}) {
    const RepulsionParams p{beta};
    const double w = solve_equilibria(p).equilibria[1].w;
    const SpectrumReport closed = spectrum_at_asymmetric(w, p);
    for (const auto& e : closed.eigenvalues) REQUIRE(e.real() < 0.0);
    CHECK(closed.stability == Stability::linearly_stable);

    const SpectrumReport numeric = numeric_spectrum(jacobian(symmetric_point(w), p));
    for (int i = 0; i < 4; ++i) {
      REQUIRE(std::abs(closed.eigenvalues[i] - numeric.eigenvalues[i]) < 1e-9);
    }

    // The swapped point has the same spectrum.
    const OccupationState swapped{{1.0 - w, w, w, 1.0 - w}};
    const SpectrumReport mirrored = numeric_spectrum(jacobian(swapped, p));
    for (int i = 0; i < 4; ++i) {
      REQUIRE(std::abs(mirrored.eigenvalues[i] - numeric.eigenvalues[i]) < 1e-12);
    }
  }
}

TEST_CASE("divergence is -2 everywhere") {
  CHECK(divergence(OccupationState{{0.4, 0.6, 0.7, 0.3}}, {1.0}) == -2.0);
  CHECK(divergence(OccupationState{{0.4, 0.6, 0.7, 0.3}}, {0.0}) == -2.0);
  CHECK(divergence(OccupationState{{0.1, 0.9, 0.8, 0.2}}, {5.0}) == -2.0);

  // Finite-difference route on the planar reduction.
  PhiloxStream rng(77, 0);
  for (int i = 0; i < 200; ++i) {
    const OccupationState x = random_interior(rng);
    const RepulsionParams p{8.0 * rng.next_uniform()};
    const double h = 1e-6;
    auto g1 = [&](double u, double v) { return -u + psi(2.0 * v - 1.0, p); };
    auto g2 = [&](double u, double v) { return -v + psi(2.0 * u - 1.0, p); };
    const double fd = (g1(x[0] + h, x[2]) - g1(x[0] - h, x[2])) / (2.0 * h) +
                      (g2(x[0], x[2] + h) - g2(x[0], x[2] - h)) / (2.0 * h);
    REQUIRE(std::abs(fd - (-2.0)) < 1e-6);
    REQUIRE(divergence(x, p) == -2.0);
  }
}

TEST_CASE("excitation bound worked example") {
  const TangentVector theta{{0.5, -0.5, 0.0, 0.0}};
  const ExcitationCheck c = excitation_bound_check(center_point(), theta, {3.0});
  CHECK(c.q == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(c.s == 0.0625);
  CHECK(c.ok);
}

TEST_CASE("excitation bound rejects bad tangents") {
  CHECK_THROWS_AS(
      excitation_bound_check(center_point(), TangentVector{{0.5, -0.4, 0.0, 0.0}}, {3.0}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      excitation_bound_check(center_point(), TangentVector{{0.25, -0.25, 0.0, 0.0}}, {3.0}),
      std::invalid_argument);
}

TEST_CASE("excitation bound holds on random interior points") {
  PhiloxStream rng(88, 0);
  for (double beta : {2.5, 8.0}) {
    for (int i = 0; i < 200; ++i) {
      const OccupationState x = random_interior(rng);
      for (int k = 0; k < 50; ++k) {
        const ExcitationCheck c =
            excitation_bound_check(x, random_unit_tangent(rng), {beta});
        REQUIRE(c.ok);
      }
    }
  }
}
