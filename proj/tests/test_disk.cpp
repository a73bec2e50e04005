#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hyperjulia/disk.hpp"
#include "hyperjulia/error.hpp"
#include "oracles.hpp"

namespace hj = hyperjulia;
using hj::cplx;

TEST(DiskPoint, RejectsPointsOnOrOutsideTheCircle) {
  EXPECT_NO_THROW(hj::DiskPoint(0.5, 0.5));
  EXPECT_THROW(hj::DiskPoint(1.0), hj::Error);
  EXPECT_THROW(hj::DiskPoint(cplx(0.8, 0.8)), hj::Error);
  EXPECT_THROW(hj::DiskPoint(cplx(NAN, 0.0)), hj::Error);
}

TEST(BoundaryPoint, ValidatesModulusAndProjects) {
  EXPECT_NO_THROW(hj::BoundaryPoint(cplx(0.6, 0.8)));
  EXPECT_THROW(hj::BoundaryPoint(cplx(0.6, 0.7)), hj::Error);
  const auto p = hj::BoundaryPoint::project(cplx(3.0, 4.0));
  EXPECT_NEAR(std::abs(p.value() - cplx(0.6, 0.8)), 0.0, 1e-15);
  EXPECT_NEAR(hj::BoundaryPoint::polar(std::numbers::pi / 2).value().imag(), 1.0, 1e-15);
}

TEST(Gamma, IsAnInvolutiveAutomorphismSwappingWAndZero) {
  oracle::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const cplx w = rng.disk(0.95), z = rng.disk(0.95);
    EXPECT_NEAR(std::abs(hj::gamma(w, w)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(hj::gamma(w, 0.0) + w), 0.0, 1e-15);
    EXPECT_LT(std::abs(hj::gamma(w, z)), 1.0);
    // gamma_{-w} inverts gamma_w.
    EXPECT_NEAR(std::abs(hj::gamma(-w, hj::gamma(w, z)) - z), 0.0, 1e-13);
    const cplx s = rng.circle();
    EXPECT_NEAR(std::abs(hj::gamma(w, s)), 1.0, 1e-13);
  }
}

TEST(Gamma, DerivativeMatchesStencil) {
  oracle::Rng rng(12);
  for (int i = 0; i < 50; ++i) {
    const cplx w = rng.disk(0.8), z = rng.disk(0.5);
    const cplx ref = oracle::stencil_derivative([w](cplx x) { return oracle::mobius(w, x); }, z, 1e-3);
    EXPECT_NEAR(std::abs(hj::gamma_derivative(w, z) - ref), 0.0, 1e-9);
  }
}

TEST(Automorphism, InverseComposesToIdentity) {
  oracle::Rng rng(13);
  for (int i = 0; i < 100; ++i) {
    const hj::Automorphism g{rng.uniform(-3.0, 3.0), rng.disk(0.9)};
    const cplx z = rng.disk(0.95);
    EXPECT_NEAR(std::abs(g.inverse()(g(z)) - z), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(g(g.inverse()(z)) - z), 0.0, 1e-12);
  }
  EXPECT_EQ(hj::Automorphism::identity()(cplx(0.3, 0.2)), cplx(0.3, 0.2));
}

TEST(PoincareDistance, IsInvariantUnderAutomorphisms) {
  oracle::Rng rng(14);
  for (int i = 0; i < 100; ++i) {
    const hj::Automorphism g{rng.uniform(-3.0, 3.0), rng.disk(0.9)};
    const cplx z = rng.disk(0.9), w = rng.disk(0.9);
    const double d = hj::poincare_distance(hj::DiskPoint(z), hj::DiskPoint(w));
    EXPECT_NEAR(hj::poincare_distance(hj::DiskPoint(g(z)), hj::DiskPoint(g(w))), d, 1e-10 * std::max(1.0, d));
    EXPECT_NEAR(d, std::atanh(std::abs((z - w) / (1.0 - std::conj(w) * z))), 1e-12);
  }
  EXPECT_DOUBLE_EQ(hj::poincare_distance(hj::DiskPoint(0.5), hj::DiskPoint(0.5)), 0.0);
}

TEST(Horocycle, EuclideanDiskIsTangentAtTheCenterPoint) {
  oracle::Rng rng(15);
  for (int i = 0; i < 50; ++i) {
    const hj::BoundaryPoint sigma(rng.circle());
    const double R = rng.uniform(0.05, 5.0);
    const hj::Horocycle h(sigma, R);
    const auto e = hj::horocycle_euclidean(h);
    EXPECT_NEAR(std::abs(e.center) + e.radius, 1.0, 1e-14);
    EXPECT_NEAR(e.radius, R / (R + 1.0), 1e-14);
    // Points on the Euclidean circle have functional exactly R.
    const cplx z = e.center + std::polar(e.radius, rng.uniform(0.1, 6.1));
    if (std::abs(z) < 1.0 - 1e-6) {
      EXPECT_NEAR(hj::horocycle_functional(sigma, hj::DiskPoint(z)), R, 1e-9 * R);
    }
    EXPECT_TRUE(h.contains(hj::DiskPoint(e.center)));
  }
  EXPECT_THROW(hj::Horocycle(hj::BoundaryPoint(1.0), 0.0), hj::Error);
}

TEST(Stolz, MembershipAndEmptiness) {
  const hj::StolzRegion k(hj::BoundaryPoint(1.0), 2.0);
  EXPECT_TRUE(hj::stolz_contains(k, hj::DiskPoint(0.9)));
  EXPECT_FALSE(hj::stolz_contains(k, hj::DiskPoint(cplx(0.9, 0.4))));
  const hj::StolzRegion empty(hj::BoundaryPoint(1.0), 1.0);
  EXPECT_TRUE(empty.empty());
  EXPECT_FALSE(hj::stolz_contains(empty, hj::DiskPoint(0.5)));
}
