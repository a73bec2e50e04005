#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "hyperjulia/rational.hpp"
#include "oracles.hpp"

namespace hj = hyperjulia;
using hj::cplx;

TEST(BlaschkeProduct, MatchesDirectProductAndProductRule) {
  oracle::Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    const auto ref = oracle::random_blaschke(rng, rng.integer(1, 7));
    const hj::BlaschkeProduct b(ref.theta, ref.zeros);
    for (int j = 0; j < 5; ++j) {
      const cplx z = rng.disk(0.99);
      EXPECT_NEAR(std::abs(b(z) - ref(z)), 0.0, 1e-13);
      EXPECT_NEAR(std::abs(b.derivative(z) - ref.derivative(z)), 0.0, 1e-9 * std::max(1.0, std::abs(ref.derivative(z))));
    }
    // Derivative at a zero goes through the product-rule path.
    const cplx a = ref.zeros.front();
    EXPECT_NEAR(std::abs(b.derivative(a) - ref.derivative(a)), 0.0, 1e-9 * std::max(1.0, std::abs(ref.derivative(a))));
    const cplx s = rng.circle();
    EXPECT_NEAR(std::abs(b(s)), 1.0, 1e-13);
  }
}

TEST(BlaschkeProduct, BoundaryDerivativeIsPoissonSum) {
  oracle::Rng rng(32);
  for (int i = 0; i < 50; ++i) {
    const auto ref = oracle::random_blaschke(rng, rng.integer(1, 6));
    const hj::BlaschkeProduct b(ref.theta, ref.zeros);
    const cplx s = rng.circle();
    double poisson = 0.0;
    for (cplx a : ref.zeros) poisson += (1.0 - std::norm(a)) / std::norm(s - a);
    EXPECT_NEAR(std::abs(b.derivative(s)), poisson, 1e-11 * poisson);
  }
}

TEST(BlaschkeProduct, RejectsZerosOutsideTheMargin) {
  EXPECT_THROW(hj::BlaschkeProduct(0.0, {cplx(1.0, 0.0)}), hj::Error);
  EXPECT_THROW(hj::BlaschkeProduct(0.0, {cplx(1.0 - 1e-12, 0.0)}), hj::Error);
  EXPECT_NO_THROW(hj::BlaschkeProduct(0.0, {cplx(1.0 - 1e-6, 0.0)}));
}

TEST(BlaschkeProduct, RationalFormAgrees) {
  oracle::Rng rng(33);
  for (int i = 0; i < 30; ++i) {
    const auto ref = oracle::random_blaschke(rng, rng.integer(1, 6));
    const hj::BlaschkeProduct b(ref.theta, ref.zeros);
    const hj::RationalMap r = b.to_rational();
    const cplx z = rng.disk(0.95);
    EXPECT_NEAR(std::abs(r(z) - ref(z)), 0.0, 1e-11);
    const auto back = hj::certify_blaschke(r, 1e-10, b.degree());
    EXPECT_EQ(back.degree(), b.degree());
    EXPECT_NEAR(std::abs(back(z) - ref(z)), 0.0, 1e-9);
  }
}

TEST(RationalMap, CancelsCommonFactors) {
  const hj::Polynomial common = hj::Polynomial::from_roots(std::vector<cplx>{cplx(0.2, 0.1)});
  const hj::RationalMap r(common * hj::Polynomial({0.0, 1.0}), common * hj::Polynomial({2.0, -1.0}));
  EXPECT_EQ(r.numerator().degree(), 1);
  EXPECT_EQ(r.denominator().degree(), 1);
  EXPECT_NEAR(std::abs(r(cplx(0.5)) - cplx(0.5 / 1.5)), 0.0, 1e-13);
}

TEST(RationalMap, ComposeWithAutomorphisms) {
  const hj::RationalMap r(hj::Polynomial({0.0, 0.0, 0.5, 0.5}));
  const hj::Automorphism pre{0.3, cplx(0.2, -0.1)}, post{-1.0, cplx(0.0, 0.4)};
  const auto c = r.compose(pre, post);
  for (cplx z : {cplx(0.1, 0.2), cplx(-0.5, 0.3), cplx(0.7, -0.1)}) EXPECT_NEAR(std::abs(c(z) - post(r(pre(z)))), 0.0, 1e-12);
}

TEST(BlaschkeConjugate, EqualsCompositionWithAutomorphisms) {
  oracle::Rng rng(34);
  for (int i = 0; i < 50; ++i) {
    const auto ref = oracle::random_blaschke(rng, rng.integer(1, 5));
    const hj::BlaschkeProduct b(ref.theta, ref.zeros);
    const hj::Automorphism phi{rng.uniform(-3.0, 3.0), rng.disk(0.7)};
    const auto c = hj::blaschke_conjugate(b, phi, phi.inverse());
    EXPECT_EQ(c.degree(), b.degree());
    for (int j = 0; j < 4; ++j) {
      const cplx z = rng.disk(0.95);
      EXPECT_NEAR(std::abs(c(z) - phi.inverse()(ref(phi(z)))), 0.0, 1e-9);
    }
  }
}

TEST(CertifyBlaschke, RejectsNonInnerMaps) {
  EXPECT_THROW(hj::certify_blaschke(hj::RationalMap(hj::Polynomial({0.0, 0.0, 0.5, 0.5}))), hj::Error);
  EXPECT_THROW(hj::certify_blaschke(hj::RationalMap(hj::Polynomial({0.0, 1.0}), hj::Polynomial({2.0, -1.0}))), hj::Error);
}

TEST(Herglotz, ProducesBlaschkeOfDegreeNPlusD) {
  oracle::Rng rng(35);
  for (int i = 0; i < 40; ++i) {
    const int n = rng.integer(1, 4), d = rng.integer(1, 4);
    std::vector<hj::BoundaryPoint> sigmas;
    std::vector<double> weights;
    for (int j = 0; j < n; ++j) {
      sigmas.emplace_back(std::polar(1.0, 2.0 * std::numbers::pi * (j + rng.uniform(0.1, 0.9)) / n));
      weights.push_back(rng.uniform(0.1, 3.0));
    }
    const auto ref = oracle::random_blaschke(rng, d);
    const auto h = hj::herglotz_blaschke(sigmas, weights, hj::BlaschkeProduct(ref.theta, ref.zeros));
    EXPECT_EQ(h.numerator().degree(), n + d);
    EXPECT_EQ(oracle::schur_cohn_inside(h.numerator().coefficients()), n + d);
    for (int s = 0; s < 100; ++s) EXPECT_NEAR(std::abs(h(rng.circle())), 1.0, 1e-8);
  }
}

TEST(Herglotz, RejectsDegenerateInput) {
  const std::vector<hj::BoundaryPoint> one{hj::BoundaryPoint(1.0)};
  const std::vector<double> w{1.0};
  EXPECT_THROW(hj::herglotz_blaschke(one, w, hj::BlaschkeProduct(0.0, {})), hj::Error);
  EXPECT_THROW(hj::herglotz_blaschke(one, std::vector<double>{-1.0}, hj::BlaschkeProduct::monomial(1)), hj::Error);
  const std::vector<hj::BoundaryPoint> dup{hj::BoundaryPoint(1.0), hj::BoundaryPoint(1.0)};
  EXPECT_THROW(hj::herglotz_blaschke(dup, std::vector<double>{1.0, 1.0}, hj::BlaschkeProduct::monomial(1)), hj::Error);
}

TEST(SchurCohnOracle, CountsKnownRoots) {
  oracle::Rng rng(36);
  for (int i = 0; i < 200; ++i) {
    std::vector<cplx> roots;
    int inside = 0;
    for (int j = rng.integer(1, 8); j > 0; --j) {
      cplx z = rng.disk(2.0);
      if (std::abs(std::abs(z) - 1.0) < 1e-3) z *= 1.01;
      roots.push_back(z);
      inside += std::abs(z) < 1.0;
    }
    EXPECT_EQ(oracle::schur_cohn_inside(hj::Polynomial::from_roots(roots).coefficients()), inside);
  }
}
