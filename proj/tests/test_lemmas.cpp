#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "hyperjulia/hyperjulia.hpp"
#include "hyperjulia/map_spec.hpp"
#include "oracles.hpp"

namespace hj = hyperjulia;
using hj::cplx;

namespace {
hj::SelfMap as_map(const oracle::Blaschke& b) { return hj::SelfMap::blaschke(hj::BlaschkeProduct(b.theta, b.zeros)); }

/// Holds, and is sharp wherever the structure forces equality.
bool sound(const hj::VerificationReport& r) { return r.holds && (r.equality_expected != true || r.equality); }

hj::SelfMap origin_blaschke(oracle::Rng& rng, int degree) {
  auto ref = oracle::random_blaschke(rng, degree - 1);
  ref.zeros.push_back(0.0);
  return as_map(ref);
}
}  // namespace

TEST(Julia, HoldsAndIsStrictForNonAutomorphisms) {
  oracle::Rng rng(71);
  for (int i = 0; i < 100; ++i) {
    const auto ref = oracle::random_blaschke(rng, rng.integer(1, 5));
    const auto f = as_map(ref);
    const auto d = hj::dilation(f, hj::BoundaryPoint(rng.circle()));
    const auto r = hj::check_julia(f, d.sigma, d.tau, d.beta, hj::DiskPoint(rng.disk(0.95)));
    // Independent evaluation of both sides.
    const cplx z = r.inputs.back().first == "z" ? std::get<cplx>(r.inputs.back().second) : cplx(0.0);
    EXPECT_NEAR(r.lhs, oracle::julia_side(d.tau.value(), ref(z)), 1e-12 * std::max(1.0, r.lhs));
    EXPECT_NEAR(r.rhs, d.beta * oracle::horocycle(d.sigma.value(), z), 1e-12 * std::max(1.0, r.rhs));
    EXPECT_TRUE(sound(r)) << "gap " << r.gap;
  }
}

TEST(Julia, HorocycleImageStaysInsideScaledHorocycle) {
  const auto f = hj::SelfMap::blaschke(hj::BlaschkeProduct(0.2, {cplx(0.1, 0.3), cplx(-0.5, 0.2)}));
  for (double R : {0.1, 1.0, 4.0}) {
    const auto d = hj::dilation(f, hj::BoundaryPoint(cplx(0.0, 1.0)));
    const auto r = hj::check_horocycle_image(f, d.sigma, d.tau, d.beta, R);
    EXPECT_TRUE(r.consistent());
    EXPECT_LT(r.lhs, r.rhs);
  }
}

TEST(MultipointJulia, TwoPointIsTheLengthOneChain) {
  oracle::Rng rng(72);
  for (int i = 0; i < 50; ++i) {
    const auto f = as_map(oracle::random_blaschke(rng, rng.integer(2, 5)));
    const hj::BoundaryPoint s(rng.circle());
    const hj::DiskPoint z(rng.disk(0.95)), w(rng.disk(0.9));
    const auto two = hj::check_two_point_julia(f, s, z, w);
    const hj::DeltaChain chain(f, {w});
    const auto multi = hj::check_multipoint_julia(chain, hj::beta_chain(chain, s), z);
    EXPECT_EQ(two.lhs, multi.lhs);
    EXPECT_EQ(two.rhs, multi.rhs);
    EXPECT_TRUE(sound(two)) << two.gap;
  }
}

TEST(MultipointJulia, EqualityExactlyAtDegreeKPlusOne) {
  oracle::Rng rng(73);
  int strict = 0, total = 0;
  for (int i = 0; i < 60; ++i) {
    const int d = rng.integer(2, 6);
    const auto f = as_map(oracle::random_blaschke(rng, d));
    const hj::BoundaryPoint s(rng.circle());
    for (int k = 1; k < d; ++k) {
      std::vector<hj::DiskPoint> pts;
      for (int j = 0; j < k; ++j) pts.emplace_back(rng.disk(0.9));
      const hj::DeltaChain chain(f, pts);
      const auto r = hj::check_multipoint_julia(chain, hj::beta_chain(chain, s), hj::DiskPoint(rng.disk(0.95)));
      EXPECT_TRUE(sound(r)) << "d " << d << " k " << k << " gap " << r.gap;
      if (k == d - 1) {
        EXPECT_LE(std::abs(r.gap), 1e-7);
      }
      if (k == d - 2) {
        ++total;
        strict += r.gap > 1e-4;
      }
    }
  }
  EXPECT_GE(strict, static_cast<int>(0.9 * total));
}

TEST(MultipointJulia, RejectsChainsThatExhaustTheDegree) {
  const auto f = hj::SelfMap::blaschke(hj::BlaschkeProduct::monomial(2));
  EXPECT_THROW(hj::check_two_point_julia(hj::SelfMap::blaschke(hj::BlaschkeProduct::monomial(1)), hj::BoundaryPoint(1.0),
                                         hj::DiskPoint(0.1), hj::DiskPoint(0.2)),
               hj::Error);
  EXPECT_THROW(hj::DeltaChain(f, {hj::DiskPoint(0.1), hj::DiskPoint(0.2)}), hj::Error);
}

TEST(MultipointJulia, NonBlaschkeMapsAreStrict) {
  const auto f = hj::SelfMap::rational(hj::RationalMap(hj::Polynomial({0.0, 0.0, 0.5, 0.5})));
  oracle::Rng rng(74);
  for (int i = 0; i < 30; ++i) {
    const hj::DeltaChain chain(f, {hj::DiskPoint(rng.disk(0.8)), hj::DiskPoint(rng.disk(0.8))});
    const auto r = hj::check_multipoint_julia(chain, hj::beta_chain(chain, hj::BoundaryPoint(1.0)), hj::DiskPoint(rng.disk(0.9)));
    EXPECT_EQ(r.equality_expected, false);
    EXPECT_TRUE(sound(r)) << r.gap;
  }
}

TEST(MultipointSchwarzPick, FinalStageContracts) {
  oracle::Rng rng(75);
  for (int i = 0; i < 40; ++i) {
    const int d = rng.integer(3, 6);
    const auto f = as_map(oracle::random_blaschke(rng, d));
    const hj::DeltaChain chain(f, {hj::DiskPoint(rng.disk(0.8)), hj::DiskPoint(rng.disk(0.8))});
    const auto r = hj::check_multipoint_schwarz_pick(chain, hj::DiskPoint(rng.disk(0.9)), hj::DiskPoint(rng.disk(0.9)));
    EXPECT_TRUE(sound(r)) << r.gap;
  }
}

TEST(Mercer, ValueLiesInTheDiskAndRoutesAgree) {
  oracle::Rng rng(76);
  for (int i = 0; i < 100; ++i) {
    const int d = rng.integer(2, 5);
    const auto ref = oracle::random_blaschke(rng, d);
    const auto f = as_map(ref);
    const hj::BoundaryPoint s(rng.circle());
    const hj::DiskPoint w(rng.disk(0.9)), z(rng.disk(0.95));
    const auto disk = hj::mercer_disk(f, s, w, z);
    EXPECT_LT(std::abs(ref(z.value()) - disk.center), disk.radius + 1e-9);
    const auto image = hj::mercer_image_disk(f, s, w, z);
    EXPECT_NEAR(std::abs(disk.center - image.center), 0.0, 1e-8);
    EXPECT_NEAR(disk.radius, image.radius, 1e-8);
    const auto r = hj::check_mercer(f, s, w, z);
    EXPECT_TRUE(sound(r)) << "degree " << d << " gap " << r.gap;
  }
}

TEST(Ladder, WorkedMonomialValues) {
  const auto f = hj::SelfMap::blaschke(hj::BlaschkeProduct::monomial(3));
  const hj::DeltaChain chain(f, {hj::DiskPoint(0.0), hj::DiskPoint(0.0)});
  const auto b = hj::beta_chain(chain, hj::BoundaryPoint(1.0));
  const auto l = hj::lower_bound_ladder(chain, b, hj::DiskPoint(0.0));
  ASSERT_EQ(l.terms.size(), 3u);
  EXPECT_NEAR(l.terms[0], 1.0, 1e-14);
  EXPECT_NEAR(l.terms[1], 2.0, 1e-14);
  EXPECT_NEAR(l.terms[2], 3.0, 1e-14);
  EXPECT_TRUE(hj::verify_ladder(l, f, 3.0).consistent());
}

TEST(Ladder, BoundedByBetaMonotoneAndSharp) {
  oracle::Rng rng(77);
  for (int i = 0; i < 60; ++i) {
    const int d = rng.integer(2, 6);
    const auto ref = oracle::random_blaschke(rng, d);
    const auto f = as_map(ref);
    const hj::BoundaryPoint s(rng.circle());
    const double beta = std::abs(ref.derivative(s.value()));
    std::vector<hj::DiskPoint> pts;
    for (int j = 0; j < d; ++j) pts.emplace_back(rng.disk(0.9));
    for (int k = 0; k < d; ++k) {
      const hj::DeltaChain chain(f, std::vector<hj::DiskPoint>(pts.begin(), pts.begin() + k));
      const auto b = hj::beta_chain(chain, s);
      const auto full = hj::lower_bound_ladder(chain, b, pts[static_cast<std::size_t>(k)]);
      const auto simple = hj::lower_bound_simplified(chain, b, pts[static_cast<std::size_t>(k)]);
      EXPECT_LE(full.final, beta + 1e-9);
      EXPECT_LE(simple.final, full.final + 1e-12);
      EXPECT_TRUE(full.nondecreasing());
      if (k == d - 1) {
        EXPECT_NEAR(full.final, beta, 1e-7 * std::max(1.0, beta));
      }
      EXPECT_TRUE(sound(hj::verify_ladder(full, f, beta)));
    }
  }
}

TEST(Ladder, SeriesApproachesBetaForNonBlaschkeMaps) {
  const auto f = hj::SelfMap::rational(hj::RationalMap(hj::Polynomial({0.0, 0.0, 0.5, 0.5})));
  const hj::BoundaryPoint one(1.0);
  const auto d = hj::dilation(f, one);
  const auto series = hj::lower_bound_series(f, one, d.tau, [](int) { return cplx(0.0); });
  EXPECT_LE(series.final, d.beta + 1e-9);
  EXPECT_TRUE(series.nondecreasing(1e-12));
  EXPECT_GT(series.terms.size(), 2u);
}

TEST(CowenPommerenke, WorkedExamples) {
  const auto f = hj::SelfMap::blaschke(hj::BlaschkeProduct(0.0, {0.0, -0.5}));
  const hj::BoundaryPoint one(1.0);
  EXPECT_NEAR(hj::dilation(f, one).beta, 4.0 / 3.0, 1e-12);
  const auto r = hj::cowen_pommerenke(f, hj::DiskPoint(0.0), {one}, {4.0 / 3.0});
  EXPECT_NEAR(r.lhs, 3.0, 1e-10);
  EXPECT_NEAR(r.rhs, 3.0, 1e-10);
  EXPECT_TRUE(r.consistent());

  const auto z3 = hj::SelfMap::blaschke(hj::BlaschkeProduct::monomial(3));
  const auto r3 = hj::cowen_pommerenke(z3, hj::DiskPoint(0.0), hj::boundary_fixed_points(z3), {3.0, 3.0});
  EXPECT_NEAR(r3.lhs, 1.0, 1e-12);
  EXPECT_NEAR(r3.rhs, 1.0, 1e-12);
  EXPECT_TRUE(r3.consistent());
}

TEST(CowenPommerenke, StrictWhenFixedPointsAreMissing) {
  const auto z3 = hj::SelfMap::blaschke(hj::BlaschkeProduct::monomial(3));
  const auto r = hj::cowen_pommerenke(z3, hj::DiskPoint(0.0), {hj::BoundaryPoint(1.0)}, {3.0});
  EXPECT_EQ(r.equality_expected, false);
  EXPECT_TRUE(r.consistent());
  EXPECT_THROW(hj::cowen_pommerenke(z3, hj::DiskPoint(0.0), {hj::BoundaryPoint(cplx(0.0, 1.0))}, {3.0}), hj::Error);
}

TEST(CowenPommerenkeMultiple, OriginWitness) {
  const auto f = hj::SelfMap::blaschke(hj::BlaschkeProduct(0.0, {0.0, 0.0, -0.5}));
  const hj::BoundaryPoint one(1.0);
  EXPECT_NEAR(hj::dilation(f, one).beta, 7.0 / 3.0, 1e-12);
  const auto r = hj::cowen_pommerenke_multiple(f, hj::DiskPoint(0.0), 2, {one}, {7.0 / 3.0});
  EXPECT_NEAR(r.lhs, 3.0, 1e-9);
  EXPECT_NEAR(r.rhs, 3.0, 1e-9);
  EXPECT_TRUE(r.consistent());
}

TEST(CowenPommerenkeMultiple, ConjugatedWitness) {
  const auto f = hj::parse_map_spec(hj::json::parse(R"({"kind":"conjugated",
      "inner":{"kind":"blaschke","zeros":[[0,0],[0,0],[-0.5,0]]},"automorphism":{"a":[0.3,0]}})"));
  const hj::DiskPoint z0(0.3);
  const auto sigmas = hj::boundary_condition_points(f, z0, 2);
  ASSERT_EQ(sigmas.size(), 1u);
  EXPECT_NEAR(std::abs(sigmas[0].value() - 1.0), 0.0, 1e-9);
  const auto r = hj::cowen_pommerenke_multiple(f, z0, 2, sigmas, {hj::dilation(f, sigmas[0]).beta});
  EXPECT_NEAR(r.lhs, r.rhs, 1e-7);
  EXPECT_NEAR(r.rhs, 3.0, 1e-7);
  EXPECT_TRUE(r.consistent());
}

TEST(CowenPommerenkeMultiple, UnknownStructureIsRecordedAsAssumed) {
  const auto f = hj::SelfMap::black_box([](cplx z) { return z * z * (z + 0.5) / (1.0 + 0.5 * z); });
  const auto r = hj::cowen_pommerenke_multiple(f, hj::DiskPoint(0.0), 2, {hj::BoundaryPoint(1.0)}, {7.0 / 3.0});
  EXPECT_NE(r.note.find("assumed"), std::string::npos);
  EXPECT_FALSE(r.equality_expected.has_value());
  EXPECT_NEAR(r.lhs, 3.0, 1e-6);
}

TEST(CowenPommerenkeMultiple, NonpositiveDenominatorIsInfinite) {
  const auto f = hj::SelfMap::blaschke(hj::BlaschkeProduct(0.0, {0.0, 0.0, -0.5}));
  const auto r = hj::cowen_pommerenke_multiple(f, hj::DiskPoint(0.0), 2, {hj::BoundaryPoint(1.0)}, {1.5});
  EXPECT_TRUE(std::isinf(r.lhs));
  EXPECT_FALSE(r.holds);
  EXPECT_FALSE(r.note.empty());
}

TEST(QuotientJulia, OriginFixingMaps) {
  oracle::Rng rng(78);
  for (int i = 0; i < 40; ++i) {
    const int d = rng.integer(2, 5);
    const auto f = origin_blaschke(rng, d);
    const hj::BoundaryPoint s(rng.circle());
    for (const auto& r : hj::check_corollary_CP(f, s, hj::DiskPoint(rng.disk(0.9)))) {
      EXPECT_TRUE(sound(r)) << r.name << " degree " << d << " gap " << r.gap;
    }
    if (d >= 3) {
      const auto r = hj::check_proposition_2CP(f, s, hj::DiskPoint(rng.disk(0.9)));
      EXPECT_TRUE(sound(r)) << r.name << " degree " << d << " gap " << r.gap;
      const auto r0 = hj::check_proposition_2CP(f, s, hj::DiskPoint(0.0));
      EXPECT_TRUE(sound(r0)) << r0.name << " degree " << d << " gap " << r0.gap;
    }
  }
}

TEST(QuotientJulia, SquareGivesEqualityOneEqualsBetaMinusOne) {
  const auto f = hj::SelfMap::blaschke(hj::BlaschkeProduct::monomial(2));
  const auto reports = hj::check_corollary_CP(f, hj::BoundaryPoint(1.0), hj::DiskPoint(cplx(0.2, 0.4)));
  ASSERT_EQ(reports.size(), 2u);
  EXPECT_EQ(reports[1].name, "quotient-julia-fixed");
  EXPECT_NEAR(reports[1].lhs, 1.0, 1e-12);
  EXPECT_NEAR(reports[1].rhs, 1.0, 1e-12);
  EXPECT_TRUE(reports[0].equality);
}

TEST(QuotientJulia, HigherMultiplicityAtTheOrigin) {
  oracle::Rng rng(79);
  for (int i = 0; i < 30; ++i) {
    const int k = rng.integer(1, 3);
    auto ref = oracle::random_blaschke(rng, rng.integer(1, 3));
    for (int j = 0; j < k; ++j) ref.zeros.push_back(0.0);
    const auto f = as_map(ref);
    const auto r = hj::check_proposition_CPn(f, k, hj::BoundaryPoint(rng.circle()), hj::DiskPoint(rng.disk(0.9)));
    EXPECT_TRUE(sound(r)) << "k " << k << " gap " << r.gap;
  }
}

TEST(AngularDerivativeOfQuotient, RadialLimitsMatch) {
  oracle::Rng rng(80);
  for (int i = 0; i < 20; ++i) {
    const auto f = as_map(oracle::random_blaschke(rng, rng.integer(2, 5)));
    const auto r = hj::check_2p_jwc(f, hj::BoundaryPoint(rng.circle()), hj::DiskPoint(rng.disk(0.8)));
    EXPECT_TRUE(r.holds) << "discrepancy " << r.lhs;
  }
}

TEST(Reports, ClassificationSemantics) {
  const hj::Tolerances tol{1e-9, 1e-7};
  EXPECT_TRUE(hj::make_report("x", 1.0, 1.0, true, tol).consistent());
  EXPECT_FALSE(hj::make_report("x", 1.0, 2.0, true, tol).consistent());
  EXPECT_TRUE(hj::make_report("x", 1.0, 1.0, false, tol).consistent());
  EXPECT_TRUE(hj::make_report("x", 1.0, 1.0, false, tol).unexpected_equality());
  EXPECT_TRUE(hj::make_report("x", 1.0, 2.0, false, tol).consistent());
  EXPECT_FALSE(hj::make_report("x", 2.0, 1.0, std::nullopt, tol).holds);
  EXPECT_TRUE(hj::make_report("x", 1.0 + 5e-10, 1.0, std::nullopt, tol).holds);
  EXPECT_TRUE(hj::make_report("x", 1.0 + 5e-10, 1.0, std::nullopt, tol, 1e-3).holds);
  EXPECT_TRUE(hj::make_report("x", 1.01, 1.0, std::nullopt, tol, 0.1).holds);
}
