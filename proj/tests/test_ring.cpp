#include <gtest/gtest.h>

#include "kcs/sampling.hpp"
#include "test_support.hpp"

using namespace kcs;
using kcs::test::kahler;
using kcs::test::lit;

namespace {

RingData p2_data() {
  RingData d;
  d.name = "p2";
  d.n = 2;
  d.basis = {{"1"}, {"h"}, {"h^2"}};
  d.products = {{1, 0, 1, 0, {Rational(1)}}};
  d.integral = {Rational(1)};
  return d;
}

std::string ring_error_constraint(const RingData& d) {
  try {
    IntersectionRing r(d);
  } catch (const RingError& e) {
    return e.constraint();
  }
  return "";
}

}  // namespace

TEST(Wedge, HyperplaneSquared) {
  const ZooEntry p2 = projective_space(2);
  const ClassVector h = lit(p2, "h");
  EXPECT_EQ(p2.ring.wedge(h, h), lit(p2, "1*h^2"));
  EXPECT_EQ(p2.ring.wedge(p2.ring.unit(), h), h);
}

TEST(Wedge, BlowupCube) {
  const ZooEntry bl = blowup_pn(4);
  const ClassVector w = lit(bl, "2*H-E");
  EXPECT_EQ(bl.ring.product(std::vector<ClassVector>{w, w, w}), lit(bl, "8*H^3-1*E^3"));
}

TEST(Wedge, DegreeOverflowRejected) {
  const ZooEntry p2 = projective_space(2);
  EXPECT_THROW(p2.ring.wedge(lit(p2, "h^2"), lit(p2, "h")), std::invalid_argument);
  EXPECT_THROW(p2.ring.power(lit(p2, "h"), 3), std::invalid_argument);
}

TEST(Power, Examples) {
  const ZooEntry p3 = projective_space(3);
  EXPECT_EQ(p3.ring.power(lit(p3, "h"), 3), lit(p3, "h^3"));
  EXPECT_EQ(p3.ring.power(lit(p3, "h"), 0), p3.ring.unit());
  const ZooEntry bl = blowup_pn(4);
  // 16 H^4 + E^4 with H^4 = pt and E^4 = -pt
  EXPECT_EQ(bl.ring.power(lit(bl, "2*H-E"), 4), lit(bl, "15*pt"));
}

TEST(Integrate, Examples) {
  const ZooEntry p2 = projective_space(2);
  EXPECT_EQ(p2.ring.integrate(p2.ring.power(lit(p2, "h"), 2)), GaussianRational(1));
  const ZooEntry bl = blowup_pn(4);
  EXPECT_EQ(bl.ring.integrate(bl.ring.power(lit(bl, "E"), 4)), GaussianRational(-1));
  const ZooEntry pp = load_bundled("p1xp1");
  EXPECT_EQ(pp.ring.integrate(pp.ring.power(lit(pp, "a+b"), 2)), GaussianRational(2));
  EXPECT_THROW(p2.ring.integrate(lit(p2, "h")), std::invalid_argument);
}

TEST(Validate, ProjectiveSpacePasses) { EXPECT_TRUE(validate_ring(projective_space(3).ring).ok()); }

TEST(Validate, ZeroIntegralBreaksDuality) {
  RingData d = p2_data();
  d.integral = {Rational(0)};
  const ValidationReport rep = validate_ring(IntersectionRing(d));
  ASSERT_FALSE(rep.ok());
  EXPECT_EQ(rep.issues.front().constraint, "poincare-duality");
  EXPECT_EQ(rep.issues.front().location, "p = 0");
}

TEST(Validate, ProductPasses) { EXPECT_TRUE(validate_ring(product(projective_space(1), projective_space(1)).ring).ok()); }

TEST(Validate, NonAssociativeDetected) {
  RingData d;
  d.name = "broken";
  d.n = 3;
  d.basis = {{"1"}, {"x", "y"}, {"u", "v"}, {"pt"}};
  d.products = {{1, 0, 1, 0, {Rational(1), Rational(0)}},
                {1, 1, 1, 1, {Rational(0), Rational(1)}},
                {1, 0, 1, 1, {Rational(0), Rational(0)}},
                {1, 0, 2, 0, {Rational(1)}},
                {1, 1, 2, 1, {Rational(1)}},
                {1, 0, 2, 1, {Rational(1)}}};
  d.integral = {Rational(1)};
  const ValidationReport rep = validate_ring(IntersectionRing(d));
  ASSERT_FALSE(rep.ok());
  EXPECT_EQ(rep.issues.front().constraint, "associativity");
}

TEST(RingErrors, ConstraintNames) {
  RingData d = p2_data();
  d.products.push_back({1, 0, 1, 0, {Rational(2)}});
  EXPECT_EQ(ring_error_constraint(d), "commutativity");

  d = p2_data();
  d.products.push_back({0, 0, 1, 0, {Rational(2)}});
  EXPECT_EQ(ring_error_constraint(d), "identity");

  d = p2_data();
  d.products.push_back({1, 0, 2, 0, {Rational(1)}});
  EXPECT_EQ(ring_error_constraint(d), "degree-overflow");

  d = p2_data();
  d.products[0].out = {Rational(1), Rational(1)};
  EXPECT_EQ(ring_error_constraint(d), "shape");

  d = p2_data();
  d.basis[1][0] = "1";
  EXPECT_EQ(ring_error_constraint(d), "labels");

  d = p2_data();
  d.basis.pop_back();
  EXPECT_EQ(ring_error_constraint(d), "grading");
}

TEST(RingErrors, FlagOnlyInDegreeOne) {
  EXPECT_THROW(ClassVector(2, Vector{1}, Positivity::kahler), std::invalid_argument);
  const ZooEntry p2 = projective_space(2);
  EXPECT_EQ(kahler(p2, "h").flag(), Positivity::kahler);
  EXPECT_EQ((kahler(p2, "h") + kahler(p2, "h")).flag(), Positivity::none);
}

TEST(KahlerSanity, Examples) {
  const ZooEntry p4 = projective_space(4);
  EXPECT_TRUE(sanity_check_kahler(p4.ring, lit(p4, "h")).passed);
  const ZooEntry bl = blowup_pn(4);
  const KahlerSanityReport ok = sanity_check_kahler(bl.ring, lit(bl, "2*H-E"));
  EXPECT_TRUE(ok.passed);
  EXPECT_EQ(ok.volume, Rational(15));
  ASSERT_TRUE(ok.h11_inertia.has_value());
  EXPECT_EQ(*ok.h11_inertia, (Inertia{1, 1, 0}));
  EXPECT_EQ(ok.checked.flag(), Positivity::kahler);
  const KahlerSanityReport bad = sanity_check_kahler(bl.ring, lit(bl, "E"));
  EXPECT_FALSE(bad.passed);
  EXPECT_EQ(bad.volume, Rational(-1));
  EXPECT_EQ(bad.checked.flag(), Positivity::none);
}

TEST(MixedSetup, Preconditions) {
  const ZooEntry bl = blowup_pn(4);
  const ClassVector w = kahler(bl, "2*H-E");
  EXPECT_NO_THROW(MixedSetup::make(bl.ring, 1, w, {w, w}));
  EXPECT_THROW(MixedSetup::make(bl.ring, 1, w, {w}), std::invalid_argument);
  EXPECT_THROW(MixedSetup::make(bl.ring, 3, w, {}), std::invalid_argument);
  EXPECT_THROW(MixedSetup::make(bl.ring, 2, lit(bl, "2*H-E"), {}), std::invalid_argument);
  const MixedSetup s = MixedSetup::make(bl.ring, 2, w, {});
  EXPECT_EQ(s.volume(), Rational(15));
  EXPECT_EQ(s.mode(), SetupMode::strict);
  EXPECT_EQ(MixedSetup::make(bl.ring, 2, lit(bl, "H", Positivity::nef), {}).mode(), SetupMode::boundary);
}

class ZooRingProperties : public ::testing::TestWithParam<std::string> {};

TEST_P(ZooRingProperties, AlgebraLaws) {
  const ZooEntry e = load_bundled(GetParam());
  const IntersectionRing& r = e.ring;
  const std::size_t n = r.dim();
  for (std::size_t p = 0; p <= n; ++p) EXPECT_EQ(r.hodge(p), r.hodge(n - p));
  for (std::uint64_t k = 0; k < 30; ++k) {
    Xoshiro256 gen = Xoshiro256::stream(21, k);
    const std::size_t da = gen.below(n + 1);
    const std::size_t db = gen.below(n - da + 1);
    const std::size_t dc = gen.below(n - da - db + 1);
    const ClassVector a = random_class(r, da, 5, gen, true);
    const ClassVector b = random_class(r, db, 5, gen, true);
    const ClassVector c = random_class(r, dc, 5, gen, true);
    EXPECT_EQ(r.wedge(a, b), r.wedge(b, a));
    EXPECT_EQ(r.wedge(r.wedge(a, b), c), r.wedge(a, r.wedge(b, c)));
    EXPECT_EQ(r.wedge(a, b).conj(), r.wedge(a.conj(), b.conj()));
    const ClassVector top = random_class(r, n, 5, gen, true);
    EXPECT_EQ(r.integrate(top.conj()), r.integrate(top).conj());
  }
}

INSTANTIATE_TEST_SUITE_P(Catalogue, ZooRingProperties, ::testing::ValuesIn(catalogue()));
