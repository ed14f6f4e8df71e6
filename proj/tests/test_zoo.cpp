#include <gtest/gtest.h>

#include <cstdlib>

#include "kcs/hodge.hpp"
#include "kcs/inequality.hpp"
#include "kcs/sampling.hpp"
#include "test_support.hpp"

using namespace kcs;
using kcs::test::lit;

TEST(ProjectiveSpace, Grading) {
  EXPECT_EQ(projective_space(1).ring.hodge_numbers(), (std::vector<std::size_t>{1, 1}));
  const ZooEntry p4 = projective_space(4);
  EXPECT_EQ(p4.ring.hodge_numbers(), (std::vector<std::size_t>(5, 1)));
  EXPECT_TRUE(hodge_condition(p4.ring, 2, Direction::cs).holds);
  EXPECT_EQ(p4.ring.integrate(p4.ring.power(lit(p4, "h"), 4)), GaussianRational(1));
  EXPECT_THROW(projective_space(0), std::invalid_argument);
}

TEST(Product, LinesAndPlanes) {
  const ZooEntry pp = product(projective_space(1), projective_space(1));
  EXPECT_EQ(pp.ring.hodge_numbers(), (std::vector<std::size_t>{1, 2, 1}));
  const ClassVector a = pp.ring.basis_vector(1, 0);
  const ClassVector b = pp.ring.basis_vector(1, 1);
  EXPECT_EQ(pp.ring.pairing(a, b), GaussianRational(1));
  EXPECT_TRUE(pp.ring.wedge(a, a).is_zero());
  EXPECT_TRUE(pp.ring.wedge(b, b).is_zero());
  EXPECT_EQ(product(projective_space(1), projective_space(2)).ring.hodge_numbers(),
            (std::vector<std::size_t>{1, 2, 2, 1}));
}

TEST(Product, WithPointIsACopy) {
  const ZooEntry bl = blowup_pn(3);
  const ZooEntry copy = product(bl, point(), "blp3");
  EXPECT_EQ(copy.ring, bl.ring);
  ASSERT_EQ(copy.samples.size(), bl.samples.size());
  for (std::size_t k = 0; k < bl.samples.size(); ++k) {
    EXPECT_EQ(copy.samples[k].cls, bl.samples[k].cls);
    EXPECT_EQ(copy.samples[k].cls.flag(), bl.samples[k].cls.flag());
  }
}

TEST(Product, Samples) {
  const ZooEntry pp = load_bundled("p1xp1");
  ASSERT_NE(pp.find_sample("a+b"), nullptr);
  EXPECT_EQ(pp.find_sample("a+b")->cls.flag(), Positivity::kahler);
  EXPECT_EQ(pp.find_sample("a")->cls.flag(), Positivity::nef);
  EXPECT_EQ(pp.find_sample("b")->cls, lit(pp, "b"));
}

TEST(Blowup, Examples) {
  const ZooEntry b2 = blowup_pn(2);
  const IntersectionRing& r2 = b2.ring;
  EXPECT_EQ(r2.pairing(lit(b2, "H"), lit(b2, "H")), GaussianRational(1));
  EXPECT_EQ(r2.pairing(lit(b2, "E"), lit(b2, "E")), GaussianRational(-1));
  EXPECT_EQ(r2.pairing(lit(b2, "H"), lit(b2, "E")), GaussianRational(0));
  EXPECT_TRUE(validate_ring(r2).ok());

  const ZooEntry b4 = blowup_pn(4);
  EXPECT_EQ(b4.ring.hodge_numbers(), (std::vector<std::size_t>{1, 2, 2, 2, 1}));
  EXPECT_EQ(b4.ring.integrate(b4.ring.power(lit(b4, "E"), 4)), GaussianRational(-1));
  EXPECT_EQ(b4.ring.integrate(b4.ring.power(lit(b4, "2*H-E"), 4)), GaussianRational(15));
  EXPECT_FALSE(sanity_check_kahler(b4.ring, lit(b4, "E")).passed);
  EXPECT_EQ(blowup_pn(3).ring.integrate(blowup_pn(3).ring.power(lit(blowup_pn(3), "E"), 3)), GaussianRational(1));
  EXPECT_THROW(blowup_pn(1), std::invalid_argument);
}

TEST(Bundled, QuadricAndFlag) {
  const ZooEntry q = load_bundled("quadric4");
  EXPECT_EQ(q.ring.hodge_numbers(), (std::vector<std::size_t>{1, 1, 2, 1, 1}));
  EXPECT_TRUE(hodge_condition(q.ring, 2, Direction::cs).holds);
  const ClassVector h = q.find_sample("h")->cls;
  EXPECT_TRUE(hr_check(q.ring, 2, h, std::vector<ClassVector>{}).passed());
  EXPECT_TRUE(hr_check(q.ring, 1, h, std::vector<ClassVector>{h, h}).passed());

  const ZooEntry f = load_bundled("flag3");
  EXPECT_EQ(f.ring.hodge(1), 2u);
  EXPECT_EQ(f.ring.hodge(2), 2u);
  const ClassVector w = f.find_sample("h1+h2")->cls;
  EXPECT_TRUE(hr_check(f.ring, 1, w, std::vector<ClassVector>{w}).passed());
}

TEST(Bundled, UnknownName) {
  EXPECT_THROW(load_bundled("p9"), std::invalid_argument);
  EXPECT_THROW(load_ring_argument("zoo:nothing"), std::invalid_argument);
}

TEST(Bundled, MatchesBuilders) {
  for (const auto& name : catalogue()) {
    if (name == "quadric4" || name == "flag3") continue;
    const ZooEntry built = build_catalogue_entry(name);
    EXPECT_EQ(serialize_ring_bundle(load_bundled(name)), serialize_ring_bundle(built)) << name;
  }
}

TEST(Bundled, DataDirectoryOverride) {
  const std::string saved = data_directory().string();
  ::setenv("KCS_DATA_DIR", "/nonexistent-kcs-data", 1);
  EXPECT_EQ(data_directory(), std::filesystem::path("/nonexistent-kcs-data"));
  EXPECT_THROW(load_bundled("p2"), BundleError);
  ::unsetenv("KCS_DATA_DIR");
  EXPECT_EQ(data_directory().string(), saved);
}

class ZooInvariants : public ::testing::TestWithParam<std::string> {};

TEST_P(ZooInvariants, ValidatorsAcceptEntry) {
  const ZooEntry e = load_bundled(GetParam());
  const IntersectionRing& r = e.ring;
  EXPECT_TRUE(validate_ring(r).ok());
  const std::vector<ClassVector> gens = e.generators();
  for (const auto& s : e.samples) {
    if (s.cls.flag() == Positivity::kahler) EXPECT_TRUE(sanity_check_kahler(r, s.cls).passed) << s.name;
  }
  for (std::size_t p = 1; 2 * p <= r.dim(); ++p) {
    const MixedSetup s = canonical_setup(r, p, gens);
    const HrReport hr = hr_check(r, p, s.omega(), s.omegas());
    EXPECT_TRUE(hr.passed()) << "p = " << p;
    EXPECT_EQ(hr.primitive.dimension(), r.hodge(p) - r.hodge(p - 1));
  }
}

INSTANTIATE_TEST_SUITE_P(Catalogue, ZooInvariants, ::testing::ValuesIn(catalogue()));
