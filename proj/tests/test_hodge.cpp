#include <gtest/gtest.h>

#include "kcs/hodge.hpp"
#include "kcs/sampling.hpp"
#include "test_support.hpp"

using namespace kcs;
using kcs::test::kahler;
using kcs::test::lit;
using kcs::test::vec;

TEST(Lefschetz, PointClassOfP2) {
  const ZooEntry p2 = projective_space(2);
  const ClassVector h = kahler(p2, "h");
  const LefschetzOperator op = lefschetz_operator(p2.ring, 0, std::vector<ClassVector>{h, h});
  EXPECT_EQ(op.matrix, (Matrix{{1}}));
  EXPECT_TRUE(op.isomorphism);
}

TEST(Lefschetz, EmptyProductIsIdentity) {
  const ZooEntry bl = blowup_pn(4);
  const LefschetzOperator op = lefschetz_operator(bl.ring, 2, std::vector<ClassVector>{});
  EXPECT_EQ(op.matrix, Matrix::identity(2));
  EXPECT_TRUE(op.isomorphism);
}

TEST(Lefschetz, BlowupDegreeOne) {
  const ZooEntry bl = blowup_pn(4);
  const ClassVector w = kahler(bl, "2*H-E");
  const LefschetzOperator op = lefschetz_operator(bl.ring, 1, std::vector<ClassVector>{w, w});
  EXPECT_EQ(rank(op.matrix), 2u);
  EXPECT_TRUE(op.isomorphism);
  EXPECT_THROW(lefschetz_operator(bl.ring, 1, std::vector<ClassVector>{w}), std::invalid_argument);
}

TEST(Primitive, ProductOfLines) {
  const ZooEntry pp = load_bundled("p1xp1");
  const PrimitiveSubspace prim = primitive_basis(pp.ring, 1, kahler(pp, "a+b"), std::vector<ClassVector>{});
  ASSERT_EQ(prim.dimension(), 1u);
  EXPECT_EQ(prim.basis[0], lit(pp, "a-b"));
}

TEST(Primitive, ProjectiveSpaceHasNone) {
  for (std::size_t n : {2u, 3u, 4u}) {
    const ZooEntry e = projective_space(n);
    const ClassVector h = kahler(e, "h");
    for (std::size_t p = 1; 2 * p <= n; ++p) {
      EXPECT_EQ(primitive_basis(e.ring, p, h, std::vector<ClassVector>(n - 2 * p, h)).dimension(), 0u);
    }
  }
}

TEST(Primitive, BlowupDegreeOne) {
  const ZooEntry bl = blowup_pn(4);
  const ClassVector w = kahler(bl, "2*H-E");
  const PrimitiveSubspace prim = primitive_basis(bl.ring, 1, w, std::vector<ClassVector>{w, w});
  ASSERT_EQ(prim.dimension(), 1u);
  EXPECT_EQ(prim.basis[0], lit(bl, "H-8*E"));
}

TEST(GramQ, ProductOfLines) {
  const ZooEntry pp = load_bundled("p1xp1");
  const SymmetricFormReport rep = gram_matrix_Q(pp.ring, 1, std::vector<ClassVector>{});
  EXPECT_EQ(rep.gram, (Matrix{{0, -1}, {-1, 0}}));
  EXPECT_EQ(rep.sign_factor, -1);
  EXPECT_EQ(rep.inertia, (Inertia{1, 1, 0}));
  const Matrix restricted = restricted_gram(pp.ring, 1, {lit(pp, "a-b")}, pp.ring.unit());
  EXPECT_EQ(restricted, (Matrix{{2}}));
}

TEST(GramQ, ProjectiveSpaceBothConventions) {
  const ZooEntry p4 = projective_space(4);
  const ClassVector h = kahler(p4, "h");
  const SymmetricFormReport rep = gram_matrix_Q(p4.ring, 1, std::vector<ClassVector>{h, h});
  EXPECT_EQ(rep.gram, (Matrix{{-1}}));
  EXPECT_EQ(rep.inertia, (Inertia{0, 1, 0}));
  EXPECT_EQ(rep.unsigned_inertia, (Inertia{1, 0, 0}));
}

TEST(HodgeRiemann, Examples) {
  const ZooEntry pp = load_bundled("p1xp1");
  const HrReport a = hr_check(pp.ring, 1, kahler(pp, "a+b"), std::vector<ClassVector>{});
  EXPECT_TRUE(a.passed());
  EXPECT_EQ(a.restricted, (Matrix{{2}}));

  const ZooEntry p3 = projective_space(3);
  const ClassVector h = kahler(p3, "h");
  const HrReport b = hr_check(p3.ring, 1, h, std::vector<ClassVector>{h});
  EXPECT_TRUE(b.passed());
  EXPECT_EQ(b.primitive.dimension(), 0u);

  const ZooEntry bl = blowup_pn(4);
  const ClassVector w = kahler(bl, "2*H-E");
  const HrReport c = hr_check(bl.ring, 1, w, std::vector<ClassVector>{w, w});
  EXPECT_TRUE(c.passed());
  EXPECT_EQ(c.restricted, (Matrix{{60}}));
  EXPECT_EQ(c.h11_unsigned_inertia, (Inertia{1, 1, 0}));

  EXPECT_THROW(hr_check(pp.ring, 1, lit(pp, "a", Positivity::nef), std::vector<ClassVector>{}), std::invalid_argument);
}

TEST(HodgeRiemann, WrongFlagIsReportedNotThrown) {
  // H-2E lies outside the Kahler cone; flagged by hand, the report exposes it.
  const ZooEntry bl = blowup_pn(2);
  const HrReport rep = hr_check(bl.ring, 1, kahler(bl, "H-2*E"), std::vector<ClassVector>{});
  EXPECT_FALSE(rep.passed());
}

TEST(Decompose, OmegaPowerIsPureLambda) {
  const ZooEntry bl = blowup_pn(4);
  const ClassVector w = kahler(bl, "2*H-E");
  const MixedSetup s = MixedSetup::make(bl.ring, 2, w, {});
  const DecompositionResult d = mixed_lefschetz_decompose(bl.ring, bl.ring.power(w, 2), s);
  EXPECT_EQ(d.lambda, GaussianRational(1));
  for (const auto& c : d.components) EXPECT_TRUE(c.is_zero());
}

TEST(Decompose, ProductOfLines) {
  const ZooEntry pp = load_bundled("p1xp1");
  const MixedSetup s = MixedSetup::make(pp.ring, 1, kahler(pp, "a+b"), {});
  const DecompositionResult d = mixed_lefschetz_decompose(pp.ring, lit(pp, "3*a+b"), s);
  EXPECT_EQ(d.lambda, GaussianRational(2));
  EXPECT_EQ(d.lambda_closed_form, GaussianRational(2));
  EXPECT_EQ(d.component(1), lit(pp, "a-b"));
  EXPECT_TRUE(d.certificates_zero());
}

TEST(Decompose, BlowupTheta) {
  const ZooEntry bl = blowup_pn(4);
  const ClassVector w = kahler(bl, "2*H-E");
  const MixedSetup s = MixedSetup::make(bl.ring, 2, w, {});
  const ClassVector theta = bl.ring.power(w, 2) + bl.ring.wedge(lit(bl, "H-8*E"), w);
  const DecompositionResult d = mixed_lefschetz_decompose(bl.ring, theta, s);
  EXPECT_EQ(d.lambda, GaussianRational(1));
  EXPECT_EQ(d.component(1), lit(bl, "H-8*E"));
  EXPECT_TRUE(d.component(2).is_zero());
  EXPECT_EQ(reconstruct(bl.ring, d, s), theta);
}

TEST(Decompose, RejectsBoundary) {
  const ZooEntry pp = load_bundled("p1xp1");
  const MixedSetup s = MixedSetup::make(pp.ring, 1, lit(pp, "a", Positivity::nef), {});
  EXPECT_THROW(mixed_lefschetz_decompose(pp.ring, lit(pp, "b"), s), std::invalid_argument);
}

class DecompositionProperties : public ::testing::TestWithParam<std::string> {};

TEST_P(DecompositionProperties, IdentitiesHoldExactly) {
  const ZooEntry e = load_bundled(GetParam());
  const IntersectionRing& r = e.ring;
  const std::vector<ClassVector> gens = e.generators();
  for (std::size_t p = 1; 2 * p <= r.dim(); ++p) {
    for (std::uint64_t k = 0; k < 10; ++k) {
      Xoshiro256 gen = Xoshiro256::stream(31 + p, k);
      const MixedSetup s = random_setup(r, p, gens, 10, gen);
      const ClassVector alpha = random_class(r, p, 10, gen, k % 2 == 1);
      const DecompositionResult d = mixed_lefschetz_decompose(r, alpha, s);
      EXPECT_EQ(reconstruct(r, d, s), alpha);
      EXPECT_TRUE(d.certificates_zero());
      EXPECT_EQ(d.lambda, d.lambda_closed_form);

      const ClassVector& big = s.omega_p_product();
      const ClassVector wp = r.power(s.omega(), p);
      EXPECT_EQ(r.integrate(r.product(std::vector<ClassVector>{alpha, wp, big})),
                d.lambda * GaussianRational(s.volume()));
      GaussianRational rhs = d.lambda * d.lambda.conj() * GaussianRational(s.volume());
      for (std::size_t i = 1; i <= p; ++i) {
        const ClassVector& ai = d.component(i);
        const ClassVector ref = r.wedge(r.power(s.omega(), 2 * (p - i)), big);
        rhs += r.integrate(r.product(std::vector<ClassVector>{ai, ai.conj(), ref}));
      }
      EXPECT_TRUE(hr_check(r, p, s.omega(), s.omegas()).passed());
      EXPECT_EQ(primitive_basis(r, p, s.omega(), s.omegas()).dimension(), r.hodge(p) - r.hodge(p - 1));
      EXPECT_EQ(r.integrate(r.product(std::vector<ClassVector>{alpha, alpha.conj(), big})), rhs);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Catalogue, DecompositionProperties, ::testing::ValuesIn(catalogue()));
