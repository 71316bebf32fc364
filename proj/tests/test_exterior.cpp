#include <gtest/gtest.h>

#include "helpers.hpp"
#include "lgmf/errors.hpp"
#include "lgmf/exterior.hpp"
#include "lgmf/random.hpp"
#include "lgmf/zoo.hpp"

using namespace lgmf;
using lgmf::test::P;
using lgmf::test::Q;
using lgmf::test::T;

namespace {

ExtElement e(RingContext ring, Mask m) { return ExtElement::basis(ring, m); }

ExtElement random_pure(Rng& rng, RingContext ring, int parity) {
  ExtElement x(ring);
  std::uniform_int_distribution<Mask> pick(0, (Mask{1} << ring.n) - 1);
  for (int k = 0; k < 3; ++k) {
    const Mask m = pick(rng);
    if (popcount(m) % 2 == parity) x += ExtElement::basis(ring, m, random_poly(rng, ring, 2, 1));
  }
  return x;
}

}  // namespace

TEST(Exterior, WedgeAndContractSigns) {
  const RingContext ring = make_ring(2);
  EXPECT_EQ(wedge_op(ring, 1).apply(e(ring, 0b10)), e(ring, 0b11));
  EXPECT_EQ(wedge_op(ring, 2).apply(e(ring, 0b01)), -e(ring, 0b11));
  EXPECT_EQ(contract_op(ring, 2).apply(e(ring, 0b11)), -e(ring, 0b01));
  EXPECT_EQ(contract_op(ring, 1).apply(e(ring, 0b11)), e(ring, 0b10));
  EXPECT_TRUE(wedge_op(ring, 1).apply(e(ring, 0b01)).is_zero());
  EXPECT_EQ(wedge_sign(0b01, 0b10), 1);
  EXPECT_EQ(wedge_sign(0b10, 0b01), -1);
  EXPECT_EQ(wedge_sign(0b11, 0b01), 0);
  EXPECT_EQ(subset_label(0, 2), "1");
  EXPECT_EQ(subset_label(0b11, 2), "e12");
}

TEST(Exterior, CliffordRelations) {
  for (int n = 1; n <= 5; ++n) {
    const RingContext ring = make_ring(n);
    const Endomorphism id = Endomorphism::identity_like(Endomorphism::exterior_zero(ring));
    for (int j = 1; j <= n; ++j) {
      EXPECT_TRUE((wedge_op(ring, j) * wedge_op(ring, j)).is_zero());
      EXPECT_TRUE((contract_op(ring, j) * contract_op(ring, j)).is_zero());
      for (int k = 1; k <= n; ++k) {
        const Endomorphism ac = wedge_op(ring, j) * contract_op(ring, k) + contract_op(ring, k) * wedge_op(ring, j);
        if (j == k)
          EXPECT_EQ(ac, id) << n << " " << j;
        else
          EXPECT_TRUE(ac.is_zero()) << n << " " << j << " " << k;
        EXPECT_TRUE((wedge_op(ring, j) * wedge_op(ring, k) + wedge_op(ring, k) * wedge_op(ring, j)).is_zero());
      }
    }
  }
}

TEST(ExteriorProperty, ContractionIsAntiDerivation) {
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const RingContext ring = make_ring(2 + trial % 3);
    const int pa = trial % 2;
    const ExtElement a = random_pure(rng, ring, pa), b = random_pure(rng, ring, (trial / 2) % 2);
    for (int j = 1; j <= ring.n; ++j) {
      const Endomorphism iota = contract_op(ring, j);
      const ExtElement rhs = wedge(iota.apply(a), b) + (pa ? -wedge(a, iota.apply(b)) : wedge(a, iota.apply(b)));
      EXPECT_EQ(iota.apply(wedge(a, b)), rhs);
    }
  }
}

TEST(Exterior, ParityAndShape) {
  const RingContext ring = make_ring(2);
  EXPECT_TRUE(wedge_op(ring, 1).has_parity(Parity::odd));
  EXPECT_FALSE(wedge_op(ring, 1).has_parity(Parity::even));
  EXPECT_TRUE((wedge_op(ring, 1) * contract_op(ring, 2)).has_parity(Parity::even));
  EXPECT_THROW(wedge_op(ring, 1) * wedge_op(make_ring(3), 1), RingMismatch);
  EXPECT_EQ(e(ring, 0b11).parity(), 0);
  EXPECT_EQ((e(ring, 0b01) + e(ring, 0b10)).parity(), 1);
  EXPECT_FALSE((e(ring, 0) + e(ring, 0b10)).parity().has_value());
}

TEST(MfVerify, ZeroMap) {
  const RingContext ring = make_ring(2);
  const MfCheck r = mf_verify(Endomorphism::exterior_zero(ring), LaurentPoly(ring));
  EXPECT_TRUE(r.ok);
  EXPECT_TRUE(r.lambda->is_zero());
}

TEST(MfVerify, RejectsEvenMap) {
  const RingContext ring = make_ring(1);
  EXPECT_THROW(mf_verify(Endomorphism::identity_like(Endomorphism::exterior_zero(ring)), P("z1", 1)), DomainError);
}

TEST(MfVerify, ReportsOffScalarEntry) {
  const RingContext ring = make_ring(2);
  const std::vector<LaurentPoly> x{P("z1", 2), P("z2", 2)}, w{P("1", 2), P("z1", 2)};
  // d^2 = (x1 w1 + x2 w2) Id is scalar; breaking one entry makes it not.
  Endomorphism d = wedge_contraction(ring, x, w);
  EXPECT_TRUE(mf_verify(d, P("z1 + z1*z2", 2)).ok);
  d.add_to(0b01, 0, P("z2", 2));
  const MfCheck r = mf_verify(d, P("z1 + z1*z2", 2));
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(r.row.has_value() && r.col.has_value() && r.entry.has_value());
  // Scalar, but the potential minus it still depends on z.
  EXPECT_FALSE(mf_verify(wedge_contraction(ring, x, w), P("z1", 2)).ok);
}

TEST(MfVerify, P1PairLambda) {
  const RingContext ring = make_ring(1);
  const MatrixFactorization mf = p1_pair(Q(1, 2), Q(1, 2), P("u1", 1));
  EXPECT_EQ(mf.lambda, P("T*u1 + T*u1^-1", 1));
  EXPECT_EQ(mf_verify(mf.d, mf.potential).lambda, mf.lambda);
}

TEST(MfVerify, AntiDiagonalHasZeroLambda) {
  const MatrixFactorization mf = p1p1_antidiagonal(Q(1), Q(1));
  EXPECT_TRUE(mf.lambda.is_zero());
}

TEST(Conjugation, UnitsOneIsIdentity) {
  const MatrixFactorization mf = p1_pair(Q(1), Q(1), P("u1", 1));
  const std::vector<LaurentPoly> ones(2, P("1", 1));
  EXPECT_EQ(conjugate_diagonal(mf.d, ones), mf.d);
}

TEST(Conjugation, RescalesAndKeepsLambda) {
  const MatrixFactorization mf = p1_pair(Q(1), Q(1), P("u1", 1));
  const std::vector<LaurentPoly> units{P("1", 1), P("z1", 1)};
  const Endomorphism c = conjugate_diagonal(mf.d, units);
  EXPECT_EQ(c.at(1, 0), mf.d.at(1, 0) * P("z1", 1));
  EXPECT_EQ(c.at(0, 1), mf.d.at(0, 1) * P("z1^-1", 1));
  EXPECT_EQ(mf_verify(c, mf.potential).lambda, mf.lambda);
  const std::vector<LaurentPoly> bad{P("1", 1), P("1 + z1", 1)};
  EXPECT_THROW(conjugate_diagonal(mf.d, bad), DomainError);
}

TEST(ConjugationProperty, LambdaInvariant) {
  Rng rng(8);
  const MatrixFactorization mf = p2_matrix(Q(1));
  const RingContext ring = mf.d.ring();
  std::uniform_int_distribution<int> ex(-2, 2), sg(0, 1);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<LaurentPoly> units;
    for (int g = 0; g < mf.d.dim(); ++g) {
      const std::vector<int> zp{ex(rng), ex(rng)}, up{ex(rng), ex(rng)};
      units.push_back(LaurentPoly::monomial(ring, T(Q(ex(rng), 2)).scaled(FieldElement(Q(sg(rng) ? 1 : -1))), zp, up));
    }
    const MfCheck r = mf_verify(conjugate_diagonal(mf.d, units), mf.potential);
    ASSERT_TRUE(r.ok);
    EXPECT_EQ(*r.lambda, mf.lambda);
  }
}

TEST(EndoJson, RoundTrip) {
  for (const auto& name : zoo_preset_names()) {
    const Endomorphism d = zoo_preset(name).d;
    EXPECT_EQ(endo_from_json(endo_to_json(d)), d) << name;
  }
  EXPECT_THROW(endo_from_json("{"), ParseError);
}
