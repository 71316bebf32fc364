#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "lgmf/errors.hpp"
#include "lgmf/scalar.hpp"

using namespace lgmf;
using lgmf::test::Q;
using lgmf::test::T;

namespace {

NovikovScalar random_scalar(std::mt19937_64& rng, bool nonzero = false) {
  std::uniform_int_distribution<int> coeff(-4, 4), num(-6, 6), den(1, 3), count(0, 3);
  NovikovScalar s;
  do {
    s = NovikovScalar();
    for (int k = count(rng); k > 0; --k) s += NovikovScalar(FieldElement(Rational(coeff(rng))), Q(num(rng), den(rng)));
  } while (nonzero && s.is_zero());
  return s;
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("3/6"), Q(1, 2));
  EXPECT_EQ(parse_rational("-7"), Q(-7));
  EXPECT_EQ(to_string(Q(2, -4)), "-1/2");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("x"), ParseError);
  EXPECT_EQ(floor_to_long(Q(-1, 2)), -1);
}

TEST(FieldElement, Gf2Characteristic) {
  const auto one = FieldElement::one(BaseField::gf2);
  EXPECT_TRUE((one + one).is_zero());
  EXPECT_EQ(-one, one);
  EXPECT_THROW(FieldElement::zero(BaseField::gf2).inverse(), DomainError);
}

TEST(FieldElement, MixedFieldsRejected) {
  EXPECT_THROW(FieldElement::one(BaseField::rational) + FieldElement::one(BaseField::gf2), FieldMismatch);
  EXPECT_THROW(T(1) * T(1, BaseField::gf2), FieldMismatch);
}

TEST(Novikov, ExponentAdditivity) {
  EXPECT_EQ(T(Q(1, 2)) * T(Q(1, 2)), T(1));
  EXPECT_EQ(T(Q(1, 3)) * T(Q(2, 3)), T(1));
}

TEST(Novikov, CharacteristicTwoCancels) {
  const auto tk = T(Q(5, 2), BaseField::gf2);
  EXPECT_TRUE((tk + tk).is_zero());
}

TEST(Novikov, P1ProductAtUnitHolonomy) {
  // T^{k/2} T^{k/2} (λ + 1/λ) at λ = 1
  const Rational k(3);
  EXPECT_EQ(T(k / 2) * T(k / 2) * NovikovScalar::from_int(2), NovikovScalar::from_int(2) * T(k));
}

TEST(Novikov, Valuation) {
  const NovikovScalar a = T(2) + NovikovScalar(FieldElement(Rational(3)), Q(5));
  EXPECT_EQ(a.valuation(), Q(2));
  EXPECT_FALSE(NovikovScalar().valuation().has_value());
  EXPECT_EQ((T(Q(1, 3)) * T(Q(2, 3))).valuation(), Q(1));
}

TEST(Novikov, CanonicalForm) {
  const NovikovScalar a = T(3) + T(1) - T(3);
  ASSERT_EQ(a.terms().size(), 1U);
  EXPECT_EQ(a, T(1));
  const NovikovScalar b = T(2) + T(-1) + T(Q(1, 2));
  for (std::size_t i = 1; i < b.terms().size(); ++i) EXPECT_LT(b.terms()[i - 1].exponent, b.terms()[i].exponent);
}

TEST(Novikov, Specialize) {
  const double t = std::exp(-1.0);
  EXPECT_NEAR(T(1).specialize(t).real(), std::exp(-1.0), 1e-15);
  EXPECT_NEAR(NovikovScalar::from_int(2).specialize(0.3).real(), 2.0, 1e-15);
  EXPECT_NEAR(T(3).specialize(t).real(), 0.049787068367863944, 1e-15);
  EXPECT_THROW(T(1, BaseField::gf2).specialize(t), DomainError);
  EXPECT_THROW(T(1).specialize(0.0), DomainError);
}

TEST(Novikov, UnitsAndPowers) {
  EXPECT_EQ(T(Q(2, 3)).inverse(), T(Q(-2, 3)));
  EXPECT_THROW((T(1) + T(2)).inverse(), DomainError);
  EXPECT_EQ((T(1) + T(2)).pow(2), T(2) + NovikovScalar::from_int(2) * T(3) + T(4));
  EXPECT_EQ(T(Q(1, 2)).pow(-4), T(-2));
}

TEST(NovikovProperty, RingAxioms) {
  std::mt19937_64 rng(0);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(NovikovProperty, ValuationAdditivity) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = random_scalar(rng, true), b = random_scalar(rng, true);
    EXPECT_EQ((a * b).valuation(), *a.valuation() + *b.valuation());
  }
}

TEST(NovikovProperty, SpecializeIsHomomorphism) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_scalar(rng), b = random_scalar(rng);
    const double t = 0.2 + 0.1 * (trial % 7);
    const auto lhs = (a * b).specialize(t);
    const auto rhs = a.specialize(t) * b.specialize(t);
    EXPECT_LE(std::abs(lhs - rhs), 1e-12 * std::max(1.0, std::abs(lhs)));
  }
}
