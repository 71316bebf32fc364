#include <gtest/gtest.h>

#include <algorithm>

#include "helpers.hpp"
#include "lgmf/closed_form.hpp"
#include "lgmf/random.hpp"

using namespace lgmf;
using lgmf::test::P;
using lgmf::test::Q;

TEST(Alpha, P2ThirdRay) {
  const ToricFanoData fan = preset_fan("p2");
  const RingContext ring = make_ring(2);
  EXPECT_EQ(alpha_closed_form(fan, ring, 2, 0), P("-1*z1^-1*z2^-1*u1^-1", 2));
  EXPECT_EQ(alpha_closed_form(fan, ring, 2, 1), P("-1*z2^-1*u1^-1*u2^-1", 2));
  EXPECT_EQ(alpha_by_entry_enumeration(fan, ring, 2, 0), alpha_closed_form(fan, ring, 2, 0));
  EXPECT_EQ(alpha_by_entry_enumeration(fan, ring, 2, 1), alpha_closed_form(fan, ring, 2, 1));
}

TEST(Alpha, BasisRaysGiveKronecker) {
  for (const auto& name : preset_fan_names()) {
    const ToricFanoData fan = preset_fan(name);
    const RingContext ring = make_ring(fan.n());
    const AlphaTable table = alpha_table(fan, ring);
    for (int i = 0; i < fan.n(); ++i)
      for (int j = 0; j < fan.n(); ++j) {
        EXPECT_EQ(table.alpha[i][j], LaurentPoly::from_int(ring, i == j ? 1 : 0)) << name;
        EXPECT_EQ(alpha_by_entry_enumeration(fan, ring, i, j), table.alpha[i][j]) << name;
      }
  }
}

TEST(Alpha, ZeroComponent) {
  const RingContext ring = make_ring(3);
  const std::vector<int> v{2, 0, -1};
  EXPECT_TRUE(alpha_closed_form(ring, v, 1).is_zero());
  EXPECT_TRUE(alpha_by_entry_enumeration(ring, v, 1).is_zero());
}

TEST(Alpha, TwoEntryPoints) {
  const RingContext ring = make_ring(2);
  const std::vector<int> v{2, 1};
  const LaurentPoly a = alpha_closed_form(ring, v, 0);
  EXPECT_EQ(a.terms().size(), 2u);
  EXPECT_EQ(alpha_by_entry_enumeration(ring, v, 0), a);
}

TEST(Telescope, Examples) {
  const RingContext ring = make_ring(2);
  for (const std::vector<int>& v : {std::vector<int>{-1, -1}, {2, -1}, {1, 0}, {0, 1}, {-3, 2}}) {
    const TelescopeResult r = telescoping_check(ring, v);
    EXPECT_TRUE(r.pass) << v[0] << "," << v[1] << ": " << r.difference.to_text();
  }
  // A wrong α fails with a nonzero difference.
  const AlphaFunction wrong = [](RingContext rg, std::span<const int>, int) { return LaurentPoly::from_int(rg, 1); };
  const std::vector<int> v{-1, -1};
  const TelescopeResult bad = telescoping_check(ring, v, wrong);
  EXPECT_FALSE(bad.pass);
  EXPECT_FALSE(bad.difference.is_zero());
}

TEST(TelescopeProperty, ExhaustiveSmallBox) {
  for (int n = 1; n <= 3; ++n) {
    const RingContext ring = make_ring(n);
    std::vector<int> v(static_cast<std::size_t>(n), -3);
    for (;;) {
      if (std::any_of(v.begin(), v.end(), [](int x) { return x != 0; })) {
        ASSERT_TRUE(telescoping_check(ring, v).pass);
        for (int j = 0; j < n; ++j) ASSERT_EQ(alpha_by_entry_enumeration(ring, v, j), alpha_closed_form(ring, v, j));
      }
      int pos = 0;
      while (pos < n && ++v[pos] > 3) v[pos++] = -3;
      if (pos == n) break;
    }
  }
}

TEST(TelescopeProperty, RandomHigherDimension) {
  Rng rng(9);
  for (const int n : {4, 5}) {
    const RingContext ring = make_ring(n);
    for (int trial = 0; trial < 100; ++trial) {
      const std::vector<int> v = random_ray(rng, n, 3);
      ASSERT_TRUE(telescoping_check(ring, v).pass);
      for (int j = 0; j < n; ++j) ASSERT_EQ(alpha_by_entry_enumeration(ring, v, j), alpha_closed_form(ring, v, j));
    }
  }
}

TEST(TildeD, ProjectiveSpaceFormula) {
  for (int n = 1; n <= 4; ++n) {
    const Rational k = Q(3, 2);
    const ToricFanoData fan = preset_fan(n == 1 ? "p1" : "p" + std::to_string(n), k);
    const PotentialW pot = build_potential(fan);
    const RingContext ring = pot.ring;
    const std::vector<LaurentPoly> w = contraction_coefficients(fan, pot);
    const NovikovScalar tk = NovikovScalar::t_power(k);
    for (int i = 0; i < n; ++i) {
      LaurentPoly denom = LaurentPoly::from_int(ring, 1);
      for (int j = 0; j <= i; ++j) denom *= LaurentPoly::u(ring, j);
      for (int j = i; j < n; ++j) denom *= LaurentPoly::z(ring, j);
      const LaurentPoly expected = LaurentPoly::constant(ring, tk) - denom.inverse().scaled(tk);
      EXPECT_EQ(w[static_cast<std::size_t>(i)], expected) << n << " " << i;
    }
    const MatrixFactorization mf = build_tilde_d(fan, pot);
    EXPECT_EQ(mf.lambda, pot.w.z_to_u());
    EXPECT_TRUE(mf.d.has_parity(Parity::odd));
  }
}

TEST(TildeD, PresetsSquareToPotentialDifference) {
  for (const auto& name : preset_fan_names()) {
    const ToricFanoData fan = preset_fan(name);
    const PotentialW pot = build_potential(fan);
    const MatrixFactorization mf = build_tilde_d(fan, pot);
    const MfCheck r = mf_verify(mf.d, pot.w);
    EXPECT_TRUE(r.ok) << name << ": " << r.reason;
    EXPECT_EQ(*r.lambda, pot.w.z_to_u()) << name;
  }
}

TEST(TildeD, RandomFans) {
  Rng rng(10);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 2;
    const ToricFanoData fan = random_fan(rng, n, n + 1 + trial % 4, 3);
    const PotentialW pot = build_potential(fan);
    EXPECT_NO_THROW(build_tilde_d(fan, pot)) << fan_to_json(fan);
  }
}

TEST(TildeD, DiagonalSpecializationSquaresToZero) {
  const ToricFanoData fan = preset_fan("hirzebruch_f1");
  const PotentialW pot = build_potential(fan);
  const MatrixFactorization mf = build_tilde_d(fan, pot);
  Substitution s(pot.ring);
  for (int i = 0; i < fan.n(); ++i) s.map_u(i, LaurentPoly::z(pot.ring, i));
  const Endomorphism d = mf.d.substitute(s);
  EXPECT_TRUE((d * d).is_zero());
}
