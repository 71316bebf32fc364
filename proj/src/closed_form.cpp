#include "lgmf/closed_form.hpp"

#include <algorithm>
#include <compare>
#include <cstdlib>

#include "lgmf/errors.hpp"

namespace lgmf {

namespace {

int sign_of(int x) { return (x > 0) - (x < 0); }

void check_args(RingContext ring, std::span<const int> v, int j) {
  if (static_cast<int>(v.size()) != ring.n) throw DomainError("ray length does not match the ring");
  if (j < 0 || j >= ring.n) throw DomainError("basis index out of range");
}

LaurentPoly unit_monomial(RingContext ring, const ExponentVector& e, int sign = 1) {
  return LaurentPoly::monomial(ring, NovikovScalar::from_int(sign, ring.field), e);
}

void mul_z(ExponentVector& e, int l, int k) { e.set_z(l, e.z(l) + k); }
void mul_u(ExponentVector& e, int l, int k) { e.set_u(l, e.u(l) + k); }

}  // namespace

LaurentPoly alpha_closed_form(RingContext ring, std::span<const int> v, int j) {
  check_args(ring, v, j);
  const int n = ring.n;
  if (v[j] == 0) return LaurentPoly(ring);
  std::vector<int> s(v.size());
  std::transform(v.begin(), v.end(), s.begin(), sign_of);
  const int vj = std::abs(v[j]);
  const int sj = s[j];
  auto is = [](int a, int b) { return a == b ? 1 : 0; };

  // For s_j = -1 the roles of z and u swap in the leading monomial, the
  // first product and the ratio inside the sum.
  ExponentVector lead;
  for (int l = 0; l < n; ++l) sj > 0 ? mul_z(lead, l, v[l]) : mul_u(lead, l, v[l]);
  mul_z(lead, j, -1);
  for (int l = 0; l < n; ++l) {
    if (l == j) continue;
    if (sj > 0) {
      mul_u(lead, l, -is(s[l], -1));
      mul_z(lead, l, -is(s[l], 1));
    } else {
      mul_z(lead, l, -is(s[l], -1));
      mul_u(lead, l, -is(s[l], 1));
    }
  }

  ExponentVector first;
  for (int l = 0; l < n; ++l) {
    if (l > j) mul_u(first, l, std::abs(s[l]));
    if (l < j) {
      mul_u(first, l, is(s[l], -sj));
      mul_z(first, l, is(s[l], sj));
    }
  }

  ExponentVector pre;
  for (int l = 0; l < n; ++l) {
    if (l != j) mul_u(pre, l, std::abs(s[l]));
  }

  LaurentPoly bracket = unit_monomial(ring, first);
  for (int p = 1; p < vj; ++p) {
    ExponentVector t = pre;
    mul_u(t, j, p);
    mul_z(t, j, -p);
    for (int l = 0; l < n; ++l) {
      if (l == j || s[l] == 0) continue;
      const int num = p * std::abs(v[l]);
      int f = num / vj;
      // At an integral ratio the crossing with the l-th hypertorus happens
      // before the entry point exactly when l precedes j with equal signs.
      if (num % vj == 0 && l < j && s[l] == sj) --f;
      const int k = s[l] * f * sj;
      mul_u(t, l, k);
      mul_z(t, l, -k);
    }
    bracket += unit_monomial(ring, t);
  }
  LaurentPoly result = unit_monomial(ring, lead) * bracket;
  return sj > 0 ? result : -result;
}

LaurentPoly alpha_closed_form(const ToricFanoData& fan, RingContext ring, int i, int j) {
  return alpha_closed_form(ring, fan.ray(i).v, j);
}

namespace {

// c0 + c1·δ + c2·ε with δ >> ε > 0 infinitesimal.
struct Lex {
  Rational c0, c1, c2;
  friend std::strong_ordering operator<=>(const Lex& a, const Lex& b) {
    if (auto c = cmp(a.c0, b.c0); c != 0) return c;
    if (auto c = cmp(a.c1, b.c1); c != 0) return c;
    return cmp(a.c2, b.c2);
  }
  static std::strong_ordering cmp(const Rational& x, const Rational& y) {
    if (x < y) return std::strong_ordering::less;
    if (y < x) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  friend bool operator==(const Lex&, const Lex&) = default;
  friend Lex operator+(const Lex& a, const Lex& b) { return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2}; }
  friend Lex operator*(const Rational& k, const Lex& a) { return {k * a.c0, k * a.c1, k * a.c2}; }
};

Lex lex(const Rational& a, const Rational& b = 0, const Rational& c = 0) { return {a, b, c}; }

Lex frac(const Lex& x) {
  long f = floor_to_long(x.c0);
  if (x.c0 == f && (x.c1 < 0 || (x.c1 == 0 && x.c2 < 0))) --f;
  return x + lex(Rational(-f));
}

}  // namespace

LaurentPoly alpha_by_entry_enumeration(RingContext ring, std::span<const int> v, int j) {
  check_args(ring, v, j);
  const int n = ring.n;
  if (v[j] == 0) return LaurentPoly(ring);
  int big = 0;
  for (int x : v) big = std::max(big, std::abs(x));
  const long base = big + 1;

  // Offsets a_l = δ·base^{-(l+1)}: strictly decreasing in l and far apart,
  // which realizes the genericity ordering of the gauge hypertori.
  std::vector<Lex> a;
  mpz_class power = 1;
  for (int l = 0; l < n; ++l) {
    power *= base;
    a.push_back(lex(0, Rational(mpz_class(1), power)));
  }
  const Lex eps = lex(0, 0, 1);
  const Lex one_minus_eps = lex(1, 0, -1);

  // Times t in (0,1) at which the flow line along v enters the j-th
  // hypertorus of the disc boundary.
  const int vj = std::abs(v[j]);
  std::vector<Lex> entries;
  for (int m = 0; m < vj; ++m) {
    const Lex t = v[j] > 0 ? lex(m) + a[j] : lex(m + 1) + Rational(-1) * a[j];
    entries.push_back(Rational(1, vj) * t);
  }
  std::sort(entries.begin(), entries.end());

  LaurentPoly total(ring);
  for (const Lex& t : entries) {
    ExponentVector mono;
    for (int l = 0; l < n; ++l) {
      if (v[l] == 0) continue;
      const int vl = std::abs(v[l]);
      const int sl = sign_of(v[l]);
      int u_before = 0;
      int z_after = 0;
      for (int m = 0; m < vl; ++m) {
        // Markings of the basepoints p_l (near 0) and p̲_l (near 1) along the
        // boundary circle.
        const Lex near0 = Rational(1, vl) * (lex(m) + eps);
        const Lex near1 = Rational(1, vl) * (lex(m + 1) + Rational(-1) * eps);
        const Lex& zc = v[l] > 0 ? near0 : near1;
        const Lex& uc = v[l] > 0 ? near1 : near0;
        if (uc < t) ++u_before;
        if (zc > t) ++z_after;
      }
      mul_u(mono, l, sl * u_before);
      mul_z(mono, l, sl * z_after);
      if (l != j) {
        // Flow segment from the entry point to the critical point.
        const Lex x = frac(Rational(v[l]) * t);
        if (x < a[l]) {
          if (x > eps) mul_z(mono, l, 1);
        } else if (x < one_minus_eps) {
          mul_u(mono, l, 1);
        }
      }
    }
    total += unit_monomial(ring, mono);
  }
  return sign_of(v[j]) > 0 ? total : -total;
}

LaurentPoly alpha_by_entry_enumeration(const ToricFanoData& fan, RingContext ring, int i, int j) {
  return alpha_by_entry_enumeration(ring, fan.ray(i).v, j);
}

TelescopeResult telescoping_check(RingContext ring, std::span<const int> v, const AlphaFunction& alpha) {
  if (static_cast<int>(v.size()) != ring.n) throw DomainError("ray length does not match the ring");
  LaurentPoly lhs(ring);
  for (int j = 0; j < ring.n; ++j) {
    const LaurentPoly a = alpha ? alpha(ring, v, j) : alpha_closed_form(ring, v, j);
    lhs += a * (LaurentPoly::z(ring, j) - LaurentPoly::u(ring, j));
  }
  const std::vector<int> zero(v.size(), 0);
  const NovikovScalar one = NovikovScalar::from_int(1, ring.field);
  const LaurentPoly rhs = LaurentPoly::monomial(ring, one, v, zero) - LaurentPoly::monomial(ring, one, zero, v);
  TelescopeResult r;
  r.difference = lhs - rhs;
  r.pass = r.difference.is_zero();
  return r;
}

AlphaTable alpha_table(const ToricFanoData& fan, RingContext ring) {
  AlphaTable t;
  t.n = fan.n();
  t.m = fan.m();
  for (int i = 0; i < fan.m(); ++i) {
    std::vector<LaurentPoly> row;
    std::vector<int> s;
    for (int j = 0; j < fan.n(); ++j) {
      row.push_back(alpha_closed_form(fan, ring, i, j));
      s.push_back(sign_of(fan.ray(i).v[j]));
    }
    t.alpha.push_back(std::move(row));
    t.signs.push_back(std::move(s));
  }
  return t;
}

std::vector<LaurentPoly> contraction_coefficients(const ToricFanoData& fan, const PotentialW& pot) {
  const AlphaTable t = alpha_table(fan, pot.ring);
  std::vector<LaurentPoly> w(static_cast<std::size_t>(fan.n()), LaurentPoly(pot.ring));
  for (int i = 0; i < fan.m(); ++i) {
    for (int j = 0; j < fan.n(); ++j) w[j] += t.alpha[i][j].scaled(pot.c[i]);
  }
  return w;
}

std::vector<LaurentPoly> wedge_coefficients(RingContext ring) {
  std::vector<LaurentPoly> x;
  for (int i = 0; i < ring.n; ++i) x.push_back(LaurentPoly::z(ring, i) - LaurentPoly::u(ring, i));
  return x;
}

MatrixFactorization build_tilde_d(const ToricFanoData& fan, const PotentialW& pot) {
  const auto x = wedge_coefficients(pot.ring);
  const auto w = contraction_coefficients(fan, pot);
  return MatrixFactorization::verified(wedge_contraction(pot.ring, x, w), pot.w, pot.w.z_to_u());
}

}  // namespace lgmf
