#include "lgmf/zoo.hpp"

#include <array>
#include <bit>

#include "lgmf/closed_form.hpp"
#include "lgmf/errors.hpp"
#include "lgmf/toric.hpp"

namespace lgmf {

namespace {

LaurentPoly t_pow(RingContext ring, const Rational& e) {
  return LaurentPoly::constant(ring, NovikovScalar::t_power(e, ring.field));
}

LaurentPoly poly(RingContext ring, std::string_view text) { return LaurentPoly::parse(text, ring); }

// Replaces every 'H' by "T^<e>" before parsing.
LaurentPoly poly_h(RingContext ring, std::string_view text, const Rational& e) {
  std::string s;
  for (char c : text) {
    if (c == 'H') {
      s += "T^" + to_string(e);
    } else {
      s += c;
    }
  }
  return poly(ring, s);
}

void require_unit(const LaurentPoly& hol, RingContext ring) {
  if (hol.ring() != ring) throw RingMismatch("holonomy lives in a different ring");
  if (!hol.is_unit()) throw DomainError("holonomy must be a nonzero unit, got " + hol.to_text());
}

}  // namespace

MatrixFactorization p1_pair(const Rational& k1, const Rational& k2, const LaurentPoly& hol) {
  const RingContext ring = make_ring(1);
  require_unit(hol, ring);
  const LaurentPoly z = LaurentPoly::z(ring, 0);
  const LaurentPoly one = LaurentPoly::from_int(ring, 1);
  Endomorphism d(ring, {0, 1}, {"p", "q"});
  d.set(1, 0, t_pow(ring, k1) * (z - hol.inverse()));
  d.set(0, 1, t_pow(ring, k2) * (one - hol * z.inverse()));
  const LaurentPoly half = t_pow(ring, k1 + k2);
  return MatrixFactorization::verified(std::move(d), half * (z + z.inverse()), half * (hol + hol.inverse()));
}

MatrixFactorization p1_perturbed(const Rational& alpha, const Rational& beta, const Rational& gamma,
                                 const Rational& delta, const Rational& k) {
  if (alpha + beta != gamma + delta) throw DomainError("areas must satisfy alpha + beta = gamma + delta");
  const RingContext ring = make_ring(1);
  const Rational h = k / 2;
  const LaurentPoly z = LaurentPoly::z(ring, 0);
  const LaurentPoly one = LaurentPoly::from_int(ring, 1);
  Endomorphism d(ring, {0, 0, 1, 1}, {"p1", "p2", "q1", "q2"});
  d.set(2, 0, t_pow(ring, h - alpha) * (z - one));
  d.set(2, 1, t_pow(ring, h - gamma) * (one - z.inverse()));
  d.set(3, 0, t_pow(ring, h - alpha - beta + gamma) * (z - one));
  d.set(3, 1, t_pow(ring, h - beta) * (z - one));
  d.set(0, 2, t_pow(ring, alpha));
  d.set(0, 3, -(t_pow(ring, alpha + beta - gamma) * z.inverse()));
  d.set(1, 2, -t_pow(ring, gamma));
  d.set(1, 3, t_pow(ring, beta));
  return MatrixFactorization::verified(std::move(d), t_pow(ring, h) * (z + z.inverse()),
                                       t_pow(ring, h) * LaurentPoly::from_int(ring, 2));
}

TorusBlocks p1p1_torus_blocks(const Rational& k1, const Rational& k2, const LaurentPoly& hol1,
                              const LaurentPoly& hol2) {
  const RingContext ring = make_ring(2);
  require_unit(hol1, ring);
  require_unit(hol2, ring);
  const LaurentPoly z1 = LaurentPoly::z(ring, 0);
  const LaurentPoly z2 = LaurentPoly::z(ring, 1);
  const LaurentPoly one = LaurentPoly::from_int(ring, 1);
  const LaurentPoly a = t_pow(ring, k1) * (hol2 * z2 - one);
  const LaurentPoly b = t_pow(ring, k2) * (z1.inverse() - hol1.inverse());
  const LaurentPoly c = t_pow(ring, k1) * (hol1 * z1 - one);
  const LaurentPoly d = t_pow(ring, k2) * (z2.inverse() - hol2.inverse());
  const std::vector<int> par{0, 0, 1, 1};
  const std::vector<std::string> labels{"(p,p)", "(q,q)", "(p,q)", "(q,p)"};
  TorusBlocks blocks{Endomorphism(ring, par, labels), Endomorphism(ring, par, labels)};
  blocks.a.set(2, 0, a);
  blocks.a.set(2, 1, b);
  blocks.a.set(3, 0, c);
  blocks.a.set(3, 1, -d);
  blocks.b.set(0, 2, d);
  blocks.b.set(0, 3, b);
  blocks.b.set(1, 2, c);
  blocks.b.set(1, 3, -a);
  return blocks;
}

MatrixFactorization p1p1_torus(const Rational& k1, const Rational& k2, const LaurentPoly& hol1,
                               const LaurentPoly& hol2) {
  TorusBlocks blocks = p1p1_torus_blocks(k1, k2, hol1, hol2);
  const RingContext ring = make_ring(2);
  const LaurentPoly z1 = LaurentPoly::z(ring, 0);
  const LaurentPoly z2 = LaurentPoly::z(ring, 1);
  const LaurentPoly h = t_pow(ring, k1 + k2);
  return MatrixFactorization::verified(blocks.a - blocks.b, h * (z1 + z1.inverse() + z2 + z2.inverse()),
                                       h * (hol1 + hol1.inverse() + hol2 + hol2.inverse()));
}

MatrixFactorization p1p1_antidiagonal(const Rational& k1, const Rational& k2) {
  const RingContext ring = make_ring(2);
  const LaurentPoly z1 = LaurentPoly::z(ring, 0);
  const LaurentPoly z2 = LaurentPoly::z(ring, 1);
  const LaurentPoly one = LaurentPoly::from_int(ring, 1);
  Endomorphism d(ring, {0, 1}, {"p", "q"});
  d.set(1, 0, t_pow(ring, k1) * (one + z1 * z2));
  d.set(0, 1, t_pow(ring, k2) * (z1.inverse() + z2.inverse()));
  const LaurentPoly h = t_pow(ring, k1 + k2);
  return MatrixFactorization::verified(std::move(d), h * (z1 + z1.inverse() + z2 + z2.inverse()),
                                       LaurentPoly(ring));
}

Endomorphism p2_matrix_literal(const Rational& k) {
  const RingContext ring = make_ring(2);
  auto p = [&](std::string_view s) { return poly_h(ring, s, k); };
  Endomorphism d(ring, {0, 0, 1, 1}, {"1", "e12", "e1", "e2"});
  d.set(0, 2, p("H - H*z1^-1*z2^-1*u1^-1"));
  d.set(0, 3, p("H - H*z2^-1*u1^-1*u2^-1"));
  d.set(1, 2, p("-1*z2 + u2"));
  d.set(1, 3, p("z1 - u1"));
  d.set(2, 0, p("z1 - u1"));
  d.set(2, 1, p("-H + H*z2^-1*u1^-1*u2^-1"));
  d.set(3, 0, p("z2 - u2"));
  d.set(3, 1, p("H - H*z1^-1*z2^-1*u1^-1"));
  return d;
}

namespace {

LaurentPoly p2_potential(RingContext ring, const Rational& k) {
  return poly_h(ring, "H*z1 + H*z2 + H*z1^-1*z2^-1", k);
}

}  // namespace

MatrixFactorization p2_matrix(const Rational& k) {
  const std::array<int, 4> mask_order{0, 2, 3, 1};
  Endomorphism d = p2_matrix_literal(k).permuted(mask_order);
  const LaurentPoly w = p2_potential(d.ring(), k);
  return MatrixFactorization::verified(std::move(d), w, w.z_to_u());
}

namespace {

Endomorphism relabeled(const Endomorphism& d, std::vector<std::string> labels) {
  Endomorphism r(d.ring(), d.parities(), std::move(labels));
  for (int i = 0; i < d.dim(); ++i) {
    for (int j = 0; j < d.dim(); ++j) r.set(i, j, d.at(i, j));
  }
  return r;
}

}  // namespace

ChanLeungReport chan_leung_compare(const Rational& k) {
  const ToricFanoData fan = preset_fan("p2", k);
  const PotentialW pot = build_potential(fan);
  const RingContext ring = pot.ring;
  const MatrixFactorization mf = build_tilde_d(fan, pot);

  // z_i = T^{-k} z_i', u_i = 1.
  Substitution coords(ring);
  for (int i = 0; i < 2; ++i) {
    coords.map_z(i, LaurentPoly::z(ring, i) * t_pow(ring, -k));
    coords.map_u(i, LaurentPoly::from_int(ring, 1));
  }
  const Endomorphism d = mf.d.substitute(coords);

  // New generator b_m = unit_m · e_m in mask order 1, e1, e2, e12; the matrix
  // in the new basis is U^{-1} d U.
  const std::vector<LaurentPoly> units{t_pow(ring, k), -LaurentPoly::z(ring, 0), LaurentPoly::from_int(ring, 1),
                                       LaurentPoly::z(ring, 0) * t_pow(ring, -k)};
  std::vector<LaurentPoly> inverse_units;
  for (const auto& u : units) inverse_units.push_back(u.inverse());
  const std::array<int, 4> order{2, 1, 0, 3};  // e2, e1, 1, e12
  const std::vector<std::string> labels{"p1", "p2", "q1", "q2"};

  ChanLeungReport report{false, relabeled(conjugate_diagonal(d, inverse_units).permuted(order), labels),
                         Endomorphism(ring, {1, 1, 0, 0}, labels), Endomorphism(ring, {1, 1, 0, 0}, labels)};
  auto p = [&](std::string_view s) { return poly_h(ring, s, k); };
  const Rational k2 = 2 * k;
  auto p2k = [&](std::string_view s) { return poly_h(ring, s, k2); };
  report.expected.set(0, 2, p("z2 - H"));
  report.expected.set(0, 3, poly(ring, "z1") - p2k("H*z2^-1"));
  report.expected.set(1, 2, p("-1 + H*z1^-1"));
  report.expected.set(1, 3, p("1 - H*z2^-1"));
  report.expected.set(2, 0, p("1 - H*z2^-1"));
  report.expected.set(2, 1, p2k("-z1 + H*z2^-1"));
  report.expected.set(3, 0, p("1 - H*z1^-1"));
  report.expected.set(3, 1, p("z2 - H"));
  report.equal = report.transformed == report.expected;

  Substitution swap(ring);
  swap.map_z(0, LaurentPoly::z(ring, 1)).map_z(1, LaurentPoly::z(ring, 0));
  report.chan_leung = report.transformed.substitute(swap);
  return report;
}

namespace {

std::string sign_label(unsigned mask, int n) {
  std::string s = "[1";
  for (int j = 0; j < n; ++j) s += (mask >> j) & 1U ? ":-1" : ":1";
  return s + "]";
}

Endomorphism rp_shell(RingContext ring) {
  const unsigned dim = 1U << ring.n;
  std::vector<int> par;
  std::vector<std::string> labels;
  for (unsigned m = 0; m < dim; ++m) {
    par.push_back(std::popcount(m) % 2);
    labels.push_back(sign_label(m, ring.n));
  }
  return Endomorphism(ring, std::move(par), std::move(labels));
}

// Product of z_j over the bits of mask, as an exponent vector.
ExponentVector z_of_mask(unsigned mask, int n) {
  ExponentVector e;
  for (int j = 0; j < n; ++j) {
    if ((mask >> j) & 1U) e.set_z(j, 1);
  }
  return e;
}

Endomorphism rp_rule(RingContext ring, const Rational& k) {
  Endomorphism d = rp_shell(ring);
  const int n = ring.n;
  const unsigned all = (1U << n) - 1;
  const NovikovScalar half = NovikovScalar::t_power(k / 2, ring.field);
  for (unsigned p = 0; p <= all; ++p) {
    if (std::popcount(p) % 2 == 0) continue;
    // Coordinate 0: q is the even representative [1 : a], p = [-1 : a].
    const unsigned q0 = all & ~p;
    d.set(static_cast<int>(q0), static_cast<int>(p), LaurentPoly::monomial(ring, half, -z_of_mask(q0, n)));
    d.set(static_cast<int>(p), static_cast<int>(q0), LaurentPoly::monomial(ring, half, -z_of_mask(p, n)));
    // Coordinate i >= 1, representatives with leading entry 1: the one with
    // -1 at i maps to the other with T^{k/2} z_i, the reverse map is T^{k/2}.
    for (int i = 1; i <= n; ++i) {
      const unsigned bit = 1U << (i - 1);
      const unsigned q = p ^ bit;
      const unsigned minus = p & bit ? p : q;
      const unsigned plus = minus ^ bit;
      d.set(static_cast<int>(plus), static_cast<int>(minus), LaurentPoly::monomial(ring, half, z_of_mask(bit, n)));
      d.set(static_cast<int>(minus), static_cast<int>(plus), LaurentPoly::constant(ring, half));
    }
  }
  return d;
}

Endomorphism rp3_signed(const Rational& k) {
  const RingContext ring = make_ring(3);
  Endomorphism d = rp_shell(ring);
  const std::array<unsigned, 4> ps{7, 1, 2, 4};
  const std::array<unsigned, 4> qs{0, 6, 5, 3};
  const std::array<std::array<const char*, 4>, 4> p_rows{{
      {"H*z1^-1*z2^-1*z3^-1", "H", "H", "H"},
      {"H", "-H*z1^-1", "-H*z3", "H*z2"},
      {"H", "H*z3", "-H*z2^-1", "-H*z1"},
      {"H", "-H*z2", "H*z1", "-H*z3^-1"},
  }};
  const std::array<std::array<const char*, 4>, 4> q_rows{{
      {"H", "H*z1", "H*z2", "H*z3"},
      {"H*z1", "-H*z2^-1*z3^-1", "H", "-H"},
      {"H*z2", "-H", "-H*z3^-1*z1^-1", "H"},
      {"H*z3", "H", "-H", "-H*z1^-1*z2^-1"},
  }};
  const Rational h = k / 2;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      d.set(static_cast<int>(ps[r]), static_cast<int>(qs[c]), poly_h(ring, p_rows[r][c], h));
      d.set(static_cast<int>(qs[r]), static_cast<int>(ps[c]), poly_h(ring, q_rows[r][c], h));
    }
  }
  return d;
}

}  // namespace

MatrixFactorization rpn_build(int n, const Rational& k, RpCoefficients coeffs) {
  if (n < 1 || n % 2 == 0) throw DomainError("RP^n construction needs odd n");
  if (n > kMaxVariables) throw DomainError("n exceeds the variable limit");
  if (coeffs == RpCoefficients::signed_rational && n != 3) {
    throw DomainError("signed coefficients are only available for n = 3");
  }
  const RingContext ring = make_ring(n, coeffs == RpCoefficients::gf2 ? BaseField::gf2 : BaseField::rational);
  Endomorphism d = coeffs == RpCoefficients::gf2 ? rp_rule(ring, k) : rp3_signed(k);
  const NovikovScalar tk = NovikovScalar::t_power(k, ring.field);
  LaurentPoly w(ring);
  for (int i = 0; i < n; ++i) w += LaurentPoly::z(ring, i).scaled(tk);
  w += LaurentPoly::monomial(ring, tk, -z_of_mask((1U << n) - 1, n));
  return MatrixFactorization::verified(std::move(d), std::move(w), LaurentPoly(ring));
}

std::vector<std::pair<std::string, unsigned>> rp3_labels() {
  return {{"p1", 7}, {"p2", 1}, {"p3", 2}, {"p4", 4}, {"q1", 0}, {"q2", 6}, {"q3", 5}, {"q4", 3}};
}

std::vector<std::string> zoo_preset_names() {
  return {"p1_pair", "p1_perturbed", "p1p1_antidiagonal", "p1p1_torus", "p2", "rp3_gf2", "rp3_signed", "rp5_gf2"};
}

MatrixFactorization zoo_preset(std::string_view name) {
  const Rational quarter(1, 4);
  if (name == "p1_pair") {
    const RingContext ring = make_ring(1);
    return p1_pair(Rational(1, 2), Rational(1, 2), LaurentPoly::u(ring, 0));
  }
  if (name == "p1_perturbed") return p1_perturbed(quarter, Rational(1, 3), Rational(1, 5), Rational(23, 60), 2);
  if (name == "p1p1_torus") {
    const RingContext ring = make_ring(2);
    return p1p1_torus(quarter, quarter, LaurentPoly::u(ring, 0), LaurentPoly::u(ring, 1));
  }
  if (name == "p1p1_antidiagonal") return p1p1_antidiagonal(quarter, quarter);
  if (name == "p2") {
    Endomorphism d = p2_matrix_literal(1);
    const LaurentPoly w = p2_potential(d.ring(), 1);
    return MatrixFactorization::verified(std::move(d), w, w.z_to_u());
  }
  if (name == "rp3_signed") return rpn_build(3, 1, RpCoefficients::signed_rational);
  if (name == "rp3_gf2") return rpn_build(3, 1, RpCoefficients::gf2);
  if (name == "rp5_gf2") return rpn_build(5, 1, RpCoefficients::gf2);
  throw DomainError("unknown example: " + std::string(name));
}

}  // namespace lgmf
