// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
// failure. Seeds and tolerances are fixed.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "lgmf/closed_form.hpp"
#include "lgmf/critical.hpp"
#include "lgmf/quantum4.hpp"
#include "lgmf/random.hpp"
#include "lgmf/zoo.hpp"

using namespace lgmf;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

Endomorphism identity_scaled(const Endomorphism& shape, const LaurentPoly& s) {
  return Endomorphism::identity_like(shape).scaled(s);
}

bool squares_to_potential_difference(const MatrixFactorization& mf, const LaurentPoly& w) {
  const MfCheck r = mf_verify(mf.d, w);
  return r.ok && *r.lambda == w.z_to_u();
}

// Calls f on every nonzero vector of [-box, box]^n.
void for_each_in_box(int n, int box, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> v(static_cast<std::size_t>(n), -box);
  for (;;) {
    bool nonzero = false;
    for (const int x : v) nonzero = nonzero || x != 0;
    if (nonzero) f(v);
    int pos = 0;
    while (pos < n && ++v[static_cast<std::size_t>(pos)] > box) v[static_cast<std::size_t>(pos++)] = -box;
    if (pos == n) return;
  }
}

// The vectors of criteria 3 and 4.
std::vector<std::pair<int, std::vector<int>>> oracle_vectors() {
  std::vector<std::pair<int, std::vector<int>>> out;
  for (int n = 1; n <= 3; ++n) for_each_in_box(n, 3, [&](const std::vector<int>& v) { out.emplace_back(n, v); });
  Rng rng(3);
  for (const int n : {4, 5})
    for (int k = 0; k < 500; ++k) out.emplace_back(n, random_ray(rng, n, 3));
  return out;
}

Outcome p2_reproduction() {
  Outcome o;
  for (const Rational& k : {Rational(1), Rational(2, 3), Rational(5)}) {
    const ToricFanoData fan = preset_fan("p2", k);
    const Endomorphism built = build_tilde_d(fan, build_potential(fan)).d;
    const std::vector<int> literal_order{0, 3, 1, 2};
    o.require(built.permuted(literal_order) == p2_matrix_literal(k), "closed form differs from the typed matrix");
    o.require(built == p2_matrix(k).d, "mask-order matrix differs");
  }
  return o;
}

Outcome tilde_d_squares() {
  Outcome o;
  for (const char* name : {"p2", "p3", "p4", "p1p1", "hirzebruch_f1", "p1_x4"}) {
    const ToricFanoData fan = preset_fan(name);
    const PotentialW pot = build_potential(fan);
    o.require(squares_to_potential_difference(build_tilde_d(fan, pot), pot.w), std::string("preset ") + name);
  }
  Rng rng(2);
  std::uniform_int_distribution<int> extra(1, 4);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 3;
    const ToricFanoData fan = random_fan(rng, n, n + extra(rng), 3);
    const PotentialW pot = build_potential(fan);
    o.require(squares_to_potential_difference(build_tilde_d(fan, pot), pot.w), "random fan " + fan_to_json(fan));
  }
  return o;
}

Outcome telescoping() {
  Outcome o;
  for (const auto& [n, v] : oracle_vectors())
    o.require(telescoping_check(make_ring(n), v).pass, "telescoping fails in dimension " + std::to_string(n));
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  for (const auto& [n, v] : oracle_vectors()) {
    const RingContext ring = make_ring(n);
    for (int j = 0; j < n; ++j)
      o.require(alpha_by_entry_enumeration(ring, v, j) == alpha_closed_form(ring, v, j),
                "enumeration differs in dimension " + std::to_string(n));
  }
  return o;
}

Outcome chan_leung() {
  Outcome o;
  for (const Rational& k : {Rational(1), Rational(1, 2), Rational(7, 3)})
    o.require(chan_leung_compare(k).equal, "transformed matrix differs");
  return o;
}

Outcome torus() {
  Outcome o;
  const RingContext ring = make_ring(2);
  const Rational k1(1, 3), k2(1, 6);
  const LaurentPoly h1 = LaurentPoly::u(ring, 0), h2 = LaurentPoly::u(ring, 1);
  const MatrixFactorization mf = p1p1_torus(k1, k2, h1, h2);
  const TorusBlocks blocks = p1p1_torus_blocks(k1, k2, h1, h2);
  const LaurentPoly diff = mf.potential - mf.potential.z_to_u();
  const Endomorphism d0 = blocks.a, d1 = -blocks.b;
  // d0 d1 acts on the odd generators, d1 d0 on the even ones.
  o.require(d0 * d1 + d1 * d0 == identity_scaled(mf.d, diff), "d0 d1 + d1 d0 != (W(z) - W(λ)) Id");
  o.require(blocks.a * blocks.b + blocks.b * blocks.a == identity_scaled(mf.d, -diff), "AB + BA != -(W(z) - W(λ)) Id");
  o.require(mf.lambda == mf.potential.z_to_u(), "torus lambda");
  const MatrixFactorization anti = p1p1_antidiagonal(k1, k2);
  o.require(anti.lambda.is_zero(), "anti-diagonal lambda");
  o.require(anti.d * anti.d == identity_scaled(anti.d, anti.potential), "anti-diagonal product != W");
  return o;
}

Outcome perturbed() {
  Outcome o;
  const Rational k(2);
  const MatrixFactorization mf = p1_perturbed(Rational(1, 4), Rational(1, 3), Rational(1, 5), Rational(23, 60), k);
  const LaurentPoly two_t = LaurentPoly::constant(mf.d.ring(), NovikovScalar::t_power(k / 2).scaled(FieldElement(Rational(2))));
  o.require(mf.d * mf.d == identity_scaled(mf.d, mf.potential - two_t), "products != (W - 2T^{k/2}) Id");
  return o;
}

Outcome real_projective() {
  Outcome o;
  const struct {
    int n;
    RpCoefficients c;
  } cases[] = {{3, RpCoefficients::signed_rational}, {3, RpCoefficients::gf2}, {5, RpCoefficients::gf2}};
  for (const auto& c : cases) {
    const MatrixFactorization mf = rpn_build(c.n, Rational(1), c.c);
    o.require(mf.d * mf.d == identity_scaled(mf.d, mf.potential), "square != W Id for n = " + std::to_string(c.n));
  }
  return o;
}

ToricFanoData projective_space(int n) {
  std::vector<Ray> rays;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    rays.push_back({e, Rational(-1)});
  }
  rays.push_back({std::vector<int>(static_cast<std::size_t>(n), -1), Rational(-1)});
  return ToricFanoData(n, std::move(rays), std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
}

Outcome critical_points() {
  Outcome o;
  const double t = 0.5;
  Rng rng(9);
  std::uniform_real_distribution<double> radius(0.5, 1.5), phase(0, 2 * std::numbers::pi);
  for (int n = 1; n <= 6; ++n) {
    const ToricFanoData fan = projective_space(n);
    const PotentialW pot = build_potential(fan);
    const CriticalSolution sol = solve_critical_points(pot, t);
    const std::string tag = "CP^" + std::to_string(n);
    o.require(sol.points.size() == static_cast<std::size_t>(n + 1), tag + ": wrong number of points");
    std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
    for (const auto& pt : sol.points) {
      o.require(pt.residual < 1e-12, tag + ": residual");
      // Nearest (n+1)-th root of unity to the first coordinate.
      const double arg = std::arg(pt.point[0]);
      const int r = static_cast<int>(std::lround(arg * (n + 1) / (2 * std::numbers::pi) + (n + 1))) % (n + 1);
      const auto zeta = std::polar(1.0, 2 * std::numbers::pi * r / (n + 1));
      for (const auto& c : pt.point) o.require(std::abs(c - zeta) < 1e-10, tag + ": point off the root of unity");
      o.require(!seen[static_cast<std::size_t>(r)], tag + ": repeated root");
      seen[static_cast<std::size_t>(r)] = true;

      const NumericGenerator gen = generator_at_point(fan, pot, pt, t);
      for (int s = 0; s < 20; ++s) {
        std::vector<std::complex<double>> z;
        for (int i = 0; i < n; ++i) z.push_back(std::polar(radius(rng), phase(rng)));
        o.require(gen.square_defect(z) < 1e-8, tag + ": generator square defect");
      }
    }
  }
  return o;
}

Outcome quantum() {
  Outcome o;
  const ToricFanoData fan = preset_fan("p1_x4");
  const PotentialW pot = build_potential(fan);
  const Endomorphism tilde = build_tilde_d(fan, pot).d;
  Rng rng(10);
  for (int trial = 0; trial < 20; ++trial) {
    const LaurentPoly g = random_poly(rng, pot.ring, 3, 2);
    const Endomorphism d = tilde + synthesize_d_minus3(pot.ring, g);
    o.require(squares_to_potential_difference(MatrixFactorization{d, pot.w, {}}, pot.w), "d^2 != (W - W(u)) Id");
    o.require(has_wedge_contraction_support(apply_quantum_basis(d, g)), "new basis not wedge-contraction");
  }
  return o;
}

Outcome properties() {
  Outcome o;
  for (int n = 1; n <= 5; ++n) {
    const RingContext ring = make_ring(n);
    const Endomorphism id = Endomorphism::identity_like(Endomorphism::exterior_zero(ring));
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        const Endomorphism ac = wedge_op(ring, j) * contract_op(ring, k) + contract_op(ring, k) * wedge_op(ring, j);
        o.require(j == k ? ac == id : ac.is_zero(), "Clifford relation");
        o.require((wedge_op(ring, j) * wedge_op(ring, k) + wedge_op(ring, k) * wedge_op(ring, j)).is_zero(),
                  "wedge anticommutation");
        o.require((contract_op(ring, j) * contract_op(ring, k) + contract_op(ring, k) * contract_op(ring, j)).is_zero(),
                  "contraction anticommutation");
      }
  }

  Rng rng(11);
  for (const auto field : {BaseField::rational, BaseField::gf2}) {
    const RingContext ring = make_ring(3, field);
    for (int trial = 0; trial < 200; ++trial) {
      const LaurentPoly a = random_poly(rng, ring, 4, 2), b = random_poly(rng, ring, 4, 2),
                        c = random_poly(rng, ring, 3, 2);
      o.require((a * b) * c == a * (b * c) && a * b == b * a && a * (b + c) == a * b + a * c &&
                    (a + b) + c == a + (b + c) && (a - a).is_zero(),
                "ring axioms");
    }
  }

  std::uniform_int_distribution<int> ex(-2, 2);
  for (const MatrixFactorization& mf : {p2_matrix(Rational(1)), zoo_preset("p1p1_torus"), zoo_preset("p1_perturbed")}) {
    const RingContext ring = mf.d.ring();
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<LaurentPoly> units;
      for (int g = 0; g < mf.d.dim(); ++g) {
        std::vector<int> zp, up;
        for (int i = 0; i < ring.n; ++i) {
          zp.push_back(ex(rng));
          up.push_back(ex(rng));
        }
        units.push_back(LaurentPoly::monomial(ring, NovikovScalar::t_power(Rational(ex(rng), 2)), zp, up));
      }
      const MfCheck r = mf_verify(conjugate_diagonal(mf.d, units), mf.potential);
      o.require(r.ok && *r.lambda == mf.lambda, "conjugation changes lambda");
    }
  }

  std::uniform_real_distribution<double> radius(0.5, 1.5), phase(0, 2 * std::numbers::pi);
  for (int n = 1; n <= 4; ++n) {
    const RingContext ring = make_ring(n);
    for (int trial = 0; trial < 200; ++trial) {
      const LaurentPoly f = random_poly(rng, ring, 4, 2), g = random_poly(rng, ring, 4, 2);
      std::vector<std::complex<double>> z, u;
      for (int i = 0; i < n; ++i) {
        z.push_back(std::polar(radius(rng), phase(rng)));
        u.push_back(std::polar(radius(rng), phase(rng)));
      }
      const auto lhs = (f * g).eval(z, u, 0.3);
      const auto rhs = f.eval(z, u, 0.3) * g.eval(z, u, 0.3);
      o.require(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(lhs)), "evaluation is not multiplicative");
    }
  }
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;  // 0: no time limit
  Outcome (*run)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "P2 closed form equals the typed matrix", 1.0, p2_reproduction},
      {2, "d~^2 = (W(z) - W(u)) Id on presets and 100 random fans", 30.0, tilde_d_squares},
      {3, "telescoping identity, exhaustive n<=3 box 3, 500 random n=4,5", 30.0, telescoping},
      {4, "entry enumeration equals closed form on the same vectors", 0.0, oracle_equivalence},
      {5, "P2 after rescaling and basis change equals the Chan-Leung matrix", 0.0, chan_leung},
      {6, "P1xP1 torus blocks and anti-diagonal pair", 0.0, torus},
      {7, "perturbed P1 pair, areas 1/4 1/3 1/5 23/60", 0.0, perturbed},
      {8, "RP^3 signed, RP^3 and RP^5 over F2 square to W Id", 5.0, real_projective},
      {9, "CP^n critical points n<=6 and generator squares", 0.0, critical_points},
      {10, "dimension 4: 20 random g, square and basis change", 0.0, quantum},
      {11, "property suites (Clifford, ring axioms, conjugation, evaluation)", 0.0, properties},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && c.limit_s > 0 && secs >= c.limit_s) {
      o.pass = false;
      o.detail = "time limit " + std::to_string(c.limit_s) + " s exceeded";
    }
    std::printf("%s %2d  %s  (%.3f s)%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, o.pass ? "" : "  -- ",
                o.detail.c_str());
    failures += o.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
