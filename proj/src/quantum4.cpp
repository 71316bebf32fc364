#include "lgmf/quantum4.hpp"

#include <map>

#include "lgmf/errors.hpp"

namespace lgmf {

namespace {

constexpr Mask kTop = 0b1111;

void require_dim4(RingContext ring) {
  if (ring.n != 4) throw DomainError("the quantum basis change is defined for n = 4");
}

LaurentPoly x_of(RingContext ring, int i) { return LaurentPoly::z(ring, i) - LaurentPoly::u(ring, i); }

}  // namespace

Endomorphism synthesize_d_minus3(RingContext ring, const LaurentPoly& g) {
  require_dim4(ring);
  Endomorphism d = Endomorphism::exterior_zero(ring);
  for (int i = 1; i <= 4; ++i) {
    const Mask bit = Mask{1} << (i - 1);
    const LaurentPoly xg = x_of(ring, i - 1) * g;
    d.set(static_cast<int>(bit), static_cast<int>(kTop), xg);
    d.set(0, static_cast<int>(kTop & ~bit), i % 2 ? -xg : xg);
  }
  return d;
}

std::optional<LaurentPoly> divide_by_difference(const LaurentPoly& f, int i) {
  const RingContext ring = f.ring();
  if (i < 0 || i >= ring.n) throw DomainError("variable index out of range");
  if (f.is_zero()) return f;
  // Group f by the exponent of z_i: f = sum_k a_k z_i^k.
  std::map<int, LaurentPoly> by_power;
  for (const auto& t : f.terms()) {
    ExponentVector rest = t.mono;
    const int k = rest.z(i);
    rest.set_z(i, 0);
    auto [it, inserted] = by_power.try_emplace(k, ring);
    it->second += LaurentPoly::monomial(ring, t.coeff, rest);
  }
  const int low = by_power.begin()->first;
  const int high = by_power.rbegin()->first;
  // Synthetic division of sum_k a_k X^{k-low} by X - u_i.
  const LaurentPoly ui = LaurentPoly::u(ring, i);
  LaurentPoly carry(ring);
  LaurentPoly quotient(ring);
  for (int k = high; k >= low; --k) {
    auto it = by_power.find(k);
    LaurentPoly a = it == by_power.end() ? LaurentPoly(ring) : it->second;
    carry = a + ui * carry;
    if (k == low) break;
    ExponentVector e;
    e.set_z(i, k - 1);
    quotient += carry * LaurentPoly::monomial(ring, NovikovScalar::from_int(1, ring.field), e);
  }
  if (!carry.is_zero()) return std::nullopt;
  return quotient;
}

ExtractResult extract_g(const Endomorphism& d3) {
  const RingContext ring = d3.ring();
  require_dim4(ring);
  if (!d3.is_exterior_basis()) return {std::nullopt, "not an exterior-algebra matrix"};
  for (int r = 0; r < d3.dim(); ++r) {
    for (int c = 0; c < d3.dim(); ++c) {
      if (d3.at(r, c).is_zero()) continue;
      const bool top_to_one = c == static_cast<int>(kTop) && popcount(static_cast<Mask>(r)) == 1;
      const bool three_to_zero = r == 0 && popcount(static_cast<Mask>(c)) == 3;
      if (!top_to_one && !three_to_zero) {
        return {std::nullopt, "entry outside degrees 4->1 and 3->0 at (" + d3.labels()[r] + ", " + d3.labels()[c] + ")"};
      }
    }
  }
  std::optional<LaurentPoly> g;
  for (int i = 1; i <= 4; ++i) {
    const Mask bit = Mask{1} << (i - 1);
    const LaurentPoly& f = d3.at(0, static_cast<int>(kTop & ~bit));
    auto q = divide_by_difference(f, i - 1);
    if (!q) return {std::nullopt, "d3(e_top\\" + std::to_string(i) + ") is not divisible by x" + std::to_string(i)};
    const LaurentPoly gi = i % 2 ? -*q : *q;
    if (g && *g != gi) return {std::nullopt, "(-1)^i g_i depends on i (i=" + std::to_string(i) + ")"};
    g = gi;
  }
  if (synthesize_d_minus3(ring, *g) != d3) return {std::nullopt, "d3(e_top) is not g · sum x_j e_j"};
  return {g, {}};
}

bool has_wedge_contraction_support(const Endomorphism& d) {
  for (int r = 0; r < d.dim(); ++r) {
    for (int c = 0; c < d.dim(); ++c) {
      if (d.at(r, c).is_zero()) continue;
      const int dr = popcount(static_cast<Mask>(r));
      const int dc = popcount(static_cast<Mask>(c));
      if (dr != dc + 1 && dr + 1 != dc) return false;
    }
  }
  return true;
}

Endomorphism apply_quantum_basis(const Endomorphism& d, const LaurentPoly& g) {
  const RingContext ring = d.ring();
  require_dim4(ring);
  if (!d.is_exterior_basis()) throw DomainError("apply_quantum_basis needs an exterior-algebra matrix");
  if (!has_wedge_contraction_support(d - synthesize_d_minus3(ring, g))) {
    throw DomainError("d is not a wedge-contraction map plus d3(g)");
  }
  // P sends e_top to e_top - g·1; the matrix in the new basis is P^{-1} d P.
  Endomorphism p = Endomorphism::identity_like(d);
  Endomorphism p_inv = Endomorphism::identity_like(d);
  p.set(0, static_cast<int>(kTop), -g);
  p_inv.set(0, static_cast<int>(kTop), g);
  return p_inv * d * p;
}

}  // namespace lgmf
