#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lgmf/exterior.hpp"

namespace lgmf {

// All constructions return verified matrix factorizations; areas are rational
// T-exponents.

// Great-circle pair on P^1 with generators p (even), q (odd) and holonomy
// hol (a unit, e.g. u1 for a symbolic value). W = T^{k1+k2}(z + 1/z).
MatrixFactorization p1_pair(const Rational& k1, const Rational& k2, const LaurentPoly& hol);

// Perturbed P^1 Lagrangian; generators p1, p2 (even), q1, q2 (odd). Throws
// DomainError unless alpha + beta = gamma + delta.
MatrixFactorization p1_perturbed(const Rational& alpha, const Rational& beta, const Rational& gamma,
                                 const Rational& delta, const Rational& k);

// The two blocks of the torus pair in P^1 x P^1: A maps the even generators
// (p,p), (q,q) to the odd ones (p,q), (q,p); B goes back.
struct TorusBlocks {
  Endomorphism a;  // even -> odd
  Endomorphism b;  // odd -> even
};
TorusBlocks p1p1_torus_blocks(const Rational& k1, const Rational& k2, const LaurentPoly& hol1,
                              const LaurentPoly& hol2);
// d = A - B (that is d0 = A, d1 = -B). Generators (p,p), (q,q), (p,q), (q,p).
MatrixFactorization p1p1_torus(const Rational& k1, const Rational& k2, const LaurentPoly& hol1,
                               const LaurentPoly& hol2);
MatrixFactorization p1p1_antidiagonal(const Rational& k1, const Rational& k2);

// The P^2 matrix typed in by hand, in the label order 1, e12, e1, e2.
Endomorphism p2_matrix_literal(const Rational& k);
// The same matrix in exterior mask order, verified against W(z) - W(u).
MatrixFactorization p2_matrix(const Rational& k);

struct ChanLeungReport {
  bool equal = false;
  Endomorphism transformed;    // after coordinates and basis change
  Endomorphism expected;       // the target matrix, rows p1, p2, q1, q2
  Endomorphism chan_leung;     // transformed with z1' and z2' swapped
};
// Rescales z_i = q^{-1/3} z_i' with q = T^{3k}, sets u = (1,1), changes basis
// to p1 = e2, p2 = -z1' e1, q1 = q^{1/3}, q2 = q^{-1/3} z1' e12 and compares.
ChanLeungReport chan_leung_compare(const Rational& k);

enum class RpCoefficients { gf2, signed_rational };

// Generators are the sign vectors [1 : s_1 : ... : s_n], indexed by the mask
// {j : s_j = -1}, of degree (number of -1's) mod 2. n must be odd; signed
// coefficients exist only for n = 3. Verified with lambda = 0 against
// W = T^k(z_1 + ... + z_n + 1/(z_1...z_n)).
MatrixFactorization rpn_build(int n, const Rational& k, RpCoefficients coeffs);
// Labels p1..p4, q1..q4 of the n = 3 generators: mask of each label.
std::vector<std::pair<std::string, unsigned>> rp3_labels();

// Names accepted by zoo_preset.
std::vector<std::string> zoo_preset_names();
// Fixed-parameter instances (k = 1 unless stated): p1_pair, p1_perturbed,
// p1p1_torus, p1p1_antidiagonal, p2, rp3_signed, rp3_gf2, rp5_gf2.
MatrixFactorization zoo_preset(std::string_view name);

}  // namespace lgmf
