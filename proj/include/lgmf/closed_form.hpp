#pragma once

#include <functional>
#include <span>
#include <vector>

#include "lgmf/exterior.hpp"
#include "lgmf/toric.hpp"

namespace lgmf {

// Ray vectors are in normalized coordinates (v_1..v_n = standard basis) and
// basis indices j are 0-based throughout.

// Explicit formula for the contraction coefficient α_j of a ray v, with the
// sign s_j folded in. Zero when v_j = 0.
LaurentPoly alpha_closed_form(RingContext ring, std::span<const int> v, int j);
LaurentPoly alpha_closed_form(const ToricFanoData& fan, RingContext ring, int i, int j);

// Same coefficient obtained by walking the entry points of the flow line on
// the torus and counting hypertorus crossings (exact arithmetic with two
// ordered infinitesimals for the offsets). Independent of the formula above.
LaurentPoly alpha_by_entry_enumeration(RingContext ring, std::span<const int> v, int j);
LaurentPoly alpha_by_entry_enumeration(const ToricFanoData& fan, RingContext ring, int i, int j);

using AlphaFunction = std::function<LaurentPoly(RingContext, std::span<const int>, int)>;

struct TelescopeResult {
  bool pass = false;
  LaurentPoly difference;  // sum_j α_j (z_j - u_j) - (z^v - u^v)
};

// Expands sum_j α_j (z_j - u_j) and compares with z^v - u^v. Defaults to
// the closed form.
TelescopeResult telescoping_check(RingContext ring, std::span<const int> v, const AlphaFunction& alpha = {});

struct AlphaTable {
  int n = 0;
  int m = 0;
  std::vector<std::vector<LaurentPoly>> alpha;  // alpha[i][j]
  std::vector<std::vector<int>> signs;
};

AlphaTable alpha_table(const ToricFanoData& fan, RingContext ring);

// w_j = sum_i c_i α^i_j.
std::vector<LaurentPoly> contraction_coefficients(const ToricFanoData& fan, const PotentialW& pot);
// x_i = z_i - u_i.
std::vector<LaurentPoly> wedge_coefficients(RingContext ring);

// d̃ = sum_i (z_i - u_i) e_i∧ + sum_j w_j ι_j, verified to square to
// (W(z) - W(u))·Id. Throws VerificationError otherwise.
MatrixFactorization build_tilde_d(const ToricFanoData& fan, const PotentialW& pot);

}  // namespace lgmf
