#pragma once

#include <optional>
#include <string>

#include "lgmf/exterior.hpp"

namespace lgmf {

// Four-dimensional shell of the degree -3 part of the differential on the
// exterior algebra (n = 4, x_i = z_i - u_i, e_top = e1234):
//   d3(e_top)     = g · sum_j x_j e_j
//   d3(e_top \ i) = (-1)^i x_i g · 1
Endomorphism synthesize_d_minus3(RingContext ring, const LaurentPoly& g);

struct ExtractResult {
  std::optional<LaurentPoly> g;
  std::string error;  // set when the map is not of the above form
};
// Recovers g from a map of the above shape.
ExtractResult extract_g(const Endomorphism& d3);

// Exact division by z_i - u_i (0-based i); nullopt if not divisible.
std::optional<LaurentPoly> divide_by_difference(const LaurentPoly& f, int i);

// Matrix of d in the basis where e_top is replaced by e_top - g·1. Requires
// d - d3(g) to have only wedge/contraction support; throws DomainError
// otherwise.
Endomorphism apply_quantum_basis(const Endomorphism& d, const LaurentPoly& g);

// Nonzero entries only where |row| = |col| ± 1.
bool has_wedge_contraction_support(const Endomorphism& d);

}  // namespace lgmf
