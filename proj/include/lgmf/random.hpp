#pragma once

#include <random>
#include <vector>

#include "lgmf/laurent.hpp"
#include "lgmf/toric.hpp"

namespace lgmf {

using Rng = std::mt19937_64;

// Random nonzero integer vector with entries in [-max_entry, max_entry].
std::vector<int> random_ray(Rng& rng, int n, int max_entry);

// Fan with rays e_1..e_n followed by m - n distinct random rays, basepoint 0
// and random positive areas in {1/2, 1, 3/2, 2}.
ToricFanoData random_fan(Rng& rng, int n, int m, int max_entry);

// Sum of `terms` random monomials in z and u with exponents in
// [-max_exp, max_exp], small integer coefficients and T-exponents in
// {0, 1/2, 1, 3/2}.
LaurentPoly random_poly(Rng& rng, RingContext ring, int terms, int max_exp);

}  // namespace lgmf
