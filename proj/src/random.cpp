#include "lgmf/random.hpp"

#include <algorithm>
#include <set>

namespace lgmf {

std::vector<int> random_ray(Rng& rng, int n, int max_entry) {
  std::uniform_int_distribution<int> entry(-max_entry, max_entry);
  std::vector<int> v(static_cast<std::size_t>(n));
  do {
    for (auto& x : v) x = entry(rng);
  } while (std::all_of(v.begin(), v.end(), [](int x) { return x == 0; }));
  return v;
}

ToricFanoData random_fan(Rng& rng, int n, int m, int max_entry) {
  std::uniform_int_distribution<int> half_units(1, 4);
  std::set<std::vector<int>> seen;
  std::vector<Ray> rays;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[i] = 1;
    seen.insert(e);
    rays.push_back({e, make_rational(-half_units(rng), 2)});
  }
  while (static_cast<int>(rays.size()) < m) {
    auto v = random_ray(rng, n, max_entry);
    if (!seen.insert(v).second) continue;
    rays.push_back({std::move(v), make_rational(-half_units(rng), 2)});
  }
  return ToricFanoData(n, std::move(rays), std::vector<Rational>(static_cast<std::size_t>(n)));
}

LaurentPoly random_poly(Rng& rng, RingContext ring, int terms, int max_exp) {
  std::uniform_int_distribution<int> exp(-max_exp, max_exp);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> tpow(0, 3);
  LaurentPoly p(ring);
  for (int k = 0; k < terms; ++k) {
    ExponentVector e;
    for (int i = 0; i < ring.n; ++i) {
      e.set_z(i, exp(rng));
      e.set_u(i, exp(rng));
    }
    const NovikovScalar c(FieldElement::from_int(coeff(rng), ring.field), make_rational(tpow(rng), 2));
    p += LaurentPoly::monomial(ring, c, e);
  }
  return p;
}

}  // namespace lgmf
