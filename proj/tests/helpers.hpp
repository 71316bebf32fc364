#pragma once

#include <string_view>

#include "lgmf/laurent.hpp"

namespace lgmf::test {

inline LaurentPoly P(std::string_view text, int n, BaseField f = BaseField::rational) {
  return LaurentPoly::parse(text, make_ring(n, f));
}

inline NovikovScalar T(const Rational& e, BaseField f = BaseField::rational) { return NovikovScalar::t_power(e, f); }

inline Rational Q(long p, long q = 1) { return make_rational(p, q); }

}  // namespace lgmf::test
