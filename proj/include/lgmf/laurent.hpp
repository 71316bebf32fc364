#pragma once

#include <array>
#include <compare>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lgmf/scalar.hpp"

namespace lgmf {

inline constexpr int kMaxVariables = 8;

// Number of mirror variables n and the base field of the coefficients. The
// ring is Lambda[z_1^±..z_n^±, u_1^±..u_n^±] where u_i stands for the fixed
// holonomy variable z̲_i.
struct RingContext {
  int n = 0;
  BaseField field = BaseField::rational;
  friend bool operator==(const RingContext&, const RingContext&) = default;
};

RingContext make_ring(int n, BaseField field = BaseField::rational);

// Exponents of z_1..z_n followed by those of u_1..u_n. Entries past n stay
// zero, so the array order is the lexicographic order on (z part, u part).
class ExponentVector {
 public:
  ExponentVector() = default;
  ExponentVector(std::span<const int> z_part, std::span<const int> u_part);

  int z(int i) const { return e_[i]; }
  int u(int i) const { return e_[kMaxVariables + i]; }
  void set_z(int i, int value);
  void set_u(int i, int value);

  bool is_zero() const;
  bool z_free() const;

  ExponentVector operator-() const;
  friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
  ExponentVector scaled(int k) const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::array<std::int16_t, 2 * kMaxVariables> e_{};
};

class Substitution;

// Sparse Laurent polynomial with NovikovScalar coefficients. Terms are sorted
// by exponent vector with no zero coefficients; equality is structural.
class LaurentPoly {
 public:
  struct Term {
    ExponentVector mono;
    NovikovScalar coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentPoly() = default;
  explicit LaurentPoly(RingContext ring) : ring_(ring) {}

  static LaurentPoly constant(RingContext ring, const NovikovScalar& c);
  static LaurentPoly from_int(RingContext ring, long k);
  static LaurentPoly monomial(RingContext ring, const NovikovScalar& c, const ExponentVector& e);
  static LaurentPoly monomial(RingContext ring, const NovikovScalar& c, std::span<const int> z_part,
                              std::span<const int> u_part);
  // The variable z_i (0-based).
  static LaurentPoly z(RingContext ring, int i);
  // The fixed-holonomy variable u_i = z̲_i (0-based).
  static LaurentPoly u(RingContext ring, int i);

  RingContext ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool z_free() const;
  NovikovScalar coefficient(const ExponentVector& e) const;

  // A single term with a unit coefficient.
  bool is_unit() const;
  LaurentPoly inverse() const;  // throws DomainError for non-units
  LaurentPoly pow(long e) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& b);
  LaurentPoly& operator-=(const LaurentPoly& b) { return *this += -b; }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }
  LaurentPoly scaled(const NovikovScalar& c) const;
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly substitute(const Substitution& s) const;

  // Numerical value with T specialized to t_value. All coordinates must be
  // nonzero.
  std::complex<double> eval(std::span<const std::complex<double>> z_point,
                            std::span<const std::complex<double>> u_point, double t_value) const;

  // Canonical text, e.g. "1*T^1*z1^-1*z2^-1 + -1*T^1*u1^-1". "0" for zero.
  std::string to_text() const;
  static LaurentPoly parse(std::string_view text, RingContext ring);

  // Replaces every z_i by u_i, e.g. W(z) -> W(u). Requires u-free input.
  LaurentPoly z_to_u() const;
  // Replaces every u_i by z_i.
  LaurentPoly u_to_z() const;

 private:
  void check_ring(const LaurentPoly& other) const;
  void canonicalize(std::vector<Term>& raw);

  RingContext ring_{};
  std::vector<Term> terms_;
};

// A ring endomorphism sending chosen variables to unit monomials
// (coefficient a single-term Novikov scalar). Unset variables are fixed.
class Substitution {
 public:
  explicit Substitution(RingContext ring);

  static Substitution identity(RingContext ring) { return Substitution(ring); }

  // Throws DomainError unless target is a unit.
  Substitution& map_z(int i, const LaurentPoly& target);
  Substitution& map_u(int i, const LaurentPoly& target);

  RingContext ring() const { return ring_; }
  const std::optional<LaurentPoly>& z_target(int i) const { return targets_[i]; }
  const std::optional<LaurentPoly>& u_target(int i) const { return targets_[kMaxVariables + i]; }

  // The inverse homomorphism. Exists iff the exponent matrix of the targets
  // is unimodular; throws DomainError otherwise.
  Substitution inverse() const;

 private:
  RingContext ring_;
  std::array<std::optional<LaurentPoly>, 2 * kMaxVariables> targets_;
};

}  // namespace lgmf
