#pragma once

#include <complex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lgmf/rational.hpp"

namespace lgmf {

enum class BaseField : unsigned char { rational, gf2, complex };

std::string to_string(BaseField f);

// Element of F_2.
struct Gf2 {
  bool one = false;
  friend bool operator==(Gf2, Gf2) = default;
};

// A coefficient in one of the supported base fields. Arithmetic between
// different fields throws FieldMismatch; nothing is coerced.
//
// Complex values are double precision and exist for numerical evaluation.
class FieldElement {
 public:
  FieldElement() : value_(Rational(0)) {}
  explicit FieldElement(Rational q) : value_(std::move(q)) {}
  explicit FieldElement(Gf2 b) : value_(b) {}
  explicit FieldElement(std::complex<double> c) : value_(c) {}

  static FieldElement zero(BaseField f);
  static FieldElement one(BaseField f);
  // Image of an integer in the field (reduced mod 2 for F_2).
  static FieldElement from_int(long k, BaseField f);

  BaseField field() const { return static_cast<BaseField>(value_.index()); }
  bool is_zero() const;

  const Rational& rational() const;
  std::complex<double> to_complex() const;  // throws DomainError for F_2

  FieldElement operator-() const;
  FieldElement inverse() const;  // throws DomainError on zero

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  std::string to_string() const;

 private:
  std::variant<Rational, Gf2, std::complex<double>> value_;
};

// Finite Novikov sum  sum_i a_i T^{lambda_i}  with rational exponents.
// Terms are kept sorted by strictly increasing exponent with no zero
// coefficients, so equality is structural.
class NovikovScalar {
 public:
  struct Term {
    Rational exponent;
    FieldElement coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit NovikovScalar(BaseField f = BaseField::rational) : field_(f) {}
  // coeff * T^exponent
  NovikovScalar(FieldElement coeff, Rational exponent);

  static NovikovScalar from_int(long k, BaseField f = BaseField::rational);
  static NovikovScalar t_power(const Rational& exponent, BaseField f = BaseField::rational);

  BaseField field() const { return field_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }

  // Minimal exponent; nullopt stands for +infinity (the zero scalar).
  std::optional<Rational> valuation() const;

  // Units of the finite Novikov ring are the single-term sums.
  bool is_unit() const { return terms_.size() == 1; }
  NovikovScalar inverse() const;  // throws DomainError for non-units
  NovikovScalar pow(long e) const;

  NovikovScalar operator-() const;
  NovikovScalar& operator+=(const NovikovScalar& b);
  friend NovikovScalar operator+(NovikovScalar a, const NovikovScalar& b) { return a += b; }
  friend NovikovScalar operator-(const NovikovScalar& a, const NovikovScalar& b) { return a + (-b); }
  friend NovikovScalar operator*(const NovikovScalar& a, const NovikovScalar& b);
  NovikovScalar scaled(const FieldElement& c) const;
  friend bool operator==(const NovikovScalar&, const NovikovScalar&) = default;

  // sum a_i t^{lambda_i}. Not defined over F_2.
  std::complex<double> specialize(double t_value) const;

 private:
  void check_field(const NovikovScalar& other) const;

  BaseField field_;
  std::vector<Term> terms_;
};

}  // namespace lgmf
