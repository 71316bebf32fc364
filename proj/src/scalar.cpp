#include "lgmf/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lgmf/errors.hpp"

namespace lgmf {

std::string to_string(BaseField f) {
  switch (f) {
    case BaseField::rational: return "rational";
    case BaseField::gf2: return "gf2";
    case BaseField::complex: return "complex";
  }
  return "?";
}

namespace {

void require_same(const FieldElement& a, const FieldElement& b) {
  if (a.field() != b.field()) {
    throw FieldMismatch("base field mismatch: " + to_string(a.field()) + " vs " + to_string(b.field()));
  }
}

}  // namespace

FieldElement FieldElement::zero(BaseField f) { return from_int(0, f); }
FieldElement FieldElement::one(BaseField f) { return from_int(1, f); }

FieldElement FieldElement::from_int(long k, BaseField f) {
  switch (f) {
    case BaseField::rational: return FieldElement(Rational(k));
    case BaseField::gf2: return FieldElement(Gf2{(k % 2) != 0});
    case BaseField::complex: return FieldElement(std::complex<double>(static_cast<double>(k), 0.0));
  }
  throw DomainError("unknown base field");
}

bool FieldElement::is_zero() const {
  return std::visit(
      [](const auto& v) -> bool {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, Rational>) {
          return v == 0;
        } else if constexpr (std::is_same_v<V, Gf2>) {
          return !v.one;
        } else {
          return v == std::complex<double>(0.0, 0.0);
        }
      },
      value_);
}

const Rational& FieldElement::rational() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return *q;
  throw FieldMismatch("field element is not rational");
}

std::complex<double> FieldElement::to_complex() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return {q->get_d(), 0.0};
  if (const auto* c = std::get_if<std::complex<double>>(&value_)) return *c;
  throw DomainError("characteristic-2 values have no complex embedding");
}

FieldElement FieldElement::operator-() const {
  return std::visit(
      [](const auto& v) -> FieldElement {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, Gf2>) {
          return FieldElement(v);
        } else {
          return FieldElement(V(-v));
        }
      },
      value_);
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  return std::visit(
      [](const auto& v) -> FieldElement {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, Gf2>) {
          return FieldElement(v);
        } else if constexpr (std::is_same_v<V, Rational>) {
          return FieldElement(Rational(1 / v));
        } else {
          return FieldElement(1.0 / v);
        }
      },
      value_);
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  switch (a.field()) {
    case BaseField::rational: return FieldElement(Rational(std::get<Rational>(a.value_) + std::get<Rational>(b.value_)));
    case BaseField::gf2: return FieldElement(Gf2{std::get<Gf2>(a.value_).one != std::get<Gf2>(b.value_).one});
    case BaseField::complex:
      return FieldElement(std::get<std::complex<double>>(a.value_) + std::get<std::complex<double>>(b.value_));
  }
  throw DomainError("unknown base field");
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  switch (a.field()) {
    case BaseField::rational: return FieldElement(Rational(std::get<Rational>(a.value_) * std::get<Rational>(b.value_)));
    case BaseField::gf2: return FieldElement(Gf2{std::get<Gf2>(a.value_).one && std::get<Gf2>(b.value_).one});
    case BaseField::complex:
      return FieldElement(std::get<std::complex<double>>(a.value_) * std::get<std::complex<double>>(b.value_));
  }
  throw DomainError("unknown base field");
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.field() != b.field()) return false;
  return a.value_ == b.value_;
}

std::string FieldElement::to_string() const {
  return std::visit(
      [](const auto& v) -> std::string {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, Rational>) {
          return lgmf::to_string(v);
        } else if constexpr (std::is_same_v<V, Gf2>) {
          return v.one ? "1" : "0";
        } else {
          std::ostringstream os;
          os.precision(17);
          os << '(' << v.real() << ',' << v.imag() << ')';
          return os.str();
        }
      },
      value_);
}

// ---------------------------------------------------------------------------

NovikovScalar::NovikovScalar(FieldElement coeff, Rational exponent) : field_(coeff.field()) {
  if (!coeff.is_zero()) terms_.push_back({std::move(exponent), std::move(coeff)});
}

NovikovScalar NovikovScalar::from_int(long k, BaseField f) {
  return NovikovScalar(FieldElement::from_int(k, f), Rational(0));
}

NovikovScalar NovikovScalar::t_power(const Rational& exponent, BaseField f) {
  return NovikovScalar(FieldElement::one(f), exponent);
}

void NovikovScalar::check_field(const NovikovScalar& other) const {
  if (field_ != other.field_) {
    throw FieldMismatch("Novikov scalars over different base fields: " + to_string(field_) + " vs " +
                        to_string(other.field_));
  }
}

std::optional<Rational> NovikovScalar::valuation() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().exponent;
}

NovikovScalar NovikovScalar::inverse() const {
  if (!is_unit()) throw DomainError("Novikov scalar is not a unit");
  return NovikovScalar(terms_.front().coeff.inverse(), -terms_.front().exponent);
}

NovikovScalar NovikovScalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  if (is_unit()) {
    FieldElement c = FieldElement::one(field_);
    for (long i = 0; i < e; ++i) c = c * terms_.front().coeff;
    return NovikovScalar(c, terms_.front().exponent * e);
  }
  NovikovScalar result = from_int(1, field_);
  NovikovScalar base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

NovikovScalar NovikovScalar::operator-() const {
  NovikovScalar r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

NovikovScalar& NovikovScalar::operator+=(const NovikovScalar& b) {
  check_field(b);
  if (b.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + b.terms_.size());
  auto i = terms_.begin();
  auto j = b.terms_.begin();
  while (i != terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != terms_.end() && i->exponent < j->exponent)) {
      merged.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->exponent < i->exponent) {
      merged.push_back(*j++);
    } else {
      FieldElement c = i->coeff + j->coeff;
      if (!c.is_zero()) merged.push_back({std::move(i->exponent), std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

NovikovScalar operator*(const NovikovScalar& a, const NovikovScalar& b) {
  a.check_field(b);
  NovikovScalar r(a.field_);
  if (a.terms_.empty() || b.terms_.empty()) return r;
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const auto& single = a.terms_.size() == 1 ? a : b;
    const auto& other = a.terms_.size() == 1 ? b : a;
    const auto& s = single.terms_.front();
    for (const auto& t : other.terms_) {
      FieldElement c = s.coeff * t.coeff;
      if (!c.is_zero()) r.terms_.push_back({s.exponent + t.exponent, std::move(c)});
    }
    return r;
  }
  std::vector<NovikovScalar::Term> prods;
  prods.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) prods.push_back({s.exponent + t.exponent, s.coeff * t.coeff});
  }
  std::stable_sort(prods.begin(), prods.end(), [](const auto& x, const auto& y) { return x.exponent < y.exponent; });
  for (auto& p : prods) {
    if (!r.terms_.empty() && r.terms_.back().exponent == p.exponent) {
      r.terms_.back().coeff = r.terms_.back().coeff + p.coeff;
    } else {
      if (!r.terms_.empty() && r.terms_.back().coeff.is_zero()) r.terms_.pop_back();
      r.terms_.push_back(std::move(p));
    }
  }
  if (!r.terms_.empty() && r.terms_.back().coeff.is_zero()) r.terms_.pop_back();
  return r;
}

NovikovScalar NovikovScalar::scaled(const FieldElement& c) const {
  if (c.field() != field_) throw FieldMismatch("scaling by an element of another field");
  NovikovScalar r(field_);
  if (c.is_zero()) return r;
  for (const auto& t : terms_) {
    FieldElement x = t.coeff * c;
    if (!x.is_zero()) r.terms_.push_back({t.exponent, std::move(x)});
  }
  return r;
}

std::complex<double> NovikovScalar::specialize(double t_value) const {
  if (field_ == BaseField::gf2) throw DomainError("cannot specialize a characteristic-2 Novikov scalar");
  if (!(t_value > 0.0)) throw DomainError("specialization value must be positive");
  std::complex<double> sum{0.0, 0.0};
  for (const auto& t : terms_) sum += t.coeff.to_complex() * std::pow(t_value, t.exponent.get_d());
  return sum;
}

}  // namespace lgmf
