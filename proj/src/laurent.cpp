#include "lgmf/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <sstream>

#include "lgmf/errors.hpp"

namespace lgmf {

namespace {

std::int16_t narrow_exponent(long value) {
  if (value > std::numeric_limits<std::int16_t>::max() || value < std::numeric_limits<std::int16_t>::min()) {
    throw DomainError("exponent out of range: " + std::to_string(value));
  }
  return static_cast<std::int16_t>(value);
}

std::complex<double> ipow(std::complex<double> x, long e) {
  if (e < 0) {
    x = 1.0 / x;
    e = -e;
  }
  std::complex<double> r(1.0, 0.0);
  while (e > 0) {
    if (e & 1) r *= x;
    x *= x;
    e >>= 1;
  }
  return r;
}

}  // namespace

RingContext make_ring(int n, BaseField field) {
  if (n < 0 || n > kMaxVariables) {
    throw DomainError("number of variables must lie in [0, " + std::to_string(kMaxVariables) + "]");
  }
  return RingContext{n, field};
}

// ---------------------------------------------------------------------------

ExponentVector::ExponentVector(std::span<const int> z_part, std::span<const int> u_part) {
  if (z_part.size() > static_cast<std::size_t>(kMaxVariables) ||
      u_part.size() > static_cast<std::size_t>(kMaxVariables)) {
    throw DomainError("exponent vector longer than the variable limit");
  }
  for (std::size_t i = 0; i < z_part.size(); ++i) e_[i] = narrow_exponent(z_part[i]);
  for (std::size_t i = 0; i < u_part.size(); ++i) e_[kMaxVariables + i] = narrow_exponent(u_part[i]);
}

void ExponentVector::set_z(int i, int value) { e_[i] = narrow_exponent(value); }
void ExponentVector::set_u(int i, int value) { e_[kMaxVariables + i] = narrow_exponent(value); }

bool ExponentVector::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](auto x) { return x == 0; });
}

bool ExponentVector::z_free() const {
  return std::all_of(e_.begin(), e_.begin() + kMaxVariables, [](auto x) { return x == 0; });
}

ExponentVector ExponentVector::operator-() const { return scaled(-1); }

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r;
  for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = narrow_exponent(long{a.e_[i]} + long{b.e_[i]});
  return r;
}

ExponentVector ExponentVector::scaled(int k) const {
  ExponentVector r;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = narrow_exponent(long{e_[i]} * k);
  return r;
}

// ---------------------------------------------------------------------------

void LaurentPoly::check_ring(const LaurentPoly& other) const {
  if (ring_ != other.ring_) {
    throw RingMismatch("Laurent polynomials over different rings (n=" + std::to_string(ring_.n) + "/" +
                       to_string(ring_.field) + " vs n=" + std::to_string(other.ring_.n) + "/" +
                       to_string(other.ring_.field) + ")");
  }
}

// Sorts, merges equal monomials and drops zeros.
void LaurentPoly::canonicalize(std::vector<Term>& raw) {
  std::sort(raw.begin(), raw.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
  terms_.clear();
  for (auto& t : raw) {
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coeff += t.coeff;
    } else {
      if (!terms_.empty() && terms_.back().coeff.is_zero()) terms_.pop_back();
      terms_.push_back(std::move(t));
    }
  }
  if (!terms_.empty() && terms_.back().coeff.is_zero()) terms_.pop_back();
}

LaurentPoly LaurentPoly::constant(RingContext ring, const NovikovScalar& c) {
  return monomial(ring, c, ExponentVector{});
}

LaurentPoly LaurentPoly::from_int(RingContext ring, long k) {
  return constant(ring, NovikovScalar::from_int(k, ring.field));
}

LaurentPoly LaurentPoly::monomial(RingContext ring, const NovikovScalar& c, const ExponentVector& e) {
  if (c.field() != ring.field) {
    throw FieldMismatch("coefficient field " + to_string(c.field()) + " does not match ring field " +
                        to_string(ring.field));
  }
  for (int i = ring.n; i < kMaxVariables; ++i) {
    if (e.z(i) != 0 || e.u(i) != 0) throw DomainError("exponent uses a variable beyond n");
  }
  LaurentPoly p(ring);
  if (!c.is_zero()) p.terms_.push_back({e, c});
  return p;
}

LaurentPoly LaurentPoly::monomial(RingContext ring, const NovikovScalar& c, std::span<const int> z_part,
                                  std::span<const int> u_part) {
  const auto n = static_cast<std::size_t>(ring.n);
  if (z_part.size() != n || u_part.size() != n) {
    throw DomainError("exponent vectors must have length n = " + std::to_string(ring.n));
  }
  return monomial(ring, c, ExponentVector(z_part, u_part));
}

LaurentPoly LaurentPoly::z(RingContext ring, int i) {
  if (i < 0 || i >= ring.n) throw DomainError("variable index out of range");
  ExponentVector e;
  e.set_z(i, 1);
  return monomial(ring, NovikovScalar::from_int(1, ring.field), e);
}

LaurentPoly LaurentPoly::u(RingContext ring, int i) {
  if (i < 0 || i >= ring.n) throw DomainError("variable index out of range");
  ExponentVector e;
  e.set_u(i, 1);
  return monomial(ring, NovikovScalar::from_int(1, ring.field), e);
}

bool LaurentPoly::z_free() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.mono.z_free(); });
}

NovikovScalar LaurentPoly::coefficient(const ExponentVector& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const ExponentVector& key) { return t.mono < key; });
  if (it != terms_.end() && it->mono == e) return it->coeff;
  return NovikovScalar(ring_.field);
}

bool LaurentPoly::is_unit() const { return terms_.size() == 1 && terms_.front().coeff.is_unit(); }

LaurentPoly LaurentPoly::inverse() const {
  if (!is_unit()) throw DomainError("Laurent polynomial is not a unit: " + to_text());
  LaurentPoly r(ring_);
  r.terms_.push_back({-terms_.front().mono, terms_.front().coeff.inverse()});
  return r;
}

LaurentPoly LaurentPoly::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  LaurentPoly result = from_int(ring_, 1);
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& b) {
  check_ring(b);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + b.terms_.size());
  auto i = terms_.begin();
  auto j = b.terms_.begin();
  while (i != terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != terms_.end() && i->mono < j->mono)) {
      merged.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->mono < i->mono) {
      merged.push_back(*j++);
    } else {
      NovikovScalar c = i->coeff + j->coeff;
      if (!c.is_zero()) merged.push_back({i->mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_ring(b);
  LaurentPoly r(a.ring_);
  if (a.is_zero() || b.is_zero()) return r;
  std::vector<LaurentPoly::Term> raw;
  raw.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) raw.push_back({x.mono + y.mono, x.coeff * y.coeff});
  }
  r.canonicalize(raw);
  return r;
}

LaurentPoly LaurentPoly::scaled(const NovikovScalar& c) const {
  return *this * constant(ring_, c);
}

LaurentPoly LaurentPoly::substitute(const Substitution& s) const {
  if (s.ring() != ring_) throw RingMismatch("substitution defined over a different ring");
  std::vector<Term> raw;
  raw.reserve(terms_.size());
  for (const auto& t : terms_) {
    ExponentVector mono;
    NovikovScalar coeff = t.coeff;
    for (int i = 0; i < ring_.n; ++i) {
      for (int family = 0; family < 2; ++family) {
        const int e = family == 0 ? t.mono.z(i) : t.mono.u(i);
        if (e == 0) continue;
        const auto& target = family == 0 ? s.z_target(i) : s.u_target(i);
        if (!target) {
          ExponentVector unit;
          family == 0 ? unit.set_z(i, e) : unit.set_u(i, e);
          mono = mono + unit;
          continue;
        }
        const Term& image = target->terms_.front();
        mono = mono + image.mono.scaled(e);
        coeff = coeff * image.coeff.pow(e);
      }
    }
    raw.push_back({mono, std::move(coeff)});
  }
  LaurentPoly r(ring_);
  r.canonicalize(raw);
  return r;
}

LaurentPoly LaurentPoly::z_to_u() const {
  std::vector<Term> raw;
  for (const auto& t : terms_) {
    ExponentVector e;
    for (int i = 0; i < ring_.n; ++i) {
      if (t.mono.u(i) != 0) throw DomainError("z_to_u expects a polynomial in z only");
      e.set_u(i, t.mono.z(i));
    }
    raw.push_back({e, t.coeff});
  }
  LaurentPoly r(ring_);
  r.canonicalize(raw);
  return r;
}

LaurentPoly LaurentPoly::u_to_z() const {
  std::vector<Term> raw;
  for (const auto& t : terms_) {
    ExponentVector e;
    for (int i = 0; i < ring_.n; ++i) e.set_z(i, t.mono.z(i) + t.mono.u(i));
    raw.push_back({e, t.coeff});
  }
  LaurentPoly r(ring_);
  r.canonicalize(raw);
  return r;
}

std::complex<double> LaurentPoly::eval(std::span<const std::complex<double>> z_point,
                                       std::span<const std::complex<double>> u_point, double t_value) const {
  const auto n = static_cast<std::size_t>(ring_.n);
  if (z_point.size() != n || u_point.size() != n) throw DomainError("evaluation point has wrong length");
  for (std::size_t i = 0; i < n; ++i) {
    if (z_point[i] == 0.0 || u_point[i] == 0.0) throw DomainError("evaluation point has a zero coordinate");
  }
  std::complex<double> sum(0.0, 0.0);
  for (const auto& t : terms_) {
    std::complex<double> v = t.coeff.specialize(t_value);
    for (std::size_t i = 0; i < n; ++i) {
      const int i_ = static_cast<int>(i);
      if (t.mono.z(i_) != 0) v *= ipow(z_point[i], t.mono.z(i_));
      if (t.mono.u(i_) != 0) v *= ipow(u_point[i], t.mono.u(i_));
    }
    sum += v;
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Text form

std::string LaurentPoly::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    for (const auto& st : t.coeff.terms()) {
      if (!first) os << " + ";
      first = false;
      os << st.coeff.to_string();
      if (st.exponent != 0) os << "*T^" << to_string(st.exponent);
      for (int i = 0; i < ring_.n; ++i) {
        if (t.mono.z(i) == 0) continue;
        os << "*z" << (i + 1);
        if (t.mono.z(i) != 1) os << '^' << t.mono.z(i);
      }
      for (int i = 0; i < ring_.n; ++i) {
        if (t.mono.u(i) == 0) continue;
        os << "*u" << (i + 1);
        if (t.mono.u(i) != 1) os << '^' << t.mono.u(i);
      }
    }
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, RingContext ring) : s_(text), ring_(ring) {}

  LaurentPoly parse() {
    LaurentPoly sum(ring_);
    skip();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      bool negate = false;
      if (!first) {
        if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
        negate = get() == '-';
        skip();
      }
      first = false;
      LaurentPoly t = term();
      sum += negate ? -t : t;
      skip();
    }
    return sum;
  }

 private:
  LaurentPoly term() {
    bool negate = false;
    while (peek() == '-' || peek() == '+') {
      if (get() == '-') negate = !negate;
      skip();
    }
    LaurentPoly t = factor();
    skip();
    while (peek() == '*') {
      get();
      skip();
      t = t * factor();
      skip();
    }
    return negate ? -t : t;
  }

  LaurentPoly factor() {
    const char c = peek();
    if (c == 'T') {
      get();
      Rational e(1);
      if (peek() == '^') {
        get();
        e = parse_rational(signed_number(true));
      }
      return LaurentPoly::constant(ring_, NovikovScalar::t_power(e, ring_.field));
    }
    if (c == 'z' || c == 'u') {
      get();
      const std::string digits = take_while([](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
      if (digits.empty()) fail("variable index missing");
      const long index = std::stol(digits);
      if (index < 1 || index > ring_.n) fail("variable index out of range: " + digits);
      long e = 1;
      if (peek() == '^') {
        get();
        const std::string num = signed_number(false);
        try {
          e = std::stol(num);
        } catch (const std::exception&) {
          fail("bad exponent: " + num);
        }
      }
      ExponentVector ev;
      if (c == 'z') {
        ev.set_z(static_cast<int>(index - 1), static_cast<int>(e));
      } else {
        ev.set_u(static_cast<int>(index - 1), static_cast<int>(e));
      }
      return LaurentPoly::monomial(ring_, NovikovScalar::from_int(1, ring_.field), ev);
    }
    if (c == '(') return complex_literal();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const Rational q = parse_rational(signed_number(true));
      return LaurentPoly::constant(ring_, NovikovScalar(field_value(q), Rational(0)));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  LaurentPoly complex_literal() {
    if (ring_.field != BaseField::complex) fail("complex literal in a non-complex ring");
    get();
    const std::string inner = take_while([](char ch) { return ch != ')'; });
    if (get() != ')') fail("unterminated complex literal");
    const auto comma = inner.find(',');
    if (comma == std::string::npos) fail("complex literal needs (re,im)");
    double re = 0, im = 0;
    try {
      re = std::stod(inner.substr(0, comma));
      im = std::stod(inner.substr(comma + 1));
    } catch (const std::exception&) {
      fail("bad complex literal (" + inner + ")");
    }
    return LaurentPoly::constant(ring_, NovikovScalar(FieldElement(std::complex<double>(re, im)), Rational(0)));
  }

  FieldElement field_value(const Rational& q) const {
    switch (ring_.field) {
      case BaseField::rational: return FieldElement(q);
      case BaseField::complex: return FieldElement(std::complex<double>(q.get_d(), 0.0));
      case BaseField::gf2:
        if (q.get_den() != 1) fail("non-integral coefficient in characteristic 2");
        return FieldElement(Gf2{mpz_odd_p(q.get_num().get_mpz_t()) != 0});
    }
    fail("unknown field");
  }

  // Optional sign followed by digits, optionally "/digits" when allowed.
  std::string signed_number(bool allow_fraction) {
    std::string out;
    if (peek() == '-' || peek() == '+') out += get();
    out += take_while([](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
    if (allow_fraction && peek() == '/') {
      out += get();
      out += take_while([](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
    }
    if (out.empty() || out == "-" || out == "+") fail("number expected");
    return out;
  }

  template <class Pred>
  std::string take_while(Pred pred) {
    std::string out;
    while (!at_end() && pred(s_[pos_])) out += s_[pos_++];
    return out;
  }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char get() { return at_end() ? '\0' : s_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("polynomial text, position " + std::to_string(pos_) + ": " + msg);
  }

  std::string_view s_;
  RingContext ring_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text, RingContext ring) {
  return PolyParser(text, ring).parse();
}

// ---------------------------------------------------------------------------

Substitution::Substitution(RingContext ring) : ring_(ring) {}

Substitution& Substitution::map_z(int i, const LaurentPoly& target) {
  if (i < 0 || i >= ring_.n) throw DomainError("variable index out of range");
  if (!target.is_unit()) throw DomainError("substitution target is not a unit monomial: " + target.to_text());
  if (target.ring() != ring_) throw RingMismatch("substitution target over a different ring");
  targets_[i] = target;
  return *this;
}

Substitution& Substitution::map_u(int i, const LaurentPoly& target) {
  if (i < 0 || i >= ring_.n) throw DomainError("variable index out of range");
  if (!target.is_unit()) throw DomainError("substitution target is not a unit monomial: " + target.to_text());
  if (target.ring() != ring_) throw RingMismatch("substitution target over a different ring");
  targets_[kMaxVariables + i] = target;
  return *this;
}

Substitution Substitution::inverse() const {
  // Variables are numbered z_1..z_n, u_1..u_n -> 0..2n-1. Column k of E holds
  // the exponent vector of the image of variable k; c_k its coefficient.
  const int n = ring_.n;
  const int dim = 2 * n;
  auto slot = [](int k, int n_) { return k < n_ ? k : kMaxVariables + (k - n_); };
  auto exponent_of = [&](const ExponentVector& e, int row) { return row < n ? e.z(row) : e.u(row - n); };

  std::vector<std::vector<Rational>> a(dim, std::vector<Rational>(2 * dim));
  std::vector<NovikovScalar> coeff(dim, NovikovScalar::from_int(1, ring_.field));
  for (int k = 0; k < dim; ++k) {
    const auto& target = targets_[slot(k, n)];
    if (target) {
      const auto& t = target->terms().front();
      for (int r = 0; r < dim; ++r) a[r][k] = exponent_of(t.mono, r);
      coeff[k] = t.coeff;
    } else {
      a[k][k] = 1;
    }
    a[k][dim + k] = 1;
  }
  for (int col = 0; col < dim; ++col) {
    int pivot = col;
    while (pivot < dim && a[pivot][col] == 0) ++pivot;
    if (pivot == dim) throw DomainError("substitution is not invertible (singular exponent matrix)");
    std::swap(a[pivot], a[col]);
    const Rational p = a[col][col];
    for (auto& x : a[col]) x /= p;
    for (int r = 0; r < dim; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (int c = 0; c < 2 * dim; ++c) a[r][c] -= f * a[col][c];
    }
  }
  Substitution inv(ring_);
  for (int k = 0; k < dim; ++k) {
    // psi(x_k) = d_k x^{F_k} with F = E^{-1}, d_k = prod_l c_l^{-F_lk}.
    ExponentVector e;
    NovikovScalar d = NovikovScalar::from_int(1, ring_.field);
    for (int l = 0; l < dim; ++l) {
      const Rational& f = a[l][dim + k];
      if (f.get_den() != 1) throw DomainError("substitution is not invertible over the integers");
      const long fl = f.get_num().get_si();
      if (fl == 0) continue;
      l < n ? e.set_z(l, static_cast<int>(fl)) : e.set_u(l - n, static_cast<int>(fl));
      d = d * coeff[l].pow(-fl);
    }
    LaurentPoly image = LaurentPoly::monomial(ring_, d, e);
    k < n ? inv.map_z(k, image) : inv.map_u(k - n, image);
  }
  return inv;
}

}  // namespace lgmf
