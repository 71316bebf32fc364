#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lgmf/laurent.hpp"

namespace lgmf {

// Subset of {1..n}; bit j-1 set <=> j in the subset.
using Mask = std::uint32_t;

int popcount(Mask m);
// "1" for the empty set, otherwise "e1", "e12", "e1_10_11" when n >= 10.
std::string subset_label(Mask m, int n);

// Element of the exterior algebra over the Laurent ring.
class ExtElement {
 public:
  explicit ExtElement(RingContext ring) : ring_(ring) {}
  static ExtElement basis(RingContext ring, Mask m, const LaurentPoly& coeff);
  static ExtElement basis(RingContext ring, Mask m);

  RingContext ring() const { return ring_; }
  const std::map<Mask, LaurentPoly>& components() const { return comps_; }
  LaurentPoly component(Mask m) const;
  bool is_zero() const { return comps_.empty(); }
  // Z/2 degree when all components share one; nullopt for zero or mixed.
  std::optional<int> parity() const;

  ExtElement& operator+=(const ExtElement& b);
  friend ExtElement operator+(ExtElement a, const ExtElement& b) { return a += b; }
  ExtElement operator-() const;
  friend ExtElement operator-(const ExtElement& a, const ExtElement& b) { return a + (-b); }
  ExtElement scaled(const LaurentPoly& c) const;
  friend ExtElement wedge(const ExtElement& a, const ExtElement& b);
  friend bool operator==(const ExtElement&, const ExtElement&) = default;

 private:
  void add_term(Mask m, const LaurentPoly& c);
  RingContext ring_;
  std::map<Mask, LaurentPoly> comps_;
};

// Sign of e_a ∧ e_b relative to e_{a|b}; 0 when a and b overlap.
int wedge_sign(Mask a, Mask b);

enum class Parity { even, odd };

// Endomorphism of a free Z/2-graded module with named generators. Entry
// (r, c) is the coefficient of generator r in the image of generator c.
class Endomorphism {
 public:
  Endomorphism(RingContext ring, std::vector<int> parities, std::vector<std::string> labels);

  // Zero map on the exterior algebra: 2^n generators indexed by mask.
  static Endomorphism exterior_zero(RingContext ring);
  static Endomorphism identity_like(const Endomorphism& shape);

  RingContext ring() const { return ring_; }
  int dim() const { return static_cast<int>(parities_.size()); }
  const std::vector<int>& parities() const { return parities_; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool is_exterior_basis() const;

  const LaurentPoly& at(int r, int c) const { return entries_[index(r, c)]; }
  void set(int r, int c, LaurentPoly p);
  void add_to(int r, int c, const LaurentPoly& p);

  // True when every nonzero entry connects generators of the given parity
  // difference (odd: opposite parities). The zero map has both.
  bool has_parity(Parity p) const;
  bool is_zero() const;

  Endomorphism operator-() const;
  Endomorphism& operator+=(const Endomorphism& b);
  friend Endomorphism operator+(Endomorphism a, const Endomorphism& b) { return a += b; }
  friend Endomorphism operator-(const Endomorphism& a, const Endomorphism& b) { return a + (-b); }
  friend Endomorphism operator*(const Endomorphism& a, const Endomorphism& b);  // a ∘ b
  Endomorphism scaled(const LaurentPoly& c) const;
  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;

  ExtElement apply(const ExtElement& x) const;
  Endomorphism substitute(const Substitution& s) const;
  // Generators listed in the given order (order[k] = old index of new k).
  Endomorphism permuted(std::span<const int> order) const;
  // Row-major numerical values.
  std::vector<std::complex<double>> eval(std::span<const std::complex<double>> z_point,
                                         std::span<const std::complex<double>> u_point, double t_value) const;

 private:
  std::size_t index(int r, int c) const;
  void check_shape(const Endomorphism& b) const;

  RingContext ring_;
  std::vector<int> parities_;
  std::vector<std::string> labels_;
  std::vector<LaurentPoly> entries_;
};

Endomorphism wedge_op(RingContext ring, int j);    // e_j ∧ (.), j in 1..n
Endomorphism contract_op(RingContext ring, int j);  // ι_j, j in 1..n
// sum_i x_i e_i∧ + sum_j w_j ι_j
Endomorphism wedge_contraction(RingContext ring, std::span<const LaurentPoly> x, std::span<const LaurentPoly> w);

struct MfCheck {
  bool ok = false;
  std::optional<LaurentPoly> lambda;
  std::string reason;
  // First offending entry of d^2 (row, col, value) on failure.
  std::optional<int> row, col;
  std::optional<LaurentPoly> entry;
};

// Computes d^2, requires a scalar matrix s·Id with potential - s free of z;
// lambda = potential - s. Throws DomainError if d is not odd.
MfCheck mf_verify(const Endomorphism& d, const LaurentPoly& potential);

struct MatrixFactorization {
  Endomorphism d;
  LaurentPoly potential;
  LaurentPoly lambda;

  // Runs mf_verify and throws VerificationError on failure, or when the
  // computed lambda differs from an expected one.
  static MatrixFactorization verified(Endomorphism d, LaurentPoly potential,
                                      const std::optional<LaurentPoly>& expected_lambda = std::nullopt);
};

// U d U^{-1} with U = diag(units). Units must be invertible.
Endomorphism conjugate_diagonal(const Endomorphism& d, std::span<const LaurentPoly> units);

std::string endo_to_json(const Endomorphism& d);
Endomorphism endo_from_json(std::string_view text);
std::string endo_pretty(const Endomorphism& d);

}  // namespace lgmf
