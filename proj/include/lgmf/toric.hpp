#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lgmf/laurent.hpp"
#include "lgmf/rational.hpp"

namespace lgmf {

struct Ray {
  std::vector<int> v;
  Rational lambda;
  friend bool operator==(const Ray&, const Ray&) = default;
};

// Validated fan data in normalized lattice coordinates: the first n rays are
// the standard basis vectors and the basepoint is interior.
class ToricFanoData {
 public:
  // Validates, reorders rays so that an integral basis comes first (if the
  // given first n rays are not one) and changes lattice coordinates so that
  // they become e_1..e_n. Throws FanError.
  ToricFanoData(int n, std::vector<Ray> rays, std::vector<Rational> basepoint);

  int n() const { return n_; }
  int m() const { return static_cast<int>(rays_.size()); }
  const std::vector<Ray>& rays() const { return rays_; }
  const Ray& ray(int i) const { return rays_.at(static_cast<std::size_t>(i)); }
  const std::vector<Rational>& basepoint() const { return basepoint_; }

  // <u, v_i> - lambda_i, the T-exponent of c_i.
  Rational area(int i) const;

  friend bool operator==(const ToricFanoData&, const ToricFanoData&) = default;

 private:
  int n_;
  std::vector<Ray> rays_;
  std::vector<Rational> basepoint_;
};

// Fan file: {"n": 2, "rays": [{"v": [1,0], "lambda": "0"}, ...],
//            "basepoint": ["1/3", "1/3"]}
ToricFanoData parse_fan(std::string_view json_text);
ToricFanoData load_fan_file(const std::string& path);
std::string fan_to_json(const ToricFanoData& fan);

struct PotentialW {
  RingContext ring;
  LaurentPoly w;
  std::vector<NovikovScalar> c;
  std::vector<std::vector<int>> signs;  // signs[i][j] = sign(v_{i,j})
};

PotentialW build_potential(const ToricFanoData& fan, BaseField field = BaseField::rational);

// z_i -> T^{-u_i} t_i, with t_i stored in the z slots: the result is
// sum_i T^{-lambda_i} t^{v_i}.
LaurentPoly hori_vafa_substitute(const PotentialW& pot, const ToricFanoData& fan);
// t_i -> T^{u_i} z_i.
LaurentPoly hori_vafa_inverse(const LaurentPoly& w_t, const ToricFanoData& fan);

struct OffsetReport {
  bool ok = true;
  // 0-based (i, j, k) of the first violated inequality, when ordering fails.
  std::optional<std::array<int, 3>> violation;
  std::string message;
};

// Checks |v_ik| a_j - |v_ij| a_k > 0 for all rays i and j < k with equal
// nonzero signs, and that no a_j/a_k equals a ratio |v_ik|/|v_ij| from the
// fan. Throws DomainError unless every a_j lies in (0, 1).
OffsetReport validate_offsets(const ToricFanoData& fan, std::span<const Rational> a);

// Presets: p1, p2, p3, p4, p1p1, p1_x4, hirzebruch_f1. Basepoint 0 and
// lambda_i = -k, so every c_i = T^k. Throws DomainError for unknown names.
ToricFanoData preset_fan(std::string_view name, const Rational& k = Rational(1));
std::vector<std::string> preset_fan_names();

}  // namespace lgmf
