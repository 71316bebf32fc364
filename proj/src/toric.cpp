#include "lgmf/toric.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "lgmf/errors.hpp"

namespace lgmf {

namespace {

using RMatrix = std::vector<std::vector<Rational>>;

// Inverse of a square rational matrix; nullopt when singular.
std::optional<RMatrix> invert(RMatrix a) {
  const std::size_t n = a.size();
  RMatrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational p = a[col][col];
    for (std::size_t c = 0; c < n; ++c) {
      a[col][c] /= p;
      inv[col][c] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        a[r][c] -= f * a[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

Rational determinant(RMatrix a) {
  const std::size_t n = a.size();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

// Columns are the chosen rays.
RMatrix basis_matrix(const std::vector<Ray>& rays, std::span<const int> idx, int n) {
  RMatrix b(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < n; ++r) b[r][c] = rays[idx[c]].v[r];
  }
  return b;
}

bool unimodular(const RMatrix& b) {
  const Rational d = determinant(b);
  return d == 1 || d == -1;
}

// First n-subset (lexicographic) of ray indices forming an integral basis.
std::optional<std::vector<int>> find_basis(const std::vector<Ray>& rays, int n) {
  const int m = static_cast<int>(rays.size());
  std::vector<int> idx(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) idx[i] = i;
  while (true) {
    if (unimodular(basis_matrix(rays, idx, n))) return idx;
    int pos = n - 1;
    while (pos >= 0 && idx[pos] == m - n + pos) --pos;
    if (pos < 0) return std::nullopt;
    ++idx[pos];
    for (int q = pos + 1; q < n; ++q) idx[q] = idx[q - 1] + 1;
  }
}

Rational rational_from_json(const nlohmann::json& j, const std::string& what) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError(what + ": expected a rational string \"p/q\" or an integer");
}

int sign_of(int x) { return (x > 0) - (x < 0); }

}  // namespace

ToricFanoData::ToricFanoData(int n, std::vector<Ray> rays, std::vector<Rational> basepoint) : n_(n) {
  if (n < 1 || n > kMaxVariables) throw FanError("dimension n must lie in [1, " + std::to_string(kMaxVariables) + "]");
  if (static_cast<int>(rays.size()) < n) throw FanError("need at least n rays");
  if (static_cast<int>(basepoint.size()) != n) throw FanError("basepoint must have n coordinates");
  std::set<std::vector<int>> seen;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const auto& v = rays[i].v;
    if (static_cast<int>(v.size()) != n) throw FanError("ray " + std::to_string(i + 1) + " must have n entries");
    if (std::all_of(v.begin(), v.end(), [](int x) { return x == 0; })) {
      throw FanError("ray " + std::to_string(i + 1) + " is zero");
    }
    if (!seen.insert(v).second) throw FanError("duplicate ray " + std::to_string(i + 1));
  }

  std::vector<int> first(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) first[i] = i;
  std::vector<int> basis = first;
  if (!unimodular(basis_matrix(rays, first, n))) {
    auto found = find_basis(rays, n);
    if (!found) throw FanError("no n rays form an integral basis (|det| != 1)");
    basis = *found;
    std::vector<Ray> reordered;
    for (int i : basis) reordered.push_back(rays[i]);
    for (int i = 0; i < static_cast<int>(rays.size()); ++i) {
      if (std::find(basis.begin(), basis.end(), i) == basis.end()) reordered.push_back(rays[i]);
    }
    rays = std::move(reordered);
    basis = first;
  }

  // v' = B^{-1} v and u' = B^T u keep <u, v> unchanged.
  const RMatrix b = basis_matrix(rays, basis, n);
  const RMatrix b_inv = *invert(b);
  for (auto& ray : rays) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
      Rational s(0);
      for (int c = 0; c < n; ++c) s += b_inv[r][c] * ray.v[c];
      w[r] = static_cast<int>(s.get_num().get_si());
    }
    ray.v = std::move(w);
  }
  std::vector<Rational> u(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) u[r] += b[c][r] * basepoint[c];
  }
  rays_ = std::move(rays);
  basepoint_ = std::move(u);

  for (int i = 0; i < m(); ++i) {
    if (area(i) <= 0) {
      throw FanError("basepoint is not interior: <u, v_" + std::to_string(i + 1) + "> - lambda_" +
                     std::to_string(i + 1) + " = " + to_string(area(i)) + " <= 0");
    }
  }
}

Rational ToricFanoData::area(int i) const {
  const Ray& r = ray(i);
  Rational s = -r.lambda;
  for (int j = 0; j < n_; ++j) s += basepoint_[j] * r.v[j];
  return s;
}

ToricFanoData parse_fan(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("fan file is not valid JSON: ") + e.what());
  }
  try {
    const int n = doc.at("n").get<int>();
    std::vector<Ray> rays;
    for (const auto& r : doc.at("rays")) {
      Ray ray;
      ray.v = r.at("v").get<std::vector<int>>();
      ray.lambda = r.contains("lambda") ? rational_from_json(r.at("lambda"), "lambda") : Rational(0);
      rays.push_back(std::move(ray));
    }
    std::vector<Rational> u;
    for (const auto& x : doc.at("basepoint")) u.push_back(rational_from_json(x, "basepoint"));
    return ToricFanoData(n, std::move(rays), std::move(u));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("fan file: ") + e.what());
  }
}

ToricFanoData load_fan_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open fan file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_fan(ss.str());
}

std::string fan_to_json(const ToricFanoData& fan) {
  nlohmann::json doc;
  doc["n"] = fan.n();
  doc["rays"] = nlohmann::json::array();
  for (const auto& r : fan.rays()) doc["rays"].push_back({{"v", r.v}, {"lambda", to_string(r.lambda)}});
  doc["basepoint"] = nlohmann::json::array();
  for (const auto& x : fan.basepoint()) doc["basepoint"].push_back(to_string(x));
  return doc.dump();
}

PotentialW build_potential(const ToricFanoData& fan, BaseField field) {
  PotentialW pot{make_ring(fan.n(), field), LaurentPoly(make_ring(fan.n(), field)), {}, {}};
  const std::vector<int> zero(static_cast<std::size_t>(fan.n()), 0);
  for (int i = 0; i < fan.m(); ++i) {
    NovikovScalar c = NovikovScalar::t_power(fan.area(i), field);
    pot.w += LaurentPoly::monomial(pot.ring, c, fan.ray(i).v, zero);
    pot.c.push_back(std::move(c));
    std::vector<int> s;
    for (int x : fan.ray(i).v) s.push_back(sign_of(x));
    pot.signs.push_back(std::move(s));
  }
  return pot;
}

namespace {

Substitution scale_by_basepoint(RingContext ring, const ToricFanoData& fan, int direction) {
  Substitution s(ring);
  for (int i = 0; i < fan.n(); ++i) {
    s.map_z(i, LaurentPoly::z(ring, i).scaled(NovikovScalar::t_power(fan.basepoint()[i] * direction, ring.field)));
  }
  return s;
}

}  // namespace

LaurentPoly hori_vafa_substitute(const PotentialW& pot, const ToricFanoData& fan) {
  return pot.w.substitute(scale_by_basepoint(pot.ring, fan, -1));
}

LaurentPoly hori_vafa_inverse(const LaurentPoly& w_t, const ToricFanoData& fan) {
  return w_t.substitute(scale_by_basepoint(w_t.ring(), fan, 1));
}

OffsetReport validate_offsets(const ToricFanoData& fan, std::span<const Rational> a) {
  if (static_cast<int>(a.size()) != fan.n()) throw DomainError("offset vector must have n entries");
  for (const auto& x : a) {
    if (x <= 0 || x >= 1) throw DomainError("offsets must lie strictly between 0 and 1, got " + to_string(x));
  }
  OffsetReport report;
  for (int i = 0; i < fan.m(); ++i) {
    const auto& v = fan.ray(i).v;
    for (int j = 0; j < fan.n(); ++j) {
      for (int k = j + 1; k < fan.n(); ++k) {
        if (v[j] == 0 || sign_of(v[j]) != sign_of(v[k])) continue;
        const Rational lhs = Rational(std::abs(v[k])) * a[j] - Rational(std::abs(v[j])) * a[k];
        if (lhs <= 0) {
          report.ok = false;
          report.violation = std::array<int, 3>{i, j, k};
          report.message = "ordering violated at ray " + std::to_string(i + 1) + ", j=" + std::to_string(j + 1) +
                           ", k=" + std::to_string(k + 1);
          return report;
        }
      }
    }
  }
  std::set<Rational> ratios;
  for (const auto& r : fan.rays()) {
    for (int j = 0; j < fan.n(); ++j) {
      for (int k = 0; k < fan.n(); ++k) {
        if (j != k && r.v[j] != 0 && r.v[k] != 0) ratios.insert(make_rational(std::abs(r.v[k]), std::abs(r.v[j])));
      }
    }
  }
  for (int j = 0; j < fan.n(); ++j) {
    for (int k = 0; k < fan.n(); ++k) {
      if (j == k) continue;
      Rational q = a[j] / a[k];
      q.canonicalize();
      if (ratios.contains(q)) {
        report.ok = false;
        report.message = "offsets not generic: a_" + std::to_string(j + 1) + "/a_" + std::to_string(k + 1) + " = " +
                         to_string(q) + " is a ratio of ray entries";
        return report;
      }
    }
  }
  return report;
}

namespace {

std::vector<std::vector<int>> preset_rays(std::string_view name) {
  auto cpn = [](int n) {
    std::vector<std::vector<int>> r;
    for (int i = 0; i < n; ++i) {
      std::vector<int> e(static_cast<std::size_t>(n), 0);
      e[i] = 1;
      r.push_back(e);
    }
    r.emplace_back(static_cast<std::size_t>(n), -1);
    return r;
  };
  if (name == "p1") return cpn(1);
  if (name == "p2") return cpn(2);
  if (name == "p3") return cpn(3);
  if (name == "p4") return cpn(4);
  if (name == "p1p1") return {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  if (name == "hirzebruch_f1") return {{1, 0}, {0, 1}, {-1, 1}, {0, -1}};
  if (name == "p1_x4") {
    std::vector<std::vector<int>> r;
    for (int sign : {1, -1}) {
      for (int i = 0; i < 4; ++i) {
        std::vector<int> e(4, 0);
        e[i] = sign;
        r.push_back(e);
      }
    }
    return r;
  }
  throw DomainError("unknown preset fan: " + std::string(name));
}

}  // namespace

ToricFanoData preset_fan(std::string_view name, const Rational& k) {
  auto vs = preset_rays(name);
  const int n = static_cast<int>(vs.front().size());
  std::vector<Ray> rays;
  for (auto& v : vs) rays.push_back(Ray{std::move(v), -k});
  return ToricFanoData(n, std::move(rays), std::vector<Rational>(static_cast<std::size_t>(n)));
}

std::vector<std::string> preset_fan_names() {
  return {"hirzebruch_f1", "p1", "p1_x4", "p1p1", "p2", "p3", "p4"};
}

}  // namespace lgmf
