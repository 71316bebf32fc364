#include "lgmf/exterior.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "json.hpp"
#include "lgmf/errors.hpp"

namespace lgmf {

int popcount(Mask m) { return std::popcount(m); }

std::string subset_label(Mask m, int n) {
  if (m == 0) return "1";
  std::string s = "e";
  bool first = true;
  for (int j = 1; j <= n; ++j) {
    if (!(m & (Mask{1} << (j - 1)))) continue;
    if (n >= 10 && !first) s += '_';
    s += std::to_string(j);
    first = false;
  }
  return s;
}

int wedge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  // Each element of b passes over the elements of a that are larger.
  int swaps = 0;
  for (Mask rest = b; rest; rest &= rest - 1) {
    const Mask bit = rest & (~rest + 1);
    swaps += std::popcount(a & ~(bit | (bit - 1)));
  }
  return swaps % 2 ? -1 : 1;
}

// ---------------------------------------------------------------------------

ExtElement ExtElement::basis(RingContext ring, Mask m, const LaurentPoly& coeff) {
  ExtElement x(ring);
  x.add_term(m, coeff);
  return x;
}

ExtElement ExtElement::basis(RingContext ring, Mask m) { return basis(ring, m, LaurentPoly::from_int(ring, 1)); }

void ExtElement::add_term(Mask m, const LaurentPoly& c) {
  if (c.ring() != ring_) throw RingMismatch("exterior coefficient over a different ring");
  if (m >> ring_.n) throw DomainError("subset mask exceeds n");
  auto it = comps_.find(m);
  if (it == comps_.end()) {
    if (!c.is_zero()) comps_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) comps_.erase(it);
}

LaurentPoly ExtElement::component(Mask m) const {
  auto it = comps_.find(m);
  return it == comps_.end() ? LaurentPoly(ring_) : it->second;
}

std::optional<int> ExtElement::parity() const {
  std::optional<int> p;
  for (const auto& [m, c] : comps_) {
    const int q = popcount(m) % 2;
    if (p && *p != q) return std::nullopt;
    p = q;
  }
  return p;
}

ExtElement& ExtElement::operator+=(const ExtElement& b) {
  if (b.ring_ != ring_) throw RingMismatch("exterior elements over different rings");
  for (const auto& [m, c] : b.comps_) add_term(m, c);
  return *this;
}

ExtElement ExtElement::operator-() const {
  ExtElement r = *this;
  for (auto& [m, c] : r.comps_) c = -c;
  return r;
}

ExtElement ExtElement::scaled(const LaurentPoly& c) const {
  ExtElement r(ring_);
  for (const auto& [m, x] : comps_) r.add_term(m, x * c);
  return r;
}

ExtElement wedge(const ExtElement& a, const ExtElement& b) {
  if (a.ring_ != b.ring_) throw RingMismatch("exterior elements over different rings");
  ExtElement r(a.ring_);
  for (const auto& [ma, ca] : a.comps_) {
    for (const auto& [mb, cb] : b.comps_) {
      const int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      const LaurentPoly p = ca * cb;
      r.add_term(ma | mb, s > 0 ? p : -p);
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

Endomorphism::Endomorphism(RingContext ring, std::vector<int> parities, std::vector<std::string> labels)
    : ring_(ring), parities_(std::move(parities)), labels_(std::move(labels)) {
  if (labels_.size() != parities_.size()) throw DomainError("one label per generator required");
  entries_.assign(parities_.size() * parities_.size(), LaurentPoly(ring_));
}

Endomorphism Endomorphism::exterior_zero(RingContext ring) {
  const Mask dim = Mask{1} << ring.n;
  std::vector<int> par;
  std::vector<std::string> labels;
  for (Mask m = 0; m < dim; ++m) {
    par.push_back(popcount(m) % 2);
    labels.push_back(subset_label(m, ring.n));
  }
  return Endomorphism(ring, std::move(par), std::move(labels));
}

Endomorphism Endomorphism::identity_like(const Endomorphism& shape) {
  Endomorphism e(shape.ring_, shape.parities_, shape.labels_);
  for (int i = 0; i < e.dim(); ++i) e.set(i, i, LaurentPoly::from_int(e.ring_, 1));
  return e;
}

bool Endomorphism::is_exterior_basis() const {
  if (parities_.size() != (std::size_t{1} << ring_.n)) return false;
  for (std::size_t m = 0; m < parities_.size(); ++m) {
    if (labels_[m] != subset_label(static_cast<Mask>(m), ring_.n)) return false;
  }
  return true;
}

std::size_t Endomorphism::index(int r, int c) const {
  if (r < 0 || c < 0 || r >= dim() || c >= dim()) throw DomainError("matrix index out of range");
  return static_cast<std::size_t>(r) * parities_.size() + static_cast<std::size_t>(c);
}

void Endomorphism::set(int r, int c, LaurentPoly p) {
  if (p.ring() != ring_) throw RingMismatch("matrix entry over a different ring");
  entries_[index(r, c)] = std::move(p);
}

void Endomorphism::add_to(int r, int c, const LaurentPoly& p) { entries_[index(r, c)] += p; }

bool Endomorphism::has_parity(Parity p) const {
  const int want = p == Parity::odd ? 1 : 0;
  for (int r = 0; r < dim(); ++r) {
    for (int c = 0; c < dim(); ++c) {
      if (!at(r, c).is_zero() && ((parities_[r] + parities_[c]) % 2) != want) return false;
    }
  }
  return true;
}

bool Endomorphism::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const LaurentPoly& p) { return p.is_zero(); });
}

void Endomorphism::check_shape(const Endomorphism& b) const {
  if (ring_ != b.ring_) throw RingMismatch("endomorphisms over different rings");
  if (parities_ != b.parities_) throw DomainError("endomorphisms of different graded modules");
}

Endomorphism Endomorphism::operator-() const {
  Endomorphism r = *this;
  for (auto& p : r.entries_) p = -p;
  return r;
}

Endomorphism& Endomorphism::operator+=(const Endomorphism& b) {
  check_shape(b);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += b.entries_[i];
  return *this;
}

Endomorphism operator*(const Endomorphism& a, const Endomorphism& b) {
  a.check_shape(b);
  Endomorphism r(a.ring_, a.parities_, a.labels_);
  const int n = a.dim();
  for (int k = 0; k < n; ++k) {
    for (int c = 0; c < n; ++c) {
      const LaurentPoly& y = b.at(k, c);
      if (y.is_zero()) continue;
      for (int row = 0; row < n; ++row) {
        const LaurentPoly& x = a.at(row, k);
        if (!x.is_zero()) r.entries_[r.index(row, c)] += x * y;
      }
    }
  }
  return r;
}

Endomorphism Endomorphism::scaled(const LaurentPoly& c) const {
  Endomorphism r = *this;
  for (auto& p : r.entries_) {
    if (!p.is_zero()) p = p * c;
  }
  return r;
}

ExtElement Endomorphism::apply(const ExtElement& x) const {
  if (!is_exterior_basis()) throw DomainError("apply needs an exterior-algebra basis");
  if (x.ring() != ring_) throw RingMismatch("element over a different ring");
  ExtElement out(ring_);
  for (const auto& [m, coeff] : x.components()) {
    for (int r = 0; r < dim(); ++r) {
      const LaurentPoly& e = at(r, static_cast<int>(m));
      if (!e.is_zero()) out += ExtElement::basis(ring_, static_cast<Mask>(r), e * coeff);
    }
  }
  return out;
}

Endomorphism Endomorphism::substitute(const Substitution& s) const {
  Endomorphism r = *this;
  for (auto& p : r.entries_) p = p.substitute(s);
  return r;
}

Endomorphism Endomorphism::permuted(std::span<const int> order) const {
  if (static_cast<int>(order.size()) != dim()) throw DomainError("permutation has the wrong length");
  std::vector<int> check(order.begin(), order.end());
  std::sort(check.begin(), check.end());
  for (int i = 0; i < dim(); ++i) {
    if (check[i] != i) throw DomainError("not a permutation");
  }
  std::vector<int> par;
  std::vector<std::string> labels;
  for (int k : order) {
    par.push_back(parities_[k]);
    labels.push_back(labels_[k]);
  }
  Endomorphism r(ring_, std::move(par), std::move(labels));
  for (int i = 0; i < dim(); ++i) {
    for (int j = 0; j < dim(); ++j) r.set(i, j, at(order[i], order[j]));
  }
  return r;
}

std::vector<std::complex<double>> Endomorphism::eval(std::span<const std::complex<double>> z_point,
                                                     std::span<const std::complex<double>> u_point,
                                                     double t_value) const {
  std::vector<std::complex<double>> out;
  out.reserve(entries_.size());
  for (const auto& p : entries_) out.push_back(p.is_zero() ? 0.0 : p.eval(z_point, u_point, t_value));
  return out;
}

// ---------------------------------------------------------------------------

Endomorphism wedge_op(RingContext ring, int j) {
  if (j < 1 || j > ring.n) throw DomainError("wedge index out of range");
  Endomorphism e = Endomorphism::exterior_zero(ring);
  const Mask bit = Mask{1} << (j - 1);
  for (int c = 0; c < e.dim(); ++c) {
    const Mask m = static_cast<Mask>(c);
    const int s = wedge_sign(bit, m);
    if (s != 0) e.set(static_cast<int>(m | bit), c, LaurentPoly::from_int(ring, s));
  }
  return e;
}

Endomorphism contract_op(RingContext ring, int j) {
  if (j < 1 || j > ring.n) throw DomainError("contraction index out of range");
  Endomorphism e = Endomorphism::exterior_zero(ring);
  const Mask bit = Mask{1} << (j - 1);
  for (int c = 0; c < e.dim(); ++c) {
    const Mask m = static_cast<Mask>(c);
    if (!(m & bit)) continue;
    // j is the l-th element of I, sign (-1)^{l-1}.
    const int before = popcount(m & (bit - 1));
    e.set(static_cast<int>(m & ~bit), c, LaurentPoly::from_int(ring, before % 2 ? -1 : 1));
  }
  return e;
}

Endomorphism wedge_contraction(RingContext ring, std::span<const LaurentPoly> x, std::span<const LaurentPoly> w) {
  if (static_cast<int>(x.size()) != ring.n || static_cast<int>(w.size()) != ring.n) {
    throw DomainError("need n wedge and n contraction coefficients");
  }
  Endomorphism d = Endomorphism::exterior_zero(ring);
  for (int j = 1; j <= ring.n; ++j) {
    d += wedge_op(ring, j).scaled(x[j - 1]);
    d += contract_op(ring, j).scaled(w[j - 1]);
  }
  return d;
}

MfCheck mf_verify(const Endomorphism& d, const LaurentPoly& potential) {
  if (!d.has_parity(Parity::odd)) throw DomainError("mf_verify needs an odd endomorphism");
  const Endomorphism sq = d * d;
  MfCheck out;
  const LaurentPoly s = sq.dim() > 0 ? sq.at(0, 0) : LaurentPoly(d.ring());
  for (int r = 0; r < sq.dim(); ++r) {
    for (int c = 0; c < sq.dim(); ++c) {
      const LaurentPoly& e = sq.at(r, c);
      const bool bad = r == c ? e != s : !e.is_zero();
      if (bad) {
        out.reason = r == c ? "d^2 is not a scalar matrix (diagonal entries differ)" : "d^2 has an off-diagonal entry";
        out.row = r;
        out.col = c;
        out.entry = e;
        return out;
      }
    }
  }
  LaurentPoly lambda = potential - s;
  if (!lambda.z_free()) {
    out.reason = "potential - d^2 depends on z";
    out.row = 0;
    out.col = 0;
    out.entry = s;
    out.lambda = lambda;
    return out;
  }
  out.ok = true;
  out.lambda = std::move(lambda);
  return out;
}

MatrixFactorization MatrixFactorization::verified(Endomorphism d, LaurentPoly potential,
                                                  const std::optional<LaurentPoly>& expected_lambda) {
  MfCheck check = mf_verify(d, potential);
  if (!check.ok) {
    std::string msg = "matrix factorization check failed: " + check.reason;
    if (check.row) {
      msg += " at (" + d.labels()[*check.row] + ", " + d.labels()[*check.col] + "): " + check.entry->to_text();
    }
    throw VerificationError(msg);
  }
  if (expected_lambda && *expected_lambda != *check.lambda) {
    throw VerificationError("unexpected potential value " + check.lambda->to_text() + ", expected " +
                            expected_lambda->to_text());
  }
  return MatrixFactorization{std::move(d), std::move(potential), std::move(*check.lambda)};
}

Endomorphism conjugate_diagonal(const Endomorphism& d, std::span<const LaurentPoly> units) {
  if (static_cast<int>(units.size()) != d.dim()) throw DomainError("one unit per generator required");
  std::vector<LaurentPoly> inv;
  for (const auto& u : units) inv.push_back(u.inverse());
  Endomorphism r = d;
  for (int i = 0; i < d.dim(); ++i) {
    for (int j = 0; j < d.dim(); ++j) {
      if (!d.at(i, j).is_zero()) r.set(i, j, units[i] * d.at(i, j) * inv[j]);
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

std::string endo_to_json(const Endomorphism& d) {
  nlohmann::json doc;
  doc["n"] = d.ring().n;
  doc["field"] = to_string(d.ring().field);
  doc["parities"] = d.parities();
  doc["labels"] = d.labels();
  doc["entries"] = nlohmann::json::array();
  for (int r = 0; r < d.dim(); ++r) {
    for (int c = 0; c < d.dim(); ++c) {
      if (!d.at(r, c).is_zero()) doc["entries"].push_back({{"row", r}, {"col", c}, {"poly", d.at(r, c).to_text()}});
    }
  }
  return doc.dump();
}

Endomorphism endo_from_json(std::string_view text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    const int n = doc.at("n").get<int>();
    const std::string field = doc.value("field", std::string("rational"));
    BaseField f = BaseField::rational;
    if (field == "gf2") {
      f = BaseField::gf2;
    } else if (field == "complex") {
      f = BaseField::complex;
    } else if (field != "rational") {
      throw ParseError("unknown field: " + field);
    }
    const RingContext ring = make_ring(n, f);
    Endomorphism d = doc.contains("parities")
                         ? Endomorphism(ring, doc.at("parities").get<std::vector<int>>(),
                                        doc.at("labels").get<std::vector<std::string>>())
                         : Endomorphism::exterior_zero(ring);
    for (const auto& e : doc.at("entries")) {
      d.set(e.at("row").get<int>(), e.at("col").get<int>(), LaurentPoly::parse(e.at("poly").get<std::string>(), ring));
    }
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("matrix JSON: ") + e.what());
  }
}

std::string endo_pretty(const Endomorphism& d) {
  const int n = d.dim();
  std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(n + 1),
                                              std::vector<std::string>(static_cast<std::size_t>(n + 1)));
  for (int i = 0; i < n; ++i) {
    cells[0][i + 1] = d.labels()[i];
    cells[i + 1][0] = d.labels()[i];
    for (int j = 0; j < n; ++j) cells[i + 1][j + 1] = d.at(i, j).to_text();
  }
  std::vector<std::size_t> width(static_cast<std::size_t>(n + 1), 0);
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
  }
  std::ostringstream os;
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      os << row[j] << std::string(width[j] - row[j].size(), ' ');
      os << (j + 1 < row.size() ? " | " : "\n");
    }
  }
  return os.str();
}

}  // namespace lgmf
