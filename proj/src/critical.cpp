#include "lgmf/critical.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>
#include <thread>

#include "lgmf/closed_form.hpp"
#include "lgmf/errors.hpp"

namespace lgmf {

unsigned worker_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("LGMF_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<LaurentPoly> jacobian_system(const PotentialW& pot) {
  std::vector<LaurentPoly> out;
  for (int i = 0; i < pot.ring.n; ++i) {
    LaurentPoly f(pot.ring);
    for (const auto& t : pot.w.terms()) {
      if (t.mono.z(i) != 0) {
        f += LaurentPoly::monomial(pot.ring, t.coeff.scaled(FieldElement::from_int(t.mono.z(i), pot.ring.field)),
                                   t.mono);
      }
    }
    out.push_back(std::move(f));
  }
  return out;
}

namespace {

using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

// W specialized at T = t: sum_r C_r exp(<v_r, y>) with y = log z.
struct NumericPotential {
  int n = 0;
  std::vector<std::vector<int>> v;
  std::vector<std::complex<double>> c;

  std::complex<double> value(const Vec& y) const {
    std::complex<double> s = 0;
    for (std::size_t r = 0; r < v.size(); ++r) s += c[r] * std::exp(dot(r, y));
    return s;
  }
  // Largest single term; a true critical point has residual far below it.
  double term_scale(const Vec& y) const {
    double s = 0;
    for (std::size_t r = 0; r < v.size(); ++r) s = std::max(s, std::abs(c[r] * std::exp(dot(r, y))));
    return s;
  }
  std::complex<double> dot(std::size_t r, const Vec& y) const {
    std::complex<double> s = 0;
    for (int i = 0; i < n; ++i) s += static_cast<double>(v[r][i]) * y[i];
    return s;
  }
  void system(const Vec& y, Vec& f, Mat& jac) const {
    f = Vec::Zero(n);
    jac = Mat::Zero(n, n);
    for (std::size_t r = 0; r < v.size(); ++r) {
      const std::complex<double> e = c[r] * std::exp(dot(r, y));
      for (int i = 0; i < n; ++i) {
        if (v[r][i] == 0) continue;
        f[i] += static_cast<double>(v[r][i]) * e;
        for (int k = 0; k < n; ++k) jac(i, k) += static_cast<double>(v[r][i] * v[r][k]) * e;
      }
    }
  }
};

struct NewtonOutcome {
  bool converged = false;
  Vec y;
  double residual = 0;
  bool degenerate = false;
};

NewtonOutcome newton(const NumericPotential& w, Vec y, double tol, int max_iter) {
  Vec f;
  Mat jac;
  w.system(y, f, jac);
  double res = f.cwiseAbs().maxCoeff();
  for (int it = 0; it < max_iter && res >= tol; ++it) {
    const Vec step = jac.fullPivLu().solve(-f);
    if (!step.allFinite()) break;
    // Damped step: halve until the residual decreases.
    double scale = 1.0;
    Vec candidate;
    double cand_res = res;
    for (int k = 0; k < 30; ++k) {
      candidate = y + scale * step;
      Vec f2;
      Mat j2;
      w.system(candidate, f2, j2);
      cand_res = f2.cwiseAbs().maxCoeff();
      if (std::isfinite(cand_res) && cand_res < res) {
        f = f2;
        jac = j2;
        break;
      }
      scale *= 0.5;
    }
    if (!(cand_res < res)) break;
    y = candidate;
    res = cand_res;
  }
  NewtonOutcome out;
  out.y = y;
  out.residual = res;
  // Residual shrinking only because every term does (a run off to zero or
  // infinity) is not convergence.
  out.converged = res < tol && res <= 1e-6 * w.term_scale(y);
  if (out.converged) {
    const Eigen::JacobiSVD<Mat> svd(jac);
    const auto& s = svd.singularValues();
    out.degenerate = s.size() > 0 && s(s.size() - 1) < 1e-8 * std::max(1.0, s(0));
  }
  return out;
}

// Log-radii making all terms of W comparable in size: least squares for
// log|C_r| + <v_r, rho> = mu.
Eigen::VectorXd balanced_log_radius(const NumericPotential& w) {
  const int m = static_cast<int>(w.v.size());
  Eigen::MatrixXd a(m, w.n + 1);
  Eigen::VectorXd b(m);
  for (int r = 0; r < m; ++r) {
    for (int i = 0; i < w.n; ++i) a(r, i) = w.v[r][i];
    a(r, w.n) = -1.0;
    b(r) = -std::log(std::abs(w.c[r]));
  }
  const Eigen::VectorXd sol = a.completeOrthogonalDecomposition().solve(b);
  return sol.head(w.n);
}

}  // namespace

CriticalSolution solve_critical_points(const PotentialW& pot, double t_value, const SolverConfig& config) {
  if (!(t_value > 0)) throw DomainError("t must be positive");
  const int n = pot.ring.n;
  NumericPotential w;
  w.n = n;
  int big = 0;
  for (const auto& t : pot.w.terms()) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      v[i] = t.mono.z(i);
      big = std::max(big, std::abs(v[i]));
    }
    w.v.push_back(std::move(v));
    w.c.push_back(t.coeff.specialize(t_value));
  }
  CriticalSolution sol;
  if (w.v.empty() || n == 0) {
    sol.diagnostic = "potential has no z-dependence";
    return sol;
  }

  const int per_axis = config.phases_per_axis > 0 ? config.phases_per_axis : 2 * big + 1;
  const Eigen::VectorXd rho = balanced_log_radius(w);
  const std::array<double, 2> radius_shift{0.0, 0.35};
  // Slight irrational phase offset keeps starts off symmetry loci.
  const double phase_offset = 0.1234;
  std::size_t per_radius = 1;
  for (int i = 0; i < n; ++i) per_radius *= static_cast<std::size_t>(per_axis);
  const std::size_t total = per_radius * radius_shift.size();

  std::vector<NewtonOutcome> outcomes(total);
  auto run = [&](std::size_t begin, std::size_t end) {
    for (std::size_t s = begin; s < end; ++s) {
      const double shift = radius_shift[s / per_radius];
      std::size_t idx = s % per_radius;
      Vec y(n);
      for (int i = 0; i < n; ++i) {
        const auto k = static_cast<double>(idx % static_cast<std::size_t>(per_axis));
        idx /= static_cast<std::size_t>(per_axis);
        const double phase = 2 * std::numbers::pi * k / per_axis + phase_offset * (i + 1);
        y[i] = std::complex<double>(rho[i] + shift, phase);
      }
      outcomes[s] = newton(w, y, config.tol, config.max_iter);
    }
  };
  const unsigned workers = std::min<std::size_t>(worker_count(config.threads), total);
  if (workers <= 1) {
    run(0, total);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (total + workers - 1) / workers;
    for (unsigned k = 0; k < workers; ++k) {
      const std::size_t b = k * chunk;
      const std::size_t e = std::min(total, b + chunk);
      if (b < e) pool.emplace_back(run, b, e);
    }
  }

  // Sequential de-duplication in start order.
  const double merge = std::max(10 * config.tol, 1e-9);
  for (const auto& o : outcomes) {
    if (!o.converged) continue;
    CriticalPoint cp;
    for (int i = 0; i < n; ++i) cp.point.push_back(std::exp(o.y[i]));
    bool seen = false;
    for (const auto& q : sol.points) {
      double d = 0;
      for (int i = 0; i < n; ++i) d = std::max(d, std::abs(q.point[i] - cp.point[i]) / std::max(1.0, std::abs(q.point[i])));
      if (d < merge) {
        seen = true;
        break;
      }
    }
    if (seen) continue;
    cp.residual = o.residual;
    cp.value = w.value(o.y);
    cp.degenerate = o.degenerate;
    sol.points.push_back(std::move(cp));
  }
  if (sol.points.empty()) {
    sol.diagnostic = "Newton did not converge from any of " + std::to_string(total) + " starts";
  }
  for (std::size_t a = 0; a < sol.points.size(); ++a) {
    for (std::size_t b = a + 1; b < sol.points.size(); ++b) {
      const auto va = sol.points[a].value;
      const auto vb = sol.points[b].value;
      if (std::abs(va - vb) <= 1e-8 * std::max(1.0, std::abs(va))) sol.distinct_values = false;
    }
  }
  return sol;
}

std::vector<std::complex<double>> NumericGenerator::eval(std::span<const std::complex<double>> z) const {
  return symbolic.d.eval(z, u_point, t_value);
}

double NumericGenerator::square_defect(std::span<const std::complex<double>> z) const {
  const int dim = symbolic.d.dim();
  const auto r = eval(z);
  Mat m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) m(i, j) = r[static_cast<std::size_t>(i * dim + j)];
  }
  const std::complex<double> shift = symbolic.potential.eval(z, u_point, t_value) - lambda;
  const Mat sq = m * m - shift * Mat::Identity(dim, dim);
  return sq.cwiseAbs().maxCoeff();
}

LaurentPoly specialize_holonomy(const LaurentPoly& f, std::span<const std::complex<double>> u_point,
                                double t_value) {
  const RingContext ring = make_ring(f.ring().n, BaseField::complex);
  LaurentPoly out(ring);
  for (const auto& t : f.terms()) {
    std::complex<double> c = t.coeff.specialize(t_value);
    ExponentVector e;
    for (int i = 0; i < ring.n; ++i) {
      c *= std::pow(u_point[i], t.mono.u(i));
      e.set_z(i, t.mono.z(i));
    }
    out += LaurentPoly::monomial(ring, NovikovScalar(FieldElement(c), Rational(0)), e);
  }
  return out;
}

Endomorphism NumericGenerator::numeric_matrix() const {
  const Endomorphism& d = symbolic.d;
  Endomorphism r(make_ring(d.ring().n, BaseField::complex), d.parities(), d.labels());
  for (int i = 0; i < d.dim(); ++i) {
    for (int j = 0; j < d.dim(); ++j) r.set(i, j, specialize_holonomy(d.at(i, j), u_point, t_value));
  }
  return r;
}

NumericGenerator generator_at_point(const ToricFanoData& fan, const PotentialW& pot, const CriticalPoint& pt,
                                    double t_value, double tol, int samples, std::uint64_t seed) {
  if (static_cast<int>(pt.point.size()) != pot.ring.n) throw DomainError("critical point has the wrong dimension");
  if (!(pt.residual < tol)) throw DomainError("critical point residual above tolerance");
  NumericGenerator g{build_tilde_d(fan, pot), pt.point, t_value, {}};
  g.lambda = pot.w.eval(pt.point, pt.point, t_value);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> log_r(-0.7, 0.7);
  std::uniform_real_distribution<double> phase(0.0, 2 * std::numbers::pi);
  for (int s = 0; s < samples; ++s) {
    std::vector<std::complex<double>> z;
    for (int i = 0; i < pot.ring.n; ++i) z.push_back(std::polar(std::exp(log_r(rng)), phase(rng)));
    const double defect = g.square_defect(z);
    const double scale = 1.0 + std::abs(pot.w.eval(z, z, t_value));
    if (!(defect <= 100 * tol * scale)) {
      throw VerificationError("generator square defect " + std::to_string(defect) + " exceeds tolerance");
    }
  }
  return g;
}

WedgeContractionReport dyckerhoff_form_report(const ToricFanoData& fan, const PotentialW& pot,
                                              const CriticalPoint& pt, double t_value) {
  if (pot.ring.n > 4) throw DomainError("the wedge-contraction report is defined for n <= 4");
  WedgeContractionReport rep;
  rep.x = wedge_coefficients(pot.ring);
  rep.w = contraction_coefficients(fan, pot);
  const MatrixFactorization mf = build_tilde_d(fan, pot);
  rep.wedge_contraction = mf.d == wedge_contraction(pot.ring, rep.x, rep.w);
  LaurentPoly sum(pot.ring);
  for (int i = 0; i < pot.ring.n; ++i) sum += rep.x[i] * rep.w[i];
  rep.koszul_identity = sum == pot.w - pot.w.z_to_u();
  rep.lambda = pot.w.eval(pt.point, pt.point, t_value);
  return rep;
}

}  // namespace lgmf
