#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lgmf/exterior.hpp"
#include "lgmf/toric.hpp"

namespace lgmf {

// (z_1 ∂_1 W, ..., z_n ∂_n W).
std::vector<LaurentPoly> jacobian_system(const PotentialW& pot);

struct CriticalPoint {
  std::vector<std::complex<double>> point;
  double residual = 0;  // max_i |z_i ∂_i W|
  std::complex<double> value;
  bool degenerate = false;  // near-singular Hessian at the point
};

struct SolverConfig {
  int phases_per_axis = 0;  // 0: 2·max|v_ij| + 1
  double tol = 1e-12;
  int max_iter = 100;
  unsigned threads = 0;  // 0: LGMF_THREADS or hardware concurrency
};

struct CriticalSolution {
  std::vector<CriticalPoint> points;
  bool distinct_values = true;
  std::string diagnostic;  // set when nothing converged
};

// Multi-start Newton on the logarithmic system, specialized at T = t_value.
// Completeness is not guaranteed.
CriticalSolution solve_critical_points(const PotentialW& pot, double t_value, const SolverConfig& config = {});

// d̃ with u specialized numerically at a critical point.
struct NumericGenerator {
  MatrixFactorization symbolic;
  std::vector<std::complex<double>> u_point;
  double t_value = 0;
  std::complex<double> lambda;  // W at the point

  std::vector<std::complex<double>> eval(std::span<const std::complex<double>> z) const;
  // max |(R(z)^2 - (W(z) - lambda) Id)_{rc}|
  double square_defect(std::span<const std::complex<double>> z) const;
  // The matrix with u and T replaced by numbers: polynomials in z over the
  // complex field.
  Endomorphism numeric_matrix() const;
};

// f with u = u_point and T = t_value, as a polynomial in z over the complex
// field.
LaurentPoly specialize_holonomy(const LaurentPoly& f, std::span<const std::complex<double>> u_point, double t_value);

// Builds the generator and checks its square at `samples` random points;
// throws VerificationError if the defect exceeds 100·tol·(1 + |W|).
NumericGenerator generator_at_point(const ToricFanoData& fan, const PotentialW& pot, const CriticalPoint& pt,
                                    double t_value, double tol = 1e-12, int samples = 20, std::uint64_t seed = 0);

struct WedgeContractionReport {
  bool wedge_contraction = false;  // d̃ = sum x_i e_i∧ + sum w_i ι_i
  bool koszul_identity = false;    // sum x_i w_i = W(z) - W(u)
  std::vector<LaurentPoly> x, w;
  std::complex<double> lambda;     // W at the point
};

// n <= 4 only; throws DomainError otherwise.
WedgeContractionReport dyckerhoff_form_report(const ToricFanoData& fan, const PotentialW& pot,
                                              const CriticalPoint& pt, double t_value);

// Worker count from LGMF_THREADS, else hardware concurrency (at least 1).
unsigned worker_count(unsigned requested = 0);

}  // namespace lgmf
