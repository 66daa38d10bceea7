#pragma once

#include <array>

#include "hofa/arith.hpp"
#include "hofa/quadint.hpp"

namespace hofa::correlations {

using arith::FactorSieve;
using arith::MultiplicativeSpec;

struct LinearFormSet {
  std::vector<std::pair<i64, i64>> forms;  // (kappa_j, lambda_j)

  /// kappa_i lambda_j - lambda_i kappa_j; forms i, j independent iff nonzero.
  std::vector<std::vector<i64>> independence_matrix() const;
  bool pairwise_independent() const;
};

enum class RegionKind { Square, NormBall, Rectangle };

struct Region {
  RegionKind kind = RegionKind::Square;
  i64 width = 0, height = 0;  // Rectangle only

  static Region square() { return {RegionKind::Square, 0, 0}; }
  static Region norm_ball() { return {RegionKind::NormBall, 0, 0}; }
  static Region rectangle(i64 w, i64 h) { return {RegionKind::Rectangle, w, h}; }
};

/// Unimodular change of variables; Q(m, n) = Q_d(u11 m + u12 n, u21 m + u22 n).
struct Unimodular {
  i64 u11 = 1, u12 = 0, u21 = 0, u22 = 1;

  i64 det() const { return u11 * u22 - u12 * u21; }
};

/// Average over the region of f(Q(m,n)^r) * prod_j f(L_j(m,n)), with f evenly
/// extended (f(0) = 0). Square region is {1..N}^2; the norm ball is
/// {Q(m,n) <= N^2}; rectangle is {1..w} x {1..h}.
cplx chowla_average(const MultiplicativeSpec& f, i64 d, const Unimodular& change, i64 r, const LinearFormSet& forms,
                    i64 N, const Region& region, const FactorSieve& sieve);

/// E_{m,n in Z_Ntilde} 1_[N](n) prod_j a_j(m + ell_j n); each table is a signal
/// of length Ntilde. Requires Ntilde prime and > 2 * (sum |ell_j|) * N.
cplx linear_forms_average(const std::vector<std::vector<cplx>>& tables, const std::vector<i64>& shifts, i64 N,
                          i64 ntilde);

struct UniformityBoundReport {
  cplx average;
  double lhs = 0.0;       // |average|
  double min_norm = 0.0;  // min_j ||a_j||_{U^{s-1}(Z_Ntilde)}
  double implied_c = 0.0; // (lhs - 2/Ntilde) / min_norm^{1/2}
  bool min_norm_degenerate = false;
};

UniformityBoundReport uniformity_bound_report(const std::vector<std::vector<cplx>>& tables,
                                              const std::vector<i64>& shifts, i64 N, i64 ntilde, int s);

/// |E_{n in Z_Ntilde} fun(n) e(n^2 alpha)| for a uniform part living on Z_Ntilde.
double quad_phase_correlation(const std::vector<cplx>& fun, double alpha);

}  // namespace hofa::correlations
