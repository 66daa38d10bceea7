#pragma once

#include <array>

#include "hofa/arith.hpp"

namespace hofa::nil {

using arith::FactorSieve;
using arith::MultiplicativeSpec;

/// Upper-triangular coordinates on the 3-dimensional Heisenberg group:
/// (x,y,z)*(x',y',z') = (x+x', y+y', z+z'+xy').
struct HeisenbergElement {
  double x = 0.0, y = 0.0, z = 0.0;
};

HeisenbergElement heis_mul(const HeisenbergElement& g, const HeisenbergElement& h);
HeisenbergElement heis_inverse(const HeisenbergElement& g);
/// a^n in closed form: (nx, ny, binom(n,2) xy + nz), long-double internals.
HeisenbergElement heis_power(const HeisenbergElement& a, i64 n);

struct ReducedElement {
  std::array<i64, 3> gamma{0, 0, 0};  // right-multiplier in the integer lattice
  HeisenbergElement point;            // g*gamma, coordinates in [0,1)^3
};

ReducedElement heis_reduce(const HeisenbergElement& g);

/// Reduced points of a^n e_X for n = 1..N, iterated multiplication with
/// per-step reduction. orbit_closed_form recomputes each point from the power
/// formula (cross-check route).
std::vector<HeisenbergElement> orbit(const HeisenbergElement& a, i64 N);
std::vector<HeisenbergElement> orbit_closed_form(const HeisenbergElement& a, i64 N);

/// Polynomial T^m-valued sequence in the binomial basis:
/// phi(n) = sum_{j=1..d} alpha_j binom(n, j) mod 1 (constant term dropped).
struct TorusPoly {
  int m = 1;                                  // torus dimension
  std::vector<std::vector<double>> alpha;     // alpha[j-1] in T^m, j = 1..d

  int degree() const { return static_cast<int>(alpha.size()); }
  std::vector<double> evaluate(i64 n) const;  // in [0,1)^m
  /// Monomial-basis coefficients beta with phi(n) = sum_k beta_k n^k (not reduced).
  std::vector<std::vector<double>> monomial_coefficients() const;
};

/// max_{1<=j<=d} N^j * ||alpha_j||, with ||.|| the max over coordinates of the
/// distance to the nearest integer.
double smoothness_norm(const TorusPoly& poly, i64 N);

/// Coefficients of n -> phi(n+b); beta_i = sum_j binom(b, j-i) alpha_j works
/// for either sign of b via the generalized binomial.
TorusPoly poly_shift(const TorusPoly& poly, i64 b);

/// Generalized binomial coefficient for integer (possibly negative) b.
i64 binom_i64(i64 b, int j);

/// max over horizontal characters e(k.u), 0 < sum|k| <= maxFreqL1, and over
/// arithmetic progressions (all steps <= budget, all offsets; prefixes and
/// suffixes of each maximal progression with at least N/(4*budget) terms) of
/// |E_{n in [N]} 1_P(n) Phi(u_n)|.
double equidistribution_diagnostic(const std::vector<std::vector<double>>& points, i64 budget, int max_freq_l1 = 5);

/// Same sup for caller-supplied mean-zero test functions (|Phi| <= 1).
double equidistribution_diagnostic(const std::vector<std::vector<double>>& points, i64 budget,
                                   const std::vector<std::function<cplx(const std::vector<double>&)>>& tests);

/// max over the rows of f_values (each a table of f(1..N)) of
/// |E_{n in [N]} f(n) Phi(a^n e_X)|, with Phi the horizontal character e(k.u)
/// evaluated on the reduced orbit.
double daboussi_check(const HeisenbergElement& a, const std::array<i64, 2>& freq,
                      const std::vector<std::vector<cplx>>& f_values, i64 N);

double daboussi_check(const HeisenbergElement& a, const std::array<i64, 2>& freq,
                      const std::vector<MultiplicativeSpec>& family, i64 N, const FactorSieve& sieve);

}  // namespace hofa::nil
