#pragma once

#include <functional>
#include <map>

#include "hofa/arith.hpp"
#include "hofa/quadint.hpp"

namespace hofa::katai {

using arith::FactorSieve;
using arith::MultiplicativeSpec;
using quadfield::PrimeElement;
using quadfield::QuadInt;

struct PairCorrelationReport {
  i64 K = 0;
  // (p, q) with p < q < K both prime -> |E_{n <= floor(N/q)} a(pn) conj(a(qn))|
  std::map<std::pair<i64, i64>, double> entries;
  double max_entry = 0.0;
};

/// Pair correlations of a over small prime dilates. Requires N >= K^2 so every
/// inner average has at least K sample points.
PairCorrelationReport pair_correlations(const std::vector<cplx>& a, i64 K);

/// max over the family of |E_{n in [N]} f(n) a(n)|.
double mult_correlation_sup(const std::vector<cplx>& a, const std::vector<MultiplicativeSpec>& family,
                            const FactorSieve& sieve);

struct TkStatistics {
  double A = 0.0;              // sum over P of 1/N(alpha)
  double mean_deviation = 0.0; // (1/count) sum_{0 < N(z) <= x} |omega(z) - A|
  i64 count = 0;               // number of nonzero z with N(z) <= x
};

TkStatistics tk_statistics(i64 d, const std::vector<PrimeElement>& P, i64 x);

/// z -> g(N(z)^r) with g multiplicative; the pullbacks appearing in the ring
/// orthogonality sums.
struct NormPullback {
  MultiplicativeSpec g;
  i64 r = 1;

  cplx operator()(const QuadInt& z, const FactorSieve& sieve) const {
    return g.evaluate_power(quadfield::norm(z), r, sieve);
  }
};

struct KataiZdSums {
  cplx S;          // sum_{0 < N(z) <= x} f(z) h(z)
  double C = 0.0;  // sum over ordered pairs alpha != beta in P of
                   // |sum_{0 < N(z) <= x/max(N(alpha),N(beta))} f(alpha z) conj(f(beta z))|
};

KataiZdSums katai_zd_sums(i64 d, const NormPullback& f, const std::function<cplx(const QuadInt&)>& h,
                          const std::vector<PrimeElement>& P, i64 x, const FactorSieve& sieve);

}  // namespace hofa::katai
