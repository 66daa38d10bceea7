#include "hofa/katai.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hofa::katai {

PairCorrelationReport pair_correlations(const std::vector<cplx>& a, i64 K) {
  const i64 N = static_cast<i64>(a.size());
  if (K < 3) throw std::invalid_argument("pair_correlations: K must be >= 3");
  if (N < K * K) throw std::invalid_argument("pair_correlations: insufficient range, need N >= K^2");

  std::vector<i64> primes;
  for (i64 p = 2; p < K; ++p) {
    if (is_prime_u64(static_cast<u64>(p))) primes.push_back(p);
  }

  // a[n-1] = a(n)
  PairCorrelationReport report;
  report.K = K;
  std::vector<std::pair<i64, i64>> pairs;
  for (size_t i = 0; i < primes.size(); ++i) {
    for (size_t j = i + 1; j < primes.size(); ++j) pairs.emplace_back(primes[i], primes[j]);
  }
  std::vector<double> values(pairs.size());
  parallel_for(0, static_cast<i64>(pairs.size()), [&](i64 idx) {
    const auto [p, q] = pairs[idx];
    const i64 M = N / q;
    std::vector<cplx> terms(M);
    for (i64 n = 1; n <= M; ++n) terms[n - 1] = a[p * n - 1] * std::conj(a[q * n - 1]);
    values[idx] = std::abs(pairwise_sum(terms) / static_cast<double>(M));
  });
  for (size_t idx = 0; idx < pairs.size(); ++idx) {
    report.entries[pairs[idx]] = values[idx];
    report.max_entry = std::max(report.max_entry, values[idx]);
  }
  return report;
}

double mult_correlation_sup(const std::vector<cplx>& a, const std::vector<MultiplicativeSpec>& family,
                            const FactorSieve& sieve) {
  if (family.empty()) throw std::invalid_argument("mult_correlation_sup: empty family");
  const i64 N = static_cast<i64>(a.size());
  double best = 0.0;
  for (const MultiplicativeSpec& f : family) {
    std::vector<cplx> terms(N);
    parallel_for(1, N + 1, [&](i64 n) { terms[n - 1] = f.evaluate(n, sieve) * a[n - 1]; });
    best = std::max(best, std::abs(pairwise_sum(terms) / static_cast<double>(N)));
  }
  return best;
}

TkStatistics tk_statistics(i64 d, const std::vector<PrimeElement>& P, i64 x) {
  if (P.empty()) throw std::invalid_argument("tk_statistics: empty P");
  if (x < 1) throw std::invalid_argument("tk_statistics: x must be >= 1");
  TkStatistics stats;
  for (const PrimeElement& alpha : P) stats.A += 1.0 / static_cast<double>(quadfield::norm(alpha.z));

  std::vector<QuadInt> ball;
  for (const QuadInt& z : quadfield::enumerate_ball_norm(d, x)) {
    if (!z.is_zero()) ball.push_back(z);
  }
  std::vector<double> deviations(ball.size());
  parallel_for(0, static_cast<i64>(ball.size()), [&](i64 i) {
    i64 omega = 0;
    for (const PrimeElement& alpha : P) {
      if (quadfield::divides(alpha.z, ball[i])) ++omega;
    }
    deviations[i] = std::abs(static_cast<double>(omega) - stats.A);
  });
  stats.count = static_cast<i64>(ball.size());
  stats.mean_deviation = pairwise_sum(deviations) / static_cast<double>(stats.count);
  return stats;
}

KataiZdSums katai_zd_sums(i64 d, const NormPullback& f, const std::function<cplx(const QuadInt&)>& h,
                          const std::vector<PrimeElement>& P, i64 x, const FactorSieve& sieve) {
  if (x < 1) throw std::invalid_argument("katai_zd_sums: x must be >= 1");
  KataiZdSums out;

  std::vector<QuadInt> ball;
  for (const QuadInt& z : quadfield::enumerate_ball_norm(d, x)) {
    if (!z.is_zero()) ball.push_back(z);
  }
  std::vector<cplx> terms(ball.size());
  parallel_for(0, static_cast<i64>(ball.size()), [&](i64 i) { terms[i] = f(ball[i], sieve) * h(ball[i]); });
  out.S = pairwise_sum(terms);

  // Ordered pairs alpha != beta; the inner range is N(z) <= x / max(N(alpha), N(beta)).
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < P.size(); ++i) {
    for (size_t j = 0; j < P.size(); ++j) {
      if (i != j) pairs.emplace_back(i, j);
    }
  }
  std::vector<double> pair_values(pairs.size());
  parallel_for(0, static_cast<i64>(pairs.size()), [&](i64 idx) {
    const QuadInt& alpha = P[pairs[idx].first].z;
    const QuadInt& beta = P[pairs[idx].second].z;
    const i64 bound = x / std::max(quadfield::norm(alpha), quadfield::norm(beta));
    cplx inner{0.0, 0.0};
    for (const QuadInt& z : quadfield::enumerate_ball_norm(d, bound)) {
      if (z.is_zero()) continue;
      inner += f(quadfield::multiply(alpha, z), sieve) * std::conj(f(quadfield::multiply(beta, z), sieve));
    }
    pair_values[idx] = std::abs(inner);
  });
  out.C = pairwise_sum(pair_values);
  return out;
}

}  // namespace hofa::katai
