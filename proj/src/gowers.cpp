#include "hofa/gowers.hpp"

#include <cmath>

namespace hofa::gowers {

namespace {

cplx mean(const ComplexSignal& a) { return pairwise_sum(a.values) / static_cast<double>(a.N); }

ComplexSignal multiply_conj_shift(const ComplexSignal& a, i64 t) {
  const i64 N = a.N;
  std::vector<cplx> out(static_cast<std::size_t>(N));
  for (i64 n = 0; n < N; ++n) {
    i64 m = n + t;
    if (m >= N) m -= N;
    out[n] = a.values[n] * std::conj(a.values[m]);
  }
  return {N, std::move(out)};
}

double u2_pow4_fft(const ComplexSignal& a) {
  const Spectrum sp = dft(a);
  std::vector<double> terms(sp.coefficients.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const double m2 = std::norm(sp.coefficients[i]);
    terms[i] = m2 * m2;
  }
  return pairwise_sum(terms);
}

// ||a||_{U^s}^{2^s}; fast=true routes the s=2 base through the spectrum.
double gowers_pow(const ComplexSignal& a, int s, bool fast) {
  if (s == 1) {
    const double m = std::abs(mean(a));
    return m * m;
  }
  if (s == 2 && fast) return u2_pow4_fft(a);
  std::vector<double> shifts(static_cast<std::size_t>(a.N));
  parallel_for(static_cast<std::size_t>(a.N),
               [&](std::size_t t) { shifts[t] = gowers_pow(multiply_conj_shift(a, static_cast<i64>(t)), s - 1, fast); });
  return pairwise_sum(shifts) / static_cast<double>(a.N);
}

}  // namespace

double gowers_norm_cyclic(const ComplexSignal& signal, int s) {
  if (s < 1) throw std::invalid_argument("gowers_norm_cyclic: s must be >= 1");
  if (s == 1) return std::abs(mean(signal));
  return std::pow(std::max(0.0, gowers_pow(signal, s, true)), 1.0 / std::exp2(s));
}

double gowers_norm_recursive(const ComplexSignal& signal, int s) {
  if (s < 1) throw std::invalid_argument("gowers_norm_recursive: s must be >= 1");
  if (s == 1) return std::abs(mean(signal));
  return std::pow(std::max(0.0, gowers_pow(signal, s, false)), 1.0 / std::exp2(s));
}

double gowers_u2_fft(const ComplexSignal& signal) { return std::pow(u2_pow4_fft(signal), 0.25); }

double gowers_norm_interval(const std::vector<cplx>& values, int s, i64 nstar) {
  if (s < 2) throw std::invalid_argument("gowers_norm_interval: s must be >= 2");
  const i64 N = static_cast<i64>(values.size());
  if (nstar == 0) nstar = static_cast<i64>(next_prime_above(static_cast<u64>(2 * N)));
  if (nstar <= 2 * N) throw std::invalid_argument("gowers_norm_interval: Nstar must exceed 2N");
  const ComplexSignal num = embed_interval(values, nstar);
  const ComplexSignal den = embed_interval(std::vector<cplx>(values.size(), cplx{1.0, 0.0}), nstar);
  return gowers_norm_cyclic(num, s) / gowers_norm_cyclic(den, s);
}

double embedding_scale_factor(i64 N, i64 nstar, int s) {
  return std::pow(static_cast<double>(nstar) / static_cast<double>(N),
                  static_cast<double>(s + 1) / std::exp2(s));
}

namespace {

U2BoundReport holder_chain(const ComplexSignal& cutoff, const ComplexSignal& a) {
  // |E_n u(n) a(n)| <= ||hat u||_{4/3} ||hat a||_4 = C ||a||_{U^2}.
  std::vector<cplx> prod(static_cast<std::size_t>(a.N));
  for (i64 n = 0; n < a.N; ++n) prod[n] = cutoff.values[n] * a.values[n];
  const double lhs = std::abs(pairwise_sum(prod) / static_cast<double>(a.N));
  const Spectrum sp = dft(cutoff);
  std::vector<double> terms(sp.coefficients.size());
  for (std::size_t i = 0; i < terms.size(); ++i) terms[i] = std::pow(std::abs(sp.coefficients[i]), 4.0 / 3.0);
  const double c = std::pow(pairwise_sum(terms), 0.75);
  return {lhs, c, c * gowers_u2_fft(a)};
}

}  // namespace

U2BoundReport progression_u2_bound(const Progression& P, const ComplexSignal& a) {
  if (!is_prime_u64(static_cast<u64>(a.N))) throw std::invalid_argument("progression_u2_bound: N must be prime");
  if (P.first < 1 || P.length < 1 || P.first + (P.length - 1) * P.step > a.N)
    throw std::invalid_argument("progression_u2_bound: P must lie in [1, N]");
  std::vector<cplx> ind(static_cast<std::size_t>(a.N), cplx{});
  for (i64 k = 0; k < P.length; ++k) ind[(P.first + k * P.step) % a.N] = {1.0, 0.0};
  return holder_chain({a.N, std::move(ind)}, a);
}

U2BoundReport phase_u2_bound(const ComplexSignal& a, double t) {
  std::vector<cplx> phase(static_cast<std::size_t>(a.N));
  for (i64 n = 0; n < a.N; ++n) phase[n] = e(static_cast<double>(n) * t);
  return holder_chain({a.N, std::move(phase)}, a);
}

}  // namespace hofa::gowers
