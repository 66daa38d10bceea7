#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

namespace hofa {

using cplx = std::complex<double>;
using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

inline constexpr double kTol = 1e-9;

/// e(x) = exp(2*pi*i*x)
inline cplx e(double x) {
  const double t = 2.0 * std::numbers::pi * x;
  return {std::cos(t), std::sin(t)};
}

/// Distance to the nearest integer.
inline double frac_norm(double x) {
  const double f = x - std::floor(x);
  return std::min(f, 1.0 - f);
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("hofa: 64-bit multiply overflow");
  return r;
}

inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("hofa: 64-bit add overflow");
  return r;
}

inline i64 narrow128(i128 v) {
  if (v > i128(INT64_MAX) || v < i128(INT64_MIN)) throw std::overflow_error("hofa: 128-bit value out of i64 range");
  return static_cast<i64>(v);
}

/// Floor of sqrt for nonnegative 64-bit input, exact.
inline i64 isqrt64(i64 n) {
  if (n < 0) throw std::invalid_argument("isqrt64: negative input");
  i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

/// Returns sqrt(n) if n is a perfect square, -1 otherwise.
inline i64 perfect_sqrt(i64 n) {
  if (n < 0) return -1;
  const i64 r = isqrt64(n);
  return r * r == n ? r : -1;
}

u64 mulmod_u64(u64 a, u64 b, u64 m);
u64 powmod_u64(u64 a, u64 e, u64 m);
bool is_prime_u64(u64 n);  // deterministic Miller-Rabin for 64-bit inputs
u64 next_prime_above(u64 n);

/// Modular inverse of a mod m (m prime or gcd(a,m)=1).
i64 mod_inverse(i64 a, i64 m);

std::size_t thread_budget();  // HOFA_THREADS cap, defaults to hardware concurrency

/// Runs fn(i) for i in [0,n) on up to thread_budget() threads.
/// Work is split in fixed contiguous chunks so per-index outputs are
/// placement-deterministic; callers combine results in index order.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

/// Range form: fn(i) for i in [lo, hi).
inline void parallel_for(i64 lo, i64 hi, const std::function<void(i64)>& fn) {
  if (hi <= lo) return;
  parallel_for(static_cast<std::size_t>(hi - lo), [&](std::size_t i) { fn(lo + static_cast<i64>(i)); });
}

/// Pairwise (balanced-tree) summation; deterministic for a fixed input order.
cplx pairwise_sum(const std::vector<cplx>& v);
double pairwise_sum(const std::vector<double>& v);

}  // namespace hofa
