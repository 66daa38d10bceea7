#include "hofa/quadint.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace hofa::quadfield {

namespace {

bool d_is_3mod4(i64 d) { return d % 4 == 3; }

void check_same_ring(const QuadInt& z, const QuadInt& w) {
  if (z.d != w.d) throw std::invalid_argument("QuadInt: mixed ring parameters");
}

}  // namespace

i64 norm_form(i64 d, i64 m, i64 n) {
  if (d < 1) throw std::invalid_argument("norm_form: d must be positive");
  i128 v;
  if (d_is_3mod4(d)) {
    v = i128(m) * m + i128(m) * n + i128((d + 1) / 4) * n * n;
  } else {
    v = i128(m) * m + i128(d) * n * n;
  }
  return narrow128(v);
}

i64 norm(const QuadInt& z) { return norm_form(z.d, z.m, z.n); }

QuadInt multiply(const QuadInt& z, const QuadInt& w) {
  check_same_ring(z, w);
  i128 m, n;
  if (d_is_3mod4(z.d)) {
    // tau^2 = tau - (d+1)/4
    m = i128(z.m) * w.m - i128((z.d + 1) / 4) * z.n * w.n;
    n = i128(z.m) * w.n + i128(z.n) * w.m + i128(z.n) * w.n;
  } else {
    // tau^2 = -d
    m = i128(z.m) * w.m - i128(z.d) * z.n * w.n;
    n = i128(z.m) * w.n + i128(z.n) * w.m;
  }
  return {narrow128(m), narrow128(n), z.d};
}

QuadInt conjugate(const QuadInt& z) {
  if (d_is_3mod4(z.d)) return {checked_add(z.m, z.n), -z.n, z.d};
  return {z.m, -z.n, z.d};
}

QuadInt negate(const QuadInt& z) { return {-z.m, -z.n, z.d}; }

QuadInt add(const QuadInt& z, const QuadInt& w) {
  check_same_ring(z, w);
  return {checked_add(z.m, w.m), checked_add(z.n, w.n), z.d};
}

std::optional<QuadInt> exact_divide(const QuadInt& alpha, const QuadInt& z) {
  check_same_ring(alpha, z);
  if (alpha.is_zero()) throw std::invalid_argument("exact_divide: division by zero");
  const i64 na = norm(alpha);
  const QuadInt w = multiply(z, conjugate(alpha));
  if (w.m % na != 0 || w.n % na != 0) return std::nullopt;
  return QuadInt{w.m / na, w.n / na, z.d};
}

bool divides(const QuadInt& alpha, const QuadInt& z) { return exact_divide(alpha, z).has_value(); }

std::vector<QuadInt> enumerate_ball_norm(i64 d, i64 norm_bound) {
  if (d < 1) throw std::invalid_argument("enumerate_ball_norm: d must be positive");
  if (norm_bound < 0) return {};
  std::vector<QuadInt> out;
  if (d_is_3mod4(d)) {
    // 4*Q_d = (2m+n)^2 + d n^2, so |n| <= sqrt(4B/d)
    const i64 nmax = isqrt64(4 * norm_bound / d);
    for (i64 n = -nmax; n <= nmax; ++n) {
      const i64 disc = 4 * norm_bound - d * n * n;
      if (disc < 0) continue;
      const i64 r = isqrt64(disc);
      const i64 lo = static_cast<i64>(std::ceil((-static_cast<double>(n) - static_cast<double>(r)) / 2.0)) - 1;
      const i64 hi = static_cast<i64>(std::floor((-static_cast<double>(n) + static_cast<double>(r)) / 2.0)) + 1;
      for (i64 m = lo; m <= hi; ++m) {
        if (norm_form(d, m, n) <= norm_bound) out.push_back({m, n, d});
      }
    }
  } else {
    const i64 nmax = isqrt64(norm_bound / d);
    for (i64 n = -nmax; n <= nmax; ++n) {
      const i64 mmax = isqrt64(norm_bound - d * n * n);
      for (i64 m = -mmax; m <= mmax; ++m) out.push_back({m, n, d});
    }
  }
  std::sort(out.begin(), out.end(), [](const QuadInt& a, const QuadInt& b) {
    return std::tie(a.n, a.m) < std::tie(b.n, b.m);
  });
  return out;
}

std::vector<QuadInt> enumerate_ball(i64 N, i64 d) {
  if (N < 1) throw std::invalid_argument("enumerate_ball: N must be >= 1");
  return enumerate_ball_norm(d, checked_mul(N, N));
}

std::vector<QuadInt> units(i64 d) {
  std::vector<QuadInt> out;
  for (const QuadInt& z : enumerate_ball_norm(d, 1)) {
    if (!z.is_zero() && norm(z) == 1) out.push_back(z);
  }
  return out;
}

QuadInt canonical_associate(const QuadInt& z) {
  if (z.is_zero()) return z;
  std::optional<QuadInt> best;
  for (const QuadInt& u : units(z.d)) {
    const QuadInt c = multiply(u, z);
    if (c.m > 0 || (c.m == 0 && c.n > 0)) {
      if (!best || std::tie(c.m, c.n) < std::tie(best->m, best->n)) best = c;
    }
  }
  return *best;  // the orbit always meets the preferred half-plane
}

std::vector<PrimeElement> prime_elements(i64 d, i64 norm_limit) {
  if (norm_limit < 2) throw std::invalid_argument("prime_elements: normLimit must be >= 2");
  std::set<std::pair<i64, i64>> seen;
  std::vector<PrimeElement> out;
  for (const QuadInt& z : enumerate_ball_norm(d, norm_limit)) {
    if (z.is_integer()) continue;
    const i64 nz = norm(z);
    if (!is_prime_u64(static_cast<u64>(nz))) continue;
    const QuadInt c = canonical_associate(z);
    if (!seen.insert({c.m, c.n}).second) continue;
    const bool ram = canonical_associate(conjugate(c)) == c;
    out.push_back({c, true, ram});
  }
  std::sort(out.begin(), out.end(), [](const PrimeElement& a, const PrimeElement& b) {
    return std::make_tuple(norm(a.z), a.z.m, a.z.n) < std::make_tuple(norm(b.z), b.z.m, b.z.n);
  });
  return out;
}

std::vector<PrimeElement> build_P(i64 d, const std::vector<QuadInt>& zetas, i64 norm_limit) {
  for (const QuadInt& zeta : zetas) {
    if (zeta.is_zero()) throw std::invalid_argument("build_P: zetas must be nonzero");
  }
  std::vector<PrimeElement> out;
  for (const PrimeElement& pe : prime_elements(d, norm_limit)) {
    if (pe.ramified) continue;
    bool excluded = false;
    for (const QuadInt& zeta : zetas) {
      if (divides(pe.z, zeta)) {
        excluded = true;
        break;
      }
    }
    if (!excluded) out.push_back(pe);
  }
  return out;
}

QuadInt zeta_for_form(i64 d, i64 kappa, i64 lambda) {
  // L(m,n) = Im(zeta (m+n tau_d)) / sqrt(d); the 3 mod 4 case needs the
  // doubled variant because tau_d has half-integer imaginary part.
  if (d_is_3mod4(d)) return {2 * (lambda - kappa), 2 * kappa, d};
  return {lambda, kappa, d};
}

i64 imag_part_scaled(const QuadInt& w) {
  // Im(w) = n * Im(tau); Im(tau) = sqrt(d)/2 for d = 3 mod 4, else sqrt(d).
  // Returns Im(w)/sqrt(d) when it is an exact integer.
  if (d_is_3mod4(w.d)) {
    if (w.n % 2 != 0) throw std::invalid_argument("imag_part_scaled: not an integer multiple of sqrt(d)");
    return w.n / 2;
  }
  return w.n;
}

}  // namespace hofa::quadfield
