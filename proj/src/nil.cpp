#include "hofa/nil.hpp"

#include <cmath>
#include <stdexcept>

namespace hofa::nil {

namespace {

double frac01(long double v) {
  long double f = v - std::floor(v);
  if (f >= 1.0L) f -= 1.0L;
  if (f < 0.0L) f += 1.0L;
  return static_cast<double>(f);
}

}  // namespace

HeisenbergElement heis_mul(const HeisenbergElement& g, const HeisenbergElement& h) {
  return {g.x + h.x, g.y + h.y, g.z + h.z + g.x * h.y};
}

HeisenbergElement heis_inverse(const HeisenbergElement& g) { return {-g.x, -g.y, -g.z + g.x * g.y}; }

HeisenbergElement heis_power(const HeisenbergElement& a, i64 n) {
  const long double x = a.x, y = a.y, z = a.z;
  const long double c2 = (static_cast<long double>(n) * (n - 1)) / 2.0L;
  return {static_cast<double>(n * x), static_cast<double>(n * y), static_cast<double>(c2 * x * y + n * z)};
}

ReducedElement heis_reduce(const HeisenbergElement& g) {
  ReducedElement out;
  const i64 a = -static_cast<i64>(std::floor(g.x));
  const i64 b = -static_cast<i64>(std::floor(g.y));
  const i64 c = -static_cast<i64>(std::floor(g.z + g.x * static_cast<double>(b)));
  out.gamma = {a, b, c};
  // right-multiply by gamma = (a, b, c)
  out.point = {g.x + a, g.y + b, g.z + c + g.x * b};
  // guard against boundary roundoff
  auto clamp01 = [](double& v) {
    if (v >= 1.0) v -= 1.0;
    if (v < 0.0) v += 1.0;
  };
  clamp01(out.point.x);
  clamp01(out.point.y);
  clamp01(out.point.z);
  return out;
}

std::vector<HeisenbergElement> orbit(const HeisenbergElement& a, i64 N) {
  if (N < 1) throw std::invalid_argument("orbit: N must be >= 1");
  std::vector<HeisenbergElement> out;
  out.reserve(N);
  // points are cosets g Gamma; left multiplication by a commutes with the
  // right Gamma-action, so reducing at every step is harmless.  The running
  // state is kept in extended precision so per-step roundoff does not
  // accumulate over long orbits.
  const long double ax = a.x, ay = a.y, az = a.z;
  long double gx = 0.0L, gy = 0.0L, gz = 0.0L;
  for (i64 n = 1; n <= N; ++n) {
    long double hx = ax + gx, hy = ay + gy, hz = az + gz + ax * gy;
    const long double b = -std::floor(hy);
    hy += b;
    hz += hx * b;
    hx -= std::floor(hx);
    hz -= std::floor(hz);
    gx = hx;
    gy = hy;
    gz = hz;
    out.push_back({frac01(hx), frac01(hy), frac01(hz)});
  }
  return out;
}

std::vector<HeisenbergElement> orbit_closed_form(const HeisenbergElement& a, i64 N) {
  if (N < 1) throw std::invalid_argument("orbit_closed_form: N must be >= 1");
  std::vector<HeisenbergElement> out(N);
  const long double x = a.x, y = a.y, z = a.z;
  parallel_for(1, N + 1, [&](i64 n) {
    // reduce (nx, ny, binom(n,2)xy + nz) in extended precision
    const long double gx = static_cast<long double>(n) * x;
    const long double gy = static_cast<long double>(n) * y;
    const long double c2 = (static_cast<long double>(n) * (n - 1)) / 2.0L;
    const long double gz = c2 * x * y + static_cast<long double>(n) * z;
    const long double b = -std::floor(gy);
    out[n - 1] = {frac01(gx), frac01(gy), frac01(gz + gx * b)};
  });
  return out;
}

std::vector<double> TorusPoly::evaluate(i64 n) const {
  std::vector<double> u(m, 0.0);
  long double binom = 1.0L;  // binom(n, j), updated multiplicatively
  for (int j = 1; j <= degree(); ++j) {
    binom = binom * static_cast<long double>(n - (j - 1)) / static_cast<long double>(j);
    for (int c = 0; c < m; ++c) u[c] += static_cast<double>(frac01(binom * alpha[j - 1][c]));
  }
  for (int c = 0; c < m; ++c) u[c] = frac01(u[c]);
  return u;
}

std::vector<std::vector<double>> TorusPoly::monomial_coefficients() const {
  const int d = degree();
  // signed Stirling numbers of the first kind: x(x-1)...(x-j+1) = sum_k s(j,k) x^k
  std::vector<std::vector<double>> s(d + 1, std::vector<double>(d + 1, 0.0));
  s[0][0] = 1.0;
  for (int j = 1; j <= d; ++j) {
    for (int k = 1; k <= j; ++k) s[j][k] = s[j - 1][k - 1] - (j - 1) * s[j - 1][k];
  }
  std::vector<std::vector<double>> beta(d + 1, std::vector<double>(m, 0.0));
  double factorial = 1.0;
  for (int j = 1; j <= d; ++j) {
    factorial *= j;
    for (int k = 0; k <= j; ++k) {
      for (int c = 0; c < m; ++c) beta[k][c] += alpha[j - 1][c] * s[j][k] / factorial;
    }
  }
  return beta;
}

double smoothness_norm(const TorusPoly& poly, i64 N) {
  double best = 0.0;
  double scale = 1.0;
  for (int j = 1; j <= poly.degree(); ++j) {
    scale *= static_cast<double>(N);
    double dist = 0.0;
    for (double a : poly.alpha[j - 1]) dist = std::max(dist, frac_norm(a));
    best = std::max(best, scale * dist);
  }
  return best;
}

i64 binom_i64(i64 b, int j) {
  if (j < 0) throw std::invalid_argument("binom_i64: negative lower index");
  i128 num = 1;
  for (int t = 0; t < j; ++t) {
    num *= i128(b - t);
    num /= (t + 1);  // exact: product of t+1 consecutive integers is divisible by (t+1)!
  }
  return narrow128(num);
}

TorusPoly poly_shift(const TorusPoly& poly, i64 b) {
  const int d = poly.degree();
  TorusPoly out;
  out.m = poly.m;
  out.alpha.assign(d, std::vector<double>(poly.m, 0.0));
  // binom(n+b, j) = sum_i binom(n, i) binom(b, j-i)  (Vandermonde)
  for (int i = 1; i <= d; ++i) {
    for (int j = i; j <= d; ++j) {
      const double w = static_cast<double>(binom_i64(b, j - i));
      for (int c = 0; c < poly.m; ++c) out.alpha[i - 1][c] += w * poly.alpha[j - 1][c];
    }
    for (int c = 0; c < poly.m; ++c) out.alpha[i - 1][c] = frac01(out.alpha[i - 1][c]);
  }
  return out;
}

namespace {

std::vector<std::vector<i64>> frequency_vectors(int m, int max_l1) {
  std::vector<std::vector<i64>> out;
  std::vector<i64> k(m, 0);
  std::function<void(int, int)> rec = [&](int pos, int budget) {
    if (pos == m) {
      for (i64 v : k) {
        if (v != 0) {
          out.push_back(k);
          return;
        }
      }
      return;  // drop the zero frequency (constant character)
    }
    for (i64 v = -budget; v <= budget; ++v) {
      k[pos] = v;
      rec(pos + 1, budget - static_cast<int>(std::llabs(v)));
    }
    k[pos] = 0;
  };
  rec(0, max_l1);
  return out;
}

double progression_sup(const std::vector<cplx>& values, i64 budget) {
  const i64 N = static_cast<i64>(values.size());
  const i64 min_terms = std::max<i64>(1, N / (4 * budget));
  double best = 0.0;
  for (i64 step = 1; step <= budget; ++step) {
    for (i64 offset = 0; offset < step; ++offset) {
      // prefix sums along the maximal progression offset, offset+step, ...
      std::vector<cplx> prefix{cplx{0.0, 0.0}};
      for (i64 n = offset; n < N; n += step) prefix.push_back(prefix.back() + values[n]);
      const i64 L = static_cast<i64>(prefix.size()) - 1;
      const cplx total = prefix.back();
      for (i64 t = min_terms; t <= L; ++t) {
        best = std::max(best, std::abs(prefix[t]) / static_cast<double>(N));                // prefix windows
        best = std::max(best, std::abs(total - prefix[L - t]) / static_cast<double>(N));    // suffix windows
      }
    }
  }
  return best;
}

}  // namespace

double equidistribution_diagnostic(const std::vector<std::vector<double>>& points, i64 budget,
                                   const std::vector<std::function<cplx(const std::vector<double>&)>>& tests) {
  if (points.empty()) throw std::invalid_argument("equidistribution_diagnostic: empty point list");
  if (budget < 1) throw std::invalid_argument("equidistribution_diagnostic: budget must be >= 1");
  const i64 N = static_cast<i64>(points.size());
  std::vector<double> per_test(tests.size(), 0.0);
  parallel_for(0, static_cast<i64>(tests.size()), [&](i64 t) {
    std::vector<cplx> values(N);
    for (i64 n = 0; n < N; ++n) values[n] = tests[t](points[n]);
    per_test[t] = progression_sup(values, budget);
  });
  double best = 0.0;
  for (double v : per_test) best = std::max(best, v);
  return best;
}

double equidistribution_diagnostic(const std::vector<std::vector<double>>& points, i64 budget, int max_freq_l1) {
  if (points.empty()) throw std::invalid_argument("equidistribution_diagnostic: empty point list");
  const int m = static_cast<int>(points.front().size());
  std::vector<std::function<cplx(const std::vector<double>&)>> tests;
  for (const auto& k : frequency_vectors(m, max_freq_l1)) {
    tests.push_back([k](const std::vector<double>& u) {
      double phase = 0.0;
      for (size_t c = 0; c < k.size(); ++c) phase += static_cast<double>(k[c]) * u[c];
      return e(phase);
    });
  }
  return equidistribution_diagnostic(points, budget, tests);
}

double daboussi_check(const HeisenbergElement& a, const std::array<i64, 2>& freq,
                      const std::vector<std::vector<cplx>>& f_values, i64 N) {
  if (freq[0] == 0 && freq[1] == 0) throw std::invalid_argument("daboussi_check: zero frequency is not mean-zero");
  std::vector<cplx> phi(N);
  const std::vector<HeisenbergElement> pts = orbit_closed_form(a, N);
  parallel_for(0, N, [&](i64 n) {
    phi[n] = e(static_cast<double>(freq[0]) * pts[n].x + static_cast<double>(freq[1]) * pts[n].y);
  });
  double best = 0.0;
  for (const auto& f : f_values) {
    if (static_cast<i64>(f.size()) != N) throw std::invalid_argument("daboussi_check: table length != N");
    std::vector<cplx> terms(N);
    for (i64 n = 0; n < N; ++n) terms[n] = f[n] * phi[n];
    best = std::max(best, std::abs(pairwise_sum(terms) / static_cast<double>(N)));
  }
  return best;
}

double daboussi_check(const HeisenbergElement& a, const std::array<i64, 2>& freq,
                      const std::vector<MultiplicativeSpec>& family, i64 N, const FactorSieve& sieve) {
  std::vector<std::vector<cplx>> tables;
  for (const MultiplicativeSpec& f : family) {
    std::vector<cplx> row(N);
    parallel_for(1, N + 1, [&](i64 n) { row[n - 1] = f.evaluate(n, sieve); });
    tables.push_back(std::move(row));
  }
  return daboussi_check(a, freq, tables, N);
}

}  // namespace hofa::nil
