#include <doctest.h>

#include <random>

#include "hofa/gowers.hpp"

using namespace hofa;
using namespace hofa::gowers;

namespace {

ComplexSignal random_unimodular(i64 N, u64 seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<cplx> v(static_cast<std::size_t>(N));
  for (auto& x : v) x = e(u(rng));
  return {N, std::move(v)};
}

}  // namespace

TEST_CASE("U^1 is the absolute mean") {
  const ComplexSignal a = random_unimodular(101, 1);
  cplx mean{0.0, 0.0};
  for (const cplx& v : a.values) mean += v;
  mean /= 101.0;
  CHECK(gowers_norm_cyclic(a, 1) == doctest::Approx(std::abs(mean)).epsilon(1e-12));
}

TEST_CASE("constants have norm 1 in every order") {
  const ComplexSignal one{64, std::vector<cplx>(64, cplx{1.0, 0.0})};
  for (int s = 1; s <= 4; ++s) CHECK(gowers_norm_cyclic(one, s) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("fast and recursive evaluators agree") {
  for (int s : {2, 3}) {
    for (i64 N : {32, 101}) {
      const ComplexSignal a = random_unimodular(N, 100 + static_cast<u64>(s) + static_cast<u64>(N));
      CHECK(gowers_norm_cyclic(a, s) == doctest::Approx(gowers_norm_recursive(a, s)).epsilon(1e-9));
    }
  }
}

TEST_CASE("U^2 equals the l4 spectral norm") {
  const ComplexSignal a = random_unimodular(211, 9);
  CHECK(gowers_norm_recursive(a, 2) == doctest::Approx(gowers_u2_fft(a)).epsilon(1e-9));
}

TEST_CASE("linear phase is U^2-trivial, quadratic phase is U^2-small but U^3-trivial") {
  const i64 N = 101;
  std::vector<cplx> lin(N), quad(N);
  for (i64 n = 0; n < N; ++n) {
    lin[n] = e(static_cast<double>(7 * n) / static_cast<double>(N));
    quad[n] = e(static_cast<double>((3 * n * n) % N) / static_cast<double>(N));
  }
  CHECK(gowers_norm_cyclic({N, lin}, 2) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(gowers_norm_cyclic({N, quad}, 2) < 0.5);
  CHECK(gowers_norm_cyclic({N, quad}, 3) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("monotonicity in s") {
  for (u64 seed : {1ULL, 2ULL, 3ULL}) {
    const ComplexSignal a = random_unimodular(64, seed);
    double prev = gowers_norm_cyclic(a, 1);
    for (int s = 2; s <= 4; ++s) {
      const double cur = gowers_norm_cyclic(a, s);
      CHECK(cur >= prev - 1e-12);
      prev = cur;
    }
  }
}

TEST_CASE("interval norm is Nstar-independent") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<cplx> vals(200);
  for (auto& v : vals) v = e(u(rng));
  for (int s : {2, 3}) {
    const double a = gowers_norm_interval(vals, s, 401);
    const double b = gowers_norm_interval(vals, s, 509);
    const double c = gowers_norm_interval(vals, s);  // default prime
    CHECK(a == doctest::Approx(b).epsilon(1e-9));
    CHECK(a == doctest::Approx(c).epsilon(1e-9));
  }
  CHECK_THROWS(gowers_norm_interval(vals, 2, 300));  // too small
}

TEST_CASE("scaling identity between ambient groups") {
  // support shorter than N/2 inside both Z_N and Z_Nstar
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const auto& [N, nstar] : std::vector<std::pair<i64, i64>>{{100, 300}, {101, 257}}) {
    std::vector<cplx> vals(N / 2 - 1);
    for (auto& v : vals) v = e(u(rng));
    for (int s : {2, 3}) {
      const double inN = gowers_norm_cyclic(embed_interval(vals, N), s);
      const double inStar = gowers_norm_cyclic(embed_interval(vals, nstar), s);
      CHECK(inN == doctest::Approx(embedding_scale_factor(N, nstar, s) * inStar).epsilon(1e-9));
    }
  }
}

TEST_CASE("progression and phase Hoelder chains") {
  const i64 N = 101;
  const ComplexSignal a = random_unimodular(N, 31);
  std::mt19937_64 rng(37);
  for (int it = 0; it < 20; ++it) {
    const i64 step = 1 + static_cast<i64>(rng() % 7);
    const i64 first = 1 + static_cast<i64>(rng() % 20);
    const i64 maxlen = (N - first) / step + 1;
    const Progression P{first, step, 1 + static_cast<i64>(rng() % maxlen)};
    const U2BoundReport r = progression_u2_bound(P, a);
    CHECK(r.lhs <= r.rhs + 1e-9);
    const U2BoundReport ph = phase_u2_bound(a, u64(rng() % 1000) / 1000.0);
    CHECK(ph.lhs <= ph.rhs + 1e-9);
  }
}
