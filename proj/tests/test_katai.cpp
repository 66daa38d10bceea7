#include <doctest.h>

#include "hofa/katai.hpp"

using namespace hofa;
using namespace hofa::katai;

namespace {
std::vector<cplx> table_of(const arith::MultiplicativeSpec& spec, i64 N, const arith::FactorSieve& sieve) {
  return arith::tabulate(spec, N, sieve).values();
}
}  // namespace

TEST_CASE("pair correlations of the constant sequence") {
  std::vector<cplx> a(400, cplx{1.0, 0.0});
  const PairCorrelationReport rep = pair_correlations(a, 10);
  REQUIRE_FALSE(rep.entries.empty());
  for (const auto& [pq, v] : rep.entries) {
    CHECK(pq.first < pq.second);
    CHECK(pq.second < 10);
    CHECK(is_prime_u64(static_cast<u64>(pq.first)));
    CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK(rep.max_entry == doctest::Approx(1.0));
  CHECK(rep.entries.count({2, 3}) == 1);
  CHECK(rep.entries.count({3, 5}) == 1);
  CHECK(rep.entries.count({4, 5}) == 0);
}

TEST_CASE("pair correlations detect a periodic phase") {
  // a(n) = e(n/3): a(pn) conj(a(qn)) = e(n(p - q)/3), full size when 3 | p - q
  const i64 N = 900;
  std::vector<cplx> a(N);
  for (i64 n = 1; n <= N; ++n) a[n - 1] = e(static_cast<double>(n) / 3.0);
  const PairCorrelationReport rep = pair_correlations(a, 10);
  CHECK(rep.entries.at({2, 5}) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(rep.entries.at({2, 3}) < 0.35);
  CHECK(rep.entries.at({2, 7}) < 0.35);
}

TEST_CASE("pair correlations input validation") {
  std::vector<cplx> a(8, cplx{1.0, 0.0});
  CHECK_THROWS(pair_correlations(a, 10));  // N < K^2
  CHECK_THROWS(pair_correlations(a, 2));   // K must be at least 3
}

TEST_CASE("multiplicative correlation sup") {
  arith::FactorSieve sieve(500);
  const auto lam = table_of(arith::MultiplicativeSpec::liouville(), 500, sieve);
  const std::vector<arith::MultiplicativeSpec> family{arith::MultiplicativeSpec::liouville(),
                                                      arith::MultiplicativeSpec::moebius()};
  // correlating liouville against itself gives exactly 1
  CHECK(mult_correlation_sup(lam, family, sieve) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS(mult_correlation_sup(lam, {}, sieve));
}

TEST_CASE("tk statistics in the Gaussian integers") {
  const auto P = quadfield::prime_elements(1, 50);
  REQUIRE_FALSE(P.empty());
  const TkStatistics st = tk_statistics(1, P, 400);
  double a = 0.0;
  for (const auto& p : P) a += 1.0 / static_cast<double>(quadfield::norm(p.z));
  CHECK(st.A == doctest::Approx(a).epsilon(1e-12));
  CHECK(st.count > 0);
  CHECK(st.mean_deviation >= 0.0);
  CHECK(st.mean_deviation <= 3.0 * std::sqrt(st.A) + 0.5);  // concentration sanity bound
}

TEST_CASE("omega counts distinct prime divisors from P only") {
  // P = {1+i}: omega(z) is 1 exactly when 1+i divides z, so the mean deviation
  // is 2 p (1 - p) with p the divisibility density, and A = 1/2.
  std::vector<quadfield::PrimeElement> P{{quadfield::canonical_associate({1, 1, 1}), true, true}};
  const TkStatistics st = tk_statistics(1, P, 1000);
  CHECK(st.A == doctest::Approx(0.5));
  i64 div = 0, tot = 0;
  for (const auto& z : quadfield::enumerate_ball_norm(1, 1000)) {
    if (z.is_zero()) continue;
    ++tot;
    if (quadfield::divides({1, 1, 1}, z)) ++div;
  }
  CHECK(st.count == tot);
  const double p = static_cast<double>(div) / static_cast<double>(tot);
  CHECK(st.mean_deviation == doctest::Approx(p * 0.5 + (1.0 - p) * 0.5).epsilon(1e-12));
}

TEST_CASE("ring orthogonality sums for the trivial function") {
  arith::FactorSieve sieve(5000);
  const auto P = quadfield::prime_elements(1, 20);
  NormPullback one{arith::MultiplicativeSpec::principal(), 1};
  const auto h = [](const quadfield::QuadInt&) { return cplx{1.0, 0.0}; };
  const i64 x = 2000;
  const KataiZdSums sums = katai_zd_sums(1, one, h, P, x, sieve);
  i64 count = 0;
  for (const auto& z : quadfield::enumerate_ball_norm(1, x))
    if (!z.is_zero()) ++count;
  CHECK(sums.S.real() == doctest::Approx(static_cast<double>(count)).epsilon(1e-12));
  CHECK(sums.S.imag() == doctest::Approx(0.0));
  // f identically 1 makes every pair sum a positive count
  CHECK(sums.C > 0.0);
}

TEST_CASE("single-element P has no pair terms") {
  arith::FactorSieve sieve(2000);
  std::vector<quadfield::PrimeElement> P{{quadfield::canonical_associate({2, 1, 1}), true, false}};
  NormPullback f{arith::MultiplicativeSpec::liouville(), 1};
  const auto h = [](const quadfield::QuadInt&) { return cplx{1.0, 0.0}; };
  const KataiZdSums sums = katai_zd_sums(1, f, h, P, 600, sieve);
  CHECK(sums.C == 0.0);
}
