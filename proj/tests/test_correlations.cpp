#include <doctest.h>

#include <random>

#include "hofa/correlations.hpp"
#include "hofa/structure.hpp"

using namespace hofa;
using namespace hofa::correlations;

TEST_CASE("linear form independence") {
  LinearFormSet forms{{{1, 0}, {0, 1}, {1, 1}}};
  CHECK(forms.pairwise_independent());
  const auto m = forms.independence_matrix();
  CHECK(m[0][1] == 1);
  CHECK(m[1][0] == -1);
  CHECK(m[0][2] == 1);
  LinearFormSet dep{{{1, 1}, {2, 2}}};
  CHECK_FALSE(dep.pairwise_independent());
}

TEST_CASE("chowla average of the principal function is one") {
  arith::FactorSieve sieve(quadfield::norm_form(1, 40, 40) + 1);
  LinearFormSet forms{{{1, 0}, {0, 1}}};
  const cplx avg = chowla_average(arith::MultiplicativeSpec::principal(), 1, {}, 1, forms, 40,
                                  Region::square(), sieve);
  CHECK(avg.real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(avg.imag() == doctest::Approx(0.0));
}

TEST_CASE("chowla average with no forms is the mean of f(Q^r)") {
  arith::FactorSieve sieve(quadfield::norm_form(1, 30, 30) + 1);
  const auto lam = arith::MultiplicativeSpec::liouville();
  const cplx avg = chowla_average(lam, 1, {}, 1, LinearFormSet{}, 30, Region::square(), sieve);
  cplx direct{0.0, 0.0};
  for (i64 m = 1; m <= 30; ++m) {
    for (i64 n = 1; n <= 30; ++n) direct += lam.evaluate(quadfield::norm_form(1, m, n), sieve);
  }
  direct /= 900.0;
  CHECK(std::abs(avg - direct) < 1e-12);
}

TEST_CASE("chowla regions and unimodular changes") {
  arith::FactorSieve sieve(quadfield::norm_form(1, 64, 64) + 1);
  const auto lam = arith::MultiplicativeSpec::liouville();
  LinearFormSet forms{{{1, 0}}};
  // rectangle {1..w} x {1..h} reduces to the square when w = h = N
  const cplx sq = chowla_average(lam, 1, {}, 1, forms, 20, Region::square(), sieve);
  const cplx rect = chowla_average(lam, 1, {}, 1, forms, 20, Region::rectangle(20, 20), sieve);
  CHECK(std::abs(sq - rect) < 1e-12);
  // the norm ball with identity change hits exactly Q_d(m,n) <= N^2
  const cplx ball = chowla_average(lam, 1, {}, 1, forms, 12, Region::norm_ball(), sieve);
  cplx direct{0.0, 0.0};
  i64 count = 0;
  for (const auto& z : quadfield::enumerate_ball(12, 1)) {
    ++count;
    const cplx fq = lam.evaluate(quadfield::norm(z), sieve);
    direct += fq * lam.evaluate(z.m, sieve);
  }
  direct /= static_cast<double>(count);
  CHECK(std::abs(ball - direct) < 1e-12);
}

TEST_CASE("unimodular determinant guard") {
  arith::FactorSieve sieve(5000);
  LinearFormSet forms{{{1, 0}}};
  Unimodular bad{2, 0, 0, 1};
  CHECK_THROWS(chowla_average(arith::MultiplicativeSpec::liouville(), 1, bad, 1, forms, 10,
                              Region::norm_ball(), sieve));
}

TEST_CASE("linear forms average of all ones") {
  const i64 N = 40;
  const std::vector<i64> shifts{0, 1, 2};
  const i64 ntilde = structure::default_ntilde(3 * N);
  std::vector<std::vector<cplx>> tables(3, std::vector<cplx>(ntilde, cplx{1.0, 0.0}));
  const cplx avg = linear_forms_average(tables, shifts, N, ntilde);
  // only the 1_[N](n) cutoff survives: N/Ntilde
  CHECK(avg.real() == doctest::Approx(static_cast<double>(N) / static_cast<double>(ntilde)).epsilon(1e-12));
}

TEST_CASE("linear forms average matches a direct double sum") {
  const i64 N = 12;
  const std::vector<i64> shifts{0, 2};
  const i64 ntilde = structure::default_ntilde(2 * 2 * N);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<std::vector<cplx>> tables(2, std::vector<cplx>(ntilde));
  for (auto& t : tables)
    for (auto& v : t) v = {u(rng), u(rng)};
  const cplx avg = linear_forms_average(tables, shifts, N, ntilde);
  cplx direct{0.0, 0.0};
  for (i64 m = 0; m < ntilde; ++m) {
    for (i64 n = 1; n <= N; ++n) {
      cplx term{1.0, 0.0};
      for (std::size_t j = 0; j < shifts.size(); ++j) {
        i64 idx = (m + shifts[j] * n) % ntilde;
        term *= tables[j][idx];
      }
      direct += term;
    }
  }
  direct /= static_cast<double>(ntilde) * static_cast<double>(ntilde);
  CHECK(std::abs(avg - direct) < 1e-10);
}

TEST_CASE("linear forms average validation") {
  std::vector<std::vector<cplx>> tables(2, std::vector<cplx>(101, cplx{1.0, 0.0}));
  CHECK_THROWS(linear_forms_average(tables, {0, 1}, 100, 101));  // Ntilde too small
  CHECK_THROWS(linear_forms_average(tables, {0}, 10, 101));      // count mismatch
}

TEST_CASE("symmetries of the linear forms average") {
  const i64 N = 15;
  const i64 ntilde = structure::default_ntilde(2 * 2 * N);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cplx> a(ntilde), b(ntilde);
  for (auto& v : a) v = {u(rng), u(rng)};
  for (auto& v : b) v = {u(rng), u(rng)};
  // reordering the slots (with their shifts) leaves the average fixed
  const cplx ab = linear_forms_average({a, b}, {0, 1}, N, ntilde);
  const cplx ba = linear_forms_average({b, a}, {1, 0}, N, ntilde);
  CHECK(std::abs(ab - ba) < 1e-10);
  // conjugating every table conjugates the average
  std::vector<cplx> ac(ntilde), bc(ntilde);
  for (i64 x = 0; x < ntilde; ++x) {
    ac[x] = std::conj(a[x]);
    bc[x] = std::conj(b[x]);
  }
  const cplx conj_avg = linear_forms_average({ac, bc}, {0, 1}, N, ntilde);
  CHECK(std::abs(conj_avg - std::conj(ab)) < 1e-10);
  // a modulation e(beta m) common to the m-variable rotates nothing when beta = 0
  // but shifts the spectrum otherwise; check the exact absorption identity
  // a(x) -> a(x) e(x k / Ntilde) multiplies the (m, n) term by e((m + 0n) k / Ntilde)
  std::vector<cplx> at(ntilde);
  const i64 k = 7;
  for (i64 x = 0; x < ntilde; ++x) at[x] = a[x] * e(static_cast<double>(k * x) / static_cast<double>(ntilde));
  std::vector<cplx> btc(ntilde);
  for (i64 x = 0; x < ntilde; ++x) btc[x] = b[x] * e(-static_cast<double>(k * x) / static_cast<double>(ntilde));
  // shifts {0, 0}: the twists cancel pointwise, so the average is unchanged
  const cplx plain = linear_forms_average({a, b}, {0, 0}, N, ntilde);
  const cplx twisted = linear_forms_average({at, btc}, {0, 0}, N, ntilde);
  CHECK(std::abs(plain - twisted) < 1e-10);
}

TEST_CASE("uniformity bound report") {
  const i64 N = 30;
  const i64 ntilde = structure::default_ntilde(2 * 2 * N);
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<std::vector<cplx>> tables(2, std::vector<cplx>(ntilde));
  for (auto& t : tables)
    for (auto& v : t) v = {u(rng), u(rng)};
  const UniformityBoundReport rep = uniformity_bound_report(tables, {0, 2}, N, ntilde, 3);
  CHECK(rep.lhs == doctest::Approx(std::abs(rep.average)).epsilon(1e-12));
  CHECK(rep.min_norm >= 0.0);
  if (!rep.min_norm_degenerate) {
    CHECK(rep.implied_c == doctest::Approx((rep.lhs - 2.0 / static_cast<double>(ntilde)) /
                                           std::sqrt(rep.min_norm)).epsilon(1e-9));
  }
}

TEST_CASE("quadratic phase correlation picks out its own frequency") {
  const i64 ntilde = 1009;
  const double alpha = 0.30752;
  std::vector<cplx> fun(ntilde, cplx{0.0, 0.0});
  const i64 N = 400;
  for (i64 n = 0; n < N; ++n) fun[n] = e(-alpha * static_cast<double>(n) * static_cast<double>(n));
  CHECK(quad_phase_correlation(fun, alpha) ==
        doctest::Approx(static_cast<double>(N) / static_cast<double>(ntilde)).epsilon(1e-9));
  // a far-off frequency sees square-root cancellation
  CHECK(quad_phase_correlation(fun, 0.011) < 0.08);
}
