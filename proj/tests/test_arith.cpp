#include <doctest.h>

#include <numeric>

#include "hofa/arith.hpp"

using namespace hofa;
using namespace hofa::arith;

TEST_CASE("sieve factors correctly") {
  const FactorSieve sieve(1000);
  CHECK(sieve.is_prime(2));
  CHECK(sieve.is_prime(997));
  CHECK_FALSE(sieve.is_prime(1));
  CHECK_FALSE(sieve.is_prime(999));
  const auto f = sieve.factor(360);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::pair<i64, int>{2, 3});
  CHECK(f[1] == std::pair<i64, int>{3, 2});
  CHECK(f[2] == std::pair<i64, int>{5, 1});
  CHECK(sieve.primes_upto(10) == std::vector<i64>{2, 3, 5, 7});
}

TEST_CASE("liouville and moebius basics") {
  const FactorSieve sieve(100);
  const auto lam = MultiplicativeSpec::liouville();
  const auto mu = MultiplicativeSpec::moebius();
  // lambda: completely multiplicative sign of Omega(n)
  CHECK(lam.evaluate(1, sieve).real() == 1.0);
  CHECK(lam.evaluate(2, sieve).real() == -1.0);
  CHECK(lam.evaluate(4, sieve).real() == 1.0);
  CHECK(lam.evaluate(12, sieve).real() == -1.0);
  // mu vanishes on squares
  CHECK(mu.evaluate(4, sieve).real() == 0.0);
  CHECK(mu.evaluate(6, sieve).real() == 1.0);
  CHECK(mu.evaluate(30, sieve).real() == -1.0);
  // even extension
  CHECK(lam.evaluate(0, sieve) == cplx{0.0, 0.0});
  CHECK(lam.evaluate(-2, sieve).real() == -1.0);
}

TEST_CASE("dirichlet characters") {
  const FactorSieve sieve(1000);
  for (i64 q : {3, 4, 5, 7, 12}) {
    const i64 phi = [&] {
      i64 c = 0;
      for (i64 n = 1; n <= q; ++n) {
        if (std::gcd(n, q) == 1) ++c;
      }
      return c;
    }();
    for (i64 idx = 0; idx < phi; ++idx) {
      const DirichletCharacter chi(q, idx);
      // periodicity, support, complete multiplicativity
      for (i64 n = 1; n <= 3 * q; ++n) {
        CHECK(std::abs(chi(n) - chi(n + q)) < 1e-12);
        if (std::gcd(n, q) != 1) {
          CHECK(std::abs(chi(n)) < 1e-12);
        } else {
          CHECK(std::abs(std::abs(chi(n)) - 1.0) < 1e-12);
        }
      }
      for (i64 m = 1; m <= 2 * q; ++m) {
        for (i64 n = 1; n <= 2 * q; ++n) {
          CHECK(std::abs(chi(m * n) - chi(m) * chi(n)) < 1e-11);
        }
      }
      // orthogonality: sum over a period is 0 unless principal
      cplx sum{0.0, 0.0};
      for (i64 n = 1; n <= q; ++n) sum += chi(n);
      if (idx == 0) {
        CHECK(std::abs(sum.real() - static_cast<double>(phi)) < 1e-9);
      } else {
        CHECK(std::abs(sum) < 1e-9);
      }
    }
  }
  // distinct characters mod q are orthogonal
  const DirichletCharacter a(5, 1), b(5, 2);
  cplx inner{0.0, 0.0};
  for (i64 n = 1; n <= 5; ++n) inner += a(n) * std::conj(b(n));
  CHECK(std::abs(inner) < 1e-9);
}

TEST_CASE("two squares sign") {
  const FactorSieve sieve(20000);
  const auto f = MultiplicativeSpec::two_squares_sign();
  CHECK(f.evaluate(3, sieve).real() == -1.0);
  CHECK(f.evaluate(9, sieve).real() == 1.0);
  CHECK(f.evaluate(2, sieve).real() == 1.0);
  CHECK(f.evaluate(5, sieve).real() == 1.0);
  for (i64 m = 1; m <= 100; ++m) {
    for (i64 n = 0; n <= 100; ++n) {
      CHECK(f.evaluate(m * m + n * n, sieve).real() == 1.0);
    }
  }
}

TEST_CASE("archimedean twist stays on the unit circle") {
  const FactorSieve sieve(100);
  const auto f = MultiplicativeSpec::archimedean(1.0);
  for (i64 n = 1; n <= 100; ++n) {
    CHECK(std::abs(std::abs(f.evaluate(n, sieve)) - 1.0) < 1e-12);
  }
  CHECK(std::abs(f.evaluate(6, sieve) - f.evaluate(2, sieve) * f.evaluate(3, sieve)) < 1e-12);
}

TEST_CASE("evaluate_power factors the base once") {
  const FactorSieve sieve(5000);
  const auto lam = MultiplicativeSpec::liouville();
  // lambda(n^2) = 1 always
  for (i64 n = 1; n <= 70; ++n) CHECK(lam.evaluate_power(n, 2, sieve).real() == 1.0);
  // lambda(n^3) = lambda(n)
  for (i64 n = 1; n <= 70; ++n) {
    CHECK(lam.evaluate_power(n, 3, sieve).real() == lam.evaluate(n, sieve).real());
  }
  CHECK(lam.evaluate_power(0, 5, sieve) == cplx{0.0, 0.0});
  CHECK(lam.evaluate_power(7, 0, sieve).real() == 1.0);
}

TEST_CASE("spec parsing round trip") {
  const FactorSieve sieve(100);
  for (const char* text : {"liouville", "moebius", "principal", "twosquares", "f2neg", "char:q=5,index=1", "nit:t=0.5"}) {
    const auto spec = MultiplicativeSpec::parse(text);
    for (i64 n = 1; n <= 50; ++n) CHECK(std::abs(spec.evaluate(n, sieve)) < 1.0 + 1e-12);
  }
  CHECK_THROWS(MultiplicativeSpec::parse("no-such-spec"));
}

TEST_CASE("tabulate and progression mean") {
  const FactorSieve sieve(100);
  const auto table = tabulate(MultiplicativeSpec::principal(), 100, sieve);
  CHECK(table.N() == 100);
  CHECK(std::abs(progression_mean(table, 1, 0) - cplx{1.0, 0.0}) < 1e-12);
  CHECK(std::abs(progression_mean(table, 3, 1) - cplx{1.0, 0.0}) < 1e-12);
  const auto lam = tabulate(MultiplicativeSpec::liouville(), 100, sieve, true);
  CHECK(lam.at(-4) == lam.at(4));  // even extension
}
