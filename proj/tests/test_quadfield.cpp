#include <doctest.h>

#include <algorithm>
#include <set>

#include "hofa/quadint.hpp"

using namespace hofa;
using namespace hofa::quadfield;

TEST_CASE("norm forms per residue class of d") {
  CHECK(norm({3, 4, 1}) == 25);        // 3 + 4i -> 9 + 16
  CHECK(norm({1, 2, 2}) == 9);         // 1 + 2*sqrt(-2) -> 1 + 2*4
  CHECK(norm({2, 3, 3}) == 19);        // d = 3 mod 4: m^2 + mn + n^2
  CHECK(norm({1, 1, 7}) == 4);         // 1 + 1 + 2
  CHECK(norm_form(3, 2, 3) == 19);
  CHECK(norm_form(1, -3, 4) == 25);
}

TEST_CASE("ring arithmetic identities") {
  const QuadInt a{2, 1, 1}, b{2, -1, 1};
  const QuadInt p = multiply(a, b);
  CHECK(p == QuadInt{5, 0, 1});  // (2+i)(2-i) = 5
  // norm is multiplicative in every discriminant
  for (i64 d : {1, 2, 3, 5, 7, 11}) {
    const QuadInt z{3, -2, d}, w{-1, 4, d};
    CHECK(norm(multiply(z, w)) == norm(z) * norm(w));
    CHECK(norm(conjugate(z)) == norm(z));
    CHECK(multiply(z, conjugate(z)) == QuadInt{norm(z), 0, d});
    CHECK(add(z, negate(z)).is_zero());
    // associativity and commutativity spot checks
    const QuadInt u{0, 1, d};
    CHECK(multiply(multiply(z, w), u) == multiply(z, multiply(w, u)));
    CHECK(multiply(z, w) == multiply(w, z));
  }
}

TEST_CASE("conjugation respects the residue class") {
  CHECK(conjugate({2, 5, 1}) == QuadInt{2, -5, 1});
  CHECK(conjugate({2, 5, 3}) == QuadInt{7, -5, 3});  // (m + n, -n) when d = 3 mod 4
}

TEST_CASE("exact division") {
  const QuadInt five{5, 0, 1};
  const auto q = exact_divide({2, 1, 1}, five);
  REQUIRE(q.has_value());
  CHECK(*q == QuadInt{2, -1, 1});
  CHECK(divides({2, 1, 1}, five));
  CHECK_FALSE(divides({2, 1, 1}, {3, 0, 1}));
  CHECK_FALSE(exact_divide({1, 1, 1}, {1, 0, 1}).has_value());
  // d = 3 mod 4 case: (1 + tau)(2 - tau) in Z[omega]
  const QuadInt z = multiply({1, 1, 3}, {2, -1, 3});
  const auto q3 = exact_divide({1, 1, 3}, z);
  REQUIRE(q3.has_value());
  CHECK(*q3 == QuadInt{2, -1, 3});
}

TEST_CASE("unit groups") {
  CHECK(units(1).size() == 4);
  CHECK(units(3).size() == 6);
  CHECK(units(5).size() == 2);
  CHECK(units(7).size() == 2);
  for (i64 d : {1, 2, 3, 5, 7}) {
    for (const QuadInt& u : units(d)) CHECK(norm(u) == 1);
  }
}

TEST_CASE("ball enumeration") {
  const auto b1 = enumerate_ball(1, 1);  // Q_1 <= 1: 0 and the four units
  CHECK(b1.size() == 5);
  std::set<std::pair<i64, i64>> pts;
  for (const auto& z : b1) pts.insert({z.m, z.n});
  CHECK(pts.count({0, 0}) == 1);
  CHECK(pts.count({1, 0}) == 1);
  CHECK(pts.count({0, -1}) == 1);

  for (i64 d : {1, 2, 3, 7, 11}) {
    const auto ball = enumerate_ball_norm(d, 50);
    for (const auto& z : ball) CHECK(norm(z) <= 50);
    // completeness against a brute-force rectangle
    std::size_t count = 0;
    for (i64 m = -60; m <= 60; ++m)
      for (i64 n = -60; n <= 60; ++n)
        if (norm_form(d, m, n) <= 50) ++count;
    CHECK(ball.size() == count);
    // deterministic order, no repeats
    auto sorted = ball;
    std::sort(sorted.begin(), sorted.end(),
              [](const QuadInt& a, const QuadInt& b) { return std::tie(a.n, a.m) < std::tie(b.n, b.m); });
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
  }
}

TEST_CASE("canonical associates") {
  for (i64 d : {1, 3, 7}) {
    const QuadInt z{2, -3, d};
    const QuadInt c = canonical_associate(z);
    // canonical rep is a unit multiple and is idempotent
    bool found = false;
    for (const QuadInt& u : units(d))
      if (multiply(u, z) == c) found = true;
    CHECK(found);
    CHECK(canonical_associate(c) == c);
    for (const QuadInt& u : units(d)) CHECK(canonical_associate(multiply(u, z)) == c);
  }
}

TEST_CASE("prime elements in the Gaussian integers") {
  const auto primes = prime_elements(1, 5);
  // norms 2 and 5: 1+i (ramified), 2+i and 2-i (split pair); nothing of norm 3
  REQUIRE(primes.size() == 3);
  CHECK(norm(primes[0].z) == 2);
  CHECK(primes[0].ramified);
  CHECK(norm(primes[1].z) == 5);
  CHECK(norm(primes[2].z) == 5);
  CHECK_FALSE(primes[1].ramified);
  CHECK(canonical_associate(conjugate(primes[1].z)) == primes[2].z);
  for (const auto& p : prime_elements(1, 100)) {
    CHECK(is_prime_u64(static_cast<u64>(norm(p.z))));
    CHECK(norm(p.z) % 4 != 3);  // inert rational primes are excluded
    CHECK_FALSE(p.z.is_integer());
  }
}

TEST_CASE("prime elements in the Eisenstein integers") {
  for (const auto& p : prime_elements(3, 100)) {
    CHECK(is_prime_u64(static_cast<u64>(norm(p.z))));
    const i64 q = norm(p.z);
    CHECK((q == 3 || q % 3 == 1));
    CHECK(p.ramified == (q == 3));
  }
}

TEST_CASE("build_P drops ramified primes and zeta divisors") {
  const std::vector<QuadInt> zetas{{2, 1, 1}};  // zeta = 2 + i
  const auto P = build_P(1, zetas, 5);
  REQUIRE(P.size() == 1);
  CHECK(P[0].z == canonical_associate({2, -1, 1}));  // conjugate survives
  for (const auto& p : P) CHECK_FALSE(p.ramified);
}

TEST_CASE("zeta reproduces the linear form exactly") {
  for (i64 d : {1, 2, 3, 7, 11}) {
    for (i64 kappa = -3; kappa <= 3; ++kappa) {
      for (i64 lambda = -3; lambda <= 3; ++lambda) {
        const QuadInt zeta = zeta_for_form(d, kappa, lambda);
        for (const QuadInt& z : enumerate_ball_norm(d, 30)) {
          CHECK(imag_part_scaled(multiply(zeta, z)) == kappa * z.m + lambda * z.n);
        }
      }
    }
  }
}

TEST_CASE("imag_part_scaled on integers vanishes") {
  CHECK(imag_part_scaled({7, 0, 1}) == 0);
  CHECK(imag_part_scaled({7, 0, 3}) == 0);
  CHECK(imag_part_scaled({0, 2, 5}) == 2);
}
