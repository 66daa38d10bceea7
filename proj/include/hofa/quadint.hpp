#pragma once

#include <optional>

#include "hofa/common.hpp"

namespace hofa::quadfield {

/// m + n*tau_d in Z[tau_d], where tau_d = (1+sqrt(-d))/2 when d = 3 mod 4 and
/// sqrt(-d) otherwise. Exact 64-bit arithmetic with 128-bit intermediates.
struct QuadInt {
  i64 m = 0;
  i64 n = 0;
  i64 d = 1;

  bool operator==(const QuadInt&) const = default;
  bool is_zero() const { return m == 0 && n == 0; }
  bool is_integer() const { return n == 0; }
};

i64 norm(const QuadInt& z);
/// Q_d(m, n) without building a QuadInt.
i64 norm_form(i64 d, i64 m, i64 n);
QuadInt multiply(const QuadInt& z, const QuadInt& w);
QuadInt conjugate(const QuadInt& z);
QuadInt negate(const QuadInt& z);
QuadInt add(const QuadInt& z, const QuadInt& w);

/// Exact ring division: quotient when alpha | z, nullopt otherwise.
std::optional<QuadInt> exact_divide(const QuadInt& alpha, const QuadInt& z);
bool divides(const QuadInt& alpha, const QuadInt& z);

/// All solutions of Q_d(m, n) = 1; count is 2, 4 (d = 1) or 6 (d = 3).
std::vector<QuadInt> units(i64 d);

/// All (m, n) with Q_d(m, n) <= normBound, deterministic order.
std::vector<QuadInt> enumerate_ball_norm(i64 d, i64 norm_bound);
/// B_N = {(m, n) : Q_d(m, n) <= N^2}.
std::vector<QuadInt> enumerate_ball(i64 N, i64 d);

struct PrimeElement {
  QuadInt z;
  bool canonical = true;
  bool ramified = false;  // z associate to its conjugate
};

/// Canonical representative of the unit orbit of z: among unit multiples
/// satisfying (m > 0) or (m = 0 and n > 0), the lexicographically least (m, n).
QuadInt canonical_associate(const QuadInt& z);

/// Canonical, associate-free non-integer prime elements with prime norm
/// <= normLimit; conjugates listed separately unless ramified.
std::vector<PrimeElement> prime_elements(i64 d, i64 norm_limit);

/// prime_elements minus ramified elements and divisors of any zeta.
std::vector<PrimeElement> build_P(i64 d, const std::vector<QuadInt>& zetas, i64 norm_limit);

/// zeta for the linear form kappa*m + lambda*n, so that
/// L(m, n) = Im(zeta (m + n tau_d)) / Im(tau_d): 2(lambda - kappa + kappa tau_d)
/// when d = 3 mod 4, else lambda + kappa tau_d.
QuadInt zeta_for_form(i64 d, i64 kappa, i64 lambda);

/// Exact integer identity check: Im(zeta z) / Im(tau) component equals
/// kappa*m + lambda*n for z = m + n tau_d. Returns the linear-form value.
i64 imag_part_scaled(const QuadInt& w);  // Im(w) / Im(tau_d), exact when defined

}  // namespace hofa::quadfield
