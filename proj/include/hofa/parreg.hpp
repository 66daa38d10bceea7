#pragma once

#include <array>
#include <functional>

#include "hofa/common.hpp"

namespace hofa::parreg {

/// p(x,y,z) = ax^2 + by^2 + cz^2 + dxy + exz + fyz.
struct QuadraticForm3 {
  i64 a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;

  i128 eval(i128 x, i128 y, i128 z) const {
    return i128(a) * x * x + i128(b) * y * y + i128(c) * z * z + i128(d) * x * y + i128(e) * x * z + i128(f) * y * z;
  }
};

/// x = k*ell0*(m+ell1*n)(m+ell2*n), y = signY*k*ell0*(m+ell3*n)(m+ell4*n),
/// lambda = k*(A m^2 + B mn + C n^2) with lambdaPoly = (A, B, C).
struct ParamFamily {
  i64 ell0 = 1, ell1 = 0, ell2 = 0, ell3 = 0, ell4 = 0;
  int sign_y = 1;
  std::array<i64, 3> lambda_poly{0, 0, 0};
  QuadraticForm3 source_form;

  bool admissible() const;
  i128 x_at(i64 k, i64 m, i64 n) const;
  i128 y_at(i64 k, i64 m, i64 n) const;
  i128 lambda_at(i64 k, i64 m, i64 n) const;
};

struct Discriminants {
  i64 d1 = 0, d2 = 0, d3 = 0;
};

/// Delta_1 = e^2-4ac, Delta_2 = f^2-4bc, Delta_3 = (e+f)^2-4c(a+b+d).
Discriminants discriminants(const QuadraticForm3& form);

/// a, b, c nonzero and all three discriminants nonzero perfect squares.
bool is_eligible(const QuadraticForm3& form);

/// Parametric solution family for an eligible form; grid-verified before
/// return (radius 4 certifies the polynomial identity by degree count).
ParamFamily parametrize(const QuadraticForm3& form);

struct VerifyResult {
  bool ok = true;
  i64 k = 0, m = 0, n = 0;      // witness when !ok
  double residual = 0.0;        // approximate p-value at the witness
};

/// Exact 128-bit check that fn(k,m,n) == 0 on |k|,|m|,|n| <= gridRadius.
VerifyResult verify_zero(const std::function<i128(i64, i64, i64)>& fn, i64 grid_radius);

/// p(x,y,lambda) == 0 on the grid for an explicit polynomial triple.
VerifyResult verify_triple(const QuadraticForm3& form, const std::function<i128(i64, i64, i64)>& x,
                           const std::function<i128(i64, i64, i64)>& y,
                           const std::function<i128(i64, i64, i64)>& lambda, i64 grid_radius);

VerifyResult verify_family(const QuadraticForm3& form, const ParamFamily& family, i64 grid_radius);

/// Divisors of (p_1 ... p_M)^M, sorted; |result| = (M+1)^M. Values are exact
/// 128-bit; M >= 9 exceeds the size limit (and M >= 7 overflows 128 bits).
std::vector<i128> folner_set(i64 M);

/// |{n in Phi_M : predicate(n)}| / |Phi_M|.
double mult_density(const std::function<bool(i128)>& predicate, i64 M);

struct MonochromaticHit {
  i64 x = 0, y = 0, lambda = 0, cell = 0;
};

/// All ordered pairs x != y <= bound in a common cell admitting an integer
/// lambda >= 0 with p(x,y,lambda) = 0; exact square-root solve in lambda.
std::vector<MonochromaticHit> search_monochromatic(const std::function<i64(i64)>& cells, const QuadraticForm3& form,
                                                   i64 bound);

/// Least-significant nonzero base-7 digit (cells 1..6).
i64 base7_cell(i64 n);

}  // namespace hofa::parreg
