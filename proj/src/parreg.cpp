#include "hofa/parreg.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace hofa::parreg {

bool ParamFamily::admissible() const {
  if (ell0 <= 0 || ell1 == ell2 || ell3 == ell4) return false;
  const std::pair<i64, i64> p12 = std::minmax(ell1, ell2);
  const std::pair<i64, i64> p34 = std::minmax(ell3, ell4);
  return p12 != p34;
}

i128 ParamFamily::x_at(i64 k, i64 m, i64 n) const {
  return i128(k) * ell0 * (i128(m) + i128(ell1) * n) * (i128(m) + i128(ell2) * n);
}

i128 ParamFamily::y_at(i64 k, i64 m, i64 n) const {
  return i128(sign_y) * k * ell0 * (i128(m) + i128(ell3) * n) * (i128(m) + i128(ell4) * n);
}

i128 ParamFamily::lambda_at(i64 k, i64 m, i64 n) const {
  return i128(k) * (i128(lambda_poly[0]) * m * m + i128(lambda_poly[1]) * m * n + i128(lambda_poly[2]) * n * n);
}

Discriminants discriminants(const QuadraticForm3& form) {
  Discriminants out;
  out.d1 = checked_add(checked_mul(form.e, form.e), -checked_mul(4, checked_mul(form.a, form.c)));
  out.d2 = checked_add(checked_mul(form.f, form.f), -checked_mul(4, checked_mul(form.b, form.c)));
  const i64 ef = checked_add(form.e, form.f);
  const i64 abd = checked_add(checked_add(form.a, form.b), form.d);
  out.d3 = checked_add(checked_mul(ef, ef), -checked_mul(4, checked_mul(form.c, abd)));
  return out;
}

bool is_eligible(const QuadraticForm3& form) {
  if (form.a == 0 || form.b == 0 || form.c == 0) return false;
  const Discriminants d = discriminants(form);
  for (i64 delta : {d.d1, d.d2, d.d3}) {
    if (delta <= 0 || perfect_sqrt(delta) < 0) return false;
  }
  return true;
}

namespace {

/// e = f = 0 case: closed forms for p = ax^2 + by^2 + cz^2 + dxy with
/// -ac, -bc, -c(a+b+d) nonzero squares. Handles a < 0 by solving -p = 0.
ParamFamily step2(i64 a, i64 b, i64 c, i64 d) {
  if (a < 0) {
    a = -a;
    b = -b;
    c = -c;
    d = -d;
  }
  const i64 S = checked_add(checked_add(a, b), d);
  const i64 d1p = perfect_sqrt(checked_mul(b, S));
  const i64 d2p = perfect_sqrt(checked_mul(a, S));
  const i64 d3p = perfect_sqrt(checked_mul(-c, S));
  if (d1p <= 0 || d2p <= 0 || d3p <= 0) {
    throw std::logic_error("parametrize: eligibility did not yield square products");
  }
  ParamFamily fam;
  fam.ell0 = -c;
  fam.ell1 = -(b + d1p);
  fam.ell2 = -(b - d1p);
  fam.ell3 = a + d + d2p;
  fam.ell4 = a + d - d2p;
  fam.sign_y = 1;
  fam.lambda_poly = {d3p, checked_mul(d, d3p), checked_mul(checked_mul(a, b), d3p)};
  return fam;
}

}  // namespace

ParamFamily parametrize(const QuadraticForm3& form) {
  if (!is_eligible(form)) throw std::invalid_argument("parametrize: form is not eligible");

  ParamFamily fam;
  if (form.e == 0 && form.f == 0) {
    fam = step2(form.a, form.b, form.c, form.d);
  } else {
    // Reduce via p'(x,y,z) = p(2cx, 2cy, z-ex-fy), which has e' = f' = 0.
    const i64 c = form.c;
    const i64 a2 = checked_mul(c, checked_add(checked_mul(4, checked_mul(form.a, c)), -checked_mul(form.e, form.e)));
    const i64 b2 = checked_mul(c, checked_add(checked_mul(4, checked_mul(form.b, c)), -checked_mul(form.f, form.f)));
    const i64 d2 = checked_mul(2 * c, checked_add(checked_mul(2, checked_mul(c, form.d)), -checked_mul(form.e, form.f)));
    const ParamFamily inner = step2(a2, b2, c, d2);
    // x = 2c x', y = 2c y', z = z' - e x' - f y', all negated when c < 0.
    const i64 sigma = c > 0 ? 1 : -1;
    fam.ell0 = checked_mul(2 * sigma * c, inner.ell0);
    fam.ell1 = inner.ell1;
    fam.ell2 = inner.ell2;
    fam.ell3 = inner.ell3;
    fam.ell4 = inner.ell4;
    fam.sign_y = inner.sign_y;
    const i64 l0 = inner.ell0;
    const i64 sy = inner.sign_y;
    fam.lambda_poly = {
        checked_mul(sigma, inner.lambda_poly[0] - checked_mul(form.e, l0) - checked_mul(form.f, checked_mul(sy, l0))),
        checked_mul(sigma, inner.lambda_poly[1] - checked_mul(form.e, checked_mul(l0, inner.ell1 + inner.ell2)) -
                               checked_mul(form.f, checked_mul(sy, checked_mul(l0, inner.ell3 + inner.ell4)))),
        checked_mul(sigma, inner.lambda_poly[2] - checked_mul(form.e, checked_mul(l0, checked_mul(inner.ell1, inner.ell2))) -
                               checked_mul(form.f, checked_mul(sy, checked_mul(l0, checked_mul(inner.ell3, inner.ell4))))),
    };
  }
  fam.source_form = form;
  if (!fam.admissible()) throw std::logic_error("parametrize: produced family is not admissible");
  const VerifyResult v = verify_family(form, fam, 4);
  if (!v.ok) {
    throw std::logic_error("parametrize: identity verification failed at (k,m,n) = (" + std::to_string(v.k) + "," +
                           std::to_string(v.m) + "," + std::to_string(v.n) + ")");
  }
  return fam;
}

VerifyResult verify_zero(const std::function<i128(i64, i64, i64)>& fn, i64 grid_radius) {
  VerifyResult out;
  for (i64 k = -grid_radius; k <= grid_radius; ++k) {
    for (i64 m = -grid_radius; m <= grid_radius; ++m) {
      for (i64 n = -grid_radius; n <= grid_radius; ++n) {
        const i128 v = fn(k, m, n);
        if (v != 0) {
          out.ok = false;
          out.k = k;
          out.m = m;
          out.n = n;
          out.residual = static_cast<double>(v);
          return out;
        }
      }
    }
  }
  return out;
}

VerifyResult verify_triple(const QuadraticForm3& form, const std::function<i128(i64, i64, i64)>& x,
                           const std::function<i128(i64, i64, i64)>& y,
                           const std::function<i128(i64, i64, i64)>& lambda, i64 grid_radius) {
  return verify_zero([&](i64 k, i64 m, i64 n) { return form.eval(x(k, m, n), y(k, m, n), lambda(k, m, n)); },
                     grid_radius);
}

VerifyResult verify_family(const QuadraticForm3& form, const ParamFamily& family, i64 grid_radius) {
  return verify_zero(
      [&](i64 k, i64 m, i64 n) {
        return form.eval(family.x_at(k, m, n), family.y_at(k, m, n), family.lambda_at(k, m, n));
      },
      grid_radius);
}

namespace {

i128 checked_mul128(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("folner_set: 128-bit overflow");
  return r;
}

}  // namespace

std::vector<i128> folner_set(i64 M) {
  if (M < 1) throw std::invalid_argument("folner_set: M must be >= 1");
  if (M >= 9) throw std::length_error("folner_set: (M+1)^M exceeds the size limit");
  std::vector<i64> primes;
  for (i64 p = 2; static_cast<i64>(primes.size()) < M; ++p) {
    if (is_prime_u64(static_cast<u64>(p))) primes.push_back(p);
  }
  std::vector<i128> out{1};
  for (i64 p : primes) {
    std::vector<i128> next;
    next.reserve(out.size() * (M + 1));
    for (i128 v : out) {
      i128 pk = 1;
      for (i64 k = 0; k <= M; ++k) {
        next.push_back(checked_mul128(v, pk));
        if (k < M) pk = checked_mul128(pk, p);
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

double mult_density(const std::function<bool(i128)>& predicate, i64 M) {
  const std::vector<i128> phi = folner_set(M);
  i64 count = 0;
  for (i128 v : phi) {
    if (predicate(v)) ++count;
  }
  return static_cast<double>(count) / static_cast<double>(phi.size());
}

namespace {

/// Appends integer roots lambda >= 0 of c*t^2 + B*t + C = 0.
void lambda_roots(i64 c, i64 B, i64 C, std::vector<i64>& roots) {
  if (c == 0) {
    if (B == 0) {
      if (C == 0) roots.push_back(0);  // identically zero: report the trivial root
      return;
    }
    if (C % B == 0 && -C / B >= 0) roots.push_back(-C / B);
    return;
  }
  const i128 disc = i128(B) * B - i128(4) * c * C;
  if (disc < 0) return;
  if (disc > i128(INT64_MAX)) throw std::overflow_error("search_monochromatic: discriminant overflow");
  const i64 r = perfect_sqrt(static_cast<i64>(disc));
  if (r < 0) return;
  for (i64 s : {r, -r}) {
    const i64 num = -B + s;
    if (num % (2 * c) == 0) {
      const i64 t = num / (2 * c);
      if (t >= 0) roots.push_back(t);
    }
    if (r == 0) break;
  }
}

}  // namespace

std::vector<MonochromaticHit> search_monochromatic(const std::function<i64(i64)>& cells, const QuadraticForm3& form,
                                                   i64 bound) {
  if (bound < 2) throw std::invalid_argument("search_monochromatic: bound must be >= 2");
  std::vector<i64> cell_of(bound + 1);
  for (i64 n = 1; n <= bound; ++n) cell_of[n] = cells(n);

  std::vector<std::vector<MonochromaticHit>> per_x(bound + 1);
  parallel_for(1, bound + 1, [&](i64 x) {
    std::vector<i64> roots;
    for (i64 y = 1; y <= bound; ++y) {
      if (y == x || cell_of[x] != cell_of[y]) continue;
      const i64 B = checked_add(checked_mul(form.e, x), checked_mul(form.f, y));
      const i64 C = checked_add(checked_add(checked_mul(form.a, checked_mul(x, x)), checked_mul(form.b, checked_mul(y, y))),
                                checked_mul(form.d, checked_mul(x, y)));
      roots.clear();
      lambda_roots(form.c, B, C, roots);
      std::sort(roots.begin(), roots.end());
      roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
      for (i64 lam : roots) per_x[x].push_back({x, y, lam, cell_of[x]});
    }
  });
  std::vector<MonochromaticHit> out;
  for (i64 x = 1; x <= bound; ++x) out.insert(out.end(), per_x[x].begin(), per_x[x].end());
  return out;
}

i64 base7_cell(i64 n) {
  if (n == 0) throw std::invalid_argument("base7_cell: zero has no nonzero digit");
  n = std::llabs(n);
  while (n % 7 == 0) n /= 7;
  return n % 7;
}

}  // namespace hofa::parreg
