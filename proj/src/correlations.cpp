#include "hofa/correlations.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "hofa/gowers.hpp"

namespace hofa::correlations {

std::vector<std::vector<i64>> LinearFormSet::independence_matrix() const {
  const size_t s = forms.size();
  std::vector<std::vector<i64>> m(s, std::vector<i64>(s, 0));
  for (size_t i = 0; i < s; ++i) {
    for (size_t j = 0; j < s; ++j) {
      m[i][j] = checked_mul(forms[i].first, forms[j].second) - checked_mul(forms[i].second, forms[j].first);
    }
  }
  return m;
}

bool LinearFormSet::pairwise_independent() const {
  const auto m = independence_matrix();
  for (size_t i = 0; i < forms.size(); ++i) {
    for (size_t j = i + 1; j < forms.size(); ++j) {
      if (m[i][j] == 0) return false;
    }
  }
  return true;
}

namespace {

cplx point_value(const MultiplicativeSpec& f, i64 d, const Unimodular& u, i64 r, const LinearFormSet& forms, i64 m,
                 i64 n, const FactorSieve& sieve) {
  const i64 qm = checked_add(checked_mul(u.u11, m), checked_mul(u.u12, n));
  const i64 qn = checked_add(checked_mul(u.u21, m), checked_mul(u.u22, n));
  const i64 q = quadfield::norm_form(d, qm, qn);
  cplx v = f.evaluate_power(q, r, sieve);
  for (const auto& [kappa, lambda] : forms.forms) {
    if (v == cplx{0.0, 0.0}) break;
    v *= f.evaluate(checked_add(checked_mul(kappa, m), checked_mul(lambda, n)), sieve);
  }
  return v;
}

}  // namespace

cplx chowla_average(const MultiplicativeSpec& f, i64 d, const Unimodular& change, i64 r, const LinearFormSet& forms,
                    i64 N, const Region& region, const FactorSieve& sieve) {
  if (N < 1) throw std::invalid_argument("chowla_average: N must be >= 1");
  if (change.det() != 1 && change.det() != -1) throw std::invalid_argument("chowla_average: change must be unimodular");

  std::vector<std::pair<i64, i64>> points;
  switch (region.kind) {
    case RegionKind::Square:
      for (i64 m = 1; m <= N; ++m) {
        for (i64 n = 1; n <= N; ++n) points.emplace_back(m, n);
      }
      break;
    case RegionKind::Rectangle:
      if (region.width < 1 || region.height < 1) throw std::invalid_argument("chowla_average: empty rectangle");
      for (i64 m = 1; m <= region.width; ++m) {
        for (i64 n = 1; n <= region.height; ++n) points.emplace_back(m, n);
      }
      break;
    case RegionKind::NormBall: {
      // Q = Q_d after a unimodular change, so {Q <= N^2} is the preimage of the
      // Q_d ball under the change matrix.
      const i64 det = change.det();
      for (const quadfield::QuadInt& z : quadfield::enumerate_ball(N, d)) {
        const i64 m = det * (checked_mul(change.u22, z.m) - checked_mul(change.u12, z.n));
        const i64 n = det * (checked_mul(change.u11, z.n) - checked_mul(change.u21, z.m));
        points.emplace_back(m, n);
      }
      break;
    }
  }

  std::vector<cplx> terms(points.size());
  parallel_for(0, static_cast<i64>(points.size()), [&](i64 i) {
    terms[i] = point_value(f, d, change, r, forms, points[i].first, points[i].second, sieve);
  });
  return pairwise_sum(terms) / static_cast<double>(points.size());
}

cplx linear_forms_average(const std::vector<std::vector<cplx>>& tables, const std::vector<i64>& shifts, i64 N,
                          i64 ntilde) {
  if (tables.empty() || tables.size() != shifts.size()) {
    throw std::invalid_argument("linear_forms_average: tables and shifts must match and be nonempty");
  }
  for (const auto& t : tables) {
    if (static_cast<i64>(t.size()) != ntilde) throw std::invalid_argument("linear_forms_average: table length != Ntilde");
  }
  i64 ell = 0;
  for (i64 l : shifts) ell += std::llabs(l);
  if (!is_prime_u64(static_cast<u64>(ntilde)) || ntilde <= 2 * ell * N) {
    throw std::invalid_argument("linear_forms_average: Ntilde must be prime and > 2*ell*N");
  }
  const size_t s = tables.size();
  // The n-indicator kills all but n in [N], so the cost is O(N * Ntilde * s).
  std::vector<cplx> row_sums(N);
  parallel_for(1, N + 1, [&](i64 n) {
    std::vector<i64> base(s);
    for (size_t j = 0; j < s; ++j) base[j] = ((shifts[j] * n) % ntilde + ntilde) % ntilde;
    std::vector<cplx> terms(ntilde);
    for (i64 m = 0; m < ntilde; ++m) {
      cplx prod{1.0, 0.0};
      for (size_t j = 0; j < s; ++j) {
        i64 idx = base[j] + m;
        if (idx >= ntilde) idx -= ntilde;
        prod *= tables[j][idx];
      }
      terms[m] = prod;
    }
    row_sums[n - 1] = pairwise_sum(terms);
  });
  return pairwise_sum(row_sums) / (static_cast<double>(ntilde) * static_cast<double>(ntilde));
}

UniformityBoundReport uniformity_bound_report(const std::vector<std::vector<cplx>>& tables,
                                              const std::vector<i64>& shifts, i64 N, i64 ntilde, int s) {
  if (s < 2) throw std::invalid_argument("uniformity_bound_report: s must be >= 2");
  UniformityBoundReport report;
  report.average = linear_forms_average(tables, shifts, N, ntilde);
  report.lhs = std::abs(report.average);
  report.min_norm = std::numeric_limits<double>::infinity();
  for (const auto& t : tables) {
    report.min_norm = std::min(report.min_norm, gowers::gowers_norm_cyclic(gowers::signal_from_values(t), s - 1));
  }
  if (report.min_norm < 1e-12) {
    report.min_norm_degenerate = true;
    report.implied_c = 0.0;
  } else {
    report.implied_c = (report.lhs - 2.0 / static_cast<double>(ntilde)) / std::sqrt(report.min_norm);
  }
  return report;
}

double quad_phase_correlation(const std::vector<cplx>& fun, double alpha) {
  const i64 ntilde = static_cast<i64>(fun.size());
  std::vector<cplx> terms(ntilde);
  parallel_for(0, ntilde, [&](i64 n) {
    terms[n] = fun[n] * e(alpha * static_cast<double>(n) * static_cast<double>(n));
  });
  return std::abs(pairwise_sum(terms) / static_cast<double>(ntilde));
}

}  // namespace hofa::correlations
