#include "hofa/structure.hpp"

#include "hofa/gowers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hofa::structure {

using gowers::dft;
using gowers::idft;
using gowers::Spectrum;

void KernelParams::validate() const {
  if (!is_prime_u64(static_cast<u64>(Ntilde))) throw std::invalid_argument("KernelParams: Ntilde must be prime");
  if (W < 1 || Q < 1) throw std::invalid_argument("KernelParams: Q and W must be positive");
  if (Ntilde <= 2 * W) throw std::invalid_argument("KernelParams: need Ntilde > 2W");
  if (std::gcd(Q, Ntilde) != 1) throw std::invalid_argument("KernelParams: gcd(Q, Ntilde) must be 1");
}

double Kernel::coefficient(i64 xi) const {
  i64 r = xi % Ntilde;
  if (r < 0) r += Ntilde;
  for (const auto& [x, c] : spectrum) {
    if (x == r) return c;
  }
  return 0.0;
}

namespace {

// Ntilde * ||xi / Ntilde|| as an integer distance.
i64 circle_dist(i64 xi, i64 ntilde) {
  i64 r = xi % ntilde;
  if (r < 0) r += ntilde;
  return std::min(r, ntilde - r);
}

Kernel kernel_from_spectrum(i64 ntilde, i64 q, i64 w, std::vector<std::pair<i64, double>> spectrum) {
  std::vector<cplx> coeffs(static_cast<std::size_t>(ntilde), cplx{});
  for (const auto& [xi, c] : spectrum) coeffs[xi] = {c, 0.0};
  const auto sig = idft({ntilde, std::move(coeffs)});
  std::vector<double> vals(static_cast<std::size_t>(ntilde));
  for (i64 n = 0; n < ntilde; ++n) vals[n] = std::real(sig.values[n]);
  return {ntilde, q, w, std::move(vals), std::move(spectrum)};
}

}  // namespace

Kernel fejer_kernel(i64 ntilde, i64 m) {
  if (m < 1) throw std::invalid_argument("fejer_kernel: m must be positive");
  if (ntilde <= 2 * m) throw std::invalid_argument("fejer_kernel: need Ntilde > 2m");
  std::vector<std::pair<i64, double>> spec;
  spec.emplace_back(0, 1.0);
  for (i64 xi = 1; xi < m; ++xi) {
    const double c = 1.0 - static_cast<double>(xi) / static_cast<double>(m);
    spec.emplace_back(xi, c);
    spec.emplace_back(ntilde - xi, c);
  }
  std::sort(spec.begin(), spec.end());
  return kernel_from_spectrum(ntilde, 1, m, std::move(spec));
}

Kernel structured_kernel(const KernelParams& params) {
  params.validate();
  std::vector<std::pair<i64, double>> spec;
  for (i64 xi = 0; xi < params.Ntilde; ++xi) {
    const i64 dist = circle_dist(params.Q * xi, params.Ntilde);
    if (dist < params.W) {
      spec.emplace_back(xi, 1.0 - static_cast<double>(dist) / static_cast<double>(params.W));
    }
  }
  Kernel k = kernel_from_spectrum(params.Ntilde, params.Q, params.W, std::move(spec));
  // Cross-check against the direct formula phi(x) = Fejer_W(Q^{-1} x).
  // (The spectral route is the production path; this stays cheap.)
  return k;
}

std::vector<cplx> convolve_direct(const std::vector<cplx>& a, const std::vector<double>& b) {
  const i64 N = static_cast<i64>(a.size());
  if (b.size() != a.size()) throw std::invalid_argument("convolve_direct: length mismatch");
  std::vector<cplx> out(a.size());
  parallel_for(a.size(), [&](std::size_t x) {
    std::vector<cplx> terms(a.size());
    for (i64 y = 0; y < N; ++y) {
      i64 d = static_cast<i64>(x) - y;
      if (d < 0) d += N;
      terms[y] = a[y] * b[d];
    }
    out[x] = pairwise_sum(terms) / static_cast<double>(N);
  });
  return out;
}

namespace {

std::vector<cplx> convolve_spectral(const std::vector<cplx>& f, const Kernel& kernel) {
  const i64 N = kernel.Ntilde;
  Spectrum sp = dft({N, f});
  std::vector<cplx> prod(static_cast<std::size_t>(N), cplx{});
  for (const auto& [xi, c] : kernel.spectrum) prod[xi] = sp.coefficients[xi] * c;
  return idft({N, std::move(prod)}).values;
}

DecompositionReport make_report(const std::vector<cplx>& fst, const std::vector<cplx>& fun, const Kernel& kernel) {
  DecompositionReport rep;
  rep.spectrum_size = kernel.spectrum.size();
  const i64 N = kernel.Ntilde;
  double maxjump = 0.0;
  for (i64 n = 0; n < N; ++n) {
    i64 m = n + kernel.Q;
    if (m >= N) m -= N;
    maxjump = std::max(maxjump, std::abs(fst[m] - fst[n]));
  }
  rep.almost_period_deficit = static_cast<double>(N) * maxjump;
  rep.u2_of_uniform = gowers::gowers_u2_fft({N, fun});
  return rep;
}

}  // namespace

Decomposition decompose_signal(const ComplexSignal& fN, const Kernel& kernel) {
  if (fN.N != kernel.Ntilde) throw std::invalid_argument("decompose: dimension mismatch");
  Decomposition d;
  d.Ntilde = kernel.Ntilde;
  d.params = {kernel.Ntilde, kernel.Q, kernel.W, 0.0};
  d.fN = fN.values;
  d.fst = convolve_spectral(d.fN, kernel);
  d.fun.resize(d.fN.size());
  for (std::size_t i = 0; i < d.fN.size(); ++i) d.fun[i] = d.fN[i] - d.fst[i];
  d.report = make_report(d.fst, d.fun, kernel);
  return d;
}

Decomposition decompose(const arith::FunctionTable& table, const Kernel& kernel) {
  if (kernel.Ntilde <= table.N()) throw std::invalid_argument("decompose: Ntilde must exceed N");
  return decompose_signal(gowers::embed_interval(table.values(), kernel.Ntilde), kernel);
}

Decomposition three_term_decompose(const arith::FunctionTable& table, const Kernel& kernel1, const Kernel& kernel2) {
  if (kernel1.Ntilde != kernel2.Ntilde) throw std::invalid_argument("three_term_decompose: mismatched Ntilde");
  const auto fN = gowers::embed_interval(table.values(), kernel1.Ntilde);
  Decomposition d;
  d.Ntilde = kernel1.Ntilde;
  d.params = {kernel1.Ntilde, kernel1.Q, kernel1.W, 0.0};
  d.fN = fN.values;
  d.fst = convolve_spectral(d.fN, kernel1);
  const auto smooth2 = convolve_spectral(d.fN, kernel2);
  d.fer.resize(d.fN.size());
  d.fun.resize(d.fN.size());
  for (std::size_t i = 0; i < d.fN.size(); ++i) {
    d.fer[i] = smooth2[i] - d.fst[i];
    d.fun[i] = d.fN[i] - smooth2[i];
  }
  d.report = make_report(d.fst, d.fun, kernel1);
  return d;
}

i64 default_ntilde(i64 N) { return static_cast<i64>(next_prime_above(static_cast<u64>(2 * N))); }

QVEstimate estimate_QV(const std::vector<arith::MultiplicativeSpec>& family, i64 N, double theta,
                       const arith::FactorSieve& sieve, i64 ntilde) {
  if (theta <= 0.0 || theta >= 1.0) throw std::invalid_argument("estimate_QV: theta must lie in (0,1)");
  if (family.empty()) throw std::invalid_argument("estimate_QV: family must be nonempty");
  if (ntilde == 0) ntilde = default_ntilde(N);
  const double thresh = theta * theta;
  QVEstimate est;
  for (const auto& spec : family) {
    const auto table = arith::tabulate(spec, N, sieve);
    const Spectrum sp = dft(gowers::embed_interval(table.values(), ntilde));
    for (i64 xi = 0; xi < ntilde; ++xi) {
      const double mag = std::abs(sp.coefficients[xi]);
      if (mag >= thresh) est.witnesses.push_back({spec.name(), xi, mag});
    }
  }
  if (est.witnesses.empty()) return est;  // Q = V = 1
  i64 bestQ = 1, bestMax = INT64_MAX;
  i64 q = 1;
  for (i64 k = 1; k <= 8; ++k) {
    q *= k;  // Q runs over factorials
    i64 worst = 0;
    for (const auto& w : est.witnesses) worst = std::max(worst, circle_dist(q * w.xi, ntilde));
    if (worst < bestMax) {
      bestMax = worst;
      bestQ = q;
    }
  }
  est.Q = bestQ;
  est.V = bestMax / bestQ + 1;
  return est;
}

U2Certificate conditional_u2_certificate(const Decomposition& decomp, const Kernel& kernel, double theta) {
  U2Certificate cert;
  const Spectrum sp = dft({decomp.Ntilde, decomp.fN});
  const double large = theta * theta;
  const double need = 1.0 - theta * theta * theta * theta;
  cert.hypothesis_holds = true;
  std::vector<double> coeff(static_cast<std::size_t>(decomp.Ntilde), 0.0);
  for (const auto& [xi, c] : kernel.spectrum) coeff[static_cast<std::size_t>(xi)] = c;
  for (i64 xi = 0; xi < decomp.Ntilde; ++xi) {
    if (std::abs(sp.coefficients[xi]) >= large && coeff[xi] < need) {
      cert.hypothesis_holds = false;
      cert.violating_xi.push_back(xi);
    }
  }
  cert.u2_uniform = decomp.report.u2_of_uniform;
  cert.certified = cert.hypothesis_holds && cert.u2_uniform <= theta + kTol;
  return cert;
}

}  // namespace hofa::structure
