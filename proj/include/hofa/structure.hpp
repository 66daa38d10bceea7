#pragma once

#include "hofa/arith.hpp"
#include "hofa/dft.hpp"

namespace hofa::structure {

using gowers::ComplexSignal;

struct KernelParams {
  i64 Ntilde;      // prime modulus, > 2W, coprime to Q
  i64 Q;           // periodicity modulus
  i64 W;           // spectral width
  double theta = 0.0;  // optional tag

  void validate() const;
};

/// Nonnegative mean-one function on Z_Ntilde with spectrum held explicitly.
struct Kernel {
  i64 Ntilde;
  i64 Q = 1;
  i64 W = 1;
  std::vector<double> values;
  std::vector<std::pair<i64, double>> spectrum;  // (xi, hat phi(xi)), coefficient nonzero

  double coefficient(i64 xi) const;  // hat phi(xi), 0 off the spectrum
};

/// phi(x) = sum_{|xi| <= m} (1 - |xi|/m) e(x xi / Ntilde); spectrum {-m+1..m-1}.
Kernel fejer_kernel(i64 ntilde, i64 m);

/// phi(x) = FejerKernel(W) at Q^{-1} x; spectrum {xi : Ntilde ||Q xi/Ntilde|| < W}
/// with coefficients 1 - ||Q xi/Ntilde|| Ntilde / W.
Kernel structured_kernel(const KernelParams& params);

struct DecompositionReport {
  std::size_t spectrum_size = 0;
  double almost_period_deficit = 0.0;  // Ntilde * max_n |fst(n+Q) - fst(n)|
  double u2_of_uniform = 0.0;          // ||fun||_{U^2(Z_Ntilde)}
};

struct Decomposition {
  i64 Ntilde;
  KernelParams params;
  std::vector<cplx> fN, fst, fun;
  std::vector<cplx> fer;  // empty for the two-term split
  DecompositionReport report;
};

/// f_st = f_N * kernel (spectral convolution), f_un = f_N - f_st.
Decomposition decompose(const arith::FunctionTable& table, const Kernel& kernel);
/// Decompose a signal already living on Z_Ntilde.
Decomposition decompose_signal(const ComplexSignal& fN, const Kernel& kernel);

/// f_st = f_N * k1, f_er = f_N * k2 - f_N * k1, f_un = f_N - f_N * k2.
Decomposition three_term_decompose(const arith::FunctionTable& table, const Kernel& kernel1, const Kernel& kernel2);

/// O(N^2) direct cyclic convolution (a * b)(x) = E_y a(y) b(x - y); test oracle
/// for the spectral route.
std::vector<cplx> convolve_direct(const std::vector<cplx>& a, const std::vector<double>& b);

struct QVEstimate {
  i64 Q = 1;
  i64 V = 1;
  struct Witness {
    std::string spec;
    i64 xi;
    double magnitude;
  };
  std::vector<Witness> witnesses;
};

/// Scans hat f_N over the family for coefficients >= theta^2, then picks the
/// factorial Q = k! (k <= 8) minimizing max Ntilde ||Q xi / Ntilde|| over the
/// witnesses; V = ceil(max/Q) + 1.
QVEstimate estimate_QV(const std::vector<arith::MultiplicativeSpec>& family, i64 N, double theta,
                       const arith::FactorSieve& sieve, i64 ntilde = 0);

struct U2Certificate {
  bool hypothesis_holds = false;
  bool certified = false;     // hypothesis held and ||fun||_U2 <= theta + tol
  double u2_uniform = 0.0;
  std::vector<i64> violating_xi;  // large coefficients missed by the kernel
};

/// Checks the exactly-assertable conditional behind the U^2 structure theorem:
/// if every xi with |hat fN(xi)| >= theta^2 has kernel coefficient >= 1-theta^4,
/// then ||fun||_{U^2} <= theta.
U2Certificate conditional_u2_certificate(const Decomposition& decomp, const Kernel& kernel, double theta);

/// Smallest prime > 2N (the default embedding modulus).
i64 default_ntilde(i64 N);

}  // namespace hofa::structure
