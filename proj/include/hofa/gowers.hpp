#pragma once

#include "hofa/dft.hpp"

namespace hofa::gowers {

/// ||a||_{U^s(Z_N)} by the shift recursion with the spectral U^2 base for
/// s >= 3. Practical ceilings: s=3 up to N ~ 2^14, s=4 up to N ~ 2^10.
double gowers_norm_cyclic(const ComplexSignal& signal, int s);

/// Pure-definition evaluator: the recursion all the way down to the U^1 base,
/// no Fourier shortcut. Test oracle for gowers_norm_cyclic / gowers_u2_fft.
double gowers_norm_recursive(const ComplexSignal& signal, int s);

/// (sum_xi |hat a(xi)|^4)^{1/4}.
double gowers_u2_fft(const ComplexSignal& signal);

/// ||a||_{U^s[N]} = ||1_[N] a||_{U^s(Z_N*)} / ||1_[N]||_{U^s(Z_N*)}.
/// Nstar defaults to the smallest prime > 2N; any Nstar > 2N gives the same
/// value to 1e-9.
double gowers_norm_interval(const std::vector<cplx>& values, int s, i64 nstar = 0);

/// (Nstar/N)^{(s+1)/2^s}; rescales U^s norms between Z_N and Z_Nstar for
/// functions supported on an interval shorter than N/2.
double embedding_scale_factor(i64 N, i64 nstar, int s);

struct Progression {
  i64 first, step, length;  // {first, first+step, ...} subset of [1, N]
};

struct U2BoundReport {
  double lhs;            // |E_{n in [N]} 1_P(n) a(n)|
  double bound_constant; // l^{4/3} norm of hat(1_P)
  double rhs;            // bound_constant * ||a||_{U^2(Z_N)}
};

/// The progression/U^2 Hoelder chain; N must be prime.
U2BoundReport progression_u2_bound(const Progression& P, const ComplexSignal& a);

/// Same chain for the phase n -> e(nt): lhs = |E_{n in [N]} a(n) e(nt)|,
/// constant = l^{4/3} norm of the phase spectrum.
U2BoundReport phase_u2_bound(const ComplexSignal& a, double t);

}  // namespace hofa::gowers
