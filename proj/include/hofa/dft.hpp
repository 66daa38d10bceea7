#pragma once

#include "hofa/common.hpp"

namespace hofa::gowers {

/// A function on Z_N; index arithmetic is mod N.
struct ComplexSignal {
  i64 N;
  std::vector<cplx> values;

  cplx at(i64 n) const {
    i64 r = n % N;
    if (r < 0) r += N;
    return values[static_cast<std::size_t>(r)];
  }
};

/// Fourier coefficients hat a(xi) = E_n a(n) e(-n xi / N).
struct Spectrum {
  i64 N;
  std::vector<cplx> coefficients;
};

/// Fast transform for arbitrary N (prime lengths included).
Spectrum dft(const ComplexSignal& signal);
/// Inverse: a(n) = sum_xi hat a(xi) e(n xi / N).
ComplexSignal idft(const Spectrum& spectrum);
/// O(N^2) reference evaluator, the correctness oracle for dft().
Spectrum dft_direct(const ComplexSignal& signal);

ComplexSignal signal_from_values(std::vector<cplx> values);
/// Embeds values on [N] into Z_M (index n holds f(n), zero elsewhere). M >= N+1.
ComplexSignal embed_interval(const std::vector<cplx>& values, i64 M);

}  // namespace hofa::gowers
