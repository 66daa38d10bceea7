#include "hofa/dft.hpp"

#include <fftw3.h>

#include <mutex>
#include <unordered_map>

namespace hofa::gowers {

namespace {

// FFTW plan cache keyed by (N, direction). Plans are created once with
// FFTW_ESTIMATE and executed through the new-array interface, so repeated
// transforms of the same length avoid planning costs and output is
// deterministic.
class PlanCache {
 public:
  void execute(std::vector<cplx>& inout, int sign) {
    fftw_plan plan;
    {
      std::lock_guard<std::mutex> lock(mu_);
      const u64 key = (static_cast<u64>(inout.size()) << 1) | (sign == FFTW_FORWARD ? 0 : 1);
      auto it = plans_.find(key);
      if (it == plans_.end()) {
        scratch_.assign(inout.size(), cplx{});
        auto* buf = reinterpret_cast<fftw_complex*>(scratch_.data());
        plan = fftw_plan_dft_1d(static_cast<int>(inout.size()), buf, buf, sign, FFTW_ESTIMATE);
        plans_.emplace(key, plan);
      } else {
        plan = it->second;
      }
    }
    auto* buf = reinterpret_cast<fftw_complex*>(inout.data());
    fftw_execute_dft(plan, buf, buf);
  }

  static PlanCache& instance() {
    static PlanCache cache;
    return cache;
  }

 private:
  std::mutex mu_;
  std::unordered_map<u64, fftw_plan> plans_;
  std::vector<cplx> scratch_;
};

}  // namespace

Spectrum dft(const ComplexSignal& signal) {
  if (signal.N < 1) throw std::invalid_argument("dft: empty signal");
  std::vector<cplx> buf = signal.values;
  PlanCache::instance().execute(buf, FFTW_FORWARD);
  const double inv = 1.0 / static_cast<double>(signal.N);
  for (cplx& c : buf) c *= inv;
  return {signal.N, std::move(buf)};
}

ComplexSignal idft(const Spectrum& spectrum) {
  std::vector<cplx> buf = spectrum.coefficients;
  PlanCache::instance().execute(buf, FFTW_BACKWARD);
  return {spectrum.N, std::move(buf)};
}

Spectrum dft_direct(const ComplexSignal& signal) {
  const i64 N = signal.N;
  std::vector<cplx> out(static_cast<std::size_t>(N));
  parallel_for(static_cast<std::size_t>(N), [&](std::size_t xi) {
    std::vector<cplx> terms(static_cast<std::size_t>(N));
    for (i64 n = 0; n < N; ++n) {
      const double ang = -static_cast<double>((n * static_cast<i64>(xi)) % N) / static_cast<double>(N);
      terms[n] = signal.values[n] * e(ang);
    }
    out[xi] = pairwise_sum(terms) / static_cast<double>(N);
  });
  return {N, std::move(out)};
}

ComplexSignal signal_from_values(std::vector<cplx> values) {
  const i64 n = static_cast<i64>(values.size());
  if (n < 1) throw std::invalid_argument("signal_from_values: empty");
  return {n, std::move(values)};
}

ComplexSignal embed_interval(const std::vector<cplx>& values, i64 M) {
  const i64 n = static_cast<i64>(values.size());
  if (M < n + 1) throw std::invalid_argument("embed_interval: group order too small");
  std::vector<cplx> out(static_cast<std::size_t>(M), cplx{});
  for (i64 k = 1; k <= n; ++k) out[k] = values[k - 1];
  return {M, std::move(out)};
}

}  // namespace hofa::gowers
