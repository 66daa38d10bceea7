#include "hofa/common.hpp"

#include <cstdlib>

namespace hofa {

u64 mulmod_u64(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

u64 powmod_u64(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Sufficient witness set for all 64-bit inputs.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 next_prime_above(u64 n) {
  u64 c = n + 1;
  if (c <= 2) return 2;
  if (c % 2 == 0) ++c;
  while (!is_prime_u64(c)) c += 2;
  return c;
}

i64 mod_inverse(i64 a, i64 m) {
  i64 t = 0, newt = 1, r = m, newr = ((a % m) + m) % m;
  while (newr != 0) {
    const i64 q = r / newr;
    std::swap(t, newt);
    newt -= q * t;
    std::swap(r, newr);
    newr -= q * r;
  }
  if (r != 1) throw std::invalid_argument("mod_inverse: arguments not coprime");
  return ((t % m) + m) % m;
}

std::size_t thread_budget() {
  if (const char* env = std::getenv("HOFA_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<std::size_t>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

namespace {
// set inside workers so nested calls run serially instead of oversubscribing
thread_local bool g_inside_parallel = false;
}  // namespace

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const std::size_t nt = std::min(thread_budget(), n == 0 ? std::size_t{1} : n);
  if (nt <= 1 || n < 64 || g_inside_parallel) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(nt);
  const std::size_t chunk = (n + nt - 1) / nt;
  for (std::size_t t = 0; t < nt; ++t) {
    const std::size_t lo = t * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      g_inside_parallel = true;
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

namespace {

template <class T>
T pairwise_sum_impl(const T* data, std::size_t n) {
  if (n <= 8) {
    T s{};
    for (std::size_t i = 0; i < n; ++i) s += data[i];
    return s;
  }
  const std::size_t h = n / 2;
  return pairwise_sum_impl(data, h) + pairwise_sum_impl(data + h, n - h);
}

}  // namespace

cplx pairwise_sum(const std::vector<cplx>& v) { return pairwise_sum_impl(v.data(), v.size()); }
double pairwise_sum(const std::vector<double>& v) { return pairwise_sum_impl(v.data(), v.size()); }

}  // namespace hofa
