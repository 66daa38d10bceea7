#include "hofa/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace hofa::arith {

FactorSieve::FactorSieve(i64 limit) : limit_(limit) {
  if (limit < 2) throw std::invalid_argument("build_sieve: limit must be >= 2");
  if (limit > INT32_MAX) throw std::invalid_argument("build_sieve: limit too large for 32-bit spf table");
  spf_.assign(static_cast<std::size_t>(limit) + 1, 0);
  for (i64 i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      for (i64 j = i; j <= limit; j += i) {
        if (spf_[j] == 0) spf_[j] = static_cast<int32_t>(i);
      }
    }
  }
}

i64 FactorSieve::spf(i64 n) const {
  if (n < 2 || n > limit_) throw std::out_of_range("FactorSieve: index outside [2, limit]");
  return spf_[n];
}

std::vector<std::pair<i64, int>> FactorSieve::factor(i64 n) const {
  if (n < 1 || n > limit_) throw std::out_of_range("FactorSieve::factor: n outside [1, limit]");
  std::vector<std::pair<i64, int>> out;
  while (n > 1) {
    const i64 p = spf_[n];
    int k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    out.emplace_back(p, k);
  }
  return out;
}

std::vector<i64> FactorSieve::primes_upto(i64 limit) const {
  if (limit > limit_) throw std::out_of_range("primes_upto: beyond sieve limit");
  std::vector<i64> ps;
  for (i64 n = 2; n <= limit; ++n)
    if (spf_[n] == n) ps.push_back(n);
  return ps;
}

namespace {

i64 euler_phi_prime_power(i64 p, int k) {
  i64 r = p - 1;
  for (int i = 1; i < k; ++i) r *= p;
  return r;
}

// Smallest primitive root mod p^k (p odd) or mod 2, 4.
i64 primitive_root(i64 pk, i64 p, int k) {
  if (pk == 1) return 1;
  if (pk == 2) return 1;
  if (pk == 4) return 3;
  const i64 phi = euler_phi_prime_power(p, k);
  // factor phi by trial division (phi is small here)
  std::vector<i64> qs;
  i64 m = phi;
  for (i64 d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      qs.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) qs.push_back(m);
  for (i64 g = 2; g < pk; ++g) {
    if (std::gcd(g, pk) != 1) continue;
    bool ok = true;
    for (i64 q : qs) {
      if (powmod_u64(static_cast<u64>(g), static_cast<u64>(phi / q), static_cast<u64>(pk)) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::logic_error("primitive_root: not found");
}

}  // namespace

DirichletCharacter::DirichletCharacter(i64 q, i64 index) : q_(q), index_(index) {
  if (q < 1) throw std::invalid_argument("DirichletCharacter: modulus must be positive");
  if (q % 8 == 0) throw std::invalid_argument("DirichletCharacter: moduli divisible by 8 are not supported");
  // Factor q, compute per-factor discrete-log tables, assemble by CRT.
  struct Factor {
    i64 pk, phi, gen;
    std::vector<i64> dlog;  // dlog[n mod pk], -1 when (n, pk) > 1
    i64 exponent;           // index component for this factor
  };
  std::vector<Factor> factors;
  i64 m = q;
  for (i64 p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      i64 pk = 1;
      int k = 0;
      while (m % p == 0) {
        m /= p;
        pk *= p;
        ++k;
      }
      factors.push_back({pk, euler_phi_prime_power(p, k), primitive_root(pk, p, k), {}, 0});
    }
  }
  if (m > 1) factors.push_back({m, m - 1, primitive_root(m, m, 1), {}, 0});

  // Mixed-radix decode of the character index over the factor group orders.
  i64 idx = index;
  for (auto& f : factors) {
    f.exponent = ((idx % f.phi) + f.phi) % f.phi;
    idx /= f.phi;
    f.dlog.assign(static_cast<std::size_t>(f.pk), -1);
    i64 v = 1 % f.pk;
    for (i64 e = 0; e < f.phi; ++e) {
      f.dlog[v] = e;
      v = (v * f.gen) % f.pk;
    }
    if (f.pk == 1) f.dlog[0] = 0;
  }

  values_.assign(static_cast<std::size_t>(q), cplx{0.0, 0.0});
  for (i64 n = 0; n < q; ++n) {
    if (std::gcd(n, q) != 1) continue;
    double phase = 0.0;
    for (const auto& f : factors) {
      const i64 dl = f.dlog[n % f.pk];
      phase += static_cast<double>(f.exponent) * static_cast<double>(dl) / static_cast<double>(f.phi);
    }
    values_[n] = e(phase);
  }
}

bool DirichletCharacter::principal() const {
  for (i64 n = 0; n < q_; ++n) {
    if (std::abs(values_[n]) > 0.5 && std::abs(values_[n] - cplx{1.0, 0.0}) > 1e-12) return false;
  }
  return true;
}

cplx DirichletCharacter::operator()(i64 n) const {
  i64 r = n % q_;
  if (r < 0) r += q_;
  return values_[r];
}

MultiplicativeSpec MultiplicativeSpec::liouville() { return {Kind::Liouville, "liouville"}; }
MultiplicativeSpec MultiplicativeSpec::moebius() { return {Kind::Moebius, "moebius"}; }
MultiplicativeSpec MultiplicativeSpec::principal() { return {Kind::Principal, "principal"}; }

MultiplicativeSpec MultiplicativeSpec::dirichlet(i64 q, i64 index) {
  MultiplicativeSpec s{Kind::DirichletChar, "char:q=" + std::to_string(q) + ",index=" + std::to_string(index)};
  s.chi_ = std::make_shared<DirichletCharacter>(q, index);
  return s;
}

MultiplicativeSpec MultiplicativeSpec::archimedean(double t) {
  MultiplicativeSpec s{Kind::ArchimedeanTwist, "nit:t=" + std::to_string(t)};
  s.t_ = t;
  return s;
}

MultiplicativeSpec MultiplicativeSpec::prime_table(std::map<i64, cplx> at_primes, bool complete,
                                                   std::map<std::pair<i64, int>, cplx> at_powers) {
  for (const auto& [p, v] : at_primes) {
    if (std::abs(v) > 1.0 + 1e-12) throw std::invalid_argument("prime_table: values must lie in the unit disc");
  }
  MultiplicativeSpec s{Kind::PrimeTable, "table"};
  s.at_primes_ = std::move(at_primes);
  s.at_powers_ = std::move(at_powers);
  s.complete_ = complete;
  return s;
}

MultiplicativeSpec MultiplicativeSpec::prime_function(std::string name, std::function<cplx(i64, int)> f) {
  MultiplicativeSpec s{Kind::PrimeFunction, std::move(name)};
  s.fn_ = std::move(f);
  return s;
}

MultiplicativeSpec MultiplicativeSpec::two_squares_sign() {
  return prime_function("twosquares", [](i64 p, int k) -> cplx {
    const double v = (p % 4 == 3 && k % 2 == 1) ? -1.0 : 1.0;
    return {v, 0.0};
  });
}

bool MultiplicativeSpec::completely_multiplicative() const {
  switch (kind_) {
    case Kind::Liouville:
    case Kind::Principal:
    case Kind::DirichletChar:
    case Kind::ArchimedeanTwist:
      return true;
    case Kind::Moebius:
      return false;
    case Kind::PrimeTable:
      return complete_;
    case Kind::PrimeFunction:
      return false;
  }
  return false;
}

cplx MultiplicativeSpec::value_at_power(i64 p, int k) const {
  switch (kind_) {
    case Kind::Liouville:
      return {k % 2 == 0 ? 1.0 : -1.0, 0.0};
    case Kind::Moebius:
      return {k == 1 ? -1.0 : 0.0, 0.0};
    case Kind::Principal:
      return {1.0, 0.0};
    case Kind::DirichletChar: {
      cplx v{1.0, 0.0};
      const cplx cp = (*chi_)(p);
      for (int i = 0; i < k; ++i) v *= cp;
      return v;
    }
    case Kind::ArchimedeanTwist: {
      const double lp = static_cast<double>(k) * std::log(static_cast<double>(p));
      return {std::cos(t_ * lp), std::sin(t_ * lp)};
    }
    case Kind::PrimeTable: {
      if (!complete_) {
        auto it = at_powers_.find({p, k});
        if (it != at_powers_.end()) return it->second;
      }
      auto it = at_primes_.find(p);
      const cplx base = it == at_primes_.end() ? cplx{1.0, 0.0} : it->second;
      cplx v{1.0, 0.0};
      for (int i = 0; i < k; ++i) v *= base;
      return v;
    }
    case Kind::PrimeFunction:
      return fn_(p, k);
  }
  return {0.0, 0.0};
}

cplx MultiplicativeSpec::at_prime(i64 p) const { return value_at_power(p, 1); }

cplx MultiplicativeSpec::evaluate(i64 n, const FactorSieve& sieve) const {
  if (n == 0) return {0.0, 0.0};
  if (n < 0) n = -n;  // even extension
  if (n > sieve.limit()) throw std::out_of_range("evaluate: |n| beyond sieve limit");
  if (kind_ == Kind::ArchimedeanTwist) {
    // Direct evaluation: exp(i t ln n). Complete multiplicativity makes the
    // factorization route equal; this one avoids error accumulation.
    const double ln = std::log(static_cast<double>(n));
    return {std::cos(t_ * ln), std::sin(t_ * ln)};
  }
  cplx v{1.0, 0.0};
  for (const auto& [p, k] : sieve.factor(n)) v *= value_at_power(p, k);
  return v;
}

cplx MultiplicativeSpec::evaluate_power(i64 n, i64 r, const FactorSieve& sieve) const {
  if (r < 0) throw std::invalid_argument("evaluate_power: r must be >= 0");
  if (n == 0) return {0.0, 0.0};
  if (n < 0) n = -n;
  if (r == 0) return {1.0, 0.0};
  if (n > sieve.limit()) throw std::out_of_range("evaluate_power: |n| beyond sieve limit");
  if (kind_ == Kind::ArchimedeanTwist) {
    const double ln = static_cast<double>(r) * std::log(static_cast<double>(n));
    return {std::cos(t_ * ln), std::sin(t_ * ln)};
  }
  cplx v{1.0, 0.0};
  for (const auto& [p, k] : sieve.factor(n)) {
    const i64 kr = checked_mul(static_cast<i64>(k), r);
    if (kr > std::numeric_limits<int>::max()) throw std::overflow_error("evaluate_power: exponent overflow");
    v *= value_at_power(p, static_cast<int>(kr));
  }
  return v;
}

MultiplicativeSpec MultiplicativeSpec::parse(const std::string& text) {
  if (text == "liouville") return liouville();
  if (text == "moebius" || text == "mobius") return moebius();
  if (text == "principal") return principal();
  if (text == "twosquares") return two_squares_sign();
  if (text == "f2neg") return prime_table({{2, {-1.0, 0.0}}}, true);
  auto parse_kv = [](const std::string& body) {
    std::map<std::string, std::string> kv;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("spec: expected key=value, got '" + item + "'");
      kv[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return kv;
  };
  if (text.rfind("char:", 0) == 0) {
    auto kv = parse_kv(text.substr(5));
    return dirichlet(std::stoll(kv.at("q")), kv.count("index") ? std::stoll(kv.at("index")) : 1);
  }
  if (text.rfind("nit:", 0) == 0) {
    auto kv = parse_kv(text.substr(4));
    return archimedean(std::stod(kv.at("t")));
  }
  if (text.rfind("table:", 0) == 0) {
    auto kv = parse_kv(text.substr(6));
    std::map<i64, cplx> at;
    for (const auto& [k, v] : kv) at[std::stoll(k)] = cplx{std::stod(v), 0.0};
    return prime_table(std::move(at), true);
  }
  throw std::invalid_argument("unknown function spec '" + text + "'");
}

FunctionTable::FunctionTable(i64 n, std::vector<cplx> values, bool even_extension)
    : n_(n), even_(even_extension), values_(std::move(values)) {
  if (n < 1 || static_cast<i64>(values_.size()) != n) throw std::invalid_argument("FunctionTable: bad length");
  for (const cplx& v : values_) {
    if (std::abs(v) > 1.0 + 1e-12) throw std::invalid_argument("FunctionTable: values must lie in the unit disc");
  }
}

cplx FunctionTable::at(i64 k) const {
  if (k == 0) {
    if (!even_) throw std::out_of_range("FunctionTable::at: 0 requires even extension");
    return {0.0, 0.0};
  }
  if (k < 0) {
    if (!even_) throw std::out_of_range("FunctionTable::at: negative index requires even extension");
    k = -k;
  }
  if (k > n_) throw std::out_of_range("FunctionTable::at: index beyond N");
  return values_[k - 1];
}

FactorSieve build_sieve(i64 limit) { return FactorSieve(limit); }

cplx evaluate(const MultiplicativeSpec& spec, i64 n, const FactorSieve& sieve) { return spec.evaluate(n, sieve); }

FunctionTable tabulate(const MultiplicativeSpec& spec, i64 n, const FactorSieve& sieve, bool even_extension) {
  if (n > sieve.limit()) throw std::out_of_range("tabulate: N beyond sieve limit");
  std::vector<cplx> vals(static_cast<std::size_t>(n));
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) { vals[i] = spec.evaluate(static_cast<i64>(i) + 1, sieve); });
  return FunctionTable(n, std::move(vals), even_extension);
}

cplx progression_mean(const FunctionTable& table, i64 a, i64 b) {
  if (a < 1) throw std::invalid_argument("progression_mean: step must be >= 1");
  std::vector<cplx> terms;
  for (i64 n = 1; a * n + b <= table.N(); ++n) terms.push_back(table.at(a * n + b));
  if (terms.empty()) throw std::invalid_argument("progression_mean: progression misses [1, N]");
  return pairwise_sum(terms) / static_cast<double>(terms.size());
}

double pretension_distance_partial(const MultiplicativeSpec& f, const MultiplicativeSpec& g, i64 prime_limit, double t,
                                   const FactorSieve& sieve) {
  if (prime_limit < 2) throw std::invalid_argument("pretension_distance_partial: primeLimit must be >= 2");
  double sum = 0.0;
  for (i64 p : sieve.primes_upto(prime_limit)) {
    const double lp = std::log(static_cast<double>(p));
    const cplx pit{std::cos(t * lp), std::sin(t * lp)};
    sum += (1.0 - std::real(f.at_prime(p) * std::conj(g.at_prime(p) * pit))) / static_cast<double>(p);
  }
  return sum;
}

}  // namespace hofa::arith
