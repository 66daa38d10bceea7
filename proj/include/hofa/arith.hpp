#pragma once

#include <map>
#include <memory>
#include <string>

#include "hofa/common.hpp"

namespace hofa::arith {

/// Smallest-prime-factor sieve for 2..limit.
class FactorSieve {
 public:
  explicit FactorSieve(i64 limit);

  i64 limit() const { return limit_; }
  i64 spf(i64 n) const;
  bool is_prime(i64 n) const { return n >= 2 && spf(n) == n; }

  /// Prime factorization of n >= 1 as (prime, exponent) pairs, ascending.
  std::vector<std::pair<i64, int>> factor(i64 n) const;
  std::vector<i64> primes_upto(i64 limit) const;

 private:
  i64 limit_;
  std::vector<int32_t> spf_;  // spf_[n] valid up to limit (32-bit is enough for our ranges)
};

/// Dirichlet character of modulus q, indexed by exponents on fixed generators
/// of the unit group. Supported moduli: q with 8 ∤ q (every factor 2, 4 or p^k
/// has cyclic unit group); the character is assembled by CRT over the factors.
class DirichletCharacter {
 public:
  DirichletCharacter(i64 q, i64 index);

  i64 modulus() const { return q_; }
  i64 index() const { return index_; }
  bool principal() const;
  cplx operator()(i64 n) const;

 private:
  i64 q_, index_;
  std::vector<cplx> values_;  // period table, values_[n mod q]
};

/// A bounded multiplicative function, evaluated through prime factorization.
class MultiplicativeSpec {
 public:
  enum class Kind { Liouville, Moebius, Principal, DirichletChar, ArchimedeanTwist, PrimeTable, PrimeFunction };

  static MultiplicativeSpec liouville();
  static MultiplicativeSpec moebius();
  static MultiplicativeSpec principal();
  static MultiplicativeSpec dirichlet(i64 q, i64 index);
  static MultiplicativeSpec archimedean(double t);  // n^{it}
  /// Explicit prime table. Unspecified primes default to 1. Non-complete specs
  /// take prime-power entries via the (p,k) map, defaulting to f(p)^k.
  static MultiplicativeSpec prime_table(std::map<i64, cplx> at_primes, bool complete,
                                        std::map<std::pair<i64, int>, cplx> at_powers = {});
  /// Value at p^k given by a callback (must stay in the unit disc).
  static MultiplicativeSpec prime_function(std::string name, std::function<cplx(i64, int)> f);

  /// f(p) = -1 for p = 3 mod 4, else 1; completely multiplicative with
  /// f(m^2+n^2) = 1 for all m,n.
  static MultiplicativeSpec two_squares_sign();

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  bool completely_multiplicative() const;

  /// Even-extension evaluation: f(0)=0, f(-n)=f(n). |n| must be within the sieve.
  cplx evaluate(i64 n, const FactorSieve& sieve) const;
  /// f(|n|^r) computed by factoring |n| and scaling exponents by r, so only
  /// |n| needs to fit in the sieve. f(0^r)=0, f(n^0)=1 for n != 0.
  cplx evaluate_power(i64 n, i64 r, const FactorSieve& sieve) const;
  /// Value at a prime p (used by the pretension distance).
  cplx at_prime(i64 p) const;

  /// Parses "liouville", "moebius", "principal", "twosquares", "f2neg",
  /// "char:q=5,index=1", "nit:t=1.0", "table:p1=v1,p2=v2,..." .
  static MultiplicativeSpec parse(const std::string& text);

 private:
  MultiplicativeSpec(Kind k, std::string name) : kind_(k), name_(std::move(name)) {}
  cplx value_at_power(i64 p, int k) const;

  Kind kind_;
  std::string name_;
  double t_ = 0.0;
  bool complete_ = true;
  std::shared_ptr<DirichletCharacter> chi_;
  std::map<i64, cplx> at_primes_;
  std::map<std::pair<i64, int>, cplx> at_powers_;
  std::function<cplx(i64, int)> fn_;
};

/// Sampled values of f on [N]; even extension gives f(0)=0, f(-n)=f(n).
class FunctionTable {
 public:
  FunctionTable(i64 n, std::vector<cplx> values, bool even_extension = false);

  i64 N() const { return n_; }
  bool even_extension() const { return even_; }
  /// f(k) for 1 <= k <= N, or any |k| <= N when evenly extended.
  cplx at(i64 k) const;
  const std::vector<cplx>& values() const { return values_; }

 private:
  i64 n_;
  bool even_;
  std::vector<cplx> values_;  // values_[k-1] = f(k)
};

FactorSieve build_sieve(i64 limit);
cplx evaluate(const MultiplicativeSpec& spec, i64 n, const FactorSieve& sieve);
FunctionTable tabulate(const MultiplicativeSpec& spec, i64 n, const FactorSieve& sieve, bool even_extension = false);

/// Mean of f(an+b) over {n >= 1 : an+b <= N}.
cplx progression_mean(const FunctionTable& table, i64 a, i64 b);

/// Partial pretension distance squared:
/// sum_{p <= primeLimit} (1 - Re(f(p) conj(g(p) p^{it}))) / p.
double pretension_distance_partial(const MultiplicativeSpec& f, const MultiplicativeSpec& g, i64 prime_limit, double t,
                                   const FactorSieve& sieve);

}  // namespace hofa::arith
