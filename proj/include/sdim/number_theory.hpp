#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "sdim/error.hpp"

namespace sdim {

struct PrimePower {
  std::uint64_t prime = 0;
  int exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// n = p_1^{r_1} ... p_m^{r_m} with p_1 < ... < p_m. n = 1 has no factors.
struct PrimeFactorization {
  std::uint64_t n = 1;
  std::vector<PrimePower> factors;

  std::size_t distinct_primes() const noexcept { return factors.size(); }
  bool is_prime_power() const noexcept { return factors.size() == 1; }

  std::vector<std::uint64_t> primes() const {
    std::vector<std::uint64_t> out;
    for (const auto& f : factors) out.push_back(f.prime);
    return out;
  }
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline PrimeFactorization factorize(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidSpec, "cannot factorize 0");
  PrimeFactorization f;
  f.n = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int r = 0;
    while (n % p == 0) {
      n /= p;
      ++r;
    }
    f.factors.push_back({p, r});
  }
  if (n > 1) f.factors.push_back({n, 1});
  return f;
}

inline std::uint64_t ipow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

// Returns k with p^k == n, if n is a power of p (n = 1 gives 0).
inline std::optional<int> exact_log(std::uint64_t n, std::uint64_t p) {
  if (n == 0 || p < 2) return std::nullopt;
  int k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return std::nullopt;
  return k;
}

// 1 or a power of a single prime.
inline bool is_prime_power_or_one(std::uint64_t n) { return n == 1 || factorize(n).is_prime_power(); }

// sigma_n: 1 when n is a prime power, else the sum of exponents. For n = 1
// the value is the convention 1, which keeps omega(R_{Z_1}) = 1.
inline int sigma(const PrimeFactorization& f) {
  if (f.factors.size() <= 1) return 1;
  int s = 0;
  for (const auto& pp : f.factors) s += pp.exponent;
  return s;
}

inline int sigma(std::uint64_t n) { return sigma(factorize(n)); }

}  // namespace sdim
