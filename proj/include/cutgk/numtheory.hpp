#pragma once

// Small integer helpers shared by the group and module code.

#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace cutgk::nt {

using PrimeSet = std::set<std::uint64_t>;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Distinct prime divisors, ascending.
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Largest divisor of n whose prime divisors all lie in `primes`.
inline std::uint64_t pi_part(std::uint64_t n, const PrimeSet& primes) {
  std::uint64_t part = 1;
  for (auto p : primes) {
    if (p < 2) continue;
    while (n % p == 0) {
      n /= p;
      part *= p;
    }
  }
  return part;
}

inline std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  return pi_part(n, PrimeSet{p});
}

inline bool is_pi_number(std::uint64_t n, const PrimeSet& primes) {
  return pi_part(n, primes) == n;
}

inline bool is_prime_power(std::uint64_t n, std::uint64_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (auto p : prime_divisors(n)) result = result / p * (p - 1);
  return result;
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1U) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1U;
  }
  return result;
}

/// Inverse of a modulo m; requires gcd(a, m) = 1.
inline std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = ((a % m) + m) % m, r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (m == 1) return 0;
  return ((old_s % m) + m) % m;
}

inline std::uint64_t factorial(unsigned n) {
  std::uint64_t f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace cutgk::nt
