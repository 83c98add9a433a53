#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace tmc {

/// Euler totient by trial-division factorization. totient(1) == 1.
std::uint64_t totient(std::uint64_t n);

/// Distinct prime factors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Divisors of n in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// base^exp, throwing std::overflow_error instead of wrapping.
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp);

/// Nonnegative residue of a mod m (m > 0).
inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

/// (a * b) mod m without overflow for 64-bit operands.
inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

}  // namespace tmc
