#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace adicseq {

using BigInt = mpz_class;

// ---------------------------------------------------------------------------
// word-size arithmetic
// ---------------------------------------------------------------------------

/// Deterministic Miller-Rabin, exact for every n < 2^64.
bool is_prime(std::uint64_t n);

std::uint64_t pow_mod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// Floor square root of a 64-bit integer.
std::uint64_t isqrt_u64(std::uint64_t n);

/// Primes of the form p = x^2 + 4 (x odd) with (p-1)/4 odd: exactly the
/// moduli accepted by the period-4p construction. Equivalent test:
/// p prime, p == 5 (mod 8), p - 4 a perfect square.
bool is_admissible_prime(std::uint64_t p);

/// Least g >= 2 whose multiplicative order mod p is p-1 (p = 2 yields 1).
/// Throws std::invalid_argument if p is not prime.
std::uint64_t smallest_primitive_root(std::uint64_t p);

/// Multiplicative order of a mod p (a not divisible by p, p prime).
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t p);

/// Quadratic residue character of i mod p, valued in {-1, 0, +1};
/// computed by Euler's criterion. Throws std::invalid_argument unless p
/// is an odd prime.
int legendre(std::int64_t i, std::uint64_t p);

/// The four cosets D_j = { g^(j+4i) mod p : 0 <= i < (p-1)/4 } of the
/// quartic residues, each returned sorted. Requires p == 1 (mod 4) prime
/// and g a primitive root of p; throws std::invalid_argument otherwise.
std::array<std::vector<std::uint32_t>, 4>
cyclotomic_classes(std::uint64_t p, std::uint64_t g);

// ---------------------------------------------------------------------------
// construction context
// ---------------------------------------------------------------------------

/// Arithmetic context for one admissible prime p = 4f+1 = x^2 + 4y^2, y = +-1.
/// y starts as a provisional +1; resolve_y_sign (correlation module) fixes it
/// against the computed autocorrelation of the b = (0,0,0,0) sequence.
struct ConstructionParams {
  std::uint64_t p = 0;  // admissible prime
  std::uint64_t f = 0;  // (p-1)/4, odd
  std::uint64_t x = 0;  // positive root of p-4
  int y = +1;           // provisional until resolved
  std::uint64_t g = 0;  // smallest primitive root of p
  std::uint64_t d = 0;  // 4d == 1 (mod p), in [1, p-1]
  std::array<std::vector<std::uint32_t>, 4> classes;  // D_0..D_3
  std::vector<std::int8_t> class_of;  // size p; index of the class of r, -1 for r == 0

  /// Class index of residue r (r reduced mod p); -1 for r == 0 (mod p).
  int class_index(std::uint64_t r) const { return class_of[r % p]; }
  /// r in D_0 u D_2 (the quadratic residues).
  bool in_even_class(std::uint64_t r) const {
    const int c = class_index(r);
    return c >= 0 && c % 2 == 0;
  }
};

/// Validates admissibility and assembles the full context.
/// Throws std::invalid_argument naming the first violated condition.
ConstructionParams build_params(std::uint64_t p);

// ---------------------------------------------------------------------------
// arbitrary-precision helpers
// ---------------------------------------------------------------------------

/// base^exponent mod modulus, exact. Throws std::invalid_argument for
/// modulus <= 0 or exponent < 0.
BigInt big_power_mod(const BigInt& base, const BigInt& exponent, const BigInt& modulus);

/// gcd(|a|, |b|), exact; big_gcd(0, m) == |m|.
BigInt big_gcd(const BigInt& a, const BigInt& b);

/// 2^n - 1 and 2^n + 1.
BigInt pow2_minus_1(unsigned long n);
BigInt pow2_plus_1(unsigned long n);

}  // namespace adicseq
