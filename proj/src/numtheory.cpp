#include "adicseq/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace adicseq {

namespace {

std::uint64_t mul_mod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

// Distinct prime factors by trial division; fine at the desk scale the
// construction targets (p - 1 for p up to a few thousand).
std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

std::uint64_t pow_mod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 0) throw std::invalid_argument("pow_mod_u64: zero modulus");
  std::uint64_t r = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) r = mul_mod_u64(r, base, mod);
    base = mul_mod_u64(base, base, mod);
    exp >>= 1;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::uint64_t small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t q : small) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set decides primality for every n < 2^64.
  for (std::uint64_t a : small) {
    std::uint64_t x = pow_mod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t isqrt_u64(std::uint64_t n) {
  if (n == 0) return 0;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

bool is_admissible_prime(std::uint64_t p) {
  if (p < 5 || p % 8 != 5) return false;  // p = 4f+1 with f odd  <=>  p == 5 (mod 8)
  const std::uint64_t x = isqrt_u64(p - 4);
  if (x * x != p - 4) return false;  // needs p = x^2 + 4y^2 with y = +-1
  return is_prime(p);
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("multiplicative_order: p is not prime");
  a %= p;
  if (a == 0) throw std::invalid_argument("multiplicative_order: a divisible by p");
  std::uint64_t order = p - 1;
  for (std::uint64_t q : distinct_prime_factors(p - 1)) {
    while (order % q == 0 && pow_mod_u64(a, order / q, p) == 1) order /= q;
  }
  return order;
}

std::uint64_t smallest_primitive_root(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("smallest_primitive_root: p is not prime");
  if (p == 2) return 1;
  const auto factors = distinct_prime_factors(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool primitive = true;
    for (std::uint64_t q : factors) {
      if (pow_mod_u64(g, (p - 1) / q, p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return g;
  }
  throw std::logic_error("smallest_primitive_root: no generator found");
}

int legendre(std::int64_t i, std::uint64_t p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p))
    throw std::invalid_argument("legendre: p must be an odd prime");
  std::int64_t r = i % static_cast<std::int64_t>(p);
  if (r < 0) r += static_cast<std::int64_t>(p);
  if (r == 0) return 0;
  const std::uint64_t e = pow_mod_u64(static_cast<std::uint64_t>(r), (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

std::array<std::vector<std::uint32_t>, 4> cyclotomic_classes(std::uint64_t p, std::uint64_t g) {
  if (!is_prime(p) || p % 4 != 1)
    throw std::invalid_argument("cyclotomic_classes: p must be a prime == 1 (mod 4)");
  if (g % p == 0 || multiplicative_order(g, p) != p - 1)
    throw std::invalid_argument("cyclotomic_classes: g is not a primitive root of p");
  const std::uint64_t f = (p - 1) / 4;
  const std::uint64_t g4 = pow_mod_u64(g, 4, p);
  std::array<std::vector<std::uint32_t>, 4> classes;
  for (int j = 0; j < 4; ++j) {
    std::uint64_t cur = pow_mod_u64(g, static_cast<std::uint64_t>(j), p);
    classes[j].reserve(f);
    for (std::uint64_t i = 0; i < f; ++i) {
      classes[j].push_back(static_cast<std::uint32_t>(cur));
      cur = mul_mod_u64(cur, g4, p);
    }
    std::sort(classes[j].begin(), classes[j].end());
  }
  return classes;
}

ConstructionParams build_params(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("build_params: p is not prime");
  if ((p - 1) % 4 != 0) throw std::invalid_argument("build_params: p != 1 (mod 4)");
  const std::uint64_t f = (p - 1) / 4;
  if (f % 2 == 0) throw std::invalid_argument("build_params: (p-1)/4 is even");
  const std::uint64_t x = isqrt_u64(p - 4);
  if (x * x != p - 4)
    throw std::invalid_argument("build_params: p-4 is not a perfect square (y != +-1)");

  ConstructionParams params;
  params.p = p;
  params.f = f;
  params.x = x;
  params.y = +1;
  params.g = smallest_primitive_root(p);
  params.d = pow_mod_u64(4 % p, p - 2, p);  // inverse of 4, equals (3p+1)/4
  if (params.d * 4 % p != 1 || (params.d + f) % p != 0)
    throw std::logic_error("build_params: shift parameter d inconsistent");
  params.classes = cyclotomic_classes(p, params.g);
  params.class_of.assign(p, -1);
  for (int j = 0; j < 4; ++j) {
    for (std::uint32_t r : params.classes[j]) params.class_of[r] = static_cast<std::int8_t>(j);
  }
  return params;
}

BigInt big_power_mod(const BigInt& base, const BigInt& exponent, const BigInt& modulus) {
  if (modulus <= 0) throw std::invalid_argument("big_power_mod: modulus must be positive");
  if (exponent < 0) throw std::invalid_argument("big_power_mod: negative exponent");
  BigInt r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

BigInt big_gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt pow2_minus_1(unsigned long n) { return (BigInt(1) << n) - 1; }
BigInt pow2_plus_1(unsigned long n) { return (BigInt(1) << n) + 1; }

}  // namespace adicseq
