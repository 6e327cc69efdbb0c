#include "adicseq/complexity.hpp"

#include <cmath>
#include <stdexcept>

namespace adicseq {

BigInt evaluate_U2(const BinarySequence& s) {
  BigInt u = 0;
  for (std::size_t i = 0; i < s.period(); ++i) {
    if (s.bit(i)) mpz_setbit(u.get_mpz_t(), static_cast<mp_bitcnt_t>(i));
  }
  return u;
}

BigInt evaluate_T_inv2(const BinarySequence& s, const BigInt& modulus) {
  if (modulus <= 0) throw std::invalid_argument("evaluate_T_inv2: modulus must be positive");
  if (mpz_even_p(modulus.get_mpz_t()))
    throw std::invalid_argument("evaluate_T_inv2: modulus must be odd");
  if (modulus == 1) return 0;
  const BigInt inv2 = (modulus + 1) / 2;
  BigInt acc = 0, pw = 1;
  for (std::size_t i = 0; i < s.period(); ++i) {
    if (s.bit(i)) {
      acc -= pw;
    } else {
      acc += pw;
    }
    pw = pw * inv2 % modulus;
  }
  acc %= modulus;
  if (acc < 0) acc += modulus;
  return acc;
}

namespace {

// log2 of a positive integer through a 53-bit mantissa; relative error of
// the result is far below the 2^-40 the reports promise.
double log2_mpz(const BigInt& q) {
  signed long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, q.get_mpz_t());
  return std::log2(mant) + static_cast<double>(exp2);
}

}  // namespace

AdicReport two_adic_complexity(const BinarySequence& s) {
  AdicReport rep;
  rep.period = s.period();
  rep.u2 = evaluate_U2(s);
  const auto n = static_cast<unsigned long>(s.period());
  const BigInt whole = pow2_minus_1(n);
  rep.gcd_total = big_gcd(rep.u2, whole);
  if (n % 2 == 0) {
    rep.has_split = true;
    rep.gcd_minus = big_gcd(rep.u2, pow2_minus_1(n / 2));
    rep.gcd_plus = big_gcd(rep.u2, pow2_plus_1(n / 2));
  }
  rep.quotient = whole / rep.gcd_total;
  rep.phi2 = (rep.quotient == 1) ? 0.0 : log2_mpz(rep.quotient);
  return rep;
}

std::size_t linear_complexity(const BinarySequence& s) {
  const std::size_t n2 = 2 * s.period();
  std::vector<std::uint8_t> bits(n2);
  for (std::size_t i = 0; i < n2; ++i) bits[i] = s.bit(i % s.period());

  // Berlekamp-Massey over GF(2)
  std::vector<std::uint8_t> c(n2 + 1, 0), b(n2 + 1, 0);
  c[0] = b[0] = 1;
  std::size_t L = 0;
  std::int64_t last = -1;  // index of the last length change
  for (std::size_t i = 0; i < n2; ++i) {
    std::uint8_t delta = bits[i];
    for (std::size_t j = 1; j <= L; ++j) delta ^= static_cast<std::uint8_t>(c[j] & bits[i - j]);
    if (!delta) continue;
    const std::vector<std::uint8_t> saved = c;
    const auto off = static_cast<std::size_t>(static_cast<std::int64_t>(i) - last);
    for (std::size_t j = 0; j + off <= n2; ++j) c[j + off] ^= b[j];
    if (2 * L <= i) {
      L = i + 1 - L;
      last = static_cast<std::int64_t>(i);
      b = saved;
    }
  }
  return L;
}

}  // namespace adicseq
