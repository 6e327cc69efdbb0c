#pragma once

#include <cstdint>
#include <string>

#include "adicseq/sequence.hpp"

namespace adicseq {

/// Exact 2-adic complexity data for one sequence. The authoritative result
/// is the integer quotient (2^N - 1) / gcd_total; phi2 = log2(quotient) is
/// derived presentation only.
struct AdicReport {
  std::size_t period = 0;
  BigInt u2;         // U(2) = sum of 2^i over the support, canonical indices
  BigInt gcd_total;  // gcd(U(2), 2^N - 1)
  bool has_split = false;  // period even: factors 2^(N/2) -+ 1 are coprime
  BigInt gcd_minus;  // gcd(U(2), 2^(N/2) - 1)
  BigInt gcd_plus;   // gcd(U(2), 2^(N/2) + 1)
  BigInt quotient;   // (2^N - 1) / gcd_total, exact
  double phi2 = 0.0;
};

/// U(2) = sum_{i: s_i = 1} 2^i with indices 0..N-1; 0 <= result < 2^N.
BigInt evaluate_U2(const BinarySequence& s);

/// T(2^-1) mod modulus, where T(x) = sum_i (-1)^(s_i) x^i and
/// 2^-1 = (modulus+1)/2. Throws std::invalid_argument for even or
/// non-positive moduli.
BigInt evaluate_T_inv2(const BinarySequence& s, const BigInt& modulus);

AdicReport two_adic_complexity(const BinarySequence& s);

/// Length of the shortest GF(2) linear recurrence generating the periodic
/// sequence; Berlekamp-Massey over two full periods (LC <= N, so 2N bits
/// determine it).
std::size_t linear_complexity(const BinarySequence& s);

}  // namespace adicseq
