#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "adicseq/correlation.hpp"
#include "adicseq/complexity.hpp"

namespace adicseq {

/// G = sum_{i=1}^{p-1} legendre(i, p) * 2^(4i), as an exact signed integer.
BigInt gauss_character_sum(const ConstructionParams& params);

struct CheckResult {
  bool pass = false;
  std::string witness;  // the residues/gcds the verdict was decided on
};

/// G^2 == p (mod (2^(2p)+1)/5). Witness carries both residues.
CheckResult verify_gauss_square(const ConstructionParams& params);

/// Universal identity, instantiated at x = 2 modulo 2^N - 1:
///   -2 U(2) T(2^-1) == N + sum_{tau=1}^{N-1} C(tau) 2^tau.
/// Holds for every periodic binary sequence.
bool verify_correlation_identity(const BinarySequence& s);

enum class UVariant {
  UPrime,        // b = (0,1,0,1)
  UDoublePrime,  // b = (0,0,0,0)
};

/// Product congruences mod 2^(4p)-1, with Q = (2^(4p)-1)/15 and the
/// resolved y:
///   U'(2)  T'(2^-1)  == 2 [ Q + (2^(2p)+1)(2^p - 1) + 2^p (2^(2p)+1) y G - p ]
///   U''(2) T''(2^-1) == 2 [ Q - (2^(2p)+1)(2^p + 1) - 2^p (2^(2p)+1) y G - p ]
/// Uses params.y, so resolve it first; exactly one sign satisfies both.
CheckResult verify_product_congruence(UVariant variant, const ConstructionParams& params);

/// One prime's verification outcome: the context plus named checks in
/// report order. Check names double as the JSON keys.
struct VerificationReport {
  std::uint64_t p = 0, g = 0, x = 0, d = 0;
  int y = 0;
  std::vector<std::pair<std::string, CheckResult>> checks;

  bool all_pass() const;
  const CheckResult* find(std::string_view name) const;
};

/// gcd facts for U'(2) and U''(2) against 2^(2p) -+ 1, branching on p = 5:
/// checks lemma_3_3, theorem_3_4, lemma_3_9, and lemma_3_10 (p != 5) or
/// lemma_3_11 (p = 5).
VerificationReport verify_gcd_lemmas(const ConstructionParams& params);

/// Full-period gcd values for all four admissible b: 5 for the
/// (0,1,0,1)/(1,0,1,0) pair, 75 (p = 5) or 15 (p != 5) for the
/// (0,0,0,0)/(1,1,1,1) pair, with complement-pair equality
/// (checks theorem_3_5 and theorem_3_12).
VerificationReport verify_theorems(const ConstructionParams& params);

/// The whole suite for one prime, in report order: lemma_2_1, lemma_3_1,
/// lemma_3_2, lemma_3_3, theorem_3_4, theorem_3_5, lemma_3_6, lemma_3_7,
/// lemma_3_8, lemma_3_9, lemma_3_10 | lemma_3_11, theorem_3_12.
/// y is resolved internally and reported.
VerificationReport verify_all(const ConstructionParams& base);
VerificationReport verify_all(std::uint64_t p);

/// verify_all over many primes, one OpenMP task per prime; output order
/// matches input order.
std::vector<VerificationReport> verify_scan(const std::vector<std::uint64_t>& primes);

/// JSON object with keys p, g, x, y, d, then one {"pass","witness"} object
/// per check; scan output is an array of these.
std::string to_json(const VerificationReport& report, int indent = 2);
std::string to_json(const std::vector<VerificationReport>& reports, int indent = 2);

/// One CSV row per prime: p,g,x,y,d, pass/fail per check column (empty when
/// not applicable), then all_pass.
std::string scan_csv(const std::vector<VerificationReport>& reports);

}  // namespace adicseq
