#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "adicseq/sequence.hpp"

namespace adicseq {

/// C_s(tau) = sum_i (-1)^(s_i + s_(i+tau)), exact integer in [-N, N].
int autocorrelation(const BinarySequence& s, std::int64_t tau);

enum class AutocorrClass {
  Perfect,           // N == 0 (mod 4), all out-of-phase values 0
  Ideal,             // N == 3 (mod 4), all -1
  Type2,             // N == 1 (mod 4), values in {1, -3}
  Type3,             // N == 2 (mod 4), values in {2, -2}
  OptimalValue,      // N == 0 (mod 4), values in {0, 4} or {0, -4}, 0 attained
  OptimalMagnitude,  // N == 0 (mod 4), values in {0, +-4}, both signs attained
  None,
};

const char* to_string(AutocorrClass c);

struct AutocorrSpectrum {
  std::size_t period = 0;
  std::vector<int> values;  // values[tau] = C(tau); values[0] == period
  AutocorrClass classification = AutocorrClass::None;
};

/// Strongest class the out-of-phase values support (precedence:
/// perfect > optimal-value > optimal-magnitude within N == 0 mod 4).
AutocorrClass classify(std::size_t period, std::span<const int> values);

/// Full spectrum; tau rows are independent and computed under OpenMP.
AutocorrSpectrum spectrum(const BinarySequence& s);

/// Serial reference implementation of the same spectrum, kept for tests
/// and benchmarks; evaluates the definition directly.
AutocorrSpectrum spectrum_serial(const BinarySequence& s);

/// Predicted autocorrelation of the b = (0,0,0,0) sequence for a candidate
/// y, as a vector indexed by tau (entry 0 set to N). Nine cases on
/// (tau1, tau2) = (tau mod 4, tau div 4):
///   tau1=0: -4 (tau2 != 0)
///   tau1=1: 4 if tau2+d == 0 (mod p), else +-4y by the class of tau2+d
///   tau1=2: 4 if tau2+2d == 0 (mod p), else 0
///   tau1=3: 4 if tau2+3d == 0 (mod p), else +-4y by the class of tau2+3d
/// The tau1=3 class rows carry the same sign pattern as tau1=1 (+4y on
/// D_0 u D_2): C(tau) = C(4p - tau) always, and negation maps D_0 u D_2
/// onto itself because -1 = g^(2f) lands in D_2 when f is odd, so the
/// mirrored offsets are forced onto the same value.
std::vector<int> expected_spectrum_u2(const ConstructionParams& params, int y);

/// Comparison of the computed b=(0,0,0,0) spectrum against the predicted
/// table for both candidate signs, plus per-case coverage counts
/// (indices: 0 tau1=0; 1-3 tau1=1 zero/even/odd class; 4-5 tau1=2
/// zero/nonzero; 6-8 tau1=3 zero/even/odd class).
struct TableMatch {
  bool plus_matches = false;
  bool minus_matches = false;
  std::array<std::size_t, 9> case_hits{};
};
TableMatch match_expected_table(const ConstructionParams& params);

/// Fixes params.y to the unique sign whose predicted table equals the
/// computed spectrum; returns it. Throws std::runtime_error if neither
/// or both signs match.
int resolve_y_sign(ConstructionParams& params);

/// CSV export: header "tau,C" and one row per tau in [0, N).
std::string to_csv(const AutocorrSpectrum& spec);

}  // namespace adicseq
