#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "adicseq/numtheory.hpp"

namespace adicseq {

/// A periodic binary sequence: one canonical period, indices 0..N-1.
/// Immutable after construction.
class BinarySequence {
 public:
  /// Takes ownership of the bit vector. Throws std::invalid_argument if
  /// empty or any entry is not 0/1.
  explicit BinarySequence(std::vector<std::uint8_t> bits);

  static BinarySequence zeros(std::size_t n);
  static BinarySequence ones(std::size_t n);
  static BinarySequence from_support(std::size_t n, std::span<const std::uint32_t> support);

  std::size_t period() const noexcept { return bits_.size(); }
  std::uint8_t bit(std::size_t i) const { return bits_[i]; }
  std::uint8_t bit_mod(std::uint64_t i) const { return bits_[i % bits_.size()]; }
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

  /// { t : s_t = 1 }, ascending.
  std::vector<std::uint32_t> support() const;
  std::size_t weight() const;

  bool operator==(const BinarySequence&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Cyclic left shift: result_i = s_(i+e mod N). Negative e shifts right.
BinarySequence shift(const BinarySequence& s, std::int64_t e);

/// Bitwise complement.
BinarySequence complement(const BinarySequence& s);

/// Row-major read of the matrix whose columns are the inputs:
/// u_(i*M+j) = columns[j]_i. All columns must share one period.
BinarySequence interleave(std::span<const BinarySequence> columns);

/// Inverse of interleave for a given column count m (m must divide the period).
std::vector<BinarySequence> deinterleave(const BinarySequence& u, std::size_t m);

/// The 4-bit column-offset vector with b(0)=b(2), b(1)=b(3).
struct BVector {
  std::array<std::uint8_t, 4> b{};

  BVector(std::uint8_t b0, std::uint8_t b1, std::uint8_t b2, std::uint8_t b3);
  /// Parses "0101"-style strings. Throws std::invalid_argument on length,
  /// characters, or the b0=b2 / b1=b3 constraint.
  static BVector parse(std::string_view s);
  /// The four admissible vectors: 0000, 0101, 1010, 1111.
  static std::array<BVector, 4> all();

  BVector complemented() const { return {static_cast<std::uint8_t>(1 - b[0]),
                                         static_cast<std::uint8_t>(1 - b[1]),
                                         static_cast<std::uint8_t>(1 - b[2]),
                                         static_cast<std::uint8_t>(1 - b[3])}; }
  std::string str() const;
  bool operator==(const BVector&) const = default;
};

/// The three period-p base sequences with supports D_0uD_1, D_0uD_3, D_1uD_2.
struct DhlTriple {
  BinarySequence s1, s2, s3;
};
DhlTriple dhl_sequences(const ConstructionParams& params);

/// The period-4p sequence I(s3 + b0, L^d s2 + b1, L^2d s1 + b2, L^3d s1 + b3),
/// where "+1" complements a column.
BinarySequence construct_u(const ConstructionParams& params, const BVector& b);

// ---------------------------------------------------------------------------
// text format: line 1 "N=<period>", line 2 the bits as '0'/'1', newline, EOF.
// ---------------------------------------------------------------------------

std::string to_text(const BinarySequence& s);
/// Strict parse of the text format; throws std::runtime_error on any deviation.
BinarySequence from_text(std::string_view text);

void write_sequence_file(const std::string& path, const BinarySequence& s);
BinarySequence read_sequence_file(const std::string& path);

}  // namespace adicseq
