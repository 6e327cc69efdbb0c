#include "adicseq/sequence.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace adicseq {

BinarySequence::BinarySequence(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw std::invalid_argument("BinarySequence: empty period");
  for (std::uint8_t b : bits_) {
    if (b > 1) throw std::invalid_argument("BinarySequence: entries must be 0 or 1");
  }
}

BinarySequence BinarySequence::zeros(std::size_t n) {
  return BinarySequence(std::vector<std::uint8_t>(n, 0));
}

BinarySequence BinarySequence::ones(std::size_t n) {
  return BinarySequence(std::vector<std::uint8_t>(n, 1));
}

BinarySequence BinarySequence::from_support(std::size_t n, std::span<const std::uint32_t> support) {
  std::vector<std::uint8_t> bits(n, 0);
  for (std::uint32_t t : support) {
    if (t >= n) throw std::invalid_argument("from_support: index out of range");
    bits[t] = 1;
  }
  return BinarySequence(std::move(bits));
}

std::vector<std::uint32_t> BinarySequence::support() const {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out.push_back(static_cast<std::uint32_t>(i));
  }
  return out;
}

std::size_t BinarySequence::weight() const {
  std::size_t w = 0;
  for (std::uint8_t b : bits_) w += b;
  return w;
}

BinarySequence shift(const BinarySequence& s, std::int64_t e) {
  const auto n = static_cast<std::int64_t>(s.period());
  std::int64_t r = e % n;
  if (r < 0) r += n;
  std::vector<std::uint8_t> bits(s.period());
  for (std::size_t i = 0; i < s.period(); ++i) {
    bits[i] = s.bit((i + static_cast<std::size_t>(r)) % s.period());
  }
  return BinarySequence(std::move(bits));
}

BinarySequence complement(const BinarySequence& s) {
  std::vector<std::uint8_t> bits(s.period());
  for (std::size_t i = 0; i < s.period(); ++i) bits[i] = 1 - s.bit(i);
  return BinarySequence(std::move(bits));
}

BinarySequence interleave(std::span<const BinarySequence> columns) {
  if (columns.empty()) throw std::invalid_argument("interleave: no columns");
  const std::size_t n = columns[0].period();
  for (const auto& c : columns) {
    if (c.period() != n) throw std::invalid_argument("interleave: column periods differ");
  }
  const std::size_t m = columns.size();
  std::vector<std::uint8_t> bits(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) bits[i * m + j] = columns[j].bit(i);
  }
  return BinarySequence(std::move(bits));
}

std::vector<BinarySequence> deinterleave(const BinarySequence& u, std::size_t m) {
  if (m == 0 || u.period() % m != 0)
    throw std::invalid_argument("deinterleave: column count must divide the period");
  const std::size_t n = u.period() / m;
  std::vector<BinarySequence> cols;
  cols.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<std::uint8_t> bits(n);
    for (std::size_t i = 0; i < n; ++i) bits[i] = u.bit(i * m + j);
    cols.emplace_back(std::move(bits));
  }
  return cols;
}

BVector::BVector(std::uint8_t b0, std::uint8_t b1, std::uint8_t b2, std::uint8_t b3)
    : b{b0, b1, b2, b3} {
  for (std::uint8_t v : b) {
    if (v > 1) throw std::invalid_argument("BVector: entries must be 0 or 1");
  }
  if (b[0] != b[2] || b[1] != b[3])
    throw std::invalid_argument("BVector: requires b0 = b2 and b1 = b3");
}

BVector BVector::parse(std::string_view s) {
  if (s.size() != 4) throw std::invalid_argument("BVector: expected 4 characters");
  std::array<std::uint8_t, 4> v{};
  for (int i = 0; i < 4; ++i) {
    if (s[i] != '0' && s[i] != '1')
      throw std::invalid_argument("BVector: characters must be '0' or '1'");
    v[i] = static_cast<std::uint8_t>(s[i] - '0');
  }
  return {v[0], v[1], v[2], v[3]};
}

std::array<BVector, 4> BVector::all() {
  return {BVector{0, 0, 0, 0}, BVector{0, 1, 0, 1}, BVector{1, 0, 1, 0}, BVector{1, 1, 1, 1}};
}

std::string BVector::str() const {
  std::string s(4, '0');
  for (int i = 0; i < 4; ++i) s[i] = static_cast<char>('0' + b[i]);
  return s;
}

DhlTriple dhl_sequences(const ConstructionParams& params) {
  const auto n = static_cast<std::size_t>(params.p);
  auto from_classes = [&](int a, int b) {
    std::vector<std::uint8_t> bits(n, 0);
    for (std::uint32_t r : params.classes[a]) bits[r] = 1;
    for (std::uint32_t r : params.classes[b]) bits[r] = 1;
    return BinarySequence(std::move(bits));
  };
  return DhlTriple{from_classes(0, 1), from_classes(0, 3), from_classes(1, 2)};
}

BinarySequence construct_u(const ConstructionParams& params, const BVector& b) {
  const auto [s1, s2, s3] = dhl_sequences(params);
  const auto d = static_cast<std::int64_t>(params.d);
  std::array<BinarySequence, 4> cols{s3, shift(s2, d), shift(s1, 2 * d), shift(s1, 3 * d)};
  for (int j = 0; j < 4; ++j) {
    if (b.b[j]) cols[j] = complement(cols[j]);
  }
  return interleave(cols);
}

std::string to_text(const BinarySequence& s) {
  std::string out = "N=" + std::to_string(s.period()) + "\n";
  out.reserve(out.size() + s.period() + 1);
  for (std::size_t i = 0; i < s.period(); ++i) out.push_back(s.bit(i) ? '1' : '0');
  out.push_back('\n');
  return out;
}

BinarySequence from_text(std::string_view text) {
  const auto fail = [](const std::string& why) -> BinarySequence {
    throw std::runtime_error("malformed sequence file: " + why);
  };
  const std::size_t nl = text.find('\n');
  if (nl == std::string_view::npos) return fail("missing newline after header");
  const std::string_view header = text.substr(0, nl);
  if (header.size() < 3 || header.substr(0, 2) != "N=") return fail("header must be N=<period>");
  std::uint64_t n = 0;
  for (char c : header.substr(2)) {
    if (c < '0' || c > '9') return fail("non-digit in period");
    n = n * 10 + static_cast<std::uint64_t>(c - '0');
    if (n > 100000000) return fail("period out of range");
  }
  if (n == 0) return fail("period must be positive");
  std::string_view rest = text.substr(nl + 1);
  if (rest.size() < n) return fail("fewer bits than the declared period");
  std::vector<std::uint8_t> bits(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rest[i] == '0') bits[i] = 0;
    else if (rest[i] == '1') bits[i] = 1;
    else return fail("bit characters must be '0' or '1'");
  }
  std::string_view tail = rest.substr(n);
  if (!tail.empty() && tail != "\n") return fail("trailing content after the bits");
  return BinarySequence(std::move(bits));
}

void write_sequence_file(const std::string& path, const BinarySequence& s) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << to_text(s);
  if (!f) throw std::runtime_error("write failed: " + path);
}

BinarySequence read_sequence_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return from_text(ss.str());
}

}  // namespace adicseq
