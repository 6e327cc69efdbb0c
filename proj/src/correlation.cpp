#include "adicseq/correlation.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace adicseq {

int autocorrelation(const BinarySequence& s, std::int64_t tau) {
  const auto n = static_cast<std::int64_t>(s.period());
  std::int64_t t = tau % n;
  if (t < 0) t += n;
  int acc = 0;
  for (std::size_t i = 0; i < s.period(); ++i) {
    acc += (s.bit(i) == s.bit_mod(i + static_cast<std::uint64_t>(t))) ? 1 : -1;
  }
  return acc;
}

const char* to_string(AutocorrClass c) {
  switch (c) {
    case AutocorrClass::Perfect: return "perfect (type 4)";
    case AutocorrClass::Ideal: return "ideal (type 1)";
    case AutocorrClass::Type2: return "type 2";
    case AutocorrClass::Type3: return "type 3";
    case AutocorrClass::OptimalValue: return "optimal-value";
    case AutocorrClass::OptimalMagnitude: return "optimal-magnitude";
    case AutocorrClass::None: return "none";
  }
  return "none";
}

AutocorrClass classify(std::size_t period, std::span<const int> values) {
  if (period < 2 || values.size() != period) return AutocorrClass::None;
  std::set<int> out_of_phase(values.begin() + 1, values.end());
  const auto only = [&](std::initializer_list<int> allowed) {
    for (int v : out_of_phase) {
      bool ok = false;
      for (int a : allowed) ok = ok || (v == a);
      if (!ok) return false;
    }
    return true;
  };
  switch (period % 4) {
    case 0:
      if (only({0})) return AutocorrClass::Perfect;
      // the degenerate all-agreeing spectrum {4,...} is not optimal: a zero
      // (resp. both signs) must actually occur
      if ((only({0, 4}) || only({0, -4})) && out_of_phase.count(0))
        return AutocorrClass::OptimalValue;
      if (only({0, 4, -4}) && out_of_phase.count(4) && out_of_phase.count(-4))
        return AutocorrClass::OptimalMagnitude;
      return AutocorrClass::None;
    case 3:
      return only({-1}) ? AutocorrClass::Ideal : AutocorrClass::None;
    case 1:
      return only({1, -3}) ? AutocorrClass::Type2 : AutocorrClass::None;
    default:
      return only({2, -2}) ? AutocorrClass::Type3 : AutocorrClass::None;
  }
}

namespace {

// +-1 view of the bits, doubled so the inner product never wraps.
std::vector<std::int8_t> plus_minus_doubled(const BinarySequence& s) {
  const std::size_t n = s.period();
  std::vector<std::int8_t> pm(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    pm[i] = s.bit(i) ? -1 : 1;
    pm[n + i] = pm[i];
  }
  return pm;
}

AutocorrSpectrum finish(std::size_t n, std::vector<int> values) {
  AutocorrSpectrum spec;
  spec.period = n;
  spec.classification = classify(n, values);
  spec.values = std::move(values);
  return spec;
}

}  // namespace

AutocorrSpectrum spectrum(const BinarySequence& s) {
  const std::size_t n = s.period();
  const auto pm = plus_minus_doubled(s);
  std::vector<int> values(n);
  const std::int8_t* base = pm.data();
#pragma omp parallel for schedule(static)
  for (std::int64_t tau = 0; tau < static_cast<std::int64_t>(n); ++tau) {
    const std::int8_t* shifted = base + tau;
    int acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc += base[i] * shifted[i];
    values[static_cast<std::size_t>(tau)] = acc;
  }
  return finish(n, std::move(values));
}

AutocorrSpectrum spectrum_serial(const BinarySequence& s) {
  const std::size_t n = s.period();
  std::vector<int> values(n);
  for (std::size_t tau = 0; tau < n; ++tau) {
    values[tau] = autocorrelation(s, static_cast<std::int64_t>(tau));
  }
  return finish(n, std::move(values));
}

std::vector<int> expected_spectrum_u2(const ConstructionParams& params, int y) {
  const std::uint64_t p = params.p;
  const std::uint64_t n = 4 * p;
  std::vector<int> v(n);
  v[0] = static_cast<int>(n);
  for (std::uint64_t tau = 1; tau < n; ++tau) {
    const std::uint64_t t1 = tau % 4;
    const std::uint64_t t2 = tau / 4;
    int val;
    if (t1 == 0) {
      val = -4;
    } else if (t1 == 2) {
      val = ((t2 + 2 * params.d) % p == 0) ? 4 : 0;
    } else {  // t1 == 1 or 3: same sign pattern, see header
      const std::uint64_t r = (t2 + t1 * params.d) % p;
      val = (r == 0) ? 4 : (params.in_even_class(r) ? 4 * y : -4 * y);
    }
    v[tau] = val;
  }
  return v;
}

TableMatch match_expected_table(const ConstructionParams& params) {
  const BinarySequence u2 = construct_u(params, BVector{0, 0, 0, 0});
  const AutocorrSpectrum computed = spectrum(u2);
  TableMatch m;
  m.plus_matches = computed.values == expected_spectrum_u2(params, +1);
  m.minus_matches = computed.values == expected_spectrum_u2(params, -1);
  const std::uint64_t p = params.p;
  for (std::uint64_t tau = 1; tau < 4 * p; ++tau) {
    const std::uint64_t t1 = tau % 4;
    const std::uint64_t t2 = tau / 4;
    std::size_t bucket;
    if (t1 == 0) {
      bucket = 0;
    } else if (t1 == 2) {
      bucket = ((t2 + 2 * params.d) % p == 0) ? 4 : 5;
    } else {
      const std::uint64_t r = (t2 + t1 * params.d) % p;
      const std::size_t base = (t1 == 1) ? 1 : 6;
      bucket = (r == 0) ? base : (params.in_even_class(r) ? base + 1 : base + 2);
    }
    ++m.case_hits[bucket];
  }
  return m;
}

int resolve_y_sign(ConstructionParams& params) {
  const TableMatch m = match_expected_table(params);
  if (m.plus_matches == m.minus_matches) {
    throw std::runtime_error(m.plus_matches
                                 ? "resolve_y_sign: both signs match the computed spectrum"
                                 : "resolve_y_sign: neither sign matches the computed spectrum");
  }
  params.y = m.plus_matches ? +1 : -1;
  return params.y;
}

std::string to_csv(const AutocorrSpectrum& spec) {
  std::ostringstream out;
  out << "tau,C\n";
  for (std::size_t tau = 0; tau < spec.values.size(); ++tau) {
    out << tau << ',' << spec.values[tau] << '\n';
  }
  return out.str();
}

}  // namespace adicseq
