#include "adicseq/verify.hpp"

#include <exception>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace adicseq {

namespace {

using ordered_json = nlohmann::ordered_json;

BigInt mod_norm(BigInt v, const BigInt& m) {
  v %= m;
  if (v < 0) v += m;
  return v;
}

}  // namespace

BigInt gauss_character_sum(const ConstructionParams& params) {
  BigInt g = 0;
  BigInt term = 0;
  for (std::uint64_t i = 1; i < params.p; ++i) {
    const int chi = legendre(static_cast<std::int64_t>(i), params.p);
    term = 0;
    mpz_setbit(term.get_mpz_t(), static_cast<mp_bitcnt_t>(4 * i));
    if (chi > 0) {
      g += term;
    } else {
      g -= term;
    }
  }
  return g;
}

CheckResult verify_gauss_square(const ConstructionParams& params) {
  const auto p = static_cast<unsigned long>(params.p);
  const BigInt modulus = pow2_plus_1(2 * p) / 5;
  const BigInt g = gauss_character_sum(params);
  const BigInt lhs = mod_norm(g * g, modulus);
  const BigInt rhs = mod_norm(BigInt(params.p), modulus);
  CheckResult res;
  res.pass = lhs == rhs;
  res.witness = "G^2 = " + lhs.get_str() + ", p = " + rhs.get_str() + " (mod (2^2p+1)/5)";
  return res;
}

bool verify_correlation_identity(const BinarySequence& s) {
  const auto n = static_cast<unsigned long>(s.period());
  const BigInt m = pow2_minus_1(n);
  if (m == 1) return true;
  const BigInt lhs = mod_norm(BigInt(-2) * evaluate_U2(s) * evaluate_T_inv2(s, m), m);
  const AutocorrSpectrum spec = spectrum(s);
  BigInt rhs = static_cast<unsigned long>(n);
  BigInt term;
  for (std::size_t tau = 1; tau < s.period(); ++tau) {
    term = spec.values[tau];
    rhs += term << tau;
  }
  return lhs == mod_norm(rhs, m);
}

CheckResult verify_product_congruence(UVariant variant, const ConstructionParams& params) {
  const auto p = static_cast<unsigned long>(params.p);
  const BigInt m = pow2_minus_1(4 * p);
  const BVector b = (variant == UVariant::UPrime) ? BVector{0, 1, 0, 1} : BVector{0, 0, 0, 0};
  const BinarySequence u = construct_u(params, b);
  const BigInt lhs = mod_norm(evaluate_U2(u) * evaluate_T_inv2(u, m), m);

  const BigInt q = m / 15;
  const BigInt two_p = BigInt(1) << p;
  const BigInt mp = pow2_plus_1(2 * p);
  const BigInt yg = params.y * gauss_character_sum(params);
  BigInt inner;
  if (variant == UVariant::UPrime) {
    inner = q + mp * (two_p - 1) + two_p * mp * yg - params.p;
  } else {
    inner = q - mp * (two_p + 1) - two_p * mp * yg - params.p;
  }
  const BigInt rhs = mod_norm(2 * inner, m);

  CheckResult res;
  res.pass = lhs == rhs;
  if (res.pass) {
    res.witness = "U(2)*T(2^-1) = rhs = " + lhs.get_str() + " (mod 2^4p-1), y = " +
                  std::to_string(params.y);
  } else {
    res.witness = "lhs = " + lhs.get_str() + ", rhs = " + rhs.get_str() + " (mod 2^4p-1), y = " +
                  std::to_string(params.y);
  }
  return res;
}

bool VerificationReport::all_pass() const {
  for (const auto& [name, res] : checks) {
    if (!res.pass) return false;
  }
  return true;
}

const CheckResult* VerificationReport::find(std::string_view name) const {
  for (const auto& [n, res] : checks) {
    if (n == name) return &res;
  }
  return nullptr;
}

namespace {

struct GcdContext {
  BigInt u_prime, u_dprime;  // U'(2), U''(2)
  BigInt m_minus, m_plus;    // 2^2p - 1, 2^2p + 1
};

GcdContext make_gcd_context(const ConstructionParams& params) {
  const auto p = static_cast<unsigned long>(params.p);
  GcdContext ctx;
  ctx.u_prime = evaluate_U2(construct_u(params, BVector{0, 1, 0, 1}));
  ctx.u_dprime = evaluate_U2(construct_u(params, BVector{0, 0, 0, 0}));
  ctx.m_minus = pow2_minus_1(2 * p);
  ctx.m_plus = pow2_plus_1(2 * p);
  return ctx;
}

CheckResult check_lemma_3_3(const GcdContext& ctx) {
  const BigInt gm = big_gcd(ctx.u_prime, ctx.m_minus);
  const BigInt gp = big_gcd(ctx.u_prime, ctx.m_plus);
  CheckResult res;
  res.pass = gm == 1 && gp % 5 == 0;
  res.witness = "gcd(U'(2), 2^2p-1) = " + gm.get_str() + ", gcd(U'(2), 2^2p+1) = " + gp.get_str();
  return res;
}

CheckResult check_theorem_3_4(const GcdContext& ctx, std::uint64_t p) {
  const BigInt gp = big_gcd(ctx.u_prime, ctx.m_plus);
  CheckResult res;
  res.pass = gp == 5;
  res.witness = "gcd(U'(2), 2^2p+1) = " + gp.get_str();
  if (p == 5) {
    const BigInt r25 = ctx.u_prime % 25;
    const BigInt r41 = ctx.u_prime % 41;
    res.pass = res.pass && r25 == 15 && r41 == 40;
    res.witness += "; U'(2) = " + r25.get_str() + " (mod 25), " + r41.get_str() + " (mod 41)";
  }
  return res;
}

CheckResult check_lemma_3_9(const GcdContext& ctx) {
  const BigInt g = big_gcd(ctx.u_dprime, ctx.m_minus);
  CheckResult res;
  res.pass = g == 3;
  res.witness = "gcd(U''(2), 2^2p-1) = " + g.get_str();
  return res;
}

CheckResult check_lemma_3_10(const GcdContext& ctx) {
  const BigInt g = big_gcd(ctx.u_dprime, ctx.m_plus / 5);
  CheckResult res;
  res.pass = g == 1;
  res.witness = "gcd(U''(2), (2^2p+1)/5) = " + g.get_str();
  return res;
}

CheckResult check_lemma_3_11(const GcdContext& ctx) {
  const BigInt g = big_gcd(ctx.u_dprime, ctx.m_plus);
  const BigInt r25 = ctx.u_dprime % 25;
  const BigInt r41 = ctx.u_dprime % 41;
  CheckResult res;
  res.pass = g == 25 && r25 == 0 && r41 == 5;
  res.witness = "gcd(U''(2), 2^2p+1) = " + g.get_str() + "; U''(2) = " + r25.get_str() +
                " (mod 25), " + r41.get_str() + " (mod 41)";
  return res;
}

// gcd(U(2), 2^4p - 1) for the four b in BVector::all() order.
std::array<BigInt, 4> four_b_totals(const ConstructionParams& params) {
  const auto n = static_cast<unsigned long>(4 * params.p);
  const BigInt whole = pow2_minus_1(n);
  std::array<BigInt, 4> totals;
  const auto bs = BVector::all();
  for (std::size_t i = 0; i < bs.size(); ++i) {
    totals[i] = big_gcd(evaluate_U2(construct_u(params, bs[i])), whole);
  }
  return totals;
}

// totals order: 0000, 0101, 1010, 1111
CheckResult check_theorem_3_5(const std::array<BigInt, 4>& totals) {
  CheckResult res;
  res.pass = totals[1] == 5 && totals[2] == 5 && totals[1] == totals[2];
  res.witness = "gcd_total(0101) = " + totals[1].get_str() + ", gcd_total(1010) = " +
                totals[2].get_str();
  return res;
}

CheckResult check_theorem_3_12(const std::array<BigInt, 4>& totals, std::uint64_t p) {
  const BigInt expected = (p == 5) ? 75 : 15;
  CheckResult res;
  res.pass = totals[0] == expected && totals[3] == expected && totals[0] == totals[3];
  res.witness = "gcd_total(0000) = " + totals[0].get_str() + ", gcd_total(1111) = " +
                totals[3].get_str();
  return res;
}

CheckResult check_lemma_2_1(const ConstructionParams& params) {
  CheckResult res;
  res.pass = true;
  std::ostringstream w;
  for (const BVector& b : BVector::all()) {
    const AutocorrSpectrum spec = spectrum(construct_u(params, b));
    bool in_range = true;
    for (std::size_t tau = 1; tau < spec.values.size(); ++tau) {
      const int v = spec.values[tau];
      in_range = in_range && (v == 0 || v == 4 || v == -4);
    }
    const bool ok = in_range && spec.classification == AutocorrClass::OptimalMagnitude;
    res.pass = res.pass && ok;
    w << "b=" << b.str() << ":" << (ok ? "{0,+-4}" : "out-of-range") << " ";
  }
  res.witness = w.str();
  return res;
}

CheckResult check_lemma_3_6(const BinarySequence& up, const BinarySequence& upp) {
  const bool a = verify_correlation_identity(up);
  const bool b = verify_correlation_identity(upp);
  CheckResult res;
  res.pass = a && b;
  res.witness = std::string("identity at x=2 for b=0101: ") + (a ? "holds" : "fails") +
                ", b=0000: " + (b ? "holds" : "fails");
  return res;
}

CheckResult check_lemma_3_7(const TableMatch& tm) {
  bool all_cases = true;
  for (std::size_t h : tm.case_hits) all_cases = all_cases && h > 0;
  CheckResult res;
  res.pass = (tm.plus_matches != tm.minus_matches) && all_cases;
  std::ostringstream w;
  if (tm.plus_matches != tm.minus_matches) {
    w << "unique y = " << (tm.plus_matches ? "+1" : "-1");
  } else {
    w << (tm.plus_matches ? "both signs match" : "no sign matches");
  }
  w << "; case hits = [";
  for (std::size_t i = 0; i < tm.case_hits.size(); ++i) {
    w << (i ? "," : "") << tm.case_hits[i];
  }
  w << "]";
  res.witness = w.str();
  return res;
}

}  // namespace

VerificationReport verify_gcd_lemmas(const ConstructionParams& params) {
  const GcdContext ctx = make_gcd_context(params);
  VerificationReport rep;
  rep.p = params.p;
  rep.g = params.g;
  rep.x = params.x;
  rep.y = params.y;
  rep.d = params.d;
  rep.checks.emplace_back("lemma_3_3", check_lemma_3_3(ctx));
  rep.checks.emplace_back("theorem_3_4", check_theorem_3_4(ctx, params.p));
  rep.checks.emplace_back("lemma_3_9", check_lemma_3_9(ctx));
  if (params.p == 5) {
    rep.checks.emplace_back("lemma_3_11", check_lemma_3_11(ctx));
  } else {
    rep.checks.emplace_back("lemma_3_10", check_lemma_3_10(ctx));
  }
  return rep;
}

VerificationReport verify_theorems(const ConstructionParams& params) {
  const auto totals = four_b_totals(params);
  VerificationReport rep;
  rep.p = params.p;
  rep.g = params.g;
  rep.x = params.x;
  rep.y = params.y;
  rep.d = params.d;
  rep.checks.emplace_back("theorem_3_5", check_theorem_3_5(totals));
  rep.checks.emplace_back("theorem_3_12", check_theorem_3_12(totals, params.p));
  return rep;
}

VerificationReport verify_all(const ConstructionParams& base) {
  ConstructionParams params = base;
  const TableMatch tm = match_expected_table(params);
  if (tm.plus_matches != tm.minus_matches) params.y = tm.plus_matches ? +1 : -1;

  const BinarySequence up = construct_u(params, BVector{0, 1, 0, 1});
  const BinarySequence upp = construct_u(params, BVector{0, 0, 0, 0});
  const GcdContext ctx = make_gcd_context(params);
  const auto totals = four_b_totals(params);

  VerificationReport rep;
  rep.p = params.p;
  rep.g = params.g;
  rep.x = params.x;
  rep.y = params.y;
  rep.d = params.d;
  rep.checks.emplace_back("lemma_2_1", check_lemma_2_1(params));
  rep.checks.emplace_back("lemma_3_1", verify_gauss_square(params));
  rep.checks.emplace_back("lemma_3_2", verify_product_congruence(UVariant::UPrime, params));
  rep.checks.emplace_back("lemma_3_3", check_lemma_3_3(ctx));
  rep.checks.emplace_back("theorem_3_4", check_theorem_3_4(ctx, params.p));
  rep.checks.emplace_back("theorem_3_5", check_theorem_3_5(totals));
  rep.checks.emplace_back("lemma_3_6", check_lemma_3_6(up, upp));
  rep.checks.emplace_back("lemma_3_7", check_lemma_3_7(tm));
  rep.checks.emplace_back("lemma_3_8", verify_product_congruence(UVariant::UDoublePrime, params));
  rep.checks.emplace_back("lemma_3_9", check_lemma_3_9(ctx));
  if (params.p == 5) {
    rep.checks.emplace_back("lemma_3_11", check_lemma_3_11(ctx));
  } else {
    rep.checks.emplace_back("lemma_3_10", check_lemma_3_10(ctx));
  }
  rep.checks.emplace_back("theorem_3_12", check_theorem_3_12(totals, params.p));
  return rep;
}

VerificationReport verify_all(std::uint64_t p) { return verify_all(build_params(p)); }

std::vector<VerificationReport> verify_scan(const std::vector<std::uint64_t>& primes) {
  std::vector<VerificationReport> out(primes.size());
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(primes.size()); ++i) {
    try {
      out[static_cast<std::size_t>(i)] = verify_all(primes[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical
      error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

namespace {

ordered_json report_json(const VerificationReport& rep) {
  ordered_json j;
  j["p"] = rep.p;
  j["g"] = rep.g;
  j["x"] = rep.x;
  j["y"] = rep.y;
  j["d"] = rep.d;
  for (const auto& [name, res] : rep.checks) {
    j[name] = ordered_json{{"pass", res.pass}, {"witness", res.witness}};
  }
  return j;
}

constexpr const char* kCsvChecks[] = {
    "lemma_2_1", "lemma_3_1", "lemma_3_2",  "lemma_3_3", "theorem_3_4",  "theorem_3_5",
    "lemma_3_6", "lemma_3_7", "lemma_3_8",  "lemma_3_9", "lemma_3_10",   "lemma_3_11",
    "theorem_3_12",
};

}  // namespace

std::string to_json(const VerificationReport& report, int indent) {
  return report_json(report).dump(indent);
}

std::string to_json(const std::vector<VerificationReport>& reports, int indent) {
  ordered_json arr = ordered_json::array();
  for (const auto& rep : reports) arr.push_back(report_json(rep));
  return arr.dump(indent);
}

std::string scan_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  out << "p,g,x,y,d";
  for (const char* name : kCsvChecks) out << ',' << name;
  out << ",all_pass\n";
  for (const auto& rep : reports) {
    out << rep.p << ',' << rep.g << ',' << rep.x << ',' << rep.y << ',' << rep.d;
    for (const char* name : kCsvChecks) {
      const CheckResult* res = rep.find(name);
      out << ',' << (res ? (res->pass ? "pass" : "fail") : "");
    }
    out << ',' << (rep.all_pass() ? "pass" : "fail") << '\n';
  }
  return out.str();
}

}  // namespace adicseq
