// adicseq: construct period-4p interleaved binary sequences, compute their
// autocorrelation spectra and exact 2-adic complexity, and run the full
// identity/gcd verification suite over admissible primes.
//
// Exit codes: 0 success (all checks pass), 1 verification failure,
// 2 usage or input error.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "adicseq/correlation.hpp"
#include "adicseq/complexity.hpp"
#include "adicseq/sequence.hpp"
#include "adicseq/verify.hpp"

namespace {

using adicseq::BinarySequence;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::uint64_t p = 0;
  std::string b;
  std::uint64_t max_p = 0;
  std::string p_list;
  std::string in;
  std::string out;
  std::string format = "table";
};

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + opt.out);
  f << text;
  if (!f) throw std::runtime_error("write failed: " + opt.out);
}

std::vector<std::uint64_t> admissible_up_to(std::uint64_t max_p) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 1; x * x + 4 <= max_p; x += 2) {
    if (adicseq::is_admissible_prime(x * x + 4)) out.push_back(x * x + 4);
  }
  return out;
}

// Sequence named by --in, or constructed from --p/--b.
BinarySequence input_sequence(const Options& opt) {
  if (!opt.in.empty()) return adicseq::read_sequence_file(opt.in);
  if (opt.p == 0 || opt.b.empty())
    throw std::invalid_argument("need either --in or both --p and --b");
  const auto params = adicseq::build_params(opt.p);
  return adicseq::construct_u(params, adicseq::BVector::parse(opt.b));
}

int cmd_primes(const Options& opt) {
  if (opt.max_p < 5) throw std::invalid_argument("--max-p must be at least 5");
  const auto primes = admissible_up_to(opt.max_p);
  std::ostringstream out;
  if (opt.format == "json") {
    ordered_json arr = ordered_json::array();
    for (std::uint64_t p : primes) {
      arr.push_back(ordered_json{{"p", p}, {"x", adicseq::isqrt_u64(p - 4)}, {"f", (p - 1) / 4}});
    }
    out << arr.dump(2) << '\n';
  } else if (opt.format == "csv") {
    out << "p,x,f\n";
    for (std::uint64_t p : primes) {
      out << p << ',' << adicseq::isqrt_u64(p - 4) << ',' << (p - 1) / 4 << '\n';
    }
  } else {
    for (std::uint64_t p : primes) {
      out << "p=" << p << " x=" << adicseq::isqrt_u64(p - 4) << " f=" << (p - 1) / 4 << '\n';
    }
  }
  emit(opt, out.str());
  return kExitOk;
}

int cmd_construct(const Options& opt) {
  if (opt.p == 0 || opt.b.empty()) throw std::invalid_argument("construct needs --p and --b");
  const auto params = adicseq::build_params(opt.p);
  const BinarySequence u = adicseq::construct_u(params, adicseq::BVector::parse(opt.b));
  const std::string summary =
      "N=" + std::to_string(u.period()) + " weight=" + std::to_string(u.weight()) + "\n";
  if (opt.out.empty()) {
    std::cout << adicseq::to_text(u);
    std::cerr << summary;
  } else {
    adicseq::write_sequence_file(opt.out, u);
    std::cout << summary;
  }
  return kExitOk;
}

int cmd_autocorr(const Options& opt) {
  const BinarySequence s = input_sequence(opt);
  const auto spec = adicseq::spectrum(s);
  std::ostringstream out;
  if (opt.format == "csv") {
    out << adicseq::to_csv(spec);
  } else if (opt.format == "json") {
    ordered_json j;
    j["period"] = spec.period;
    j["classification"] = adicseq::to_string(spec.classification);
    j["values"] = spec.values;
    out << j.dump(2) << '\n';
  } else {
    out << "period: " << spec.period << '\n'
        << "classification: " << adicseq::to_string(spec.classification) << '\n';
    for (std::size_t tau = 0; tau < spec.values.size(); ++tau) {
      out << tau << ' ' << spec.values[tau] << '\n';
    }
  }
  emit(opt, out.str());
  return kExitOk;
}

int cmd_adic(const Options& opt) {
  const BinarySequence s = input_sequence(opt);
  const auto rep = adicseq::two_adic_complexity(s);
  std::ostringstream out;
  if (opt.format == "json") {
    ordered_json j;
    j["period"] = rep.period;
    j["U2"] = rep.u2.get_str();
    j["gcd_total"] = rep.gcd_total.get_str();
    if (rep.has_split) {
      j["gcd_minus"] = rep.gcd_minus.get_str();
      j["gcd_plus"] = rep.gcd_plus.get_str();
    }
    j["quotient"] = rep.quotient.get_str();
    j["phi2"] = rep.phi2;
    out << j.dump(2) << '\n';
  } else if (opt.format == "csv") {
    out << "period,gcd_total,gcd_minus,gcd_plus,quotient,phi2\n"
        << rep.period << ',' << rep.gcd_total.get_str() << ','
        << (rep.has_split ? rep.gcd_minus.get_str() : std::string{}) << ','
        << (rep.has_split ? rep.gcd_plus.get_str() : std::string{}) << ','
        << rep.quotient.get_str() << ',' << rep.phi2 << '\n';
  } else {
    out << "period: " << rep.period << '\n'
        << "U2: " << rep.u2.get_str() << '\n'
        << "gcd_total: " << rep.gcd_total.get_str() << '\n';
    if (rep.has_split) {
      out << "gcd_minus: " << rep.gcd_minus.get_str() << '\n'
          << "gcd_plus: " << rep.gcd_plus.get_str() << '\n';
    }
    out << "quotient: " << rep.quotient.get_str() << '\n' << "phi2: " << rep.phi2 << '\n';
  }
  emit(opt, out.str());
  return kExitOk;
}

int cmd_linear(const Options& opt) {
  const BinarySequence s = input_sequence(opt);
  const std::size_t lc = adicseq::linear_complexity(s);
  std::ostringstream out;
  if (opt.format == "json") {
    out << ordered_json{{"period", s.period()}, {"linear_complexity", lc}}.dump(2) << '\n';
  } else if (opt.format == "csv") {
    out << "period,linear_complexity\n" << s.period() << ',' << lc << '\n';
  } else {
    out << "period: " << s.period() << '\n' << "linear_complexity: " << lc << '\n';
  }
  emit(opt, out.str());
  return kExitOk;
}

std::string truncate_witness(const std::string& w) {
  constexpr std::size_t kMax = 96;
  if (w.size() <= kMax) return w;
  return w.substr(0, kMax) + "...";
}

void print_report_table(std::ostream& out, const adicseq::VerificationReport& rep) {
  out << "p=" << rep.p << " g=" << rep.g << " x=" << rep.x << " y=" << (rep.y > 0 ? "+1" : "-1")
      << " d=" << rep.d << '\n';
  for (const auto& [name, res] : rep.checks) {
    out << "  " << name << ": " << (res.pass ? "PASS" : "FAIL") << "  ["
        << truncate_witness(res.witness) << "]\n";
  }
}

int finish_verification(const Options& opt, const std::vector<adicseq::VerificationReport>& reps) {
  std::ostringstream out;
  if (opt.format == "json") {
    out << (reps.size() == 1 ? adicseq::to_json(reps.front()) : adicseq::to_json(reps)) << '\n';
  } else if (opt.format == "csv") {
    out << adicseq::scan_csv(reps);
  } else {
    for (const auto& rep : reps) {
      print_report_table(out, rep);
      out << (rep.all_pass() ? "  all checks passed" : "  VERIFICATION FAILED") << '\n';
    }
  }
  emit(opt, out.str());
  bool ok = true;
  for (const auto& rep : reps) {
    for (const auto& [name, res] : rep.checks) {
      if (!res.pass) {
        ok = false;
        std::cerr << "verification failed: p=" << rep.p << " " << name << '\n';
      }
    }
  }
  return ok ? kExitOk : kExitVerifyFail;
}

int cmd_verify(const Options& opt) {
  if (opt.p == 0) throw std::invalid_argument("verify needs --p");
  return finish_verification(opt, adicseq::verify_scan({opt.p}));
}

std::vector<std::uint64_t> parse_p_list(const std::string& list) {
  std::vector<std::uint64_t> ps;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("--p-list entries must be positive integers");
    ps.push_back(std::stoull(item));
  }
  if (ps.empty()) throw std::invalid_argument("--p-list is empty");
  return ps;
}

int cmd_scan(const Options& opt) {
  std::vector<std::uint64_t> ps;
  if (!opt.p_list.empty()) {
    ps = parse_p_list(opt.p_list);
  } else if (opt.max_p >= 5) {
    ps = admissible_up_to(opt.max_p);
  } else {
    throw std::invalid_argument("scan needs --p-list or --max-p");
  }
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  for (std::uint64_t p : ps) {
    if (!adicseq::is_admissible_prime(p)) {
      throw std::invalid_argument("p=" + std::to_string(p) + " is not admissible");
    }
  }
  return finish_verification(opt, adicseq::verify_scan(ps));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "period-4p interleaved binary sequences: construction, autocorrelation "
      "spectra, exact 2-adic complexity, and identity verification"};
  app.require_subcommand(1);

  Options opt;
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}));
  };
  const auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", opt.out, "write output to a file instead of stdout");
  };
  const auto add_seq_input = [&](CLI::App* sub) {
    sub->add_option("--p", opt.p, "admissible prime");
    sub->add_option("--b", opt.b, "4-bit column offset, e.g. 0101");
    sub->add_option("--in", opt.in, "sequence file (overrides --p/--b)");
  };

  auto* primes = app.add_subcommand("primes", "list admissible primes up to --max-p");
  primes->add_option("--max-p", opt.max_p, "upper bound")->required();
  add_format(primes);
  add_out(primes);

  auto* construct = app.add_subcommand("construct", "build the period-4p sequence for (p, b)");
  construct->add_option("--p", opt.p, "admissible prime")->required();
  construct->add_option("--b", opt.b, "4-bit column offset, e.g. 0101")->required();
  add_out(construct);

  auto* autocorr = app.add_subcommand("autocorr", "autocorrelation spectrum and classification");
  add_seq_input(autocorr);
  add_format(autocorr);
  add_out(autocorr);

  auto* adic = app.add_subcommand("adic", "exact 2-adic complexity report");
  add_seq_input(adic);
  add_format(adic);
  add_out(adic);

  auto* linear = app.add_subcommand("linear", "linear complexity (shortest GF(2) recurrence)");
  add_seq_input(linear);
  add_format(linear);
  add_out(linear);

  auto* verify = app.add_subcommand("verify", "run the full verification suite for one prime");
  verify->add_option("--p", opt.p, "admissible prime")->required();
  add_format(verify);
  add_out(verify);

  auto* scan = app.add_subcommand("scan", "verification suite over many primes");
  scan->add_option("--p-list", opt.p_list, "comma-separated primes");
  scan->add_option("--max-p", opt.max_p, "all admissible primes up to this bound");
  add_format(scan);
  add_out(scan);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (primes->parsed()) return cmd_primes(opt);
    if (construct->parsed()) return cmd_construct(opt);
    if (autocorr->parsed()) return cmd_autocorr(opt);
    if (adic->parsed()) return cmd_adic(opt);
    if (linear->parsed()) return cmd_linear(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (scan->parsed()) return cmd_scan(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
