#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sl12/certificate.hpp"
#include "sl12/errors.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

sl12::Natural natural_arg(const std::string& text, const char* name) {
  auto n = sl12::parse_natural(text);
  if (!n) throw UsageError(std::string(name) + ": not a natural number: '" + text + "'");
  return *n;
}

int exit_for(sl12::Conclusion c, bool strict) {
  switch (c) {
    case sl12::Conclusion::generates:
      return kOk;
    case sl12::Conclusion::excluded_diagnostic:
      return strict ? kCheckFailed : kOk;
    case sl12::Conclusion::not_established:
      return kCheckFailed;
  }
  return kCheckFailed;
}

struct GenArgs {
  std::string p, m, q, out;
  std::optional<std::uint64_t> seed;
};

int run_gen(const GenArgs& a, bool strict) {
  sl12::Natural p;
  unsigned m = 0;
  if (!a.q.empty()) {
    if (!a.p.empty() || !a.m.empty()) throw UsageError("gen: use either --q or --p/--m");
    auto split = sl12::split_prime_power(natural_arg(a.q, "--q"));
    if (!split) throw UsageError("gen: --q " + a.q + " is not a prime power");
    p = split->first;
    m = split->second;
  } else {
    if (a.p.empty() || a.m.empty()) throw UsageError("gen: --p and --m are required without --q");
    p = natural_arg(a.p, "--p");
    const auto mm = natural_arg(a.m, "--m");
    if (mm < 1 || mm > 64) throw UsageError("gen: --m must be in 1..64");
    m = mm.convert_to<unsigned>();
    if (!sl12::is_prime(p)) throw UsageError("gen: --p " + a.p + " is not prime");
  }
  const auto mode = a.seed ? sl12::OmegaMode::seeded(*a.seed) : sl12::OmegaMode::deterministic();
  const sl12::Certificate cert = sl12::generate(p, m, mode);
  const std::string text = sl12::encode(cert) + "\n";
  if (a.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(a.out, std::ios::binary);
    if (!f || !(f << text)) throw UsageError("gen: cannot write " + a.out);
    std::cout << "q=" << sl12::to_decimal(cert.q) << " Q=" << sl12::to_decimal(cert.Q)
              << " conclusion=" << sl12::to_string(cert.generation.conclusion) << " -> " << a.out << "\n";
  }
  for (const auto& name : cert.generation.failed) std::cerr << "check failed: " << name << "\n";
  return exit_for(cert.generation.conclusion, strict);
}

int run_verify(const std::string& path, bool strict) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("verify: cannot read " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  std::string text = buf.str();
  if (!text.empty() && text.back() == '\n') text.pop_back();
  const sl12::VerifyResult r = sl12::verify_json(text);
  if (!r.pass()) {
    std::cout << "FAIL " << path << "\n";
    for (const auto& msg : r.messages) std::cout << "  " << msg << "\n";
    return kCheckFailed;
  }
  const sl12::Certificate cert = sl12::decode(text);
  std::cout << "PASS " << path << " q=" << sl12::to_decimal(cert.q)
            << " conclusion=" << sl12::to_string(cert.generation.conclusion) << "\n";
  return exit_for(cert.generation.conclusion, strict);
}

std::vector<sl12::Natural> parse_q_list(const std::string& text) {
  std::vector<sl12::Natural> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(natural_arg(item, "--q"));
  }
  return out;
}

void print_table(const std::vector<sl12::SweepRow>& rows) {
  std::cout << std::left << std::setw(6) << "q" << std::setw(46) << "Q" << std::setw(7) << "half" << std::setw(21)
            << "conclusion" << std::setw(9) << "verified" << std::setw(10) << "seconds"
            << "failed/error\n";
  for (const auto& r : rows) {
    std::string failed;
    for (const auto& [name, ok] : r.checks)
      if (!ok) failed += (failed.empty() ? "" : ",") + name;
    if (!r.error.empty()) failed += (failed.empty() ? "" : "; ") + r.error;
    std::ostringstream secs;
    secs << std::fixed << std::setprecision(3) << r.seconds;
    std::cout << std::left << std::setw(6) << sl12::to_decimal(r.q) << std::setw(46) << sl12::to_decimal(r.Q)
              << std::setw(7) << (r.halved ? "yes" : "no") << std::setw(21)
              << (r.conclusion.empty() ? "-" : r.conclusion) << std::setw(9) << (r.verified ? "yes" : "no")
              << std::setw(10) << secs.str() << failed << "\n";
  }
}

void print_json(const std::vector<sl12::SweepRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    out.push_back({{"q", sl12::to_decimal(r.q)},
                   {"Q", sl12::to_decimal(r.Q)},
                   {"Q_halved", r.halved},
                   {"checks", r.checks},
                   {"conclusion", r.conclusion},
                   {"verified", r.verified},
                   {"error", r.error},
                   {"seconds", r.seconds}});
  }
  std::cout << out.dump() << "\n";
}

int run_sweep(const std::string& qs, bool json, bool strict) {
  const auto rows = sl12::sweep(parse_q_list(qs));
  if (json)
    print_json(rows);
  else
    print_table(rows);
  int code = kOk;
  for (const auto& r : rows) {
    if (!r.error.empty() && r.conclusion.empty()) {
      const bool usage = r.budget_exhausted || !sl12::split_prime_power(r.q);
      code = std::max(code, usage ? kUsage : kCheckFailed);
      continue;
    }
    if (!r.verified) code = std::max(code, kCheckFailed);
    if (r.conclusion == "excluded_diagnostic") {
      if (strict) code = std::max(code, kCheckFailed);
    } else if (r.conclusion != "generates") {
      code = std::max(code, kCheckFailed);
    }
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Builds and verifies (2,3)-generation certificates for SL_12(q)"};
  app.require_subcommand(1);
  app.fallthrough();
  bool strict = false;
  app.add_flag("--strict", strict, "Treat q = 2, 4 (excluded_diagnostic) as failure");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a certificate");
  gen_cmd->add_option("--p", gen.p, "Characteristic");
  gen_cmd->add_option("--m", gen.m, "Degree of GF(q) over GF(p)");
  gen_cmd->add_option("--q", gen.q, "Field size, split into p^m");
  gen_cmd->add_option("--omega-seed", gen.seed, "Pick omega pseudorandomly from this seed");
  gen_cmd->add_option("--out", gen.out, "Write the certificate here instead of stdout");

  std::string verify_path;
  auto* verify_cmd = app.add_subcommand("verify", "Recompute and check a certificate");
  verify_cmd->add_option("file", verify_path, "Certificate JSON")->required();

  std::string sweep_q;
  bool sweep_json = false;
  bool sweep_table = false;
  auto* sweep_cmd = app.add_subcommand("sweep", "Generate and verify for several q");
  sweep_cmd->add_option("--q", sweep_q, "Comma-separated prime powers")->required();
  auto* json_flag = sweep_cmd->add_flag("--json", sweep_json, "Machine-readable output");
  sweep_cmd->add_flag("--table", sweep_table, "Human-readable table (default)")->excludes(json_flag);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen, strict);
    if (*verify_cmd) return run_verify(verify_path, strict);
    if (*sweep_cmd) return run_sweep(sweep_q, sweep_json, strict);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const sl12::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const sl12::ConsistencyError& e) {
    std::cerr << "check failed: " << e.check() << ": " << e.what() << "\n";
    return kCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
