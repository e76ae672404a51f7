// One PASS/FAIL line per acceptance criterion. Usage: acceptance <path-to-sl12>

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sl12/certificate.hpp"
#include "sl12/errors.hpp"
#include "tamper.hpp"

namespace fs = std::filesystem;
using namespace sl12;

namespace {

const std::vector<unsigned> kTheoremQ = {3, 5, 7, 8, 9, 11, 13, 16, 25, 27, 49};
const std::vector<unsigned> kExcludedQ = {2, 4};
constexpr double kSecondsPerQ = 10.0;
constexpr int kRandomOmegas = 50;
constexpr int kRandomDets = 100;
constexpr std::size_t kTamperCount = 20;

std::string g_cli;
fs::path g_work;

struct Instance {
  Certificate cert;
  FieldSpec spec;
};

const Instance& instance(unsigned q) {
  static std::map<unsigned, Instance> cache;
  auto it = cache.find(q);
  if (it == cache.end()) {
    const auto pm = split_prime_power(q);
    Instance in;
    in.cert = generate(pm->first, pm->second);
    in.spec = make_field(in.cert.p, in.cert.m, in.cert.h, in.cert.g);
    it = cache.emplace(q, std::move(in)).first;
  }
  return it->second;
}

std::vector<unsigned> all_q() {
  std::vector<unsigned> out = kExcludedQ;
  out.insert(out.end(), kTheoremQ.begin(), kTheoremQ.end());
  return out;
}

int run_cli(const std::string& args, std::string* out = nullptr) {
  const fs::path log = g_work / "cli.out";
  const std::string cmd = "\"" + g_cli + "\" " + args + " > \"" + log.string() + "\" 2>&1";
  const int status = std::system(cmd.c_str());
  if (out) {
    std::ifstream f(log);
    std::stringstream ss;
    ss << f.rdbuf();
    *out = ss.str();
  }
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string qs(unsigned q) { return "q=" + std::to_string(q); }

class Detail {
 public:
  void require(bool cond, const std::string& what) {
    if (cond) return;
    ok_ = false;
    failures_ += (failures_.empty() ? "" : "; ") + what;
  }
  void note(const std::string& text) { note_ = text; }
  bool ok() const { return ok_; }
  const std::string& failures() const { return failures_; }
  const std::string& note() const { return note_; }

 private:
  bool ok_ = true;
  std::string failures_;
  std::string note_;
};

ExtElem eval_in_ext(const ExtField& E, const Poly& f, const ExtElem& r) {
  ExtElem acc = E.zero();
  for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = E.add(E.mul(acc, r), E.embed(f[i]));
  return acc;
}

void end_to_end(Detail& d) {
  double worst = 0;
  for (unsigned q : kTheoremQ) {
    const fs::path file = g_work / ("q" + std::to_string(q) + ".json");
    const auto start = std::chrono::steady_clock::now();
    const int gen_rc = run_cli("gen --q " + std::to_string(q) + " --out \"" + file.string() + "\"");
    std::string out;
    const int ver_rc = run_cli("verify \"" + file.string() + "\"", &out);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    worst = std::max(worst, secs);
    d.require(gen_rc == 0, qs(q) + " gen exit " + std::to_string(gen_rc));
    d.require(ver_rc == 0 && out.rfind("PASS", 0) == 0, qs(q) + " verify exit " + std::to_string(ver_rc));
    d.require(secs < kSecondsPerQ, qs(q) + " took " + std::to_string(secs) + " s");
    if (gen_rc != 0) continue;
    std::string text = slurp(file);
    if (!text.empty() && text.back() == '\n') text.pop_back();
    d.require(decode(text).generation.conclusion == Conclusion::generates, qs(q) + " conclusion");
  }
  d.note("slowest gen+verify " + std::to_string(worst) + " s");
}

void exclusion(Detail& d) {
  const auto& reference = instance(3).cert.generation.checks;
  for (unsigned q : kExcludedQ) {
    const auto& c = instance(q).cert;
    d.require(c.generation.conclusion == Conclusion::excluded_diagnostic, qs(q) + " conclusion");
    d.require(c.generation.q_class == QClass::excluded, qs(q) + " q_class");
    std::set<std::string> keys, want;
    for (const auto& [k, v] : c.generation.checks) keys.insert(k);
    for (const auto& [k, v] : reference) want.insert(k);
    d.require(keys == want, qs(q) + " check data incomplete");
    d.require(c.irreducibility.z_invariant_lattice.size() == 4 && !c.irreducibility.common_eigen.empty(),
              qs(q) + " raw reports missing");
    d.require(run_cli("gen --q " + std::to_string(q)) == 0, qs(q) + " non-strict exit");
    d.require(run_cli("--strict gen --q " + std::to_string(q)) != 0, qs(q) + " --strict exit is zero");
  }
}

void exact_orders(Detail& d) {
  for (unsigned q : kTheoremQ) {
    const auto& [c, spec] = instance(q);
    const BaseField& F = *spec.base;
    const Natural full = power(q, 11) - 1;
    const bool halve = q == 3 || q == 7;
    d.require(c.Q == (halve ? full / 2 : full) && c.Q_halved == halve, qs(q) + " Q value");
    d.require(c.factored_Q.is_valid() && c.factored_Q.value == c.Q, qs(q) + " factored Q");
    d.require(order_with_certified_exponent(F, c.x, 2, factorize(2)), qs(q) + " ord(x)");
    d.require(order_with_certified_exponent(F, c.y, 3, factorize(3)), qs(q) + " ord(y)");
    d.require(order_with_certified_exponent(F, c.z, c.Q, c.factored_Q), qs(q) + " ord(z)");
  }
}

void charpoly_identity(Detail& d) {
  for (unsigned q : kTheoremQ) {
    const auto& [c, spec] = instance(q);
    const BaseField& F = *spec.base;
    const FqElem root = F.inv(c.alpha.at(11));
    const Poly expect = poly::mul(F, Poly({F.neg(root), F.one()}), c.f);
    d.require(mat::char_poly(F, c.z) == expect, qs(q) + " char_poly(z)");
    if (q > 7) continue;
    const ExtField& E = *spec.ext;
    std::set<std::vector<std::uint32_t>> roots;
    for (const auto& r : frobenius_conjugates(E, c.omega)) {
      d.require(E.is_zero(eval_in_ext(E, c.f, r)), qs(q) + " conjugate is not a root");
      std::vector<std::uint32_t> key;
      for (auto x : r.c) key.push_back(x.code);
      roots.insert(key);
    }
    d.require(roots.size() == kExtDegree, qs(q) + " conjugates not distinct");
    d.require(poly::eval(F, c.f, root) != F.zero(), qs(q) + " f(alpha_11^-1) = 0");
  }
}

void alpha_classes(Detail& d) {
  for (unsigned q : kTheoremQ) {
    const auto& [c, spec] = instance(q);
    const BaseField& F = *spec.base;
    const FqElem a = c.alpha.at(11);
    if (q == 3) {
      d.require(a == F.one(), "q=3 alpha_11 != 1");
    } else if (q == 7) {
      d.require(F.pow(a, 3) == F.one() && a != F.one(), "q=7 alpha_11 class");
    } else {
      d.require(F.multiplicative_order(a) == q - 1, qs(q) + " ord(alpha_11) != q-1");
    }
  }
}

void two_oracles(Detail& d) {
  std::mt19937_64 rng(2024);
  for (unsigned q : all_q()) {
    const auto& [c, spec] = instance(q);
    const BaseField& F = *spec.base;
    const ExtField& E = *spec.ext;
    for (int i = 0; i < kRandomOmegas;) {
      ExtElem w;
      for (auto& x : w.c) x = FqElem{static_cast<std::uint32_t>(rng() % F.order())};
      if (E.in_base(w)) continue;
      ++i;
      if (min_poly_of_omega(spec, w).f != min_poly_oracle(E, w)) {
        d.require(false, qs(q) + " min poly disagreement");
        break;
      }
    }
    const GeneratorTriple t{c.x, c.y, c.z, c.alpha};
    const auto report = irreducibility_verdict(F, t, c.f);
    bool all_full = true;
    for (std::size_t i = 0; i < kDim; ++i)
      all_full &= spin_oracle(F, {oracle::unit_vector(F, kDim, i)}, {c.x, c.y}).dim() == kDim;
    if (report.verdict == IrreducibilityReport::Verdict::irreducible) {
      d.require(all_full, qs(q) + " irreducible verdict but a basis vector spins to a proper subspace");
    } else {
      const bool witnessed = report.witness && report.witness->dim() > 0 &&
                             spin_oracle(F, report.witness->basis(), {c.x, c.y}).dim() < kDim;
      d.require(witnessed, qs(q) + " reducible verdict not confirmed by spinning");
    }
    for (int i = 0; i < kRandomDets; ++i) {
      const Mat a = oracle::random_matrix(F, 4, rng);
      if (mat::det(F, a) != oracle::det_cofactor(F, a)) {
        d.require(false, qs(q) + " det disagreement");
        break;
      }
    }
  }
}

void lattice_structure(Detail& d) {
  for (unsigned q : all_q()) {
    const auto& [c, spec] = instance(q);
    const BaseField& F = *spec.base;
    const auto& lat = c.irreducibility.z_invariant_lattice;
    d.require(lat.size() == 4, qs(q) + " lattice size");
    if (lat.size() != 4) continue;
    std::vector<Vec> e;
    for (std::size_t i = 0; i < 11; ++i) e.push_back(oracle::unit_vector(F, kDim, i));
    d.require(lat[2].basis() == e, qs(q) + " ker f(z) basis");
    d.require(!stability_check(F, lat[2], c.y), qs(q) + " U is y-stable");
    const bool excluded = q == 2 || q == 4;
    if (excluded) continue;
    for (const auto& r : c.irreducibility.common_eigen)
      d.require(r.intersection_dim == 0, qs(q) + " common eigenvector");
  }
}

void determinism_and_tamper(Detail& d) {
  d.require(encode(generate(3, 1)) == encode(generate(3, 1)), "library bytes differ");
  const fs::path a = g_work / "det_a.json", b = g_work / "det_b.json";
  run_cli("gen --p 3 --m 1 --out \"" + a.string() + "\"");
  run_cli("gen --p 3 --m 1 --out \"" + b.string() + "\"");
  d.require(!slurp(a).empty() && slurp(a) == slurp(b), "CLI bytes differ");

  const auto& [base, spec] = instance(3);
  const auto cases = tamper::cases();
  d.require(cases.size() == kTamperCount, "tamper case count");
  std::size_t caught = 0;
  for (const auto& t : cases) {
    Certificate c = base;
    t.apply(c, spec);
    const auto r = verify_json(encode(c));
    if (r.failed(t.expected_check))
      ++caught;
    else
      d.require(false, t.field + " not caught as " + t.expected_check);
  }
  d.note(std::to_string(caught) + "/" + std::to_string(cases.size()) + " corruptions named correctly");
}

std::vector<std::uint64_t> flatten(const FactoredInteger& f) {
  std::vector<std::uint64_t> out;
  for (const auto& pp : f.factors)
    for (unsigned i = 0; i < pp.exponent; ++i) out.push_back(pp.prime.convert_to<std::uint64_t>());
  return out;
}

void spot_values(Detail& d) {
  const std::vector<std::uint64_t> f3 = flatten(factorize(power(3, 11) - 1));
  const std::vector<std::uint64_t> f2 = flatten(factorize(power(2, 11) - 1));
  d.require(f3 == std::vector<std::uint64_t>{2, 23, 3851}, "3^11-1");
  d.require(f2 == std::vector<std::uint64_t>{23, 89}, "2^11-1");
  d.require(f3 == oracle::trial_division(177146), "3^11-1 vs trial division");
  d.require(f2 == oracle::trial_division(2047), "2^11-1 vs trial division");
}

struct Criterion {
  int id;
  const char* label;
  void (*run)(Detail&);
};

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <path-to-sl12>\n";
    return 2;
  }
  g_cli = fs::absolute(argv[1]).string();
  g_work = fs::temp_directory_path() / ("sl12-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(g_work);

  const std::vector<Criterion> criteria = {
      {1, "end-to-end gen/verify, conclusion generates, < 10 s per q", end_to_end},
      {2, "q = 2, 4 excluded_diagnostic; --strict exits nonzero", exclusion},
      {3, "exact orders ord(x)=2, ord(y)=3, ord(z)=Q", exact_orders},
      {4, "char_poly(z) = (t - alpha_11^-1) f; f splits for q = 3, 5, 7", charpoly_identity},
      {5, "alpha_11 classes", alpha_classes},
      {6, "two-oracle agreement (min poly, spin, det)", two_oracles},
      {7, "z-invariant lattice structure", lattice_structure},
      {8, "determinism and tamper detection", determinism_and_tamper},
      {9, "factorization spot values", spot_values},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Detail d;
    try {
      c.run(d);
    } catch (const std::exception& e) {
      d.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (d.ok() ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.label;
    if (!d.ok()) std::cout << " -- " << d.failures();
    if (!d.note().empty()) std::cout << " (" << d.note() << ")";
    std::cout << std::endl;
    failed += d.ok() ? 0 : 1;
  }
  fs::remove_all(g_work);
  std::cout << (failed ? "FAIL" : "PASS") << " acceptance: " << criteria.size() - failed << "/" << criteria.size()
            << " criteria\n";
  return failed ? 1 : 0;
}
