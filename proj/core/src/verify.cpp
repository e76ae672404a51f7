#include <algorithm>

#include "sl12/certificate.hpp"
#include "sl12/errors.hpp"

namespace sl12 {
namespace {

class Recorder {
 public:
  explicit Recorder(VerifyResult& out) : out_(out) {}

  void fail(const std::string& check, const std::string& detail) {
    if (!out_.failed(check)) out_.failed_checks.push_back(check);
    out_.messages.push_back(check + ": " + detail);
  }

  template <typename T>
  void expect_equal(const std::string& check, const T& stored, const T& rebuilt, const char* what) {
    if (!(stored == rebuilt)) fail(check, std::string("stored ") + what + " differs from the rebuilt one");
  }

 private:
  VerifyResult& out_;
};

}  // namespace

bool VerifyResult::failed(std::string_view check) const {
  return std::find(failed_checks.begin(), failed_checks.end(), check) != failed_checks.end();
}

VerifyResult verify(const Certificate& cert, FactorBudget budget) {
  VerifyResult result;
  Recorder rec(result);

  if (cert.schema_version != kSchemaVersion) {
    rec.fail("schema_version", "unsupported schema '" + cert.schema_version + "'");
  }
  if (cert.assumption != AssumptionRecord{}) {
    rec.fail("assumption", "assumption record does not match " + std::string(Assumption::kId));
  }

  if (!is_prime(cert.p)) rec.fail("params", "p = " + to_decimal(cert.p) + " is not prime");
  if (cert.m < 1) rec.fail("params", "m must be positive");
  if (result.failed("params")) return result;
  if (power(cert.p, cert.m) != cert.q) {
    rec.fail("params", "q != p^m");
    return result;
  }

  FieldSpec spec;
  try {
    spec = make_field(cert.p, cert.m, cert.h, cert.g);
  } catch (const ConsistencyError& e) {
    rec.fail(e.check(), e.what());
    return result;
  } catch (const Error& e) {
    rec.fail("params", e.what());
    return result;
  }

  const QValue Q = compute_Q(cert.q);
  if (cert.Q != Q.Q || cert.Q_halved != Q.halved) {
    rec.fail("Q_value", "expected Q = " + to_decimal(Q.Q) + (Q.halved ? " (halved)" : ""));
  }

  FactoredInteger group;
  try {
    group = factorize(spec.ext->order() - 1, budget);
  } catch (const BudgetError& e) {
    rec.fail("Q_factorization", e.what());
    return result;
  }
  const FactoredInteger factored_Q = factored_Q_from(group, Q.halved);
  if (!cert.factored_Q.is_valid() || cert.factored_Q != factored_Q) {
    rec.fail("Q_factorization", "stored factorization is not the prime factorization of Q");
  }

  const ExtField& E = *spec.ext;
  if (E.is_zero(cert.omega) || multiplicative_order(E, cert.omega, group) != Q.Q) {
    rec.fail("omega_order", "omega does not have multiplicative order Q");
  }
  try {
    if (find_omega(spec, Q, group, cert.omega_mode) != cert.omega) {
      rec.fail("omega_provenance", "omega is not the element selected by the recorded mode");
    }
  } catch (const ConsistencyError& e) {
    rec.fail("omega_provenance", e.what());
  }

  Derivation d;
  try {
    d = derive(spec, cert.omega, Q, factored_Q, group);
  } catch (const ConsistencyError& e) {
    rec.fail(e.check(), e.what());
    return result;
  }

  rec.expect_equal("f_rebuild", cert.f, d.minpoly.f, "f");
  rec.expect_equal("alpha_rebuild", cert.alpha, d.minpoly.alpha, "alpha");
  rec.expect_equal("x_rebuild", cert.x, d.triple.x, "x");
  rec.expect_equal("y_rebuild", cert.y, d.triple.y, "y");
  rec.expect_equal("z_rebuild", cert.z, d.triple.z, "z");
  rec.expect_equal("report_irreducibility", cert.irreducibility, d.report, "irreducibility report");
  rec.expect_equal("report_generation", cert.generation, d.verdict, "generation verdict");

  // For q = 2, 4 the checks are diagnostics; elsewhere every one must hold.
  if (d.verdict.q_class != QClass::excluded) {
    for (const auto& name : d.verdict.failed) rec.fail(name, "recomputed check failed");
    if (d.verdict.conclusion != Conclusion::generates) {
      rec.fail("conclusion", std::string("recomputed conclusion is ") + to_string(d.verdict.conclusion));
    }
  }
  return result;
}

VerifyResult verify_json(std::string_view json, FactorBudget budget) {
  Certificate cert;
  try {
    cert = decode(json);
  } catch (const FormatError& e) {
    VerifyResult result;
    result.failed_checks.push_back("format");
    result.messages.push_back(std::string("format: ") + e.what());
    return result;
  }
  return verify(cert, budget);
}

}  // namespace sl12
