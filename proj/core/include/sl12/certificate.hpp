#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sl12/arith.hpp"
#include "sl12/generators.hpp"
#include "sl12/repcheck.hpp"
#include "sl12/tower.hpp"

namespace sl12 {

inline constexpr std::string_view kSchemaVersion = "sl12-generation-certificate/1";

struct AssumptionRecord {
  std::string id = Assumption::kId;
  std::string text = Assumption::kText;
  std::string citation = Assumption::kCitation;

  friend bool operator==(const AssumptionRecord&, const AssumptionRecord&) = default;
};

/// Everything needed to re-derive the generation conclusion for one q.
///
/// The inputs are p, m, h, g, omega and omega_mode; every other field is
/// derived and is recomputed, never trusted, by verify().
struct Certificate {
  std::string schema_version{kSchemaVersion};
  Natural p;
  unsigned m = 0;
  Natural q;
  Poly h;  // over GF(p)
  Poly g;  // over GF(q)
  Natural Q;
  bool Q_halved = false;
  FactoredInteger factored_Q;
  ExtElem omega;
  OmegaMode omega_mode;
  Poly f;
  AlphaVector alpha;
  Mat x;
  Mat y;
  Mat z;
  IrreducibilityReport irreducibility;
  GenerationVerdict generation;
  AssumptionRecord assumption;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Canonical JSON: sorted keys, no insignificant whitespace, Naturals as
/// decimal strings, GF(q) elements as arrays of m digits, polynomials in
/// ascending degree, matrices as arrays of rows.
std::string encode(const Certificate& cert);
/// Throws FormatError with the offending field path.
Certificate decode(std::string_view json);

/// Results of running every construction step on one omega.
struct Derivation {
  MinimalPolynomial minpoly;
  GeneratorTriple triple;
  IrreducibilityReport report;
  GenerationVerdict verdict;
};

/// Builds f, alpha, x, y, z and runs all checks. `group_order` factors
/// q^11 - 1. Internal-consistency failures propagate as ConsistencyError.
Derivation derive(const FieldSpec& spec, const ExtElem& omega, const QValue& Q, const FactoredInteger& factored_Q,
                  const FactoredInteger& group_order);

/// Factorization of Q from that of q^11 - 1.
FactoredInteger factored_Q_from(const FactoredInteger& group_order, bool halved);
/// Factorization of q^11 - 1 recovered from the factorization of Q.
FactoredInteger group_order_from(const FactoredInteger& factored_Q, bool halved);

/// Runs the whole construction for q = p^m. Throws BudgetError when q^11 - 1
/// cannot be factored and ConsistencyError naming the failing step.
Certificate generate(const Natural& p, unsigned m, OmegaMode mode = OmegaMode::deterministic(),
                     FactorBudget budget = FactorBudget::from_environment());

struct VerifyResult {
  /// Names of failed checks, in the order they were detected.
  std::vector<std::string> failed_checks;
  /// Human-readable detail, one line per failure.
  std::vector<std::string> messages;

  bool pass() const noexcept { return failed_checks.empty(); }
  bool failed(std::string_view check) const;
};

/// Recomputes everything from the stored inputs and compares.
VerifyResult verify(const Certificate& cert, FactorBudget budget = FactorBudget::from_environment());
/// As above; malformed input fails the "format" check with the field path.
VerifyResult verify_json(std::string_view json, FactorBudget budget = FactorBudget::from_environment());

struct SweepRow {
  Natural q;
  Natural Q;
  bool halved = false;
  std::map<std::string, bool> checks;
  std::string conclusion;
  bool verified = false;
  std::string error;
  bool budget_exhausted = false;
  double seconds = 0.0;
};

/// Generates and verifies a certificate per q. Rows keep input order; a
/// failing q records its error in the row and does not stop the sweep.
std::vector<SweepRow> sweep(const std::vector<Natural>& q_list, unsigned max_threads = 0);

}  // namespace sl12
