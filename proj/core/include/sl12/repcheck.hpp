#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sl12/generators.hpp"
#include "sl12/matrix.hpp"
#include "sl12/tower.hpp"

namespace sl12 {

/// Identifier and citation for the one fact this library assumes rather than
/// checks: the classification of maximal subgroups of SL_12(q).
struct Assumption {
  static constexpr const char* kId = "AS-1";
  static constexpr const char* kText =
      "Every maximal subgroup of SL_12(q) whose order is divisible by Q is reducible on V, "
      "i.e. the stabilizer of a 1- or 11-dimensional subspace. Not verified here.";
  static constexpr const char* kCitation =
      "J. N. Bray, D. F. Holt, C. M. Roney-Dougal, The Maximal Subgroups of the "
      "Low-Dimensional Finite Classical Groups, Cambridge University Press, 2013, Tables 8.76 and 8.77";
};

/// dim(ker(y - lambda I) ∩ ker(x - nu I)) for one (lambda, nu) pair.
struct CommonEigenReport {
  FqElem lambda;
  FqElem nu;
  std::size_t intersection_dim = 0;
  std::optional<Vec> witness;

  friend bool operator==(const CommonEigenReport&, const CommonEigenReport&) = default;
};

struct IrreducibilityReport {
  enum class Verdict { irreducible, reducible };

  /// {0}, W1 = ker(z - alpha_11^{-1} I), U = ker f(z), V.
  std::vector<Subspace> z_invariant_lattice;
  std::vector<bool> y_stable;
  std::vector<bool> x_stable;
  std::vector<CommonEigenReport> common_eigen;
  Verdict verdict = Verdict::irreducible;
  std::optional<Subspace> witness;

  friend bool operator==(const IrreducibilityReport&, const IrreducibilityReport&) = default;
};

enum class QClass { excluded, halved, generic };
enum class Conclusion { generates, not_established, excluded_diagnostic };

struct GenerationVerdict {
  QClass q_class = QClass::generic;
  std::map<std::string, bool> checks;
  Conclusion conclusion = Conclusion::not_established;
  std::vector<std::string> failed;

  friend bool operator==(const GenerationVerdict&, const GenerationVerdict&) = default;
};

const char* to_string(IrreducibilityReport::Verdict v);
const char* to_string(QClass c);
const char* to_string(Conclusion c);
QClass classify_q(const Natural& q);

/// The four z-invariant subspaces when char_poly(z) = (t - alpha_11^{-1}) f(t)
/// with f irreducible of degree 11. Throws ConsistencyError("lattice") if a
/// kernel dimension is not 1 or 11 as expected.
std::vector<Subspace> z_invariant_lattice(const BaseField& F, const Mat& z, const Poly& f,
                                          const AlphaVector& alpha);

/// g W ⊆ W
bool stability_check(const BaseField& F, const Subspace& W, const Mat& g);

/// Every lambda in GF(q) with lambda^3 = 1 against nu = 1 and nu = -1
/// (a single nu in characteristic 2).
std::vector<CommonEigenReport> common_eigenvector_scan(const BaseField& F, const Mat& x, const Mat& y);

/// Smallest subspace containing the seeds and stable under every generator.
Subspace spin_oracle(const BaseField& F, std::vector<Vec> seeds, const std::vector<Mat>& gens);

IrreducibilityReport irreducibility_verdict(const BaseField& F, const GeneratorTriple& triple, const Poly& f);

/// Combines the component checks. `checks` holds every named boolean the
/// caller ran; conclusion is `generates` only if all hold, the report is
/// irreducible, ord(z) = Q was certified and q is not 2 or 4.
GenerationVerdict generation_verdict(const IrreducibilityReport& report, bool order_ok, const Natural& q,
                                     std::map<std::string, bool> checks = {});

}  // namespace sl12
