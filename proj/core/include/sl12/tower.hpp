#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "sl12/arith.hpp"
#include "sl12/base_field.hpp"
#include "sl12/ext_field.hpp"
#include "sl12/poly.hpp"

namespace sl12 {

/// The tower GF(p) < GF(q) < GF(q^11), q = p^m.
///
/// h (over GF(p)) defines GF(q); g (over GF(q)) defines GF(q^11). Both are
/// checked irreducible by make_field. The fields are shared immutable
/// objects, so copying a FieldSpec is cheap.
struct FieldSpec {
  std::shared_ptr<const BaseField> prime_field;
  std::shared_ptr<const BaseField> base;
  std::shared_ptr<const ExtField> ext;

  Natural p() const { return base->characteristic(); }
  unsigned m() const { return base->degree(); }
  Natural q() const { return base->order(); }
  /// h with coefficients in GF(p) (codes equal digits).
  Poly h() const;
  const Poly& g() const { return ext->modulus(); }
};

/// Validates and assembles a tower. Throws ConsistencyError naming
/// "h_irreducible" or "g_irreducible" when a defining polynomial is not
/// monic irreducible of the right degree, sl12::Error for unsupported sizes.
FieldSpec make_field(const Natural& p, unsigned m, const Poly& h, const Poly& g);

/// h and g are the lexicographically smallest monic irreducibles of degree
/// m over GF(p) and of degree 11 over GF(q), comparing coefficient vectors
/// lowest degree first.
FieldSpec canonical_field(const Natural& p, unsigned m);

/// First monic irreducible of degree n over F in the scan order above.
Poly first_irreducible(const BaseField& F, std::size_t n);

/// Exact multiplicative order of a != 0, given the factorization of q^11 - 1.
Natural multiplicative_order(const ExtField& E, const ExtElem& a, const FactoredInteger& group_order);

struct OmegaMode {
  enum class Kind { deterministic, seeded };

  Kind kind = Kind::deterministic;
  std::uint64_t seed = 0;

  static OmegaMode deterministic() { return {}; }
  static OmegaMode seeded(std::uint64_t s) { return {Kind::seeded, s}; }

  friend bool operator==(const OmegaMode&, const OmegaMode&) = default;
};

/// Returns an element of order exactly Q: the first primitive element in
/// lexicographic order (or the first primitive pseudorandom candidate in
/// seeded mode), squared when Q is the halved value.
/// `group_order` is the factorization of q^11 - 1.
ExtElem find_omega(const FieldSpec& spec, const QValue& Q, const FactoredInteger& group_order,
                   OmegaMode mode);

/// Coefficients alpha_1..alpha_11 of
///   f(t) = t^11 - alpha_1 t^10 + alpha_2 t^9 - ... - alpha_11.
struct AlphaVector {
  std::array<FqElem, kExtDegree> values{};

  /// 1-based, matching alpha_1..alpha_11.
  FqElem at(std::size_t i) const { return values.at(i - 1); }

  friend bool operator==(const AlphaVector&, const AlphaVector&) = default;
};

struct MinimalPolynomial {
  Poly f;
  AlphaVector alpha;
};

/// omega, omega^q, ..., omega^(q^10).
std::array<ExtElem, kExtDegree> frobenius_conjugates(const ExtField& E, const ExtElem& omega);

/// Multiplies out the linear factors over the Frobenius conjugates of omega.
/// Throws ConsistencyError("f_descends") if a coefficient is not in GF(q).
MinimalPolynomial min_poly_of_omega(const FieldSpec& spec, const ExtElem& omega);

/// Minimal polynomial from the first linear dependency among 1, w, w^2, ...
/// over GF(q). Independent of min_poly_of_omega; used as a cross-check.
Poly min_poly_oracle(const ExtField& E, const ExtElem& omega);

/// Rebuilds f from alpha using the alternating sign convention.
Poly poly_from_alpha(const BaseField& F, const AlphaVector& alpha);

}  // namespace sl12
