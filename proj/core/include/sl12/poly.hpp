#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "sl12/arith.hpp"
#include "sl12/base_field.hpp"

namespace sl12 {

/// Univariate polynomial over some GF(q), coefficients in ascending degree
/// with no trailing zeros. The zero polynomial has no coefficients and no
/// degree. Arithmetic lives in the free functions below, which take the
/// field the coefficients belong to.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<FqElem> coeffs);

  static Poly constant(FqElem c) { return Poly({c}); }
  /// c * t^k
  static Poly monomial(FqElem c, std::size_t k);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Throws sl12::Error for the zero polynomial.
  std::size_t degree() const;
  /// Coefficient of t^i; zero past the end.
  FqElem operator[](std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : FqElem{}; }
  FqElem leading() const { return coeffs_.at(degree()); }
  bool is_monic() const { return !is_zero() && leading().code == 1; }

  const std::vector<FqElem>& coeffs() const noexcept { return coeffs_; }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  std::vector<FqElem> coeffs_;
};

namespace poly {

Poly add(const BaseField& F, const Poly& a, const Poly& b);
Poly sub(const BaseField& F, const Poly& a, const Poly& b);
Poly scale(const BaseField& F, const Poly& a, FqElem c);
Poly mul(const BaseField& F, const Poly& a, const Poly& b);
/// Quotient and remainder; throws on a zero divisor.
std::pair<Poly, Poly> divmod(const BaseField& F, const Poly& a, const Poly& b);
Poly mod(const BaseField& F, const Poly& a, const Poly& b);
Poly make_monic(const BaseField& F, const Poly& a);
/// Monic gcd (zero if both inputs are zero).
Poly gcd(const BaseField& F, Poly a, Poly b);
/// base^e mod modulus.
Poly powmod(const BaseField& F, const Poly& base, const Natural& e, const Poly& modulus);
FqElem eval(const BaseField& F, const Poly& f, FqElem x);

/// Lexicographic order on coefficient vectors, lowest degree first, using
/// BaseField::rank on each coefficient. Polynomials of different length
/// compare by degree first.
bool less(const BaseField& F, const Poly& a, const Poly& b);

}  // namespace poly

/// Rabin's test: f monic of degree n >= 1 is irreducible over GF(q) iff
/// t^(q^n) = t (mod f) and gcd(t^(q^(n/r)) - t, f) = 1 for each prime r | n.
bool is_irreducible(const BaseField& F, const Poly& f);

}  // namespace sl12
