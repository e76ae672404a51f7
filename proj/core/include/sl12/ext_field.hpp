#pragma once

#include <array>
#include <cstddef>
#include <memory>

#include "sl12/arith.hpp"
#include "sl12/base_field.hpp"
#include "sl12/poly.hpp"

namespace sl12 {

inline constexpr std::size_t kExtDegree = 11;

/// An element of GF(q^11): residue coefficients mod g, ascending degree.
struct ExtElem {
  std::array<FqElem, kExtDegree> c{};

  friend bool operator==(const ExtElem&, const ExtElem&) = default;
};

/// GF(q^11) = GF(q)[t]/(g) with g monic irreducible of degree 11.
class ExtField {
 public:
  /// Throws sl12::Error unless g is monic of degree 11. Irreducibility of g
  /// is the caller's responsibility (see make_field).
  ExtField(std::shared_ptr<const BaseField> base, Poly modulus);

  const BaseField& base() const noexcept { return *base_; }
  const std::shared_ptr<const BaseField>& base_ptr() const noexcept { return base_; }
  const Poly& modulus() const noexcept { return modulus_; }
  /// q^11
  const Natural& order() const noexcept { return order_; }

  ExtElem zero() const noexcept { return {}; }
  ExtElem one() const noexcept;
  ExtElem embed(FqElem a) const noexcept;
  bool is_zero(const ExtElem& a) const noexcept { return a == ExtElem{}; }
  /// True iff a lies in the base field GF(q).
  bool in_base(const ExtElem& a) const noexcept;

  ExtElem add(const ExtElem& a, const ExtElem& b) const noexcept;
  ExtElem sub(const ExtElem& a, const ExtElem& b) const noexcept;
  ExtElem neg(const ExtElem& a) const noexcept;
  ExtElem mul(const ExtElem& a, const ExtElem& b) const noexcept;
  ExtElem pow(const ExtElem& a, const Natural& e) const;
  /// Throws sl12::Error on zero.
  ExtElem inv(const ExtElem& a) const;
  /// a^q, applied as a GF(q)-linear map.
  ExtElem frobenius(const ExtElem& a) const noexcept;

  /// Lexicographic comparison, lowest-degree coefficient first.
  bool less(const ExtElem& a, const ExtElem& b) const noexcept;

 private:
  std::shared_ptr<const BaseField> base_;
  Poly modulus_;
  Natural order_;
  std::array<ExtElem, kExtDegree> frobenius_images_{};  // t^(q*i) mod g
};

}  // namespace sl12
