#include "sl12/ext_field.hpp"

#include <algorithm>

#include "sl12/errors.hpp"

namespace sl12 {

ExtField::ExtField(std::shared_ptr<const BaseField> base, Poly modulus)
    : base_(std::move(base)), modulus_(std::move(modulus)) {
  if (!base_) throw Error("ExtField: missing base field");
  if (modulus_.is_zero() || modulus_.degree() != kExtDegree || !modulus_.is_monic()) {
    throw Error("ExtField: modulus must be monic of degree 11");
  }
  for (FqElem c : modulus_.coeffs()) {
    if (!base_->contains(c)) throw Error("ExtField: modulus coefficient outside GF(q)");
  }
  order_ = power(Natural(base_->order()), kExtDegree);

  ExtElem t{};
  t.c[1] = base_->one();
  const ExtElem tq = pow(t, Natural(base_->order()));
  ExtElem acc = one();
  for (std::size_t i = 0; i < kExtDegree; ++i) {
    frobenius_images_[i] = acc;
    acc = mul(acc, tq);
  }
}

ExtElem ExtField::one() const noexcept { return embed(base_->one()); }

ExtElem ExtField::embed(FqElem a) const noexcept {
  ExtElem out{};
  out.c[0] = a;
  return out;
}

bool ExtField::in_base(const ExtElem& a) const noexcept {
  for (std::size_t i = 1; i < kExtDegree; ++i) {
    if (a.c[i].code != 0) return false;
  }
  return true;
}

ExtElem ExtField::add(const ExtElem& a, const ExtElem& b) const noexcept {
  ExtElem out;
  for (std::size_t i = 0; i < kExtDegree; ++i) out.c[i] = base_->add(a.c[i], b.c[i]);
  return out;
}

ExtElem ExtField::sub(const ExtElem& a, const ExtElem& b) const noexcept {
  ExtElem out;
  for (std::size_t i = 0; i < kExtDegree; ++i) out.c[i] = base_->sub(a.c[i], b.c[i]);
  return out;
}

ExtElem ExtField::neg(const ExtElem& a) const noexcept {
  ExtElem out;
  for (std::size_t i = 0; i < kExtDegree; ++i) out.c[i] = base_->neg(a.c[i]);
  return out;
}

ExtElem ExtField::mul(const ExtElem& a, const ExtElem& b) const noexcept {
  const BaseField& F = *base_;
  std::array<FqElem, 2 * kExtDegree - 1> prod{};
  for (std::size_t i = 0; i < kExtDegree; ++i) {
    if (a.c[i].code == 0) continue;
    for (std::size_t j = 0; j < kExtDegree; ++j) {
      prod[i + j] = F.add(prod[i + j], F.mul(a.c[i], b.c[j]));
    }
  }
  // g monic: t^11 = -(g_0 + ... + g_10 t^10)
  for (std::size_t k = 2 * kExtDegree - 2; k >= kExtDegree; --k) {
    const FqElem c = prod[k];
    if (c.code == 0) continue;
    for (std::size_t i = 0; i < kExtDegree; ++i) {
      prod[k - kExtDegree + i] = F.sub(prod[k - kExtDegree + i], F.mul(c, modulus_[i]));
    }
  }
  ExtElem out;
  std::copy_n(prod.begin(), kExtDegree, out.c.begin());
  return out;
}

ExtElem ExtField::pow(const ExtElem& a, const Natural& e) const {
  ExtElem result = one();
  if (e == 0) return result;
  const auto top = static_cast<unsigned>(boost::multiprecision::msb(e));
  for (unsigned i = top + 1; i-- > 0;) {
    result = mul(result, result);
    if (boost::multiprecision::bit_test(e, i)) result = mul(result, a);
  }
  return result;
}

ExtElem ExtField::inv(const ExtElem& a) const {
  if (is_zero(a)) throw Error("ExtField: inverse of zero");
  return pow(a, order_ - 2);
}

ExtElem ExtField::frobenius(const ExtElem& a) const noexcept {
  const BaseField& F = *base_;
  ExtElem out{};
  for (std::size_t i = 0; i < kExtDegree; ++i) {
    if (a.c[i].code == 0) continue;
    const ExtElem& img = frobenius_images_[i];
    for (std::size_t j = 0; j < kExtDegree; ++j) out.c[j] = F.add(out.c[j], F.mul(a.c[i], img.c[j]));
  }
  return out;
}

bool ExtField::less(const ExtElem& a, const ExtElem& b) const noexcept {
  for (std::size_t i = 0; i < kExtDegree; ++i) {
    const auto ra = base_->rank(a.c[i]);
    const auto rb = base_->rank(b.c[i]);
    if (ra != rb) return ra < rb;
  }
  return false;
}

}  // namespace sl12
