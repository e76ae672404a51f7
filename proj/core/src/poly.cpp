#include "sl12/poly.hpp"

#include <algorithm>

#include "sl12/errors.hpp"

namespace sl12 {

Poly::Poly(std::vector<FqElem> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().code == 0) coeffs_.pop_back();
}

Poly Poly::monomial(FqElem c, std::size_t k) {
  std::vector<FqElem> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

std::size_t Poly::degree() const {
  if (coeffs_.empty()) throw Error("Poly: the zero polynomial has no degree");
  return coeffs_.size() - 1;
}

namespace poly {

Poly add(const BaseField& F, const Poly& a, const Poly& b) {
  const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<FqElem> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = F.add(a[i], b[i]);
  return Poly(std::move(out));
}

Poly sub(const BaseField& F, const Poly& a, const Poly& b) {
  const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<FqElem> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = F.sub(a[i], b[i]);
  return Poly(std::move(out));
}

Poly scale(const BaseField& F, const Poly& a, FqElem c) {
  std::vector<FqElem> out(a.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.mul(a[i], c);
  return Poly(std::move(out));
}

Poly mul(const BaseField& F, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  std::vector<FqElem> out(ca.size() + cb.size() - 1);
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i].code == 0) continue;
    for (std::size_t j = 0; j < cb.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(ca[i], cb[j]));
  }
  return Poly(std::move(out));
}

std::pair<Poly, Poly> divmod(const BaseField& F, const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error("poly::divmod: division by the zero polynomial");
  if (a.is_zero() || a.degree() < b.degree()) return {Poly{}, a};
  const std::size_t db = b.degree();
  const FqElem lead_inv = F.inv(b.leading());
  std::vector<FqElem> rem = a.coeffs();
  std::vector<FqElem> quot(rem.size() - db);
  for (std::size_t k = rem.size(); k-- > db;) {
    const FqElem c = F.mul(rem[k], lead_inv);
    quot[k - db] = c;
    if (c.code == 0) continue;
    for (std::size_t i = 0; i <= db; ++i) rem[k - db + i] = F.sub(rem[k - db + i], F.mul(c, b[i]));
  }
  rem.resize(db);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly mod(const BaseField& F, const Poly& a, const Poly& b) { return divmod(F, a, b).second; }

Poly make_monic(const BaseField& F, const Poly& a) {
  if (a.is_zero()) return a;
  return scale(F, a, F.inv(a.leading()));
}

Poly gcd(const BaseField& F, Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(F, a);
}

Poly powmod(const BaseField& F, const Poly& base, const Natural& e, const Poly& modulus) {
  Poly result = mod(F, Poly::constant(F.one()), modulus);
  if (e == 0) return result;
  Poly b = mod(F, base, modulus);
  const auto top = static_cast<unsigned>(boost::multiprecision::msb(e));
  for (unsigned i = top + 1; i-- > 0;) {
    result = mod(F, mul(F, result, result), modulus);
    if (boost::multiprecision::bit_test(e, i)) result = mod(F, mul(F, result, b), modulus);
  }
  return result;
}

FqElem eval(const BaseField& F, const Poly& f, FqElem x) {
  FqElem acc = F.zero();
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = F.add(F.mul(acc, x), c[i]);
  return acc;
}

bool less(const BaseField& F, const Poly& a, const Poly& b) {
  if (a.coeffs().size() != b.coeffs().size()) return a.coeffs().size() < b.coeffs().size();
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const auto ra = F.rank(a[i]);
    const auto rb = F.rank(b[i]);
    if (ra != rb) return ra < rb;
  }
  return false;
}

}  // namespace poly

bool is_irreducible(const BaseField& F, const Poly& f) {
  if (!f.is_monic()) throw Error("is_irreducible: polynomial must be monic of degree >= 1");
  const std::size_t n = f.degree();
  if (n == 0) throw Error("is_irreducible: polynomial must be monic of degree >= 1");
  if (n == 1) return true;

  const Natural q = F.order();
  const Poly t = Poly::monomial(F.one(), 1);
  // frob[k] = t^(q^k) mod f
  std::vector<Poly> frob{poly::mod(F, t, f)};
  for (std::size_t k = 1; k <= n; ++k) frob.push_back(poly::powmod(F, frob.back(), q, f));
  if (frob[n] != poly::mod(F, t, f)) return false;

  std::size_t rest = n;
  for (std::size_t r = 2; r <= rest; ++r) {
    if (rest % r != 0) continue;
    while (rest % r == 0) rest /= r;
    const Poly g = poly::gcd(F, f, poly::sub(F, frob[n / r], t));
    if (g.degree() != 0) return false;
  }
  return true;
}

}  // namespace sl12
