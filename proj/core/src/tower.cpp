#include "sl12/tower.hpp"

#include <random>
#include <string>

#include "sl12/errors.hpp"

namespace sl12 {
namespace {

std::uint32_t narrow_prime(const Natural& p) {
  if (p < 2 || p > BaseField::kMaxOrder || !is_prime(p)) {
    throw Error("field: p = " + to_decimal(p) + " is not a supported prime");
  }
  return static_cast<std::uint32_t>(p);
}

// Advances ranks as a base-`radix` counter whose last digit moves fastest.
// Returns false on wrap-around.
bool next_ranks(std::vector<std::uint32_t>& ranks, std::uint32_t radix) {
  for (std::size_t i = ranks.size(); i-- > 0;) {
    if (++ranks[i] < radix) return true;
    ranks[i] = 0;
  }
  return false;
}

bool is_primitive(const ExtField& E, const ExtElem& a, const FactoredInteger& group_order) {
  if (E.is_zero(a)) return false;
  for (const auto& f : group_order.factors) {
    if (E.pow(a, group_order.value / f.prime) == E.one()) return false;
  }
  return true;
}

}  // namespace

Poly FieldSpec::h() const {
  std::vector<FqElem> c;
  for (auto d : base->modulus()) c.push_back({d});
  return Poly(std::move(c));
}

FieldSpec make_field(const Natural& p, unsigned m, const Poly& h, const Poly& g) {
  const std::uint32_t p32 = narrow_prime(p);
  if (m < 1) throw Error("field: m must be at least 1");
  auto prime_field = std::make_shared<const BaseField>(BaseField::prime(p32));

  if (h.is_zero() || h.degree() != m || !h.is_monic()) {
    throw ConsistencyError("h_irreducible", "h must be monic of degree m = " + std::to_string(m));
  }
  for (FqElem c : h.coeffs()) {
    if (!prime_field->contains(c)) throw ConsistencyError("h_irreducible", "h coefficient outside GF(p)");
  }
  if (!is_irreducible(*prime_field, h)) {
    throw ConsistencyError("h_irreducible", "h is reducible over GF(p)");
  }
  std::vector<std::uint32_t> h_digits;
  for (FqElem c : h.coeffs()) h_digits.push_back(c.code);
  auto base = std::make_shared<const BaseField>(p32, std::move(h_digits));

  if (g.is_zero() || g.degree() != kExtDegree || !g.is_monic()) {
    throw ConsistencyError("g_irreducible", "g must be monic of degree 11");
  }
  for (FqElem c : g.coeffs()) {
    if (!base->contains(c)) throw ConsistencyError("g_irreducible", "g coefficient outside GF(q)");
  }
  if (!is_irreducible(*base, g)) {
    throw ConsistencyError("g_irreducible", "g is reducible over GF(q)");
  }
  auto ext = std::make_shared<const ExtField>(base, g);
  return FieldSpec{std::move(prime_field), std::move(base), std::move(ext)};
}

Poly first_irreducible(const BaseField& F, std::size_t n) {
  if (n == 0) throw Error("first_irreducible: degree must be positive");
  std::vector<std::uint32_t> ranks(n, 0);
  // A zero constant term means t divides the candidate.
  if (n > 1) ranks[0] = 1;
  do {
    std::vector<FqElem> c(n + 1);
    for (std::size_t i = 0; i < n; ++i) c[i] = F.from_rank(ranks[i]);
    c[n] = F.one();
    Poly candidate(std::move(c));
    if (is_irreducible(F, candidate)) return candidate;
  } while (next_ranks(ranks, F.order()));
  throw Error("first_irreducible: no irreducible polynomial found");
}

FieldSpec canonical_field(const Natural& p, unsigned m) {
  const std::uint32_t p32 = narrow_prime(p);
  if (m < 1) throw Error("field: m must be at least 1");
  if (power(p, m) > BaseField::kMaxOrder) {
    throw Error("field: q = " + to_decimal(power(p, m)) + " exceeds the supported field size");
  }
  const BaseField prime_field = BaseField::prime(p32);
  const Poly h = first_irreducible(prime_field, m);
  std::vector<std::uint32_t> h_digits;
  for (std::size_t i = 0; i <= m; ++i) h_digits.push_back(h[i].code);
  const BaseField base(p32, h_digits);
  const Poly g = first_irreducible(base, kExtDegree);
  return make_field(p, m, h, g);
}

Natural multiplicative_order(const ExtField& E, const ExtElem& a, const FactoredInteger& group_order) {
  if (E.is_zero(a)) throw Error("multiplicative_order: zero has no order");
  if (E.pow(a, group_order.value) != E.one()) {
    throw Error("multiplicative_order: supplied group order is not a multiple of the element order");
  }
  Natural order = group_order.value;
  for (const auto& f : group_order.factors) {
    for (unsigned k = 0; k < f.exponent; ++k) {
      const Natural candidate = order / f.prime;
      if (E.pow(a, candidate) != E.one()) break;
      order = candidate;
    }
  }
  return order;
}

ExtElem find_omega(const FieldSpec& spec, const QValue& Q, const FactoredInteger& group_order,
                   OmegaMode mode) {
  const ExtField& E = *spec.ext;
  const BaseField& F = *spec.base;
  if (group_order.value != E.order() - 1) {
    throw Error("find_omega: group_order must factor q^11 - 1");
  }

  ExtElem rho{};
  bool found = false;
  if (mode.kind == OmegaMode::Kind::deterministic) {
    std::vector<std::uint32_t> ranks(kExtDegree, 0);
    while (!found && next_ranks(ranks, F.order())) {
      for (std::size_t i = 0; i < kExtDegree; ++i) rho.c[i] = F.from_rank(ranks[i]);
      found = is_primitive(E, rho, group_order);
    }
  } else {
    std::mt19937_64 rng(mode.seed);
    while (!found) {
      for (auto& c : rho.c) c = {static_cast<std::uint32_t>(rng() % F.order())};
      found = is_primitive(E, rho, group_order);
    }
  }
  if (!found) throw ConsistencyError("omega_order", "no primitive element found");

  const ExtElem omega = Q.halved ? E.mul(rho, rho) : rho;
  if (multiplicative_order(E, omega, group_order) != Q.Q) {
    throw ConsistencyError("omega_order", "chosen element does not have order Q");
  }
  return omega;
}

std::array<ExtElem, kExtDegree> frobenius_conjugates(const ExtField& E, const ExtElem& omega) {
  std::array<ExtElem, kExtDegree> out;
  out[0] = omega;
  for (std::size_t i = 1; i < kExtDegree; ++i) out[i] = E.frobenius(out[i - 1]);
  return out;
}

MinimalPolynomial min_poly_of_omega(const FieldSpec& spec, const ExtElem& omega) {
  const ExtField& E = *spec.ext;
  const BaseField& F = *spec.base;

  // prod[i] is the coefficient of t^i of the running product.
  std::vector<ExtElem> prod{E.one()};
  for (const ExtElem& root : frobenius_conjugates(E, omega)) {
    std::vector<ExtElem> next(prod.size() + 1, E.zero());
    for (std::size_t i = 0; i < prod.size(); ++i) {
      next[i + 1] = E.add(next[i + 1], prod[i]);
      next[i] = E.sub(next[i], E.mul(root, prod[i]));
    }
    prod = std::move(next);
  }

  std::vector<FqElem> coeffs;
  for (std::size_t i = 0; i < prod.size(); ++i) {
    if (!E.in_base(prod[i])) {
      throw ConsistencyError("f_descends", "coefficient of t^" + std::to_string(i) + " is not in GF(q)");
    }
    coeffs.push_back(prod[i].c[0]);
  }
  MinimalPolynomial out{Poly(std::move(coeffs)), {}};
  for (std::size_t i = 1; i <= kExtDegree; ++i) {
    const FqElem c = out.f[kExtDegree - i];
    out.alpha.values[i - 1] = (i % 2 == 0) ? c : F.neg(c);
  }
  return out;
}

Poly min_poly_oracle(const ExtField& E, const ExtElem& omega) {
  const BaseField& F = E.base();
  if (E.is_zero(omega)) throw Error("min_poly_oracle: zero has no minimal polynomial");

  struct Row {
    std::size_t pivot;
    std::array<FqElem, kExtDegree> vec;
    std::array<FqElem, kExtDegree + 1> combo;
  };
  std::vector<Row> rows;
  ExtElem power = E.one();
  for (std::size_t k = 0; k <= kExtDegree; ++k) {
    std::array<FqElem, kExtDegree> vec = power.c;
    std::array<FqElem, kExtDegree + 1> combo{};
    combo[k] = F.one();
    for (const Row& r : rows) {
      const FqElem c = vec[r.pivot];
      if (c.code == 0) continue;
      for (std::size_t j = 0; j < kExtDegree; ++j) vec[j] = F.sub(vec[j], F.mul(c, r.vec[j]));
      for (std::size_t j = 0; j <= kExtDegree; ++j) combo[j] = F.sub(combo[j], F.mul(c, r.combo[j]));
    }
    std::size_t pivot = kExtDegree;
    for (std::size_t j = 0; j < kExtDegree; ++j) {
      if (vec[j].code != 0) {
        pivot = j;
        break;
      }
    }
    if (pivot == kExtDegree) {
      // combo . (1, w, ..., w^k) = 0 with combo[k] = 1.
      return Poly(std::vector<FqElem>(combo.begin(), combo.begin() + static_cast<std::ptrdiff_t>(k) + 1));
    }
    const FqElem inv = F.inv(vec[pivot]);
    for (auto& v : vec) v = F.mul(v, inv);
    for (auto& v : combo) v = F.mul(v, inv);
    rows.push_back({pivot, vec, combo});
    power = E.mul(power, omega);
  }
  throw Error("min_poly_oracle: no dependency among 12 powers in an 11-dimensional space");
}

Poly poly_from_alpha(const BaseField& F, const AlphaVector& alpha) {
  std::vector<FqElem> c(kExtDegree + 1);
  c[kExtDegree] = F.one();
  for (std::size_t i = 1; i <= kExtDegree; ++i) {
    const FqElem a = alpha.at(i);
    c[kExtDegree - i] = (i % 2 == 0) ? a : F.neg(a);
  }
  return Poly(std::move(c));
}

}  // namespace sl12
