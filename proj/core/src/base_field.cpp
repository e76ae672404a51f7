#include "sl12/base_field.hpp"

#include <string>

#include "sl12/arith.hpp"
#include "sl12/errors.hpp"

namespace sl12 {
namespace {

std::vector<std::uint32_t> distinct_prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

BaseField::BaseField(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), modulus_(std::move(modulus)) {
  if (p < 2 || !is_prime(Natural(p))) {
    throw Error("BaseField: characteristic " + std::to_string(p) + " is not prime");
  }
  if (modulus_.size() < 2 || modulus_.back() != 1) {
    throw Error("BaseField: modulus must be monic of degree >= 1");
  }
  for (auto d : modulus_) {
    if (d >= p) throw Error("BaseField: modulus digit out of range");
  }
  m_ = static_cast<unsigned>(modulus_.size() - 1);

  std::uint64_t q = 1;
  place_.reserve(m_);
  for (unsigned i = 0; i < m_; ++i) {
    place_.push_back(static_cast<std::uint32_t>(q));
    q *= p;
    if (q > kMaxOrder) {
      throw Error("BaseField: q = " + std::to_string(p) + "^" + std::to_string(m_) +
                  " exceeds the supported field size");
    }
  }
  q_ = static_cast<std::uint32_t>(q);

  // Schoolbook product mod h on digit vectors; only used to build the tables.
  auto slow_mul = [&](std::uint32_t a, std::uint32_t b) {
    std::vector<std::uint64_t> da(m_), db(m_), prod(2 * m_, 0);
    for (unsigned i = 0; i < m_; ++i) {
      da[i] = a % p;
      a /= p;
      db[i] = b % p;
      b /= p;
    }
    for (unsigned i = 0; i < m_; ++i) {
      for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    }
    for (unsigned k = 2 * m_ - 1; k >= m_; --k) {
      const std::uint64_t c = prod[k];
      if (c == 0) continue;
      for (unsigned i = 0; i <= m_; ++i) {
        prod[k - m_ + i] = (prod[k - m_ + i] + (p - c) * modulus_[i]) % p;
      }
    }
    std::uint32_t code = 0;
    for (unsigned i = 0; i < m_; ++i) code += static_cast<std::uint32_t>(prod[i]) * place_[i];
    return code;
  };
  auto slow_pow = [&](std::uint32_t a, std::uint32_t e) {
    std::uint32_t r = 1;
    while (e) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  };

  const std::uint32_t group = q_ - 1;
  const auto primes = distinct_prime_factors(group);
  std::uint32_t gen = 0;
  for (std::uint32_t c = 1; c < q_ && gen == 0; ++c) {
    if (slow_pow(c, group) != 1) continue;
    bool primitive = true;
    for (auto r : primes) {
      if (slow_pow(c, group / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) gen = c;
  }
  if (gen == 0) throw Error("BaseField: modulus is not irreducible over GF(p)");

  log_.assign(q_, 0);
  exp_.assign(group, 0);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < group; ++i) {
    exp_[i] = x;
    log_[x] = i;
    x = slow_mul(x, gen);
  }
}

BaseField BaseField::prime(std::uint32_t p) { return BaseField(p, {0, 1}); }

FqElem BaseField::from_int(long long v) const noexcept {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r)};
}

FqElem BaseField::from_digits(std::span<const std::uint32_t> digits) const {
  if (digits.size() != m_) throw Error("BaseField: expected " + std::to_string(m_) + " digits");
  std::uint32_t code = 0;
  for (unsigned i = 0; i < m_; ++i) {
    if (digits[i] >= p_) throw Error("BaseField: digit out of range");
    code += digits[i] * place_[i];
  }
  return {code};
}

std::vector<std::uint32_t> BaseField::digits(FqElem a) const {
  std::vector<std::uint32_t> out(m_);
  for (unsigned i = 0; i < m_; ++i) {
    out[i] = a.code % p_;
    a.code /= p_;
  }
  return out;
}

FqElem BaseField::add(FqElem a, FqElem b) const noexcept {
  if (m_ == 1) {
    std::uint32_t s = a.code + b.code;
    return {s >= p_ ? s - p_ : s};
  }
  if (p_ == 2) return {a.code ^ b.code};
  std::uint32_t out = 0;
  for (unsigned i = 0; i < m_; ++i) {
    std::uint32_t s = a.code % p_ + b.code % p_;
    if (s >= p_) s -= p_;
    out += s * place_[i];
    a.code /= p_;
    b.code /= p_;
  }
  return {out};
}

FqElem BaseField::neg(FqElem a) const noexcept {
  if (p_ == 2) return a;
  if (m_ == 1) return {a.code == 0 ? 0 : p_ - a.code};
  std::uint32_t out = 0;
  for (unsigned i = 0; i < m_; ++i) {
    const std::uint32_t d = a.code % p_;
    out += (d == 0 ? 0 : p_ - d) * place_[i];
    a.code /= p_;
  }
  return {out};
}

FqElem BaseField::sub(FqElem a, FqElem b) const noexcept { return add(a, neg(b)); }

FqElem BaseField::inv(FqElem a) const {
  if (a.code == 0) throw Error("BaseField: inverse of zero");
  const std::uint32_t l = log_[a.code];
  return {exp_[l == 0 ? 0 : q_ - 1 - l]};
}

FqElem BaseField::pow(FqElem a, std::uint64_t e) const noexcept {
  if (e == 0) return one();
  if (a.code == 0) return zero();
  const std::uint64_t l = (static_cast<std::uint64_t>(log_[a.code]) * (e % (q_ - 1))) % (q_ - 1);
  return {exp_[l]};
}

std::uint32_t BaseField::multiplicative_order(FqElem a) const {
  if (a.code == 0) throw Error("BaseField: zero has no multiplicative order");
  std::uint32_t order = q_ - 1;
  for (auto r : distinct_prime_factors(q_ - 1)) {
    while (order % r == 0 && pow(a, order / r) == one()) order /= r;
  }
  return order;
}

std::uint32_t BaseField::rank(FqElem a) const noexcept {
  std::uint32_t r = 0;
  for (unsigned i = 0; i < m_; ++i) {
    r = r * p_ + a.code % p_;
    a.code /= p_;
  }
  return r;
}

FqElem BaseField::from_rank(std::uint32_t r) const noexcept {
  std::uint32_t code = 0;
  for (unsigned i = m_; i-- > 0;) {
    code += (r % p_) * place_[i];
    r /= p_;
  }
  return {code};
}

}  // namespace sl12
