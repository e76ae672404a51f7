#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace sl12 {

/// An element of GF(q). `code` packs the residue digits base p, low degree
/// in the least significant position; it is only meaningful together with
/// the BaseField that produced it.
struct FqElem {
  std::uint32_t code = 0;

  friend bool operator==(FqElem, FqElem) = default;
};

/// GF(q) = GF(p)[t]/(h) for a monic irreducible h of degree m.
///
/// Multiplication goes through discrete log / antilog tables built once at
/// construction, so q is capped at kMaxOrder. Addition works digit-wise.
/// Instances are immutable and safe to share across threads.
class BaseField {
 public:
  static constexpr std::uint32_t kMaxOrder = std::uint32_t{1} << 20;

  /// `modulus` holds the GF(p) digits of h in ascending degree; it must be
  /// monic of degree m >= 1. Throws sl12::Error if GF(p)[t]/(h) is not a
  /// field (h reducible) or q exceeds kMaxOrder.
  BaseField(std::uint32_t p, std::vector<std::uint32_t> modulus);

  /// GF(p) itself, represented with h = t.
  static BaseField prime(std::uint32_t p);

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return m_; }
  std::uint32_t order() const noexcept { return q_; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  FqElem zero() const noexcept { return {0}; }
  FqElem one() const noexcept { return {1}; }
  FqElem from_int(long long v) const noexcept;
  FqElem from_digits(std::span<const std::uint32_t> digits) const;
  std::vector<std::uint32_t> digits(FqElem a) const;
  bool contains(FqElem a) const noexcept { return a.code < q_; }

  FqElem add(FqElem a, FqElem b) const noexcept;
  FqElem sub(FqElem a, FqElem b) const noexcept;
  FqElem neg(FqElem a) const noexcept;
  FqElem mul(FqElem a, FqElem b) const noexcept {
    if (a.code == 0 || b.code == 0) return {0};
    std::uint32_t e = log_[a.code] + log_[b.code];
    if (e >= q_ - 1) e -= q_ - 1;
    return {exp_[e]};
  }
  /// Throws sl12::Error on zero.
  FqElem inv(FqElem a) const;
  FqElem div(FqElem a, FqElem b) const { return mul(a, inv(b)); }
  FqElem pow(FqElem a, std::uint64_t e) const noexcept;

  /// Order of a in GF(q)^*; a must be nonzero.
  std::uint32_t multiplicative_order(FqElem a) const;

  /// Position in the total order used by all deterministic scans:
  /// digit vectors compared lexicographically, lowest degree first.
  std::uint32_t rank(FqElem a) const noexcept;
  FqElem from_rank(std::uint32_t r) const noexcept;
  bool less(FqElem a, FqElem b) const noexcept { return rank(a) < rank(b); }

 private:
  std::uint32_t p_;
  unsigned m_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> place_;  // p^i
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
};

}  // namespace sl12
