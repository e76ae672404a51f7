#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sl12 {

/// Arbitrary-precision integer used for every exponent, order and field size.
/// Values handled by this library are never negative.
using Natural = boost::multiprecision::cpp_int;

struct PrimePower {
  Natural prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// `value` together with its complete factorization, primes strictly increasing.
struct FactoredInteger {
  Natural value;
  std::vector<PrimePower> factors;

  Natural recompose() const;
  /// Recomposes to `value`, primes increase strictly and each passes is_prime.
  bool is_valid() const;

  friend bool operator==(const FactoredInteger&, const FactoredInteger&) = default;
};

struct FactorBudget {
  static constexpr std::uint64_t kDefaultRhoIterations = std::uint64_t{1} << 26;

  std::uint64_t rho_iterations = kDefaultRhoIterations;

  /// Reads SL12_FACTOR_BUDGET if set, otherwise the default.
  static FactorBudget from_environment();
};

bool is_prime(const Natural& n);

/// Trial division to 10^6, then Brent/Pollard rho with a fixed seed sequence.
/// Throws BudgetError if a composite cofactor survives the iteration budget.
FactoredInteger factorize(const Natural& n,
                          FactorBudget budget = FactorBudget::from_environment());

struct QValue {
  Natural Q;
  bool halved = false;
};

/// q^11 - 1, halved for q in {3, 7}.
QValue compute_Q(const Natural& q);

Natural power(const Natural& base, unsigned exponent);
Natural powmod(Natural base, Natural exponent, const Natural& modulus);

/// Splits q = p^m with p prime; nullopt if q is not a prime power.
std::optional<std::pair<Natural, unsigned>> split_prime_power(const Natural& q);

std::string to_decimal(const Natural& n);
/// Strict decimal parse (digits only, no sign, no leading zeros except "0").
std::optional<Natural> parse_natural(std::string_view text);

}  // namespace sl12
