#include "sl12/arith.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <limits>
#include <map>

#include <boost/multiprecision/integer.hpp>

#include "sl12/errors.hpp"

namespace sl12 {
namespace {

constexpr std::uint32_t kTrialLimit = 1'000'000;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j <= kTrialLimit; j += i) {
        composite[j] = true;
      }
    }
    return out;
  }();
  return primes;
}

// Miller-Rabin with the first 13 primes as bases is deterministic below this
// bound (Sorenson & Webster 2015).
const Natural& mr_deterministic_bound() {
  static const Natural bound("3317044064679887385961981");
  return bound;
}

bool miller_rabin(const Natural& n, unsigned base) {
  Natural d = n - 1;
  unsigned s = 0;
  while (!boost::multiprecision::bit_test(d, 0)) {
    d >>= 1;
    ++s;
  }
  Natural x = powmod(Natural(base), d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == n - 1) return true;
    if (x == 1) return false;
  }
  return false;
}

int jacobi(Natural a, Natural n) {
  // n odd and positive; a may be negative.
  a %= n;
  if (a < 0) a += n;
  int result = 1;
  while (a != 0) {
    while (!boost::multiprecision::bit_test(a, 0)) {
      a >>= 1;
      const unsigned r = static_cast<unsigned>(n % 8);
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

Natural mod_floor(const Natural& a, const Natural& n) {
  Natural r = a % n;
  if (r < 0) r += n;
  return r;
}

// Strong Lucas probable-prime test with Selfridge parameters. Together with
// base-2 Miller-Rabin this is the Baillie-PSW test.
bool strong_lucas(const Natural& n) {
  if (boost::multiprecision::sqrt(n) * boost::multiprecision::sqrt(n) == n) return false;
  long long d_param = 5;
  while (true) {
    const int j = jacobi(Natural(d_param), n);
    if (j == -1) break;
    if (j == 0 && Natural(d_param < 0 ? -d_param : d_param) != n) return false;
    d_param = d_param > 0 ? -(d_param + 2) : -d_param + 2;
  }
  const Natural D(d_param);
  const Natural P(1);
  const Natural Qp = mod_floor(Natural(1 - d_param) / 4, n);

  Natural d = n + 1;
  unsigned s = 0;
  while (!boost::multiprecision::bit_test(d, 0)) {
    d >>= 1;
    ++s;
  }

  const Natural inv2 = (n + 1) / 2;
  Natural U(1), V(P), Qk = Qp;
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(d));
  for (int i = static_cast<int>(bits) - 1; i >= 0; --i) {
    U = mod_floor(U * V, n);
    V = mod_floor(V * V - 2 * Qk, n);
    Qk = mod_floor(Qk * Qk, n);
    if (boost::multiprecision::bit_test(d, static_cast<unsigned>(i))) {
      Natural u2 = mod_floor(P * U + V, n);
      Natural v2 = mod_floor(D * U + P * V, n);
      U = mod_floor(u2 * inv2, n);
      V = mod_floor(v2 * inv2, n);
      Qk = mod_floor(Qk * Qp, n);
    }
  }
  if (U == 0 || V == 0) return true;
  for (unsigned r = 1; r < s; ++r) {
    V = mod_floor(V * V - 2 * Qk, n);
    if (V == 0) return true;
    Qk = mod_floor(Qk * Qk, n);
  }
  return false;
}

// Brent's cycle-finding variant of Pollard rho. Returns a nontrivial divisor
// or nullopt once `budget` iterations have been spent across all seeds.
std::optional<Natural> pollard_rho(const Natural& n, std::uint64_t& budget) {
  if (!boost::multiprecision::bit_test(n, 0)) return Natural(2);
  constexpr std::uint64_t kBatch = 128;
  for (unsigned c = 1; budget > 0; ++c) {
    auto step = [&](const Natural& v) { return (v * v + c) % n; };
    Natural y(2), x, ys, g(1), acc(1);
    std::uint64_t r = 1;
    while (g == 1 && budget > 0) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = step(y);
      std::uint64_t k = 0;
      while (k < r && g == 1 && budget > 0) {
        ys = y;
        const std::uint64_t m = std::min({kBatch, r - k, budget});
        for (std::uint64_t i = 0; i < m; ++i) {
          y = step(y);
          acc = (acc * (x > y ? x - y : y - x)) % n;
        }
        budget -= m;
        g = boost::multiprecision::gcd(acc, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      // Batched product overshot; replay one step at a time.
      do {
        ys = step(ys);
        g = boost::multiprecision::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
  }
  return std::nullopt;
}

void factor_into(const Natural& n, std::map<Natural, unsigned>& out, std::uint64_t& budget) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  auto d = pollard_rho(n, budget);
  if (!d) {
    throw BudgetError("factorize: Pollard-rho budget exhausted on cofactor " + to_decimal(n) +
                      " (q too large for the configured effort; raise SL12_FACTOR_BUDGET)");
  }
  factor_into(*d, out, budget);
  factor_into(n / *d, out, budget);
}

}  // namespace

Natural FactoredInteger::recompose() const {
  Natural acc(1);
  for (const auto& f : factors) acc *= power(f.prime, f.exponent);
  return acc;
}

bool FactoredInteger::is_valid() const {
  if (value < 1 || recompose() != value) return false;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].exponent == 0 || !is_prime(factors[i].prime)) return false;
    if (i > 0 && !(factors[i - 1].prime < factors[i].prime)) return false;
  }
  return true;
}

FactorBudget FactorBudget::from_environment() {
  FactorBudget budget;
  if (const char* env = std::getenv("SL12_FACTOR_BUDGET")) {
    if (auto parsed = parse_natural(env); parsed && *parsed > 0) {
      budget.rho_iterations = *parsed > std::numeric_limits<std::uint64_t>::max()
                                  ? std::numeric_limits<std::uint64_t>::max()
                                  : static_cast<std::uint64_t>(*parsed);
    }
  }
  return budget;
}

bool is_prime(const Natural& n) {
  static constexpr std::array<unsigned, 13> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  if (n < 2) return false;
  for (unsigned b : kBases) {
    if (n == b) return true;
    if (n % b == 0) return false;
  }
  for (unsigned b : kBases) {
    if (!miller_rabin(n, b)) return false;
  }
  if (n < mr_deterministic_bound()) return true;
  return strong_lucas(n);
}

FactoredInteger factorize(const Natural& n, FactorBudget budget) {
  if (n < 1) throw Error("factorize: input must be positive");
  std::map<Natural, unsigned> found;
  Natural rest = n;
  for (std::uint32_t p : small_primes()) {
    if (Natural(p) * p > rest) break;
    while (rest % p == 0) {
      rest /= p;
      ++found[Natural(p)];
    }
  }
  std::uint64_t iterations = budget.rho_iterations;
  factor_into(rest, found, iterations);

  FactoredInteger result{n, {}};
  for (auto& [prime, e] : found) result.factors.push_back({prime, e});
  return result;
}

QValue compute_Q(const Natural& q) {
  Natural full = power(q, 11) - 1;
  if (q == 3 || q == 7) return {full / 2, true};
  return {full, false};
}

Natural power(const Natural& base, unsigned exponent) { return boost::multiprecision::pow(base, exponent); }

Natural powmod(Natural base, Natural exponent, const Natural& modulus) {
  return boost::multiprecision::powm(base, exponent, modulus);
}

std::optional<std::pair<Natural, unsigned>> split_prime_power(const Natural& q) {
  if (q < 2) return std::nullopt;
  for (unsigned m = static_cast<unsigned>(boost::multiprecision::msb(q)); m >= 1; --m) {
    // Integer m-th root by bisection.
    Natural lo(1), hi = Natural(1) << (boost::multiprecision::msb(q) / m + 1);
    while (lo < hi) {
      Natural mid = (lo + hi + 1) / 2;
      if (power(mid, m) <= q) lo = mid; else hi = mid - 1;
    }
    if (power(lo, m) == q && is_prime(lo)) return std::make_pair(lo, m);
  }
  return std::nullopt;
}

std::string to_decimal(const Natural& n) { return n.str(); }

std::optional<Natural> parse_natural(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (text.size() > 1 && text.front() == '0') return std::nullopt;
  if (!std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    return std::nullopt;
  }
  return Natural(std::string(text));
}

}  // namespace sl12
