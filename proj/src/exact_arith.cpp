#include "mcf/exact_arith.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace mcf {

namespace {

// Primes up to 2^16, enough to trial-divide any 32-bit cofactor quickly.
const std::vector<std::int64_t>& small_primes() {
  static const std::vector<std::int64_t> primes = [] {
    constexpr std::int64_t limit = 1 << 16;
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::int64_t> out;
    for (std::int64_t i = 2; i <= limit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::int64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

void require_positive(std::int64_t n, const char* what) {
  if (n < 1) throw std::domain_error(std::string(what) + " requires a positive argument");
}

}  // namespace

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  return make_rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
}

std::string to_string(const BigInt& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  require_positive(n, "factorize");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p : small_primes()) {
    if (p * p > n) break;
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) {
    // Past the sieve range, fall back to odd trial division.
    std::int64_t p = small_primes().back() + 2;
    while (p <= n / p) {
      if (n % p == 0) {
        int e = 0;
        while (n % p == 0) {
          n /= p;
          ++e;
        }
        out.emplace_back(p, e);
      }
      p += 2;
    }
    if (n > 1) out.emplace_back(n, 1);
  }
  return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out{1};
  for (auto [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    std::int64_t pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int mobius(std::int64_t n) {
  int sign = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

BigInt totient(TotientKind kind, std::int64_t n) {
  require_positive(n, "totient");
  BigInt result = 1;
  for (auto [p, e] : factorize(n)) {
    switch (kind) {
      case TotientKind::euler:
        result *= ipow(p, e - 1) * (p - 1);
        break;
      case TotientKind::jordan2:
        result *= ipow(p, 2 * (e - 1)) * (p * p - 1);
        break;
      case TotientKind::dedekind:
        result *= ipow(p, e - 1) * (p + 1);
        break;
    }
  }
  return result;
}

BigInt sigma_power(unsigned m, std::int64_t a) {
  BigInt s = 0;
  for (std::int64_t k : divisors(a)) s += ipow(k, m);
  return s;
}

BigInt ipow(std::int64_t base, unsigned exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), BigInt(static_cast<long>(base)).get_mpz_t(), exp);
  return r;
}

Rational rpow(std::int64_t base, std::int64_t exp) {
  if (exp >= 0) return Rational(ipow(base, static_cast<unsigned>(exp)));
  if (base == 0) throw std::domain_error("zero to a negative power");
  return make_rational(BigInt(1), ipow(base, static_cast<unsigned>(-exp)));
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  if (a <= 0 || b <= 0) throw std::domain_error("lcm of non-positive values");
  const std::int64_t g = std::gcd(a, b);
  if (a / g > std::numeric_limits<std::int64_t>::max() / b) throw std::overflow_error("lcm overflow");
  return a / g * b;
}

}  // namespace mcf
