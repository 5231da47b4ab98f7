#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mcf {

using BigInt = mpz_class;
using Rational = mpq_class;

// Builds a reduced fraction; throws std::domain_error on a zero denominator.
Rational make_rational(const BigInt& num, const BigInt& den);
Rational make_rational(std::int64_t num, std::int64_t den = 1);

std::string to_string(const BigInt& x);
// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& x);

// Prime factorization as (prime, exponent) pairs in increasing prime order.
// Requires n >= 1.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

// Sorted positive divisors of n >= 1.
std::vector<std::int64_t> divisors(std::int64_t n);

int mobius(std::int64_t n);

enum class TotientKind { euler, jordan2, dedekind };

// euler: phi(n); jordan2: n^2 prod(1 - p^-2); dedekind: n prod(1 + 1/p).
BigInt totient(TotientKind kind, std::int64_t n);

// sum over k | a of k^m.
BigInt sigma_power(unsigned m, std::int64_t a);

BigInt ipow(std::int64_t base, unsigned exp);
// base^exp for any integer exp; base must be nonzero when exp < 0.
Rational rpow(std::int64_t base, std::int64_t exp);

BigInt factorial(unsigned n);

std::int64_t checked_lcm(std::int64_t a, std::int64_t b);

}  // namespace mcf
