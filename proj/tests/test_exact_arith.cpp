#include <gtest/gtest.h>

#include <numeric>

#include "support/printing.hpp"
#include "mcf/exact_arith.hpp"

using namespace mcf;

namespace {

// Independent oracles, straight from the definitions.
std::int64_t count_units(std::int64_t n) {
  std::int64_t c = 0;
  for (std::int64_t x = 0; x < n; ++x) c += std::gcd(x, n) == 1;
  return n == 1 ? 1 : c;
}

// Points of exact order n in Z_n^2.
std::int64_t count_order_n_pairs(std::int64_t n) {
  std::int64_t c = 0;
  for (std::int64_t x = 0; x < n; ++x)
    for (std::int64_t y = 0; y < n; ++y) c += std::gcd(std::gcd(x, y), n) == 1;
  return c;
}

int mobius_by_trial(std::int64_t n) {
  int sign = 1;
  for (std::int64_t p = 2; p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  return sign;
}

}  // namespace

TEST(Mobius, Examples) {
  EXPECT_EQ(mobius(1), 1);
  EXPECT_EQ(mobius(6), 1);
  EXPECT_EQ(mobius(12), 0);
  EXPECT_EQ(mobius(30), -1);
}

TEST(Mobius, MatchesTrialDivision) {
  for (std::int64_t n = 1; n <= 500; ++n) EXPECT_EQ(mobius(n), mobius_by_trial(n)) << n;
}

TEST(Mobius, SumOverDivisorsIsDelta) {
  for (std::int64_t n = 1; n <= 200; ++n) {
    int s = 0;
    for (auto d : divisors(n)) s += mobius(d);
    EXPECT_EQ(s, n == 1 ? 1 : 0) << n;
  }
}

TEST(Totient, Examples) {
  EXPECT_EQ(totient(TotientKind::euler, 12), 4);
  EXPECT_EQ(totient(TotientKind::jordan2, 1), 1);
  for (std::int64_t p : {2, 3, 5, 7, 11, 13}) EXPECT_EQ(totient(TotientKind::dedekind, p), p + 1);
}

TEST(Totient, BruteForce) {
  for (std::int64_t n = 1; n <= 60; ++n) {
    EXPECT_EQ(totient(TotientKind::euler, n), count_units(n)) << n;
    EXPECT_EQ(totient(TotientKind::jordan2, n), count_order_n_pairs(n)) << n;
    // cyclic subgroups of order n in Z_n^2
    EXPECT_EQ(totient(TotientKind::dedekind, n) * totient(TotientKind::euler, n), count_order_n_pairs(n)) << n;
  }
}

TEST(Totient, JordanSumsToSquare) {
  for (std::int64_t n = 1; n <= 100; ++n) {
    BigInt s = 0;
    for (auto d : divisors(n)) s += totient(TotientKind::jordan2, d);
    EXPECT_EQ(s, BigInt(static_cast<long>(n * n)));
  }
}

TEST(SigmaPower, Examples) {
  EXPECT_EQ(sigma_power(1, 6), 12);
  for (std::int64_t a = 1; a <= 50; ++a) EXPECT_EQ(sigma_power(0, a), static_cast<long>(divisors(a).size()));
  for (unsigned m = 0; m < 6; ++m) EXPECT_EQ(sigma_power(m, 1), 1);
}

TEST(SigmaPower, Multiplicative) {
  for (unsigned m = 0; m <= 3; ++m)
    for (std::int64_t a = 1; a <= 30; ++a)
      for (std::int64_t b = 1; b <= 30; ++b)
        if (std::gcd(a, b) == 1) EXPECT_EQ(sigma_power(m, a * b), sigma_power(m, a) * sigma_power(m, b));
}

TEST(Divisors, SortedAndComplete) {
  EXPECT_EQ(divisors(1), (std::vector<std::int64_t>{1}));
  EXPECT_EQ(divisors(12), (std::vector<std::int64_t>{1, 2, 3, 4, 6, 12}));
  for (std::int64_t n = 1; n <= 300; ++n) {
    std::vector<std::int64_t> expect;
    for (std::int64_t d = 1; d <= n; ++d)
      if (n % d == 0) expect.push_back(d);
    EXPECT_EQ(divisors(n), expect);
  }
}

TEST(Factorize, LargeSemiprime) {
  const std::int64_t p = 1000003, q = 999983;
  auto f = factorize(p * q);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0], (std::pair<std::int64_t, int>{q, 1}));
  EXPECT_EQ(f[1], (std::pair<std::int64_t, int>{p, 1}));
}

TEST(Rational, AlwaysReduced) {
  Rational r = make_rational(6, -4);
  EXPECT_EQ(r.get_num(), -3);
  EXPECT_EQ(r.get_den(), 2);
  EXPECT_EQ(to_string(r), "-3/2");
  EXPECT_EQ(to_string(make_rational(8, 4)), "2");
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
}

TEST(Rational, Powers) {
  EXPECT_EQ(rpow(2, -3), make_rational(1, 8));
  EXPECT_EQ(rpow(-3, 3), -27);
  EXPECT_EQ(rpow(5, 0), 1);
  EXPECT_EQ(ipow(10, 20), BigInt("100000000000000000000"));
  EXPECT_EQ(factorial(20), BigInt("2432902008176640000"));
  EXPECT_EQ(factorial(0), 1);
}

TEST(Preconditions, RejectNonPositive) {
  EXPECT_THROW(mobius(0), std::domain_error);
  EXPECT_THROW(divisors(-3), std::domain_error);
  EXPECT_THROW(totient(TotientKind::euler, 0), std::domain_error);
}

TEST(Lcm, Overflow) {
  EXPECT_EQ(checked_lcm(4, 6), 12);
  EXPECT_THROW(checked_lcm(std::int64_t{1} << 40, (std::int64_t{1} << 40) - 1), std::overflow_error);
}
