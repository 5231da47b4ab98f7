#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "support/printing.hpp"
#include "mcf/subgroups.hpp"

using namespace mcf;

namespace {

GroupElement T(std::int64_t n) { return torsion_average(n); }

// Subsets of Z_n^2 containing 0 and closed under addition, as bitmasks.
std::vector<std::uint32_t> closed_subsets(std::int64_t n) {
  const int size = static_cast<int>(n * n);
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << size); mask += 2) {
    bool closed = true;
    for (int i = 0; i < size && closed; ++i) {
      if (!(mask >> i & 1)) continue;
      for (int j = 0; j < size && closed; ++j) {
        if (!(mask >> j & 1)) continue;
        const std::int64_t x = (i / n + j / n) % n, y = (i % n + j % n) % n;
        closed = mask >> (x * n + y) & 1;
      }
    }
    if (closed) out.push_back(mask);
  }
  return out;
}

std::uint32_t mask_of(const Subgroup& k) {
  std::uint32_t m = 0;
  for (auto [x, y] : k.elements()) m |= std::uint32_t{1} << (x * k.modulus() + y);
  return m;
}

}  // namespace

TEST(Subgroups, SmallModuli) {
  const auto one = enumerate_subgroups(1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].second, (Cotype{1, 1}));
  int c12 = 0;
  for (const auto& [k, ct] : enumerate_subgroups(2)) c12 += ct == Cotype{1, 2};
  EXPECT_EQ(c12, 3);
}

TEST(Subgroups, MatchClosedSubsets) {
  for (std::int64_t n = 1; n <= 4; ++n) {
    std::set<std::uint32_t> expect;
    for (auto m : closed_subsets(n)) expect.insert(m);
    std::set<std::uint32_t> got;
    for (const auto& [k, ct] : enumerate_subgroups(n)) {
      EXPECT_TRUE(got.insert(mask_of(k)).second) << "duplicate " << k.to_string();
      EXPECT_EQ(static_cast<std::int64_t>(k.elements().size()), k.order());
    }
    EXPECT_EQ(got, expect) << n;
  }
}

TEST(Subgroups, CotypeOfQuotient) {
  // |Z_n^2 / K| = d1 d2 and the quotient is killed by d2 but not by d2/p
  for (std::int64_t n = 1; n <= 12; ++n)
    for (const auto& [k, ct] : enumerate_subgroups(n)) {
      EXPECT_EQ(ct.d1 * ct.d2, k.index());
      EXPECT_EQ(ct.d2 % ct.d1, 0);
      EXPECT_EQ(n % ct.d2, 0);
      for (std::int64_t x = 0; x < n; ++x)
        for (std::int64_t y = 0; y < n; ++y) EXPECT_TRUE(k.contains(ct.d2 * x % n, ct.d2 * y % n));
    }
}

TEST(Subgroups, DedekindCount) {
  for (std::int64_t n = 1; n <= 12; ++n) {
    std::int64_t c = 0;
    for (const auto& [k, ct] : enumerate_subgroups(n)) c += ct == Cotype{1, n};
    EXPECT_EQ(BigInt(static_cast<long>(c)), totient(TotientKind::dedekind, n));
  }
}

TEST(SubgroupAverage, Examples) {
  EXPECT_EQ(subgroup_average(Subgroup::whole(6)), T(6));
  EXPECT_EQ(subgroup_average(Subgroup::trivial(6)), GroupElement(TorsionPoint::zero()));
  const Subgroup k(2, 1, 0, 2);  // generated by (1, 0) mod 2
  ASSERT_TRUE(k.contains(1, 0));
  const Rational h = make_rational(1, 2);
  EXPECT_EQ(subgroup_average(k), GroupElement(TorsionPoint::zero(), h) + GroupElement(TorsionPoint(1, 0, 2), h));
}

TEST(LatticeMobius, Examples) {
  EXPECT_EQ(lattice_mobius({1, 1}), 1);
  for (std::int64_t p : {2, 3, 5, 7}) {
    EXPECT_EQ(lattice_mobius({1, p}), -1);
    EXPECT_EQ(lattice_mobius({p, p}), p);
    EXPECT_EQ(lattice_mobius({1, p * p}), 0);
  }
  EXPECT_EQ(lattice_mobius({1, 6}), 1);
  EXPECT_EQ(lattice_mobius({2, 6}), -2);
}

TEST(LatticeMobius, InvertsZeta) {
  // sum over H <= K of mu(K/H) vanishes unless K is trivial
  for (std::int64_t n = 1; n <= 8; ++n) {
    const auto all = enumerate_subgroups(n);
    for (const auto& [k, ck] : all) {
      std::int64_t s = 0;
      for (const auto& [h, ch] : all)
        if (k.contains(h)) s += lattice_mobius(quotient_cotype(k, h));
      EXPECT_EQ(s, k == Subgroup::trivial(n) ? 1 : 0) << k.to_string();
    }
  }
}

TEST(CountM, Examples) {
  for (std::int64_t p : {2, 3, 5})
    for (std::int64_t e = 1; e <= 3; ++e) {
      std::int64_t pe = 1;
      for (int i = 0; i < e; ++i) pe *= p;
      for (std::int64_t d = 0, pd = 1; d <= e; ++d, pd *= p)
        EXPECT_EQ(refined_cotype_count(pd, pd, pe), T(pe / pd)) << p << " " << e << " " << d;
    }
  for (std::int64_t p : {2, 3, 5, 7}) EXPECT_EQ(refined_cotype_count(1, p, p), T(1) + ga_scale(p, T(p)));
  EXPECT_EQ(refined_cotype_count_t_basis(1, 2, 2), (TBasis{{1, 1}, {2, 2}}));
  for (std::int64_t n = 1; n <= 12; ++n)
    for (std::int64_t d2 : divisors(n))
      for (std::int64_t d1 : divisors(d2))
        EXPECT_EQ(prim_coefficient(n, refined_cotype_count(d1, d2, n)), d1 == 1 ? d2 : 0);
}

TEST(CountM, ByIndex) {
  for (std::int64_t n = 1; n <= 8; ++n) EXPECT_EQ(refined_index_count(1, n), T(n));
  EXPECT_EQ(refined_index_count(2, 2), T(1) + ga_scale(2, T(2)));
  // index n^2: the trivial subgroup only
  for (std::int64_t n = 1; n <= 6; ++n)
    EXPECT_EQ(refined_index_count(n * n, n), GroupElement(TorsionPoint::zero())) << n;
  EXPECT_THROW(refined_index_count(3, 2), std::domain_error);
}

TEST(CountF, Examples) {
  for (std::int64_t n = 1; n <= 8; ++n) EXPECT_EQ(twisted_pair_count(1, 1, n), T(n));
  EXPECT_EQ(twisted_pair_count(1, 2, 2), T(1) - T(2));
  for (std::int64_t p : {2, 3})
    for (std::int64_t e = 1; e <= 3; ++e) {
      std::int64_t pe = 1;
      for (int i = 0; i < e; ++i) pe *= p;
      for (std::int64_t d2 : divisors(pe))
        for (std::int64_t d1 : divisors(d2))
          if (d1 > 1) EXPECT_TRUE(twisted_pair_count(d1, d2, pe).is_zero());
    }
}

TEST(CountG, Examples) {
  for (std::int64_t n = 1; n <= 8; ++n) EXPECT_EQ(marked_pair_count(1, 1, 1, n), T(n));
  for (std::int64_t p : {2, 3})
    for (std::int64_t n = 1; n <= 3; ++n) {
      std::int64_t pn = 1;
      for (int i = 0; i < n; ++i) pn *= p;
      for (std::int64_t d = 1, pd = p; d <= n; ++d, pd *= p)
        for (std::int64_t w = 0, pw = 1; w <= n - d; ++w, pw *= p)
          EXPECT_EQ(marked_pair_count(pw, 1, pd, pn), (T(pn / pd) - T(pn * p / pd)) * T(pw))
              << p << " " << n << " " << d << " " << w;
    }
  EXPECT_TRUE(marked_pair_count(4, 1, 2, 2).is_zero());
  EXPECT_TRUE(marked_pair_count_agg(3, 2, 4).is_zero());
}

TEST(Oracles, ClosedFormsAgainstBruteForce) {
  for (const auto& s : run_subgroup_oracles(8, 6)) {
    EXPECT_TRUE(s.ok()) << s.name << ": " << s.passed << "/" << s.total
                        << (s.failures.empty() ? "" : " first failure " + s.failures.front());
    EXPECT_GT(s.total, 0u) << s.name;
  }
}

TEST(Oracles, BruteLatticeDirect) {
  // a hand-rolled double sum over subgroups for n = 2, 3
  for (std::int64_t n : {2, 3}) {
    const auto all = enumerate_subgroups(n);
    for (std::int64_t d2 : divisors(n))
      for (std::int64_t d1 : divisors(d2)) {
        GroupElement m, f;
        for (const auto& [h, ch] : all) {
          if (ch != Cotype{d1, d2}) continue;
          m += subgroup_average(h);
          for (const auto& [k, ck] : all)
            if (k.contains(h)) f += ga_scale(lattice_mobius(quotient_cotype(k, h)), subgroup_average(k));
        }
        EXPECT_EQ(refined_cotype_count(d1, d2, n), m);
        EXPECT_EQ(twisted_pair_count(d1, d2, n), f);
      }
  }
}

TEST(MarkedAverage, EqualsProduct) {
  for (std::int64_t n = 1; n <= 6; ++n)
    for (const auto& [k, ct] : enumerate_subgroups(n))
      for (std::int64_t omega : divisors(n))
        EXPECT_EQ(brute::marked_average(k, omega), subgroup_average(k) * T(omega)) << k.to_string() << " " << omega;
}

TEST(Pushforward, PrimePowerRecursion) {
  // reduction Z_{p^e}^2 -> Z_{p^{e-1}}^2 sends M(p^e) to p M(p^{e-1}), e >= 2
  for (std::int64_t p : {2, 3})
    for (int e = 2; e <= 4; ++e) {
      std::int64_t n = 1;
      for (int i = 0; i < e; ++i) n *= p;
      if (n > 81) continue;
      GroupElement total;
      for (const auto& [k, ct] : enumerate_subgroups(n))
        if (ct.d1 == 1 && ct.d2 == n) total += subgroup_average(k);
      GroupElement lower;
      for (const auto& [k, ct] : enumerate_subgroups(n / p))
        if (ct.d1 == 1 && ct.d2 == n / p) lower += subgroup_average(k);
      EXPECT_EQ(reduce_modulus(total, n, p), ga_scale(p, lower)) << p << "^" << e;
      EXPECT_EQ(reduce_modulus(refined_cotype_count(1, n, n), n, p), ga_scale(p, refined_cotype_count(1, n / p, n / p)));
    }
}

TEST(Subgroups, Preconditions) {
  EXPECT_THROW(enumerate_subgroups(0), std::domain_error);
  EXPECT_THROW(Subgroup(4, 3, 0, 1), std::domain_error);
}
