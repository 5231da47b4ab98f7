#include <gtest/gtest.h>

#include "support/printing.hpp"
#include "mcf/invariants.hpp"
#include "mcf/refined_divisors.hpp"

using namespace mcf;

namespace {

// [q^d] g (D G_2)^(g-1), with D G_2 = sum n sigma(n) q^n.
BigInt eisenstein_count(int g, std::int64_t d) {
  std::vector<BigInt> dg(d + 1, 0), power(d + 1, 0);
  for (std::int64_t n = 1; n <= d; ++n) dg[n] = n * sigma_power(1, n);
  power[0] = 1;
  for (int i = 0; i < g - 1; ++i) {
    std::vector<BigInt> next(d + 1, 0);
    for (std::int64_t x = 0; x <= d; ++x)
      for (std::int64_t y = 0; x + y <= d; ++y) next[x + y] += power[x] * dg[y];
    power = next;
  }
  return power[d] * g;
}

RamificationProfile profile(std::int64_t a, std::vector<std::int64_t> w) { return {a, std::move(w)}; }

}  // namespace

TEST(Divisibility, Examples) {
  EXPECT_EQ(divisibility_of_class({4, 2}, TorsionPoint(1, 0, 4)), 1);
  EXPECT_EQ(divisibility_of_class({4, 2}, TorsionPoint::zero()), 2);
  EXPECT_EQ(divisibility_of_class({4, 2}, TorsionPoint(1, 1, 2)), 2);
  EXPECT_EQ(divisibility_of_class({6, 4}, TorsionPoint(0, 1, 3)), 2);
  EXPECT_THROW(divisibility_of_class({4, 2}, TorsionPoint(1, 0, 3)), std::domain_error);
}

TEST(AbelianInvariant, PrimitiveCountsMatchEisensteinSeries) {
  // coefficient at a point of exact order |B| is the primitive count for
  // self-intersection 2 a |B|
  for (int g = 2; g <= 3; ++g)
    for (std::int64_t n = 1; n <= 3; ++n)
      for (std::int64_t a = 1; a * n <= 4; ++a) {
        const auto v = abelian_invariant(g, {n, a});
        EXPECT_EQ(v.coefficient(TorsionPoint(1, 0, n)), Rational(eisenstein_count(g, a * n)))
            << "g=" << g << " B=(" << n << "," << a << ")";
      }
}

TEST(AbelianInvariant, DiagonalAndSymmetric) {
  for (std::int64_t n = 1; n <= 4; ++n)
    for (std::int64_t a = 1; a <= 2; ++a) {
      const auto v = abelian_invariant(2, {n, a});
      EXPECT_NO_THROW(t_basis_decompose(n, v));
      EXPECT_EQ(n % v.torsion_bound(), 0);
      // depends on u only through its order
      for (std::int64_t x = 0; x < n; ++x)
        for (std::int64_t y = 0; y < n; ++y) {
          const TorsionPoint u(x, y, n);
          EXPECT_EQ(v.coefficient(u), v.coefficient(TorsionPoint(1, 0, u.order())));
        }
      EXPECT_EQ(prim_coefficient(n, v), Rational(n * n) * v.coefficient(TorsionPoint(1, 0, n)));
    }
}

TEST(Ep1Invariant, Symmetric) {
  for (std::int64_t w = 1; w <= 4; ++w) {
    const auto v = ep1_invariant(1, profile(2, {w, -w}));
    for (std::int64_t x = 0; x < w; ++x)
      for (std::int64_t y = 0; y < w; ++y) {
        const TorsionPoint t(x, y, w);
        EXPECT_EQ(v.coefficient(t), v.coefficient(TorsionPoint(1, 0, t.order())));
      }
    EXPECT_EQ(prim_coefficient(w, v), Rational(w * w) * v.coefficient(TorsionPoint(1, 0, w)));
  }
}

TEST(Ep1Invariant, DegreeIsUnrefinedCount) {
  for (std::int64_t a = 1; a <= 3; ++a) {
    Rational total = 0;
    for (const auto& d : enumerate_floor_diagrams(2, a, {2, -2})) total += degree(floor_multiplicity(d));
    EXPECT_EQ(degree(ep1_invariant(2, profile(a, {2, -2}))), total);
  }
}

TEST(Ep1Invariant, TwoEndsGenusOne) {
  // two diagrams (the flat below or above the floor), each w^3 a sigma^w(a)
  for (std::int64_t w = 1; w <= 3; ++w)
    for (std::int64_t a = 1; a <= 4; ++a) {
      const auto expect = ga_scale(Rational(2 * w * w * w * a), refined_sigma(1, w, a));
      EXPECT_EQ(ep1_invariant(1, profile(a, {w, -w})), expect) << w << " " << a;
    }
}

TEST(Invariants, LabeledModeAgrees) {
  EnumerationOptions labeled;
  labeled.mode = EnumerationMode::labeled;
  EXPECT_EQ(ep1_invariant(2, profile(2, {2, -1, -1}), {}, labeled), ep1_invariant(2, profile(2, {2, -1, -1})));
  EXPECT_EQ(abelian_invariant(3, {2, 1}, {}, labeled), abelian_invariant(3, {2, 1}));
}

TEST(Invariants, LambdaWithFullSkeletonIsPoints) {
  for (int g = 1; g <= 3; ++g)
    EXPECT_EQ(ep1_invariant(g, profile(2, {1, -1}), InvariantMode::lambda(g)), ep1_invariant(g, profile(2, {1, -1})));
  for (int g = 2; g <= 3; ++g)
    EXPECT_EQ(abelian_invariant(g, {2, 1}, InvariantMode::lambda(g)), abelian_invariant(g, {2, 1}));
}

TEST(Theorem, Exponents) {
  TheoremParams p;
  p.g = 2;
  p.g0 = 1;
  p.profile = profile(1, {1, 1, -2});
  EXPECT_EQ(theorem_exponent(TheoremKind::ep1_points, p), 10);
  EXPECT_EQ(theorem_exponent(TheoremKind::abelian_points, p), 5);
  EXPECT_EQ(theorem_exponent(TheoremKind::ep1_lambda, p), 8);
  EXPECT_EQ(theorem_exponent(TheoremKind::abelian_lambda, p), 3);
  EXPECT_EQ(parse_theorem_kind("abelian_lambda"), TheoremKind::abelian_lambda);
  EXPECT_THROW(parse_theorem_kind("k3"), std::invalid_argument);
}

TEST(Theorem, Ep1PointsSmallest) {
  TheoremParams p;
  p.g = 1;
  p.profile = profile(1, {1, -1});
  p.delta_max = 4;
  const auto r = verify_theorem(TheoremKind::ep1_points, p);
  EXPECT_EQ(r.mcf.alpha, 4);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.mcf.checked.size(), 4u);
  for (std::int64_t off : {-1, 1}) {
    p.alpha_override = 4 + off;
    EXPECT_FALSE(verify_theorem(TheoremKind::ep1_points, p).passed()) << off;
  }
}

TEST(Theorem, AbelianPointsSmallest) {
  TheoremParams p;
  p.g = 2;
  p.degree = {1, 1};
  p.delta_max = 4;
  const auto r = verify_theorem(TheoremKind::abelian_points, p);
  EXPECT_EQ(r.mcf.alpha, 5);
  EXPECT_TRUE(r.passed());
  p.alpha_override = 4;
  EXPECT_FALSE(verify_theorem(TheoremKind::abelian_points, p).passed());
}

TEST(Theorem, LambdaModes) {
  TheoremParams p;
  p.g = 2;
  p.g0 = 1;
  p.profile = profile(1, {1, -1});
  EXPECT_TRUE(verify_theorem(TheoremKind::ep1_lambda, p).passed());
  p.g = 3;
  p.g0 = 2;
  p.degree = {1, 1};
  EXPECT_TRUE(verify_theorem(TheoremKind::abelian_lambda, p).passed());
  p.alpha_override = theorem_exponent(TheoremKind::abelian_lambda, p) + 1;
  EXPECT_FALSE(verify_theorem(TheoremKind::abelian_lambda, p).passed());
}

TEST(Theorem, RequiresPrimitiveParameter) {
  TheoremParams p;
  p.g = 2;
  p.degree = {2, 2};
  EXPECT_THROW(verify_theorem(TheoremKind::abelian_points, p), std::domain_error);
}
