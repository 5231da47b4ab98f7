#pragma once

// Property sweeps shared by the unit tests and the acceptance runner. Each
// returns a list of human-readable failures; empty means everything held.

#include <numeric>
#include <string>
#include <vector>

#include "mcf/group_algebra.hpp"
#include "mcf/refined_divisors.hpp"

namespace mcf::props {

using Failures = std::vector<std::string>;

inline std::string at(std::initializer_list<std::int64_t> xs) {
  std::string out = "(";
  for (auto x : xs) out += (out.size() > 1 ? "," : "") + std::to_string(x);
  return out + ")";
}

// T_n T_m, m{d} T_n, d{1/d} T_n and the morphism properties of m{d}, d{1/d}
// on products of torsion averages and points.
inline Failures operator_laws(std::int64_t bound) {
  Failures f;
  for (std::int64_t n = 1; n <= bound; ++n) {
    const GroupElement tn = torsion_average(n);
    for (std::int64_t m = 1; m <= bound; ++m) {
      const GroupElement tm = torsion_average(m);
      if (tn * tm != torsion_average(std::lcm(n, m))) f.push_back("T_n T_m " + at({n, m}));
    }
    for (std::int64_t d = 1; d <= bound; ++d) {
      if (mult_op(d, tn) != torsion_average(n / std::gcd(n, d))) f.push_back("m{d} T_n " + at({d, n}));
      if (div_op(d, tn) != torsion_average(n * d)) f.push_back("d{1/d} T_n " + at({d, n}));
    }
  }
  // ring morphism properties on small combinations of points
  for (std::int64_t n = 1; n <= bound; ++n)
    for (std::int64_t m = 1; m <= bound; ++m) {
      const GroupElement x = ga_scale(2, GroupElement(TorsionPoint(1, 2, n))) - GroupElement(TorsionPoint(0, 1, n));
      const GroupElement y = GroupElement(TorsionPoint(1, 0, m)) + ga_scale(make_rational(1, 2), GroupElement(TorsionPoint(1, 1, m)));
      const GroupElement xy = x * y;
      for (std::int64_t d = 1; d <= bound; ++d) {
        if (mult_op(d, xy) != mult_op(d, x) * mult_op(d, y)) f.push_back("m{d} multiplicative " + at({d, n, m}));
        if (mult_op(d, x + y) != mult_op(d, x) + mult_op(d, y)) f.push_back("m{d} additive " + at({d, n, m}));
        if (div_op(d, xy) != div_op(d, x) * div_op(d, y)) f.push_back("d{1/d} multiplicative " + at({d, n, m}));
        if (div_op(d, x + y) != div_op(d, x) + div_op(d, y)) f.push_back("d{1/d} additive " + at({d, n, m}));
        if (mult_op(d, div_op(d, x)) != x) f.push_back("m{d} d{1/d} = id " + at({d, n}));
      }
    }
  return f;
}

// The arithmetic properties of the refined divisor functions for
// delta, d, a <= bound and power m.
inline Failures sigma_properties(std::int64_t bound, unsigned m) {
  Failures f;
  auto sigma = [m](std::int64_t delta, std::int64_t a) { return refined_sigma(m, delta, a); };
  for (std::int64_t delta = 1; delta <= bound; ++delta)
    for (std::int64_t a = 1; a <= bound; ++a) {
      const GroupElement s = sigma(delta, a);
      if (degree(s) != Rational(sigma_power(m, a))) f.push_back("degree " + at({m, delta, a}));
      for (std::int64_t d = 1; d <= bound; ++d)
        if (mult_op(d, s) != sigma(delta / std::gcd(d, delta), a)) f.push_back("(i)/(ii) " + at({m, delta, a, d}));
      for (std::int64_t d : divisors(delta))
        if (div_op(delta / d, sigma(d, a)) != s * torsion_average(delta / d)) f.push_back("(iii) " + at({m, delta, a, d}));
      const std::int64_t g = std::gcd(a, delta);
      if (s * torsion_average(delta / g) != s) f.push_back("(iv) " + at({m, delta, a}));
      if (div_op(delta / g, sigma(g, a)) != s) f.push_back("(v) " + at({m, delta, a}));
      GroupElement prod = torsion_average(1);
      for (const auto& [p, e] : factorize(delta * a)) {
        std::int64_t pd = 1, pa = 1;
        for (std::int64_t x = delta; x % p == 0; x /= p) pd *= p;
        for (std::int64_t x = a; x % p == 0; x /= p) pa *= p;
        prod = prod * sigma(pd, pa);
      }
      if (prod != s) f.push_back("(vi) " + at({m, delta, a}));
    }
  return f;
}

}  // namespace mcf::props
