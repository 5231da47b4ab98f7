#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "mcf/errors.hpp"
#include "mcf/exact_arith.hpp"

namespace mcf {

// A torsion point (x/den, y/den) of (Q/Z)^2, kept in lowest terms so that
// den is exactly the order of the point.
class TorsionPoint {
 public:
  TorsionPoint() = default;
  TorsionPoint(std::int64_t x, std::int64_t y, std::int64_t den);

  static TorsionPoint zero() { return {}; }

  std::int64_t x() const { return x_; }
  std::int64_t y() const { return y_; }
  std::int64_t order() const { return den_; }

  TorsionPoint operator+(const TorsionPoint& o) const;
  TorsionPoint operator-() const;
  TorsionPoint times(std::int64_t d) const;
  bool killed_by(std::int64_t n) const { return n % den_ == 0; }

  // Coordinates as fractions in [0, 1).
  Rational x_value() const { return make_rational(x_, den_); }
  Rational y_value() const { return make_rational(y_, den_); }

  std::string to_string() const;

  auto operator<=>(const TorsionPoint&) const = default;

 private:
  std::int64_t x_ = 0;
  std::int64_t y_ = 0;
  std::int64_t den_ = 1;
};

// Coefficients in the T_k basis, keyed by k.
using TBasis = std::map<std::int64_t, Rational>;

// Finitely supported function (Q/Z)^2 -> Q, read as an element of the group
// algebra. Zero coefficients are never stored.
class GroupElement {
 public:
  using Terms = std::map<TorsionPoint, Rational>;

  GroupElement() = default;
  explicit GroupElement(const TorsionPoint& p, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  std::size_t support_size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const TorsionPoint& p) const;

  void add_term(const TorsionPoint& p, const Rational& c);

  GroupElement& operator+=(const GroupElement& o);
  GroupElement& operator-=(const GroupElement& o);
  GroupElement& operator*=(const Rational& c);

  // Smallest n with every supported point killed by n.
  std::int64_t torsion_bound() const;

  bool operator==(const GroupElement& o) const { return terms_ == o.terms_; }

 private:
  Terms terms_;
};

GroupElement operator+(GroupElement a, const GroupElement& b);
GroupElement operator-(GroupElement a, const GroupElement& b);
GroupElement operator*(const Rational& c, GroupElement a);
GroupElement operator*(const GroupElement& a, const GroupElement& b);

GroupElement ga_add(const GroupElement& a, const GroupElement& b);
GroupElement ga_scale(const Rational& c, const GroupElement& a);
GroupElement ga_mul(const GroupElement& a, const GroupElement& b);

// Pushforward along theta -> d*theta.
GroupElement mult_op(std::int64_t d, const GroupElement& a);
// Averaged pullback: (theta) -> d^-2 sum over tau with d*tau = theta.
GroupElement div_op(std::int64_t d, const GroupElement& a);

// T_n: the uniform average over the n-torsion subgroup.
GroupElement torsion_average(std::int64_t n);

Rational degree(const GroupElement& a);

// Coefficients c_k (k | n) with a = sum c_k T_k. Throws NotTorsion if the
// support is not n-torsion and NotDiagonal if no such expansion exists.
TBasis t_basis_decompose(std::int64_t n, const GroupElement& a);

// Coefficient of T_n in the T-basis expansion of a.
Rational prim_coefficient(std::int64_t n, const GroupElement& a);

// Materializes sum c_k T_k.
GroupElement from_t_basis(const TBasis& c);
TBasis tb_mul(const TBasis& a, const TBasis& b);
TBasis tb_add(TBasis a, const TBasis& b);
TBasis tb_scale(const Rational& c, TBasis a);
std::int64_t tb_lcm(const TBasis& c);

// "3·T₁ + 4·T₂"; "0" for the empty combination.
std::string render_t_basis(const TBasis& c);

// Limit on the support size of any constructed element, read once from
// MCF_MAX_TERMS (default 10^6).
std::size_t max_terms();
void check_term_limit(std::size_t size, const char* where);

}  // namespace mcf
