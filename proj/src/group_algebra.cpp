#include "mcf/group_algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <unordered_map>
#include <vector>

namespace mcf {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

Rational common_denominator_numerators(const GroupElement& a, std::vector<BigInt>& nums) {
  BigInt den = 1;
  for (const auto& [p, c] : a.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  nums.clear();
  nums.reserve(a.support_size());
  for (const auto& [p, c] : a.terms()) nums.push_back(c.get_num() * (den / c.get_den()));
  return Rational(den);
}

}  // namespace

std::size_t max_terms() {
  static const std::size_t limit = [] {
    const char* env = std::getenv("MCF_MAX_TERMS");
    if (env == nullptr || *env == '\0') return std::size_t{1000000};
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) return std::size_t{1000000};
    return static_cast<std::size_t>(v);
  }();
  return limit;
}

void check_term_limit(std::size_t size, const char* where) {
  if (size > max_terms())
    throw BoundExceeded("MCF_MAX_TERMS", std::string(where) + " needs " + std::to_string(size) +
                                             " terms, limit " + std::to_string(max_terms()));
}

TorsionPoint::TorsionPoint(std::int64_t x, std::int64_t y, std::int64_t den) {
  if (den < 1) throw std::domain_error("torsion point denominator must be positive");
  x = mod(x, den);
  y = mod(y, den);
  const std::int64_t g = std::gcd(std::gcd(x, y), den);
  x_ = x / g;
  y_ = y / g;
  den_ = den / g;
}

TorsionPoint TorsionPoint::operator+(const TorsionPoint& o) const {
  const std::int64_t l = checked_lcm(den_, o.den_);
  return {x_ * (l / den_) + o.x_ * (l / o.den_), y_ * (l / den_) + o.y_ * (l / o.den_), l};
}

TorsionPoint TorsionPoint::operator-() const { return {-x_, -y_, den_}; }

TorsionPoint TorsionPoint::times(std::int64_t d) const {
  const std::int64_t dm = mod(d, den_);
  return {static_cast<std::int64_t>(static_cast<__int128>(dm) * x_ % den_),
          static_cast<std::int64_t>(static_cast<__int128>(dm) * y_ % den_), den_};
}

std::string TorsionPoint::to_string() const {
  const Rational xs = x_value(), ys = y_value();
  if (x_ == 0 && y_ == 0) return "0";
  std::string out;
  if (x_ != 0) out = mcf::to_string(xs);
  if (y_ != 0) {
    if (!out.empty()) out += " + ";
    out += mcf::to_string(ys) + "·τ";
  }
  return out;
}

GroupElement::GroupElement(const TorsionPoint& p, const Rational& c) { add_term(p, c); }

Rational GroupElement::coefficient(const TorsionPoint& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GroupElement::add_term(const TorsionPoint& p, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

GroupElement& GroupElement::operator+=(const GroupElement& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

GroupElement& GroupElement::operator-=(const GroupElement& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

GroupElement& GroupElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, v] : terms_) v *= c;
  return *this;
}

std::int64_t GroupElement::torsion_bound() const {
  std::int64_t n = 1;
  for (const auto& [p, c] : terms_) n = checked_lcm(n, p.order());
  return n;
}

GroupElement operator+(GroupElement a, const GroupElement& b) { return a += b; }
GroupElement operator-(GroupElement a, const GroupElement& b) { return a -= b; }
GroupElement operator*(const Rational& c, GroupElement a) { return a *= c; }
GroupElement operator*(const GroupElement& a, const GroupElement& b) { return ga_mul(a, b); }

GroupElement ga_add(const GroupElement& a, const GroupElement& b) { return a + b; }
GroupElement ga_scale(const Rational& c, const GroupElement& a) { return c * a; }

GroupElement ga_mul(const GroupElement& a, const GroupElement& b) {
  GroupElement out;
  if (a.is_zero() || b.is_zero()) return out;
  const std::int64_t l = checked_lcm(a.torsion_bound(), b.torsion_bound());
  // Accumulate integer numerators over the l-torsion grid, densely for small l.
  const bool dense = l <= 256;
  if (!dense && l > (std::int64_t{1} << 31)) {
    check_term_limit(a.support_size() * b.support_size(), "ga_mul");
    for (const auto& [p, c] : a.terms())
      for (const auto& [q, d] : b.terms()) out.add_term(p + q, c * d);
    return out;
  }
  std::vector<BigInt> na, nb;
  const Rational da = common_denominator_numerators(a, na);
  const Rational db = common_denominator_numerators(b, nb);
  std::vector<std::pair<std::int64_t, std::int64_t>> pa, pb;
  for (const auto& [p, c] : a.terms()) pa.emplace_back(p.x() * (l / p.order()), p.y() * (l / p.order()));
  for (const auto& [p, c] : b.terms()) pb.emplace_back(p.x() * (l / p.order()), p.y() * (l / p.order()));
  const BigInt den = da.get_num() * db.get_num();
  auto product_at = [&](auto&& slot) {
    for (std::size_t i = 0; i < pa.size(); ++i)
      for (std::size_t j = 0; j < pb.size(); ++j) {
        std::int64_t x = pa[i].first + pb[j].first;
        std::int64_t y = pa[i].second + pb[j].second;
        if (x >= l) x -= l;
        if (y >= l) y -= l;
        mpz_addmul(slot(static_cast<std::uint64_t>(x * l + y)).get_mpz_t(), na[i].get_mpz_t(), nb[j].get_mpz_t());
      }
  };
  if (dense) {
    std::vector<BigInt> acc(static_cast<std::size_t>(l * l));
    std::vector<bool> touched(acc.size(), false);
    product_at([&](std::uint64_t idx) -> BigInt& {
      touched[idx] = true;
      return acc[idx];
    });
    for (std::int64_t x = 0; x < l; ++x)
      for (std::int64_t y = 0; y < l; ++y) {
        const std::size_t idx = static_cast<std::size_t>(x * l + y);
        if (!touched[idx] || acc[idx] == 0) continue;
        out.add_term(TorsionPoint(x, y, l), make_rational(acc[idx], den));
      }
  } else {
    check_term_limit(a.support_size() * b.support_size(), "ga_mul");
    std::unordered_map<std::uint64_t, BigInt> acc;
    acc.reserve(std::min(a.support_size() * b.support_size(), max_terms()));
    product_at([&](std::uint64_t idx) -> BigInt& { return acc[idx]; });
    for (const auto& [idx, v] : acc) {
      if (v == 0) continue;
      const auto key = static_cast<std::int64_t>(idx);
      out.add_term(TorsionPoint(key / l, key % l, l), make_rational(v, den));
    }
  }
  check_term_limit(out.support_size(), "ga_mul");
  return out;
}

GroupElement mult_op(std::int64_t d, const GroupElement& a) {
  if (d < 1) throw std::domain_error("mult_op requires d >= 1");
  GroupElement out;
  for (const auto& [p, c] : a.terms()) out.add_term(p.times(d), c);
  return out;
}

GroupElement div_op(std::int64_t d, const GroupElement& a) {
  if (d < 1) throw std::domain_error("div_op requires d >= 1");
  check_term_limit(a.support_size() * static_cast<std::size_t>(d * d), "div_op");
  GroupElement out;
  const Rational w = make_rational(1, d * d);
  for (const auto& [p, c] : a.terms()) {
    const std::int64_t n = p.order();
    const Rational cw = c * w;
    for (std::int64_t i = 0; i < d; ++i)
      for (std::int64_t j = 0; j < d; ++j) out.add_term(TorsionPoint(p.x() + n * i, p.y() + n * j, d * n), cw);
  }
  return out;
}

GroupElement torsion_average(std::int64_t n) {
  if (n < 1) throw std::domain_error("torsion_average requires n >= 1");
  check_term_limit(static_cast<std::size_t>(n * n), "torsion_average");
  GroupElement out;
  const Rational w = make_rational(1, n * n);
  for (std::int64_t x = 0; x < n; ++x)
    for (std::int64_t y = 0; y < n; ++y) out.add_term(TorsionPoint(x, y, n), w);
  return out;
}

Rational degree(const GroupElement& a) {
  Rational s = 0;
  for (const auto& [p, c] : a.terms()) s += c;
  return s;
}

TBasis t_basis_decompose(std::int64_t n, const GroupElement& a) {
  if (n < 1) throw std::domain_error("t_basis_decompose requires n >= 1");
  for (const auto& [p, c] : a.terms())
    if (!p.killed_by(n))
      throw NotTorsion("point " + p.to_string() + " is not " + std::to_string(n) + "-torsion");

  const std::vector<std::int64_t> divs = divisors(n);
  // Value at the probe point (1/d, 0) of exact order d.
  std::map<std::int64_t, Rational> probe;
  for (std::int64_t d : divs) probe[d] = a.coefficient(TorsionPoint(1, 0, d));

  TBasis c;
  for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
    const std::int64_t d = *it;
    Rational rest = 0;
    for (const auto& [k, ck] : c)
      if (k % d == 0) rest += ck / Rational(k * k);
    const Rational cd = Rational(d * d) * (probe[d] - rest);
    if (cd != 0) c[d] = cd;
  }

  // Every point of order d must carry the probe value.
  std::map<std::int64_t, std::size_t> count;
  for (const auto& [p, v] : a.terms()) {
    const TorsionPoint pr(1, 0, p.order());
    if (v != probe[p.order()])
      throw NotDiagonal("coefficients differ on points of order " + std::to_string(p.order()),
                        p.to_string() + " -> " + to_string(v), pr.to_string() + " -> " + to_string(probe[p.order()]));
    ++count[p.order()];
  }
  for (std::int64_t d : divs) {
    if (probe[d] == 0) continue;
    if (BigInt(static_cast<unsigned long>(count[d])) == totient(TotientKind::jordan2, d)) continue;
    for (std::int64_t x = 0; x < d; ++x)
      for (std::int64_t y = 0; y < d; ++y) {
        if (std::gcd(std::gcd(x, y), d) != 1) continue;
        const TorsionPoint q(x, y, d);
        if (a.coefficient(q) == 0)
          throw NotDiagonal("coefficients differ on points of order " + std::to_string(d),
                            q.to_string() + " -> 0", TorsionPoint(1, 0, d).to_string() + " -> " + to_string(probe[d]));
      }
  }
  return c;
}

Rational prim_coefficient(std::int64_t n, const GroupElement& a) {
  const TBasis c = t_basis_decompose(n, a);
  auto it = c.find(n);
  return it == c.end() ? Rational(0) : it->second;
}

std::int64_t tb_lcm(const TBasis& c) {
  std::int64_t l = 1;
  for (const auto& [k, v] : c) l = checked_lcm(l, k);
  return l;
}

GroupElement from_t_basis(const TBasis& c) {
  GroupElement out;
  if (c.empty()) return out;
  const std::int64_t l = tb_lcm(c);
  std::size_t total = 0;
  std::vector<std::pair<std::int64_t, Rational>> values;
  for (std::int64_t d : divisors(l)) {
    Rational v = 0;
    for (const auto& [k, ck] : c)
      if (k % d == 0) v += ck / Rational(k * k);
    if (v == 0) continue;
    values.emplace_back(d, v);
    total += totient(TotientKind::jordan2, d).get_ui();
  }
  check_term_limit(total, "from_t_basis");
  for (const auto& [d, v] : values)
    for (std::int64_t x = 0; x < d; ++x)
      for (std::int64_t y = 0; y < d; ++y)
        if (std::gcd(std::gcd(x, y), d) == 1) out.add_term(TorsionPoint(x, y, d), v);
  return out;
}

TBasis tb_mul(const TBasis& a, const TBasis& b) {
  TBasis out;
  for (const auto& [k, ck] : a)
    for (const auto& [m, cm] : b) out[checked_lcm(k, m)] += ck * cm;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

TBasis tb_add(TBasis a, const TBasis& b) {
  for (const auto& [k, v] : b) a[k] += v;
  std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
  return a;
}

TBasis tb_scale(const Rational& c, TBasis a) {
  if (c == 0) return {};
  for (auto& [k, v] : a) v *= c;
  return a;
}

std::string render_t_basis(const TBasis& c) {
  static const char* subs[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  if (c.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, v] : c) {
    Rational mag = abs(v);
    if (first) {
      if (v < 0) out += "-";
    } else {
      out += v < 0 ? " - " : " + ";
    }
    first = false;
    if (mag != 1) out += to_string(mag) + "·";
    out += "T";
    for (char ch : std::to_string(k)) out += subs[ch - '0'];
  }
  return out;
}

}  // namespace mcf
