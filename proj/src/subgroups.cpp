#include "mcf/subgroups.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>

namespace mcf {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

void require_chain(std::int64_t d1, std::int64_t d2, std::int64_t n) {
  if (d1 < 1 || d2 < 1 || n < 1 || d2 % d1 != 0 || n % d2 != 0)
    throw std::domain_error("cotype requires d1 | d2 | n");
}

void require_index(std::int64_t delta, std::int64_t n) {
  if (delta < 1 || n < 1 || (n * n) % delta != 0) throw std::domain_error("index requires delta | n^2");
}

Rational euler(std::int64_t n) { return Rational(totient(TotientKind::euler, n)); }

}  // namespace

Cotype smith_invariants(std::int64_t m00, std::int64_t m01, std::int64_t m10, std::int64_t m11) {
  const std::int64_t det = std::llabs(m00 * m11 - m01 * m10);
  if (det == 0) throw std::domain_error("singular relation matrix");
  const std::int64_t d1 = std::gcd(std::gcd(std::llabs(m00), std::llabs(m01)), std::gcd(std::llabs(m10), std::llabs(m11)));
  return {d1, det / d1};
}

Subgroup::Subgroup(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t c) : n_(n), a_(a), b_(b), c_(c) {
  if (n < 1) throw std::domain_error("subgroup modulus must be positive");
  if (a < 1 || c < 1 || n % a != 0 || n % c != 0 || b < 0 || b >= a || (b * (n / c)) % a != 0)
    throw std::domain_error("not a canonical subgroup basis");
}

Cotype Subgroup::cotype() const { return smith_invariants(a_, b_, 0, c_); }

bool Subgroup::contains(std::int64_t x, std::int64_t y) const {
  x = mod(x, n_);
  y = mod(y, n_);
  if (y % c_ != 0) return false;
  const std::int64_t t = y / c_;
  return mod(x - b_ * t, a_) == 0;
}

bool Subgroup::contains(const Subgroup& h) const {
  if (h.n_ != n_) throw std::domain_error("subgroups of different ambient groups");
  return contains(h.a_, 0) && contains(h.b_, h.c_);
}

std::vector<std::pair<std::int64_t, std::int64_t>> Subgroup::elements() const {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  out.reserve(static_cast<std::size_t>(order()));
  for (std::int64_t t = 0; t < n_ / c_; ++t)
    for (std::int64_t s = 0; s < n_ / a_; ++s) out.emplace_back(mod(b_ * t + a_ * s, n_), c_ * t);
  return out;
}

std::string Subgroup::to_string() const {
  return "[[" + std::to_string(a_) + "," + std::to_string(b_) + "],[0," + std::to_string(c_) + "]] mod " +
         std::to_string(n_);
}

std::vector<std::pair<Subgroup, Cotype>> enumerate_subgroups(std::int64_t n) {
  if (n < 1) throw std::domain_error("enumerate_subgroups requires n >= 1");
  std::vector<std::pair<Subgroup, Cotype>> out;
  for (std::int64_t a : divisors(n))
    for (std::int64_t c : divisors(n))
      for (std::int64_t b = 0; b < a; ++b) {
        if ((b * (n / c)) % a != 0) continue;
        Subgroup k(n, a, b, c);
        out.emplace_back(k, k.cotype());
      }
  return out;
}

Cotype quotient_cotype(const Subgroup& k, const Subgroup& h) {
  if (!k.contains(h)) throw std::domain_error("quotient_cotype requires H inside K");
  // Coordinates of the basis of L_H in the basis of L_K.
  const std::int64_t s1 = h.a() / k.a();
  const std::int64_t t2 = h.c() / k.c();
  const std::int64_t s2 = (h.b() - k.b() * t2) / k.a();
  return smith_invariants(s1, s2, 0, t2);
}

GroupElement subgroup_average(const Subgroup& k) {
  GroupElement out;
  const Rational w = make_rational(1, k.order());
  for (auto [x, y] : k.elements()) out.add_term(TorsionPoint(x, y, k.modulus()), w);
  return out;
}

std::int64_t lattice_mobius(const Cotype& q) {
  if (q.d1 < 1 || q.d2 % q.d1 != 0) throw std::domain_error("lattice_mobius requires d1 | d2");
  std::int64_t mu = 1;
  for (auto [p, e2] : factorize(q.d2)) {
    int e1 = 0;
    for (std::int64_t d = q.d1; d % p == 0; d /= p) ++e1;
    if (e2 > 1) return 0;
    // e1 <= e2 <= 1: rank of the elementary p-part is e1 + e2.
    mu *= e1 == 1 ? p : -1;
  }
  return mu;
}

TBasis refined_cotype_count_t_basis(std::int64_t d1, std::int64_t d2, std::int64_t n) {
  require_chain(d1, d2, n);
  const std::int64_t r = d2 / d1;
  TBasis out;
  for (std::int64_t k : divisors(r))
    out[n * k / d2] += Rational(k) * euler(k) * euler(r / k) / euler(r);
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

GroupElement refined_cotype_count(std::int64_t d1, std::int64_t d2, std::int64_t n) {
  return from_t_basis(refined_cotype_count_t_basis(d1, d2, n));
}

TBasis refined_index_count_t_basis(std::int64_t delta, std::int64_t n) {
  require_index(delta, n);
  const std::int64_t base = n / std::gcd(n, delta);
  TBasis out;
  for (std::int64_t k : divisors(std::gcd(delta, n * n / delta))) out[base * k] += Rational(k);
  return out;
}

GroupElement refined_index_count(std::int64_t delta, std::int64_t n) {
  return from_t_basis(refined_index_count_t_basis(delta, n));
}

TBasis twisted_pair_count_t_basis(std::int64_t d1, std::int64_t d2, std::int64_t n) {
  require_chain(d1, d2, n);
  TBasis out;
  if (d1 != 1) return out;
  for (std::int64_t k : divisors(d2))
    if (int mu = mobius(k); mu != 0) out[(n / d2) * k] += Rational(mu);
  return out;
}

GroupElement twisted_pair_count(std::int64_t d1, std::int64_t d2, std::int64_t n) {
  return from_t_basis(twisted_pair_count_t_basis(d1, d2, n));
}

TBasis twisted_pair_count_agg_t_basis(std::int64_t delta, std::int64_t n) {
  require_index(delta, n);
  if (n % delta != 0) return {};
  return twisted_pair_count_t_basis(1, delta, n);
}

GroupElement twisted_pair_count_agg(std::int64_t delta, std::int64_t n) {
  return from_t_basis(twisted_pair_count_agg_t_basis(delta, n));
}

namespace {

TBasis mark(const TBasis& f, std::int64_t omega, std::int64_t n) {
  if (omega < 1) throw std::domain_error("omega must be positive");
  if (n % omega != 0) return {};
  TBasis out;
  for (const auto& [k, v] : f) out[checked_lcm(k, omega)] += v;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

TBasis marked_pair_count_t_basis(std::int64_t omega, std::int64_t d1, std::int64_t d2, std::int64_t n) {
  return mark(twisted_pair_count_t_basis(d1, d2, n), omega, n);
}

GroupElement marked_pair_count(std::int64_t omega, std::int64_t d1, std::int64_t d2, std::int64_t n) {
  return from_t_basis(marked_pair_count_t_basis(omega, d1, d2, n));
}

TBasis marked_pair_count_agg_t_basis(std::int64_t omega, std::int64_t delta, std::int64_t n) {
  return mark(twisted_pair_count_agg_t_basis(delta, n), omega, n);
}

GroupElement marked_pair_count_agg(std::int64_t omega, std::int64_t delta, std::int64_t n) {
  return from_t_basis(marked_pair_count_agg_t_basis(omega, delta, n));
}

GroupElement reduce_modulus(const GroupElement& a, std::int64_t n, std::int64_t p) {
  if (p < 1 || n % p != 0) throw std::domain_error("reduce_modulus requires p | n");
  const std::int64_t m = n / p;
  GroupElement out;
  for (const auto& [pt, c] : a.terms()) {
    if (!pt.killed_by(n)) throw NotTorsion("reduce_modulus: point outside Z_n^2");
    const std::int64_t x = pt.x() * (n / pt.order());
    const std::int64_t y = pt.y() * (n / pt.order());
    out.add_term(TorsionPoint(x % m, y % m, m), c);
  }
  return out;
}

namespace brute {

std::vector<Cotype> cotypes_of_index(std::int64_t delta, std::int64_t n) {
  std::vector<Cotype> out;
  for (std::int64_t d1 : divisors(n))
    if (delta % d1 == 0) {
      const std::int64_t d2 = delta / d1;
      if (d2 % d1 == 0 && n % d2 == 0) out.push_back({d1, d2});
    }
  return out;
}

Lattice::Lattice(std::int64_t n) : n_(n) {
  for (auto& [k, ct] : enumerate_subgroups(n)) {
    all_.push_back(k);
    cotypes_.push_back(ct);
    averages_.push_back(subgroup_average(k));
  }
  for (std::size_t h = 0; h < all_.size(); ++h)
    for (std::size_t k = 0; k < all_.size(); ++k) {
      if (!all_[k].contains(all_[h])) continue;
      const std::int64_t mu = lattice_mobius(quotient_cotype(all_[k], all_[h]));
      if (mu != 0) pairs_.push_back({h, k, mu});
    }
}

GroupElement Lattice::cotype_count(std::int64_t d1, std::int64_t d2) const {
  require_chain(d1, d2, n_);
  GroupElement out;
  for (std::size_t i = 0; i < all_.size(); ++i)
    if (cotypes_[i] == Cotype{d1, d2}) out += averages_[i];
  return out;
}

std::size_t Lattice::cotype_size(std::int64_t d1, std::int64_t d2) const {
  return static_cast<std::size_t>(std::count(cotypes_.begin(), cotypes_.end(), Cotype{d1, d2}));
}

GroupElement Lattice::index_count(std::int64_t delta) const {
  require_index(delta, n_);
  GroupElement out;
  for (std::size_t i = 0; i < all_.size(); ++i)
    if (all_[i].index() == delta) out += averages_[i];
  return out;
}

const GroupElement& Lattice::marked(std::size_t k, std::int64_t omega) const {
  auto key = std::make_pair(k, omega);
  auto it = marked_.find(key);
  if (it == marked_.end()) it = marked_.emplace(key, marked_average(all_[k], omega)).first;
  return it->second;
}

GroupElement Lattice::pair_sum(const std::vector<Cotype>& cotypes, std::int64_t omega) const {
  GroupElement out;
  for (const Pair& p : pairs_) {
    if (std::find(cotypes.begin(), cotypes.end(), cotypes_[p.h]) == cotypes.end()) continue;
    out += Rational(p.mu) * (omega == 0 ? averages_[p.k] : marked(p.k, omega));
  }
  return out;
}

GroupElement Lattice::twisted_pair_count(std::int64_t d1, std::int64_t d2) const {
  require_chain(d1, d2, n_);
  return pair_sum({{d1, d2}}, 0);
}

GroupElement Lattice::twisted_pair_count_agg(std::int64_t delta) const {
  require_index(delta, n_);
  return pair_sum(cotypes_of_index(delta, n_), 0);
}

GroupElement Lattice::marked_pair_count(std::int64_t omega, std::int64_t d1, std::int64_t d2) const {
  require_chain(d1, d2, n_);
  if (omega < 1) throw std::domain_error("omega must be positive");
  return pair_sum({{d1, d2}}, omega);
}

GroupElement Lattice::marked_pair_count_agg(std::int64_t omega, std::int64_t delta) const {
  require_index(delta, n_);
  if (omega < 1) throw std::domain_error("omega must be positive");
  return pair_sum(cotypes_of_index(delta, n_), omega);
}

GroupElement marked_average(const Subgroup& k, std::int64_t omega) {
  const std::int64_t n = k.modulus();
  if (omega < 1) throw std::domain_error("omega must be positive");
  GroupElement out;
  if (n % omega != 0) return out;
  const auto members = k.elements();
  const Rational w = make_rational(1, k.order() * k.index());
  // One coset representative q per element of Z_n^2/K, i.e. per morphism
  // sending the generator of Z_n to q.
  std::vector<bool> seen(static_cast<std::size_t>(n * n), false);
  for (std::int64_t qx = 0; qx < n; ++qx)
    for (std::int64_t qy = 0; qy < n; ++qy) {
      if (seen[qx * n + qy]) continue;
      for (auto [zx, zy] : members) seen[mod(qx + zx, n) * n + mod(qy + zy, n)] = true;
      const std::int64_t vx = mod((n / omega) * qx, n), vy = mod((n / omega) * qy, n);
      for (auto [zx, zy] : members) out.add_term(TorsionPoint(vx + zx, vy + zy, n), w);
    }
  return out;
}

GroupElement cotype_count(std::int64_t d1, std::int64_t d2, std::int64_t n) {
  require_chain(d1, d2, n);
  return Lattice(n).cotype_count(d1, d2);
}

GroupElement index_count(std::int64_t delta, std::int64_t n) {
  require_index(delta, n);
  return Lattice(n).index_count(delta);
}

GroupElement twisted_pair_count(std::int64_t d1, std::int64_t d2, std::int64_t n) {
  require_chain(d1, d2, n);
  return Lattice(n).twisted_pair_count(d1, d2);
}

GroupElement twisted_pair_count_agg(std::int64_t delta, std::int64_t n) {
  require_index(delta, n);
  return Lattice(n).twisted_pair_count_agg(delta);
}

GroupElement marked_pair_count(std::int64_t omega, std::int64_t d1, std::int64_t d2, std::int64_t n) {
  require_chain(d1, d2, n);
  return Lattice(n).marked_pair_count(omega, d1, d2);
}

GroupElement marked_pair_count_agg(std::int64_t omega, std::int64_t delta, std::int64_t n) {
  require_index(delta, n);
  return Lattice(n).marked_pair_count_agg(omega, delta);
}

}  // namespace brute

namespace {

void record(OracleSuite& suite, bool ok, const std::string& what) {
  ++suite.total;
  if (ok) ++suite.passed;
  else suite.failures.push_back(what);
}

std::string args(std::initializer_list<std::int64_t> xs) {
  std::string out = "(";
  for (std::int64_t x : xs) out += (out.size() > 1 ? "," : "") + std::to_string(x);
  return out + ")";
}

}  // namespace

std::vector<OracleSuite> run_subgroup_oracles(std::int64_t n_max, std::int64_t marked_n_max) {
  OracleSuite cotype{"cotype_count"}, index{"index_count"}, twisted{"twisted_pair_count"},
      twisted_agg{"twisted_pair_count_agg"}, marked{"marked_pair_count"}, marked_agg{"marked_pair_count_agg"},
      degree_suite{"cotype_degree"}, prim{"cotype_prim"}, marked_avg{"marked_average"};
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const brute::Lattice lat(n);
    for (std::int64_t d2 : divisors(n))
      for (std::int64_t d1 : divisors(d2)) {
        const GroupElement m = refined_cotype_count(d1, d2, n);
        record(cotype, m == lat.cotype_count(d1, d2), "M" + args({d1, d2, n}));
        record(degree_suite, degree(m) == Rational(static_cast<long>(lat.cotype_size(d1, d2))), "deg M" + args({d1, d2, n}));
        record(prim, prim_coefficient(n, m) == Rational(d1 == 1 ? d2 : 0), "Prim M" + args({d1, d2, n}));
        record(twisted, twisted_pair_count(d1, d2, n) == lat.twisted_pair_count(d1, d2), "F" + args({d1, d2, n}));
        for (std::int64_t omega = 1; omega <= n; ++omega)
          record(marked, marked_pair_count(omega, d1, d2, n) == lat.marked_pair_count(omega, d1, d2),
                 "G" + args({omega, d1, d2, n}));
      }
    record(degree_suite, degree(refined_cotype_count(1, n, n)) == Rational(totient(TotientKind::dedekind, n)),
           "psi" + args({n}));
    for (std::int64_t delta : divisors(n * n)) {
      record(index, refined_index_count(delta, n) == lat.index_count(delta), "M" + args({delta, n}));
      record(twisted_agg, twisted_pair_count_agg(delta, n) == lat.twisted_pair_count_agg(delta), "F" + args({delta, n}));
      for (std::int64_t omega = 1; omega <= n; ++omega)
        record(marked_agg, marked_pair_count_agg(omega, delta, n) == lat.marked_pair_count_agg(omega, delta),
               "G" + args({omega, delta, n}));
    }
    if (n <= marked_n_max)
      for (const Subgroup& k : lat.subgroups())
        for (std::int64_t omega : divisors(n))
          record(marked_avg, brute::marked_average(k, omega) == ga_mul(subgroup_average(k), torsion_average(omega)),
                 "T_K(omega) " + k.to_string() + " omega=" + std::to_string(omega));
  }
  return {cotype, index, twisted, twisted_agg, marked, marked_agg, degree_suite, prim, marked_avg};
}

}  // namespace mcf
