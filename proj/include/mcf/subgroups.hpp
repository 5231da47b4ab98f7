#pragma once

#include <compare>
#include <map>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mcf/group_algebra.hpp"

namespace mcf {

// Invariant factors (d1, d2) with d1 | d2 of a finite abelian group
// Z_{d1} x Z_{d2}.
struct Cotype {
  std::int64_t d1 = 1;
  std::int64_t d2 = 1;
  auto operator<=>(const Cotype&) const = default;
};

// Smith invariants of the integer matrix [[m00, m01], [m10, m11]]. The
// matrix must be nonsingular.
Cotype smith_invariants(std::int64_t m00, std::int64_t m01, std::int64_t m10, std::int64_t m11);

// A subgroup K of Z_n^2, stored through the lattice L = K + nZ^2 with basis
// columns (a, 0) and (b, c): a, c > 0 dividing n, 0 <= b < a.
class Subgroup {
 public:
  Subgroup(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t c);

  static Subgroup whole(std::int64_t n) { return {n, 1, 0, 1}; }
  static Subgroup trivial(std::int64_t n) { return {n, n, 0, n}; }

  std::int64_t modulus() const { return n_; }
  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t c() const { return c_; }

  std::int64_t index() const { return a_ * c_; }
  std::int64_t order() const { return n_ * n_ / index(); }
  // Invariants of Z_n^2 / K.
  Cotype cotype() const;

  bool contains(std::int64_t x, std::int64_t y) const;
  bool contains(const Subgroup& h) const;
  std::vector<std::pair<std::int64_t, std::int64_t>> elements() const;

  std::string to_string() const;
  auto operator<=>(const Subgroup&) const = default;

 private:
  std::int64_t n_, a_, b_, c_;
};

std::vector<std::pair<Subgroup, Cotype>> enumerate_subgroups(std::int64_t n);

// Invariants of K/H for H contained in K.
Cotype quotient_cotype(const Subgroup& k, const Subgroup& h);

GroupElement subgroup_average(const Subgroup& k);

// Moebius function of the subgroup lattice evaluated on Z_{d1} x Z_{d2}.
std::int64_t lattice_mobius(const Cotype& quotient);

// Sum of T_K over subgroups of cotype (d1, d2).
GroupElement refined_cotype_count(std::int64_t d1, std::int64_t d2, std::int64_t n);
TBasis refined_cotype_count_t_basis(std::int64_t d1, std::int64_t d2, std::int64_t n);

// Sum of T_K over subgroups of index delta.
GroupElement refined_index_count(std::int64_t delta, std::int64_t n);
TBasis refined_index_count_t_basis(std::int64_t delta, std::int64_t n);

// Sum over H of cotype (d1, d2) and K containing H of mu(K/H) T_K.
GroupElement twisted_pair_count(std::int64_t d1, std::int64_t d2, std::int64_t n);
TBasis twisted_pair_count_t_basis(std::int64_t d1, std::int64_t d2, std::int64_t n);
GroupElement twisted_pair_count_agg(std::int64_t delta, std::int64_t n);
TBasis twisted_pair_count_agg_t_basis(std::int64_t delta, std::int64_t n);

// As twisted_pair_count with T_K replaced by its omega-marked average.
GroupElement marked_pair_count(std::int64_t omega, std::int64_t d1, std::int64_t d2, std::int64_t n);
TBasis marked_pair_count_t_basis(std::int64_t omega, std::int64_t d1, std::int64_t d2, std::int64_t n);
GroupElement marked_pair_count_agg(std::int64_t omega, std::int64_t delta, std::int64_t n);
TBasis marked_pair_count_agg_t_basis(std::int64_t omega, std::int64_t delta, std::int64_t n);

// Brute-force evaluations straight from the definitions, over
// enumerate_subgroups. Used as oracles.
namespace brute {

// The subgroup lattice of Z_n^2 with averages and nonzero Moebius pairs
// cached, so many sums over the same n share the work.
class Lattice {
 public:
  explicit Lattice(std::int64_t n);

  std::int64_t modulus() const { return n_; }
  const std::vector<Subgroup>& subgroups() const { return all_; }

  GroupElement cotype_count(std::int64_t d1, std::int64_t d2) const;
  GroupElement index_count(std::int64_t delta) const;
  GroupElement twisted_pair_count(std::int64_t d1, std::int64_t d2) const;
  GroupElement twisted_pair_count_agg(std::int64_t delta) const;
  GroupElement marked_pair_count(std::int64_t omega, std::int64_t d1, std::int64_t d2) const;
  GroupElement marked_pair_count_agg(std::int64_t omega, std::int64_t delta) const;
  // Number of subgroups of the given cotype.
  std::size_t cotype_size(std::int64_t d1, std::int64_t d2) const;

 private:
  struct Pair {
    std::size_t h;
    std::size_t k;
    std::int64_t mu;
  };
  GroupElement pair_sum(const std::vector<Cotype>& cotypes, std::int64_t omega) const;
  const GroupElement& marked(std::size_t k, std::int64_t omega) const;

  std::int64_t n_;
  std::vector<Subgroup> all_;
  std::vector<Cotype> cotypes_;
  std::vector<GroupElement> averages_;
  std::vector<Pair> pairs_;
  mutable std::map<std::pair<std::size_t, std::int64_t>, GroupElement> marked_;
};

// Cotypes (d1, d2) with d1 * d2 == delta and d1 | d2 | n.
std::vector<Cotype> cotypes_of_index(std::int64_t delta, std::int64_t n);

// Average over morphisms Z_n -> Z_n^2/K of the coset averages of the image of n/omega.
GroupElement marked_average(const Subgroup& k, std::int64_t omega);

GroupElement cotype_count(std::int64_t d1, std::int64_t d2, std::int64_t n);
GroupElement index_count(std::int64_t delta, std::int64_t n);
GroupElement twisted_pair_count(std::int64_t d1, std::int64_t d2, std::int64_t n);
GroupElement twisted_pair_count_agg(std::int64_t delta, std::int64_t n);
GroupElement marked_pair_count(std::int64_t omega, std::int64_t d1, std::int64_t d2, std::int64_t n);
GroupElement marked_pair_count_agg(std::int64_t omega, std::int64_t delta, std::int64_t n);

}  // namespace brute

struct OracleSuite {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  std::vector<std::string> failures;
  bool ok() const { return passed == total; }
};

// Closed forms against brute force for every n <= n_max; the marked
// averages are compared with T_K T_omega for n <= marked_n_max.
std::vector<OracleSuite> run_subgroup_oracles(std::int64_t n_max, std::int64_t marked_n_max = 8);

// Pushforward along the reduction Z_{n}^2 -> Z_{n/p}^2, applied to the
// points of an n-torsion element.
GroupElement reduce_modulus(const GroupElement& a, std::int64_t n, std::int64_t p);

}  // namespace mcf
