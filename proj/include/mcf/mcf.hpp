#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "mcf/errors.hpp"
#include "mcf/group_algebra.hpp"

namespace mcf {

// A set with a free action of the multiplicative monoid N* and a
// compatible norm.
template <class Key>
struct NStarModule {
  std::string name;
  std::function<Key(std::int64_t, const Key&)> act;
  std::function<std::int64_t(const Key&)> norm;
  // All pairs (k, y) with k*y == x, including k = 1.
  std::function<std::vector<std::pair<std::int64_t, Key>>(const Key&)> divisors;
  std::function<std::string(const Key&)> describe;

  // Integral length: the largest k dividing x.
  std::int64_t length(const Key& x) const {
    std::int64_t best = 1;
    for (const auto& [k, y] : divisors(x)) best = std::max(best, k);
    return best;
  }

  Key primitive(const Key& x) const {
    std::int64_t best = 0;
    Key root = x;
    for (const auto& [k, y] : divisors(x))
      if (k > best) {
        best = k;
        root = y;
      }
    return root;
  }
};

// N* with norm delta -> d * delta.
NStarModule<std::int64_t> natural_module(std::int64_t d = 1);

// Pairs (delta, n) with delta | n^2, acting diagonally, norm n.
NStarModule<std::pair<std::int64_t, std::int64_t>> index_pair_module();

// Group-algebra valued function on a module. Evaluations are memoized.
template <class Key>
class GSequence {
 public:
  using Eval = std::function<GroupElement(const Key&)>;

  GSequence(NStarModule<Key> domain, Eval eval)
      : domain_(std::move(domain)), eval_(std::move(eval)), cache_(std::make_shared<Cache>()) {}

  const NStarModule<Key>& domain() const { return domain_; }

  GroupElement operator()(const Key& x) const {
    {
      std::shared_lock lock(cache_->mutex);
      auto it = cache_->values.find(x);
      if (it != cache_->values.end()) return it->second;
    }
    GroupElement v = eval_(x);
    std::unique_lock lock(cache_->mutex);
    return cache_->values.try_emplace(x, std::move(v)).first->second;
  }

 private:
  struct Cache {
    std::shared_mutex mutex;
    std::map<Key, GroupElement> values;
  };
  NStarModule<Key> domain_;
  Eval eval_;
  std::shared_ptr<Cache> cache_;
};

struct MCFCheck {
  std::string element;
  bool pass = false;
  TBasis lhs;
  TBasis rhs;
  std::string note;
};

struct MCFReport {
  std::int64_t alpha = 0;
  std::vector<MCFCheck> checked;
  bool passed() const {
    for (const auto& c : checked)
      if (!c.pass) return false;
    return true;
  }
};

// Sum over (k, y) dividing x of k^alpha prim(y) T_{|x|/k}.
template <class Key>
TBasis mcf_rhs(const NStarModule<Key>& module, const std::function<Rational(const Key&)>& prim,
               std::int64_t alpha, const Key& x) {
  const std::int64_t n = module.norm(x);
  TBasis out;
  for (const auto& [k, y] : module.divisors(x)) {
    const Rational p = prim(y);
    if (p != 0) out[n / k] += rpow(k, alpha) * p;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

template <class Key>
GroupElement mcf_reconstruct(const NStarModule<Key>& module, const std::function<Rational(const Key&)>& prim,
                             std::int64_t alpha, const Key& x) {
  return from_t_basis(mcf_rhs(module, prim, alpha, x));
}

template <class Key>
std::function<Rational(const Key&)> prim_sequence(const GSequence<Key>& f) {
  return [f](const Key& x) { return prim_coefficient(f.domain().norm(x), f(x)); };
}

namespace detail {

template <class Key>
GroupElement evaluate_divisor(const GSequence<Key>& f, const Key& y) {
  try {
    return f(y);
  } catch (const MissingDivisor&) {
    throw;
  } catch (const NotDiagonal&) {
    throw;
  } catch (const BoundExceeded&) {
    throw;
  } catch (const std::exception& e) {
    throw MissingDivisor("cannot evaluate " + f.domain().describe(y) + ": " + e.what());
  }
}

template <class Key>
MCFCheck check_one(const GSequence<Key>& f, std::int64_t alpha, const Key& x) {
  const auto& module = f.domain();
  MCFCheck check;
  check.element = module.describe(x);
  const std::int64_t n = module.norm(x);
  const GroupElement lhs = f(x);
  check.lhs = t_basis_decompose(n, lhs);

  const std::int64_t base = module.norm(module.primitive(x));
  if (base > 1) {
    TBasis shifted;
    for (const auto& [k, v] : check.lhs) shifted[checked_lcm(k, base)] += v;
    std::erase_if(shifted, [](const auto& kv) { return kv.second == 0; });
    if (shifted != check.lhs) check.note = "not invariant under T_" + std::to_string(base);
  }

  std::function<Rational(const Key&)> prim = [&](const Key& y) {
    return prim_coefficient(module.norm(y), evaluate_divisor(f, y));
  };
  check.rhs = mcf_rhs(module, prim, alpha, x);
  check.pass = check.note.empty() && from_t_basis(check.rhs) == lhs;
  if (!check.pass && check.note.empty()) check.note = "functional equation fails";
  return check;
}

}  // namespace detail

template <class Key>
MCFReport check_alpha_mcf(const GSequence<Key>& f, std::int64_t alpha, const std::vector<Key>& elements,
                          unsigned workers = 1) {
  MCFReport report;
  report.alpha = alpha;
  report.checked.resize(elements.size());
  if (workers <= 1 || elements.size() < 2) {
    for (std::size_t i = 0; i < elements.size(); ++i) report.checked[i] = detail::check_one(f, alpha, elements[i]);
    return report;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < elements.size(); i += workers)
          report.checked[i] = detail::check_one(f, alpha, elements[i]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return report;
}

// x -> length(x)^r F(x).
template <class Key>
GSequence<Key> monomial_shift(const GSequence<Key>& f, std::int64_t r) {
  return GSequence<Key>(f.domain(), [f, r](const Key& x) { return rpow(f.domain().length(x), r) * f(x); });
}

// Pointwise product.
template <class Key>
GSequence<Key> pointwise_product(const GSequence<Key>& f, const GSequence<Key>& g) {
  return GSequence<Key>(f.domain(), [f, g](const Key& x) {
    const std::int64_t n = f.domain().norm(x);
    return from_t_basis(tb_mul(t_basis_decompose(n, f(x)), t_basis_decompose(n, g(x))));
  });
}

// delta -> m{l}(F(l delta)), on N* with the standard norm.
GSequence<std::int64_t> orbit_restrict_and_unshift(const GSequence<std::int64_t>& f, std::int64_t l);

template <class X, class Y>
struct ModuleMorphism {
  std::function<Y(const X&)> map;
  // Every x with map(x) == y.
  std::function<std::vector<X>(const Y&)> fiber;
};

template <class X, class Y>
GSequence<Y> pushforward(const GSequence<X>& f, const ModuleMorphism<X, Y>& m, const NStarModule<Y>& target,
                         std::size_t fiber_bound = 100000) {
  return GSequence<Y>(target, [f, m, target, fiber_bound](const Y& y) {
    const std::vector<X> fiber = m.fiber(y);
    if (fiber.size() > fiber_bound)
      throw InfiniteFiber("fiber over " + target.describe(y) + " exceeds " + std::to_string(fiber_bound));
    GroupElement out;
    for (const X& x : fiber) {
      if (f.domain().norm(x) != target.norm(y)) throw std::logic_error("morphism does not preserve the norm");
      out += f(x);
    }
    return out;
  });
}

}  // namespace mcf
