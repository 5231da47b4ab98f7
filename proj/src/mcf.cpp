#include "mcf/mcf.hpp"

#include <numeric>

namespace mcf {

NStarModule<std::int64_t> natural_module(std::int64_t d) {
  if (d < 1) throw std::domain_error("norm scale must be positive");
  NStarModule<std::int64_t> m;
  m.name = d == 1 ? "N*" : "N* with norm " + std::to_string(d) + "x";
  m.act = [](std::int64_t k, const std::int64_t& x) { return k * x; };
  m.norm = [d](const std::int64_t& x) { return d * x; };
  m.divisors = [](const std::int64_t& x) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t k : mcf::divisors(x)) out.emplace_back(k, x / k);
    return out;
  };
  m.describe = [](const std::int64_t& x) { return std::to_string(x); };
  return m;
}

NStarModule<std::pair<std::int64_t, std::int64_t>> index_pair_module() {
  using P = std::pair<std::int64_t, std::int64_t>;
  NStarModule<P> m;
  m.name = "P2";
  m.act = [](std::int64_t k, const P& x) { return P{k * x.first, k * x.second}; };
  m.norm = [](const P& x) { return x.second; };
  m.divisors = [](const P& x) {
    std::vector<std::pair<std::int64_t, P>> out;
    for (std::int64_t k : mcf::divisors(std::gcd(x.first, x.second))) {
      const std::int64_t d = x.first / k, n = x.second / k;
      if ((n * n) % d == 0) out.emplace_back(k, P{d, n});
    }
    return out;
  };
  m.describe = [](const P& x) { return "(" + std::to_string(x.first) + "," + std::to_string(x.second) + ")"; };
  return m;
}

GSequence<std::int64_t> orbit_restrict_and_unshift(const GSequence<std::int64_t>& f, std::int64_t l) {
  if (l < 1) throw std::domain_error("restriction factor must be positive");
  return GSequence<std::int64_t>(natural_module(), [f, l](const std::int64_t& d) { return mult_op(l, f(l * d)); });
}

}  // namespace mcf
