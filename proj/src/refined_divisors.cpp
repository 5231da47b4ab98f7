#include "mcf/refined_divisors.hpp"

#include <numeric>
#include <stdexcept>

namespace mcf {

TBasis refined_sigma_t_basis(unsigned m, std::int64_t delta, std::int64_t a) {
  if (delta < 1 || a < 1) throw std::domain_error("refined_sigma requires delta, a >= 1");
  TBasis out;
  for (std::int64_t k : divisors(a)) out[delta / std::gcd(delta, k)] += Rational(ipow(a / k, m));
  return out;
}

GroupElement refined_sigma(unsigned m, std::int64_t delta, std::int64_t a) {
  return from_t_basis(refined_sigma_t_basis(m, delta, a));
}

}  // namespace mcf
