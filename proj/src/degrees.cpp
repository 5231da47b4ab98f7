#include "mcf/degrees.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mcf {

void RamificationProfile::validate() const {
  if (a < 1) throw std::domain_error("degree a must be positive");
  if (w.size() < 2) throw std::domain_error("profile needs at least two ends");
  std::int64_t sum = 0;
  for (std::int64_t x : w) {
    if (x == 0) throw std::domain_error("end weights must be nonzero");
    sum += x;
  }
  if (sum != 0) throw std::domain_error("end weights must sum to zero");
}

std::int64_t RamificationProfile::norm() const {
  std::int64_t g = 0;
  for (std::int64_t x : w) g = std::gcd(g, x);
  return g;
}

std::string RamificationProfile::to_string() const {
  std::string out = "(" + std::to_string(a) + ";";
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + std::to_string(w[i]);
  return out + ")";
}

void DiagramDegree::validate() const {
  if (norm < 1 || a < 1) throw std::domain_error("diagram degree entries must be positive");
}

std::string DiagramDegree::to_string() const { return "(" + std::to_string(norm) + "," + std::to_string(a) + ")"; }

NStarModule<RamificationProfile> ramification_module() {
  NStarModule<RamificationProfile> m;
  m.name = "R";
  m.act = [](std::int64_t k, const RamificationProfile& x) {
    RamificationProfile y = x;
    y.a *= k;
    for (auto& v : y.w) v *= k;
    return y;
  };
  m.norm = [](const RamificationProfile& x) { return x.norm(); };
  m.divisors = [](const RamificationProfile& x) {
    std::vector<std::pair<std::int64_t, RamificationProfile>> out;
    for (std::int64_t k : divisors(std::gcd(x.a, x.norm()))) {
      RamificationProfile y = x;
      y.a /= k;
      for (auto& v : y.w) v /= k;
      out.emplace_back(k, y);
    }
    return out;
  };
  m.describe = [](const RamificationProfile& x) { return x.to_string(); };
  return m;
}

NStarModule<DiagramDegree> degree_module() {
  NStarModule<DiagramDegree> m;
  m.name = "B";
  m.act = [](std::int64_t k, const DiagramDegree& x) { return DiagramDegree{k * x.norm, k * x.a}; };
  m.norm = [](const DiagramDegree& x) { return x.norm; };
  m.divisors = [](const DiagramDegree& x) {
    std::vector<std::pair<std::int64_t, DiagramDegree>> out;
    for (std::int64_t k : divisors(std::gcd(x.norm, x.a))) out.emplace_back(k, DiagramDegree{x.norm / k, x.a / k});
    return out;
  };
  m.describe = [](const DiagramDegree& x) { return x.to_string(); };
  return m;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer list: " + text);
    }
    if (used != item.size()) throw std::invalid_argument("not an integer list: " + text);
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

}  // namespace mcf
