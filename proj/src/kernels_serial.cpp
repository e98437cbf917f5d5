#include <algorithm>
#include <utility>

#include "idealpow/kernels.hpp"

namespace idealpow::kernels {

void sort_unique(std::vector<Monomial>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<Monomial> minimal_elements_serial(std::vector<Monomial> gens) {
  sort_unique(gens);

  std::vector<std::pair<Exponent, Monomial>> by_degree;
  by_degree.reserve(gens.size());
  for (auto& g : gens) {
    Exponent deg = g.degree();
    by_degree.emplace_back(deg, std::move(g));
  }
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  // A strict divisor of m has strictly smaller degree, and every divisor of
  // m is divisible by some retained element, so retained elements suffice.
  std::vector<std::pair<Exponent, Monomial>> kept;
  for (auto& [deg, m] : by_degree) {
    bool redundant = false;
    for (const auto& [kdeg, k] : kept) {
      if (kdeg >= deg) break;
      if (divides(k, m)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.emplace_back(deg, std::move(m));
  }

  std::vector<Monomial> out;
  out.reserve(kept.size());
  for (auto& [deg, m] : kept) out.push_back(std::move(m));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> pairwise_products_serial(std::span<const Monomial> lhs,
                                               std::span<const Monomial> rhs) {
  std::vector<Monomial> out;
  out.reserve(lhs.size() * rhs.size());
  for (const auto& g : lhs) {
    for (const auto& h : rhs) out.push_back(multiply(g, h));
  }
  sort_unique(out);
  return out;
}

}  // namespace idealpow::kernels
