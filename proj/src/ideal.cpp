#include "idealpow/ideal.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_set>

namespace idealpow {
namespace {

std::size_t uniform_arity(std::span<const Monomial> gens) {
  if (gens.empty()) throw ParameterError("empty generating set");
  const std::size_t arity = gens.front().arity();
  for (const auto& g : gens) {
    if (g.arity() != arity) throw ArityError();
  }
  return arity;
}

void require_same_arity(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.arity() != b.arity()) throw ArityError();
}

std::vector<Monomial> to_vector(std::span<const Monomial> s) { return {s.begin(), s.end()}; }

}  // namespace

MonomialIdeal MonomialIdeal::generated_by(std::vector<Monomial> gens) {
  const std::size_t arity = uniform_arity(gens);
  kernels::sort_unique(gens);
  return MonomialIdeal(arity, std::move(gens), false);
}

MonomialIdeal minimalize(std::vector<Monomial> gens, Backend backend) {
  const std::size_t arity = uniform_arity(gens);
  auto kept = backend == Backend::openmp ? kernels::minimal_elements_omp(std::move(gens))
                                         : kernels::minimal_elements_serial(std::move(gens));
  return MonomialIdeal(arity, std::move(kept), true);
}

MonomialIdeal minimalize(const MonomialIdeal& ideal, Backend backend) {
  if (ideal.is_minimal()) return ideal;
  return minimalize(to_vector(ideal.generators()), backend);
}

MonomialIdeal product(const MonomialIdeal& lhs, const MonomialIdeal& rhs, Backend backend) {
  require_same_arity(lhs, rhs);
  auto products = backend == Backend::openmp
                      ? kernels::pairwise_products_omp(lhs.generators(), rhs.generators())
                      : kernels::pairwise_products_serial(lhs.generators(), rhs.generators());
  return minimalize(std::move(products), backend);
}

MonomialIdeal power(const MonomialIdeal& ideal, int exponent, Backend backend) {
  if (exponent < 1) throw ParameterError("power exponent must be at least 1");
  const MonomialIdeal base = minimalize(ideal, backend);
  MonomialIdeal acc = base;
  for (int i = 2; i <= exponent; ++i) acc = product(acc, base, backend);
  return acc;
}

std::vector<std::size_t> power_sizes(const MonomialIdeal& ideal, int max_exponent, Backend backend) {
  if (max_exponent < 1) throw ParameterError("power exponent must be at least 1");
  const MonomialIdeal base = minimalize(ideal, backend);
  std::vector<std::size_t> sizes{base.size()};
  MonomialIdeal acc = base;
  for (int i = 2; i <= max_exponent; ++i) {
    acc = product(acc, base, backend);
    sizes.push_back(acc.size());
  }
  return sizes;
}

std::uint64_t multiset_count(std::uint64_t n, std::uint64_t k) {
  // C(n + k - 1, k), built as a running product of exact binomials.
  if (k == 0) return 1;
  if (n == 0) return 0;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  unsigned __int128 acc = 1;
  for (std::uint64_t j = 1; j <= k; ++j) {
    acc = acc * (n - 1 + j) / j;
    if (acc > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(acc);
}

MonomialIdeal power_naive(const MonomialIdeal& ideal, int exponent, std::uint64_t cap) {
  if (exponent < 1) throw ParameterError("power exponent must be at least 1");
  const auto gens = ideal.generators();
  const std::uint64_t total = multiset_count(gens.size(), static_cast<std::uint64_t>(exponent));
  if (total > cap) {
    throw OracleTooLarge("oracle too large: " + std::to_string(total) + " products exceed cap " +
                         std::to_string(cap));
  }

  // Nondecreasing index tuples enumerate each multiset exactly once;
  // prefix[k] caches the product of the first k+1 chosen generators.
  const auto k = static_cast<std::size_t>(exponent);
  std::vector<std::size_t> idx(k, 0);
  std::vector<Monomial> prefix(k);
  std::unordered_set<Monomial, MonomialHash> seen;

  std::size_t dirty = 0;
  while (true) {
    for (std::size_t p = dirty; p < k; ++p) {
      prefix[p] = p == 0 ? gens[idx[0]] : multiply(prefix[p - 1], gens[idx[p]]);
    }
    seen.insert(prefix[k - 1]);

    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] + 1 == gens.size()) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t p = pos; p < k; ++p) idx[p] = idx[pos - 1];
    dirty = pos - 1;
  }

  return minimalize(std::vector<Monomial>(seen.begin(), seen.end()), Backend::serial);
}

MonomialIdeal ideal_sum(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
  require_same_arity(lhs, rhs);
  auto gens = to_vector(lhs.generators());
  gens.insert(gens.end(), rhs.generators().begin(), rhs.generators().end());
  return MonomialIdeal::generated_by(std::move(gens));
}

bool contains_monomial(const MonomialIdeal& ideal, const Monomial& m) {
  if (ideal.arity() != m.arity()) throw ArityError();
  const auto gens = ideal.generators();
  return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return divides(g, m); });
}

bool contains_ideal(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
  require_same_arity(lhs, rhs);
  const auto gens = rhs.generators();
  return std::all_of(gens.begin(), gens.end(),
                     [&](const Monomial& g) { return contains_monomial(lhs, g); });
}

bool equals(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
  require_same_arity(lhs, rhs);
  const auto a = minimalize(lhs);
  const auto b = minimalize(rhs);
  return std::ranges::equal(a.generators(), b.generators());
}

}  // namespace idealpow
