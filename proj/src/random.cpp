#include "idealpow/random.hpp"

#include <algorithm>
#include <numeric>

namespace idealpow::random {
namespace {

template <typename T>
T uniform(Rng& rng, T lo, T hi) {
  return std::uniform_int_distribution<T>(lo, hi)(rng);
}

std::vector<Exponent> distinct_sorted(Rng& rng, std::size_t count, Exponent max_exponent) {
  std::vector<Exponent> pool(static_cast<std::size_t>(max_exponent) + 1);
  std::iota(pool.begin(), pool.end(), Exponent{0});
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

IndexPair random_pair(Rng& rng, std::size_t m) {
  std::size_t i = uniform<std::size_t>(rng, 1, m);
  std::size_t j = uniform<std::size_t>(rng, 1, m);
  if (i > j) std::swap(i, j);
  return {i, j};
}

}  // namespace

MonomialIdeal random_ideal(Rng& rng, const IdealShape& shape) {
  const auto nvars = static_cast<std::size_t>(uniform(rng, 1, shape.max_nvars));
  const int count = uniform(rng, 1, shape.max_gens);
  std::vector<Monomial> gens;
  for (int g = 0; g < count; ++g) {
    std::vector<Exponent> exps(nvars);
    for (auto& e : exps) e = uniform<Exponent>(rng, 0, shape.max_exponent);
    gens.emplace_back(std::move(exps));
  }
  return MonomialIdeal::generated_by(std::move(gens));
}

SortedBivariateIdeal random_sorted_bivariate(Rng& rng, std::size_t min_size, std::size_t max_size,
                                             Exponent max_exponent) {
  const std::size_t m = uniform(rng, min_size, max_size);
  auto a = distinct_sorted(rng, m, max_exponent);
  auto b = distinct_sorted(rng, m, max_exponent);
  std::reverse(a.begin(), a.end());
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < m; ++i) gens.push_back(Monomial{a[i], b[i]});
  return SortedBivariateIdeal(std::move(gens));
}

std::optional<IntervalTriple> random_interval_triple(Rng& rng, const SortedBivariateIdeal& ideal, int attempts) {
  const std::size_t m = ideal.size();
  for (int attempt = 0; attempt < attempts; ++attempt) {
    IndexPair lo = random_pair(rng, m);
    IndexPair hi = random_pair(rng, m);
    if (!index_leq(lo, hi)) continue;

    const Monomial f_lo = pair_product(ideal, lo);
    const Monomial f_hi = pair_product(ideal, hi);
    std::vector<IndexPair> candidates;
    for (std::size_t i = 1; i <= m; ++i) {
      for (std::size_t j = i; j <= m; ++j) {
        const Monomial f = pair_product(ideal, {i, j});
        if (divides(f, f_lo) && divides(f, f_hi)) candidates.push_back({i, j});
      }
    }
    if (candidates.empty()) continue;
    const IndexPair v = candidates[uniform<std::size_t>(rng, 0, candidates.size() - 1)];
    return IntervalTriple{v, lo, hi};
  }
  return std::nullopt;
}

std::vector<Monomial> random_subset(Rng& rng, std::span<const Monomial> items) {
  std::vector<Monomial> out;
  for (const auto& item : items) {
    if (uniform(rng, 0, 1) == 1) out.push_back(item);
  }
  return out;
}

}  // namespace idealpow::random
