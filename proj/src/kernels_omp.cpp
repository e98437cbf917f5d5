#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <numeric>

#include "idealpow/kernels.hpp"

namespace idealpow {

bool openmp_enabled() noexcept {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

Backend default_backend() noexcept { return openmp_enabled() ? Backend::openmp : Backend::serial; }

namespace kernels {
namespace {

// divides() throws on mismatched arity, which must not happen inside a
// parallel region.
void require_arity(std::span<const Monomial> v, std::size_t arity) {
  for (const auto& m : v) {
    if (m.arity() != arity) throw ArityError();
  }
}

}  // namespace

std::vector<Monomial> minimal_elements_omp(std::vector<Monomial> gens) {
  if (!gens.empty()) require_arity(gens, gens.front().arity());
  sort_unique(gens);
  const auto count = static_cast<std::int64_t>(gens.size());

  std::vector<Exponent> degree(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) degree[i] = gens[i].degree();

  std::vector<std::size_t> order(gens.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return degree[a] < degree[b]; });

  // lower[k]: number of candidates of degree strictly below that of order[k].
  std::vector<std::size_t> lower(gens.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    lower[k] = (k > 0 && degree[order[k]] == degree[order[k - 1]]) ? lower[k - 1] : k;
  }

  std::vector<char> redundant(gens.size(), 0);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t k = 0; k < count; ++k) {
    const Monomial& m = gens[order[k]];
    for (std::size_t j = 0; j < lower[k]; ++j) {
      if (divides(gens[order[j]], m)) {
        redundant[order[k]] = 1;
        break;
      }
    }
  }

  std::vector<Monomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!redundant[i]) out.push_back(std::move(gens[i]));
  }
  // gens was lexicographically sorted, so out already is.
  return out;
}

std::vector<Monomial> pairwise_products_omp(std::span<const Monomial> lhs,
                                            std::span<const Monomial> rhs) {
  const auto rows = static_cast<std::int64_t>(lhs.size());
  const std::size_t cols = rhs.size();
  std::vector<Monomial> out(lhs.size() * cols);
  std::atomic<bool> overflow{false};

  if (!lhs.empty()) {
    require_arity(lhs, lhs.front().arity());
    require_arity(rhs, lhs.front().arity());
  }

#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (!try_multiply(lhs[i], rhs[j], out[i * cols + j])) {
        overflow.store(true, std::memory_order_relaxed);
      }
    }
  }
  if (overflow.load()) throw OverflowError("exponent overflow in monomial product");

  sort_unique(out);
  return out;
}

}  // namespace kernels
}  // namespace idealpow
