#pragma once

// Enumeration kernels behind the ideal operations. Each kernel exists in a
// serial reference form and an OpenMP form; both return the same canonical
// (lexicographically sorted, duplicate-free) vector for every input and
// every thread count.

#include <span>
#include <vector>

#include "idealpow/monomial.hpp"

namespace idealpow {

enum class Backend { serial, openmp };

/// openmp when the library was built with OpenMP, serial otherwise.
Backend default_backend() noexcept;

/// Whether the OpenMP kernels were compiled with OpenMP enabled.
bool openmp_enabled() noexcept;

namespace kernels {

/// The elements of `gens` not divisible by a different element of `gens`.
/// Scans each candidate only against retained elements of smaller degree.
std::vector<Monomial> minimal_elements_serial(std::vector<Monomial> gens);

/// Same result as the serial kernel. Candidates are tested independently
/// against every element of strictly smaller degree.
std::vector<Monomial> minimal_elements_omp(std::vector<Monomial> gens);

/// Every product g*h with g in lhs and h in rhs, deduplicated and sorted.
/// Throws OverflowError if any exponent overflows.
std::vector<Monomial> pairwise_products_serial(std::span<const Monomial> lhs,
                                               std::span<const Monomial> rhs);

std::vector<Monomial> pairwise_products_omp(std::span<const Monomial> lhs,
                                            std::span<const Monomial> rhs);

// Shared helper: sort lexicographically and drop duplicates.
void sort_unique(std::vector<Monomial>& v);

}  // namespace kernels
}  // namespace idealpow
