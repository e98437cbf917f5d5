#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "idealpow/kernels.hpp"
#include "idealpow/monomial.hpp"

namespace idealpow {

/// A monomial ideal given by a finite, nonempty set of generators.
///
/// Generators are kept deduplicated and lexicographically sorted. When
/// is_minimal() is true they form the unique minimal generating set G(I),
/// so two minimal ideals are equal iff their generator lists are.
class MonomialIdeal {
 public:
  /// The ideal generated by `gens`, without removing redundant generators.
  static MonomialIdeal generated_by(std::vector<Monomial> gens);

  std::size_t arity() const noexcept { return arity_; }
  std::span<const Monomial> generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_minimal() const noexcept { return minimal_; }

  /// Representation equality (same generator list and minimality flag).
  /// Use equals() for ideal equality.
  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  friend MonomialIdeal minimalize(std::vector<Monomial> gens, Backend backend);

  MonomialIdeal(std::size_t arity, std::vector<Monomial> gens, bool minimal)
      : arity_(arity), gens_(std::move(gens)), minimal_(minimal) {}

  std::size_t arity_ = 0;
  std::vector<Monomial> gens_;
  bool minimal_ = false;
};

/// Default cap on the number of multisets power_naive will enumerate.
inline constexpr std::uint64_t kDefaultOracleCap = 10'000'000;

/// Keeps exactly the generators not strictly divisible by another one.
/// Throws ParameterError("empty generating set") on empty input.
MonomialIdeal minimalize(std::vector<Monomial> gens, Backend backend = default_backend());
MonomialIdeal minimalize(const MonomialIdeal& ideal, Backend backend = default_backend());

MonomialIdeal product(const MonomialIdeal& lhs, const MonomialIdeal& rhs,
                      Backend backend = default_backend());

/// G(I^i) by repeated multiplication, minimalizing after every step.
MonomialIdeal power(const MonomialIdeal& ideal, int exponent, Backend backend = default_backend());

/// Sizes |G(I)|, |G(I^2)|, ..., |G(I^max_exponent)| computed incrementally.
std::vector<std::size_t> power_sizes(const MonomialIdeal& ideal, int max_exponent,
                                     Backend backend = default_backend());

/// Reference oracle for power(): enumerates every multiset of `exponent`
/// generators, multiplies, and minimalizes once at the end. Throws
/// OracleTooLarge when the number of multisets exceeds `cap`.
MonomialIdeal power_naive(const MonomialIdeal& ideal, int exponent,
                          std::uint64_t cap = kDefaultOracleCap);

/// Number of multisets of size k drawn from n items, saturating at UINT64_MAX.
std::uint64_t multiset_count(std::uint64_t n, std::uint64_t k);

/// I + J: the ideal generated by the union of both generator sets.
MonomialIdeal ideal_sum(const MonomialIdeal& lhs, const MonomialIdeal& rhs);

bool contains_monomial(const MonomialIdeal& ideal, const Monomial& m);

/// True iff rhs is a subset of lhs.
bool contains_ideal(const MonomialIdeal& lhs, const MonomialIdeal& rhs);

bool equals(const MonomialIdeal& lhs, const MonomialIdeal& rhs);

}  // namespace idealpow
