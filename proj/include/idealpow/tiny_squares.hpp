#pragma once

// Divisibility conditions on a bivariate ideal <u_1, ..., u_m> that force
// G(I^2) into the nine products
//   {u1^2, u1u2, u2^2} U {u1u_{m-1}, u1u_m, u2u_m} U {u_{m-1}^2, u_{m-1}u_m, u_m^2}.
//
// Indices are 1-based throughout to match the u_i labels.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "idealpow/ideal.hpp"

namespace idealpow {

/// u_1, ..., u_m with a_1 > ... > a_m and b_1 < ... < b_m, m >= 2.
class SortedBivariateIdeal {
 public:
  /// Throws ParameterError unless the sequence is strictly monotone both ways.
  explicit SortedBivariateIdeal(std::vector<Monomial> gens);

  std::size_t size() const noexcept { return gens_.size(); }

  /// u_i for 1 <= i <= m.
  const Monomial& u(std::size_t i) const { return gens_.at(i - 1); }

  std::span<const Monomial> generators() const noexcept { return gens_; }
  MonomialIdeal ideal() const;

  /// The involution (a_i, b_i) -> (b_{m+1-i}, a_{m+1-i}).
  SortedBivariateIdeal mirrored() const;

  friend bool operator==(const SortedBivariateIdeal&, const SortedBivariateIdeal&) = default;

 private:
  std::vector<Monomial> gens_;
};

/// A point (i, j) of V = {(i, j) : 1 <= i <= j <= m}.
struct IndexPair {
  std::size_t i;
  std::size_t j;

  friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

/// Componentwise order on index pairs.
bool index_leq(const IndexPair& lhs, const IndexPair& rhs) noexcept;

/// f(i, j) = u_i u_j.
Monomial pair_product(const SortedBivariateIdeal& ideal, const IndexPair& v);

enum class Scheme { original, improved };

std::string_view scheme_name(Scheme scheme) noexcept;
Scheme parse_scheme(std::string_view name);

struct ConditionReport {
  Scheme scheme;
  std::vector<std::pair<std::string, bool>> flags;  // in the theorem's order
  bool all_hold = false;

  /// Throws std::out_of_range for an unknown name.
  bool flag(std::string_view name) const;
};

enum class Verdict { verified_nine, at_most_nine_with_collisions, conditions_fail };

std::string_view verdict_name(Verdict verdict) noexcept;

struct TinySquareReport {
  ConditionReport conditions;
  std::vector<Monomial> predicted;  // sorted, deduplicated
  MonomialIdeal actual;             // G(I^2)
  Verdict verdict;
};

/// Minimalizes and orders by decreasing x-exponent.
SortedBivariateIdeal normalize(const MonomialIdeal& ideal);

/// Flags A, B, Bstar, C, Cstar. Requires m >= 5.
ConditionReport check_improved(const SortedBivariateIdeal& ideal);

/// Flags 2, 3.1, 3.2, 4.1, 4.2, 5.1, 5.2, 6.1, 6.2. Requires m >= 5.
ConditionReport check_original(const SortedBivariateIdeal& ideal);

ConditionReport check_conditions(const SortedBivariateIdeal& ideal, Scheme scheme);

std::vector<Monomial> predicted_nine(const SortedBivariateIdeal& ideal);

/// Computes G(I^2) and compares it with the nine predicted products.
/// When the chosen scheme's conditions hold, a generator outside the
/// prediction or more than nine generators raises TheoremViolation.
TinySquareReport verify_tiny_square(const SortedBivariateIdeal& ideal, Scheme scheme = Scheme::improved,
                                    Backend backend = default_backend());

/// The m = tl + 4 generator ideal with x-exponents
/// kl, (k-t)l, (k-t)l - 1, ..., (k-2t)l, tl, 0 and y-exponents reversed.
SortedBivariateIdeal family_ideal(long l, long k, long t);

/// Reflection of (i, j) about the line i + j = m + 1.
IndexPair dual_index(const IndexPair& v, std::size_t m);

/// Checks the implications (2 & 4.2 => 5.2), (2 & 4.1 => 5.1) and
/// (2 & 6.1 => 3.1) on the given ideal.
bool redundancy_check(const SortedBivariateIdeal& ideal);

/// Whether v is in V for an ideal with m generators.
bool in_index_set(const IndexPair& v, std::size_t m) noexcept;

/// For v, v1 <= v2 in V with f(v) | f(v1) and f(v) | f(v2), checks that f(v)
/// divides f(v') for every v' in V between v1 and v2. Precondition failures
/// throw PreconditionError.
bool interval_divisibility_holds(const SortedBivariateIdeal& ideal, const IndexPair& v, const IndexPair& v1,
                                 const IndexPair& v2);

}  // namespace idealpow
