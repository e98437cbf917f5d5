#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "idealpow/errors.hpp"

namespace idealpow {

using Exponent = std::int64_t;

/// A monomial x1^e1 * ... * xn^en, stored as its exponent vector.
///
/// The arity is fixed at construction and every exponent is nonnegative.
/// Values compare lexicographically by exponent vector, which is the
/// canonical order used for generator lists.
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::initializer_list<Exponent> exps);
  explicit Monomial(std::vector<Exponent> exps);

  /// The monomial 1 in `arity` variables.
  static Monomial one(std::size_t arity);

  std::size_t arity() const noexcept { return exps_.size(); }
  std::span<const Exponent> exponents() const noexcept { return exps_; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }

  /// Sum of exponents. Throws OverflowError if it does not fit.
  Exponent degree() const;

  /// Exchanges the exponents of x and y; arity must be 2.
  Monomial swapped() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.exps_ <=> b.exps_;
  }

 private:
  void validate() const;

  std::vector<Exponent> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// True iff a divides b, i.e. a[i] <= b[i] for every i.
bool divides(const Monomial& a, const Monomial& b);

/// Exponent-wise sum; throws OverflowError instead of wrapping.
Monomial multiply(const Monomial& a, const Monomial& b);

/// Non-throwing multiply for use inside parallel regions. Returns false on
/// overflow and leaves `out` unspecified.
bool try_multiply(const Monomial& a, const Monomial& b, Monomial& out);

/// Human-readable form such as "x^3*y^5" or "1". Variables are named
/// x, y, z, w, then x5, x6, ...
std::string to_string(const Monomial& m);

std::string variable_name(std::size_t index);

}  // namespace idealpow
