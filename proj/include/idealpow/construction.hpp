#pragma once

// Ideals whose low powers have fewer minimal generators than the ideal.
//
// The skeleton J = <x_i^{4t}, x_i^{2t} mu> (mu = x_1^t...x_n^t) is enlarged by
// the monomials of a central cross-section of the box [2t, 3t-1]^n. Those
// monomials lie in <mu^2> \ J, so they are absorbed by every power J^i with
// i >= 2, while they raise |G(I)| above max_{i<=d} |G(J^i)|.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "idealpow/ideal.hpp"

namespace idealpow {

struct SkeletonParams {
  int nvars;
  int scale;  // t

  SkeletonParams(int nvars, int scale);
};

struct ConstructionReport {
  int nvars = 0;
  int depth = 0;
  int scale = 0;                   // t
  std::size_t capacity = 0;        // A(n, d)
  MonomialIdeal skeleton;          // J
  std::vector<Monomial> added;     // cross-section monomials
  MonomialIdeal ideal;             // I
  std::vector<std::size_t> sizes;  // sizes[i-1] = |G(I^i)|, i = 1..depth
  bool verified = false;
};

MonomialIdeal skeleton(int nvars, int scale);
MonomialIdeal skeleton(const SkeletonParams& params);

/// The generator mu^2 = (x_1 ... x_n)^{2t} of Q.
Monomial mu_squared(int nvars, int scale);

/// max_{1<=i<=depth} |G(J^i)| for the skeleton at t = 1.
std::size_t capacity(int nvars, int depth, Backend backend = default_backend());

/// Central coefficient of (1 + x + ... + x^{t-1})^n, i.e. the coefficient of
/// x^{floor(n(t-1)/2)}, by exact integer convolution.
std::uint64_t cross_section_count(int nvars, int scale);

/// Smallest t >= 1 with cross_section_count(nvars, t) >= required.
int choose_t(int nvars, std::uint64_t required);

/// All exponent vectors in [2t, 3t-1]^n with coordinate sum floor(n(5t-1)/2),
/// lexicographically sorted.
std::vector<Monomial> cross_section_monomials(int nvars, int scale);

/// Whether every exponent of m lies in [2t, 3t-1] (the closed form of Q \ J).
bool q_box_membership(int nvars, int scale, const Monomial& m);

/// Checks (J + <subset>)^i == J^i. Every element of subset must be a
/// multiple of mu^2, otherwise PreconditionError.
bool verify_absorption(int nvars, int scale, std::span<const Monomial> subset, int exponent,
                       Backend backend = default_backend());

/// Runs the whole pipeline. With no override, t = choose_t(n, A - 2n + 1).
ConstructionReport construct(int nvars, int depth, std::optional<int> scale_override = std::nullopt,
                             Backend backend = default_backend());

}  // namespace idealpow
