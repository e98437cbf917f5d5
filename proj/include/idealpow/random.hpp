#pragma once

// Seeded generators for the randomized property suites.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "idealpow/ideal.hpp"
#include "idealpow/tiny_squares.hpp"

namespace idealpow::random {

using Rng = std::mt19937_64;

struct IdealShape {
  int max_nvars = 3;
  int max_gens = 6;
  Exponent max_exponent = 8;
};

/// A generating set (possibly non-minimal) with 1..max_gens generators.
MonomialIdeal random_ideal(Rng& rng, const IdealShape& shape = {});

/// m uniform in [min_size, max_size], exponents in [0, max_exponent].
SortedBivariateIdeal random_sorted_bivariate(Rng& rng, std::size_t min_size = 5, std::size_t max_size = 9,
                                             Exponent max_exponent = 40);

struct IntervalTriple {
  IndexPair v;
  IndexPair lo;
  IndexPair hi;
};

/// A triple satisfying the interval lemma's preconditions, or nullopt if
/// none was found within `attempts` draws.
std::optional<IntervalTriple> random_interval_triple(Rng& rng, const SortedBivariateIdeal& ideal,
                                                     int attempts = 64);

/// Each element kept independently with probability 1/2.
std::vector<Monomial> random_subset(Rng& rng, std::span<const Monomial> items);

}  // namespace idealpow::random
