#include "idealpow/construction.hpp"

#include <algorithm>
#include <string>

namespace idealpow {
namespace {

void require_nvars(int nvars, int min = 2) {
  if (nvars < min) throw ParameterError("nvars must be at least " + std::to_string(min));
}

void require_scale(int scale) {
  if (scale < 1) throw ParameterError("t must be at least 1");
}

void require_depth(int depth) {
  if (depth < 2) throw ParameterError("depth must be at least 2");
}

Exponent checked_mul(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("exponent overflow");
  return out;
}

void compositions(int nvars, Exponent lo, Exponent hi, Exponent remaining, std::vector<Exponent>& prefix,
                  std::vector<Monomial>& out) {
  const auto left = static_cast<Exponent>(nvars) - static_cast<Exponent>(prefix.size());
  if (left == 0) {
    if (remaining == 0) out.emplace_back(prefix);
    return;
  }
  // The coordinates after this one must absorb the rest of the sum.
  const Exponent rest = left - 1;
  const Exponent from = std::max(lo, remaining - rest * hi);
  const Exponent to = std::min(hi, remaining - rest * lo);
  for (Exponent e = from; e <= to; ++e) {
    prefix.push_back(e);
    compositions(nvars, lo, hi, remaining - e, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

SkeletonParams::SkeletonParams(int n, int t) : nvars(n), scale(t) {
  require_nvars(n);
  require_scale(t);
}

MonomialIdeal skeleton(const SkeletonParams& params) {
  const auto n = static_cast<std::size_t>(params.nvars);
  const Exponent t = params.scale;
  const Exponent t4 = checked_mul(t, 4);
  const Exponent t3 = checked_mul(t, 3);

  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Exponent> pure(n, 0);
    pure[i] = t4;
    gens.emplace_back(std::move(pure));

    std::vector<Exponent> mixed(n, t);
    mixed[i] = t3;
    gens.emplace_back(std::move(mixed));
  }
  auto ideal = minimalize(gens, Backend::serial);
  if (ideal.size() != 2 * n) throw TheoremViolation("skeleton generators are not an antichain");
  return ideal;
}

MonomialIdeal skeleton(int nvars, int scale) { return skeleton(SkeletonParams(nvars, scale)); }

Monomial mu_squared(int nvars, int scale) {
  require_nvars(nvars);
  require_scale(scale);
  return Monomial(std::vector<Exponent>(static_cast<std::size_t>(nvars), checked_mul(scale, 2)));
}

std::size_t capacity(int nvars, int depth, Backend backend) {
  require_nvars(nvars);
  require_depth(depth);
  const auto sizes = power_sizes(skeleton(nvars, 1), depth, backend);
  return *std::max_element(sizes.begin(), sizes.end());
}

std::uint64_t cross_section_count(int nvars, int scale) {
  require_nvars(nvars, 1);
  require_scale(scale);
  const auto t = static_cast<std::size_t>(scale);

  std::vector<std::uint64_t> coeffs{1};
  for (int k = 0; k < nvars; ++k) {
    std::vector<std::uint64_t> next(coeffs.size() + t - 1, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      for (std::size_t j = 0; j < t; ++j) {
        if (__builtin_add_overflow(next[i + j], coeffs[i], &next[i + j]))
          throw OverflowError("cross-section count overflows 64 bits");
      }
    }
    coeffs = std::move(next);
  }
  const std::size_t central = static_cast<std::size_t>(nvars) * (t - 1) / 2;
  return coeffs[central];
}

int choose_t(int nvars, std::uint64_t required) {
  require_nvars(nvars);
  if (required < 1) throw ParameterError("required count must be at least 1");
  std::uint64_t previous = 0;
  for (int t = 1;; ++t) {
    const std::uint64_t count = cross_section_count(nvars, t);
    if (count < previous) {
      throw TheoremViolation("central coefficient decreased at t = " + std::to_string(t));
    }
    if (count >= required) return t;
    previous = count;
  }
}

std::vector<Monomial> cross_section_monomials(int nvars, int scale) {
  require_nvars(nvars);
  require_scale(scale);
  const Exponent t = scale;
  const Exponent target = checked_mul(nvars, checked_mul(5, t) - 1) / 2;

  std::vector<Monomial> out;
  std::vector<Exponent> prefix;
  prefix.reserve(static_cast<std::size_t>(nvars));
  compositions(nvars, 2 * t, 3 * t - 1, target, prefix, out);
  return out;
}

bool q_box_membership(int nvars, int scale, const Monomial& m) {
  require_nvars(nvars);
  require_scale(scale);
  if (m.arity() != static_cast<std::size_t>(nvars)) throw ArityError();
  const auto exps = m.exponents();
  const Exponent t = scale;
  return std::all_of(exps.begin(), exps.end(), [t](Exponent e) { return e >= 2 * t && e <= 3 * t - 1; });
}

bool verify_absorption(int nvars, int scale, std::span<const Monomial> subset, int exponent,
                       Backend backend) {
  if (exponent < 2) throw ParameterError("absorption requires exponent >= 2");
  const auto base = skeleton(nvars, scale);
  const auto q = mu_squared(nvars, scale);
  for (const auto& m : subset) {
    if (m.arity() != base.arity()) throw ArityError();
    if (!divides(q, m)) throw PreconditionError("subset element " + to_string(m) + " is not in <mu^2>");
  }
  if (subset.empty()) return true;

  const auto enlarged = ideal_sum(base, MonomialIdeal::generated_by({subset.begin(), subset.end()}));
  return equals(power(enlarged, exponent, backend), power(base, exponent, backend));
}

ConstructionReport construct(int nvars, int depth, std::optional<int> scale_override, Backend backend) {
  require_nvars(nvars);
  require_depth(depth);

  const std::size_t cap = capacity(nvars, depth, backend);
  const std::uint64_t required = cap - 2 * static_cast<std::size_t>(nvars) + 1;

  int t;
  if (scale_override) {
    require_scale(*scale_override);
    const std::uint64_t have = cross_section_count(nvars, *scale_override);
    if (have < required) {
      throw ParameterError("t = " + std::to_string(*scale_override) + " gives " + std::to_string(have) +
                           " cross-section monomials, need at least " + std::to_string(required));
    }
    t = *scale_override;
  } else {
    t = choose_t(nvars, required);
  }

  auto base = skeleton(nvars, t);
  auto added = cross_section_monomials(nvars, t);

  std::vector<Monomial> all(base.generators().begin(), base.generators().end());
  all.insert(all.end(), added.begin(), added.end());
  const std::size_t union_size = all.size();
  auto ideal = minimalize(std::move(all), backend);
  if (ideal.size() != union_size) {
    throw TheoremViolation("skeleton plus cross-section is not an antichain");
  }

  std::vector<std::size_t> sizes{ideal.size()};
  bool verified = true;
  MonomialIdeal ideal_power = ideal;
  MonomialIdeal base_power = base;
  for (int i = 2; i <= depth; ++i) {
    ideal_power = product(ideal_power, ideal, backend);
    base_power = product(base_power, base, backend);
    sizes.push_back(ideal_power.size());
    verified = verified && ideal.size() > ideal_power.size() && equals(ideal_power, base_power);
  }

  return ConstructionReport{
      .nvars = nvars,
      .depth = depth,
      .scale = t,
      .capacity = cap,
      .skeleton = std::move(base),
      .added = std::move(added),
      .ideal = std::move(ideal),
      .sizes = std::move(sizes),
      .verified = verified,
  };
}

}  // namespace idealpow
