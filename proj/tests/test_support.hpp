#pragma once

#include <vector>

#include "idealpow/ideal.hpp"
#include "oracle.hpp"

namespace test {

inline idealpow::MonomialIdeal ideal_of(std::vector<std::vector<idealpow::Exponent>> gens) {
  std::vector<idealpow::Monomial> ms;
  for (auto& g : gens) ms.emplace_back(std::move(g));
  return idealpow::MonomialIdeal::generated_by(std::move(ms));
}

inline std::vector<oracle::Exps> exps_of(const idealpow::MonomialIdeal& ideal) {
  std::vector<oracle::Exps> out;
  for (const auto& g : ideal.generators()) out.emplace_back(g.exponents().begin(), g.exponents().end());
  return out;
}

inline std::vector<oracle::Exps> exps_of(const std::vector<idealpow::Monomial>& ms) {
  std::vector<oracle::Exps> out;
  for (const auto& g : ms) out.emplace_back(g.exponents().begin(), g.exponents().end());
  return out;
}

}  // namespace test
