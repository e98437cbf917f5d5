#pragma once

#include <span>

#include <json.hpp>

#include "idealpow/construction.hpp"
#include "idealpow/tiny_squares.hpp"

namespace idealpow::cli {

using json = nlohmann::json;

json to_json(const Monomial& m);
json to_json(std::span<const Monomial> ms);

/// Keys: nvars, depth, t, capacity, skeleton, added, sizes, verified.
json to_json(const ConstructionReport& report);

/// Keys: scheme, flags, predicted, actual, verdict.
json to_json(const TinySquareReport& report);

json to_json(const ConditionReport& report);

}  // namespace idealpow::cli
