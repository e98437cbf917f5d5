#include "idealpow/cli/report_json.hpp"

namespace idealpow::cli {

json to_json(const Monomial& m) {
  const auto exps = m.exponents();
  return json(std::vector<Exponent>(exps.begin(), exps.end()));
}

json to_json(std::span<const Monomial> ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(to_json(m));
  return out;
}

json to_json(const ConstructionReport& report) {
  return json{
      {"nvars", report.nvars},
      {"depth", report.depth},
      {"t", report.scale},
      {"capacity", report.capacity},
      {"skeleton", to_json(report.skeleton.generators())},
      {"added", to_json(std::span<const Monomial>(report.added))},
      {"sizes", report.sizes},
      {"verified", report.verified},
  };
}

json to_json(const ConditionReport& report) {
  json flags = json::object();
  for (const auto& [name, value] : report.flags) flags[name] = value;
  return flags;
}

json to_json(const TinySquareReport& report) {
  return json{
      {"scheme", std::string(scheme_name(report.conditions.scheme))},
      {"flags", to_json(report.conditions)},
      {"predicted", to_json(std::span<const Monomial>(report.predicted))},
      {"actual", to_json(report.actual.generators())},
      {"verdict", std::string(verdict_name(report.verdict))},
  };
}

}  // namespace idealpow::cli
