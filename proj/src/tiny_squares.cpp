#include "idealpow/tiny_squares.hpp"

#include <algorithm>
#include <stdexcept>

namespace idealpow {
namespace {

void require_theorem_size(const SortedBivariateIdeal& ideal) {
  if (ideal.size() < 5) throw ParameterError("theorem requires m >= 5");
}

// Whether u_p u_q divides u_r u_s.
bool product_divides(const SortedBivariateIdeal& I, std::size_t p, std::size_t q, std::size_t r,
                     std::size_t s) {
  return divides(multiply(I.u(p), I.u(q)), multiply(I.u(r), I.u(s)));
}

ConditionReport make_report(Scheme scheme, std::vector<std::pair<std::string, bool>> flags) {
  const bool all = std::all_of(flags.begin(), flags.end(), [](const auto& f) { return f.second; });
  return ConditionReport{scheme, std::move(flags), all};
}

}  // namespace

SortedBivariateIdeal::SortedBivariateIdeal(std::vector<Monomial> gens) : gens_(std::move(gens)) {
  if (gens_.size() < 2) throw ParameterError("a sorted bivariate ideal needs at least 2 generators");
  for (const auto& g : gens_) {
    if (g.arity() != 2) throw ArityError("sorted bivariate ideal requires arity 2");
  }
  for (std::size_t i = 1; i < gens_.size(); ++i) {
    if (!(gens_[i - 1][0] > gens_[i][0] && gens_[i - 1][1] < gens_[i][1])) {
      throw ParameterError("generators must have strictly decreasing x- and increasing y-exponents");
    }
  }
}

MonomialIdeal SortedBivariateIdeal::ideal() const { return minimalize({gens_.begin(), gens_.end()}); }

SortedBivariateIdeal SortedBivariateIdeal::mirrored() const {
  std::vector<Monomial> out;
  out.reserve(gens_.size());
  for (auto it = gens_.rbegin(); it != gens_.rend(); ++it) out.push_back(it->swapped());
  return SortedBivariateIdeal(std::move(out));
}

bool index_leq(const IndexPair& lhs, const IndexPair& rhs) noexcept {
  return lhs.i <= rhs.i && lhs.j <= rhs.j;
}

bool in_index_set(const IndexPair& v, std::size_t m) noexcept {
  return v.i >= 1 && v.i <= v.j && v.j <= m;
}

Monomial pair_product(const SortedBivariateIdeal& ideal, const IndexPair& v) {
  if (!in_index_set(v, ideal.size())) throw ParameterError("index pair outside V");
  return multiply(ideal.u(v.i), ideal.u(v.j));
}

std::string_view scheme_name(Scheme scheme) noexcept {
  return scheme == Scheme::original ? "original" : "improved";
}

Scheme parse_scheme(std::string_view name) {
  if (name == "original") return Scheme::original;
  if (name == "improved") return Scheme::improved;
  throw ParameterError("unknown scheme '" + std::string(name) + "'");
}

bool ConditionReport::flag(std::string_view name) const {
  for (const auto& [key, value] : flags) {
    if (key == name) return value;
  }
  throw std::out_of_range("no condition named " + std::string(name));
}

std::string_view verdict_name(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::verified_nine:
      return "verified-nine";
    case Verdict::at_most_nine_with_collisions:
      return "at-most-nine-with-collisions";
    case Verdict::conditions_fail:
      return "conditions-fail";
  }
  return "unknown";
}

SortedBivariateIdeal normalize(const MonomialIdeal& ideal) {
  if (ideal.arity() != 2) throw ArityError("normalize requires arity 2");
  const auto minimal = minimalize(ideal);
  std::vector<Monomial> gens(minimal.generators().begin(), minimal.generators().end());
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a[0] > b[0]; });
  return SortedBivariateIdeal(std::move(gens));
}

ConditionReport check_improved(const SortedBivariateIdeal& I) {
  require_theorem_size(I);
  const std::size_t m = I.size();
  return make_report(Scheme::improved, {
                                           {"A", product_divides(I, 1, m, 2, m - 1)},
                                           {"B", product_divides(I, 2, 2, 1, 3)},
                                           {"Bstar", product_divides(I, m - 1, m - 1, m - 2, m)},
                                           {"C", product_divides(I, 2, 2, 1, m - 2)},
                                           {"Cstar", product_divides(I, m - 1, m - 1, 3, m)},
                                       });
}

ConditionReport check_original(const SortedBivariateIdeal& I) {
  require_theorem_size(I);
  const std::size_t m = I.size();
  return make_report(Scheme::original, {
                                           {"2", product_divides(I, 1, m, 2, m - 1)},
                                           {"3.1", product_divides(I, 1, m - 1, 2, 3)},
                                           {"3.2", product_divides(I, 1, m - 1, m - 2, m - 2)},
                                           {"4.1", product_divides(I, 2, 2, 1, 3)},
                                           {"4.2", product_divides(I, 2, 2, 1, m - 2)},
                                           {"5.1", product_divides(I, 2, m, 3, m - 1)},
                                           {"5.2", product_divides(I, 2, m, m - 2, m - 1)},
                                           {"6.1", product_divides(I, m - 1, m - 1, 3, m)},
                                           {"6.2", product_divides(I, m - 1, m - 1, m - 2, m)},
                                       });
}

ConditionReport check_conditions(const SortedBivariateIdeal& ideal, Scheme scheme) {
  return scheme == Scheme::original ? check_original(ideal) : check_improved(ideal);
}

std::vector<Monomial> predicted_nine(const SortedBivariateIdeal& I) {
  require_theorem_size(I);
  const std::size_t m = I.size();
  const IndexPair pairs[] = {{1, 1},     {1, 2},     {2, 2},         {1, m - 1}, {1, m},
                             {2, m},     {m - 1, m - 1}, {m - 1, m}, {m, m}};
  std::vector<Monomial> out;
  for (const auto& v : pairs) out.push_back(pair_product(I, v));
  kernels::sort_unique(out);
  return out;
}

TinySquareReport verify_tiny_square(const SortedBivariateIdeal& ideal, Scheme scheme, Backend backend) {
  auto conditions = check_conditions(ideal, scheme);
  auto predicted = predicted_nine(ideal);
  auto actual = power(ideal.ideal(), 2, backend);

  if (!conditions.all_hold) {
    return TinySquareReport{std::move(conditions), std::move(predicted), std::move(actual),
                            Verdict::conditions_fail};
  }

  for (const auto& g : actual.generators()) {
    if (!std::binary_search(predicted.begin(), predicted.end(), g)) {
      throw TheoremViolation("generator " + to_string(g) + " of I^2 is not among the nine predicted products");
    }
  }
  if (actual.size() > 9) throw TheoremViolation("I^2 has more than nine minimal generators");

  const Verdict verdict = actual.size() == 9 ? Verdict::verified_nine : Verdict::at_most_nine_with_collisions;
  return TinySquareReport{std::move(conditions), std::move(predicted), std::move(actual), verdict};
}

SortedBivariateIdeal family_ideal(long l, long k, long t) {
  if (l < 1 || t < 1) throw ParameterError("family requires l >= 1 and t >= 1");
  if (k < 4 * t) throw ParameterError("family requires k >= 4t");

  std::vector<Exponent> a{k * l, (k - t) * l};
  for (Exponent e = (k - t) * l - 1; e >= (k - 2 * t) * l; --e) a.push_back(e);
  a.push_back(t * l);
  a.push_back(0);

  std::vector<Monomial> gens;
  gens.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) gens.push_back(Monomial{a[i], a[a.size() - 1 - i]});
  SortedBivariateIdeal out(std::move(gens));
  if (out.size() != static_cast<std::size_t>(t * l + 4)) {
    throw TheoremViolation("family ideal has the wrong number of generators");
  }
  return out;
}

IndexPair dual_index(const IndexPair& v, std::size_t m) {
  if (!in_index_set(v, m)) throw ParameterError("index pair outside V");
  return {m + 1 - v.j, m + 1 - v.i};
}

bool redundancy_check(const SortedBivariateIdeal& ideal) {
  const auto flags = check_original(ideal);
  const bool c2 = flags.flag("2");
  const auto implies = [](bool p, bool q) { return !p || q; };
  return implies(c2 && flags.flag("4.2"), flags.flag("5.2")) &&
         implies(c2 && flags.flag("4.1"), flags.flag("5.1")) &&
         implies(c2 && flags.flag("6.1"), flags.flag("3.1"));
}

bool interval_divisibility_holds(const SortedBivariateIdeal& ideal, const IndexPair& v, const IndexPair& v1,
                                 const IndexPair& v2) {
  const std::size_t m = ideal.size();
  if (!in_index_set(v, m) || !in_index_set(v1, m) || !in_index_set(v2, m)) {
    throw PreconditionError("index pair outside V");
  }
  if (!index_leq(v1, v2)) throw PreconditionError("interval endpoints are not ordered");
  const Monomial fv = pair_product(ideal, v);
  if (!divides(fv, pair_product(ideal, v1)) || !divides(fv, pair_product(ideal, v2))) {
    throw PreconditionError("f(v) must divide f(v1) and f(v2)");
  }

  for (std::size_t i = v1.i; i <= v2.i; ++i) {
    for (std::size_t j = std::max(i, v1.j); j <= v2.j; ++j) {
      if (!divides(fv, pair_product(ideal, {i, j}))) return false;
    }
  }
  return true;
}

}  // namespace idealpow
