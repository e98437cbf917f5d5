#include "idealpow/cli/selftest.hpp"

#include <exception>
#include <functional>

#include "idealpow/construction.hpp"
#include "idealpow/random.hpp"
#include "idealpow/tiny_squares.hpp"

namespace idealpow::cli {
namespace {

using Check = std::function<std::string(random::Rng&)>;  // empty string means pass

struct Property {
  std::string name;
  Check check;
};

std::vector<Property> properties(const SelftestOptions& options) {
  const auto cap = options.oracle_cap;
  return {
      {"minimalize idempotent antichain",
       [](random::Rng& rng) -> std::string {
         for (int k = 0; k < 200; ++k) {
           const auto ideal = random::random_ideal(rng);
           const auto once = minimalize(ideal);
           if (!(minimalize(once) == once)) return "not idempotent";
           for (const auto& g : once.generators())
             for (const auto& h : once.generators())
               if (!(g == h) && divides(g, h)) return "output is not an antichain";
         }
         return {};
       }},
      {"power equals naive oracle",
       [cap](random::Rng& rng) -> std::string {
         for (int k = 0; k < 200; ++k) {
           const auto ideal = random::random_ideal(rng);
           const int i = 1 + static_cast<int>(rng() % 3);
           if (!(power(ideal, i) == power_naive(ideal, i, cap))) return "mismatch at sample " + std::to_string(k);
         }
         return {};
       }},
      {"serial and openmp kernels agree",
       [](random::Rng& rng) -> std::string {
         for (int k = 0; k < 100; ++k) {
           const auto ideal = random::random_ideal(rng);
           if (!(power(ideal, 3, Backend::serial) == power(ideal, 3, Backend::openmp))) return "backend mismatch";
         }
         return {};
       }},
      {"lemma JQ and Q^2 in J^2",
       [](random::Rng&) -> std::string {
         for (int n = 2; n <= 4; ++n) {
           for (int t = 1; t <= 3; ++t) {
             const auto base = skeleton(n, t);
             const auto q = MonomialIdeal::generated_by({mu_squared(n, t)});
             const auto square = power(base, 2);
             if (!contains_ideal(square, product(base, q)) || !contains_ideal(square, product(q, q)))
               return "fails at n=" + std::to_string(n) + " t=" + std::to_string(t);
           }
         }
         return {};
       }},
      {"absorption of cross-section subsets",
       [](random::Rng& rng) -> std::string {
         for (int n = 2; n <= 3; ++n) {
           for (int t = 2; t <= 3; ++t) {
             const auto section = cross_section_monomials(n, t);
             for (int s = 0; s < 50; ++s) {
               const auto subset = random::random_subset(rng, section);
               for (int i = 2; i <= 3; ++i) {
                 if (!verify_absorption(n, t, subset, i)) return "fails at n=" + std::to_string(n);
               }
             }
           }
         }
         return {};
       }},
      {"box describes Q minus J",
       [](random::Rng&) -> std::string {
         for (int n = 2; n <= 3; ++n) {
           for (int t = 1; t <= 3; ++t) {
             const auto base = skeleton(n, t);
             const auto q = MonomialIdeal::generated_by({mu_squared(n, t)});
             std::vector<Exponent> e(static_cast<std::size_t>(n), 0);
             while (true) {
               const Monomial m(e);
               if (q_box_membership(n, t, m) != (contains_monomial(q, m) && !contains_monomial(base, m)))
                 return "mismatch at " + to_string(m);
               std::size_t p = 0;
               while (p < e.size() && e[p] == 4 * t) e[p++] = 0;
               if (p == e.size()) break;
               ++e[p];
             }
           }
         }
         return {};
       }},
      {"skeleton power sizes independent of t",
       [](random::Rng&) -> std::string {
         for (int n = 2; n <= 3; ++n) {
           const auto reference = power_sizes(skeleton(n, 1), 4);
           for (int t = 2; t <= 3; ++t) {
             if (power_sizes(skeleton(n, t), 4) != reference) return "differs at n=" + std::to_string(n);
           }
         }
         return {};
       }},
      {"redundant original conditions",
       [](random::Rng& rng) -> std::string {
         for (int k = 0; k < 500; ++k) {
           if (!redundancy_check(random::random_sorted_bivariate(rng))) return "implication failed";
         }
         return {};
       }},
      {"interval divisibility",
       [](random::Rng& rng) -> std::string {
         int done = 0;
         while (done < 200) {
           const auto ideal = random::random_sorted_bivariate(rng);
           const auto triple = random::random_interval_triple(rng, ideal);
           if (!triple) continue;
           if (!interval_divisibility_holds(ideal, triple->v, triple->lo, triple->hi)) return "lemma failed";
           ++done;
         }
         return {};
       }},
      {"duality of improved conditions",
       [](random::Rng& rng) -> std::string {
         for (int k = 0; k < 200; ++k) {
           const auto ideal = random::random_sorted_bivariate(rng);
           const auto a = check_improved(ideal);
           const auto b = check_improved(ideal.mirrored());
           if (b.flag("B") != a.flag("Bstar") || b.flag("C") != a.flag("Cstar") || b.flag("A") != a.flag("A"))
             return "duality broken";
         }
         return {};
       }},
      {"family ideals have tiny squares",
       [](random::Rng&) -> std::string {
         for (long l = 1; l <= 3; ++l) {
           for (long t = 1; t <= 3; ++t) {
             for (long k = 4 * t; k <= 4 * t + 3; ++k) {
               const auto ideal = family_ideal(l, k, t);
               const auto report = verify_tiny_square(ideal);
               if (report.verdict == Verdict::conditions_fail) return "conditions fail for a family ideal";
               const auto original = check_original(ideal);
               for (const auto& [name, value] : original.flags) {
                 if (name != "3.2" && !value) return "improved conditions do not imply " + name;
               }
             }
           }
         }
         return {};
       }},
  };
}

}  // namespace

std::vector<PropertyResult> run_property_suite(const SelftestOptions& options, std::ostream& log) {
  std::vector<PropertyResult> results;
  std::uint64_t index = 0;
  for (const auto& property : properties(options)) {
    // Each property draws from its own stream so adding one does not
    // perturb the others.
    random::Rng rng(options.seed * 1000003ULL + index++);
    std::string detail;
    try {
      detail = property.check(rng);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const bool passed = detail.empty();
    log << (passed ? "PASS " : "FAIL ") << property.name << (passed ? "" : ": " + detail) << '\n';
    results.push_back({property.name, passed, detail});
  }
  return results;
}

}  // namespace idealpow::cli
