// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "idealpow/cli/commands.hpp"
#include "idealpow/cli/ideal_file.hpp"
#include "idealpow/cli/plot.hpp"
#include "idealpow/construction.hpp"
#include "idealpow/random.hpp"
#include "idealpow/tiny_squares.hpp"
#include "oracle.hpp"
#include "test_support.hpp"

using namespace idealpow;

namespace {

// Collects failures for one criterion; an empty list means pass.
class Expect {
 public:
  void operator()(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  template <typename A, typename B>
  void eq(const A& actual, const B& expected, const std::string& what) {
    if (!(actual == expected)) failures_.push_back(what);
  }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

template <typename T>
std::string join(const std::vector<T>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  return out.str();
}

// The 43 generators listed for n = 3, d = 3, in the order displayed.
const std::vector<std::vector<Exponent>> kListedN3D3 = {
    {28, 0, 0},   {0, 28, 0},   {0, 0, 28},   {21, 7, 7},   {7, 21, 7},   {7, 7, 21},   {20, 17, 14},
    {20, 14, 17}, {17, 20, 14}, {17, 14, 20}, {14, 20, 17}, {14, 17, 20}, {20, 16, 15}, {20, 15, 16},
    {16, 20, 15}, {16, 15, 20}, {15, 20, 16}, {15, 16, 20}, {19, 18, 14}, {19, 14, 18}, {18, 19, 14},
    {18, 14, 19}, {14, 19, 18}, {14, 18, 19}, {19, 17, 15}, {19, 15, 17}, {17, 19, 15}, {17, 15, 19},
    {15, 19, 17}, {15, 17, 19}, {19, 16, 16}, {16, 19, 16}, {16, 16, 19}, {18, 18, 15}, {18, 15, 18},
    {15, 18, 18}, {18, 17, 16}, {18, 16, 17}, {17, 18, 16}, {17, 16, 18}, {16, 18, 17}, {16, 17, 18},
    {17, 17, 17}};

void criterion_n2_d6(Expect& expect) {
  const auto r = construct(2, 6);
  expect.eq(r.scale, 22, "t = 22");
  expect.eq(r.capacity, std::size_t{25}, "A(2,6) = 25");
  expect.eq(r.sizes, std::vector<std::size_t>{26, 9, 13, 17, 21, 25}, "sizes = " + join(r.sizes));
  expect(r.verified, "report verified");
  // Naive enumeration of all C(31, 6) multisets agrees on I^6.
  expect.eq(power_naive(r.ideal, 6).size(), std::size_t{25}, "naive |G(I^6)| = 25");
}

void criterion_n3_d3(Expect& expect) {
  const auto r = construct(3, 3);
  expect.eq(r.scale, 7, "t = 7");
  expect.eq(r.capacity, std::size_t{34}, "A(3,3) = 34");
  expect.eq(r.sizes, std::vector<std::size_t>{43, 18, 34}, "sizes = " + join(r.sizes));
  expect(r.verified, "report verified");
  expect.eq(kListedN3D3.size(), std::size_t{43}, "listed generator count");
  expect(std::ranges::equal(test::exps_of(r.ideal), oracle::minimal(test::exps_of(test::ideal_of(kListedN3D3)))),
         "generators equal the listed 43");
}

void criterion_example_square(Expect& expect) {
  const auto square = power(test::ideal_of({{4, 0}, {3, 2}, {0, 3}}), 2);
  expect(std::ranges::equal(test::exps_of(square), std::vector<oracle::Exps>{{0, 6}, {3, 5}, {4, 3}, {7, 2}, {8, 0}}),
         "G(I^2) = {x^8, x^7y^2, x^4y^3, x^3y^5, y^6}");
}

void criterion_capacities(Expect& expect) {
  expect.eq(capacity(2, 6), std::size_t{25}, "capacity(2,6)");
  expect.eq(capacity(3, 3), std::size_t{34}, "capacity(3,3)");
  expect.eq(choose_t(3, 29), 7, "choose_t(3,29)");
  expect.eq(cross_section_count(3, 7), std::uint64_t{37}, "cross_section_count(3,7)");
  for (int t = 1; t <= 50; ++t) {
    expect.eq(cross_section_count(2, t), static_cast<std::uint64_t>(t), "cross_section_count(2," + std::to_string(t) + ")");
  }
}

void criterion_remark(Expect& expect) {
  for (long t : {1L, 3L, 22L}) {
    const auto ideal = family_ideal(1, 4 * t, t);
    const std::string tag = " (t=" + std::to_string(t) + ")";
    expect(check_improved(ideal).all_hold, "improved conditions hold" + tag);
    expect(!check_original(ideal).flag("3.2"), "condition 3.2 fails" + tag);
    const auto report = verify_tiny_square(ideal);
    expect(report.verdict == Verdict::verified_nine, "verified-nine" + tag);
    expect.eq(report.actual.size(), std::size_t{9}, "|G(I^2)| = 9" + tag);
  }
}

void criterion_family_sweep(Expect& expect) {
  int verified_nine = 0;
  int total = 0;
  for (long l = 1; l <= 3; ++l) {
    for (long t = 1; t <= 3; ++t) {
      for (long k = 4 * t; k <= 4 * t + 3; ++k) {
        const std::string tag = " (l,k,t)=(" + std::to_string(l) + "," + std::to_string(k) + "," + std::to_string(t) + ")";
        const auto ideal = family_ideal(l, k, t);
        expect(check_improved(ideal).all_hold, "check_improved" + tag);
        const auto report = verify_tiny_square(ideal);
        expect(report.actual.size() <= 9, "|G(I^2)| <= 9" + tag);
        for (const auto& g : report.actual.generators()) {
          expect(std::binary_search(report.predicted.begin(), report.predicted.end(), g), "G(I^2) within nine" + tag);
        }
        if (l == 1 && t == 1) {
          expect(test::exps_of(report.actual) == oracle::power(test::exps_of(ideal.ideal()), 2), "oracle" + tag);
        }
        verified_nine += report.verdict == Verdict::verified_nine;
        ++total;
      }
    }
  }
  std::cout << "       family sweep: " << verified_nine << "/" << total << " verified-nine\n";
}

void criterion_theorem_checks(Expect& expect) {
  for (int n = 2; n <= 4; ++n) {
    for (int t = 1; t <= 3; ++t) {
      const auto j = skeleton(n, t);
      const auto q = MonomialIdeal::generated_by({mu_squared(n, t)});
      const auto j2 = power(j, 2);
      expect(contains_ideal(j2, product(j, q)) && contains_ideal(j2, product(q, q)), "JQ, Q^2 in J^2");
    }
  }

  random::Rng rng(20240101);
  for (int n = 2; n <= 3; ++n) {
    for (int t = 2; t <= 3; ++t) {
      const auto section = cross_section_monomials(n, t);
      for (int s = 0; s < 50; ++s) {
        const auto subset = random::random_subset(rng, section);
        for (int i = 2; i <= 3; ++i) expect(verify_absorption(n, t, subset, i), "(J+Q')^i = J^i");
      }
    }
  }

  for (int n = 2; n <= 3; ++n) {
    for (int t = 1; t <= 3; ++t) {
      const auto j = skeleton(n, t);
      const auto q = MonomialIdeal::generated_by({mu_squared(n, t)});
      std::vector<Exponent> e(static_cast<std::size_t>(n), 0);
      while (true) {
        const Monomial m(e);
        expect(q_box_membership(n, t, m) == (contains_monomial(q, m) && !contains_monomial(j, m)), "Q\\J box");
        std::size_t p = 0;
        while (p < e.size() && e[p] == 4 * t) e[p++] = 0;
        if (p == e.size()) break;
        ++e[p];
      }
    }
  }

  random::Rng rng_red(500);
  for (int k = 0; k < 500; ++k) expect(redundancy_check(random::random_sorted_bivariate(rng_red, 5, 9, 40)), "redundancy");

  random::Rng rng_int(200);
  int triples = 0;
  while (triples < 200) {
    const auto ideal = random::random_sorted_bivariate(rng_int, 5, 9, 40);
    const auto triple = random::random_interval_triple(rng_int, ideal);
    if (!triple) continue;
    expect(interval_divisibility_holds(ideal, triple->v, triple->lo, triple->hi), "interval divisibility");
    ++triples;
  }

  for (int n = 2; n <= 3; ++n) {
    const auto reference = power_sizes(skeleton(n, 1), 4);
    for (int t = 2; t <= 3; ++t) expect(power_sizes(skeleton(n, t), 4) == reference, "t-independence");
  }
}

void criterion_oracle(Expect& expect) {
  random::Rng rng(8);
  for (int k = 0; k < 200; ++k) {
    const auto ideal = random::random_ideal(rng, {3, 6, 8});
    const int i = 1 + k % 3;
    expect(power(ideal, i) == power_naive(ideal, i), "power = power_naive at sample " + std::to_string(k));
  }
}

void criterion_duality(Expect& expect) {
  random::Rng rng(9);
  for (int k = 0; k < 200; ++k) {
    const auto ideal = random::random_sorted_bivariate(rng);
    const auto a = check_improved(ideal);
    const auto b = check_improved(ideal.mirrored());
    expect(b.flag("B") == a.flag("Bstar") && b.flag("C") == a.flag("Cstar"), "duality at sample " + std::to_string(k));
  }
}

int run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  return cli::run_cli(args, out, err);
}

void criterion_cli(Expect& expect) {
  const auto dir = std::filesystem::temp_directory_path() / ("idealpow_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const auto file = [&](const std::string& name, const MonomialIdeal& ideal) {
    const auto p = (dir / name).string();
    cli::write_ideal_file(p, ideal);
    return p;
  };

  const auto example = test::ideal_of({{4, 0}, {3, 2}, {0, 3}});
  const std::vector<MonomialIdeal> golden{example, skeleton(2, 1), skeleton(3, 7), construct(2, 6).ideal,
                                          construct(3, 3).ideal, family_ideal(1, 4, 1).ideal()};
  for (const auto& ideal : golden) {
    expect(std::ranges::equal(cli::parse_ideal(cli::emit_ideal(ideal)).generators, ideal.generators()), "round-trip");
  }

  const auto ex = file("example.txt", example);
  const auto n2d6 = file("n2d6.txt", construct(2, 6).ideal);
  const auto four = file("four.txt", test::ideal_of({{3, 0}, {2, 1}, {1, 2}, {0, 3}}));
  const auto three = file("three.txt", test::ideal_of({{1, 1, 1}}));

  expect.eq(run_cli({"power", ex, "2"}), 0, "power exit 0");
  expect.eq(run_cli({"power", ex, "0"}), 2, "power exit 2");
  expect.eq(run_cli({"construct", "--nvars", "2", "--depth", "2"}), 0, "construct exit 0");
  expect.eq(run_cli({"construct", "--nvars", "1", "--depth", "2"}), 2, "construct exit 2");
  expect.eq(run_cli({"check", n2d6, "--scheme", "improved"}), 0, "check exit 0");
  expect.eq(run_cli({"check", n2d6, "--scheme", "original"}), 1, "check exit 1");
  expect.eq(run_cli({"check", four}), 2, "check exit 2");
  expect.eq(run_cli({"family", "1", "4", "1"}), 0, "family exit 0");
  expect.eq(run_cli({"family", "1", "4", "1", "--scheme", "original"}), 1, "family exit 1");
  expect.eq(run_cli({"family", "1", "3", "1"}), 2, "family exit 2");
  expect.eq(run_cli({"crosssection", "--nvars", "3", "--t", "7"}), 0, "crosssection exit 0");
  expect.eq(run_cli({"crosssection", "--nvars", "3", "--t", "0"}), 2, "crosssection exit 2");
  expect.eq(run_cli({"absorb", "--nvars", "2", "--t", "2", "--power", "2"}), 0, "absorb exit 0");
  expect.eq(run_cli({"absorb", "--nvars", "2", "--t", "2", "--power", "1"}), 2, "absorb exit 2");
  expect.eq(run_cli({"plot", ex, "--style", "vgrid"}), 0, "plot exit 0");
  expect.eq(run_cli({"plot", three}), 2, "plot exit 2");
  expect.eq(run_cli({"selftest"}), 0, "selftest exit 0");

  int dots = 0;
  bool dot_at_22 = false;
  for (const auto& c : cli::vgrid_cells(normalize(example))) {
    if (c.mark == cli::CellMark::dot) {
      ++dots;
      dot_at_22 = c.v == IndexPair{2, 2};
    }
  }
  expect(dots == 1 && dot_at_22, "vgrid has exactly one dot, at (2,2)");

  std::filesystem::remove_all(dir);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Expect&)>>> criteria = {
      {"AC1  construct n=2 d=6 reproduces sizes 26,9,13,17,21,25", criterion_n2_d6},
      {"AC2  construct n=3 d=3 reproduces sizes 43,18,34 and the listed ideal", criterion_n3_d3},
      {"AC3  G(<x^4,x^3y^2,y^3>^2) has the five listed generators", criterion_example_square},
      {"AC4  capacities, choose_t and cross-section counts", criterion_capacities},
      {"AC5  family(1,4t,t) for t in {1,3,22}: improved yes, 3.2 no, nine generators", criterion_remark},
      {"AC6  family sweep l,t in [1,3], k in [4t,4t+3]", criterion_family_sweep},
      {"AC7  lemma, absorption, box, redundancy, interval, t-independence", criterion_theorem_checks},
      {"AC8  power equals naive oracle on 200 random ideals", criterion_oracle},
      {"AC9  duality of B/B* and C/C* on 200 random ideals", criterion_duality},
      {"AC10 CLI round-trip, exit codes, vgrid dot at (2,2)", criterion_cli},
  };

  int failed = 0;
  for (const auto& [name, body] : criteria) {
    Expect expect;
    const auto start = std::chrono::steady_clock::now();
    try {
      body(expect);
    } catch (const std::exception& e) {
      expect(false, std::string("exception: ") + e.what());
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    const bool ok = expect.failures().empty();
    failed += !ok;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << " (" << ms << " ms)\n";
    for (std::size_t i = 0; i < std::min<std::size_t>(expect.failures().size(), 5); ++i) {
      std::cout << "       " << expect.failures()[i] << '\n';
    }
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
