#include "idealpow/cli/commands.hpp"

#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "idealpow/cli/ideal_file.hpp"
#include "idealpow/cli/plot.hpp"
#include "idealpow/cli/report_json.hpp"
#include "idealpow/cli/selftest.hpp"
#include "idealpow/construction.hpp"
#include "idealpow/random.hpp"

namespace idealpow::cli {
namespace {

struct Options {
  std::uint64_t oracle_cap = kDefaultOracleCap;
  std::uint64_t seed = 0;
  bool json_output = false;
  std::string manifest_path;

  std::string ideal_path;
  int exponent = 1;
  bool naive = false;

  int nvars = 0;
  int depth = 0;
  std::optional<int> scale;
  std::string output_path;
  std::string report_path;

  std::string scheme = "improved";
  long family_l = 0;
  long family_k = 0;
  long family_t = 0;

  bool list = false;
  std::string subset_path;
  bool random_subset = false;

  std::string style = "staircase";
  std::string format = "ascii";
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParameterError("cannot write " + path);
  out << text;
}

// Sends `text` to the output file when one was requested, stdout otherwise.
void deliver(const Options& opt, std::ostream& out, const std::string& text) {
  if (opt.output_path.empty()) {
    out << text;
  } else {
    write_text(opt.output_path, text);
  }
}

int exit_for(Verdict verdict) { return verdict == Verdict::verified_nine ? kExitOk : kExitNotVerified; }

int cmd_power(const Options& opt, std::ostream& out) {
  const auto file = read_ideal_file(opt.ideal_path);
  const auto result = opt.naive ? power_naive(file.ideal(), opt.exponent, opt.oracle_cap)
                                : power(file.ideal(), opt.exponent);
  if (opt.json_output) {
    out << json{{"exponent", opt.exponent}, {"count", result.size()}, {"generators", to_json(result.generators())}}
               .dump(2)
        << '\n';
  } else {
    out << "|G(I^" << opt.exponent << ")| = " << result.size() << '\n';
    for (const auto& g : result.generators()) out << to_string(g) << '\n';
  }
  return kExitOk;
}

int cmd_construct(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto report = construct(opt.nvars, opt.depth, opt.scale);
  const std::string text = to_json(report).dump(2) + "\n";
  out << text;
  if (!opt.report_path.empty()) write_text(opt.report_path, text);
  if (!opt.output_path.empty()) {
    write_ideal_file(opt.output_path, report.ideal,
                     "tiny-powers construction nvars=" + std::to_string(report.nvars) +
                         " depth=" + std::to_string(report.depth) + " t=" + std::to_string(report.scale));
  }
  if (!report.verified) err << "construction did not verify\n";
  return report.verified ? kExitOk : kExitNotVerified;
}

int cmd_check(const Options& opt, std::ostream& out) {
  const auto ideal = normalize(read_ideal_file(opt.ideal_path).ideal());
  const auto report = verify_tiny_square(ideal, parse_scheme(opt.scheme));
  out << to_json(report).dump(2) << '\n';
  return exit_for(report.verdict);
}

int cmd_family(const Options& opt, std::ostream& out) {
  const auto ideal = family_ideal(opt.family_l, opt.family_k, opt.family_t);
  const auto report = verify_tiny_square(ideal, parse_scheme(opt.scheme));
  if (!opt.output_path.empty()) {
    write_ideal_file(opt.output_path, ideal.ideal(),
                     "family l=" + std::to_string(opt.family_l) + " k=" + std::to_string(opt.family_k) +
                         " t=" + std::to_string(opt.family_t));
  }
  out << to_json(report).dump(2) << '\n';
  return exit_for(report.verdict);
}

int cmd_crosssection(const Options& opt, std::ostream& out) {
  const int t = opt.scale.value_or(1);
  const auto count = cross_section_count(opt.nvars, t);
  std::vector<Monomial> monomials;
  if (opt.list || opt.json_output) monomials = cross_section_monomials(opt.nvars, t);
  if (opt.json_output) {
    json j{{"nvars", opt.nvars}, {"t", t}, {"count", count}};
    j["monomials"] = to_json(std::span<const Monomial>(monomials));
    out << j.dump(2) << '\n';
  } else {
    out << count << '\n';
    for (const auto& m : monomials) out << to_string(m) << '\n';
  }
  return kExitOk;
}

int cmd_absorb(const Options& opt, std::ostream& out) {
  const int t = opt.scale.value_or(1);
  std::vector<Monomial> subset;
  if (!opt.subset_path.empty()) {
    subset = read_ideal_file(opt.subset_path).generators;
  } else if (opt.random_subset) {
    random::Rng rng(opt.seed);
    subset = random::random_subset(rng, cross_section_monomials(opt.nvars, t));
  } else {
    subset = cross_section_monomials(opt.nvars, t);
  }
  const bool absorbed = verify_absorption(opt.nvars, t, subset, opt.exponent);
  if (opt.json_output) {
    out << json{{"nvars", opt.nvars}, {"t", t}, {"power", opt.exponent}, {"subset_size", subset.size()},
                {"absorbed", absorbed}}
               .dump(2)
        << '\n';
  } else {
    out << "absorbed: " << (absorbed ? "true" : "false") << '\n';
  }
  // Every admissible subset is absorbed, so a negative answer is a bug.
  if (!absorbed) throw TheoremViolation("(J + Q')^i differs from J^i");
  return kExitOk;
}

int cmd_plot(const Options& opt, std::ostream& out) {
  const auto ideal = read_ideal_file(opt.ideal_path).ideal();
  if (ideal.arity() != 2) throw ArityError("plots require arity 2");
  std::string text;
  if (opt.style == "staircase") {
    text = opt.format == "svg" ? render_staircase_svg(ideal) : render_staircase_ascii(ideal);
  } else {
    const auto sorted = normalize(ideal);
    text = opt.format == "svg" ? render_vgrid_svg(sorted) : render_vgrid_ascii(sorted);
  }
  deliver(opt, out, text);
  return kExitOk;
}

int cmd_selftest(const Options& opt, std::ostream& out) {
  const auto results = run_property_suite({opt.seed, opt.oracle_cap}, out);
  for (const auto& r : results) {
    if (!r.passed) return kExitInternal;
  }
  return kExitOk;
}

void write_manifest(const Options& opt, const std::string& subcommand, const std::vector<std::string>& args,
                    int code) {
  json outputs = json::array();
  if (!opt.output_path.empty()) outputs.push_back(opt.output_path);
  if (!opt.report_path.empty()) outputs.push_back(opt.report_path);
  const json manifest{{"subcommand", subcommand}, {"parameters", args}, {"seed", opt.seed},
                      {"outputs", outputs},       {"exit_code", code}};
  write_text(opt.manifest_path, manifest.dump(2) + "\n");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Monomial ideals with tiny powers", "idealpow"};
  app.require_subcommand(1);
  app.add_option("--oracle-cap", opt.oracle_cap, "Largest product count the brute-force oracle enumerates")
      ->envname("IDEALPOW_ORACLE_CAP");
  app.add_option("--manifest", opt.manifest_path, "Write a JSON run manifest to this path");

  auto* power_cmd = app.add_subcommand("power", "Minimal generators of I^i");
  power_cmd->add_option("ideal", opt.ideal_path, "Ideal file")->required();
  power_cmd->add_option("exponent", opt.exponent, "Power i >= 1")->required();
  power_cmd->add_flag("--naive", opt.naive, "Use the brute-force oracle");
  power_cmd->add_flag("--json", opt.json_output);

  auto* construct_cmd = app.add_subcommand("construct", "Build an ideal with tiny powers up to a depth");
  construct_cmd->add_option("--nvars,-n", opt.nvars)->required();
  construct_cmd->add_option("--depth,-d", opt.depth)->required();
  construct_cmd->add_option("--t", opt.scale, "Override the scale t");
  construct_cmd->add_option("--output,-o", opt.output_path, "Write the ideal file here");
  construct_cmd->add_option("--report", opt.report_path, "Also write the JSON report here");
  construct_cmd->add_flag("--json", opt.json_output, "Accepted for symmetry; output is always JSON");

  auto* check_cmd = app.add_subcommand("check", "Check the tiny-square conditions of a bivariate ideal");
  check_cmd->add_option("ideal", opt.ideal_path)->required();
  check_cmd->add_option("--scheme", opt.scheme)->check(CLI::IsMember({"original", "improved"}));
  check_cmd->add_flag("--json", opt.json_output, "Accepted for symmetry; output is always JSON");

  auto* family_cmd = app.add_subcommand("family", "Three-parameter family of ideals with tiny squares");
  family_cmd->add_option("l", opt.family_l)->required();
  family_cmd->add_option("k", opt.family_k)->required();
  family_cmd->add_option("t", opt.family_t)->required();
  family_cmd->add_option("--output,-o", opt.output_path, "Write the ideal file here");
  family_cmd->add_option("--scheme", opt.scheme)->check(CLI::IsMember({"original", "improved"}));
  family_cmd->add_flag("--json", opt.json_output, "Accepted for symmetry; output is always JSON");

  auto* cross_cmd = app.add_subcommand("crosssection", "Central cross-section of the box [2t, 3t-1]^n");
  cross_cmd->add_option("--nvars,-n", opt.nvars)->required();
  cross_cmd->add_option("--t", opt.scale)->required();
  cross_cmd->add_flag("--list", opt.list, "Also print the monomials");
  cross_cmd->add_flag("--json", opt.json_output);

  auto* absorb_cmd = app.add_subcommand("absorb", "Check (J + Q')^i == J^i");
  absorb_cmd->add_option("--nvars,-n", opt.nvars)->required();
  absorb_cmd->add_option("--t", opt.scale)->required();
  absorb_cmd->add_option("--power,-i", opt.exponent)->required();
  absorb_cmd->add_option("--subset", opt.subset_path, "Ideal file listing Q' (default: whole cross-section)");
  absorb_cmd->add_flag("--random", opt.random_subset, "Use a random subset of the cross-section");
  absorb_cmd->add_option("--seed", opt.seed);
  absorb_cmd->add_flag("--json", opt.json_output);

  auto* plot_cmd = app.add_subcommand("plot", "Render a staircase or the V grid of I^2");
  plot_cmd->add_option("ideal", opt.ideal_path)->required();
  plot_cmd->add_option("--style", opt.style)->check(CLI::IsMember({"staircase", "vgrid"}));
  plot_cmd->add_option("--format", opt.format)->check(CLI::IsMember({"svg", "ascii"}));
  plot_cmd->add_option("--output,-o", opt.output_path);

  auto* selftest_cmd = app.add_subcommand("selftest", "Run the randomized property suite");
  selftest_cmd->add_option("--seed", opt.seed);

  std::vector<std::string> argv_storage{"idealpow"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  int code = kExitOk;
  std::string subcommand;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    subcommand = app.get_subcommands().front()->get_name();

    if (subcommand == "power") {
      code = cmd_power(opt, out);
    } else if (subcommand == "construct") {
      code = cmd_construct(opt, out, err);
    } else if (subcommand == "check") {
      code = cmd_check(opt, out);
    } else if (subcommand == "family") {
      code = cmd_family(opt, out);
    } else if (subcommand == "crosssection") {
      code = cmd_crosssection(opt, out);
    } else if (subcommand == "absorb") {
      code = cmd_absorb(opt, out);
    } else if (subcommand == "plot") {
      code = cmd_plot(opt, out);
    } else {
      code = cmd_selftest(opt, out);
    }
  } catch (const CLI::ParseError& e) {
    // --help and friends exit 0 through this path as well.
    code = app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  } catch (const TheoremViolation& e) {
    err << "internal error: " << e.what() << '\n';
    code = kExitInternal;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    code = kExitUsage;
  } catch (const OracleTooLarge& e) {
    err << "error: " << e.what() << '\n';
    code = kExitUsage;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    code = kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    code = kExitInternal;
  }

  if (!opt.manifest_path.empty()) {
    try {
      write_manifest(opt, subcommand, args, code);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
    }
  }
  return code;
}

}  // namespace idealpow::cli
