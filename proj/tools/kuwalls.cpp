// kuwalls: exact wall, lattice and del Pezzo computations for index-two Fano threefolds.
//
// Exit status: 0 success, 1 a consistency check failed, 2 usage error.

#include "kuwalls/commands.hpp"
#include "kuwalls/svg.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

namespace {

using namespace kuwalls;

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

void print(const Json& doc, bool compact) {
  std::cout << (compact ? doc.dump() : doc.dump(2)) << '\n';
}

LatticeDenominators parse_denoms(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--denoms expects 'a,b'");
  try {
    return {std::stol(text.substr(0, comma)), std::stol(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw UsageError("--denoms expects two integers 'a,b'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tilt-stability walls, Kuznetsov-component lattices and del Pezzo roots"};
  app.require_subcommand(1);
  app.fallthrough();
  bool compact = false;
  app.add_flag("--compact", compact, "Single-line JSON output");

  int degree = 2;
  auto* euler = app.add_subcommand("euler", "Euler form on the (v, w) lattice");
  euler->add_option("--degree,-d", degree, "Degree d = H^3 of Y (1..5)")->required();

  WallsOptions walls;
  std::string beta_text = "-1/2";
  std::string denoms_text;
  std::string svg_path;
  long x_bound = 0;
  bool both_sides = false;
  bool no_same_sign = false;
  auto* walls_cmd = app.add_subcommand("walls", "Numerical walls and destabilizers along beta = beta0");
  walls_cmd->add_option("--degree,-d", walls.degree, "Degree d = H^3 of Y (1..5)")->required();
  walls_cmd->add_option("--class,-c", walls.class_spec,
                        "Catalog name, v, w, O, or 'r,c1,c2,c3'")->required();
  walls_cmd->add_option("--beta,-b", beta_text, "beta0 as a rational")->capture_default_str();
  walls_cmd->add_option("--denoms", denoms_text, "Lattice denominators 'a,b' for twisted Ch1, Ch2");
  walls_cmd->add_flag("--degree-lattice", walls.degree_lattice,
                      "Use the degree-d lattice: Ch2 step lcm(2q^2, d), integral untwisted class");
  walls_cmd->add_option("--x-bound", x_bound, "Bound on |Ch0| of candidates (default: saturate)");
  walls_cmd->add_flag("--both-sides", both_sides, "Report both A and target - A");
  walls_cmd->add_flag("--no-same-sign", no_same_sign, "Disable the torsion same-sign rule");
  walls_cmd->add_option("--svg", svg_path, "Write a wall diagram to this path");

  RootsOptions roots;
  auto* roots_cmd = app.add_subcommand("roots", "Roots and lines on a del Pezzo surface");
  roots_cmd->add_option("--dp", roots.dp_degree, "Del Pezzo degree K^2 (1..7)")->required();
  roots_cmd->add_flag("--list", roots.list, "List every root and line");
  roots_cmd->add_flag("--pairs", roots.pairs, "Pair lines by L -> -K - L");
  roots_cmd->add_flag("--as-line-diff", roots.as_line_diff, "Write each root as L1 - L2");
  roots_cmd->add_flag("--nef-check", roots.nef_check, "Test D - 2K against the nef cone (dp 2)");

  int check_degree = 0;
  bool check_all = false;
  std::string format = "json";
  auto* check_cmd = app.add_subcommand("check", "Run the numeric consistency suite");
  auto* check_deg_opt = check_cmd->add_option("--degree,-d", check_degree, "Single degree (1..5)");
  auto* check_all_opt = check_cmd->add_flag("--all", check_all, "Every degree and global checks");
  check_deg_opt->excludes(check_all_opt);
  check_cmd->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  int catalog_degree = 2;
  auto* catalog_cmd = app.add_subcommand("catalog", "Chern vectors of the named objects");
  catalog_cmd->add_option("--degree,-d", catalog_degree, "Degree d = H^3 of Y (1..5)")->required();

  int sp_degree = 2;
  long sp_target = -2;
  long sp_bound = 10;
  auto* sp_cmd = app.add_subcommand("self-pairing", "Classes c with chi(c, c) = target");
  sp_cmd->add_option("--degree,-d", sp_degree, "Degree d = H^3 of Y (1..5)")->required();
  sp_cmd->add_option("--target", sp_target, "Value of chi(c, c)")->capture_default_str();
  sp_cmd->add_option("--bound", sp_bound, "Box |a|, |b| <= bound")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*euler) {
      print(cmd_euler(degree), compact);
    } else if (*walls_cmd) {
      try {
        walls.beta = parse_rational(beta_text);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (!denoms_text.empty()) walls.denoms = parse_denoms(denoms_text);
      if (walls_cmd->count("--x-bound") > 0) walls.x_bound = x_bound;
      walls.rules.canonical_side = !both_sides;
      walls.rules.same_sign_for_torsion = !no_same_sign;
      WallsResult result = cmd_walls(walls);
      if (!svg_path.empty()) {
        std::ofstream svg(svg_path);
        if (!svg) throw UsageError("cannot write " + svg_path);
        svg << render_wall_diagram(result.report, "walls for " + walls.class_spec + " on Y_" +
                                                      std::to_string(walls.degree));
      }
      print(result.document, compact);
    } else if (*roots_cmd) {
      print(cmd_roots(roots), compact);
    } else if (*check_cmd) {
      if (!check_all && check_cmd->count("--degree") == 0) {
        throw UsageError("check needs --degree D or --all");
      }
      const CheckOutcome outcome =
          cmd_check(check_all ? std::nullopt : std::optional<int>(check_degree));
      if (format == "text") {
        std::cout << outcome.text;
      } else {
        print(outcome.document, compact);
      }
      return outcome.passed ? 0 : kExitCheckFailed;
    } else if (*catalog_cmd) {
      print(cmd_catalog(catalog_degree), compact);
    } else if (*sp_cmd) {
      print(cmd_self_pairing(sp_degree, sp_target, sp_bound), compact);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return 0;
}
