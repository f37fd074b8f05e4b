// Command-line front end: root listings, Weyl orbits, gamma sets, special-root
// tables and the conjecture checks, with text/csv/json output and an optional
// on-disk cache for enumerated groups.
//
// Exit codes: 0 = success (all requested checks passed), 1 = a verification
// check failed, 2 = usage error, invalid input or an enumeration cap hit.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "specroots/atype.hpp"
#include "specroots/cache.hpp"
#include "specroots/output.hpp"
#include "specroots/root_system.hpp"
#include "specroots/special.hpp"
#include "specroots/weyl.hpp"

namespace {

using namespace specroots;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact special-root tables and conjecture checks for finite Weyl groups"};
  app.require_subcommand(1);

  std::string format_str = "text";
  std::string cache_dir;
  std::size_t max_elements = kDefaultEnumerationCap;
  std::size_t tuple_budget = kDefaultTupleBudget;
  app.add_option("--format", format_str, "output format: text, csv or json")
      ->capture_default_str();
  app.add_option("--cache-dir", cache_dir, "directory for cached Weyl group enumerations");
  app.add_option("--max-elements", max_elements, "Weyl enumeration cap")->capture_default_str();
  app.add_option("--tuple-budget", tuple_budget, "Gram tuple search budget")
      ->capture_default_str();

  std::string type_str;
  int index = 1;
  int rank = 1;
  std::string conjecture = "all";

  CLI::App* cmd_roots = app.add_subcommand("roots", "list the positive roots");
  cmd_roots->add_option("TYPE", type_str, "Lie type, e.g. A3 or G2")->required();

  CLI::App* cmd_orbit = app.add_subcommand("orbit", "list the Weyl orbit of a fundamental weight");
  cmd_orbit->add_option("TYPE", type_str, "Lie type")->required();
  cmd_orbit->add_option("--index", index, "weight index i (1-based)")->capture_default_str();

  CLI::App* cmd_gamma = app.add_subcommand("gamma", "list the gamma set of a fundamental weight");
  cmd_gamma->add_option("TYPE", type_str, "Lie type")->required();
  cmd_gamma->add_option("--index", index, "weight index i (1-based)")->capture_default_str();

  CLI::App* cmd_table = app.add_subcommand("table", "special-root tuple per Weyl element");
  cmd_table->add_option("TYPE", type_str, "Lie type")->required();

  CLI::App* cmd_verify = app.add_subcommand("verify", "run the conjecture checks");
  cmd_verify->add_option("TYPE", type_str, "Lie type")->required();
  cmd_verify->add_option("--conjecture", conjecture, "which checks: 1, 2 or all")
      ->check(CLI::IsMember({"1", "2", "all"}))
      ->capture_default_str();

  CLI::App* cmd_atable = app.add_subcommand("atable", "A-series closed-form cross-checks");
  cmd_atable->add_option("RANK", rank, "rank r of A_r")->required();

  for (CLI::App* sub : {cmd_roots, cmd_orbit, cmd_gamma, cmd_table, cmd_verify, cmd_atable})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const OutputFormat format = parse_format(format_str);

    if (cmd_roots->parsed()) {
      const LieType t = LieType::parse(type_str);
      std::cout << render_roots(build_root_system(t), format);
      return 0;
    }

    if (cmd_orbit->parsed()) {
      const LieType t = LieType::parse(type_str);
      const CartanData cd = build_cartan(t);
      std::cout << render_orbit(t, index, orbit(fundamental_weight(index, cd), cd), format);
      return 0;
    }

    if (cmd_gamma->parsed()) {
      const LieType t = LieType::parse(type_str);
      std::cout << render_gamma(t, gamma_set(index, build_cartan(t)), format);
      return 0;
    }

    if (cmd_table->parsed()) {
      const LieType t = LieType::parse(type_str);
      const WeylGroup g = enumerate_group_cached(t, cache_dir, max_elements);
      std::cout << render_table(build_special_root_table(g), format);
      return 0;
    }

    if (cmd_verify->parsed()) {
      const LieType t = LieType::parse(type_str);
      Conjecture1Report c1;
      Conjecture2Report c2;
      const bool run1 = conjecture == "1" || conjecture == "all";
      const bool run2 = conjecture == "2" || conjecture == "all";
      if (run1) {
        const auto start = std::chrono::steady_clock::now();
        c1 = verify_conjecture1(t);
        std::fprintf(stderr, "conjecture 1 checked in %.3f s\n", seconds_since(start));
      }
      if (run2) {
        const auto start = std::chrono::steady_clock::now();
        const WeylGroup g = enumerate_group_cached(t, cache_dir, max_elements);
        c2 = verify_conjecture2(g, tuple_budget);
        std::fprintf(stderr, "conjecture 2 checked in %.3f s\n", seconds_since(start));
      }
      std::cout << render_verify(run1 ? &c1 : nullptr, run2 ? &c2 : nullptr, format);
      const bool ok = (!run1 || c1.pass()) && (!run2 || c2.pass());
      return ok ? 0 : 1;
    }

    if (cmd_atable->parsed()) {
      const ATableReport report = verify_atype_closed_forms(rank);
      std::cout << render_atable(report, format);
      return report.pass() ? 0 : 1;
    }
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
