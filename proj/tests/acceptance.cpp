// Acceptance gate: runs the nine release criteria end to end and prints one
// [PASS]/[FAIL] line per criterion. Exit status 0 only if every criterion
// holds. argv[1] must be the path to the specroots CLI binary (criteria 1
// and 9 drive the executable itself; everything else goes through the
// library).

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "specroots/atype.hpp"
#include "specroots/cache.hpp"
#include "specroots/output.hpp"
#include "specroots/special.hpp"
#include "specroots/weyl.hpp"

#include "golden_a3.hpp"
#include "support.hpp"

using namespace specroots;

namespace {

// Wall-clock budgets, pinned: exceeding one fails the criterion.
constexpr double kGoldenTableBudgetSeconds = 1.0;    // criterion 1
constexpr double kConjecture1BudgetSeconds = 60.0;   // criterion 2
constexpr double kConjecture2BudgetSeconds = 300.0;  // criterion 3
constexpr double kClosedFormBudgetSeconds = 30.0;    // criterion 5
constexpr double kGroupOrderBudgetSeconds = 60.0;    // criterion 6
constexpr double kUntimed = 0.0;

constexpr int kPropertySamples = 1000;  // per type, criterion 7
constexpr unsigned long long kPropertySeed = 20260823ULL;

struct Checker {
  bool ok = true;
  std::string note;  // first failure
  std::string info;  // extra detail reported even on pass

  void expect(bool cond, const std::string& msg) {
    if (!cond) {
      if (ok) note = msg;
      ok = false;
    }
  }
};

/// Runs `cli args`, capturing stdout; returns the exit code (-1 on spawn
/// failure). stderr is dropped so diagnostics never pollute byte comparisons.
int run_cli(const std::string& cli, const std::string& args, std::string* out) {
  const std::string cmd = "\"" + cli + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return -1;
  std::string text;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) text.append(buf, n);
  const int status = pclose(pipe);
  *out = std::move(text);
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

std::string describe(LieType t, const std::string& what) { return t.name() + ": " + what; }

// --- criterion bodies ------------------------------------------------------

void golden_table(Checker& c, const std::string& cli) {
  const LieType a3{Family::A, 3};
  const std::vector<golden_a3::Row>& want = golden_a3::rows();

  const SpecialRootTable table = build_special_root_table(enumerate_group(a3));
  c.expect(table.rows.size() == want.size(), "row count != 24");
  for (std::size_t n = 0; n < want.size() && n < table.rows.size(); ++n) {
    c.expect(table.rows[n].word == want[n].word,
             "word mismatch at row " + std::to_string(n + 1));
    c.expect(table.rows[n].gammas == golden_a3::tuple_of(want[n]),
             "tuple mismatch at row " + std::to_string(n + 1));
  }

  std::string out;
  const int code = run_cli(cli, "table A3 --format json", &out);
  c.expect(code == 0, "CLI exit code " + std::to_string(code));
  if (code == 0) {
    const SpecialRootTable parsed = parse_table_json(out);
    c.expect(parsed.rows.size() == want.size(), "CLI row count != 24");
    for (std::size_t n = 0; n < want.size() && n < parsed.rows.size(); ++n) {
      c.expect(parsed.rows[n].word == want[n].word,
               "CLI word mismatch at row " + std::to_string(n + 1));
      c.expect(parsed.rows[n].gammas == golden_a3::tuple_of(want[n]),
               "CLI tuple mismatch at row " + std::to_string(n + 1));
    }
  }
}

void conjecture1_suite(Checker& c) {
  // The criterion demands both halves of the claim — equal sizes and
  // disjointness — for every type and index. Both have counterexamples, so
  // this criterion is expected to stay red; the note lists every violation.
  std::string size_bad;
  std::string overlap_bad;
  for (const LieType& t : support::gamma_suite()) {
    const Conjecture1Report report = verify_conjecture1(t);
    for (const Conjecture1Entry& e : report.entries) {
      if (!e.sizes_match)
        size_bad += " " + t.name() + ":i" + std::to_string(e.index) + "(" +
                    std::to_string(e.gamma_count) + " vs " + std::to_string(e.orbit_count) + ")";
      if (!e.disjoint) overlap_bad += " " + t.name() + ":i" + std::to_string(e.index);
    }
  }
  std::string msg;
  if (!size_bad.empty()) msg += "size claim fails at" + size_bad + ";";
  if (!overlap_bad.empty()) {
    if (!msg.empty()) msg += " ";
    msg += "orbit meets gamma set at" + overlap_bad;
  }
  c.expect(size_bad.empty() && overlap_bad.empty(), msg);
}

void conjecture2_suite(Checker& c) {
  const std::map<std::string, std::size_t> expected = {
      {"A1", 2}, {"A2", 6}, {"A3", 24}, {"B2", 8}, {"G2", 12}, {"B3", 48}};
  std::string counts;
  for (const LieType& t : support::tuple_suite()) {
    const Conjecture2Report report = verify_conjecture2(t);
    const std::size_t want = expected.at(t.name());
    c.expect(report.group_order == want, describe(t, "group order != expected"));
    c.expect(report.distinct_weyl_tuples == want, describe(t, "image not full-size"));
    c.expect(report.gram_tuple_count == want, describe(t, "solver count != expected"));
    c.expect(report.membership_ok, describe(t, "tuple outside gamma sets"));
    c.expect(report.injective, describe(t, "element -> tuple not injective"));
    c.expect(report.sets_equal(), describe(t, "solver set != group image"));
    if (!counts.empty()) counts += ",";
    counts += std::to_string(report.gram_tuple_count);
  }
  c.info = "counts " + counts;
}

void tuple_membership(Checker& c) {
  for (const LieType& t : support::tuple_suite()) {
    const CartanData cd = build_cartan(t);
    std::vector<GammaSet> sets;
    for (int i = 1; i <= t.rank; ++i) sets.push_back(gamma_set(i, cd));
    const WeylGroup g = enumerate_group(cd);
    for (std::size_t n = 0; n < g.elements.size(); ++n) {
      const std::vector<RootVector> tuple = special_roots_of(g.elements[n], cd);
      for (int i = 1; i <= t.rank; ++i)
        c.expect(sets[static_cast<std::size_t>(i - 1)].contains(
                     tuple[static_cast<std::size_t>(i - 1)]),
                 describe(t, "element " + std::to_string(n + 1) + " index " + std::to_string(i) +
                                 " escapes its gamma set"));
    }
  }
}

void closed_forms(Checker& c) {
  for (int r = 1; r <= 6; ++r) {
    const ATableReport report = verify_atype_closed_forms(r);
    for (const ATableEntry& e : report.entries) {
      const std::string at = "A" + std::to_string(r) + " k=" + std::to_string(e.k) + ": ";
      c.expect(e.members_distinct, at + "closed-form members collide");
      c.expect(e.sets_agree, at + "constructions disagree");
      c.expect(e.identity_ok, at + "counting identity off (" + e.identity_lhs.get_str() + " vs " +
                                  e.identity_rhs.get_str() + ")");
      c.expect(e.duality_ok, at + "index-reversal duality broken");
    }
  }
}

void group_orders(Checker& c) {
  for (const LieType& t : support::gamma_suite()) {
    const WeylGroup g = enumerate_group(t);
    c.expect(BigInt(static_cast<unsigned long>(g.size())) == group_order(t),
             describe(t, "enumerated size != closed-form order"));
  }
}

void property_suite(Checker& c) {
  std::mt19937_64 rng(kPropertySeed);

  for (const LieType& t : support::tuple_suite()) {
    const CartanData cd = build_cartan(t);
    const int r = t.rank;

    // Form invariance: (w x, w y) = (x, y) for random words and vector pairs.
    for (int s = 0; s < kPropertySamples; ++s) {
      const WeylWord w = support::random_word(rng, r);
      const WeightVector x = support::random_weight(rng, r);
      const WeightVector y = support::random_weight(rng, r);
      const RootVector a = support::random_root(rng, r);
      const RootVector b = support::random_root(rng, r);
      c.expect(sym_product(apply_word(w, x, cd), apply_word(w, y, cd), cd) ==
                   sym_product(x, y, cd),
               describe(t, "weight-pair form invariance broken"));
      c.expect(sym_product(apply_word(w, a, cd), apply_word(w, b, cd), cd) ==
                   sym_product(a, b, cd),
               describe(t, "root-pair form invariance broken"));
      c.expect(sym_product(apply_word(w, a, cd), apply_word(w, x, cd), cd) ==
                   sym_product(a, x, cd),
               describe(t, "mixed-pair form invariance broken"));
    }

    // sigma_i sigma_i = 1 and (sigma_i sigma_j)^m = 1 with m the braid order.
    for (int i = 1; i <= r; ++i)
      for (int s = 0; s < 30; ++s) {
        const WeightVector v = support::random_weight(rng, r);
        c.expect(apply_word({i, i}, v, cd) == v, describe(t, "reflection not an involution"));
      }
    for (int i = 1; i <= r; ++i)
      for (int j = i + 1; j <= r; ++j) {
        const int m = braid_order(i, j, cd);
        WeylWord braid;
        for (int s = 0; s < m; ++s) {
          braid.push_back(i);
          braid.push_back(j);
        }
        for (int s = 0; s < 30; ++s) {
          const WeightVector v = support::random_weight(rng, r);
          c.expect(apply_word(braid, v, cd) == v, describe(t, "braid relation broken"));
        }
      }

    // Norm preservation: every table row satisfies
    // (lambda_i - gamma(i), lambda_i - gamma(i)) = (lambda_i, lambda_i).
    const SpecialRootTable table = build_special_root_table(enumerate_group(cd));
    for (const TableRow& row : table.rows)
      for (int i = 1; i <= r; ++i) {
        std::vector<Rational> shifted = root_coords(fundamental_weight(i, cd), cd);
        const RootVector& g = row.gammas[static_cast<std::size_t>(i - 1)];
        for (int k = 0; k < r; ++k)
          shifted[static_cast<std::size_t>(k)] -= to_rational(g.coeffs[static_cast<std::size_t>(k)]);
        c.expect(sym_product(shifted, shifted, cd) ==
                     sym_product(fundamental_weight(i, cd), fundamental_weight(i, cd), cd),
                 describe(t, "row " + std::to_string(row.index) + " index " + std::to_string(i) +
                                 " changes the norm"));
      }
  }

  // Integer pair condition == rational Gram expansion, on random tuples.
  const std::vector<LieType> suite = support::tuple_suite();
  for (int s = 0; s < kPropertySamples; ++s) {
    const LieType t = suite[static_cast<std::size_t>(s) % suite.size()];
    const CartanData cd = build_cartan(t);
    const int r = t.rank;
    std::uniform_int_distribution<int> pick(1, r);
    const int i = pick(rng);
    const int j = pick(rng);
    const RootVector gi = support::random_root(rng, r, 0, 3);
    const RootVector gj = support::random_root(rng, r, 0, 3);

    std::vector<Rational> li = root_coords(fundamental_weight(i, cd), cd);
    std::vector<Rational> lj = root_coords(fundamental_weight(j, cd), cd);
    for (int k = 0; k < r; ++k) {
      li[static_cast<std::size_t>(k)] -= to_rational(gi.coeffs[static_cast<std::size_t>(k)]);
      lj[static_cast<std::size_t>(k)] -= to_rational(gj.coeffs[static_cast<std::size_t>(k)]);
    }
    const bool rational_way =
        sym_product(li, lj, cd) ==
        sym_product(fundamental_weight(i, cd), fundamental_weight(j, cd), cd);
    c.expect(gram_pair_holds(i, gi, j, gj, cd) == rational_way,
             describe(t, "integer pair condition disagrees with the Gram expansion"));
  }
}

void level_audit(Checker& c) {
  const CartanData cd = build_cartan(LieType{Family::A, 3});
  const SpecialRootTable table = build_special_root_table(enumerate_group(cd));
  const LevelAudit audit = level_formula_audit(table, cd);

  c.expect(audit.rows_checked == 24, "audit did not cover all 24 rows");
  c.expect(audit.level_pass + audit.level_fail == audit.rows_checked, "tally does not add up");
  c.expect(audit.gram_all_ok, "pair condition broken on some row");
  c.info = "level formula " + std::to_string(audit.level_pass) + " pass / " +
           std::to_string(audit.level_fail) + " fail over " + std::to_string(audit.rows_checked) +
           " rows; pair condition holds on every row";
}

void cache_determinism(Checker& c, const std::string& cli) {
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "specroots_accept_cache";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);

  const std::string args = "table A3 --format json --cache-dir \"" + dir.string() + "\"";
  std::string cold;
  std::string warm;
  const int code_cold = run_cli(cli, args, &cold);
  const int code_warm = run_cli(cli, args, &warm);
  std::filesystem::remove_all(dir);

  c.expect(code_cold == 0, "cold run exit code " + std::to_string(code_cold));
  c.expect(code_warm == 0, "warm run exit code " + std::to_string(code_warm));
  c.expect(!cold.empty(), "cold run produced no output");
  c.expect(cold == warm, "warm-cache output differs from cold output");
  if (code_cold == 0) {
    const SpecialRootTable parsed = parse_table_json(cold);
    c.expect(parsed.rows.size() == 24, "cached CLI table row count != 24");
  }
}

struct Criterion {
  int id;
  const char* label;
  double budget_seconds;  // kUntimed = no wall-clock bound
  std::function<void(Checker&)> body;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <path-to-specroots-cli>\n", argv[0]);
    return 2;
  }
  const std::string cli = argv[1];

  const std::vector<Criterion> criteria = {
      {1, "golden A3 table (library + CLI JSON)", kGoldenTableBudgetSeconds,
       [&cli](Checker& c) { golden_table(c, cli); }},
      {2, "gamma/orbit size and disjointness suite", kConjecture1BudgetSeconds, conjecture1_suite},
      {3, "tuple solver equals group image", kConjecture2BudgetSeconds, conjecture2_suite},
      {4, "every element's tuple stays in its gamma sets", kUntimed, tuple_membership},
      {5, "A-series closed forms up to rank 6", kClosedFormBudgetSeconds, closed_forms},
      {6, "enumerated group sizes match closed-form orders", kGroupOrderBudgetSeconds,
       group_orders},
      {7, "algebraic property suite (1000 samples per type)", kUntimed, property_suite},
      {8, "level-formula audit on A3", kUntimed, level_audit},
      {9, "cache determinism of CLI table output", kUntimed,
       [&cli](Checker& c) { cache_determinism(c, cli); }},
  };

  int failures = 0;
  for (const Criterion& cr : criteria) {
    Checker c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.body(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("unexpected exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (cr.budget_seconds > 0 && secs > cr.budget_seconds)
      c.expect(false, "exceeded " + std::to_string(cr.budget_seconds) + " s budget");

    std::string extra;
    if (!c.ok)
      extra = " — " + c.note;
    else if (!c.info.empty())
      extra = " — " + c.info;
    std::printf("[%s] criterion %d: %s (%.3f s)%s\n", c.ok ? "PASS" : "FAIL", cr.id, cr.label,
                secs, extra.c_str());
    std::fflush(stdout);
    if (!c.ok) ++failures;
  }

  std::printf("acceptance: %zu/%zu criteria passed\n", criteria.size() - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
