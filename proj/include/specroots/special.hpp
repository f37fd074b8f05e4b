#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "specroots/cartan.hpp"
#include "specroots/lie_type.hpp"
#include "specroots/vectors.hpp"
#include "specroots/weyl.hpp"

namespace specroots {

/// The candidate set Gamma(i)+: all nonnegative root-lattice vectors gamma
/// with (lambda_i, gamma) = (gamma, gamma)/2, zero included. Members are in
/// the canonical height/lex order.
struct GammaSet {
  int index = 0;
  std::vector<RootVector> members;

  std::size_t size() const { return members.size(); }
  bool contains(const RootVector& v) const;
};

GammaSet gamma_set(int i, const CartanData& cd);
GammaSet gamma_set(int i, LieType t);

/// The tuple (lambda_i - w(lambda_i))_{i=1..r} in root coordinates.
std::vector<RootVector> special_roots_of(const WeylWord& w, const CartanData& cd);
std::vector<RootVector> special_roots_of(const WeylWord& w, LieType t);

struct TableRow {
  std::size_t index = 0;  // 1-based position in the enumeration order
  WeylWord word;
  std::vector<RootVector> gammas;
};

struct SpecialRootTable {
  LieType lie_type;
  std::vector<TableRow> rows;
};

/// One row per enumerated element, in the group's ShortLex order.
SpecialRootTable build_special_root_table(const WeylGroup& g);

/// Exact integer check of the pair condition
/// (lambda_i - gi, lambda_j - gj) = (lambda_i, lambda_j), via the equivalent
/// expansion (lambda_i, gj) + (lambda_j, gi) = (gi, gj). Indices 1-based.
bool gram_pair_holds(int i, const RootVector& gi, int j, const RootVector& gj,
                     const CartanData& cd);

using GammaTuple = std::vector<RootVector>;

inline constexpr std::size_t kDefaultTupleBudget = 100'000'000;

/// Independently of the Weyl group: all tuples (g(1),...,g(r)) with
/// g(i) in Gamma(i)+ satisfying the pair condition for every i <= j, found by
/// depth-first search with pairwise pruning. Sorted lexicographically.
/// Throws CapExceeded when the Cartesian product of the Gamma sets is larger
/// than the budget.
std::vector<GammaTuple> solve_gram_tuples(const CartanData& cd,
                                          std::size_t budget = kDefaultTupleBudget);
std::vector<GammaTuple> solve_gram_tuples(LieType t, std::size_t budget = kDefaultTupleBudget);

struct Conjecture1Entry {
  int index = 0;
  std::size_t gamma_count = 0;
  std::size_t orbit_count = 0;
  bool sizes_match = false;
  bool disjoint = false;
  std::vector<WeightVector> overlap;  // witnesses, as Dynkin labels

  bool pass() const { return sizes_match && disjoint; }
};

struct Conjecture1Report {
  LieType lie_type;
  std::vector<Conjecture1Entry> entries;

  bool pass() const;
};

/// Per index i: |Gamma(i)+| = |orbit(lambda_i)| and the two sets are
/// disjoint (compared as Dynkin labels). Failures carry witnesses.
Conjecture1Report verify_conjecture1(LieType t);

struct Conjecture2Report {
  LieType lie_type;
  std::size_t group_order = 0;
  std::size_t distinct_weyl_tuples = 0;
  std::size_t gram_tuple_count = 0;
  bool membership_ok = false;
  std::vector<std::size_t> membership_failures;  // 1-based element positions
  bool injective = false;
  std::vector<std::pair<std::size_t, std::size_t>> collisions;  // position pairs
  std::vector<GammaTuple> weyl_only;  // tuples missing from the Gram solver
  std::vector<GammaTuple> gram_only;  // Gram solutions not hit by any element

  bool sets_equal() const { return weyl_only.empty() && gram_only.empty(); }
  bool pass() const { return membership_ok && injective && sets_equal(); }
};

/// Checks that element -> tuple lands in the Gamma sets, is injective, and
/// that its image equals the Gram solver's solution set.
Conjecture2Report verify_conjecture2(const WeylGroup& g, std::size_t budget = kDefaultTupleBudget);
Conjecture2Report verify_conjecture2(LieType t,
                                     std::size_t max_elements = kDefaultEnumerationCap,
                                     std::size_t budget = kDefaultTupleBudget);

struct LevelAuditRow {
  std::size_t index = 0;
  bool level_formula_ok = false;  // (g_i, g_j) = (s_i + s_j)/2 on applicable pairs
  bool gram_ok = false;           // pair condition on all pairs i <= j
};

/// Empirical audit of the level formula (g_i, g_j) = (s_i + s_j)/2, where the
/// level s_i of g in Gamma(i)+ is its i-th root coefficient. Applied to pairs
/// i < j with both levels >= 1; recorded per row, never asserted.
struct LevelAudit {
  LieType lie_type;
  std::size_t rows_checked = 0;
  std::size_t level_pass = 0;
  std::size_t level_fail = 0;
  bool gram_all_ok = false;
  std::vector<LevelAuditRow> rows;
};

LevelAudit level_formula_audit(const SpecialRootTable& table, const CartanData& cd);

}  // namespace specroots
