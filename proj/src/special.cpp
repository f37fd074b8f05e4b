#include "specroots/special.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "specroots/matrix.hpp"
#include "specroots/root_system.hpp"

namespace specroots {

namespace {

bool tuple_less(const GammaTuple& a, const GammaTuple& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const RootVector& x, const RootVector& y) { return x < y; });
}

struct TupleLess {
  bool operator()(const GammaTuple& a, const GammaTuple& b) const { return tuple_less(a, b); }
};

/// L D L^T factorization of the (positive definite) root Gram matrix, used to
/// bound partial quadratic forms during the box search.
struct Ldl {
  RationalMatrix l;
  std::vector<Rational> d;
};

Ldl factor_root_gram(const CartanData& cd) {
  const int r = cd.rank();
  Ldl f{RationalMatrix::identity(r), std::vector<Rational>(r, Rational(0))};
  for (int k = 0; k < r; ++k) {
    Rational dk = to_rational(cd.root_gram_at(k, k));
    for (int t = 0; t < k; ++t) dk -= f.l.at(k, t) * f.l.at(k, t) * f.d[t];
    if (dk <= 0) throw std::logic_error("root Gram matrix is not positive definite");
    f.d[k] = dk;
    for (int j = k + 1; j < r; ++j) {
      Rational v = to_rational(cd.root_gram_at(j, k));
      for (int t = 0; t < k; ++t) v -= f.l.at(j, t) * f.l.at(k, t) * f.d[t];
      f.l.at(j, k) = v / dk;
    }
  }
  return f;
}

Int quad_form(const std::vector<Int>& m, const CartanData& cd) {
  const int r = cd.rank();
  Int s = 0;
  for (int a = 0; a < r; ++a) {
    if (m[a] == 0) continue;
    for (int b = 0; b < r; ++b) s += m[a] * cd.root_gram_at(a, b) * m[b];
  }
  return s;
}

}  // namespace

bool GammaSet::contains(const RootVector& v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

GammaSet gamma_set(int i, const CartanData& cd) {
  if (i < 1 || i > cd.rank())
    throw std::invalid_argument("gamma_set index " + std::to_string(i) + " out of range 1.." +
                                std::to_string(cd.rank()));
  const int r = cd.rank();
  const int ii = i - 1;
  const Rational gii = cd.fundamental_gram.at(ii, ii);

  // Search box. Cauchy-Schwarz applied to (lambda_i, gamma) = (gamma, gamma)/2
  // gives m_i d_i <= 2 (lambda_i, lambda_i); then for every j,
  // m_j d_j = (lambda_j, gamma) <= |lambda_j| |gamma| <= 2 sqrt(G_ii G_jj).
  std::vector<Int> box(r, 0);
  {
    const Rational q = 2 * gii / cd.symmetrizer[ii];
    box[ii] = rational_floor(q).get_si();
  }
  for (int j = 0; j < r; ++j) {
    if (j == ii) continue;
    const Rational rhs = 4 * gii * cd.fundamental_gram.at(j, j);
    Int m = 0;
    while (to_rational((m + 1) * (m + 1) * cd.sym_int[j] * cd.sym_int[j]) <= rhs) ++m;
    box[j] = m;
  }

  const Ldl f = factor_root_gram(cd);
  const Int di = cd.sym_int[ii];

  std::vector<Int> m(r, 0);
  std::vector<RootVector> found;

  // Assign coordinates from the last index down; y_k = m_k + sum_{j>k} L_{jk} m_j
  // depends only on assigned coordinates, so sum_{t>=k} D_t y_t^2 is an exact
  // lower bound for (gamma, gamma) at every node.
  auto descend = [&](auto&& self, int k, const Rational& partial) -> void {
    if (k < 0) {
      if (quad_form(m, cd) == 2 * di * m[ii]) found.push_back(RootVector{m});
      return;
    }
    Rational pre(0);
    for (int j = k + 1; j < r; ++j)
      if (m[j] != 0) pre += f.l.at(j, k) * to_rational(m[j]);
    for (m[k] = 0; m[k] <= box[k]; ++m[k]) {
      const Rational y = pre + to_rational(m[k]);
      const Rational next = partial + f.d[k] * y * y;
      const Rational cap = 2 * to_rational(di) * to_rational(ii >= k ? m[ii] : box[ii]);
      if (next > cap) continue;
      self(self, k - 1, next);
    }
    m[k] = 0;
  };
  descend(descend, r - 1, Rational(0));

  std::sort(found.begin(), found.end());
  return GammaSet{i, std::move(found)};
}

GammaSet gamma_set(int i, LieType t) { return gamma_set(i, build_cartan(t)); }

std::vector<RootVector> special_roots_of(const WeylWord& w, const CartanData& cd) {
  std::vector<RootVector> out;
  out.reserve(static_cast<std::size_t>(cd.rank()));
  for (int i = 1; i <= cd.rank(); ++i) {
    const WeightVector lam = fundamental_weight(i, cd);
    out.push_back(root_lattice_coords(lam - apply_word(w, lam, cd), cd));
  }
  return out;
}

std::vector<RootVector> special_roots_of(const WeylWord& w, LieType t) {
  return special_roots_of(w, build_cartan(t));
}

SpecialRootTable build_special_root_table(const WeylGroup& g) {
  SpecialRootTable table;
  table.lie_type = g.lie_type();
  table.rows.reserve(g.size());
  for (std::size_t a = 0; a < g.size(); ++a)
    table.rows.push_back(TableRow{a + 1, g.elements[a], special_roots_of(g.elements[a], g.cartan)});
  return table;
}

bool gram_pair_holds(int i, const RootVector& gi, int j, const RootVector& gj,
                     const CartanData& cd) {
  // (lambda_i - gi, lambda_j - gj) = (lambda_i, lambda_j) expands to
  // (lambda_i, gj) + (lambda_j, gi) = (gi, gj); with (lambda_k, v) = v_k d_k
  // everything is a plain integer identity.
  const Int lhs = cd.sym_int[i - 1] * gj.coeffs[i - 1] + cd.sym_int[j - 1] * gi.coeffs[j - 1];
  Int rhs = 0;
  const int r = cd.rank();
  for (int a = 0; a < r; ++a) {
    if (gi.coeffs[a] == 0) continue;
    for (int b = 0; b < r; ++b) rhs += gi.coeffs[a] * cd.root_gram_at(a, b) * gj.coeffs[b];
  }
  return lhs == rhs;
}

std::vector<GammaTuple> solve_gram_tuples(const CartanData& cd, std::size_t budget) {
  const int r = cd.rank();
  std::vector<GammaSet> sets;
  sets.reserve(static_cast<std::size_t>(r));
  BigInt product(1);
  for (int i = 1; i <= r; ++i) {
    sets.push_back(gamma_set(i, cd));
    product *= static_cast<unsigned long>(sets.back().size());
  }
  if (product > static_cast<unsigned long>(budget))
    throw CapExceeded("Gram tuple search space for " + cd.lie_type.name() + " has " +
                      product.get_str() + " candidates, above the budget " +
                      std::to_string(budget) + "; raise the budget to at least " +
                      product.get_str());

  std::vector<GammaTuple> out;
  GammaTuple chosen(static_cast<std::size_t>(r), RootVector::zero(r));
  auto descend = [&](auto&& self, int p) -> void {
    if (p == r) {
      out.push_back(chosen);
      return;
    }
    for (const RootVector& cand : sets[static_cast<std::size_t>(p)].members) {
      bool ok = true;
      for (int q = 0; q < p && ok; ++q)
        ok = gram_pair_holds(q + 1, chosen[static_cast<std::size_t>(q)], p + 1, cand, cd);
      if (!ok) continue;
      chosen[static_cast<std::size_t>(p)] = cand;
      self(self, p + 1);
    }
    chosen[static_cast<std::size_t>(p)] = RootVector::zero(r);
  };
  descend(descend, 0);

  std::sort(out.begin(), out.end(), tuple_less);
  return out;
}

std::vector<GammaTuple> solve_gram_tuples(LieType t, std::size_t budget) {
  return solve_gram_tuples(build_cartan(t), budget);
}

bool Conjecture1Report::pass() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const Conjecture1Entry& e) { return e.pass(); });
}

Conjecture1Report verify_conjecture1(LieType t) {
  const CartanData cd = build_cartan(t);
  Conjecture1Report report;
  report.lie_type = t;
  for (int i = 1; i <= cd.rank(); ++i) {
    const GammaSet gs = gamma_set(i, cd);
    const std::vector<WeightVector> orb = orbit(fundamental_weight(i, cd), cd);
    const std::set<WeightVector> orbit_set(orb.begin(), orb.end());

    Conjecture1Entry e;
    e.index = i;
    e.gamma_count = gs.size();
    e.orbit_count = orb.size();
    e.sizes_match = e.gamma_count == e.orbit_count;
    for (const RootVector& g : gs.members) {
      const WeightVector labels = dynkin_labels(g, cd);
      if (orbit_set.count(labels)) e.overlap.push_back(labels);
    }
    e.disjoint = e.overlap.empty();
    report.entries.push_back(std::move(e));
  }
  return report;
}

Conjecture2Report verify_conjecture2(const WeylGroup& g, std::size_t budget) {
  const CartanData& cd = g.cartan;
  const int r = cd.rank();

  std::vector<GammaSet> sets;
  sets.reserve(static_cast<std::size_t>(r));
  for (int i = 1; i <= r; ++i) sets.push_back(gamma_set(i, cd));

  Conjecture2Report report;
  report.lie_type = g.lie_type();
  report.group_order = g.size();

  std::map<GammaTuple, std::size_t, TupleLess> first_seen;
  for (std::size_t a = 0; a < g.size(); ++a) {
    GammaTuple tuple = special_roots_of(g.elements[a], cd);
    bool member = true;
    for (int i = 0; i < r; ++i)
      member = member && sets[static_cast<std::size_t>(i)].contains(tuple[static_cast<std::size_t>(i)]);
    if (!member) report.membership_failures.push_back(a + 1);
    const auto [it, fresh] = first_seen.emplace(std::move(tuple), a + 1);
    if (!fresh) report.collisions.emplace_back(it->second, a + 1);
  }
  report.membership_ok = report.membership_failures.empty();
  report.injective = report.collisions.empty();
  report.distinct_weyl_tuples = first_seen.size();

  const std::vector<GammaTuple> gram = solve_gram_tuples(cd, budget);
  report.gram_tuple_count = gram.size();

  std::vector<GammaTuple> weyl_sorted;
  weyl_sorted.reserve(first_seen.size());
  for (const auto& [tuple, pos] : first_seen) weyl_sorted.push_back(tuple);
  std::set_difference(weyl_sorted.begin(), weyl_sorted.end(), gram.begin(), gram.end(),
                      std::back_inserter(report.weyl_only), tuple_less);
  std::set_difference(gram.begin(), gram.end(), weyl_sorted.begin(), weyl_sorted.end(),
                      std::back_inserter(report.gram_only), tuple_less);
  return report;
}

Conjecture2Report verify_conjecture2(LieType t, std::size_t max_elements, std::size_t budget) {
  return verify_conjecture2(enumerate_group(t, max_elements), budget);
}

LevelAudit level_formula_audit(const SpecialRootTable& table, const CartanData& cd) {
  const int r = cd.rank();
  LevelAudit audit;
  audit.lie_type = table.lie_type;
  audit.gram_all_ok = true;
  for (const TableRow& row : table.rows) {
    LevelAuditRow a;
    a.index = row.index;
    a.level_formula_ok = true;
    a.gram_ok = true;
    for (int i = 0; i < r; ++i) {
      const RootVector& gi = row.gammas[static_cast<std::size_t>(i)];
      const Int si = gi.coeffs[static_cast<std::size_t>(i)];  // level of a Gamma(i)+ member
      for (int j = i; j < r; ++j) {
        const RootVector& gj = row.gammas[static_cast<std::size_t>(j)];
        if (!gram_pair_holds(i + 1, gi, j + 1, gj, cd)) a.gram_ok = false;
        if (j == i) continue;
        const Int sj = gj.coeffs[static_cast<std::size_t>(j)];
        if (si < 1 || sj < 1) continue;
        if (sym_product(gi, gj, cd) != Rational(to_rational(si + sj)) / 2)
          a.level_formula_ok = false;
      }
    }
    ++audit.rows_checked;
    (a.level_formula_ok ? audit.level_pass : audit.level_fail) += 1;
    audit.gram_all_ok = audit.gram_all_ok && a.gram_ok;
    audit.rows.push_back(a);
  }
  return audit;
}

}  // namespace specroots
