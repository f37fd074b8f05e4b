#include "specroots/weyl.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace specroots {

bool shortlex_less(const WeylWord& a, const WeylWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

WeightVector apply_word(const WeylWord& w, const WeightVector& v, const CartanData& cd) {
  WeightVector out = v;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = reflect_weight(*it, out, cd);
  return out;
}

RootVector apply_word(const WeylWord& w, const RootVector& v, const CartanData& cd) {
  RootVector out = v;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = reflect_root(*it, out, cd);
  return out;
}

std::vector<WeightVector> orbit(const WeightVector& v, const CartanData& cd) {
  std::set<WeightVector> seen{v};
  std::vector<WeightVector> frontier{v};
  while (!frontier.empty()) {
    std::vector<WeightVector> next;
    for (const WeightVector& x : frontier)
      for (int i = 1; i <= cd.rank(); ++i) {
        WeightVector y = reflect_weight(i, x, cd);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return std::vector<WeightVector>(seen.begin(), seen.end());
}

BigInt group_order(LieType t) {
  validate(t);
  const unsigned long r = static_cast<unsigned long>(t.rank);
  BigInt n;
  switch (t.family) {
    case Family::A:
      mpz_fac_ui(n.get_mpz_t(), r + 1);
      return n;
    case Family::B:
    case Family::C:
      mpz_fac_ui(n.get_mpz_t(), r);
      mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), r);
      return n;
    case Family::D:
      mpz_fac_ui(n.get_mpz_t(), r);
      mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), r - 1);
      return n;
    case Family::E:
      return BigInt(t.rank == 6 ? 51840L : (t.rank == 7 ? 2903040L : 696729600L));
    case Family::F:
      return BigInt(1152);
    case Family::G:
      return BigInt(12);
  }
  throw std::logic_error("unhandled family");
}

int braid_order(int i, int j, const CartanData& cd) {
  if (i < 1 || i > cd.rank() || j < 1 || j > cd.rank())
    throw std::invalid_argument("braid_order: index out of range");
  if (i == j) return 1;
  const Int prod = cd.cartan_at(i - 1, j - 1) * cd.cartan_at(j - 1, i - 1);
  switch (prod) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
  }
  throw std::logic_error("non-crystallographic Cartan product");
}

WeylGroup enumerate_group(const CartanData& cd, std::size_t max_elements) {
  const BigInt required = group_order(cd.lie_type);
  if (required > static_cast<unsigned long>(max_elements))
    throw CapExceeded("Weyl group of " + cd.lie_type.name() + " has order " + required.get_str() +
                      ", above the enumeration cap " + std::to_string(max_elements) +
                      "; raise the cap to at least " + required.get_str());

  const int r = cd.rank();
  // Each element is identified by its action matrix: row k holds the Dynkin
  // labels of w(lambda_{k+1}). Right multiplication by sigma_i replaces
  // row i with row_i - sum_k C_{ik} row_k and leaves the rest alone.
  using ActionMatrix = std::vector<Int>;
  ActionMatrix identity(static_cast<std::size_t>(r) * r, 0);
  for (int k = 0; k < r; ++k) identity[static_cast<std::size_t>(k) * r + k] = 1;

  WeylGroup g;
  g.cartan = cd;
  g.elements.push_back({});
  std::map<ActionMatrix, std::size_t> index_of{{identity, 0}};
  std::vector<ActionMatrix> matrices{identity};

  // BFS with letters tried in increasing order discovers each element first
  // through its ShortLex normal form (the normal-form language is
  // prefix-closed, and candidates of equal length arrive in lex order).
  for (std::size_t head = 0; head < g.elements.size(); ++head) {
    const ActionMatrix parent = matrices[head];
    for (int i = 1; i <= r; ++i) {
      ActionMatrix child = parent;
      for (int c = 0; c < r; ++c) {
        Int s = 0;
        for (int k = 0; k < r; ++k)
          s += cd.cartan_at(i - 1, k) * parent[static_cast<std::size_t>(k) * r + c];
        child[static_cast<std::size_t>(i - 1) * r + c] -= s;
      }
      if (index_of.emplace(child, g.elements.size()).second) {
        WeylWord w = g.elements[head];
        w.push_back(i);
        g.elements.push_back(std::move(w));
        matrices.push_back(std::move(child));
      }
    }
  }

  if (BigInt(static_cast<unsigned long>(g.elements.size())) != required)
    throw std::logic_error("Weyl enumeration for " + cd.lie_type.name() + " found " +
                           std::to_string(g.elements.size()) + " elements, expected " +
                           required.get_str());
  return g;
}

WeylGroup enumerate_group(LieType t, std::size_t max_elements) {
  return enumerate_group(build_cartan(t), max_elements);
}

}  // namespace specroots
