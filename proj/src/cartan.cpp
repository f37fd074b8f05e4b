#include "specroots/cartan.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <utility>

namespace specroots {

namespace {

void check_rank(const CartanData& cd, std::size_t n, const char* what) {
  if (n != static_cast<std::size_t>(cd.rank()))
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (expected rank " +
                                std::to_string(cd.rank()) + ", got " + std::to_string(n) + ")");
}

/// Fills the off-diagonal Cartan entries for the Bourbaki numbering of t.
void fill_cartan(const LieType& t, std::vector<Int>& c) {
  const int r = t.rank;
  auto set = [&](int i, int j, Int v) { c[static_cast<std::size_t>(i) * r + j] = v; };
  auto edge = [&](int i, int j) {  // single bond, 0-based
    set(i, j, -1);
    set(j, i, -1);
  };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < r; ++i) edge(i, i + 1);
      break;
    case Family::B:  // node r short
      for (int i = 0; i + 2 < r; ++i) edge(i, i + 1);
      set(r - 2, r - 1, -2);
      set(r - 1, r - 2, -1);
      break;
    case Family::C:  // node r long
      for (int i = 0; i + 2 < r; ++i) edge(i, i + 1);
      set(r - 2, r - 1, -1);
      set(r - 1, r - 2, -2);
      break;
    case Family::D:  // fork: nodes r-1 and r both attach to node r-2
      for (int i = 0; i + 2 < r; ++i) edge(i, i + 1);
      edge(r - 3, r - 1);
      break;
    case Family::E:  // chain 1-3-4-5-6(-7)(-8), node 2 on node 4
      edge(0, 2);
      edge(2, 3);
      edge(1, 3);
      for (int i = 3; i + 1 < r; ++i) edge(i, i + 1);
      break;
    case Family::F:  // nodes 1,2 long; double bond between 2 and 3
      edge(0, 1);
      set(1, 2, -2);
      set(2, 1, -1);
      edge(2, 3);
      break;
    case Family::G:  // node 1 short
      set(0, 1, -1);
      set(1, 0, -3);
      break;
  }
}

/// Symmetrizer d with C_{ij} d_j = C_{ji} d_i, normalized so min(d) = 1.
/// Propagated along the Dynkin diagram, which is connected for every type.
std::vector<Rational> solve_symmetrizer(const std::vector<Int>& c, int r) {
  std::vector<Rational> d(r, Rational(0));
  d[0] = 1;
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    const int i = q.front();
    q.pop();
    for (int j = 0; j < r; ++j) {
      const Int cij = c[static_cast<std::size_t>(i) * r + j];
      if (i == j || cij == 0 || d[j] != 0) continue;
      const Int cji = c[static_cast<std::size_t>(j) * r + i];
      d[j] = d[i] * to_rational(cji) / to_rational(cij);
      q.push(j);
    }
  }
  Rational mn = d[0];
  for (const Rational& x : d) mn = std::min(mn, x);
  for (Rational& x : d) x /= mn;
  return d;
}

}  // namespace

CartanData build_cartan(LieType t) {
  validate(t);
  const int r = t.rank;
  CartanData cd;
  cd.lie_type = t;
  cd.cartan.assign(static_cast<std::size_t>(r) * r, 0);
  for (int i = 0; i < r; ++i) cd.cartan[static_cast<std::size_t>(i) * r + i] = 2;
  fill_cartan(t, cd.cartan);

  cd.symmetrizer = solve_symmetrizer(cd.cartan, r);
  cd.sym_int.resize(r);
  for (int j = 0; j < r; ++j) {
    if (!is_integral(cd.symmetrizer[j]) || cd.symmetrizer[j] <= 0)
      throw std::logic_error("symmetrizer not a positive integer for " + t.name());
    cd.sym_int[j] = cd.symmetrizer[j].get_num().get_si();
  }

  cd.root_gram.resize(static_cast<std::size_t>(r) * r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      cd.root_gram[static_cast<std::size_t>(i) * r + j] = cd.cartan_at(i, j) * cd.sym_int[j];

  RationalMatrix c(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) c.at(i, j) = to_rational(cd.cartan_at(i, j));
  cd.inverse_cartan = c.inverse();

  cd.fundamental_gram = RationalMatrix(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      cd.fundamental_gram.at(i, j) = cd.inverse_cartan.at(i, j) * cd.symmetrizer[j];

  return cd;
}

WeightVector fundamental_weight(int i, const CartanData& cd) {
  if (i < 1 || i > cd.rank())
    throw std::invalid_argument("fundamental weight index " + std::to_string(i) + " out of range 1.." +
                                std::to_string(cd.rank()));
  WeightVector w = WeightVector::zero(cd.rank());
  w.labels[i - 1] = 1;
  return w;
}

WeightVector dynkin_labels(const RootVector& v, const CartanData& cd) {
  check_rank(cd, v.rank(), "dynkin_labels");
  const int r = cd.rank();
  WeightVector out = WeightVector::zero(r);
  for (int k = 0; k < r; ++k) {
    Int s = 0;
    for (int a = 0; a < r; ++a) s += v.coeffs[a] * cd.cartan_at(a, k);
    out.labels[k] = s;
  }
  return out;
}

std::vector<Rational> root_coords(const WeightVector& v, const CartanData& cd) {
  check_rank(cd, v.rank(), "root_coords");
  const int r = cd.rank();
  std::vector<Rational> out(r, Rational(0));
  for (int a = 0; a < r; ++a)
    for (int k = 0; k < r; ++k) out[a] += to_rational(v.labels[k]) * cd.inverse_cartan.at(k, a);
  return out;
}

RootVector root_lattice_coords(const WeightVector& v, const CartanData& cd) {
  std::vector<Rational> x = root_coords(v, cd);
  RootVector out = RootVector::zero(cd.rank());
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (!is_integral(x[a]))
      throw std::domain_error("weight is not in the root lattice (coordinate " + std::to_string(a + 1) +
                              " = " + to_string(x[a]) + ")");
    out.coeffs[a] = x[a].get_num().get_si();
  }
  return out;
}

Rational sym_product(const RootVector& x, const RootVector& y, const CartanData& cd) {
  check_rank(cd, x.rank(), "sym_product");
  check_rank(cd, y.rank(), "sym_product");
  const int r = cd.rank();
  Int s = 0;
  for (int a = 0; a < r; ++a) {
    if (x.coeffs[a] == 0) continue;
    for (int b = 0; b < r; ++b) s += x.coeffs[a] * y.coeffs[b] * cd.root_gram_at(a, b);
  }
  return to_rational(s);
}

// (alpha_a, lambda_k) = delta_{ak} d_a, so the mixed product collapses to a
// single weighted dot product.
Rational sym_product(const RootVector& x, const WeightVector& y, const CartanData& cd) {
  check_rank(cd, x.rank(), "sym_product");
  check_rank(cd, y.rank(), "sym_product");
  Int s = 0;
  for (int a = 0; a < cd.rank(); ++a) s += x.coeffs[a] * y.labels[a] * cd.sym_int[a];
  return to_rational(s);
}

Rational sym_product(const WeightVector& x, const RootVector& y, const CartanData& cd) {
  return sym_product(y, x, cd);
}

Rational sym_product(const std::vector<Rational>& x, const std::vector<Rational>& y,
                     const CartanData& cd) {
  check_rank(cd, x.size(), "sym_product");
  check_rank(cd, y.size(), "sym_product");
  const int r = cd.rank();
  Rational s(0);
  for (int a = 0; a < r; ++a) {
    if (x[static_cast<std::size_t>(a)] == 0) continue;
    for (int b = 0; b < r; ++b)
      s += x[static_cast<std::size_t>(a)] * to_rational(cd.root_gram_at(a, b)) *
           y[static_cast<std::size_t>(b)];
  }
  return s;
}

Rational sym_product(const WeightVector& x, const WeightVector& y, const CartanData& cd) {
  check_rank(cd, x.rank(), "sym_product");
  check_rank(cd, y.rank(), "sym_product");
  const int r = cd.rank();
  Rational s(0);
  for (int i = 0; i < r; ++i) {
    if (x.labels[i] == 0) continue;
    for (int j = 0; j < r; ++j)
      s += to_rational(x.labels[i] * y.labels[j]) * cd.fundamental_gram.at(i, j);
  }
  return s;
}

Rational pairing(const WeightVector& lam, const RootVector& alpha, const CartanData& cd) {
  if (alpha.is_zero()) throw std::invalid_argument("pairing undefined for alpha = 0");
  const Rational num = 2 * sym_product(lam, alpha, cd);
  const Rational den = sym_product(alpha, alpha, cd);
  return num / den;
}

}  // namespace specroots
