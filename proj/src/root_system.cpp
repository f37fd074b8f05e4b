#include "specroots/root_system.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace specroots {

namespace {

void check_letter(int i, const CartanData& cd) {
  if (i < 1 || i > cd.rank())
    throw std::invalid_argument("simple reflection index " + std::to_string(i) + " out of range 1.." +
                                std::to_string(cd.rank()));
}

}  // namespace

RootVector reflect_root(int i, const RootVector& v, const CartanData& cd) {
  check_letter(i, cd);
  if (v.rank() != static_cast<std::size_t>(cd.rank()))
    throw std::invalid_argument("reflect_root: dimension mismatch");
  const int r = cd.rank();
  Int pair = 0;  // <v, alpha_i^vee> = sum_a m_a C_{ai}
  for (int a = 0; a < r; ++a) pair += v.coeffs[a] * cd.cartan_at(a, i - 1);
  RootVector out = v;
  out.coeffs[i - 1] -= pair;
  return out;
}

WeightVector reflect_weight(int i, const WeightVector& v, const CartanData& cd) {
  check_letter(i, cd);
  if (v.rank() != static_cast<std::size_t>(cd.rank()))
    throw std::invalid_argument("reflect_weight: dimension mismatch");
  const int r = cd.rank();
  const Int ai = v.labels[i - 1];
  WeightVector out = v;
  if (ai == 0) return out;
  for (int k = 0; k < r; ++k) out.labels[k] -= ai * cd.cartan_at(i - 1, k);
  return out;
}

std::size_t positive_root_count(LieType t) {
  validate(t);
  const std::size_t r = static_cast<std::size_t>(t.rank);
  switch (t.family) {
    case Family::A:
      return r * (r + 1) / 2;
    case Family::B:
    case Family::C:
      return r * r;
    case Family::D:
      return r * (r - 1);
    case Family::E:
      return t.rank == 6 ? 36 : (t.rank == 7 ? 63 : 120);
    case Family::F:
      return 24;
    case Family::G:
      return 6;
  }
  throw std::logic_error("unhandled family");
}

RootSystem build_root_system(const CartanData& cd) {
  const int r = cd.rank();
  // Orbit of the simple roots under all simple reflections; every root is
  // conjugate to a simple root, so this closure is the full root system.
  std::set<RootVector> seen;
  std::vector<RootVector> frontier;
  for (int a = 0; a < r; ++a) {
    RootVector e = RootVector::zero(r);
    e.coeffs[a] = 1;
    seen.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<RootVector> next;
    for (const RootVector& v : frontier) {
      for (int i = 1; i <= r; ++i) {
        RootVector w = reflect_root(i, v, cd);
        if (seen.insert(w).second) next.push_back(w);
      }
    }
    frontier = std::move(next);
  }

  RootSystem rs;
  rs.cartan = cd;
  for (const RootVector& v : seen) {
    const bool nonneg = std::all_of(v.coeffs.begin(), v.coeffs.end(), [](Int c) { return c >= 0; });
    if (nonneg && !v.is_zero()) rs.positive_roots.push_back(v);
  }
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end());

  if (rs.positive_roots.size() != positive_root_count(cd.lie_type))
    throw std::logic_error("positive root enumeration mismatch for " + cd.lie_type.name());
  return rs;
}

RootSystem build_root_system(LieType t) { return build_root_system(build_cartan(t)); }

}  // namespace specroots
