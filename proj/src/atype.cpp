#include "specroots/atype.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "specroots/special.hpp"

namespace specroots {

namespace {

void check_kr(int k, int r) {
  if (r < 1) throw std::invalid_argument("rank must be >= 1, got " + std::to_string(r));
  if (k < 1 || k > r)
    throw std::invalid_argument("index " + std::to_string(k) + " out of range 1.." + std::to_string(r));
}

/// All size-s subsets of {lo, ..., hi}, each ascending, in lexicographic order.
std::vector<std::vector<int>> subsets(int lo, int hi, int s) {
  std::vector<std::vector<int>> out;
  if (s == 0) {
    out.push_back({});
    return out;
  }
  if (hi - lo + 1 < s) return out;
  std::vector<int> idx(static_cast<std::size_t>(s));
  for (int t = 0; t < s; ++t) idx[static_cast<std::size_t>(t)] = lo + t;
  while (true) {
    out.push_back(idx);
    int p = s - 1;
    while (p >= 0 && idx[static_cast<std::size_t>(p)] == hi - (s - 1 - p)) --p;
    if (p < 0) break;
    ++idx[static_cast<std::size_t>(p)];
    for (int t = p + 1; t < s; ++t)
      idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
  }
  return out;
}

}  // namespace

MuBasis mu_basis(int r) {
  if (r < 1) throw std::invalid_argument("rank must be >= 1, got " + std::to_string(r));
  const CartanData cd = build_cartan(LieType{Family::A, r});
  MuBasis mb;
  mb.rank = r;
  std::vector<Rational> cur = root_coords(fundamental_weight(1, cd), cd);
  mb.mu.push_back(cur);
  for (int k = 1; k <= r; ++k) {  // mu_{k+1} = mu_k - alpha_k
    cur[static_cast<std::size_t>(k - 1)] -= 1;
    mb.mu.push_back(cur);
  }
  return mb;
}

BigInt binomial(unsigned long n, unsigned long m) {
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), n, m);
  return b;
}

std::vector<RootVector> diophantine_solutions(int k, int r) {
  check_kr(k, r);
  const Int box = std::min(k, r + 1 - k);
  std::vector<Int> m(static_cast<std::size_t>(r), 0);
  std::vector<RootVector> out;
  while (true) {
    Int squares = 0;
    Int cross = 0;
    for (int i = 0; i < r; ++i) {
      squares += m[static_cast<std::size_t>(i)] * m[static_cast<std::size_t>(i)];
      if (i + 1 < r) cross += m[static_cast<std::size_t>(i)] * m[static_cast<std::size_t>(i + 1)];
    }
    if (squares == cross + m[static_cast<std::size_t>(k - 1)]) out.push_back(RootVector{m});
    int p = 0;
    while (p < r && m[static_cast<std::size_t>(p)] == box) {
      m[static_cast<std::size_t>(p)] = 0;
      ++p;
    }
    if (p == r) break;
    ++m[static_cast<std::size_t>(p)];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PartialGamma> gamma_closed_form(int k, int r) {
  check_kr(k, r);
  const MuBasis mb = mu_basis(r);
  const int smax = std::min(k, r + 1 - k);

  std::vector<PartialGamma> out;
  out.push_back(PartialGamma{k, 0, {RootVector::zero(r)}});
  for (int s = 1; s <= smax; ++s) {
    PartialGamma pg{k, s, {}};
    for (const std::vector<int>& upper : subsets(1, k, s)) {
      for (const std::vector<int>& lower : subsets(k + 1, r + 1, s)) {
        std::vector<Rational> coords(static_cast<std::size_t>(r), Rational(0));
        for (int a : upper)
          for (int c = 0; c < r; ++c)
            coords[static_cast<std::size_t>(c)] += mb.mu[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(c)];
        for (int b : lower)
          for (int c = 0; c < r; ++c)
            coords[static_cast<std::size_t>(c)] -= mb.mu[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(c)];
        RootVector g = RootVector::zero(r);
        for (int c = 0; c < r; ++c) {
          if (!is_integral(coords[static_cast<std::size_t>(c)]))
            throw std::logic_error("closed-form member has a non-integer coordinate");
          g.coeffs[static_cast<std::size_t>(c)] = coords[static_cast<std::size_t>(c)].get_num().get_si();
        }
        pg.members.push_back(std::move(g));
      }
    }
    std::sort(pg.members.begin(), pg.members.end());
    out.push_back(std::move(pg));
  }
  return out;
}

std::pair<BigInt, BigInt> counting_identity(int k, int r) {
  check_kr(k, r);
  BigInt lhs(0);
  for (const PartialGamma& pg : gamma_closed_form(k, r)) {
    std::vector<RootVector> distinct = pg.members;  // already sorted per level
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    lhs += static_cast<unsigned long>(distinct.size());
  }
  return {lhs, binomial(static_cast<unsigned long>(r) + 1, static_cast<unsigned long>(k))};
}

RootVector reverse_coeffs(const RootVector& v) {
  RootVector out = v;
  std::reverse(out.coeffs.begin(), out.coeffs.end());
  return out;
}

bool ATableReport::pass() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const ATableEntry& e) { return e.pass(); });
}

ATableReport verify_atype_closed_forms(int r) {
  if (r < 1) throw std::invalid_argument("rank must be >= 1, got " + std::to_string(r));
  const CartanData cd = build_cartan(LieType{Family::A, r});

  ATableReport report;
  report.rank = r;
  for (int k = 1; k <= r; ++k) {
    ATableEntry e;
    e.k = k;

    std::size_t choices = 0;
    std::vector<RootVector> closed;
    for (const PartialGamma& pg : gamma_closed_form(k, r)) {
      choices += pg.members.size();
      closed.insert(closed.end(), pg.members.begin(), pg.members.end());
    }
    std::sort(closed.begin(), closed.end());
    closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
    e.closed_form_count = closed.size();
    e.members_distinct = closed.size() == choices;

    const std::vector<RootVector> dio = diophantine_solutions(k, r);
    const GammaSet gs = gamma_set(k, cd);
    e.diophantine_count = dio.size();
    e.gamma_count = gs.size();
    e.sets_agree = closed == dio && dio == gs.members;

    const auto [lhs, rhs] = counting_identity(k, r);
    e.identity_lhs = lhs;
    e.identity_rhs = rhs;
    e.identity_ok = lhs == rhs;

    std::vector<RootVector> reversed;
    reversed.reserve(gs.size());
    for (const RootVector& g : gs.members) reversed.push_back(reverse_coeffs(g));
    std::sort(reversed.begin(), reversed.end());
    e.duality_ok = reversed == gamma_set(r + 1 - k, cd).members;

    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace specroots
