#include <algorithm>

#include "hck/bicat.hpp"
#include "hck/parallel.hpp"

namespace hck::bicat {

bool check_zigzag(const FinBicategory& b, const DualityDatum& d) {
  const auto n1 = static_cast<int>(b.n1()), n2 = static_cast<int>(b.n2());
  if (d.f < 0 || d.f >= n1 || d.g < 0 || d.g >= n1 || d.ev < 0 || d.ev >= n2 || d.coev < 0 || d.coev >= n2)
    throw InvalidInput("duality datum refers to a missing cell");
  const int A = b.src1(d.f), B = b.tgt1(d.f);
  if (b.src1(d.g) != B || b.tgt1(d.g) != A)
    throw InvalidInput("'" + b.cells1[static_cast<std::size_t>(d.g)].name + "' does not run opposite to '" +
                       b.cells1[static_cast<std::size_t>(d.f)].name + "'");
  const int fg = b.h1(d.f, d.g), gf = b.h1(d.g, d.f);
  const int ua = b.unit[static_cast<std::size_t>(A)], ub = b.unit[static_cast<std::size_t>(B)];
  if (b.src2(d.ev) != fg || b.tgt2(d.ev) != ub) return false;
  if (b.src2(d.coev) != ua || b.tgt2(d.coev) != gf) return false;

  const int rf_inv = b.inverse(b.r(d.f)), lg_inv = b.inverse(b.l(d.g));
  const int a_fgf = b.a(d.f, d.g, d.f);
  const int a_inv = a_fgf < 0 ? -1 : b.inverse(a_fgf);
  if (rf_inv < 0 || lg_inv < 0 || a_inv < 0) return false;

  int s1 = b.v(b.h2(b.id(d.f), d.coev), rf_inv);
  s1 = b.v(a_inv, s1);
  s1 = b.v(b.h2(d.ev, b.id(d.f)), s1);
  s1 = b.v(b.l(d.f), s1);
  if (s1 != b.id(d.f)) return false;

  int s2 = b.v(b.h2(d.coev, b.id(d.g)), lg_inv);
  s2 = b.v(b.a(d.g, d.f, d.g), s2);
  s2 = b.v(b.h2(b.id(d.g), d.ev), s2);
  s2 = b.v(b.r(d.g), s2);
  return s2 == b.id(d.g);
}

namespace {

struct Candidates {
  std::vector<int> gs;
  std::vector<std::vector<int>> evs, coevs;
  std::vector<std::size_t> offset;  // prefix sums of |ev| * |coev|
  std::size_t total = 0;

  DualityDatum at(int f, std::size_t idx) const {
    std::size_t k = static_cast<std::size_t>(std::upper_bound(offset.begin(), offset.end(), idx) - offset.begin()) - 1;
    const std::size_t local = idx - offset[k];
    const std::size_t nc = coevs[k].size();
    return {f, gs[k], evs[k][local / nc], coevs[k][local % nc]};
  }
};

Candidates right_candidates(const FinBicategory& b, int f, std::size_t budget) {
  if (f < 0 || f >= static_cast<int>(b.n1())) throw InvalidInput("1-cell index out of range");
  const int A = b.src1(f), B = b.tgt1(f);
  Candidates c;
  for (int g : b.hom1(B, A)) {
    c.offset.push_back(c.total);
    c.gs.push_back(g);
    c.evs.push_back(b.hom2(b.h1(f, g), b.unit[static_cast<std::size_t>(B)]));
    c.coevs.push_back(b.hom2(b.unit[static_cast<std::size_t>(A)], b.h1(g, f)));
    c.total += c.evs.back().size() * c.coevs.back().size();
    if (c.total > budget)
      throw BudgetExceeded("dual search for '" + b.cells1[static_cast<std::size_t>(f)].name + "' exceeds " +
                           std::to_string(budget) + " candidates");
  }
  return c;
}

}  // namespace

std::vector<DualityDatum> find_right_duals(const FinBicategory& b, int f, std::size_t budget) {
  const Candidates c = right_candidates(b, f, budget);
  const auto ok = par::map_indexed<char>(static_cast<std::int64_t>(c.total),
                                         [&](std::int64_t i) { return static_cast<char>(check_zigzag(b, c.at(f, static_cast<std::size_t>(i)))); });
  std::vector<DualityDatum> out;
  for (std::size_t i = 0; i < c.total; ++i)
    if (ok[i]) out.push_back(c.at(f, i));
  return out;
}

std::vector<DualityDatum> find_right_duals_serial(const FinBicategory& b, int f, std::size_t budget) {
  const Candidates c = right_candidates(b, f, budget);
  std::vector<DualityDatum> out;
  for (std::size_t i = 0; i < c.total; ++i) {
    auto d = c.at(f, i);
    if (check_zigzag(b, d)) out.push_back(d);
  }
  return out;
}

std::vector<DualityDatum> find_left_duals(const FinBicategory& b, int f, std::size_t budget) {
  if (f < 0 || f >= static_cast<int>(b.n1())) throw InvalidInput("1-cell index out of range");
  const int A = b.src1(f), B = b.tgt1(f);
  std::vector<DualityDatum> out;
  std::size_t tried = 0;
  for (int g : b.hom1(B, A)) {
    const auto evs = b.hom2(b.h1(g, f), b.unit[static_cast<std::size_t>(A)]);
    const auto coevs = b.hom2(b.unit[static_cast<std::size_t>(B)], b.h1(f, g));
    tried += evs.size() * coevs.size();
    if (tried > budget) throw BudgetExceeded("left dual search exceeds " + std::to_string(budget) + " candidates");
    for (int ev : evs)
      for (int coev : coevs) {
        DualityDatum d{g, f, ev, coev};
        if (check_zigzag(b, d)) out.push_back(d);
      }
  }
  return out;
}

bool duals_groupoid_contractible(const FinBicategory& b, int f) {
  const auto data = find_right_duals(b, f);
  for (const auto& d1 : data)
    for (const auto& d2 : data) {
      std::size_t morphisms = 0;
      for (int phi : b.hom2(d1.g, d2.g))
        if (b.v(d2.ev, b.h2(b.id(f), phi)) == d1.ev && b.v(b.h2(phi, b.id(f)), d1.coev) == d2.coev) ++morphisms;
      if (morphisms != 1) return false;
    }
  return true;
}

}  // namespace hck::bicat
