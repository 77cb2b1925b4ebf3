#include <algorithm>
#include <numeric>

#include "hck/parallel.hpp"
#include "hck/whitehead.hpp"
#include "whitehead_internal.hpp"

namespace hck::wh {

namespace {

using Row = std::vector<Integer>;

struct Indexed {
  const FinAbGroup& a;
  std::uint64_t n;
  std::vector<Element> elems;

  explicit Indexed(const FinAbGroup& g) : a(g), n(g.order()) {
    for (std::uint64_t i = 0; i < n; ++i) elems.push_back(a.element_at(i));
  }
  std::uint64_t sum(std::uint64_t x, std::uint64_t y) const { return a.index_of(a.add(elems[x], elems[y])); }
  std::uint64_t neg(std::uint64_t x) const { return a.index_of(a.neg(elems[x])); }
};

bool is_zero(const Row& r) {
  return std::all_of(r.begin(), r.end(), [](const Integer& x) { return x == 0; });
}

std::uint64_t element_order(const FinAbGroup& a, const Element& x) {
  std::uint64_t k = 1;
  for (Element y = x; y != a.zero(); y = a.add(y, x)) ++k;
  return k;
}

// γ(a+b+c) + γ(a) + γ(b) + γ(c) − γ(a+b) − γ(b+c) − γ(c+a) for triple t.
Row cube_row(const Indexed& g, std::uint64_t t) {
  const std::uint64_t n = g.n;
  const std::uint64_t a = t / (n * n), b = (t / n) % n, c = t % n;
  const std::uint64_t ab = g.sum(a, b), bc = g.sum(b, c), ca = g.sum(c, a), abc = g.sum(ab, c);
  Row r(n, 0);
  r[abc] += 1;
  r[a] += 1;
  r[b] += 1;
  r[c] += 1;
  r[ab] -= 1;
  r[bc] -= 1;
  r[ca] -= 1;
  return r;
}

std::vector<Row> simple_rows(const Indexed& g) {
  std::vector<Row> rows;
  for (std::uint64_t a = 0; a < g.n; ++a) {
    // γ(−a) = γ(a), and the order relation ord(a)² γ(a) = 0.
    Row even(g.n, 0);
    even[a] += 1;
    even[g.neg(a)] -= 1;
    if (!is_zero(even)) rows.push_back(std::move(even));
    const auto o = element_order(g.a, g.elems[a]);
    Row ord(g.n, 0);
    ord[a] = static_cast<unsigned long>(o * o);
    rows.push_back(std::move(ord));
  }
  return rows;
}

void check_bound(const FinAbGroup& a, std::uint64_t bound) {
  if (!a.is_finite()) throw InvalidInput("the presentation of Γ needs a finite group, got " + a.to_string());
  if (a.order() > bound)
    throw BudgetExceeded("|A| = " + std::to_string(a.order()) + " exceeds the bound " + std::to_string(bound));
}

GammaPresentation finish(const FinAbGroup& a, const std::vector<Row>& rows) {
  const std::uint64_t n = a.order();
  const Cokernel ck = cokernel(rows, n);
  GammaPresentation out;
  out.gamma = ck.group;
  out.generators = n;
  out.relations = rows.size();
  out.smith_verified = ck.smith.verified;
  out.section = ck.section;
  for (std::uint64_t x = 0; x < n; ++x) {
    Row e(n, 0);
    e[x] = 1;
    out.universal.push_back(ck.image_of(e));
  }
  return out;
}

// c · x for a possibly large c, reduced by the exponent of a finite group.
Element scale_big(const FinAbGroup& g, Integer c, const Element& x) {
  if (g.is_finite()) {
    Integer e = 1;
    for (auto d : g.factors) mpz_lcm(e.get_mpz_t(), e.get_mpz_t(), Integer(d).get_mpz_t());
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), e.get_mpz_t());
  }
  if (!c.fits_slong_p()) throw InvalidInput("coefficient " + c.get_str() + " is out of range");
  return g.scale(c.get_si(), x);
}

Element add_all(const FinAbGroup& g, const std::vector<Element>& xs) {
  Element acc = g.zero();
  for (const auto& x : xs) acc = g.add(acc, x);
  return acc;
}

}  // namespace

std::vector<std::vector<Integer>> gamma_relations_serial(const FinAbGroup& a) {
  const Indexed g(a);
  auto rows = simple_rows(g);
  for (std::uint64_t t = 0; t < g.n * g.n * g.n; ++t) {
    Row r = cube_row(g, t);
    if (!is_zero(r)) rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<std::vector<Integer>> gamma_relations(const FinAbGroup& a) {
  const Indexed g(a);
  auto rows = simple_rows(g);
  auto cubes = par::map_indexed<Row>(static_cast<std::int64_t>(g.n * g.n * g.n),
                                     [&](std::int64_t t) { return cube_row(g, static_cast<std::uint64_t>(t)); });
  for (auto& r : cubes)
    if (!is_zero(r)) rows.push_back(std::move(r));
  return rows;
}

GammaPresentation gamma_presentation(const FinAbGroup& a, std::uint64_t bound) {
  check_bound(a, bound);
  return finish(a, gamma_relations(a));
}

GammaPresentation gamma_presentation_serial(const FinAbGroup& a, std::uint64_t bound) {
  check_bound(a, bound);
  return finish(a, gamma_relations_serial(a));
}

FinAbGroup gamma_structure(const FinAbGroup& a) {
  std::vector<std::int64_t> pieces = a.factors;
  pieces.insert(pieces.end(), a.free_rank, 0);
  std::vector<Integer> orders;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const std::int64_t n = pieces[i];
    orders.emplace_back(n % 2 == 0 && n != 0 ? 2 * n : n);
    for (std::size_t j = i + 1; j < pieces.size(); ++j) orders.emplace_back(std::gcd(n, pieces[j]));
  }
  return canonical_group(orders);
}

// ---- quadratic maps ------------------------------------------------------------

QuadraticVerdict is_quadratic(const QuadMapTable& f) {
  QuadraticVerdict v;
  const FinAbGroup& a = f.domain;
  const FinAbGroup& b = f.codomain;
  if (!a.is_finite() || f.table.size() != a.order()) {
    v.witness = QuadraticWitness{"shape", {}, "the table must list one value per element of a finite domain"};
    return v;
  }
  for (const auto& y : f.table)
    if (!b.contains(y)) {
      v.witness = QuadraticWitness{"shape", {y}, "value outside the codomain"};
      return v;
    }
  const Indexed g(a);
  for (std::uint64_t x = 0; x < g.n; ++x)
    if (f.table[x] != f.table[g.neg(x)]) {
      v.witness = QuadraticWitness{"even", {g.elems[x]}, "f(a) != f(-a)"};
      return v;
    }
  auto cube_fails = [&](std::int64_t t) {
    const auto u = static_cast<std::uint64_t>(t);
    const std::uint64_t x = u / (g.n * g.n), y = (u / g.n) % g.n, z = u % g.n;
    const std::uint64_t xy = g.sum(x, y), yz = g.sum(y, z), zx = g.sum(z, x), xyz = g.sum(xy, z);
    return add_all(b, {f.table[xyz], f.table[x], f.table[y], f.table[z]}) !=
           add_all(b, {f.table[xy], f.table[yz], f.table[zx]});
  };
  const auto bad = par::find_first(static_cast<std::int64_t>(g.n * g.n * g.n), cube_fails);
  if (bad >= 0) {
    const auto u = static_cast<std::uint64_t>(bad);
    v.witness = QuadraticWitness{"cube",
                                 {g.elems[u / (g.n * g.n)], g.elems[(u / g.n) % g.n], g.elems[u % g.n]},
                                 "f(a+b+c) + f(a) + f(b) + f(c) != f(a+b) + f(b+c) + f(c+a)"};
    return v;
  }
  v.quadratic = true;
  return v;
}

QuadMapTable universal_map(const FinAbGroup& a) {
  auto gp = gamma_presentation(a, std::max<std::uint64_t>(16, a.order()));
  return QuadMapTable{a, gp.gamma, gp.universal};
}

InducedHom induced_hom(const QuadMapTable& f) {
  const auto verdict = is_quadratic(f);
  if (!verdict.quadratic) throw NotQuadratic("the map is not quadratic (" + verdict.witness->law + ")", *verdict.witness);
  InducedHom out;
  out.gamma = gamma_presentation(f.domain, std::max<std::uint64_t>(16, f.domain.order()));
  const FinAbGroup& b = f.codomain;
  const std::uint64_t n = f.domain.order();
  out.hom = Hom{out.gamma.gamma, b, {}};
  // Generator i of Γ is Σ_a section(i, a) γ(a), so it must go to Σ section(i, a) f(a).
  for (std::size_t i = 0; i < out.gamma.gamma.rank(); ++i) {
    Element acc = b.zero();
    for (std::uint64_t x = 0; x < n; ++x) {
      const Integer& c = out.gamma.section(i, x);
      if (c != 0) acc = b.add(acc, scale_big(b, c, f.table[x]));
    }
    out.hom.images.push_back(acc);
  }
  out.reproduces = out.hom.well_defined();
  for (std::uint64_t x = 0; x < n && out.reproduces; ++x) out.reproduces = out.hom(out.gamma.universal[x]) == f.table[x];
  // Every canonical generator is a combination of the γ(a), so a homomorphism
  // is fixed by its values on them.
  out.unique = true;
  const FinAbGroup& g = out.gamma.gamma;
  for (std::size_t i = 0; i < g.rank() && out.unique; ++i) {
    Element acc = g.zero();
    for (std::uint64_t x = 0; x < n; ++x) {
      const Integer& c = out.gamma.section(i, x);
      if (c != 0) acc = g.add(acc, scale_big(g, c, out.gamma.universal[x]));
    }
    Element e = g.zero();
    e[i] = 1;
    out.unique = acc == g.normalize(e);
  }
  out.certificate = out.unique ? "each generator of " + g.to_string() + " is an explicit combination of the γ(a)"
                               : "generator expansion failed";
  return out;
}

// ---- 3-types ------------------------------------------------------------------------

ThreeTypeData sphere_type() { return ThreeTypeData{integers(), integers(), {}, Element{1}}; }

ThreeTypeData projective_plane_type() { return ThreeTypeData{integers(), FinAbGroup{}, {}, Element{}}; }

Hom gamma_to_pi3(const ThreeTypeData& t) {
  if (t.pi2 == integers()) {
    if (!t.q_one || !t.pi3.contains(*t.q_one)) throw InvalidInput("π₂ = Z needs q(1) in π₃");
    // Γ(Z) = Z on γ(1), and q(n) = n² q(1).
    return Hom{integers(), t.pi3, {*t.q_one}};
  }
  if (!t.pi2.is_finite()) throw InvalidInput("π₂ must be finite or Z, got " + t.pi2.to_string());
  if (!(t.q.domain == t.pi2) || !(t.q.codomain == t.pi3)) throw InvalidInput("q must map π₂ to π₃");
  return induced_hom(t.q).hom;
}

ExactSequence certain_exact_sequence(const ThreeTypeData& t) {
  ExactSequence s;
  s.map = gamma_to_pi3(t);
  s.gamma = s.map.src;
  s.h4 = kernel(s.map);
  s.h3 = cokernel(s.map);
  return s;
}

bool lift_obstruction(const ThreeTypeData& t, const Element& s) {
  if (!t.pi2.contains(s)) throw InvalidInput("element out of range for π₂ = " + t.pi2.to_string());
  if (t.pi2 == integers()) {
    if (!t.q_one) throw InvalidInput("π₂ = Z needs q(1) in π₃");
    return t.pi3.scale(s[0] * s[0], *t.q_one) == t.pi3.zero();
  }
  return t.q(s) == t.pi3.zero();
}

BraidingQ q_from_braiding(const BraidedTwoGroupData& b) {
  const std::uint64_t n = b.a.order();
  if (b.braid.size() != n * n) throw InvalidInput("braid table must have |A|² entries");
  if (b.assoc.size() != n * n * n) throw InvalidInput("assoc table must have |A|³ entries");
  for (const auto& x : b.braid)
    if (!b.b.contains(x)) throw InvalidInput("braid value outside B");
  BraidingQ out;
  out.q = QuadMapTable{b.a, b.b, {}};
  for (std::uint64_t x = 0; x < n; ++x) out.q.table.push_back(b.braid[x * n + x]);
  out.verdict = is_quadratic(out.q);
  return out;
}

}  // namespace hck::wh
