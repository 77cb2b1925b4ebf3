#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "hck/parallel.hpp"
#include "hck/whitehead.hpp"

using namespace hck;
using namespace hck::wh;

namespace {

FinAbGroup G(const std::string& s) { return parse_group(s); }

// Determinantal divisors: d_1 ... d_k = gcd of all k x k minors.
long long det(const std::vector<std::vector<long long>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long long acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<long long>> sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<long long> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      sub.push_back(row);
    }
    acc += (j % 2 ? -1 : 1) * m[0][j] * det(sub);
  }
  return acc;
}

long long minor_gcd(const std::vector<std::vector<long long>>& m, std::size_t k) {
  const std::size_t r = m.size(), c = m[0].size();
  long long g = 0;
  std::vector<std::size_t> rows, cols;
  std::function<void(std::size_t, std::size_t)> pick_cols;
  std::function<void(std::size_t)> pick_rows = [&](std::size_t from) {
    if (rows.size() == k) {
      pick_cols(0, 0);
      return;
    }
    for (std::size_t i = from; i < r; ++i) {
      rows.push_back(i);
      pick_rows(i + 1);
      rows.pop_back();
    }
  };
  pick_cols = [&](std::size_t from, std::size_t) {
    if (cols.size() == k) {
      std::vector<std::vector<long long>> sub;
      for (auto i : rows) {
        std::vector<long long> row;
        for (auto j : cols) row.push_back(m[i][j]);
        sub.push_back(row);
      }
      g = std::gcd(g, std::llabs(det(sub)));
      return;
    }
    for (std::size_t j = from; j < c; ++j) {
      cols.push_back(j);
      pick_cols(j + 1, 0);
      cols.pop_back();
    }
  };
  pick_rows(0);
  return g;
}

// Number of partitions of e, for counting abelian p-groups of order p^e.
int partitions(int e, int max_part) {
  if (e == 0) return 1;
  int total = 0;
  for (int p = std::min(e, max_part); p >= 1; --p) total += partitions(e - p, p);
  return total;
}

int abelian_groups_of_order(int n) {
  int count = 1;
  for (int p = 2; n > 1; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    count *= partitions(e, e);
  }
  return count;
}

// Every table A -> B (both finite), enumerated.
void all_tables(const FinAbGroup& a, const FinAbGroup& b, const std::function<void(const QuadMapTable&)>& visit) {
  const std::uint64_t na = a.order(), nb = b.order();
  std::vector<std::uint64_t> pick(na, 0);
  for (;;) {
    QuadMapTable f{a, b, {}};
    for (auto k : pick) f.table.push_back(b.element_at(k));
    visit(f);
    std::size_t pos = 0;
    while (pos < pick.size() && ++pick[pos] == nb) pick[pos++] = 0;
    if (pos == pick.size()) break;
  }
}

QuadMapTable compose(const Hom& h, const QuadMapTable& u) {
  QuadMapTable f{u.domain, h.tgt, {}};
  for (const auto& x : u.table) f.table.push_back(h(x));
  return f;
}

}  // namespace

TEST_CASE("smith normal form examples") {
  const auto s = smith_normal_form(IntMatrix(2, 2, {2, 0, 0, 3}));
  CHECK(s.d == IntMatrix(2, 2, {1, 0, 0, 6}));
  CHECK(s.verified);
  const auto z = smith_normal_form(IntMatrix(2, 3));
  CHECK(z.d == IntMatrix(2, 3));
  CHECK(z.u == IntMatrix::identity(2));
  CHECK(z.v == IntMatrix::identity(3));
  CHECK(smith_normal_form(IntMatrix(1, 1, {2})).d == IntMatrix(1, 1, {2}));
  const auto e = smith_normal_form(IntMatrix(0, 0));
  CHECK(e.verified);
}

TEST_CASE("smith normal form against determinantal divisors") {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    std::vector<std::vector<long long>> m(r, std::vector<long long>(c));
    std::vector<long> flat;
    for (auto& row : m)
      for (auto& x : row) {
        x = static_cast<long long>(rng() % 13) - 6;
        if (rng() % 3 == 0) x = 0;
        flat.push_back(static_cast<long>(x));
      }
    const auto s = smith_normal_form(IntMatrix(r, c, flat));
    REQUIRE(s.verified);
    CHECK(s.u * IntMatrix(r, c, flat) * s.v == s.d);
    const auto diag = smith_diagonal(s);
    Integer prod = 1;
    for (std::size_t k = 1; k <= diag.size(); ++k) {
      prod *= diag[k - 1];
      CHECK(prod == Integer(static_cast<long>(minor_gcd(m, k))));
      if (k < diag.size() && diag[k - 1] != 0) CHECK(mpz_divisible_p(diag[k].get_mpz_t(), diag[k - 1].get_mpz_t()));
    }
  }
}

TEST_CASE("groups") {
  CHECK(G("2,3") == cyclic(6));
  CHECK(G("4,6").factors == std::vector<std::int64_t>{2, 12});
  CHECK(G("2,Z").free_rank == 1);
  CHECK(G("1") == FinAbGroup{});
  CHECK(G("0") == FinAbGroup{});
  CHECK(G("2,2").to_string() == "Z/2 + Z/2");
  CHECK(integers().to_string() == "Z");
  CHECK_THROWS_AS(G("2,x"), InvalidInput);
  CHECK_THROWS_AS(integers().order(), InvalidInput);
  CHECK(tensor(cyclic(4), cyclic(6)) == cyclic(2));
  CHECK(tensor(integers(), cyclic(6)) == cyclic(6));
  CHECK(tensor(integers(), integers()) == integers());
  CHECK(direct_sum(cyclic(2), cyclic(3)) == cyclic(6));

  const auto all = groups_up_to(16);
  std::map<std::uint64_t, int> per_order;
  for (const auto& g : all) {
    ++per_order[g.order()];
    CHECK(canonical_group(std::vector<Integer>(g.factors.begin(), g.factors.end())) == g);
  }
  for (int n = 1; n <= 16; ++n) CHECK(per_order[static_cast<std::uint64_t>(n)] == abelian_groups_of_order(n));

  const auto a = G("2,4");
  for (std::uint64_t i = 0; i < a.order(); ++i) CHECK(a.index_of(a.element_at(i)) == i);
  CHECK(a.add({1, 3}, {1, 2}) == Element{0, 1});
  CHECK(a.neg({1, 1}) == Element{1, 3});
  CHECK(a.scale(-3, {1, 1}) == Element{1, 1});
}

TEST_CASE("kernels and cokernels") {
  const Hom twice{integers(), integers(), {{2}}};
  CHECK(kernel(twice) == FinAbGroup{});
  CHECK(cokernel(twice) == cyclic(2));
  const Hom onto{cyclic(4), cyclic(2), {{1}}};
  CHECK(onto.well_defined());
  CHECK(kernel(onto) == cyclic(2));
  CHECK(cokernel(onto) == FinAbGroup{});
  const Hom zero{integers(), FinAbGroup{}, {{}}};
  CHECK(kernel(zero) == integers());
  CHECK_FALSE((Hom{cyclic(3), cyclic(2), {{1}}}).well_defined());
  // Order bookkeeping on every map between small groups.
  for (const auto& a : groups_up_to(8))
    for (const auto& b : groups_up_to(6))
      for (const auto& h : all_homs(a, b)) {
        std::set<Element> image;
        for (std::uint64_t i = 0; i < a.order(); ++i) image.insert(h(a.element_at(i)));
        CHECK(kernel(h).order() * image.size() == a.order());
        CHECK(cokernel(h).order() * image.size() == b.order());
      }
}

TEST_CASE("gamma of cyclic groups") {
  CHECK(gamma_presentation(cyclic(3)).gamma == cyclic(3));
  CHECK(gamma_presentation(cyclic(5)).gamma == cyclic(5));
  CHECK(gamma_presentation(cyclic(2)).gamma == cyclic(4));
  CHECK(gamma_presentation(FinAbGroup{}).gamma == FinAbGroup{});
  // The defining presentation gives ℤ/2n for even n.
  CHECK(gamma_presentation(cyclic(4)).gamma == cyclic(8));
  CHECK(gamma_presentation(cyclic(8)).gamma == cyclic(16));
  CHECK(gamma_presentation(cyclic(6)).gamma == cyclic(12));
  CHECK(gamma_presentation(G("2,2")).gamma == G("2,4,4"));
  CHECK_THROWS_AS(gamma_presentation(cyclic(17)), BudgetExceeded);
  CHECK(gamma_presentation(cyclic(17), 17).gamma == cyclic(17));
  CHECK_THROWS_AS(gamma_presentation(integers()), InvalidInput);

  CHECK(gamma_structure(integers()) == integers());
  CHECK(gamma_structure(cyclic(5)) == cyclic(5));
  CHECK(gamma_structure(G("2,2")) == G("2,4,4"));
  CHECK(gamma_structure(G("Z,Z")) == G("Z,Z,Z"));
  CHECK(gamma_structure(G("2,Z")) == G("4,2,Z"));
}

TEST_CASE("gamma presentation and closed form agree") {
  for (const auto& a : groups_up_to(16)) {
    INFO(a.to_string());
    const auto gp = gamma_presentation(a);
    CHECK(gp.smith_verified);
    CHECK(gp.gamma == gamma_structure(a));
    CHECK(gp.universal.size() == a.order());
  }
}

TEST_CASE("gamma relation assembly, parallel and serial") {
  for (int threads : {1, 3}) {
    par::set_threads(threads);
    for (const auto& a : {cyclic(6), G("2,4"), G("2,2,2")}) {
      CHECK(gamma_relations(a) == gamma_relations_serial(a));
      CHECK(gamma_presentation(a).universal == gamma_presentation_serial(a).universal);
    }
  }
  par::set_threads(0);
  // |A| generators, and |A|³ cube relations before zero rows are dropped.
  CHECK(gamma_presentation(cyclic(4)).generators == 4);
}

TEST_CASE("quadratic map examples") {
  CHECK(is_quadratic({cyclic(2), cyclic(4), {{0}, {1}}}).quadratic);
  const auto odd = is_quadratic({cyclic(3), cyclic(3), {{0}, {1}, {2}}});
  CHECK_FALSE(odd.quadratic);
  REQUIRE(odd.witness);
  CHECK(odd.witness->law == "even");
  const auto nonzero = is_quadratic({cyclic(2), cyclic(2), {{1}, {0}}});
  CHECK_FALSE(nonzero.quadratic);
  CHECK(nonzero.witness->law == "cube");
  CHECK(is_quadratic({cyclic(2), cyclic(2), {{0}}}).witness->law == "shape");
  CHECK(is_quadratic({cyclic(2), cyclic(2), {{0}, {5}}}).witness->law == "shape");
  for (const auto& a : groups_up_to(16)) CHECK(is_quadratic(universal_map(a)).quadratic);
  // n ↦ n² on ℤ/5.
  QuadMapTable sq{cyclic(5), cyclic(5), {}};
  for (std::int64_t n = 0; n < 5; ++n) sq.table.push_back({n * n % 5});
  CHECK(is_quadratic(sq).quadratic);
}

TEST_CASE("quadratic tables scale by squares") {
  std::size_t quadratic = 0;
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"2", "2"}, {"2", "4"}, {"3", "3"}, {"4", "2"}, {"4", "4"}, {"2,2", "2"}, {"2,2", "4"},
      {"5", "5"}, {"3", "9"}, {"2,2", "2,2"}, {"6", "2"}, {"6", "3"}, {"8", "2"}, {"4", "8"}};
  for (const auto& [sa, sb] : pairs) {
    const auto a = G(sa), b = G(sb);
    std::size_t here = 0;
    all_tables(a, b, [&](const QuadMapTable& f) {
      if (!is_quadratic(f).quadratic) return;
      ++here;
      for (std::uint64_t i = 0; i < a.order(); ++i) {
        const Element x = a.element_at(i);
        for (std::int64_t n = 0; n <= static_cast<std::int64_t>(a.order()); ++n)
          CHECK(f(a.scale(n, x)) == b.scale(n * n, f(x)));
      }
    });
    // Universality: quadratic maps A -> B are the homomorphisms Γ(A) -> B.
    CHECK(here == all_homs(gamma_structure(a), b).size());
    quadratic += here;
  }
  CHECK(quadratic > 100);
}

TEST_CASE("induced homomorphisms") {
  const auto h = induced_hom({cyclic(2), cyclic(4), {{0}, {1}}});
  CHECK(h.hom.src == cyclic(4));
  CHECK(h.hom.images == std::vector<Element>{{1}});
  CHECK(h.reproduces);
  CHECK(h.unique);
  const auto z = induced_hom({cyclic(3), cyclic(5), {{0}, {0}, {0}}});
  CHECK(z.hom.images == std::vector<Element>{{0}});
  const auto id = induced_hom(universal_map(cyclic(3)));
  CHECK(id.hom.src == cyclic(3));
  CHECK(id.hom(id.gamma.universal[1]) == id.gamma.universal[1]);
  for (std::int64_t x = 0; x < 3; ++x) CHECK(id.hom({x}) == Element{x});
  try {
    induced_hom({cyclic(3), cyclic(3), {{0}, {1}, {2}}});
    FAIL("expected NotQuadratic");
  } catch (const NotQuadratic& e) {
    CHECK(e.witness().law == "even");
  }
}

TEST_CASE("universal property on small groups") {
  for (const auto& a : groups_up_to(8)) {
    const auto u = universal_map(a);
    for (const auto& b : {cyclic(2), cyclic(3), cyclic(4), G("2,2")}) {
      const auto homs = all_homs(u.codomain, b);
      std::set<std::vector<Element>> tables;
      for (const auto& h : homs) {
        const auto f = compose(h, u);
        tables.insert(f.table);
        const auto ind = induced_hom(f);
        CHECK(ind.reproduces);
        CHECK(ind.hom.images == h.images);
      }
      // Distinct homomorphisms give distinct quadratic maps.
      CHECK(tables.size() == homs.size());
    }
  }
}

TEST_CASE("certain exact sequence") {
  const auto s2 = certain_exact_sequence(sphere_type());
  CHECK(s2.h3 == FinAbGroup{});
  CHECK(s2.h4 == FinAbGroup{});
  const auto cp2 = certain_exact_sequence(projective_plane_type());
  CHECK(cp2.h3 == FinAbGroup{});
  CHECK(cp2.h4 == integers());
  const auto u = universal_map(cyclic(2));
  const auto e = certain_exact_sequence({cyclic(2), cyclic(4), u, std::nullopt});
  CHECK(e.h3 == FinAbGroup{});
  CHECK(e.h4 == FinAbGroup{});
  // q = 2 n² on ℤ -> ℤ: H₃ = ℤ/2.
  CHECK(certain_exact_sequence({integers(), integers(), {}, Element{2}}).h3 == cyclic(2));
}

TEST_CASE("exactness bookkeeping") {
  std::size_t checked = 0;
  for (const auto& p2 : groups_up_to(8)) {
    const auto u = universal_map(p2);
    for (const auto& p3 : groups_up_to(8)) {
      auto homs = all_homs(u.codomain, p3);
      // A spread of the hom space when it is large.
      const std::size_t step = 1 + homs.size() / 40;
      for (std::size_t k = 0; k < homs.size(); k += step) {
        const ThreeTypeData t{p2, p3, compose(homs[k], u), std::nullopt};
        const auto seq = certain_exact_sequence(t);
        std::set<Element> image;
        for (std::uint64_t i = 0; i < seq.gamma.order(); ++i) image.insert(seq.map(seq.gamma.element_at(i)));
        CHECK(seq.gamma.order() == seq.h4.order() * image.size());
        CHECK(p3.order() == image.size() * seq.h3.order());
        ++checked;
      }
    }
  }
  CHECK(checked > 500);
}

TEST_CASE("lifting criterion") {
  const auto s2 = sphere_type();
  CHECK(lift_obstruction(s2, {0}));
  CHECK_FALSE(lift_obstruction(s2, {1}));
  CHECK_FALSE(lift_obstruction(s2, {-3}));
  const auto cp2 = projective_plane_type();
  for (std::int64_t s = -3; s <= 3; ++s) CHECK(lift_obstruction(cp2, {s}));
  const ThreeTypeData t{cyclic(2), cyclic(4), universal_map(cyclic(2)), std::nullopt};
  CHECK(lift_obstruction(t, {0}));
  CHECK_FALSE(lift_obstruction(t, {1}));
  CHECK_THROWS_AS(lift_obstruction(t, {2}), InvalidInput);
}

TEST_CASE("q from braiding data") {
  const auto z2 = cyclic(2), z4 = cyclic(4);
  BraidedTwoGroupData b{z2, z4, std::vector<Element>(8, {0}), {{0}, {0}, {0}, {1}}};
  const auto q = q_from_braiding(b);
  CHECK(q.q.table == std::vector<Element>{{0}, {1}});
  CHECK(q.verdict.quadratic);
  CHECK(q.q.table == universal_map(z2).table);

  // A symmetric braiding with c(x, y) + c(y, x) = 0 and c(x, x) = 0.
  const auto z3 = cyclic(3);
  BraidedTwoGroupData sym{z3, z3, std::vector<Element>(27, {0}), {}};
  for (std::int64_t x = 0; x < 3; ++x)
    for (std::int64_t y = 0; y < 3; ++y) sym.braid.push_back({((x * y - y * x) % 3 + 3) % 3});
  const auto qs = q_from_braiding(sym);
  CHECK(qs.verdict.quadratic);
  for (const auto& v : qs.q.table) CHECK(v == Element{0});

  BraidedTwoGroupData noise{z3, z3, std::vector<Element>(27, {0}), {}};
  for (std::int64_t x = 0; x < 3; ++x)
    for (std::int64_t y = 0; y < 3; ++y) noise.braid.push_back({(x * x * y + x) % 3});
  const auto qn = q_from_braiding(noise);
  CHECK_FALSE(qn.verdict.quadratic);
  CHECK(qn.verdict.witness.has_value());

  BraidedTwoGroupData short_table{z2, z4, {}, {}};
  CHECK_THROWS_AS(q_from_braiding(short_table), InvalidInput);
}
