#include <set>

#include "doctest.h"
#include "hck/fpcat.hpp"

using namespace hck::fpcat;

namespace {

Graph two_parallel() { return Graph({"x", "y"}, {{"a", "x", "y"}, {"b", "x", "y"}}); }

std::vector<std::vector<std::string>> names(const Graph& g, const std::vector<Path>& ps) {
  std::vector<std::vector<std::string>> out;
  for (const auto& p : ps) {
    std::vector<std::string> n;
    for (int a : p.arrows) n.push_back(g.arrows()[static_cast<std::size_t>(a)].id);
    out.push_back(n);
  }
  return out;
}

// All reflexive-transitive relations on {0..n-1}, by brute force over bitmasks.
std::vector<std::vector<std::vector<bool>>> all_posets(int n) {
  std::vector<std::vector<std::vector<bool>>> out;
  const int pairs = n * (n - 1);
  for (int mask = 0; mask < (1 << pairs); ++mask) {
    std::vector<std::vector<bool>> leq(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
    int bit = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) leq[i][j] = true;
        else leq[i][j] = (mask >> bit++) & 1;
      }
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        if (i != j && leq[i][j] && leq[j][i]) ok = false;
        for (int k = 0; k < n && ok; ++k)
          if (leq[i][j] && leq[j][k] && !leq[i][k]) ok = false;
      }
    if (ok) out.push_back(leq);
  }
  return out;
}

// Hasse diagram with every pair of parallel paths identified.
FinPresentation hasse_presentation(const std::vector<std::vector<bool>>& leq) {
  const int n = static_cast<int>(leq.size());
  std::vector<std::string> vs;
  for (int i = 0; i < n; ++i) vs.push_back(std::to_string(i));
  std::vector<Arrow> arrows;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !leq[i][j]) continue;
      bool cover = true;
      for (int k = 0; k < n; ++k)
        if (k != i && k != j && leq[i][k] && leq[k][j]) cover = false;
      if (cover) arrows.push_back({vs[i] + vs[j], vs[i], vs[j]});
    }
  Graph g(vs, arrows);
  std::vector<Relation> rels;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto ps = enumerate_paths(g, vs[i], vs[j], static_cast<std::size_t>(n));
      for (std::size_t k = 1; k < ps.size(); ++k) rels.push_back({ps[0], ps[k]});
    }
  return FinPresentation(g, rels);
}

}  // namespace

TEST_CASE("enumerate_paths lists paths by length then name") {
  Graph single({"x", "y"}, {{"a", "x", "y"}});
  CHECK(names(single, enumerate_paths(single, "x", "y", 3)) == std::vector<std::vector<std::string>>{{"a"}});

  Graph loop({"x"}, {{"a", "x", "x"}});
  CHECK(names(loop, enumerate_paths(loop, "x", "x", 2)) ==
        std::vector<std::vector<std::string>>{{}, {"a"}, {"a", "a"}});

  auto g = two_parallel();
  CHECK(names(g, enumerate_paths(g, "x", "y", 1)) == std::vector<std::vector<std::string>>{{"a"}, {"b"}});
  CHECK_THROWS_AS(enumerate_paths(g, "x", "nope", 1), hck::InvalidInput);
}

TEST_CASE("graph and presentation validation") {
  CHECK_THROWS_AS(Graph({"x", "x"}, {}), hck::InvalidInput);
  CHECK_THROWS_AS(Graph({"x"}, {{"a", "x", "z"}}), hck::InvalidInput);
  auto g = two_parallel();
  Graph h({"x", "y"}, {{"a", "x", "y"}, {"b", "y", "x"}});
  CHECK_THROWS_AS(FinPresentation(h, {{make_path(h, {"a"}), make_path(h, {"b"})}}), hck::InvalidInput);
  CHECK_NOTHROW(FinPresentation(g, {{make_path(g, {"a"}), make_path(g, {"b"})}}));
}

TEST_CASE("word problem examples") {
  auto j = walking_isomorphism_presentation();
  const auto& jg = j.graph();
  auto r = word_problem(j, make_path(jg, {"f", "g", "f"}), make_path(jg, {"f"}), 4);
  CHECK(r.decision == Decision::Equal);
  CHECK(replay_witness(j, make_path(jg, {"f", "g", "f"}), make_path(jg, {"f"}), r.witness));

  FinPresentation free(two_parallel(), {});
  const auto& fg = free.graph();
  CHECK(word_problem(free, make_path(fg, {"a"}), make_path(fg, {"b"}), 2).decision == Decision::Distinct);

  auto d = delta2_presentation();
  const auto& dg = d.graph();
  auto e = word_problem(d, make_path(dg, {"f01", "f12"}), make_path(dg, {"f02"}), 3);
  CHECK(e.decision == Decision::Equal);
  CHECK(replay_witness(d, make_path(dg, {"f01", "f12"}), make_path(dg, {"f02"}), e.witness));

  CHECK_THROWS_AS(word_problem(d, make_path(dg, {"f01"}), make_path(dg, {"f02"}), 3), hck::InvalidInput);
}

TEST_CASE("word problem reports Unknown when the window is not saturated") {
  // In the free monoid on a with a^3 = a, the class of a escapes length 2.
  Graph g({"x"}, {{"a", "x", "x"}, {"b", "x", "x"}});
  FinPresentation p(g, {{make_path(g, {"a", "a", "a"}), make_path(g, {"a"})}});
  auto r = word_problem(p, make_path(g, {"a"}), make_path(g, {"b"}), 2);
  CHECK(r.decision == Decision::Distinct);  // class of b is {b}, closed
  auto s = word_problem(p, make_path(g, {"a"}), make_path(g, {"a", "a"}), 2);
  CHECK(s.decision == Decision::Unknown);
  // Budget below the input length never answers.
  CHECK(word_problem(p, make_path(g, {"a", "a", "a"}), make_path(g, {"a"}), 1).decision == Decision::Unknown);
}

TEST_CASE("word problem answers are stable as the budget grows") {
  auto j = walking_isomorphism_presentation();
  const auto& g = j.graph();
  std::vector<Path> paths;
  for (const auto& [a, b] : std::vector<std::pair<std::string, std::string>>{{"j", "j"}, {"j", "jbar"}, {"jbar", "jbar"}, {"jbar", "j"}}) {
    auto ps = enumerate_paths(g, a, b, 4);
    paths.insert(paths.end(), ps.begin(), ps.end());
  }
  for (const auto& u : paths)
    for (const auto& v : paths) {
      if (u.start != v.start || path_end(g, u) != path_end(g, v)) continue;
      Decision first = Decision::Unknown;
      for (std::size_t budget = 0; budget <= 7; ++budget) {
        auto r = word_problem(j, u, v, budget);
        if (first != Decision::Unknown) CHECK(r.decision == first);
        else first = r.decision;
        if (r.decision == Decision::Equal) CHECK(replay_witness(j, u, v, r.witness));
      }
      CHECK(first == Decision::Equal);  // J is a groupoid with trivial homs
    }
}

TEST_CASE("parallel and serial word problem agree") {
  Graph g({"x"}, {{"a", "x", "x"}, {"b", "x", "x"}});
  FinPresentation p(g, {{make_path(g, {"a", "b"}), make_path(g, {"b", "a"})},
                        {make_path(g, {"a", "a"}), Path{0, {}}}});
  auto u = make_path(g, {"a", "b", "a", "b", "b"});
  auto v = make_path(g, {"b", "b", "b"});
  for (std::size_t budget : {5u, 6u, 7u}) {
    auto par = word_problem(p, u, v, budget);
    auto ser = word_problem_serial(p, u, v, budget);
    CHECK(par.decision == ser.decision);
    CHECK(par.explored == ser.explored);
    CHECK(par.witness.size() == ser.witness.size());
  }
}

TEST_CASE("replay rejects a tampered witness") {
  auto d = delta2_presentation();
  const auto& g = d.graph();
  auto u = make_path(g, {"f01", "f12"});
  auto v = make_path(g, {"f02"});
  auto r = word_problem(d, u, v, 3);
  REQUIRE(r.witness.size() == 1);
  auto bad = r.witness;
  bad[0].forward = false;
  CHECK_FALSE(replay_witness(d, u, v, bad));
  CHECK_FALSE(replay_witness(d, u, u, r.witness));
}

TEST_CASE("quotient category examples") {
  auto q = quotient_category(walking_isomorphism_presentation(), 2);
  CHECK(q.category.num_objects() == 2);
  CHECK(q.category.num_morphisms() == 4);
  CHECK(validate_category(q.category).ok());
  CHECK(find_isomorphism(q.category, walking_isomorphism()));

  auto z2 = quotient_category(loop_presentation(2), 2);
  CHECK(z2.category.num_objects() == 1);
  CHECK(z2.category.num_morphisms() == 2);
  CHECK(find_isomorphism(z2.category, cyclic_group(2)));

  CHECK_THROWS_AS(quotient_category(loop_presentation(std::nullopt), 5), NotSaturated);

  auto arrow = quotient_category(cell(1), 1);
  CHECK(arrow.category.num_morphisms() == 3);
  CHECK(find_isomorphism(arrow.category, walking_arrow()));

  auto empty = quotient_category(FinPresentation(), 3);
  CHECK(empty.category.num_objects() == 0);
  CHECK(empty.category.num_morphisms() == 0);
}

TEST_CASE("quotient of cyclic presentations") {
  for (int n = 1; n <= 5; ++n) {
    auto q = quotient_category(loop_presentation(n), static_cast<std::size_t>(n));
    CHECK(q.category.num_morphisms() == static_cast<std::size_t>(n));
    CHECK(validate_category(q.category).ok());
    CHECK(find_isomorphism(q.category, cyclic_group(n)));
  }
}

TEST_CASE("functor checks") {
  auto d = delta2_presentation();
  auto target = ordinal(2);
  Assignment good{{{"0", "0"}, {"1", "1"}, {"2", "2"}}, {{"f01", "0<1"}, {"f12", "1<2"}, {"f02", "0<2"}}};
  CHECK(check_functor(d, target, good));

  auto bd = boundary_delta2_category();
  Assignment bad{{{"0", "0"}, {"1", "1"}, {"2", "2"}}, {{"f01", "f01"}, {"f12", "f12"}, {"f02", "f02"}}};
  CHECK_FALSE(check_functor(d, bd, bad));
  Assignment composite = bad;
  composite.arrows["f02"] = "f01.f12";
  CHECK(check_functor(d, bd, composite));

  auto z2 = cyclic_group(2);
  Assignment inv{{{"j", "*"}, {"jbar", "*"}}, {{"f", "1"}, {"g", "1"}}};
  CHECK(check_functor(walking_isomorphism_presentation(), z2, inv));

  Assignment partial{{{"0", "0"}, {"1", "1"}, {"2", "2"}}, {{"f01", "0<1"}}};
  CHECK_THROWS_AS(check_functor(d, target, partial), hck::InvalidInput);
  Assignment mistyped = good;
  mistyped.arrows["f01"] = "1<2";
  CHECK_THROWS_AS(check_functor(d, target, mistyped), hck::InvalidInput);
}

TEST_CASE("validate_category finds corrupted composites") {
  CHECK(validate_category(ordinal(2)).ok());
  CHECK(validate_category(cyclic_group(3)).ok());
  auto c = cyclic_group(3);
  c.set_compose(1, 1, 0);  // 1+1 should be 2
  auto rep = validate_category(c);
  CHECK_FALSE(rep.ok());
  CHECK(rep.mentions("associativity"));
  bool named = false;
  for (const auto& v : rep.violations)
    if (v.detail.find("1, 1") != std::string::npos) named = true;
  CHECK(named);
}

TEST_CASE("gauntness") {
  CHECK(is_gaunt(ordinal(2)));
  CHECK_FALSE(is_gaunt(walking_isomorphism()));
  CHECK_FALSE(is_gaunt(cyclic_group(2)));
  CHECK(is_gaunt(monoid_category({{0, 1}, {1, 1}}, 0)));
}

TEST_CASE("cells") {
  auto c0 = cell(0);
  CHECK(c0.graph().num_vertices() == 1);
  CHECK(c0.graph().num_arrows() == 0);
  auto c1 = cell(1);
  CHECK(c1.graph().num_vertices() == 2);
  CHECK(c1.graph().num_arrows() == 1);
  CHECK_THROWS_AS(cell(2), hck::InvalidInput);
}

TEST_CASE("property: tautological presentation with identity assignment is a functor") {
  std::vector<FinCategory> cs{point_category(), ordinal(1), ordinal(3), walking_arrow(), walking_isomorphism(),
                              boundary_delta2_category(), cyclic_group(4),
                              monoid_category({{0, 1}, {1, 1}}, 0)};
  for (const auto& c : cs) {
    REQUIRE(validate_category(c).ok());
    CHECK(check_functor(tautological_presentation(c), c, identity_assignment(c)));
    auto q = quotient_category(tautological_presentation(c), 1);
    CHECK(validate_category(q.category).ok());
    CHECK(find_isomorphism(q.category, c));
  }
}

TEST_CASE("property: quotients of posets with at most 4 elements are gaunt") {
  std::size_t counted = 0;
  for (int n = 1; n <= 4; ++n)
    for (const auto& leq : all_posets(n)) {
      auto q = quotient_category(hasse_presentation(leq), static_cast<std::size_t>(n));
      CHECK(validate_category(q.category).ok());
      CHECK(is_gaunt(q.category));
      CHECK(find_isomorphism(q.category, poset_category(leq)));
      ++counted;
    }
  // Labelled posets: 1, 3, 19, 219.
  CHECK(counted == 1 + 3 + 19 + 219);
}

TEST_CASE("isomorphism search") {
  CHECK_FALSE(find_isomorphism(cyclic_group(4), monoid_category({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}, 0)));
  CHECK(find_isomorphism(ordinal(2), ordinal(2)));
  CHECK_FALSE(find_isomorphism(ordinal(2), boundary_delta2_category()));
}
