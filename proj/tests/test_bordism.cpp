#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "hck/bordism.hpp"
#include "hck/fpcat.hpp"
#include "hck/parallel.hpp"

using namespace hck;
using namespace hck::bordism;

namespace {

const Calculus kAll[] = {Calculus::Oriented, Calculus::Unoriented, Calculus::Quotient};

// Every slice that types on the given signs, caps limited by max_width.
std::vector<Slice> typed_slices(const SignSeq& s, Calculus c, std::size_t max_width) {
  std::vector<Slice> out;
  const std::size_t k = s.size();
  if (k + 2 <= max_width)
    for (std::size_t i = 0; i <= k; ++i) {
      out.push_back(cap(i, Elbow::LR));
      if (c != Calculus::Unoriented) out.push_back(cap(i, Elbow::RL));
    }
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (c == Calculus::Unoriented) out.push_back(cup(i, Elbow::LR));
    else if (s[i] != s[i + 1]) out.push_back(cup(i, s[i] == Sign::Plus ? Elbow::LR : Elbow::RL));
  }
  if (c == Calculus::Quotient)
    for (std::size_t i = 0; i < k; ++i) out.push_back(s[i] == Sign::Plus ? jdown(i) : jup(i));
  return out;
}

SignSeq after(const CobWord& w, Calculus c) { return typecheck(w, c); }

CobWord random_word(std::mt19937& rng, const SignSeq& dom, Calculus c, std::size_t len, std::size_t max_width) {
  CobWord w{dom, {}};
  SignSeq cur = dom;
  for (std::size_t i = 0; i < len; ++i) {
    auto opts = typed_slices(cur, c, max_width);
    if (opts.empty()) break;
    w.slices.push_back(opts[rng() % opts.size()]);
    cur = after(w, c);
  }
  return w;
}

SignSeq random_signs(std::mt19937& rng, std::size_t n) {
  SignSeq s(n);
  for (auto& x : s) x = rng() % 2 ? Sign::Minus : Sign::Plus;
  return s;
}

CobWord circles(std::size_t c) {
  CobWord w{{}, {}};
  for (std::size_t i = 0; i < c; ++i) {
    w.slices.push_back(cap(0));
    w.slices.push_back(cup(0));
  }
  return w;
}

// All words of length <= len by brute force, no deduplication of states.
void all_words(const CobWord& w, const SignSeq& cur, Calculus c, std::size_t len, std::size_t max_width,
               const std::function<void(const CobWord&, const SignSeq&)>& visit) {
  visit(w, cur);
  if (w.slices.size() == len) return;
  for (const auto& s : typed_slices(cur, c, max_width + 2 * (len - w.slices.size()))) {
    CobWord x = w;
    x.slices.push_back(s);
    all_words(x, typecheck(x, c), c, len, max_width, visit);
  }
}

}  // namespace

TEST_CASE("parse and print words") {
  const auto w = parse_word("dom:+,- ; cap@1:LR ; cup@0:RL ; jup@2");
  CHECK(w.domain == SignSeq{Sign::Plus, Sign::Minus});
  REQUIRE(w.slices.size() == 3);
  CHECK(w.slices[0] == cap(1, Elbow::LR));
  CHECK(w.slices[1] == cup(0, Elbow::RL));
  CHECK(w.slices[2] == jup(2));
  CHECK(parse_word(to_string(w)) == w);
  CHECK(parse_word("dom:\ncap@0\ncup@0").slices.size() == 2);
  CHECK(parse_word("dom: ; id").slices.size() == 1);
  CHECK_THROWS_AS(parse_word("cap@0"), InvalidInput);
  CHECK_THROWS_AS(parse_word("dom:+ ; cap@x"), InvalidInput);
  CHECK_THROWS_AS(parse_word("dom:+ ; cap@0:XY"), InvalidInput);
  CHECK_THROWS_AS(parse_word("dom:+ ; jup@0:LR"), InvalidInput);
  CHECK_THROWS_AS(parse_signs("+*"), InvalidInput);
  CHECK(parse_calculus("quotient") == Calculus::Quotient);
  CHECK_THROWS_AS(parse_calculus("framed"), InvalidInput);
}

TEST_CASE("typing") {
  CHECK(typecheck({{Sign::Plus}, {cap(1, Elbow::RL)}}) == parse_signs("+-+"));
  CHECK(typecheck(circles(1)).empty());
  try {
    typecheck({{Sign::Plus}, {cap(1, Elbow::RL), cup(2)}});
    FAIL("expected IllTyped");
  } catch (const IllTyped& e) {
    CHECK(e.position() == 1);
  }
  CHECK_THROWS_AS(typecheck({{Sign::Plus}, {cap(3)}}), IllTyped);
  // Variant must match in the oriented calculi only.
  const CobWord wrong{parse_signs("-+"), {cup(0, Elbow::LR)}};
  CHECK_THROWS_AS(typecheck(wrong, Calculus::Oriented), IllTyped);
  CHECK(typecheck(wrong, Calculus::Unoriented).empty());
  const CobWord j{parse_signs("+"), {jdown(0)}};
  CHECK_THROWS_AS(typecheck(j, Calculus::Oriented), IllTyped);
  CHECK_THROWS_AS(typecheck(j, Calculus::Unoriented), IllTyped);
  CHECK(typecheck(j, Calculus::Quotient) == parse_signs("-"));
  CHECK_THROWS_AS(typecheck({parse_signs("-"), {jdown(0)}}, Calculus::Quotient), IllTyped);
}

TEST_CASE("normal form examples") {
  const auto snake = parse_word("dom:+ ; cap@1:RL ; cup@0:LR");
  const auto nf = normal_form(snake);
  CHECK(nf.domain_size == 1);
  CHECK(nf.codomain_size == 1);
  CHECK(nf.partner == std::vector<std::size_t>{1, 0});
  CHECK(nf.loops == 0);

  const auto circle = normal_form(circles(1));
  CHECK(circle.partner.empty());
  CHECK(circle.loops == 1);

  const auto jj = normal_form(parse_word("dom:+ ; jdown@0 ; jup@0"), Calculus::Quotient);
  CHECK(jj == normal_form(parse_word("dom:+"), Calculus::Quotient));
  CHECK(jj.flips == std::vector<int>{0, 0});
  CHECK(normal_form(parse_word("dom:+ ; jdown@0"), Calculus::Quotient).flips == std::vector<int>{1, 1});
  CHECK(nf.to_string() == "1->1 {d0-c0} loops=0");
}

TEST_CASE("word equality examples") {
  const auto id = parse_word("dom:+");
  CHECK(words_equal(parse_word("dom:+ ; cap@1:RL ; cup@0:LR"), id, Calculus::Oriented));
  CHECK(words_equal(parse_word("dom:+ ; cap@0:LR ; cup@1:RL"), id, Calculus::Oriented));
  CHECK_FALSE(words_equal(circles(1), circles(2), Calculus::Oriented));

  const auto reflected = parse_word("dom: ; cap@0:RL"), plain = parse_word("dom: ; cap@0:LR");
  CHECK(words_equal(reflected, plain, Calculus::Unoriented));
  CHECK_FALSE(words_equal(reflected, plain, Calculus::Oriented));
  const auto cmp = compare_words(reflected, plain, Calculus::Oriented);
  CHECK(cmp.boundary_mismatch);
  CHECK_FALSE(cmp.equal);
}

TEST_CASE("generating relations hold in every calculus") {
  for (auto c : kAll) {
    const auto rels = generating_relations(c);
    CHECK(rels.size() == (c == Calculus::Quotient ? 8u : 4u));
    for (const auto& r : rels) {
      INFO(to_string(c) << " " << r.name);
      CHECK(words_equal(r.lhs, r.rhs, c));
    }
  }
  // Unoriented relations really need the unoriented calculus.
  for (const auto& r : generating_relations(Calculus::Unoriented)) {
    if (r.name == "cap_symmetry") CHECK_FALSE(words_equal(r.lhs, r.rhs, Calculus::Oriented));
    if (r.name == "cup_symmetry") CHECK_THROWS_AS(words_equal(r.lhs, r.rhs, Calculus::Oriented), IllTyped);
  }
}

TEST_CASE("tft validation") {
  CHECK(validate_tft(standard_tft(3), Calculus::Oriented).ok());
  CHECK(validate_tft(standard_tft(3), Calculus::Unoriented).ok());
  auto bad = standard_tft(2);
  bad.coev = bad.coev.scaled(2);
  const auto rep = validate_tft(bad, Calculus::Oriented);
  CHECK(rep.mentions("zigzag_plus"));
  CHECK(rep.mentions("zigzag_minus"));
  CHECK_THROWS_AS(evaluate_tft(circles(1), bad), InvalidTFTData);

  QMatrix anti(2, 2);
  anti(0, 1) = 1;
  anti(1, 0) = -1;
  CHECK(validate_tft(standard_tft(2, anti), Calculus::Unoriented).mentions("pairing_asymmetric"));
  CHECK(validate_tft(standard_tft(2, anti), Calculus::Oriented).ok());
  CHECK(validate_tft(standard_tft(2, QMatrix(2, 2)), Calculus::Unoriented).mentions("pairing_degenerate"));
  auto none = standard_tft(2);
  none.pairing.reset();
  CHECK(validate_tft(none, Calculus::Quotient).mentions("pairing_missing"));
  auto shape = standard_tft(2);
  shape.ev = QMatrix(1, 3);
  CHECK(validate_tft(shape, Calculus::Oriented).mentions("shape"));
  CHECK_THROWS_AS(evaluate_tft(circles(1), shape), DimensionMismatch);
  CHECK_THROWS_AS(tft_from(QMatrix(2, 2), std::nullopt), InvalidTFTData);

  const auto corpus = tft_corpus();
  CHECK(corpus.size() == 20);
  std::set<std::size_t> dims;
  for (const auto& z : corpus) {
    dims.insert(z.dim);
    for (auto c : kAll) CHECK(validate_tft(z, c).ok());
  }
  CHECK(dims == std::set<std::size_t>{1, 2, 3});
}

TEST_CASE("tft evaluation examples") {
  const auto z = standard_tft(2);
  CHECK(evaluate_tft(circles(1), z) == QMatrix(1, 1, {Rational(2)}));
  CHECK(evaluate_tft(parse_word("dom:+"), z).is_identity());
  CHECK(evaluate_tft(parse_word("dom:+"), z).rows() == 2);
  CHECK(evaluate_tft(parse_word("dom:+,- ; cup@0:LR"), z) == z.ev);
  CHECK(evaluate_tft(parse_word("dom: ; cap@0:RL"), z) == z.coev);
}

TEST_CASE("relations evaluate equally on the whole corpus") {
  for (const auto& z : tft_corpus())
    for (auto c : kAll)
      for (const auto& r : generating_relations(c)) {
        INFO(to_string(c) << " " << r.name << " dim " << z.dim);
        CHECK(evaluate_tft(r.lhs, z, c) == evaluate_tft(r.rhs, z, c));
      }
}

TEST_CASE("circles evaluate to powers of the dimension") {
  for (const auto& z : tft_corpus())
    for (std::size_t c = 0; c <= 3; ++c) {
      Rational expect = 1;
      for (std::size_t i = 0; i < c; ++i) expect *= static_cast<long>(z.dim);
      for (auto calc : kAll) CHECK(evaluate_tft(circles(c), z, calc) == QMatrix(1, 1, {expect}));
    }
  // A circle beside a strand scales it, on either side.
  const auto z = tft_corpus()[10];
  const auto left = evaluate_tft(parse_word("dom:+ ; cap@0:LR ; cup@0:LR"), z);
  const auto right = evaluate_tft(parse_word("dom:+ ; cap@1:RL ; cup@1:RL"), z);
  CHECK(left == QMatrix::identity(z.dim).scaled(static_cast<long>(z.dim)));
  CHECK(left == right);
}

TEST_CASE("evaluation factors through normal forms") {
  std::mt19937 rng(7);
  const auto corpus = tft_corpus();
  for (auto c : kAll)
    for (int trial = 0; trial < 150; ++trial) {
      const SignSeq dom = random_signs(rng, rng() % 3);
      const CobWord w = random_word(rng, dom, c, 1 + rng() % 8, 4);
      const SignSeq cod = typecheck(w, c);
      const auto nf = normal_form(w, c);
      const CobWord r = replay(nf, dom, cod, c);
      INFO(to_string(w));
      if (c == Calculus::Unoriented) CHECK(typecheck(r, c).size() == cod.size());
      else CHECK(typecheck(r, c) == cod);
      CHECK(normal_form(r, c) == nf);
      const auto& z = corpus[trial % corpus.size()];
      CHECK(evaluate_tft(w, z, c) == evaluate_tft(r, z, c));
    }
}

TEST_CASE("random rewriting preserves normal forms") {
  std::mt19937 rng(11);
  const auto z = tft_corpus()[12];
  for (auto c : kAll)
    for (int trial = 0; trial < 60; ++trial) {
      CobWord w = random_word(rng, random_signs(rng, rng() % 3), c, 1 + rng() % 8, 4);
      const auto nf = normal_form(w, c);
      const auto value = evaluate_tft(w, z, c);
      for (int step = 0; step < 12; ++step) {
        auto moves = rewrite_moves(w, c);
        if (moves.empty()) break;
        // Prefer shrinking moves so words stay small.
        std::vector<CobWord> smaller;
        for (auto& m : moves)
          if (m.slices.size() <= w.slices.size()) smaller.push_back(m);
        const auto& pool = (smaller.empty() || rng() % 4 == 0) ? moves : smaller;
        w = pool[rng() % pool.size()];
        REQUIRE(normal_form(w, c) == nf);
      }
      CHECK(evaluate_tft(w, z, c) == value);
    }
}

TEST_CASE("rewrite moves") {
  const auto snake = parse_word("dom:+ ; cap@1:RL ; cup@0:LR");
  bool straightened = false;
  for (const auto& m : rewrite_moves(snake, Calculus::Oriented)) straightened |= m.slices.empty();
  CHECK(straightened);
  bool cancelled = false;
  for (const auto& m : rewrite_moves(parse_word("dom:+ ; jdown@0 ; jup@0"), Calculus::Quotient))
    cancelled |= m.slices.empty();
  CHECK(cancelled);
  // Two caps side by side can be built in either order.
  const auto caps = parse_word("dom: ; cap@0:LR ; cap@2:RL");
  bool swapped = false;
  for (const auto& m : rewrite_moves(caps, Calculus::Oriented))
    swapped |= m.slices == std::vector<Slice>{cap(0, Elbow::RL), cap(0, Elbow::LR)};
  CHECK(swapped);
}

TEST_CASE("juxtaposition is the Kronecker product") {
  std::mt19937 rng(3);
  const auto corpus = tft_corpus();
  for (auto c : kAll)
    for (int trial = 0; trial < 40; ++trial) {
      const CobWord u = random_word(rng, random_signs(rng, rng() % 3), c, rng() % 5, 3);
      const CobWord v = random_word(rng, random_signs(rng, rng() % 3), c, rng() % 5, 3);
      const auto& z = corpus[(trial * 7) % corpus.size()];
      if (z.dim == 3) continue;
      const auto uv = juxtapose(u, v, c);
      auto cu = typecheck(u, c), cv = typecheck(v, c);
      cu.insert(cu.end(), cv.begin(), cv.end());
      if (c != Calculus::Unoriented) CHECK(typecheck(uv, c) == cu);
      CHECK(evaluate_tft(uv, z, c) == evaluate_tft(u, z, c).kron(evaluate_tft(v, z, c)));
    }
}

TEST_CASE("composition") {
  const auto u = parse_word("dom:+ ; cap@1:RL");
  const auto v = parse_word("dom:+,-,+ ; cup@0:LR");
  const auto z = tft_corpus()[8];
  CHECK(evaluate_tft(compose(u, v), z) == evaluate_tft(v, z) * evaluate_tft(u, z));
  CHECK(words_equal(compose(u, v), parse_word("dom:+"), Calculus::Oriented));
}

TEST_CASE("reachable forms agree with brute force") {
  for (auto c : kAll)
    for (std::size_t n = 0; n <= 2; ++n)
      for (const auto& dom : std::vector<SignSeq>{SignSeq(n, Sign::Plus), SignSeq(n, Sign::Minus)}) {
        const std::size_t len = 4, width = 2;
        std::set<std::pair<SignSeq, NormalForm>> brute;
        all_words({dom, {}}, dom, c, len, width, [&](const CobWord& w, const SignSeq& cod) {
          if (cod.size() > width) return;
          SignSeq key = cod;
          if (c == Calculus::Unoriented) key.assign(cod.size(), Sign::Plus);
          brute.insert({key, normal_form(w, c)});
        });
        SignSeq start = dom;
        if (c == Calculus::Unoriented) start.assign(n, Sign::Plus);
        const auto fast = reachable_forms(start, c, len, width);
        const auto serial = reachable_forms_serial(start, c, len, width);
        CHECK(fast.forms == serial.forms);
        std::set<std::pair<SignSeq, NormalForm>> got(fast.forms.begin(), fast.forms.end());
        INFO(to_string(c) << " n=" << n);
        CHECK(got == brute);
      }
}

TEST_CASE("reachable forms parallel and serial agree") {
  for (int threads : {1, 4}) {
    par::set_threads(threads);
    for (auto c : kAll) {
      const auto a = reachable_forms(parse_signs("+-+"), c, 5, 3);
      CHECK(a.forms == reachable_forms_serial(parse_signs("+-+"), c, 5, 3).forms);
    }
  }
  par::set_threads(0);
}

TEST_CASE("homotopy quotient check") {
  const auto q = quotient_functor_check(6, 4);
  for (const auto& v : q.report.violations) INFO(v.kind << ": " << v.detail);
  CHECK(q.report.ok());
  CHECK(q.relations_checked == 8);
  CHECK(q.boundaries == 31 * 31);
  CHECK(q.quotient_forms == q.unoriented_forms);
  CHECK(q.unoriented_forms > 0);
  CHECK(q.quotient_forms_enumerated > 0);
}

TEST_CASE("corrupted quotient assignment is caught") {
  Assignment bad = [](const Slice& s) -> std::vector<Slice> {
    if (s.kind == Slice::Kind::JUp || s.kind == Slice::Kind::JDown)
      return {cap(s.pos + 1, Elbow::LR), cup(s.pos + 1, Elbow::LR)};
    return {s};
  };
  const auto q = quotient_functor_check(3, 2, bad);
  CHECK(q.report.mentions("relation"));
  bool names_j = false;
  for (const auto& v : q.report.violations) names_j |= v.detail.find("j_inverse") != std::string::npos;
  CHECK(names_j);
}

TEST_CASE("planar normal forms match congruence closure on loop-free words") {
  // Oriented words over objects with at most four points, as a plain
  // presentation: every slice instance is an arrow; relations are the snakes
  // in every context and the interchange of disjoint slices.
  const std::size_t width = 4;
  std::vector<SignSeq> objects;
  for (std::size_t n = 0; n <= width; ++n)
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      SignSeq s(n);
      for (std::size_t i = 0; i < n; ++i) s[i] = (mask >> i) & 1 ? Sign::Minus : Sign::Plus;
      objects.push_back(s);
    }
  auto name = [](const SignSeq& s) { return "[" + to_string(s) + "]"; };
  auto slice_name = [](const SignSeq& s, const Slice& x) { return to_string(CobWord{s, {x}}); };
  std::vector<std::string> verts;
  std::vector<fpcat::Arrow> arrows;
  for (const auto& s : objects) {
    verts.push_back(name(s));
    for (const auto& x : typed_slices(s, Calculus::Oriented, width))
      arrows.push_back({slice_name(s, x), name(s), name(typecheck({s, {x}}))});
  }
  const fpcat::Graph g(verts, arrows);
  auto path = [&](const CobWord& w) {
    std::vector<std::string> names;
    SignSeq cur = w.domain;
    for (const auto& x : w.slices) {
      names.push_back(slice_name(cur, x));
      cur = typecheck({cur, {x}});
    }
    return fpcat::make_path(g, name(w.domain), names);
  };
  auto fits = [&](const CobWord& w) {
    if (w.domain.size() > width) return false;
    SignSeq cur = w.domain;
    for (const auto& x : w.slices) {
      cur = typecheck({cur, {x}});
      if (cur.size() > width) return false;
    }
    return true;
  };
  std::vector<fpcat::Relation> rels;
  for (const auto& s : objects) {
    // Snakes and interchanges: all two-slice words from s whose rewrite is a
    // snake straightening or a swap.
    for (const auto& a : typed_slices(s, Calculus::Oriented, width)) {
      const SignSeq mid = typecheck({s, {a}});
      for (const auto& b : typed_slices(mid, Calculus::Oriented, width)) {
        const CobWord w{s, {a, b}};
        for (const auto& m : rewrite_moves(w, Calculus::Oriented))
          if (m.slices.size() <= 2 && fits(m) && !(m == w)) rels.push_back({path(w), path(m)});
      }
    }
  }
  const fpcat::FinPresentation p(g, rels);

  int equal_pairs = 0, distinct_pairs = 0;
  for (const char* d : {"+", "-", "+-", "-+", "++"}) {
    const SignSeq dom = parse_signs(d);
    std::vector<CobWord> words;
    all_words({dom, {}}, dom, Calculus::Oriented, 4, 2, [&](const CobWord& w, const SignSeq& cod) {
      if (cod.size() == dom.size() && normal_form(w).loops == 0 && fits(w)) words.push_back(w);
    });
    // A spread of words; every pair among them with a common codomain.
    std::vector<CobWord> sample;
    for (std::size_t i = 0; i < words.size(); i += 1 + words.size() / 24) sample.push_back(words[i]);
    for (std::size_t i = 0; i < sample.size(); ++i)
      for (std::size_t j = i + 1; j < sample.size(); ++j) {
        const CobWord &u = sample[i], &v = sample[j];
        if (typecheck(u) != typecheck(v)) continue;
        const auto res = fpcat::word_problem(p, path(u), path(v), 6);
        INFO(to_string(u) << " vs " << to_string(v));
        if (normal_form(u) == normal_form(v)) {
          ++equal_pairs;
          CHECK(res.decision == fpcat::Decision::Equal);
        } else {
          ++distinct_pairs;
          CHECK(res.decision != fpcat::Decision::Equal);
        }
      }
  }
  CHECK(equal_pairs > 0);
  CHECK(distinct_pairs > 0);
}
