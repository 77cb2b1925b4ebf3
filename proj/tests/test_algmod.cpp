#include "doctest.h"
#include "hck/algmod.hpp"

using namespace hck;
using namespace hck::alg;

namespace {

const Algebra& find_algebra(const std::string& name) {
  static const auto corpus = algebra_corpus();
  for (const auto& a : corpus)
    if (a.name == name) return a.algebra;
  throw InvalidInput(name);
}

QMatrix diag_idempotent_action(const std::vector<QMatrix>& act, std::size_t i) { return act[i]; }

// x ↦ u ⊗ x in R ⊗_R M.
QMatrix unit_in(const Bimodule& m, const TensorProduct& rm) {
  const QMatrix u = m.left.unit_vector();
  return rm.projection * u.kron(QMatrix::identity(m.dim));
}

// Snakes recomputed through the quotient spaces with an explicit associator.
Snakes snakes_via_quotients(const DualityDatum& d) {
  const Bimodule &p = d.f, &q = d.g;
  const Bimodule r = identity_bimodule(p.left), s = identity_bimodule(p.right);
  const QMatrix ip = QMatrix::identity(p.dim), iq = QMatrix::identity(q.dim);
  const auto pq = tensor_over(p, q), qp = tensor_over(q, p);
  Snakes out;
  {
    const auto rp = tensor_over(r, p);
    const auto pq_p = tensor_over(pq.result, p);
    const auto p_qp = tensor_over(p, qp.result);
    const auto ps = tensor_over(p, s);
    QMatrix coev1 = pq_p.projection * d.coev.kron(ip) * rp.section;
    QMatrix assoc = p_qp.projection * ip.kron(qp.projection) * pq.section.kron(ip) * pq_p.section;
    QMatrix ev1 = ps.projection * ip.kron(d.ev) * p_qp.section;
    QMatrix rho(p.dim, ps.result.dim);
    const QMatrix full = [&] {
      QMatrix f(p.dim, p.dim * s.dim);
      for (std::size_t x = 0; x < p.dim; ++x)
        for (std::size_t b = 0; b < s.dim; ++b) {
          QMatrix e(p.dim, 1);
          e(x, 0) = 1;
          QMatrix y = p.ract[b] * e;
          for (std::size_t i = 0; i < p.dim; ++i) f(i, x * s.dim + b) = y(i, 0);
        }
      return f;
    }();
    rho = full * ps.section;
    out.on_f = rho * ev1 * assoc * coev1 * unit_in(p, rp);
  }
  {
    const auto qr = tensor_over(q, r);
    const auto q_pq = tensor_over(q, pq.result);
    const auto qp_q = tensor_over(qp.result, q);
    const auto sq = tensor_over(s, q);
    QMatrix right_unit_inv = qr.projection * iq.kron(p.left.unit_vector());
    QMatrix coev1 = q_pq.projection * iq.kron(d.coev) * qr.section;
    QMatrix assoc = qp_q.projection * qp.projection.kron(iq) * iq.kron(pq.section) * q_pq.section;
    QMatrix ev1 = sq.projection * d.ev.kron(iq) * qp_q.section;
    QMatrix full(q.dim, s.dim * q.dim);
    for (std::size_t b = 0; b < s.dim; ++b)
      for (std::size_t y = 0; y < q.dim; ++y)
        for (std::size_t i = 0; i < q.dim; ++i) full(i, b * q.dim + y) = q.lact[b](i, y);
    out.on_g = full * sq.section * ev1 * assoc * coev1 * right_unit_inv;
  }
  return out;
}

Bimodule point_over_dual_numbers_left() {
  // Q with x acting by zero on the left.
  return from_actions(truncated_polynomial(2), rationals(), {QMatrix::identity(1), QMatrix(1, 1)},
                      {QMatrix::identity(1)});
}

Bimodule point_over_dual_numbers_right() {
  return from_actions(rationals(), truncated_polynomial(2), {QMatrix::identity(1)},
                      {QMatrix::identity(1), QMatrix(1, 1)});
}

}  // namespace

TEST_CASE("corpus algebras and bimodules are valid") {
  for (const auto& [name, a] : algebra_corpus()) {
    CAPTURE(name);
    CHECK(validate_algebra(a).ok());
    CHECK(validate_algebra(opposite(a)).ok());
  }
  for (const auto& [name, m] : bimodule_corpus()) {
    CAPTURE(name);
    CHECK(validate_bimodule(m).ok());
  }
  CHECK(validate_algebra(tensor(matrix_algebra(2), cyclic_group_algebra(3))).ok());
}

TEST_CASE("validation detects corrupted structure constants and actions") {
  auto a = cyclic_group_algebra(3);
  a.mult[(1 * 3 + 1) * 3 + 2] = 0;
  a.mult[(1 * 3 + 1) * 3 + 0] = 1;
  CHECK(validate_algebra(a).mentions("associativity"));
  auto b = diagonal_algebra(2);
  b.unit[1] = 0;
  CHECK(validate_algebra(b).mentions("unit"));

  auto m = identity_bimodule(matrix_algebra(2));
  std::swap(m.lact[1], m.lact[2]);
  CHECK(validate_bimodule(m).mentions("left_action"));
  auto n = identity_bimodule(cyclic_group_algebra(3));
  n.ract[1] = n.ract[2];
  CHECK_FALSE(validate_bimodule(n).ok());
  auto c = from_actions(matrix_algebra(2), matrix_algebra(2), identity_bimodule(matrix_algebra(2)).lact,
                        identity_bimodule(matrix_algebra(2)).lact);
  CHECK(validate_bimodule(c).mentions("commutation"));
}

TEST_CASE("tensor products over an algebra") {
  auto q = identity_bimodule(rationals());
  CHECK(tensor_over(q, q).result.dim == 1);

  auto qq = diagonal_algebra(2);
  for (const auto& [name, m] : bimodule_corpus()) {
    if (!(m.left == qq)) continue;
    CAPTURE(name);
    auto t = tensor_over(identity_bimodule(qq), m);
    CHECK(t.result.dim == m.dim);
    // The unitor a ⊗ x ↦ a·x, read on the chosen section.
    QMatrix act(m.dim, qq.dim * m.dim);
    for (std::size_t i = 0; i < qq.dim; ++i)
      for (std::size_t x = 0; x < m.dim; ++x)
        for (std::size_t k = 0; k < m.dim; ++k) act(k, i * m.dim + x) = m.lact[i](k, x);
    QMatrix unitor = act * t.section;
    CHECK(is_bimodule_map(t.result, m, unitor));
    CHECK(unitor.rank() == m.dim);
  }

  // Q[x]/(x^2 - 1) as a vector space over Q.
  auto v = from_actions(rationals(), rationals(), {QMatrix::identity(2)}, {QMatrix::identity(2)});
  REQUIRE(validate_algebra(quadratic_algebra(Rational(1))).ok());
  CHECK(tensor_over(v, v).result.dim == 4);

  CHECK_THROWS_AS(tensor_over(identity_bimodule(qq), identity_bimodule(rationals())), InvalidInput);
}

TEST_CASE("property: tensor dimension over a diagonal algebra splits along idempotents") {
  const auto corpus = bimodule_corpus();
  for (const auto& [mn, m] : corpus)
    for (const auto& [nn, n] : corpus) {
      if (!(m.right == n.left)) continue;
      const auto& b = m.right;
      bool diagonal = true;
      for (std::size_t i = 0; i < b.dim; ++i)
        for (std::size_t j = 0; j < b.dim; ++j)
          for (std::size_t k = 0; k < b.dim; ++k)
            diagonal = diagonal && b.m(i, j, k) == ((i == j && j == k) ? 1 : 0);
      if (!diagonal) continue;
      CAPTURE(mn);
      CAPTURE(nn);
      std::size_t expected = 0;
      for (std::size_t i = 0; i < b.dim; ++i)
        expected += diag_idempotent_action(m.ract, i).rank() * diag_idempotent_action(n.lact, i).rank();
      auto t = tensor_over(m, n);
      CHECK(t.result.dim == expected);
      CHECK(validate_bimodule(t.result).ok());
      CHECK((t.projection * t.section).is_identity());
    }
}

TEST_CASE("property: unitality and associativity up to isomorphism") {
  const auto corpus = bimodule_corpus();
  for (const auto& [name, m] : corpus) {
    CAPTURE(name);
    CHECK(bimodule_iso_exists(tensor_over(identity_bimodule(m.left), m).result, m).iso);
    CHECK(bimodule_iso_exists(tensor_over(m, identity_bimodule(m.right)).result, m).iso);
  }
  std::size_t triples = 0;
  for (const auto& x : corpus)
    for (const auto& y : corpus) {
      if (!(x.bimodule.right == y.bimodule.left)) continue;
      for (const auto& z : corpus) {
        if (!(y.bimodule.right == z.bimodule.left)) continue;
        if (x.bimodule.dim * y.bimodule.dim * z.bimodule.dim > 64) continue;
        CAPTURE(x.name);
        CAPTURE(y.name);
        CAPTURE(z.name);
        const auto xy = tensor_over(x.bimodule, y.bimodule);
        const auto yz = tensor_over(y.bimodule, z.bimodule);
        const auto l = tensor_over(xy.result, z.bimodule);
        const auto r = tensor_over(x.bimodule, yz.result);
        const QMatrix ix = QMatrix::identity(x.bimodule.dim), iz = QMatrix::identity(z.bimodule.dim);
        const QMatrix assoc = r.projection * ix.kron(yz.projection) * xy.section.kron(iz) * l.section;
        CHECK(is_bimodule_map(l.result, r.result, assoc));
        CHECK(assoc.rank() == r.result.dim);
        CHECK(l.result.dim == r.result.dim);
        ++triples;
      }
    }
  CHECK(triples > 50);
}

TEST_CASE("dual examples") {
  auto qq = diagonal_algebra(2);
  auto a = right_dual_candidate(identity_bimodule(qq));
  REQUIRE(a.datum);
  CHECK(a.datum->g.dim == 2);
  CHECK(check_zigzag(*a.datum));
  CHECK(bimodule_iso_exists(a.datum->g, identity_bimodule(qq)).iso);

  auto v = right_dual_candidate(vector_space(2));
  REQUIRE(v.datum);
  CHECK(v.datum->g.dim == 2);
  CHECK(check_zigzag(*v.datum));

  // The zero bimodule is its own dual: every snake lives on the zero space.
  auto z = right_dual_candidate(zero_bimodule(qq, rationals()));
  REQUIRE(z.datum);
  CHECK(z.datum->g.dim == 0);
  CHECK(check_zigzag(*z.datum));

  // Q over the dual numbers is not projective.
  auto bad = right_dual_candidate(point_over_dual_numbers_right());
  CHECK_FALSE(bad.datum);
  CHECK(bad.certificate.rank < bad.certificate.augmented_rank);
  CHECK(right_dual_candidate(point_over_dual_numbers_left()).datum);
  CHECK_FALSE(left_dual_candidate(point_over_dual_numbers_left()).datum);

  // Scaling coev breaks the snakes.
  auto broken = *v.datum;
  broken.coev = broken.coev.scaled(Rational(2));
  CHECK_FALSE(check_zigzag(broken));
  CHECK_THROWS_AS(check_zigzag(DualityDatum{vector_space(1), identity_bimodule(qq), QMatrix(), QMatrix()}),
                  InvalidInput);
}

TEST_CASE("property: dual data pass an independent snake evaluation") {
  for (const auto& [name, m] : bimodule_corpus()) {
    CAPTURE(name);
    for (const auto& res : {right_dual_candidate(m), left_dual_candidate(m)}) {
      REQUIRE(res.datum);
      auto s = snakes_via_quotients(*res.datum);
      CHECK(s.on_f.is_identity());
      CHECK(s.on_g.is_identity());
      auto t = snakes(*res.datum);
      CHECK(s.on_f == t.on_f);
      CHECK(s.on_g == t.on_g);
    }
  }
}

TEST_CASE("separability") {
  auto qq = is_separable(diagonal_algebra(2));
  CHECK(qq.separable);
  auto m2 = matrix_algebra(2);
  auto s = is_separable(m2);
  REQUIRE(s.separable);
  // Σ_i e_{i1} ⊗ e_{1i} is a separability element.
  QMatrix e(16, 1);
  for (std::size_t i = 0; i < 2; ++i) e((i * 2 + 0) * 4 + (0 * 2 + i), 0) = 1;
  for (const QMatrix& x : {e, *s.idempotent}) {
    QMatrix mu(4, 1);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        if (x(i * 4 + j, 0) == 0) continue;
        QMatrix ei(4, 1), ej(4, 1);
        ei(i, 0) = 1;
        ej(j, 0) = 1;
        mu = mu + m2.product(ei, ej).scaled(x(i * 4 + j, 0));
      }
    CHECK(mu == m2.unit_vector());
    for (std::size_t b = 0; b < 4; ++b) {
      QMatrix lhs = m2.left_mult(b).kron(QMatrix::identity(4)) * x;
      QMatrix rhs = QMatrix::identity(4).kron(m2.right_mult(b)) * x;
      CHECK(lhs == rhs);
    }
  }
  auto dual_numbers = is_separable(truncated_polynomial(2));
  CHECK_FALSE(dual_numbers.separable);
  CHECK(dual_numbers.certificate.rank < dual_numbers.certificate.augmented_rank);
  CHECK_FALSE(is_separable(upper_triangular()).separable);
  CHECK(is_separable(quadratic_algebra(Rational(-1))).separable);
}

TEST_CASE("Serre automorphism and Radford") {
  auto q = serre_automorphism(rationals());
  CHECK(q.dim == 1);
  CHECK(bimodule_iso_exists(q, identity_bimodule(rationals())).iso);

  auto qq = diagonal_algebra(2);
  auto s = serre_automorphism(qq);
  CHECK(s.dim == 2);
  CHECK(validate_bimodule(s).ok());
  CHECK(bimodule_iso_exists(s, identity_bimodule(qq)).iso);

  auto m2 = matrix_algebra(2);
  auto sm = serre_automorphism(m2);
  CHECK(validate_bimodule(sm).ok());
  CHECK(right_dual_candidate(sm).datum);
  CHECK(bimodule_iso_exists(tensor_over(sm, sm).result, identity_bimodule(m2)).iso);

  for (const char* name : {"Q", "QxQ", "QxQxQ", "M2(Q)", "Q[Z/3]"}) {
    CAPTURE(name);
    CHECK(radford_check(find_algebra(name)));
  }
  try {
    serre_automorphism(truncated_polynomial(2));
    FAIL("expected EvNotRightDualizable");
  } catch (const EvNotRightDualizable& e) {
    CHECK(e.certificate().rank < e.certificate().augmented_rank);
  }
  CHECK_THROWS_AS(radford_check(truncated_polynomial(2)), EvNotRightDualizable);
}

TEST_CASE("property: separable corpus algebras have a Serre automorphism and pass Radford") {
  for (const auto& [name, a] : algebra_corpus()) {
    CAPTURE(name);
    if (is_separable(a).separable) {
      auto s = serre_automorphism(a);
      CHECK(validate_bimodule(s).ok());
      if (a.dim <= 4) CHECK(radford_check(a));
    } else {
      CHECK_THROWS_AS(serre_automorphism(a), EvNotRightDualizable);
    }
  }
}

TEST_CASE("ambidexterity") {
  CHECK(ambidexterity_check(identity_bimodule(cyclic_group_algebra(3))).ambidextrous);
  auto v = ambidexterity_check(vector_space(2));
  CHECK(v.ambidextrous);
  REQUIRE(v.datum);
  CHECK(snakes_via_quotients(*v.datum).on_f.is_identity());

  auto one_sided = ambidexterity_check(point_over_dual_numbers_left());
  CHECK_FALSE(one_sided.ambidextrous);
  CHECK(one_sided.detail.find("no left dual") != std::string::npos);
  CHECK_THROWS_AS(ambidexterity_check(point_over_dual_numbers_right()), PreconditionUnmet);

  for (const auto& [name, m] : bimodule_corpus()) {
    CAPTURE(name);
    CHECK(ambidexterity_check(m).ambidextrous);
  }
}

TEST_CASE("bimodule isomorphism search") {
  auto m = identity_bimodule(matrix_algebra(2));
  auto same = bimodule_iso_exists(m, m);
  REQUIRE(same.iso);
  CHECK(same.iso->rank() == 4);
  CHECK(is_bimodule_map(m, m, *same.iso));

  CHECK_FALSE(bimodule_iso_exists(vector_space(2), vector_space(3)).iso);

  auto qq = diagonal_algebra(2);
  auto p1 = from_actions(qq, rationals(), {QMatrix::identity(1), QMatrix(1, 1)}, {QMatrix::identity(1)});
  auto p2 = from_actions(qq, rationals(), {QMatrix(1, 1), QMatrix::identity(1)}, {QMatrix::identity(1)});
  auto none = bimodule_iso_exists(p1, p2);
  CHECK_FALSE(none.iso);
  CHECK(intertwiners(p1, p2).empty());

  // Q ⊕ Q over (Q, Q): the identity is found at max-norm 1; with bound 0
  // nothing can be certified.
  CHECK(bimodule_iso_exists(vector_space(2), vector_space(2)).iso);
  CHECK_THROWS_AS(bimodule_iso_exists(vector_space(2), vector_space(2), 0), InconclusiveWithinBudget);
  CHECK_THROWS_AS(bimodule_iso_exists(vector_space(3), vector_space(3), 3, 2), InconclusiveWithinBudget);

  // e1 ⊕ e1 vs e1 ⊕ e2: intertwiners exist, none invertible, certified by the grid.
  auto e11 = from_actions(qq, rationals(), {QMatrix::identity(2), QMatrix(2, 2)}, {QMatrix::identity(2)});
  QMatrix d1(2, 2), d2(2, 2);
  d1(0, 0) = 1;
  d2(1, 1) = 1;
  auto e12 = from_actions(qq, rationals(), {d1, d2}, {QMatrix::identity(2)});
  auto cert = bimodule_iso_exists(e11, e12);
  CHECK_FALSE(cert.iso);
  CHECK(cert.certificate.find("determinant") != std::string::npos);
}
