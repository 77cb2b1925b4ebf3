#include <algorithm>
#include <cstdlib>

#include "algmod_internal.hpp"
#include "hck/algmod.hpp"

namespace hck::alg {

Bimodule evaluation_bimodule(const Algebra& a) {
  Bimodule ev{tensor(a, opposite(a)), rationals(), a.dim, {}, {QMatrix::identity(a.dim)}};
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) ev.lact.push_back(a.left_mult(i) * a.right_mult(j));
  return ev;
}

Bimodule serre_automorphism(const Algebra& a) {
  const std::size_t n = a.dim;
  const Bimodule ev = evaluation_bimodule(a);
  // The adjoint of ev that needs A ⊗ A^op-projectivity.
  auto adj = left_dual_candidate(ev);
  if (!adj.datum)
    throw EvNotRightDualizable("ev has no adjoint over A (x) A^op: " + adj.certificate.to_string(), adj.certificate);
  const Bimodule& evr = adj.datum->f;  // Q – A ⊗ A^op

  // After A ⊗_A (−) absorbs the identity factor and τ is applied as a twist,
  // the composite is ev^R ⊗_{A ⊗ A^op} Z with Z = A ⊗ A, (b ⊗ c)·(x ⊗ y) =
  // b x ⊗ y c. The outer A-A actions (left on y, right on x) are carried as a
  // right action of A^op ⊗ A: (x ⊗ y)·(c ⊗ d) = x d ⊗ c y.
  Bimodule z{ev.left, tensor(opposite(a), a), n * n, {}, {}};
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t c = 0; c < n; ++c) z.lact.push_back(a.left_mult(b).kron(a.right_mult(c)));
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t d = 0; d < n; ++d) z.ract.push_back(a.right_mult(d).kron(a.left_mult(c)));

  const Bimodule raw = tensor_over(evr, z).result;
  Bimodule s{a, a, raw.dim, {}, {}};
  for (std::size_t i = 0; i < n; ++i) {
    QMatrix l(raw.dim, raw.dim), r(raw.dim, raw.dim);
    for (std::size_t k = 0; k < n; ++k) {
      if (a.unit[k] == 0) continue;
      l = l + raw.ract[i * n + k].scaled(a.unit[k]);
      r = r + raw.ract[k * n + i].scaled(a.unit[k]);
    }
    s.lact.push_back(l);
    s.ract.push_back(r);
  }
  return s;
}

IsoResult bimodule_iso_exists(const Bimodule& m, const Bimodule& n, int bound, std::size_t budget) {
  if (!(m.left == n.left) || !(m.right == n.right)) throw InvalidInput("bimodules over different algebras");
  IsoResult res;
  if (m.dim != n.dim) {
    res.certificate = "dimensions differ (" + std::to_string(m.dim) + " vs " + std::to_string(n.dim) + ")";
    return res;
  }
  const std::size_t d = m.dim;
  if (d == 0) {
    res.iso = QMatrix(0, 0);
    return res;
  }
  const auto basis = intertwiners(m, n);
  if (basis.empty()) {
    res.certificate = "the only bimodule map is zero";
    return res;
  }
  const std::size_t r = basis.size();
  std::size_t tried = 0;
  std::vector<Rational> c(r);
  for (int k = 0; k <= bound; ++k) {
    // Odometer over [-k, k]^r, keeping vectors of max-norm exactly k.
    std::vector<int> v(r, -k);
    for (;;) {
      int norm = 0;
      for (int x : v) norm = std::max(norm, std::abs(x));
      if (norm == k && k > 0) {
        if (++tried > budget) throw InconclusiveWithinBudget("invertibility sweep exceeded its budget");
        for (std::size_t i = 0; i < r; ++i) c[i] = v[i];
        QMatrix f = detail::combine(basis, c);
        if (f.rank() == d) {
          res.iso = f;
          return res;
        }
      }
      std::size_t pos = 0;
      while (pos < r && v[pos] == k) v[pos++] = -k;
      if (pos == r) break;
      ++v[pos];
    }
  }
  // det(Σ c_i F_i) has degree d in each c_i; vanishing on a grid with more
  // than d points per coordinate forces it to vanish identically.
  if (2 * bound + 1 > static_cast<int>(d)) {
    res.certificate = "determinant of degree " + std::to_string(d) + " vanishes on the grid [-" +
                      std::to_string(bound) + ", " + std::to_string(bound) + "]^" + std::to_string(r);
    return res;
  }
  throw InconclusiveWithinBudget("no invertible intertwiner with coefficients in [-" + std::to_string(bound) + ", " +
                                 std::to_string(bound) + "] and the grid is too small to certify absence");
}

bool radford_check(const Algebra& a, int bound) {
  const Bimodule s = serre_automorphism(a);
  const Bimodule ss = tensor_over(s, s).result;
  return bimodule_iso_exists(ss, identity_bimodule(a), bound).iso.has_value();
}

AmbiReport ambidexterity_check(const Bimodule& m, int bound) {
  auto right = right_dual_candidate(m);
  if (!right.datum) throw PreconditionUnmet("no right dual: " + right.certificate.to_string());
  const Bimodule& d = right.datum->g;  // B-A
  AmbiReport rep;
  auto left = left_dual_candidate(m);
  if (!left.datum) {
    rep.detail = "no left dual: " + left.certificate.to_string();
    return rep;
  }
  const Bimodule& e = left.datum->f;  // B-A
  auto iso = bimodule_iso_exists(e, d, bound);
  if (!iso.iso) {
    rep.detail = "left and right duals are not isomorphic: " + iso.certificate;
    return rep;
  }
  const QMatrix& phi = *iso.iso;
  const QMatrix phi_inv = d.dim ? *phi.inverse() : QMatrix(0, 0);
  const QMatrix im = QMatrix::identity(m.dim);
  // Transport (E, M, ev_E, coev_E) along φ : E -> D.
  const auto me = tensor_over(m, e), md = tensor_over(m, d);
  const auto em = tensor_over(e, m), dm = tensor_over(d, m);
  QMatrix ev = left.datum->ev * me.projection * im.kron(phi_inv) * md.section;
  QMatrix coev = dm.projection * phi.kron(im) * em.section * left.datum->coev;
  DualityDatum datum{d, m, ev, coev};
  rep.ambidextrous = check_zigzag(datum);
  rep.detail = rep.ambidextrous ? "right dual is also a left dual" : "transported datum fails the zigzag identities";
  rep.datum = std::move(datum);
  return rep;
}

// ---- corpus ---------------------------------------------------------------------

std::vector<NamedAlgebra> algebra_corpus() {
  return {{"Q", rationals()},
          {"QxQ", diagonal_algebra(2)},
          {"QxQxQ", diagonal_algebra(3)},
          {"QxQxQxQ", diagonal_algebra(4)},
          {"M2(Q)", matrix_algebra(2)},
          {"Q[Z/2]", cyclic_group_algebra(2)},
          {"Q[Z/3]", cyclic_group_algebra(3)},
          {"Q[Z/4]", cyclic_group_algebra(4)},
          {"Q(i)", quadratic_algebra(Rational(-1))},
          {"Q(i)xQ", direct_product(quadratic_algebra(Rational(-1)), rationals())},
          {"Q[x]/(x^2)", truncated_polynomial(2)},
          {"Q[x]/(x^3)", truncated_polynomial(3)},
          {"T2(Q)", upper_triangular()}};
}

namespace {

QMatrix unit_matrix(std::size_t n, std::size_t i, std::size_t j) {
  QMatrix e(n, n);
  e(i, j) = 1;
  return e;
}

QMatrix scalar(int x) { return QMatrix(1, 1, {Rational(x)}); }

}  // namespace

std::vector<NamedBimodule> bimodule_corpus() {
  const Algebra q = rationals(), q2 = diagonal_algebra(2), q3 = diagonal_algebra(3), m2 = matrix_algebra(2);
  const Algebra z3 = cyclic_group_algebra(3), ci = quadratic_algebra(Rational(-1));
  std::vector<NamedBimodule> out;
  for (const auto& [name, a] : std::vector<NamedAlgebra>{{"Q", q}, {"QxQ", q2}, {"QxQxQ", q3}, {"M2(Q)", m2}, {"Q[Z/3]", z3}, {"Q(i)", ci}})
    out.push_back({"1_" + name, identity_bimodule(a)});
  for (std::size_t d = 1; d <= 3; ++d) out.push_back({"Q^" + std::to_string(d), vector_space(d)});
  out.push_back({"0:QxQ-Q", zero_bimodule(q2, q)});

  // Columns and rows of M2(Q).
  std::vector<QMatrix> col_l, row_r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      col_l.push_back(unit_matrix(2, i, j));
      row_r.push_back(unit_matrix(2, j, i));
    }
  out.push_back({"Q^2:M2-Q", from_actions(m2, q, col_l, {QMatrix::identity(2)})});
  out.push_back({"Q^2:Q-M2", from_actions(q, m2, {QMatrix::identity(2)}, row_r)});
  std::vector<QMatrix> col2_l;
  for (const auto& x : col_l) col2_l.push_back(x.kron(QMatrix::identity(2)));
  out.push_back({"Q^4:M2-Q", from_actions(m2, q, col2_l, {QMatrix::identity(4)})});

  // Idempotent pieces of Q x Q.
  out.push_back({"e1:QxQ-Q", from_actions(q2, q, {scalar(1), scalar(0)}, {scalar(1)})});
  out.push_back({"e2:Q-QxQ", from_actions(q, q2, {scalar(1)}, {scalar(0), scalar(1)})});
  out.push_back({"e1e2:QxQ-QxQ", from_actions(q2, q2, {scalar(1), scalar(0)}, {scalar(0), scalar(1)})});
  out.push_back({"QxQ:Q-QxQ", from_actions(q, q2, {QMatrix::identity(2)}, {unit_matrix(2, 0, 0), unit_matrix(2, 1, 1)})});
  out.push_back({"QxQ:QxQ-Q", from_actions(q2, q, {unit_matrix(2, 0, 0), unit_matrix(2, 1, 1)}, {QMatrix::identity(2)})});
  out.push_back({"e3:QxQxQ-QxQ", from_actions(q3, q2, {scalar(0), scalar(0), scalar(1)}, {scalar(1), scalar(0)})});

  // Automorphism twists.
  QMatrix swap(2, 2);
  swap(0, 1) = swap(1, 0) = 1;
  out.push_back({"swap:QxQ", twisted_identity(q2, swap)});
  QMatrix inv3(3, 3);
  inv3(0, 0) = inv3(2, 1) = inv3(1, 2) = 1;
  out.push_back({"inv:Q[Z/3]", twisted_identity(z3, inv3)});
  QMatrix conj(2, 2);
  conj(0, 0) = 1;
  conj(1, 1) = -1;
  out.push_back({"conj:Q(i)", twisted_identity(ci, conj)});
  return out;
}

}  // namespace hck::alg
