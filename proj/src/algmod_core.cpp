#include <sstream>

#include "algmod_internal.hpp"
#include "hck/algmod.hpp"

namespace hck::alg {

namespace detail {

QMatrix vstack_all(const std::vector<QMatrix>& blocks, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& b : blocks) rows += b.rows();
  QMatrix out(rows, cols);
  std::size_t r0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (b(i, j) != 0) out(r0 + i, j) = b(i, j);
    r0 += b.rows();
  }
  return out;
}

QMatrix combine(const std::vector<QMatrix>& basis, const std::vector<Rational>& c) {
  QMatrix out(basis.front().rows(), basis.front().cols());
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (c[k] != 0) out = out + basis[k].scaled(c[k]);
  return out;
}

QMatrix action_of(const std::vector<QMatrix>& m, const QMatrix& v) {
  QMatrix out(m.front().rows(), m.front().cols());
  for (std::size_t i = 0; i < m.size(); ++i)
    if (v(i, 0) != 0) out = out + m[i].scaled(v(i, 0));
  return out;
}

QMatrix coordinate_matrix(const std::vector<QMatrix>& basis, const std::vector<QMatrix>& images) {
  const std::size_t k = basis.size();
  if (k == 0) return QMatrix(0, images.size());
  const std::size_t n = basis.front().rows() * basis.front().cols();
  QMatrix b(n, k);
  for (std::size_t t = 0; t < k; ++t) {
    auto v = basis[t].vec();
    for (std::size_t i = 0; i < n; ++i) b(i, t) = v[i];
  }
  QMatrix out(k, images.size());
  for (std::size_t s = 0; s < images.size(); ++s) {
    auto c = coordinates_in(b, QMatrix::column(images[s].vec()));
    if (!c) throw InvalidInput("image leaves the span of the basis");
    for (std::size_t t = 0; t < k; ++t) out(t, s) = (*c)[t];
  }
  return out;
}

RankCertificate certify(const QMatrix& a, const QMatrix& b) {
  RankCertificate c;
  c.equations = a.rows();
  c.unknowns = a.cols();
  c.rank = a.rank();
  c.augmented_rank = a.hstack(b).rank();
  return c;
}

}  // namespace detail

using detail::vstack_all;

QMatrix Algebra::left_mult(std::size_t i) const {
  QMatrix l(dim, dim);
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t k = 0; k < dim; ++k) l(k, j) = m(i, j, k);
  return l;
}

QMatrix Algebra::right_mult(std::size_t j) const {
  QMatrix r(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < dim; ++k) r(k, i) = m(i, j, k);
  return r;
}

QMatrix Algebra::product(const QMatrix& x, const QMatrix& y) const {
  QMatrix out(dim, 1);
  for (std::size_t i = 0; i < dim; ++i) {
    if (x(i, 0) == 0) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (y(j, 0) == 0) continue;
      Rational c = x(i, 0) * y(j, 0);
      for (std::size_t k = 0; k < dim; ++k)
        if (m(i, j, k) != 0) out(k, 0) += c * m(i, j, k);
    }
  }
  return out;
}

ValidationReport validate_algebra(const Algebra& a) {
  ValidationReport rep;
  if (a.mult.size() != a.dim * a.dim * a.dim || a.unit.size() != a.dim) {
    rep.add("shape", "mult needs dim^3 entries and unit dim entries");
    return rep;
  }
  std::vector<QMatrix> l, r;
  for (std::size_t i = 0; i < a.dim; ++i) {
    l.push_back(a.left_mult(i));
    r.push_back(a.right_mult(i));
  }
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      QMatrix ij(a.dim, a.dim);
      for (std::size_t k = 0; k < a.dim; ++k)
        if (a.m(i, j, k) != 0) ij = ij + l[k].scaled(a.m(i, j, k));
      if (!(l[i] * l[j] == ij)) {
        std::ostringstream os;
        os << "(e" << i << " e" << j << ") e_k != e" << i << " (e" << j << " e_k) for some k";
        rep.add("associativity", os.str());
      }
    }
  if (a.dim > 0) {
    const QMatrix u = a.unit_vector();
    if (!detail::action_of(l, u).is_identity()) rep.add("unit", "unit is not a left unit");
    if (!detail::action_of(r, u).is_identity()) rep.add("unit", "unit is not a right unit");
  }
  return rep;
}

Algebra opposite(const Algebra& a) {
  Algebra o = a;
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k) o.mult[(i * a.dim + j) * a.dim + k] = a.m(j, i, k);
  return o;
}

Algebra tensor(const Algebra& a, const Algebra& b) {
  Algebra t;
  t.dim = a.dim * b.dim;
  t.mult.assign(t.dim * t.dim * t.dim, Rational(0));
  t.unit.assign(t.dim, Rational(0));
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < b.dim; ++j) {
      t.unit[i * b.dim + j] = a.unit[i] * b.unit[j];
      for (std::size_t k = 0; k < a.dim; ++k)
        for (std::size_t l = 0; l < b.dim; ++l)
          for (std::size_t p = 0; p < a.dim; ++p) {
            if (a.m(i, k, p) == 0) continue;
            for (std::size_t q = 0; q < b.dim; ++q)
              if (b.m(j, l, q) != 0)
                t.mult[((i * b.dim + j) * t.dim + (k * b.dim + l)) * t.dim + p * b.dim + q] = a.m(i, k, p) * b.m(j, l, q);
          }
    }
  return t;
}

Algebra direct_product(const Algebra& a, const Algebra& b) {
  Algebra p;
  p.dim = a.dim + b.dim;
  p.mult.assign(p.dim * p.dim * p.dim, Rational(0));
  p.unit = a.unit;
  p.unit.insert(p.unit.end(), b.unit.begin(), b.unit.end());
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k) p.mult[(i * p.dim + j) * p.dim + k] = a.m(i, j, k);
  const std::size_t o = a.dim;
  for (std::size_t i = 0; i < b.dim; ++i)
    for (std::size_t j = 0; j < b.dim; ++j)
      for (std::size_t k = 0; k < b.dim; ++k) p.mult[((o + i) * p.dim + o + j) * p.dim + o + k] = b.m(i, j, k);
  return p;
}

Algebra rationals() { return Algebra{1, {Rational(1)}, {Rational(1)}}; }

Algebra diagonal_algebra(std::size_t n) {
  Algebra a{n, std::vector<Rational>(n * n * n, Rational(0)), std::vector<Rational>(n, Rational(1))};
  for (std::size_t i = 0; i < n; ++i) a.mult[(i * n + i) * n + i] = 1;
  return a;
}

Algebra matrix_algebra(std::size_t n) {
  const std::size_t d = n * n;
  Algebra a{d, std::vector<Rational>(d * d * d, Rational(0)), std::vector<Rational>(d, Rational(0))};
  for (std::size_t i = 0; i < n; ++i) {
    a.unit[i * n + i] = 1;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) a.mult[((i * n + j) * d + (j * n + l)) * d + (i * n + l)] = 1;
  }
  return a;
}

Algebra cyclic_group_algebra(std::size_t n) {
  Algebra a{n, std::vector<Rational>(n * n * n, Rational(0)), std::vector<Rational>(n, Rational(0))};
  a.unit[0] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a.mult[(i * n + j) * n + (i + j) % n] = 1;
  return a;
}

Algebra truncated_polynomial(std::size_t k) {
  Algebra a{k, std::vector<Rational>(k * k * k, Rational(0)), std::vector<Rational>(k, Rational(0))};
  a.unit[0] = 1;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; i + j < k; ++j) a.mult[(i * k + j) * k + i + j] = 1;
  return a;
}

Algebra quadratic_algebra(const Rational& c) {
  Algebra a{2, std::vector<Rational>(8, Rational(0)), {Rational(1), Rational(0)}};
  a.mult[(0 * 2 + 0) * 2 + 0] = 1;
  a.mult[(0 * 2 + 1) * 2 + 1] = 1;
  a.mult[(1 * 2 + 0) * 2 + 1] = 1;
  a.mult[(1 * 2 + 1) * 2 + 0] = c;
  return a;
}

Algebra upper_triangular() {
  // e11 = 0, e12 = 1, e22 = 2
  Algebra a{3, std::vector<Rational>(27, Rational(0)), {Rational(1), Rational(0), Rational(1)}};
  auto set = [&](std::size_t i, std::size_t j, std::size_t k) { a.mult[(i * 3 + j) * 3 + k] = 1; };
  set(0, 0, 0);
  set(0, 1, 1);
  set(1, 2, 1);
  set(2, 2, 2);
  return a;
}

// ---- bimodules ----------------------------------------------------------------

ValidationReport validate_bimodule(const Bimodule& m) {
  ValidationReport rep;
  rep.merge(validate_algebra(m.left));
  rep.merge(validate_algebra(m.right));
  if (!rep.ok()) return rep;
  if (m.lact.size() != m.left.dim || m.ract.size() != m.right.dim) {
    rep.add("shape", "one action matrix per basis element of each algebra");
    return rep;
  }
  for (const auto* acts : {&m.lact, &m.ract})
    for (const auto& x : *acts)
      if (x.rows() != m.dim || x.cols() != m.dim) {
        rep.add("shape", "action matrices must be dim x dim");
        return rep;
      }
  const QMatrix id = QMatrix::identity(m.dim);
  auto check = [&](const Algebra& a, const std::vector<QMatrix>& act, bool right, const char* side) {
    for (std::size_t i = 0; i < a.dim; ++i)
      for (std::size_t j = 0; j < a.dim; ++j) {
        QMatrix ij(m.dim, m.dim);
        for (std::size_t k = 0; k < a.dim; ++k)
          if (a.m(i, j, k) != 0) ij = ij + act[k].scaled(a.m(i, j, k));
        QMatrix composite = right ? act[j] * act[i] : act[i] * act[j];
        if (!(composite == ij))
          rep.add(std::string(side) + "_action",
                  "e" + std::to_string(i) + " e" + std::to_string(j) + " does not act as the composite");
      }
    if (a.dim > 0 && !(detail::action_of(act, a.unit_vector()) == id))
      rep.add(std::string(side) + "_action", "unit does not act as the identity");
  };
  check(m.left, m.lact, false, "left");
  check(m.right, m.ract, true, "right");
  for (std::size_t i = 0; i < m.left.dim; ++i)
    for (std::size_t j = 0; j < m.right.dim; ++j)
      if (!(m.lact[i] * m.ract[j] == m.ract[j] * m.lact[i]))
        rep.add("commutation", "left e" + std::to_string(i) + " and right e" + std::to_string(j) + " do not commute");
  return rep;
}

Bimodule identity_bimodule(const Algebra& a) {
  Bimodule m{a, a, a.dim, {}, {}};
  for (std::size_t i = 0; i < a.dim; ++i) {
    m.lact.push_back(a.left_mult(i));
    m.ract.push_back(a.right_mult(i));
  }
  return m;
}

Bimodule vector_space(std::size_t d) {
  return Bimodule{rationals(), rationals(), d, {QMatrix::identity(d)}, {QMatrix::identity(d)}};
}

Bimodule zero_bimodule(const Algebra& a, const Algebra& b) {
  return Bimodule{a, b, 0, std::vector<QMatrix>(a.dim, QMatrix(0, 0)), std::vector<QMatrix>(b.dim, QMatrix(0, 0))};
}

Bimodule twisted_identity(const Algebra& a, const QMatrix& sigma) {
  Bimodule m = identity_bimodule(a);
  std::vector<QMatrix> r = m.ract;
  for (std::size_t j = 0; j < a.dim; ++j) m.ract[j] = detail::action_of(r, sigma.col(j));
  return m;
}

Bimodule from_actions(const Algebra& a, const Algebra& b, std::vector<QMatrix> l, std::vector<QMatrix> r) {
  const std::size_t d = l.empty() ? (r.empty() ? 0 : r.front().rows()) : l.front().rows();
  return Bimodule{a, b, d, std::move(l), std::move(r)};
}

Bimodule external_tensor(const Bimodule& m, const Bimodule& n) {
  Bimodule t{tensor(m.left, n.left), tensor(m.right, n.right), m.dim * n.dim, {}, {}};
  for (const auto& x : m.lact)
    for (const auto& y : n.lact) t.lact.push_back(x.kron(y));
  for (const auto& x : m.ract)
    for (const auto& y : n.ract) t.ract.push_back(x.kron(y));
  return t;
}

bool is_bimodule_map(const Bimodule& src, const Bimodule& tgt, const QMatrix& f) {
  if (!(src.left == tgt.left) || !(src.right == tgt.right)) return false;
  if (f.rows() != tgt.dim || f.cols() != src.dim) return false;
  for (std::size_t i = 0; i < src.left.dim; ++i)
    if (!(f * src.lact[i] == tgt.lact[i] * f)) return false;
  for (std::size_t j = 0; j < src.right.dim; ++j)
    if (!(f * src.ract[j] == tgt.ract[j] * f)) return false;
  return true;
}

std::vector<QMatrix> intertwiners(const Bimodule& src, const Bimodule& tgt) {
  if (!(src.left == tgt.left) || !(src.right == tgt.right))
    throw InvalidInput("bimodule maps need the same pair of algebras");
  const std::size_t s = src.dim, t = tgt.dim;
  if (s == 0 || t == 0) return {};
  const QMatrix is = QMatrix::identity(s), it = QMatrix::identity(t);
  std::vector<QMatrix> eqs;
  // vec(F X) = (X^T ⊗ I) vec F and vec(Y F) = (I ⊗ Y) vec F.
  for (std::size_t i = 0; i < src.left.dim; ++i) eqs.push_back(src.lact[i].transpose().kron(it) - is.kron(tgt.lact[i]));
  for (std::size_t j = 0; j < src.right.dim; ++j) eqs.push_back(src.ract[j].transpose().kron(it) - is.kron(tgt.ract[j]));
  std::vector<QMatrix> out;
  for (const auto& v : vstack_all(eqs, s * t).nullspace()) out.push_back(QMatrix::unvec(v.vec(), t, s));
  return out;
}

TensorProduct tensor_over(const Bimodule& m, const Bimodule& n) {
  if (!(m.right == n.left)) throw InvalidInput("tensor_over: middle algebras differ");
  const std::size_t dm = m.dim, dn = n.dim, total = dm * dn;
  const QMatrix im = QMatrix::identity(dm), in = QMatrix::identity(dn);
  // Rows spanning the relations x·b ⊗ y − x ⊗ b·y.
  std::vector<QMatrix> rel;
  for (std::size_t j = 0; j < m.right.dim; ++j) rel.push_back((m.ract[j].kron(in) - im.kron(n.lact[j])).transpose());
  std::vector<std::size_t> piv;
  const QMatrix r = total ? vstack_all(rel, total).rref(&piv) : QMatrix(0, 0);
  std::vector<bool> is_pivot(total, false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < total; ++c)
    if (!is_pivot[c]) free.push_back(c);

  TensorProduct tp;
  const std::size_t q = free.size();
  tp.projection = QMatrix(q, total);
  tp.section = QMatrix(total, q);
  for (std::size_t a = 0; a < q; ++a) {
    tp.projection(a, free[a]) = 1;
    tp.section(free[a], a) = 1;
    for (std::size_t k = 0; k < piv.size(); ++k) tp.projection(a, piv[k]) = -r(k, free[a]);
  }
  tp.result = Bimodule{m.left, n.right, q, {}, {}};
  for (const auto& l : m.lact) tp.result.lact.push_back(tp.projection * l.kron(in) * tp.section);
  for (const auto& x : n.ract) tp.result.ract.push_back(tp.projection * im.kron(x) * tp.section);
  return tp;
}

std::string RankCertificate::to_string() const {
  std::ostringstream os;
  os << "rank " << rank << " < augmented rank " << augmented_rank << " (" << equations << " equations, "
     << unknowns << " unknowns)";
  return os.str();
}

}  // namespace hck::alg
