#include "algmod_internal.hpp"
#include "hck/algmod.hpp"

namespace hck::alg {

namespace {

// x ⊗ s ↦ x·s on P ⊗ S, and s ⊗ y ↦ s·y on S ⊗ Q.
QMatrix right_unitor(const Bimodule& p) {
  const std::size_t ds = p.right.dim;
  QMatrix rho(p.dim, p.dim * ds);
  for (std::size_t x = 0; x < p.dim; ++x)
    for (std::size_t s = 0; s < ds; ++s)
      for (std::size_t i = 0; i < p.dim; ++i) rho(i, x * ds + s) = p.ract[s](i, x);
  return rho;
}

QMatrix left_unitor(const Bimodule& q) {
  const std::size_t ds = q.left.dim;
  QMatrix lam(q.dim, ds * q.dim);
  for (std::size_t s = 0; s < ds; ++s)
    for (std::size_t y = 0; y < q.dim; ++y)
      for (std::size_t i = 0; i < q.dim; ++i) lam(i, s * q.dim + y) = q.lact[s](i, y);
  return lam;
}

// Everything the two snakes need besides coev.
struct SnakeContext {
  const Bimodule& p;  // R-S
  const Bimodule& q;  // S-R
  TensorProduct pq;   // P ⊗_S Q
  QMatrix ev_full;    // P-side ev lifted to Q ⊗ P -> S
  QMatrix rho, lam;

  SnakeContext(const Bimodule& p_, const Bimodule& q_, const QMatrix& ev)
      : p(p_), q(q_), pq(tensor_over(p_, q_)) {
    const auto qp = tensor_over(q_, p_);
    if (ev.rows() != p_.right.dim || ev.cols() != qp.result.dim) throw InvalidInput("ev has the wrong shape");
    ev_full = ev * qp.projection;
    rho = right_unitor(p_);
    lam = left_unitor(q_);
  }

  Snakes run(const QMatrix& coev) const {
    if (coev.rows() != pq.result.dim || coev.cols() != p.left.dim) throw InvalidInput("coev has the wrong shape");
    const QMatrix w = p.left.dim ? pq.section * coev * p.left.unit_vector() : QMatrix(p.dim * q.dim, 1);
    const QMatrix ip = QMatrix::identity(p.dim), iq = QMatrix::identity(q.dim);
    Snakes s;
    s.on_f = rho * ip.kron(ev_full) * w.kron(ip);
    s.on_g = lam * ev_full.kron(iq) * iq.kron(w);
    return s;
  }
};

void check_pairing(const Bimodule& f, const Bimodule& g) {
  if (!(f.right == g.left) || !(g.right == f.left)) throw InvalidInput("f and g are not opposite bimodules");
}

// Solves for coev given ev; the snakes are linear in coev.
DualResult solve_coev(const Bimodule& p, const Bimodule& q, const QMatrix& ev) {
  SnakeContext ctx(p, q, ev);
  const auto basis = intertwiners(identity_bimodule(p.left), ctx.pq.result);
  const std::size_t n1 = p.dim * p.dim, n2 = q.dim * q.dim;
  QMatrix k(n1 + n2, basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const auto s = ctx.run(basis[c]);
    auto v1 = s.on_f.vec(), v2 = s.on_g.vec();
    for (std::size_t i = 0; i < n1; ++i) k(i, c) = v1[i];
    for (std::size_t i = 0; i < n2; ++i) k(n1 + i, c) = v2[i];
  }
  QMatrix rhs(n1 + n2, 1);
  for (std::size_t i = 0; i < p.dim; ++i) rhs(i * p.dim + i, 0) = 1;
  for (std::size_t i = 0; i < q.dim; ++i) rhs(n1 + i * q.dim + i, 0) = 1;

  DualResult res;
  auto x = k.solve(rhs);
  if (!x) {
    res.certificate = detail::certify(k, rhs);
    return res;
  }
  std::vector<Rational> c(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) c[i] = (*x)(i, 0);
  QMatrix coev = basis.empty() ? QMatrix(ctx.pq.result.dim, p.left.dim) : detail::combine(basis, c);
  res.datum = DualityDatum{p, q, ev, coev};
  return res;
}

// Linear maps Φ : V -> W (rows = dim W) with Φ X_i = Y_i Φ for every i.
std::vector<QMatrix> equivariant_maps(std::size_t dv, std::size_t dw, const std::vector<QMatrix>& xs,
                                      const std::vector<QMatrix>& ys) {
  if (dv == 0 || dw == 0) return {};
  const QMatrix iv = QMatrix::identity(dv), iw = QMatrix::identity(dw);
  std::vector<QMatrix> eqs;
  for (std::size_t i = 0; i < xs.size(); ++i) eqs.push_back(xs[i].transpose().kron(iw) - iv.kron(ys[i]));
  std::vector<QMatrix> out;
  for (const auto& v : detail::vstack_all(eqs, dv * dw).nullspace()) out.push_back(QMatrix::unvec(v.vec(), dw, dv));
  return out;
}

}  // namespace

Snakes snakes(const DualityDatum& d) {
  check_pairing(d.f, d.g);
  return SnakeContext(d.f, d.g, d.ev).run(d.coev);
}

bool check_zigzag(const DualityDatum& d) {
  check_pairing(d.f, d.g);
  const auto qp = tensor_over(d.g, d.f);
  const auto pq = tensor_over(d.f, d.g);
  if (!is_bimodule_map(qp.result, identity_bimodule(d.f.right), d.ev)) return false;
  if (!is_bimodule_map(identity_bimodule(d.f.left), pq.result, d.coev)) return false;
  const auto s = snakes(d);
  return s.on_f.is_identity() && s.on_g.is_identity();
}

DualResult right_dual_candidate(const Bimodule& m) {
  const Algebra& b = m.right;
  std::vector<QMatrix> rb;
  for (std::size_t j = 0; j < b.dim; ++j) rb.push_back(b.right_mult(j));
  // Φ : M -> B with Φ(x·b) = Φ(x) b.
  const auto phi = equivariant_maps(m.dim, b.dim, m.ract, rb);
  const std::size_t k = phi.size();
  Bimodule d{b, m.left, k, {}, {}};
  for (std::size_t i = 0; i < b.dim; ++i) {
    std::vector<QMatrix> img;
    for (const auto& f : phi) img.push_back(b.left_mult(i) * f);
    d.lact.push_back(detail::coordinate_matrix(phi, img));
  }
  for (std::size_t i = 0; i < m.left.dim; ++i) {
    std::vector<QMatrix> img;
    for (const auto& f : phi) img.push_back(f * m.lact[i]);
    d.ract.push_back(detail::coordinate_matrix(phi, img));
  }
  if (k == 0) {
    d.lact.assign(b.dim, QMatrix(0, 0));
    d.ract.assign(m.left.dim, QMatrix(0, 0));
  }
  // ev : D ⊗_A M -> B, φ ⊗ x ↦ φ(x).
  QMatrix full(b.dim, k * m.dim);
  for (std::size_t t = 0; t < k; ++t)
    for (std::size_t x = 0; x < m.dim; ++x)
      for (std::size_t i = 0; i < b.dim; ++i) full(i, t * m.dim + x) = phi[t](i, x);
  const QMatrix ev = full * tensor_over(d, m).section;
  return solve_coev(m, d, ev);
}

DualResult left_dual_candidate(const Bimodule& m) {
  const Algebra& a = m.left;
  std::vector<QMatrix> la;
  for (std::size_t i = 0; i < a.dim; ++i) la.push_back(a.left_mult(i));
  // Ψ : M -> A with Ψ(a·x) = a Ψ(x).
  const auto psi = equivariant_maps(m.dim, a.dim, m.lact, la);
  const std::size_t k = psi.size();
  Bimodule e{m.right, a, k, {}, {}};
  for (std::size_t j = 0; j < m.right.dim; ++j) {
    std::vector<QMatrix> img;
    for (const auto& f : psi) img.push_back(f * m.ract[j]);
    e.lact.push_back(detail::coordinate_matrix(psi, img));
  }
  for (std::size_t i = 0; i < a.dim; ++i) {
    std::vector<QMatrix> img;
    for (const auto& f : psi) img.push_back(a.right_mult(i) * f);
    e.ract.push_back(detail::coordinate_matrix(psi, img));
  }
  if (k == 0) {
    e.lact.assign(m.right.dim, QMatrix(0, 0));
    e.ract.assign(a.dim, QMatrix(0, 0));
  }
  // ev : M ⊗_B E -> A, x ⊗ ψ ↦ ψ(x).
  QMatrix full(a.dim, m.dim * k);
  for (std::size_t x = 0; x < m.dim; ++x)
    for (std::size_t t = 0; t < k; ++t)
      for (std::size_t i = 0; i < a.dim; ++i) full(i, x * k + t) = psi[t](i, x);
  const QMatrix ev = full * tensor_over(m, e).section;
  return solve_coev(e, m, ev);
}

Separability is_separable(const Algebra& a) {
  const std::size_t n = a.dim, nn = n * n;
  const QMatrix id = QMatrix::identity(n);
  std::vector<QMatrix> eqs;
  // a·e − e·a = 0 for each basis element, μ(e) = 1.
  for (std::size_t i = 0; i < n; ++i) eqs.push_back(a.left_mult(i).kron(id) - id.kron(a.right_mult(i)));
  QMatrix mu(n, nn);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) mu(k, i * n + j) = a.m(i, j, k);
  eqs.push_back(mu);
  const QMatrix sys = detail::vstack_all(eqs, nn);
  QMatrix rhs(sys.rows(), 1);
  for (std::size_t k = 0; k < n; ++k) rhs(nn * n + k, 0) = a.unit[k];
  Separability s;
  auto x = sys.solve(rhs);
  if (x) {
    s.separable = true;
    s.idempotent = *x;
  } else {
    s.certificate = detail::certify(sys, rhs);
  }
  return s;
}

}  // namespace hck::alg
