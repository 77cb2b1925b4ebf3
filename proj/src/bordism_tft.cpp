#include "bordism_internal.hpp"

namespace hck::bordism {

namespace {

QMatrix swap_factors(std::size_t d) {
  QMatrix t(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) t(j * d + i, i * d + j) = 1;
  return t;
}

QMatrix as_row(const QMatrix& m) {
  const std::size_t d = m.rows();
  QMatrix r(1, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) r(0, i * d + j) = m(i, j);
  return r;
}

QMatrix as_square(const QMatrix& flat, std::size_t d) {
  QMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = flat.data()[i * d + j];
  return m;
}

std::size_t power(std::size_t d, std::size_t k) {
  std::size_t p = 1;
  while (k--) p *= d;
  return p;
}

// The elementary pieces of a theory, precomputed once per evaluation.
struct Pieces {
  std::size_t d;
  QMatrix cup_lr, cup_rl, cap_lr, cap_rl;
  QMatrix jdown, jup;
};

Pieces pieces(const MatrixTFT& z, Calculus c) {
  const auto rep = validate_tft(z, c);
  if (!rep.ok()) {
    const auto& v = rep.violations.front();
    if (v.kind == "shape") throw DimensionMismatch(v.detail);
    throw InvalidTFTData(v.kind + ": " + v.detail);
  }
  const std::size_t d = z.dim;
  const QMatrix tau = swap_factors(d);
  Pieces p{d, {}, {}, {}, {}, {}, {}};
  if (c == Calculus::Unoriented) {
    const QMatrix& b = *z.pairing;
    p.cup_lr = as_row(b);
    p.cap_lr = as_row(*b.inverse()).transpose();
  } else {
    p.cup_lr = z.ev;
    p.cap_lr = tau * z.coev;
  }
  p.cup_rl = p.cup_lr * tau;
  p.cap_rl = tau * p.cap_lr;
  if (c == Calculus::Quotient) {
    // V -> V∨ through the pairing, in the dual basis fixed by ev.
    p.jdown = *as_square(z.ev, d).inverse() * *z.pairing;
    p.jup = *p.jdown.inverse();
  }
  return p;
}

}  // namespace

MatrixTFT standard_tft(std::size_t d, std::optional<QMatrix> pairing) {
  if (!pairing) pairing = QMatrix::identity(d);
  return tft_from(QMatrix::identity(d), std::move(pairing));
}

MatrixTFT tft_from(const QMatrix& e, std::optional<QMatrix> pairing) {
  if (e.rows() != e.cols()) throw DimensionMismatch("E must be square");
  auto inv = e.inverse();
  if (!inv) throw InvalidTFTData("E is singular");
  MatrixTFT z;
  z.dim = e.rows();
  z.ev = as_row(e);
  z.coev = as_row(*inv).transpose();
  z.pairing = std::move(pairing);
  return z;
}

std::vector<MatrixTFT> tft_corpus() {
  auto m = [](std::size_t n, std::vector<int> xs) {
    std::vector<Rational> v(xs.begin(), xs.end());
    return QMatrix(n, n, v);
  };
  std::vector<MatrixTFT> out;
  // dim 1
  const std::vector<std::pair<int, int>> ones = {{1, 1}, {2, 1}, {-3, 1}, {1, -1}, {5, 7}};
  for (auto [e, b] : ones) out.push_back(tft_from(m(1, {e}), m(1, {b})));
  out.push_back(tft_from(QMatrix(1, 1, {Rational(1, 2)}), m(1, {-2})));
  // dim 2
  const std::vector<QMatrix> e2 = {m(2, {1, 0, 0, 1}), m(2, {1, 1, 0, 1}), m(2, {2, 1, 1, 1}), m(2, {0, 1, 1, 0})};
  const std::vector<QMatrix> b2 = {m(2, {1, 0, 0, 1}), m(2, {1, 0, 0, -1}), m(2, {0, 1, 1, 0}), m(2, {2, 1, 1, 3})};
  const std::vector<std::pair<int, int>> pick2 = {{0, 0}, {0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 3}, {2, 1}};
  for (auto [i, j] : pick2) out.push_back(tft_from(e2[i], b2[j]));
  // dim 3
  const std::vector<QMatrix> e3 = {m(3, {1, 0, 0, 0, 1, 0, 0, 0, 1}), m(3, {1, 2, 3, 0, 1, 4, 0, 0, 1}),
                                   m(3, {0, 0, 1, 1, 0, 0, 0, 1, 0})};
  const std::vector<QMatrix> b3 = {m(3, {1, 0, 0, 0, 1, 0, 0, 0, 1}), m(3, {1, 0, 0, 0, 2, 0, 0, 0, -1}),
                                   m(3, {0, 0, 1, 0, 1, 0, 1, 0, 0})};
  const std::vector<std::pair<int, int>> pick3 = {{0, 0}, {0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 2}, {1, 1}};
  for (auto [i, j] : pick3) out.push_back(tft_from(e3[i], b3[j]));
  return out;
}

ValidationReport validate_tft(const MatrixTFT& z, Calculus c) {
  ValidationReport rep;
  const std::size_t d = z.dim, dd = d * d;
  if (z.ev.rows() != 1 || z.ev.cols() != dd) rep.add("shape", "ev must be 1 x " + std::to_string(dd));
  if (z.coev.rows() != dd || z.coev.cols() != 1) rep.add("shape", "coev must be " + std::to_string(dd) + " x 1");
  if (z.pairing && (z.pairing->rows() != d || z.pairing->cols() != d))
    rep.add("shape", "pairing must be " + std::to_string(d) + " x " + std::to_string(d));
  if (!rep.ok()) return rep;

  // The two snakes are (E C)^T and C E.
  const QMatrix e = as_square(z.ev, d), cm = as_square(z.coev, d);
  if (!(e * cm).is_identity()) rep.add("zigzag_plus", "the snake on + is not the identity");
  if (!(cm * e).is_identity()) rep.add("zigzag_minus", "the snake on - is not the identity");

  if (c != Calculus::Oriented) {
    if (!z.pairing) {
      rep.add("pairing_missing", "a symmetric pairing is required");
    } else {
      if (!(z.pairing->transpose() == *z.pairing)) rep.add("pairing_asymmetric", "b is not symmetric");
      if (z.pairing->rank() != d) rep.add("pairing_degenerate", "b is singular");
    }
  }
  return rep;
}

QMatrix evaluate_tft(const CobWord& w, const MatrixTFT& z, Calculus c) {
  typecheck(w, c);
  const Pieces p = pieces(z, c);
  const std::size_t d = p.d;
  std::size_t k = w.domain.size();
  QMatrix acc = QMatrix::identity(power(d, k));
  for (const auto& s : w.slices) {
    const QMatrix* x = nullptr;
    std::size_t in = 0, out = 0;
    switch (s.kind) {
      case Slice::Kind::Id: continue;
      case Slice::Kind::Cup:
        x = s.elbow == Elbow::LR ? &p.cup_lr : &p.cup_rl;
        in = 2;
        break;
      case Slice::Kind::Cap:
        x = s.elbow == Elbow::LR ? &p.cap_lr : &p.cap_rl;
        out = 2;
        break;
      case Slice::Kind::JUp:
        x = &p.jup;
        in = out = 1;
        break;
      case Slice::Kind::JDown:
        x = &p.jdown;
        in = out = 1;
        break;
    }
    const std::size_t rest = k - s.pos - in;
    const QMatrix full = QMatrix::identity(power(d, s.pos)).kron(*x).kron(QMatrix::identity(power(d, rest)));
    acc = full * acc;
    k = k - in + out;
  }
  return acc;
}

}  // namespace hck::bordism
