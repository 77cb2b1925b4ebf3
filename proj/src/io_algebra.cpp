#include "io_internal.hpp"

namespace hck::io {

using detail::array;
using detail::as;
using detail::field;
using detail::get;

namespace {

Json vector_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_json(q));
  return out;
}

std::vector<Rational> vector_from(const Json& j, const std::string& what) {
  std::vector<Rational> out;
  for (const auto& x : array(j, what)) out.push_back(rational_from_json(x));
  return out;
}

}  // namespace

Json to_json(const alg::Algebra& a) {
  Json mult = Json::array();
  for (std::size_t i = 0; i < a.dim; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.dim; ++j) {
      Json v = Json::array();
      for (std::size_t k = 0; k < a.dim; ++k) v.push_back(to_json(a.m(i, j, k)));
      row.push_back(v);
    }
    mult.push_back(row);
  }
  return {{"dim", a.dim}, {"mult", mult}, {"unit", vector_json(a.unit)}};
}

alg::Algebra algebra_from_json(const Json& j) {
  alg::Algebra a;
  a.dim = get<std::size_t>(j, "dim");
  const auto& mult = array(field(j, "mult"), "mult");
  if (mult.size() != a.dim) throw InvalidInput("'mult' needs dim rows");
  for (const auto& row : mult) {
    if (array(row, "mult").size() != a.dim) throw InvalidInput("'mult' needs dim x dim entries");
    for (const auto& v : row) {
      auto coeffs = vector_from(v, "mult");
      if (coeffs.size() != a.dim) throw InvalidInput("each product needs dim coefficients");
      a.mult.insert(a.mult.end(), coeffs.begin(), coeffs.end());
    }
  }
  a.unit = vector_from(field(j, "unit"), "unit");
  if (a.unit.size() != a.dim) throw InvalidInput("'unit' needs dim coefficients");
  return a;
}

Json to_json(const alg::Bimodule& m) {
  Json l = Json::array(), r = Json::array();
  for (const auto& x : m.lact) l.push_back(to_json(x));
  for (const auto& x : m.ract) r.push_back(to_json(x));
  return {{"left", to_json(m.left)}, {"right", to_json(m.right)}, {"dim", m.dim}, {"lact", l}, {"ract", r}};
}

alg::Bimodule bimodule_from_json(const Json& j) {
  alg::Bimodule m;
  m.left = algebra_from_json(field(j, "left"));
  m.right = algebra_from_json(field(j, "right"));
  m.dim = get<std::size_t>(j, "dim");
  for (const auto& x : array(field(j, "lact"), "lact")) m.lact.push_back(qmatrix_from_json(x));
  for (const auto& x : array(field(j, "ract"), "ract")) m.ract.push_back(qmatrix_from_json(x));
  if (m.lact.size() != m.left.dim || m.ract.size() != m.right.dim)
    throw InvalidInput("one action matrix per basis element is required");
  return m;
}

// ---- bordism ------------------------------------------------------------------

Json to_json(const bordism::MatrixTFT& z) {
  Json j = {{"dim", z.dim}, {"ev", vector_json(z.ev.data())}, {"coev", vector_json(z.coev.data())}};
  if (z.pairing) j["pairing"] = to_json(*z.pairing);
  return j;
}

bordism::MatrixTFT tft_from_json(const Json& j) {
  std::optional<QMatrix> pairing;
  if (j.contains("pairing")) pairing = qmatrix_from_json(j["pairing"]);
  if (j.contains("E")) return bordism::tft_from(qmatrix_from_json(j["E"]), std::move(pairing));
  bordism::MatrixTFT z;
  z.dim = get<std::size_t>(j, "dim");
  const auto ev = vector_from(field(j, "ev"), "ev");
  const auto coev = vector_from(field(j, "coev"), "coev");
  z.ev = QMatrix::row(ev);
  z.coev = QMatrix::column(coev);
  z.pairing = std::move(pairing);
  return z;
}

Json to_json(const bordism::NormalForm& nf) {
  return {{"domain_size", nf.domain_size}, {"codomain_size", nf.codomain_size}, {"partner", nf.partner},
          {"flips", nf.flips}, {"loops", nf.loops}};
}

}  // namespace hck::io
