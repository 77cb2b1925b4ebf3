#include "io_internal.hpp"

namespace hck::io {

using detail::array;
using detail::as;
using detail::field;
using detail::get;

namespace {

Json elements_json(const std::vector<wh::Element>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(x);
  return out;
}

std::vector<wh::Element> elements_from(const Json& j, const std::string& what) {
  return as<std::vector<wh::Element>>(array(j, what), what);
}

}  // namespace

Json to_json(const wh::FinAbGroup& g) { return {{"factors", g.factors}, {"free_rank", g.free_rank}}; }

wh::FinAbGroup group_from_json(const Json& j) {
  if (j.is_string()) return wh::parse_group(j.get<std::string>());
  std::vector<wh::Integer> orders;
  if (j.contains("factors"))
    for (auto n : get<std::vector<std::int64_t>>(j, "factors")) {
      if (n < 0) throw InvalidInput("group factors must be non-negative");
      orders.emplace_back(static_cast<long>(n));
    }
  const std::size_t free = j.contains("free_rank") ? get<std::size_t>(j, "free_rank") : 0;
  return wh::canonical_group(orders, free);
}

Json to_json(const wh::IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& x = m(r, c);
      if (x.fits_slong_p()) row.push_back(x.get_si());
      else row.push_back(x.get_str());
    }
    rows.push_back(row);
  }
  return rows;
}

wh::IntMatrix int_matrix_from_json(const Json& j) {
  array(j, "matrix");
  const std::size_t rows = j.size(), cols = rows ? array(j[0], "matrix row").size() : 0;
  wh::IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (array(j[r], "matrix row").size() != cols) throw InvalidInput("matrix rows have different lengths");
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& x = j[r][c];
      if (x.is_number_integer()) m(r, c) = static_cast<long>(x.get<long long>());
      else if (x.is_string() && m(r, c).set_str(x.get<std::string>(), 10) == 0) continue;
      else throw InvalidInput("matrix entries must be integers");
    }
  }
  return m;
}

Json to_json(const wh::QuadMapTable& f) {
  return {{"domain", to_json(f.domain)}, {"codomain", to_json(f.codomain)}, {"table", elements_json(f.table)}};
}

wh::QuadMapTable quad_map_from_json(const Json& j) {
  return {group_from_json(field(j, "domain")), group_from_json(field(j, "codomain")), elements_from(field(j, "table"), "table")};
}

Json to_json(const wh::Hom& h) {
  return {{"src", to_json(h.src)}, {"tgt", to_json(h.tgt)}, {"images", elements_json(h.images)}};
}

Json to_json(const wh::ThreeTypeData& t) {
  Json j = {{"pi2", to_json(t.pi2)}, {"pi3", to_json(t.pi3)}};
  if (t.q_one) j["q_one"] = *t.q_one;
  else j["q"] = to_json(t.q);
  return j;
}

wh::ThreeTypeData three_type_from_json(const Json& j) {
  wh::ThreeTypeData t;
  t.pi2 = group_from_json(field(j, "pi2"));
  t.pi3 = group_from_json(field(j, "pi3"));
  if (j.contains("q_one")) {
    t.q_one = as<wh::Element>(j["q_one"], "q_one");
    t.q = {t.pi2, t.pi3, {}};
  } else {
    t.q = quad_map_from_json(field(j, "q"));
    if (!(t.q.domain == t.pi2) || !(t.q.codomain == t.pi3)) throw InvalidInput("'q' must map pi2 to pi3");
  }
  return t;
}

Json to_json(const wh::BraidedTwoGroupData& b) {
  return {{"a", to_json(b.a)}, {"b", to_json(b.b)}, {"assoc", elements_json(b.assoc)}, {"braid", elements_json(b.braid)}};
}

wh::BraidedTwoGroupData braided_from_json(const Json& j) {
  return {group_from_json(field(j, "a")), group_from_json(field(j, "b")), elements_from(field(j, "assoc"), "assoc"),
          elements_from(field(j, "braid"), "braid")};
}

Json to_json(const wh::QuadraticWitness& w) {
  return {{"law", w.law}, {"args", elements_json(w.args)}, {"detail", w.detail}};
}

}  // namespace hck::io
