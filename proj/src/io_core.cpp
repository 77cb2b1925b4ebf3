#include "io_internal.hpp"

namespace hck::io {

using detail::array;
using detail::as;
using detail::field;
using detail::get;

Json to_json(const Rational& q) { return format_rational(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InvalidInput("rationals are written as \"p/q\" strings");
}

Json to_json(const QMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

QMatrix qmatrix_from_json(const Json& j) {
  array(j, "matrix");
  const std::size_t rows = j.size(), cols = rows ? array(j[0], "matrix row").size() : 0;
  std::vector<Rational> data;
  for (const auto& row : j) {
    if (array(row, "matrix row").size() != cols) throw InvalidInput("matrix rows have different lengths");
    for (const auto& x : row) data.push_back(rational_from_json(x));
  }
  return QMatrix(rows, cols, std::move(data));
}

// ---- fpcat -----------------------------------------------------------------------

Json to_json(const fpcat::Graph& g) {
  Json arrows = Json::array();
  for (const auto& a : g.arrows()) arrows.push_back({{"id", a.id}, {"src", a.src}, {"tgt", a.tgt}});
  return {{"vertices", g.vertices()}, {"arrows", arrows}};
}

fpcat::Graph graph_from_json(const Json& j) {
  std::vector<fpcat::Arrow> arrows;
  for (const auto& a : array(field(j, "arrows"), "arrows"))
    arrows.push_back({get<std::string>(a, "id"), get<std::string>(a, "src"), get<std::string>(a, "tgt")});
  return fpcat::Graph(get<std::vector<std::string>>(j, "vertices"), std::move(arrows));
}

Json to_json(const fpcat::Graph& g, const fpcat::Path& p) {
  Json ids = Json::array();
  for (int a : p.arrows) ids.push_back(g.arrows()[static_cast<std::size_t>(a)].id);
  return ids;
}

Json to_json(const fpcat::FinPresentation& p) {
  Json j = to_json(p.graph());
  Json rel = Json::array();
  for (const auto& r : p.relations()) rel.push_back({to_json(p.graph(), r.lhs), to_json(p.graph(), r.rhs)});
  j["relations"] = rel;
  return j;
}

fpcat::FinPresentation presentation_from_json(const Json& j) {
  fpcat::Graph g = graph_from_json(j);
  std::vector<fpcat::Relation> rel;
  if (j.contains("relations")) {
    for (const auto& r : array(j["relations"], "relations")) {
      if (!r.is_array() || r.size() != 2) throw InvalidInput("a relation is a pair of arrow lists");
      const auto l = as<std::vector<std::string>>(r[0], "relation side");
      const auto rr = as<std::vector<std::string>>(r[1], "relation side");
      if (l.empty() && rr.empty()) throw InvalidInput("a relation needs at least one nonempty side");
      fpcat::Path lp = l.empty() ? fpcat::Path{} : fpcat::make_path(g, l);
      fpcat::Path rp = rr.empty() ? fpcat::Path{} : fpcat::make_path(g, rr);
      if (l.empty()) lp.start = rp.start;
      if (rr.empty()) rp.start = lp.start;
      rel.push_back({lp, rp});
    }
  }
  return fpcat::FinPresentation(std::move(g), std::move(rel));
}

Json to_json(const fpcat::FinCategory& c) {
  Json ms = Json::array(), ids = Json::array(), comp = Json::array();
  const auto& m = c.morphisms();
  for (const auto& x : m) ms.push_back({{"id", x.name}, {"src", c.objects()[static_cast<std::size_t>(x.src)]},
                                        {"tgt", c.objects()[static_cast<std::size_t>(x.tgt)]}});
  for (std::size_t o = 0; o < c.num_objects(); ++o) ids.push_back(m[static_cast<std::size_t>(c.identity(static_cast<int>(o)))].name);
  for (std::size_t f = 0; f < m.size(); ++f)
    for (std::size_t g = 0; g < m.size(); ++g) {
      const int gf = c.compose(static_cast<int>(g), static_cast<int>(f));
      if (gf >= 0) comp.push_back({m[f].name, m[g].name, m[static_cast<std::size_t>(gf)].name});
    }
  return {{"objects", c.objects()}, {"morphisms", ms}, {"identities", ids}, {"compose", comp}};
}

fpcat::FinCategory category_from_json(const Json& j) {
  const auto objects = get<std::vector<std::string>>(j, "objects");
  std::map<std::string, int> at;
  for (std::size_t i = 0; i < objects.size(); ++i) at[objects[i]] = static_cast<int>(i);
  auto object = [&](const std::string& name) {
    auto it = at.find(name);
    if (it == at.end()) throw InvalidInput("unknown object '" + name + "'");
    return it->second;
  };
  std::vector<fpcat::Morphism> ms;
  for (const auto& m : array(field(j, "morphisms"), "morphisms"))
    ms.push_back({get<std::string>(m, "id"), object(get<std::string>(m, "src")), object(get<std::string>(m, "tgt"))});
  const auto ids = get<std::vector<std::string>>(j, "identities");
  if (ids.size() != objects.size()) throw InvalidInput("one identity per object is required");
  const auto comp = get<std::vector<std::array<std::string, 3>>>(j, "compose");
  return fpcat::category_from_names(objects, ms, ids, comp);
}

Json to_json(const fpcat::Assignment& a) { return {{"objects", a.objects}, {"arrows", a.arrows}}; }

fpcat::Assignment assignment_from_json(const Json& j) {
  fpcat::Assignment a;
  a.objects = get<std::map<std::string, std::string>>(j, "objects");
  a.arrows = get<std::map<std::string, std::string>>(j, "arrows");
  return a;
}

// ---- simplicial -----------------------------------------------------------------

Json to_json(const simplicial::TruncSSet& x) {
  return {{"dim", x.dim}, {"cells", x.cells}, {"face", x.face}, {"degen", x.degen}};
}

simplicial::TruncSSet sset_from_json(const Json& j) {
  simplicial::TruncSSet x;
  x.dim = get<int>(j, "dim");
  if (x.dim < 0) throw InvalidInput("'dim' must be non-negative");
  x.cells = get<std::vector<std::vector<std::string>>>(j, "cells");
  x.face = get<std::vector<std::vector<std::vector<int>>>>(j, "face");
  x.degen = get<std::vector<std::vector<std::vector<int>>>>(j, "degen");
  const auto levels = static_cast<std::size_t>(x.dim) + 1;
  if (x.cells.size() != levels || x.face.size() != levels || x.degen.size() != levels)
    throw InvalidInput("'cells', 'face' and 'degen' need dim + 1 levels");
  return x;
}

namespace {

Json map_json(const std::vector<std::vector<simplicial::SSetMap>>& maps) {
  Json out = Json::array();
  for (const auto& level : maps) {
    Json l = Json::array();
    for (const auto& m : level) l.push_back(m.cell);
    out.push_back(l);
  }
  return out;
}

std::vector<std::vector<simplicial::SSetMap>> maps_from(const Json& j, const std::string& what) {
  std::vector<std::vector<simplicial::SSetMap>> out;
  for (const auto& level : array(j, what)) {
    std::vector<simplicial::SSetMap> l;
    for (const auto& m : array(level, what)) l.push_back({as<std::vector<std::vector<int>>>(m, what)});
    out.push_back(std::move(l));
  }
  return out;
}

}  // namespace

Json to_json(const simplicial::SegalSpaceData& x) {
  Json levels = Json::array();
  for (const auto& l : x.level) levels.push_back(to_json(l));
  return {{"n", x.n}, {"levels", levels}, {"face", map_json(x.face)}, {"degen", map_json(x.degen)}};
}

simplicial::SegalSpaceData segal_space_from_json(const Json& j) {
  simplicial::SegalSpaceData x;
  x.n = get<int>(j, "n");
  for (const auto& l : array(field(j, "levels"), "levels")) x.level.push_back(sset_from_json(l));
  x.face = maps_from(field(j, "face"), "face");
  x.degen = maps_from(field(j, "degen"), "degen");
  return x;
}

}  // namespace hck::io
