#include "io_internal.hpp"

namespace hck::io {

using detail::array;
using detail::as;
using detail::field;
using detail::get;

namespace {

template <class Cell>
Json cells_json(const std::vector<Cell>& cells, const std::vector<std::string>& ends) {
  Json out = Json::array();
  for (const auto& c : cells)
    out.push_back({{"id", c.name}, {"src", ends[static_cast<std::size_t>(c.src)]}, {"tgt", ends[static_cast<std::size_t>(c.tgt)]}});
  return out;
}

std::vector<std::string> names1(const bicat::FinBicategory& b) {
  std::vector<std::string> out;
  for (const auto& c : b.cells1) out.push_back(c.name);
  return out;
}

std::vector<std::string> names2(const bicat::FinBicategory& b) {
  std::vector<std::string> out;
  for (const auto& c : b.cells2) out.push_back(c.name);
  return out;
}

// Defined entries of a square table as [x, y, table(x, y)].
Json pair_table(const std::vector<int>& t, std::size_t n, const std::vector<std::string>& in,
                const std::vector<std::string>& out) {
  Json rows = Json::array();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const int v = t[x * n + y];
      if (v >= 0) rows.push_back({in[x], in[y], out[static_cast<std::size_t>(v)]});
    }
  return rows;
}

class Names {
 public:
  Names(std::vector<std::string> names, std::string what) : what_(std::move(what)) {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (!at_.emplace(names[i], static_cast<int>(i)).second) throw InvalidInput("duplicate " + what_ + " '" + names[i] + "'");
  }
  int operator()(const Json& j) const {
    const auto name = as<std::string>(j, what_);
    auto it = at_.find(name);
    if (it == at_.end()) throw InvalidInput("unknown " + what_ + " '" + name + "'");
    return it->second;
  }
  std::size_t size() const { return at_.size(); }

 private:
  std::map<std::string, int> at_;
  std::string what_;
};

template <class Cell>
std::vector<Cell> cells_from(const Json& j, const std::string& what, const Names& ends) {
  std::vector<Cell> out;
  for (const auto& c : array(j, what)) out.push_back({get<std::string>(c, "id"), ends(field(c, "src")), ends(field(c, "tgt"))});
  return out;
}

std::vector<int> per_cell(const Json& j, const std::string& what, const Names& names, std::size_t expected) {
  std::vector<int> out;
  for (const auto& x : array(j, what)) out.push_back(names(x));
  if (out.size() != expected) throw InvalidInput("'" + what + "' has the wrong length");
  return out;
}

std::vector<int> pair_table_from(const Json& j, const std::string& what, const Names& in, const Names& out) {
  const std::size_t n = in.size();
  std::vector<int> t(n * n, -1);
  for (const auto& row : array(j, what)) {
    if (!row.is_array() || row.size() != 3) throw InvalidInput("'" + what + "' entries are triples");
    t[static_cast<std::size_t>(in(row[0])) * n + static_cast<std::size_t>(in(row[1]))] = out(row[2]);
  }
  return t;
}

}  // namespace

Json to_json(const bicat::FinBicategory& b) {
  const auto n1 = names1(b), n2 = names2(b);
  Json unit = Json::array(), id2 = Json::array(), l = Json::array(), r = Json::array(), assoc = Json::array();
  for (int u : b.unit) unit.push_back(n1[static_cast<std::size_t>(u)]);
  for (int i : b.id2) id2.push_back(n2[static_cast<std::size_t>(i)]);
  for (int i : b.lunit) l.push_back(n2[static_cast<std::size_t>(i)]);
  for (int i : b.runit) r.push_back(n2[static_cast<std::size_t>(i)]);
  const std::size_t n = b.n1();
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t f = 0; f < n; ++f) {
        const int a = b.assoc[(h * n + g) * n + f];
        if (a >= 0) assoc.push_back({n1[h], n1[g], n1[f], n2[static_cast<std::size_t>(a)]});
      }
  return {{"objects", b.objects},
          {"cells1", cells_json(b.cells1, b.objects)},
          {"cells2", cells_json(b.cells2, n1)},
          {"unit", unit},
          {"id2", id2},
          {"vcomp", pair_table(b.vcomp, b.n2(), n2, n2)},
          {"hcomp1", pair_table(b.hcomp1, n, n1, n1)},
          {"hcomp2", pair_table(b.hcomp2, b.n2(), n2, n2)},
          {"assoc", assoc},
          {"lunit", l},
          {"runit", r}};
}

bicat::FinBicategory bicategory_from_json(const Json& j) {
  bicat::FinBicategory b;
  b.objects = get<std::vector<std::string>>(j, "objects");
  const Names objects(b.objects, "object");
  b.cells1 = cells_from<bicat::Cell1>(field(j, "cells1"), "cells1", objects);
  const Names c1(names1(b), "1-cell");
  b.cells2 = cells_from<bicat::Cell2>(field(j, "cells2"), "cells2", c1);
  const Names c2(names2(b), "2-cell");
  b.unit = per_cell(field(j, "unit"), "unit", c1, b.objects.size());
  b.id2 = per_cell(field(j, "id2"), "id2", c2, b.n1());
  b.lunit = per_cell(field(j, "lunit"), "lunit", c2, b.n1());
  b.runit = per_cell(field(j, "runit"), "runit", c2, b.n1());
  b.vcomp = pair_table_from(field(j, "vcomp"), "vcomp", c2, c2);
  b.hcomp1 = pair_table_from(field(j, "hcomp1"), "hcomp1", c1, c1);
  b.hcomp2 = pair_table_from(field(j, "hcomp2"), "hcomp2", c2, c2);
  const std::size_t n = b.n1();
  b.assoc.assign(n * n * n, -1);
  for (const auto& row : array(field(j, "assoc"), "assoc")) {
    if (!row.is_array() || row.size() != 4) throw InvalidInput("'assoc' entries are [h, g, f, cell]");
    const auto h = static_cast<std::size_t>(c1(row[0])), g = static_cast<std::size_t>(c1(row[1])),
               f = static_cast<std::size_t>(c1(row[2]));
    b.assoc[(h * n + g) * n + f] = c2(row[3]);
  }
  return b;
}

bicat::MonoidalData monoid_from_json(const Json& j) {
  const auto table = get<std::vector<std::vector<int>>>(j, "table");
  const int unit = get<int>(j, "unit");
  const auto names = j.contains("names") ? get<std::vector<std::string>>(j, "names") : std::vector<std::string>{};
  const bool braided = j.contains("braided") && get<bool>(j, "braided");
  for (const auto& row : table)
    for (int x : row)
      if (x < 0 || static_cast<std::size_t>(x) >= table.size()) throw InvalidInput("monoid table entry out of range");
  return bicat::discrete_monoidal(table, unit, names, braided);
}

Json to_json(const bicat::BinaryOp& op) { return {{"n", op.n}, {"table", op.table}}; }

bicat::BinaryOp binary_op_from_json(const Json& j) {
  bicat::BinaryOp op{get<int>(j, "n"), get<std::vector<int>>(j, "table")};
  if (op.n < 0 || op.table.size() != static_cast<std::size_t>(op.n * op.n))
    throw InvalidInput("'table' must have n * n entries");
  for (int x : op.table)
    if (x < 0 || x >= op.n) throw InvalidInput("operation table entry out of range");
  return op;
}

}  // namespace hck::io
