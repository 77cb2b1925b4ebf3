#include <algorithm>
#include <functional>
#include <numeric>

#include "hck/fpcat.hpp"

namespace hck::fpcat {

FinCategory::FinCategory(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                         std::vector<int> identity, std::vector<int> compose_table)
    : objects_(std::move(objects)),
      morphisms_(std::move(morphisms)),
      identity_(std::move(identity)),
      table_(std::move(compose_table)) {
  const auto n = morphisms_.size();
  if (identity_.size() != objects_.size()) throw InvalidInput("identity table has the wrong size");
  if (table_.size() != n * n) throw InvalidInput("composition table has the wrong size");
  for (const auto& m : morphisms_)
    if (m.src < 0 || m.tgt < 0 || static_cast<std::size_t>(m.src) >= objects_.size() ||
        static_cast<std::size_t>(m.tgt) >= objects_.size())
      throw InvalidInput("morphism '" + m.name + "' has an out-of-range endpoint");
  for (int id : identity_)
    if (id < 0 || static_cast<std::size_t>(id) >= n) throw InvalidInput("identity out of range");
  for (int v : table_)
    if (v < -1 || v >= static_cast<int>(n)) throw InvalidInput("composite out of range");
}

int FinCategory::object(const std::string& name) const {
  auto it = std::find(objects_.begin(), objects_.end(), name);
  if (it == objects_.end()) throw InvalidInput("unknown object '" + name + "'");
  return static_cast<int>(it - objects_.begin());
}

int FinCategory::morphism(const std::string& name) const {
  for (std::size_t i = 0; i < morphisms_.size(); ++i)
    if (morphisms_[i].name == name) return static_cast<int>(i);
  throw InvalidInput("unknown morphism '" + name + "'");
}

std::vector<int> FinCategory::hom(int a, int b) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < morphisms_.size(); ++i)
    if (morphisms_[i].src == a && morphisms_[i].tgt == b) out.push_back(static_cast<int>(i));
  return out;
}

namespace {

// Image of a path under an arrow-wise assignment, composed left to right.
int evaluate(const FinCategory& c, const std::vector<int>& arrow_image, int start_object, const Path& p) {
  int acc = c.identity(start_object);
  for (int a : p.arrows) acc = c.compose(arrow_image[static_cast<std::size_t>(a)], acc);
  return acc;
}

}  // namespace

bool check_functor(const FinPresentation& p, const FinCategory& target, const Assignment& a) {
  const Graph& g = p.graph();
  std::vector<int> obj(g.num_vertices());
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    auto it = a.objects.find(g.vertices()[v]);
    if (it == a.objects.end()) throw InvalidInput("assignment misses vertex '" + g.vertices()[v] + "'");
    obj[v] = target.object(it->second);
  }
  std::vector<int> arr(g.num_arrows());
  for (std::size_t i = 0; i < g.num_arrows(); ++i) {
    const auto& arrow = g.arrows()[i];
    auto it = a.arrows.find(arrow.id);
    if (it == a.arrows.end()) throw InvalidInput("assignment misses arrow '" + arrow.id + "'");
    const int m = target.morphism(it->second);
    if (target.src(m) != obj[static_cast<std::size_t>(g.src(static_cast<int>(i)))] ||
        target.tgt(m) != obj[static_cast<std::size_t>(g.tgt(static_cast<int>(i)))])
      throw InvalidInput("arrow '" + arrow.id + "' is sent to '" + it->second + "' of the wrong type");
    arr[i] = m;
  }
  for (const auto& r : p.relations()) {
    const int start = obj[static_cast<std::size_t>(r.lhs.start)];
    if (evaluate(target, arr, start, r.lhs) != evaluate(target, arr, start, r.rhs)) return false;
  }
  return true;
}

ValidationReport validate_category(const FinCategory& c) {
  ValidationReport rep;
  const int n = static_cast<int>(c.num_morphisms());
  auto name = [&](int m) { return c.morphisms()[static_cast<std::size_t>(m)].name; };
  for (std::size_t x = 0; x < c.num_objects(); ++x) {
    const int id = c.identity(static_cast<int>(x));
    if (c.src(id) != static_cast<int>(x) || c.tgt(id) != static_cast<int>(x))
      rep.add("identity_typing", "identity of '" + c.objects()[x] + "' is '" + name(id) + "'");
  }
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f) {
      const int gf = c.compose(g, f);
      const bool composable = c.tgt(f) == c.src(g);
      if (!composable) {
        if (gf != -1) rep.add("composite_of_noncomposable", "(" + name(g) + ", " + name(f) + ")");
        continue;
      }
      if (gf == -1) {
        rep.add("missing_composite", "(" + name(g) + ", " + name(f) + ")");
        continue;
      }
      if (c.src(gf) != c.src(f) || c.tgt(gf) != c.tgt(g))
        rep.add("composite_typing", "(" + name(g) + ", " + name(f) + ") -> " + name(gf));
    }
  if (!rep.ok()) return rep;
  for (int f = 0; f < n; ++f) {
    if (c.compose(f, c.identity(c.src(f))) != f) rep.add("right_unit", name(f));
    if (c.compose(c.identity(c.tgt(f)), f) != f) rep.add("left_unit", name(f));
  }
  for (int h = 0; h < n; ++h)
    for (int g = 0; g < n; ++g) {
      if (c.tgt(g) != c.src(h)) continue;
      const int hg = c.compose(h, g);
      for (int f = 0; f < n; ++f) {
        if (c.tgt(f) != c.src(g)) continue;
        if (c.compose(hg, f) != c.compose(h, c.compose(g, f)))
          rep.add("associativity", "(" + name(h) + ", " + name(g) + ", " + name(f) + ")");
      }
    }
  return rep;
}

bool is_gaunt(const FinCategory& c) {
  const int n = static_cast<int>(c.num_morphisms());
  for (int f = 0; f < n; ++f) {
    if (c.is_identity(f)) continue;
    for (int g : c.hom(c.tgt(f), c.src(f)))
      if (c.compose(g, f) == c.identity(c.src(f)) && c.compose(f, g) == c.identity(c.tgt(f))) return false;
  }
  return true;
}

FinPresentation cell(int k) {
  if (k == 0) return FinPresentation(Graph({"0"}, {}), {});
  if (k == 1) return FinPresentation(Graph({"0", "1"}, {{"f", "0", "1"}}), {});
  throw InvalidInput("cell(" + std::to_string(k) + ") is not a 1-category; only k = 0, 1 are available");
}

FinPresentation tautological_presentation(const FinCategory& c) {
  std::vector<Arrow> arrows;
  for (const auto& m : c.morphisms())
    arrows.push_back({m.name, c.objects()[static_cast<std::size_t>(m.src)], c.objects()[static_cast<std::size_t>(m.tgt)]});
  Graph g(c.objects(), arrows);
  std::vector<Relation> rels;
  const int n = static_cast<int>(c.num_morphisms());
  for (int f = 0; f < n; ++f)
    for (int h = 0; h < n; ++h) {
      if (c.tgt(f) != c.src(h)) continue;
      rels.push_back({Path{c.src(f), {f, h}}, Path{c.src(f), {c.compose(h, f)}}});
    }
  for (std::size_t x = 0; x < c.num_objects(); ++x)
    rels.push_back({Path{static_cast<int>(x), {c.identity(static_cast<int>(x))}}, Path{static_cast<int>(x), {}}});
  return FinPresentation(std::move(g), std::move(rels));
}

Assignment identity_assignment(const FinCategory& c) {
  Assignment a;
  for (const auto& o : c.objects()) a.objects[o] = o;
  for (const auto& m : c.morphisms()) a.arrows[m.name] = m.name;
  return a;
}

bool is_isomorphism(const FinCategory& c, const FinCategory& d, const CategoryIso& iso) {
  if (c.num_objects() != d.num_objects() || c.num_morphisms() != d.num_morphisms()) return false;
  if (iso.objects.size() != c.num_objects() || iso.morphisms.size() != c.num_morphisms()) return false;
  std::vector<bool> seen_o(d.num_objects()), seen_m(d.num_morphisms());
  for (int o : iso.objects) {
    if (o < 0 || static_cast<std::size_t>(o) >= d.num_objects() || seen_o[static_cast<std::size_t>(o)]) return false;
    seen_o[static_cast<std::size_t>(o)] = true;
  }
  for (int m : iso.morphisms) {
    if (m < 0 || static_cast<std::size_t>(m) >= d.num_morphisms() || seen_m[static_cast<std::size_t>(m)]) return false;
    seen_m[static_cast<std::size_t>(m)] = true;
  }
  const int n = static_cast<int>(c.num_morphisms());
  auto im = [&](int m) { return iso.morphisms[static_cast<std::size_t>(m)]; };
  auto io = [&](int o) { return iso.objects[static_cast<std::size_t>(o)]; };
  for (int f = 0; f < n; ++f)
    if (d.src(im(f)) != io(c.src(f)) || d.tgt(im(f)) != io(c.tgt(f))) return false;
  for (std::size_t x = 0; x < c.num_objects(); ++x)
    if (im(c.identity(static_cast<int>(x))) != d.identity(io(static_cast<int>(x)))) return false;
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f) {
      const int gf = c.compose(g, f);
      if (gf >= 0 && d.compose(im(g), im(f)) != im(gf)) return false;
    }
  return true;
}

std::optional<CategoryIso> find_isomorphism(const FinCategory& c, const FinCategory& d) {
  if (c.num_objects() != d.num_objects() || c.num_morphisms() != d.num_morphisms()) return std::nullopt;
  const int n = static_cast<int>(c.num_morphisms());
  std::vector<int> perm(c.num_objects());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool sizes_match = true;
    for (std::size_t a = 0; a < perm.size() && sizes_match; ++a)
      for (std::size_t b = 0; b < perm.size() && sizes_match; ++b)
        sizes_match = c.hom(static_cast<int>(a), static_cast<int>(b)).size() ==
                      d.hom(perm[a], perm[b]).size();
    if (!sizes_match) continue;

    CategoryIso iso{perm, std::vector<int>(static_cast<std::size_t>(n), -1)};
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (std::size_t x = 0; x < perm.size(); ++x) {
      const int id = c.identity(static_cast<int>(x));
      iso.morphisms[static_cast<std::size_t>(id)] = d.identity(perm[x]);
      used[static_cast<std::size_t>(d.identity(perm[x]))] = true;
    }
    auto consistent = [&](int m) {
      for (int o = 0; o < n; ++o) {
        if (iso.morphisms[static_cast<std::size_t>(o)] < 0) continue;
        for (auto [g, f] : {std::pair{m, o}, std::pair{o, m}}) {
          const int gf = c.compose(g, f);
          if (gf < 0 || iso.morphisms[static_cast<std::size_t>(gf)] < 0) continue;
          if (d.compose(iso.morphisms[static_cast<std::size_t>(g)], iso.morphisms[static_cast<std::size_t>(f)]) !=
              iso.morphisms[static_cast<std::size_t>(gf)])
            return false;
        }
      }
      return true;
    };
    std::function<bool(int)> assign = [&](int m) -> bool {
      if (m == n) return is_isomorphism(c, d, iso);
      if (iso.morphisms[static_cast<std::size_t>(m)] >= 0) return consistent(m) && assign(m + 1);
      for (int t : d.hom(perm[static_cast<std::size_t>(c.src(m))], perm[static_cast<std::size_t>(c.tgt(m))])) {
        if (used[static_cast<std::size_t>(t)]) continue;
        iso.morphisms[static_cast<std::size_t>(m)] = t;
        used[static_cast<std::size_t>(t)] = true;
        if (consistent(m) && assign(m + 1)) return true;
        used[static_cast<std::size_t>(t)] = false;
        iso.morphisms[static_cast<std::size_t>(m)] = -1;
      }
      return false;
    };
    if (assign(0)) return iso;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

// ---- stock ----------------------------------------------------------------

FinCategory category_from_names(const std::vector<std::string>& objects, const std::vector<Morphism>& morphisms,
                                const std::vector<std::string>& identities,
                                const std::vector<std::array<std::string, 3>>& composites) {
  const std::size_t n = morphisms.size();
  FinCategory probe(objects, morphisms, std::vector<int>(objects.size(), 0),
                    std::vector<int>(n * n, -1));
  if (n == 0 && !objects.empty()) throw InvalidInput("objects need identity morphisms");
  std::vector<int> ids;
  for (const auto& name : identities) ids.push_back(probe.morphism(name));
  std::vector<int> table(n * n, -1);
  for (const auto& [f, g, gf] : composites)
    table[static_cast<std::size_t>(probe.morphism(g)) * n + static_cast<std::size_t>(probe.morphism(f))] =
        probe.morphism(gf);
  return FinCategory(objects, morphisms, std::move(ids), std::move(table));
}

FinCategory poset_category(const std::vector<std::vector<bool>>& leq) {
  const std::size_t k = leq.size();
  std::vector<std::string> objects;
  for (std::size_t i = 0; i < k; ++i) objects.push_back(std::to_string(i));
  std::vector<Morphism> ms;
  std::vector<std::vector<int>> at(k, std::vector<int>(k, -1));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (leq[i].size() != k) throw InvalidInput("order relation is not square");
      if (!leq[i][j]) continue;
      at[i][j] = static_cast<int>(ms.size());
      ms.push_back({i == j ? "id_" + objects[i] : objects[i] + "<" + objects[j], static_cast<int>(i), static_cast<int>(j)});
    }
  std::vector<int> ids(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (at[i][i] < 0) throw InvalidInput("order relation is not reflexive");
    ids[i] = at[i][i];
  }
  const std::size_t n = ms.size();
  std::vector<int> table(n * n, -1);
  for (std::size_t f = 0; f < n; ++f)
    for (std::size_t g = 0; g < n; ++g) {
      if (ms[f].tgt != ms[g].src) continue;
      const int c = at[static_cast<std::size_t>(ms[f].src)][static_cast<std::size_t>(ms[g].tgt)];
      if (c < 0) throw InvalidInput("order relation is not transitive");
      table[g * n + f] = c;
    }
  return FinCategory(std::move(objects), std::move(ms), std::move(ids), std::move(table));
}

FinCategory ordinal(int n) {
  if (n < 0) throw InvalidInput("ordinal needs n >= 0");
  const auto k = static_cast<std::size_t>(n + 1);
  std::vector<std::vector<bool>> leq(k, std::vector<bool>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) leq[i][j] = true;
  return poset_category(leq);
}

FinCategory point_category() { return ordinal(0); }

FinCategory walking_arrow() {
  return category_from_names({"0", "1"}, {{"id_0", 0, 0}, {"id_1", 1, 1}, {"f", 0, 1}}, {"id_0", "id_1"},
                             {{"id_0", "id_0", "id_0"},
                              {"id_1", "id_1", "id_1"},
                              {"id_0", "f", "f"},
                              {"f", "id_1", "f"}});
}

FinCategory monoid_category(const std::vector<std::vector<int>>& table, int unit,
                            const std::vector<std::string>& names) {
  const std::size_t n = table.size();
  if (unit < 0 || static_cast<std::size_t>(unit) >= n) throw InvalidInput("monoid unit out of range");
  if (!names.empty() && names.size() != n) throw InvalidInput("monoid names have the wrong size");
  std::vector<Morphism> ms;
  for (std::size_t i = 0; i < n; ++i) ms.push_back({names.empty() ? std::to_string(i) : names[i], 0, 0});
  std::vector<int> flat;
  for (const auto& row : table) {
    if (row.size() != n) throw InvalidInput("monoid table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return FinCategory({"*"}, std::move(ms), {unit}, std::move(flat));
}

FinCategory cyclic_group(int n) {
  if (n < 1) throw InvalidInput("cyclic group needs n >= 1");
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  return monoid_category(t, 0);
}

FinCategory walking_isomorphism() {
  return category_from_names({"j", "jbar"},
                             {{"id_j", 0, 0}, {"id_jbar", 1, 1}, {"f", 0, 1}, {"g", 1, 0}},
                             {"id_j", "id_jbar"},
                             {{"id_j", "id_j", "id_j"},
                              {"id_jbar", "id_jbar", "id_jbar"},
                              {"id_j", "f", "f"},
                              {"f", "id_jbar", "f"},
                              {"id_jbar", "g", "g"},
                              {"g", "id_j", "g"},
                              {"f", "g", "id_j"},
                              {"g", "f", "id_jbar"}});
}

FinCategory boundary_delta2_category() {
  return category_from_names(
      {"0", "1", "2"},
      {{"id_0", 0, 0}, {"id_1", 1, 1}, {"id_2", 2, 2}, {"f01", 0, 1}, {"f12", 1, 2}, {"f02", 0, 2}, {"f01.f12", 0, 2}},
      {"id_0", "id_1", "id_2"},
      {{"id_0", "id_0", "id_0"},
       {"id_1", "id_1", "id_1"},
       {"id_2", "id_2", "id_2"},
       {"id_0", "f01", "f01"},
       {"f01", "id_1", "f01"},
       {"id_1", "f12", "f12"},
       {"f12", "id_2", "f12"},
       {"id_0", "f02", "f02"},
       {"f02", "id_2", "f02"},
       {"id_0", "f01.f12", "f01.f12"},
       {"f01.f12", "id_2", "f01.f12"},
       {"f01", "f12", "f01.f12"}});
}

FinPresentation walking_isomorphism_presentation() {
  Graph g({"j", "jbar"}, {{"f", "j", "jbar"}, {"g", "jbar", "j"}});
  std::vector<Relation> rels{{make_path(g, {"f", "g"}), Path{0, {}}}, {make_path(g, {"g", "f"}), Path{1, {}}}};
  return FinPresentation(std::move(g), std::move(rels));
}

FinPresentation delta2_presentation() {
  Graph g({"0", "1", "2"}, {{"f01", "0", "1"}, {"f12", "1", "2"}, {"f02", "0", "2"}});
  std::vector<Relation> rels{{make_path(g, {"f01", "f12"}), make_path(g, {"f02"})}};
  return FinPresentation(std::move(g), std::move(rels));
}

FinPresentation loop_presentation(std::optional<int> order) {
  Graph g({"x"}, {{"a", "x", "x"}});
  std::vector<Relation> rels;
  if (order) {
    if (*order < 1) throw InvalidInput("loop order must be positive");
    rels.push_back({Path{0, std::vector<int>(static_cast<std::size_t>(*order), 0)}, Path{0, {}}});
  }
  return FinPresentation(std::move(g), std::move(rels));
}

}  // namespace hck::fpcat

namespace hck::fpcat {

FinCategory product(const FinCategory& c, const FinCategory& d) {
  const std::size_t no = d.num_objects();
  const std::size_t nm = d.num_morphisms();
  std::vector<std::string> objects;
  for (const auto& a : c.objects())
    for (const auto& b : d.objects()) objects.push_back("(" + a + "," + b + ")");
  std::vector<Morphism> ms;
  for (const auto& f : c.morphisms())
    for (const auto& g : d.morphisms())
      ms.push_back({"(" + f.name + "," + g.name + ")", static_cast<int>(static_cast<std::size_t>(f.src) * no + static_cast<std::size_t>(g.src)),
                    static_cast<int>(static_cast<std::size_t>(f.tgt) * no + static_cast<std::size_t>(g.tgt))});
  std::vector<int> ids;
  for (std::size_t a = 0; a < c.num_objects(); ++a)
    for (std::size_t b = 0; b < no; ++b)
      ids.push_back(static_cast<int>(static_cast<std::size_t>(c.identity(static_cast<int>(a))) * nm + static_cast<std::size_t>(d.identity(static_cast<int>(b)))));
  const std::size_t n = ms.size();
  std::vector<int> table(n * n, -1);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const int cx = c.compose(static_cast<int>(x / nm), static_cast<int>(y / nm));
      const int dx = d.compose(static_cast<int>(x % nm), static_cast<int>(y % nm));
      if (cx >= 0 && dx >= 0) table[x * n + y] = static_cast<int>(static_cast<std::size_t>(cx) * nm + static_cast<std::size_t>(dx));
    }
  return FinCategory(std::move(objects), std::move(ms), std::move(ids), std::move(table));
}

}  // namespace hck::fpcat
