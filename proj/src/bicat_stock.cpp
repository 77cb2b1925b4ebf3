#include <map>
#include <tuple>

#include "hck/bicat.hpp"

namespace hck::bicat {

FinBicategory deloop_unchecked(const MonoidalData& m) {
  const auto& c = m.category;
  const std::size_t n = c.num_objects(), nm = c.num_morphisms();
  if (m.tensor_obj.size() != n * n || m.tensor_mor.size() != nm * nm || m.assoc.size() != n * n * n ||
      m.lunit.size() != n || m.runit.size() != n)
    throw InvalidInput("monoidal tables have the wrong size");
  if (m.unit < 0 || static_cast<std::size_t>(m.unit) >= n) throw InvalidInput("monoidal unit out of range");
  FinBicategory b;
  b.objects = {"*"};
  for (const auto& o : c.objects()) b.cells1.push_back({o, 0, 0});
  for (const auto& f : c.morphisms()) b.cells2.push_back({f.name, f.src, f.tgt});
  b.unit = {m.unit};
  for (std::size_t x = 0; x < n; ++x) b.id2.push_back(c.identity(static_cast<int>(x)));
  b.vcomp.resize(nm * nm);
  for (std::size_t y = 0; y < nm; ++y)
    for (std::size_t x = 0; x < nm; ++x) b.vcomp[y * nm + x] = c.compose(static_cast<int>(y), static_cast<int>(x));
  b.hcomp1 = m.tensor_obj;
  b.hcomp2 = m.tensor_mor;
  b.assoc = m.assoc;
  b.lunit = m.lunit;
  b.runit = m.runit;
  return b;
}

namespace {

int inverse_in(const fpcat::FinCategory& c, int f) {
  for (int g : c.hom(c.tgt(f), c.src(f)))
    if (c.compose(g, f) == c.identity(c.src(f)) && c.compose(f, g) == c.identity(c.tgt(f))) return g;
  return -1;
}

}  // namespace

ValidationReport validate_monoidal(const MonoidalData& m) {
  ValidationReport rep = validate_category(m.category);
  if (!rep.ok()) return rep;
  rep = validate_bicategory(deloop_unchecked(m));
  if (!rep.ok() || !m.braiding) return rep;

  const auto& c = m.category;
  const int n = static_cast<int>(c.num_objects());
  const auto& br = *m.braiding;
  if (br.size() != static_cast<std::size_t>(n * n)) {
    rep.add("shape", "braiding table has the wrong size");
    return rep;
  }
  auto T = [&](int x, int y) { return m.tensor_obj[static_cast<std::size_t>(x * n + y)]; };
  auto TM = [&](int f, int g) { return m.tensor_mor[static_cast<std::size_t>(f) * c.num_morphisms() + static_cast<std::size_t>(g)]; };
  auto B = [&](int x, int y) { return br[static_cast<std::size_t>(x * n + y)]; };
  auto A = [&](int x, int y, int z) { return m.assoc[static_cast<std::size_t>((x * n + y) * n + z)]; };
  auto C = [&](int g, int f) { return c.compose(g, f); };
  auto name = [&](int x) { return c.objects()[static_cast<std::size_t>(x)]; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int b = B(x, y);
      if (b < 0 || static_cast<std::size_t>(b) >= c.num_morphisms() || c.src(b) != T(x, y) || c.tgt(b) != T(y, x)) {
        rep.add("braiding_typing", "(" + name(x) + ", " + name(y) + ")");
        return rep;
      }
      if (inverse_in(c, b) < 0) rep.add("braiding_invertibility", "(" + name(x) + ", " + name(y) + ")");
    }
  const int nm = static_cast<int>(c.num_morphisms());
  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g)
      if (C(B(c.tgt(f), c.tgt(g)), TM(f, g)) != C(TM(g, f), B(c.src(f), c.src(g))))
        rep.add("braiding_naturality", "(" + c.morphisms()[static_cast<std::size_t>(f)].name + ", " +
                                           c.morphisms()[static_cast<std::size_t>(g)].name + ")");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const int id_x = c.identity(x), id_y = c.identity(y), id_z = c.identity(z);
        const int h1l = C(A(y, z, x), C(B(x, T(y, z)), A(x, y, z)));
        const int h1r = C(TM(id_y, B(x, z)), C(A(y, x, z), TM(B(x, y), id_z)));
        if (h1l != h1r) rep.add("hexagon", "first at (" + name(x) + ", " + name(y) + ", " + name(z) + ")");
        const int h2l = C(inverse_in(c, A(z, x, y)), C(B(T(x, y), z), inverse_in(c, A(x, y, z))));
        const int h2r = C(TM(B(x, z), id_y), C(inverse_in(c, A(x, z, y)), TM(id_x, B(y, z))));
        if (h2l != h2r) rep.add("hexagon", "second at (" + name(x) + ", " + name(y) + ", " + name(z) + ")");
      }
  return rep;
}

FinBicategory deloop(const MonoidalData& m) {
  auto rep = validate_monoidal(m);
  if (!rep.ok())
    throw InvalidInput("monoidal data fails " + rep.violations.front().kind + ": " + rep.violations.front().detail);
  return deloop_unchecked(m);
}

MonoidalData discrete_monoidal(const std::vector<std::vector<int>>& table, int unit,
                               const std::vector<std::string>& names, bool braided) {
  const std::size_t n = table.size();
  if (!names.empty() && names.size() != n) throw InvalidInput("element names have the wrong size");
  std::vector<std::string> objects;
  std::vector<fpcat::Morphism> ms;
  std::vector<int> ids;
  for (std::size_t x = 0; x < n; ++x) {
    objects.push_back(names.empty() ? std::to_string(x) : names[x]);
    ms.push_back({"id_" + objects.back(), static_cast<int>(x), static_cast<int>(x)});
    ids.push_back(static_cast<int>(x));
  }
  std::vector<int> comp(n * n, -1);
  for (std::size_t x = 0; x < n; ++x) comp[x * n + x] = static_cast<int>(x);
  MonoidalData m;
  m.category = fpcat::FinCategory(objects, ms, ids, comp);
  for (const auto& row : table) {
    if (row.size() != n) throw InvalidInput("operation table is not square");
    m.tensor_obj.insert(m.tensor_obj.end(), row.begin(), row.end());
  }
  m.tensor_mor = m.tensor_obj;
  m.unit = unit;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) m.assoc.push_back(table[static_cast<std::size_t>(table[x][y])][z]);
  for (std::size_t x = 0; x < n; ++x) {
    m.lunit.push_back(table[static_cast<std::size_t>(unit)][x]);
    m.runit.push_back(table[x][static_cast<std::size_t>(unit)]);
  }
  if (braided) m.braiding = m.tensor_obj;
  return m;
}

MonoidalData vector_space_skeleton(int p) {
  if (p < 2) throw InvalidInput("field size must be a prime >= 2");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw InvalidInput("field size must be prime");
  // Morphisms: zero maps z00, z01, z10 and scalars s0..s{p-1} on dimension 1.
  std::vector<fpcat::Morphism> ms{{"z00", 0, 0}, {"z01", 0, 1}, {"z10", 1, 0}};
  for (int k = 0; k < p; ++k) ms.push_back({"s" + std::to_string(k), 1, 1});
  auto scalar = [](int k) { return 3 + k; };
  auto unique_in = [&](int x, int y) { return x == 1 && y == 1 ? -1 : (x == 0 ? (y == 0 ? 0 : 1) : 2); };
  const std::size_t nm = ms.size();
  std::vector<int> comp(nm * nm, -1);
  for (std::size_t g = 0; g < nm; ++g)
    for (std::size_t f = 0; f < nm; ++f) {
      if (ms[f].tgt != ms[g].src) continue;
      const int x = ms[f].src, z = ms[g].tgt;
      int r = unique_in(x, z);
      if (r < 0) r = ms[f].tgt == 0 ? scalar(0) : scalar((static_cast<int>(g) - 3) * (static_cast<int>(f) - 3) % p);
      comp[g * nm + f] = r;
    }
  MonoidalData m;
  m.category = fpcat::FinCategory({"0", "1"}, ms, {0, scalar(1)}, comp);
  m.tensor_obj = {0, 0, 0, 1};
  for (std::size_t f = 0; f < nm; ++f)
    for (std::size_t g = 0; g < nm; ++g) {
      const int x = ms[f].src * ms[g].src, y = ms[f].tgt * ms[g].tgt;
      int r = unique_in(x, y);
      if (r < 0) r = scalar((static_cast<int>(f) - 3) * (static_cast<int>(g) - 3) % p);
      m.tensor_mor.push_back(r);
    }
  m.unit = 1;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 2; ++z) m.assoc.push_back(x * y * z == 1 ? scalar(1) : 0);
  m.lunit = {0, scalar(1)};
  m.runit = {0, scalar(1)};
  m.braiding = std::vector<int>{0, 0, 0, scalar(1)};
  return m;
}

MonoidalData two_group_z2(bool twisted) {
  std::vector<fpcat::Morphism> ms;
  for (int x = 0; x < 2; ++x)
    for (int a = 0; a < 2; ++a) ms.push_back({std::to_string(x) + ":" + std::to_string(a), x, x});
  auto cell = [](int x, int a) { return 2 * x + a; };
  std::vector<int> comp(16, -1);
  for (int g = 0; g < 4; ++g)
    for (int f = 0; f < 4; ++f)
      if (g / 2 == f / 2) comp[static_cast<std::size_t>(g * 4 + f)] = cell(g / 2, (g + f) % 2);
  MonoidalData m;
  m.category = fpcat::FinCategory({"0", "1"}, ms, {0, 2}, comp);
  m.tensor_obj = {0, 1, 1, 0};
  for (int f = 0; f < 4; ++f)
    for (int g = 0; g < 4; ++g) m.tensor_mor.push_back(cell((f / 2 + g / 2) % 2, (f + g) % 2));
  m.unit = 0;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 2; ++z) m.assoc.push_back(cell((x + y + z) % 2, twisted ? x * y * z : 0));
  m.lunit = {0, 2};
  m.runit = {0, 2};
  return m;
}

namespace {

// Fills identity coherence cells for a strict 2-category.
FinBicategory strict(FinBicategory b) {
  const std::size_t n1 = b.n1();
  b.assoc.assign(n1 * n1 * n1, -1);
  for (std::size_t h = 0; h < n1; ++h)
    for (std::size_t g = 0; g < n1; ++g)
      for (std::size_t f = 0; f < n1; ++f) {
        const int gf = b.h1(static_cast<int>(g), static_cast<int>(f));
        if (gf < 0 || b.tgt1(static_cast<int>(g)) != b.src1(static_cast<int>(h))) continue;
        b.assoc[(h * n1 + g) * n1 + f] = b.id(b.h1(static_cast<int>(h), gf));
      }
  b.lunit = b.id2;
  b.runit = b.id2;
  return b;
}

}  // namespace

FinBicategory locally_discrete(const fpcat::FinCategory& c) {
  FinBicategory b;
  b.objects = c.objects();
  const std::size_t n = c.num_morphisms();
  for (std::size_t f = 0; f < n; ++f) {
    const auto& m = c.morphisms()[f];
    b.cells1.push_back({m.name, m.src, m.tgt});
    b.cells2.push_back({"id(" + m.name + ")", static_cast<int>(f), static_cast<int>(f)});
    b.id2.push_back(static_cast<int>(f));
  }
  for (std::size_t x = 0; x < c.num_objects(); ++x) b.unit.push_back(c.identity(static_cast<int>(x)));
  b.vcomp.assign(n * n, -1);
  for (std::size_t f = 0; f < n; ++f) b.vcomp[f * n + f] = static_cast<int>(f);
  b.hcomp1.resize(n * n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t f = 0; f < n; ++f) b.hcomp1[g * n + f] = c.compose(static_cast<int>(g), static_cast<int>(f));
  b.hcomp2 = b.hcomp1;
  return strict(std::move(b));
}

FinBicategory monotone_maps(const std::vector<int>& ordinals) {
  FinBicategory b;
  for (int n : ordinals) {
    if (n < 0 || n > 9) throw InvalidInput("ordinals must lie in [0, 9]");
    b.objects.push_back("[" + std::to_string(n) + "]");
  }
  std::vector<std::vector<int>> maps;  // per 1-cell: values
  std::map<std::tuple<int, int, std::vector<int>>, int> index1;
  const int no = static_cast<int>(ordinals.size());
  for (int s = 0; s < no; ++s)
    for (int t = 0; t < no; ++t) {
      const int m = ordinals[static_cast<std::size_t>(s)], n = ordinals[static_cast<std::size_t>(t)];
      std::vector<int> seq(static_cast<std::size_t>(m) + 1, 0);
      while (true) {
        std::string name = b.objects[static_cast<std::size_t>(s)] + "->" + b.objects[static_cast<std::size_t>(t)] + ":";
        for (int v : seq) name += static_cast<char>('0' + v);
        index1[{s, t, seq}] = static_cast<int>(b.cells1.size());
        b.cells1.push_back({name, s, t});
        maps.push_back(seq);
        int p = m;
        while (p >= 0 && seq[static_cast<std::size_t>(p)] == n) --p;
        if (p < 0) break;
        const int v = seq[static_cast<std::size_t>(p)] + 1;
        for (int q = p; q <= m; ++q) seq[static_cast<std::size_t>(q)] = v;
      }
    }
  const std::size_t n1 = b.cells1.size();
  std::map<std::pair<int, int>, int> index2;
  for (std::size_t f = 0; f < n1; ++f)
    for (std::size_t g = 0; g < n1; ++g) {
      if (b.cells1[f].src != b.cells1[g].src || b.cells1[f].tgt != b.cells1[g].tgt) continue;
      bool leq = true;
      for (std::size_t i = 0; i < maps[f].size(); ++i) leq = leq && maps[f][i] <= maps[g][i];
      if (!leq) continue;
      index2[{static_cast<int>(f), static_cast<int>(g)}] = static_cast<int>(b.cells2.size());
      b.cells2.push_back({b.cells1[f].name + "<=" + b.cells1[g].name.substr(b.cells1[g].name.find(':') + 1),
                          static_cast<int>(f), static_cast<int>(g)});
    }
  for (std::size_t f = 0; f < n1; ++f) b.id2.push_back(index2.at({static_cast<int>(f), static_cast<int>(f)}));
  for (int s = 0; s < no; ++s) {
    std::vector<int> id(static_cast<std::size_t>(ordinals[static_cast<std::size_t>(s)]) + 1);
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
    b.unit.push_back(index1.at({s, s, id}));
  }
  auto compose1 = [&](int g, int f) {
    std::vector<int> seq;
    for (int v : maps[static_cast<std::size_t>(f)]) seq.push_back(maps[static_cast<std::size_t>(g)][static_cast<std::size_t>(v)]);
    return index1.at({b.cells1[static_cast<std::size_t>(f)].src, b.cells1[static_cast<std::size_t>(g)].tgt, seq});
  };
  b.hcomp1.assign(n1 * n1, -1);
  for (std::size_t g = 0; g < n1; ++g)
    for (std::size_t f = 0; f < n1; ++f)
      if (b.cells1[f].tgt == b.cells1[g].src) b.hcomp1[g * n1 + f] = compose1(static_cast<int>(g), static_cast<int>(f));
  const std::size_t n2 = b.cells2.size();
  b.vcomp.assign(n2 * n2, -1);
  b.hcomp2.assign(n2 * n2, -1);
  for (std::size_t y = 0; y < n2; ++y)
    for (std::size_t x = 0; x < n2; ++x) {
      if (b.cells2[x].tgt == b.cells2[y].src) b.vcomp[y * n2 + x] = index2.at({b.cells2[x].src, b.cells2[y].tgt});
      if (b.cells1[static_cast<std::size_t>(b.cells2[x].src)].tgt == b.cells1[static_cast<std::size_t>(b.cells2[y].src)].src)
        b.hcomp2[y * n2 + x] = index2.at({compose1(b.cells2[y].src, b.cells2[x].src), compose1(b.cells2[y].tgt, b.cells2[x].tgt)});
    }
  return strict(std::move(b));
}

FinBicategory cell2() {
  FinBicategory b;
  b.objects = {"0", "1"};
  b.cells1 = {{"1_0", 0, 0}, {"1_1", 1, 1}, {"s", 0, 1}, {"t", 0, 1}};
  b.cells2 = {{"id_1_0", 0, 0}, {"id_1_1", 1, 1}, {"id_s", 2, 2}, {"id_t", 3, 3}, {"alpha", 2, 3}};
  b.unit = {0, 1};
  b.id2 = {0, 1, 2, 3};
  const std::size_t n1 = 4, n2 = 5;
  b.vcomp.assign(n2 * n2, -1);
  for (std::size_t x = 0; x < n2; ++x) {
    b.vcomp[static_cast<std::size_t>(b.id2[static_cast<std::size_t>(b.cells2[x].tgt)]) * n2 + x] = static_cast<int>(x);
    b.vcomp[x * n2 + static_cast<std::size_t>(b.id2[static_cast<std::size_t>(b.cells2[x].src)])] = static_cast<int>(x);
  }
  b.hcomp1.assign(n1 * n1, -1);
  for (std::size_t f = 0; f < n1; ++f) {
    b.hcomp1[static_cast<std::size_t>(b.unit[static_cast<std::size_t>(b.cells1[f].tgt)]) * n1 + f] = static_cast<int>(f);
    b.hcomp1[f * n1 + static_cast<std::size_t>(b.unit[static_cast<std::size_t>(b.cells1[f].src)])] = static_cast<int>(f);
  }
  b.hcomp2.assign(n2 * n2, -1);
  for (std::size_t x = 0; x < n2; ++x) {
    const int f = b.cells2[x].src;
    const int left = b.id2[static_cast<std::size_t>(b.unit[static_cast<std::size_t>(b.cells1[static_cast<std::size_t>(f)].tgt)])];
    const int right = b.id2[static_cast<std::size_t>(b.unit[static_cast<std::size_t>(b.cells1[static_cast<std::size_t>(f)].src)])];
    b.hcomp2[static_cast<std::size_t>(left) * n2 + x] = static_cast<int>(x);
    b.hcomp2[x * n2 + static_cast<std::size_t>(right)] = static_cast<int>(x);
  }
  return strict(std::move(b));
}

std::vector<CorpusEntry> bicategory_corpus() {
  std::vector<CorpusEntry> out;
  auto cyclic = [](int n) {
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
    return t;
  };
  for (int n = 1; n <= 4; ++n) out.push_back({"deloop Z/" + std::to_string(n), deloop(discrete_monoidal(cyclic(n), 0, {}, true))});
  out.push_back({"deloop Klein four", deloop(discrete_monoidal({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}, 0, {}, true))});
  out.push_back({"deloop S3", deloop(discrete_monoidal({{0, 1, 2, 3, 4, 5},
                                                        {1, 0, 4, 5, 2, 3},
                                                        {2, 3, 0, 1, 5, 4},
                                                        {3, 2, 5, 4, 0, 1},
                                                        {4, 5, 1, 0, 3, 2},
                                                        {5, 4, 3, 2, 1, 0}},
                                                       0))});
  out.push_back({"deloop ({0,1}, *)", deloop(discrete_monoidal({{0, 0}, {0, 1}}, 1, {"0", "1"}, true))});
  out.push_back({"deloop Vect(F2) dims 0,1", deloop(vector_space_skeleton(2))});
  out.push_back({"deloop Vect(F3) dims 0,1", deloop(vector_space_skeleton(3))});
  out.push_back({"deloop 2-group Z/2 untwisted", deloop(two_group_z2(false))});
  out.push_back({"deloop 2-group Z/2 twisted", deloop(two_group_z2(true))});
  out.push_back({"locally discrete [1]", locally_discrete(fpcat::ordinal(1))});
  out.push_back({"locally discrete [2]", locally_discrete(fpcat::ordinal(2))});
  out.push_back({"locally discrete J", locally_discrete(fpcat::walking_isomorphism())});
  out.push_back({"locally discrete boundary of 2-simplex", locally_discrete(fpcat::boundary_delta2_category())});
  out.push_back({"monotone maps on [0], [1]", monotone_maps({0, 1})});
  out.push_back({"monotone maps on [0], [1], [2]", monotone_maps({0, 1, 2})});
  out.push_back({"walking 2-cell", cell2()});
  return out;
}

}  // namespace hck::bicat
