#include "hck/bicat.hpp"

namespace hck::bicat {

namespace {
template <class T>
int find_named(const std::vector<T>& v, const std::string& name, const char* what) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i].name == name) return static_cast<int>(i);
  throw InvalidInput(std::string("unknown ") + what + " '" + name + "'");
}
}  // namespace

int FinBicategory::object(const std::string& name) const {
  for (std::size_t i = 0; i < objects.size(); ++i)
    if (objects[i] == name) return static_cast<int>(i);
  throw InvalidInput("unknown object '" + name + "'");
}

int FinBicategory::cell1(const std::string& name) const { return find_named(cells1, name, "1-cell"); }
int FinBicategory::cell2(const std::string& name) const { return find_named(cells2, name, "2-cell"); }

std::vector<int> FinBicategory::hom1(int a, int b) const {
  std::vector<int> out;
  for (std::size_t f = 0; f < n1(); ++f)
    if (cells1[f].src == a && cells1[f].tgt == b) out.push_back(static_cast<int>(f));
  return out;
}

std::vector<int> FinBicategory::hom2(int f, int g) const {
  std::vector<int> out;
  for (std::size_t x = 0; x < n2(); ++x)
    if (cells2[x].src == f && cells2[x].tgt == g) out.push_back(static_cast<int>(x));
  return out;
}

int FinBicategory::inverse(int x) const {
  const int f = src2(x), g = tgt2(x);
  for (int y : hom2(g, f))
    if (v(y, x) == id(f) && v(x, y) == id(g)) return y;
  return -1;
}

fpcat::FinCategory FinBicategory::hom_category(int a, int b) const {
  const auto ones = hom1(a, b);
  std::vector<int> local1(n1(), -1);
  std::vector<std::string> objs;
  for (std::size_t i = 0; i < ones.size(); ++i) {
    local1[static_cast<std::size_t>(ones[i])] = static_cast<int>(i);
    objs.push_back(cells1[static_cast<std::size_t>(ones[i])].name);
  }
  std::vector<int> twos;
  std::vector<int> local2(n2(), -1);
  std::vector<fpcat::Morphism> ms;
  for (std::size_t x = 0; x < n2(); ++x) {
    if (local1[static_cast<std::size_t>(cells2[x].src)] < 0) continue;
    local2[x] = static_cast<int>(twos.size());
    twos.push_back(static_cast<int>(x));
    ms.push_back({cells2[x].name, local1[static_cast<std::size_t>(cells2[x].src)], local1[static_cast<std::size_t>(cells2[x].tgt)]});
  }
  std::vector<int> ids;
  for (int f : ones) ids.push_back(local2[static_cast<std::size_t>(id(f))]);
  const std::size_t n = twos.size();
  std::vector<int> table(n * n, -1);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const int c = v(twos[p], twos[q]);
      table[p * n + q] = c < 0 ? -1 : local2[static_cast<std::size_t>(c)];
    }
  return fpcat::FinCategory(std::move(objs), std::move(ms), std::move(ids), std::move(table));
}

ValidationReport validate_bicategory(const FinBicategory& b) {
  ValidationReport rep;
  const std::size_t no = b.objects.size(), n1 = b.n1(), n2 = b.n2();
  if (b.unit.size() != no || b.id2.size() != n1 || b.vcomp.size() != n2 * n2 || b.hcomp1.size() != n1 * n1 ||
      b.hcomp2.size() != n2 * n2 || b.assoc.size() != n1 * n1 * n1 || b.lunit.size() != n1 || b.runit.size() != n1) {
    rep.add("shape", "table sizes do not match the cell counts");
    return rep;
  }
  auto in = [](int x, std::size_t n) { return x >= 0 && static_cast<std::size_t>(x) < n; };
  auto in_or_undef = [](int x, std::size_t n) { return x >= -1 && x < static_cast<int>(n); };
  for (const auto& c : b.cells1)
    if (!in(c.src, no) || !in(c.tgt, no)) rep.add("range", "1-cell '" + c.name + "'");
  for (const auto& c : b.cells2)
    if (!in(c.src, n1) || !in(c.tgt, n1)) rep.add("range", "2-cell '" + c.name + "'");
  for (int u : b.unit) if (!in(u, n1)) rep.add("range", "unit");
  for (int x : b.id2) if (!in(x, n2)) rep.add("range", "identity 2-cell");
  for (int x : b.lunit) if (!in(x, n2)) rep.add("range", "left unitor");
  for (int x : b.runit) if (!in(x, n2)) rep.add("range", "right unitor");
  for (int x : b.vcomp) if (!in_or_undef(x, n2)) rep.add("range", "vertical composite");
  for (int x : b.hcomp2) if (!in_or_undef(x, n2)) rep.add("range", "horizontal composite of 2-cells");
  for (int x : b.hcomp1) if (!in_or_undef(x, n1)) rep.add("range", "composite of 1-cells");
  for (int x : b.assoc) if (!in_or_undef(x, n2)) rep.add("range", "associator");
  if (!rep.ok()) return rep;

  auto n1s = [&](int f) { return b.cells1[static_cast<std::size_t>(f)].name; };
  auto n2s = [&](int x) { return b.cells2[static_cast<std::size_t>(x)].name; };
  auto typed = [&](int x, int s, int t) { return x >= 0 && b.src2(x) == s && b.tgt2(x) == t; };
  const int N1 = static_cast<int>(n1), N2 = static_cast<int>(n2);

  for (int x = 0; x < N2; ++x)
    if (b.src1(b.src2(x)) != b.src1(b.tgt2(x)) || b.tgt1(b.src2(x)) != b.tgt1(b.tgt2(x)))
      rep.add("typing", "2-cell '" + n2s(x) + "' joins non-parallel 1-cells");
  for (std::size_t a = 0; a < no; ++a) {
    const int u = b.unit[a];
    if (b.src1(u) != static_cast<int>(a) || b.tgt1(u) != static_cast<int>(a)) rep.add("typing", "unit of '" + b.objects[a] + "'");
  }
  for (int f = 0; f < N1; ++f)
    if (!typed(b.id(f), f, f)) rep.add("typing", "identity of '" + n1s(f) + "'");
  for (int y = 0; y < N2; ++y)
    for (int x = 0; x < N2; ++x) {
      const bool ok = b.tgt2(x) == b.src2(y);
      const int c = b.v(y, x);
      if (ok != (c >= 0) || (ok && !typed(c, b.src2(x), b.tgt2(y))))
        rep.add("typing", "vertical composite (" + n2s(y) + ", " + n2s(x) + ")");
    }
  for (int g = 0; g < N1; ++g)
    for (int f = 0; f < N1; ++f) {
      const bool ok = b.tgt1(f) == b.src1(g);
      const int c = b.h1(g, f);
      if (ok != (c >= 0) || (ok && (b.src1(c) != b.src1(f) || b.tgt1(c) != b.tgt1(g))))
        rep.add("typing", "composite (" + n1s(g) + ", " + n1s(f) + ")");
    }
  if (!rep.ok()) return rep;
  for (int y = 0; y < N2; ++y)
    for (int x = 0; x < N2; ++x) {
      const bool ok = b.tgt1(b.src2(x)) == b.src1(b.src2(y));
      const int c = b.h2(y, x);
      if (ok != (c >= 0) || (ok && !typed(c, b.h1(b.src2(y), b.src2(x)), b.h1(b.tgt2(y), b.tgt2(x)))))
        rep.add("typing", "horizontal composite (" + n2s(y) + ", " + n2s(x) + ")");
    }
  for (int h = 0; h < N1; ++h)
    for (int g = 0; g < N1; ++g)
      for (int f = 0; f < N1; ++f) {
        const bool ok = b.tgt1(f) == b.src1(g) && b.tgt1(g) == b.src1(h);
        const int c = b.a(h, g, f);
        if (ok != (c >= 0) || (ok && !typed(c, b.h1(b.h1(h, g), f), b.h1(h, b.h1(g, f)))))
          rep.add("typing", "associator (" + n1s(h) + ", " + n1s(g) + ", " + n1s(f) + ")");
      }
  for (int f = 0; f < N1; ++f) {
    if (!typed(b.l(f), b.h1(b.unit[static_cast<std::size_t>(b.tgt1(f))], f), f)) rep.add("typing", "left unitor of '" + n1s(f) + "'");
    if (!typed(b.r(f), b.h1(f, b.unit[static_cast<std::size_t>(b.src1(f))]), f)) rep.add("typing", "right unitor of '" + n1s(f) + "'");
  }
  if (!rep.ok()) return rep;

  // Hom categories.
  for (int x = 0; x < N2; ++x) {
    if (b.v(b.id(b.tgt2(x)), x) != x || b.v(x, b.id(b.src2(x))) != x) rep.add("vertical_unit", n2s(x));
    for (int y = 0; y < N2; ++y) {
      if (b.tgt2(x) != b.src2(y)) continue;
      const int yx = b.v(y, x);
      for (int z = 0; z < N2; ++z)
        if (b.tgt2(y) == b.src2(z) && b.v(b.v(z, y), x) != b.v(z, yx))
          rep.add("vertical_associativity", "(" + n2s(z) + ", " + n2s(y) + ", " + n2s(x) + ")");
    }
  }
  // Functoriality of horizontal composition.
  for (int g = 0; g < N1; ++g)
    for (int f = 0; f < N1; ++f)
      if (b.tgt1(f) == b.src1(g) && b.h2(b.id(g), b.id(f)) != b.id(b.h1(g, f)))
        rep.add("functoriality", "identities of (" + n1s(g) + ", " + n1s(f) + ")");
  std::vector<std::pair<int, int>> chains;  // (first, second) vertically composable
  for (int x = 0; x < N2; ++x)
    for (int y = 0; y < N2; ++y)
      if (b.tgt2(x) == b.src2(y)) chains.push_back({x, y});
  for (const auto& [a1, a2] : chains)
    for (const auto& [b1, b2] : chains) {
      if (b.tgt1(b.src2(a1)) != b.src1(b.src2(b1))) continue;
      if (b.h2(b.v(b2, b1), b.v(a2, a1)) != b.v(b.h2(b2, a2), b.h2(b1, a1)))
        rep.add("interchange", "(" + n2s(b2) + "·" + n2s(b1) + ") * (" + n2s(a2) + "·" + n2s(a1) + ")");
    }
  // Coherence cells: invertible and natural.
  for (int h = 0; h < N1; ++h)
    for (int g = 0; g < N1; ++g)
      for (int f = 0; f < N1; ++f)
        if (b.a(h, g, f) >= 0 && b.inverse(b.a(h, g, f)) < 0)
          rep.add("invertibility", "associator (" + n1s(h) + ", " + n1s(g) + ", " + n1s(f) + ")");
  for (int f = 0; f < N1; ++f) {
    if (b.inverse(b.l(f)) < 0) rep.add("invertibility", "left unitor of '" + n1s(f) + "'");
    if (b.inverse(b.r(f)) < 0) rep.add("invertibility", "right unitor of '" + n1s(f) + "'");
  }
  for (int al = 0; al < N2; ++al) {
    const int f = b.src2(al), f2 = b.tgt2(al);
    const int lb = b.unit[static_cast<std::size_t>(b.tgt1(f))], la = b.unit[static_cast<std::size_t>(b.src1(f))];
    if (b.v(b.l(f2), b.h2(b.id(lb), al)) != b.v(al, b.l(f))) rep.add("naturality", "left unitor at '" + n2s(al) + "'");
    if (b.v(b.r(f2), b.h2(al, b.id(la))) != b.v(al, b.r(f))) rep.add("naturality", "right unitor at '" + n2s(al) + "'");
    for (int be = 0; be < N2; ++be) {
      if (b.tgt1(f) != b.src1(b.src2(be))) continue;
      const int ba = b.h2(be, al);
      for (int ga = 0; ga < N2; ++ga) {
        if (b.tgt1(b.src2(be)) != b.src1(b.src2(ga))) continue;
        const int lhs = b.v(b.a(b.tgt2(ga), b.tgt2(be), f2), b.h2(b.h2(ga, be), al));
        const int rhs = b.v(b.h2(ga, ba), b.a(b.src2(ga), b.src2(be), f));
        if (lhs != rhs) rep.add("naturality", "associator at (" + n2s(ga) + ", " + n2s(be) + ", " + n2s(al) + ")");
      }
    }
  }
  // Pentagon and triangle.
  for (int f = 0; f < N1; ++f)
    for (int g = 0; g < N1; ++g) {
      if (b.tgt1(f) != b.src1(g)) continue;
      const int tri_l = b.v(b.h2(b.id(g), b.l(f)), b.a(g, b.unit[static_cast<std::size_t>(b.tgt1(f))], f));
      if (tri_l != b.h2(b.r(g), b.id(f))) rep.add("triangle", "(" + n1s(g) + ", " + n1s(f) + ")");
      for (int h = 0; h < N1; ++h) {
        if (b.tgt1(g) != b.src1(h)) continue;
        for (int k = 0; k < N1; ++k) {
          if (b.tgt1(h) != b.src1(k)) continue;
          const int lhs = b.v(b.a(k, h, b.h1(g, f)), b.a(b.h1(k, h), g, f));
          const int rhs = b.v(b.h2(b.id(k), b.a(h, g, f)), b.v(b.a(k, b.h1(h, g), f), b.h2(b.a(k, h, g), b.id(f))));
          if (lhs != rhs) rep.add("pentagon", "(" + n1s(k) + ", " + n1s(h) + ", " + n1s(g) + ", " + n1s(f) + ")");
        }
      }
    }
  return rep;
}

FinBicategory reversed(const FinBicategory& b) {
  FinBicategory r = b;
  for (auto& c : r.cells1) std::swap(c.src, c.tgt);
  const std::size_t n1 = b.n1(), n2 = b.n2();
  for (std::size_t g = 0; g < n1; ++g)
    for (std::size_t f = 0; f < n1; ++f) r.hcomp1[g * n1 + f] = b.hcomp1[f * n1 + g];
  for (std::size_t y = 0; y < n2; ++y)
    for (std::size_t x = 0; x < n2; ++x) r.hcomp2[y * n2 + x] = b.hcomp2[x * n2 + y];
  for (std::size_t h = 0; h < n1; ++h)
    for (std::size_t g = 0; g < n1; ++g)
      for (std::size_t f = 0; f < n1; ++f) {
        const int a = b.assoc[(f * n1 + g) * n1 + h];
        r.assoc[(h * n1 + g) * n1 + f] = a < 0 ? -1 : b.inverse(a);
      }
  r.lunit = b.runit;
  r.runit = b.lunit;
  return r;
}

}  // namespace hck::bicat
