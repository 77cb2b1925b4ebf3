#include <map>

#include "hck/simplicial.hpp"

namespace hck::simplicial {

ValidationReport validate_segal_space(const SegalSpaceData& x) {
  ValidationReport rep;
  const auto levels = static_cast<std::size_t>(x.n) + 1;
  if (x.n < 0 || x.level.size() != levels || x.face.size() != levels || x.degen.size() != levels) {
    rep.add("shape", "outer levels do not match n = " + std::to_string(x.n));
    return rep;
  }
  const int dim = x.level[0].dim;
  for (std::size_t k = 0; k < levels; ++k) {
    ValidationReport inner = validate_sset(x.level[k]);
    for (auto& v : inner.violations) rep.add(v.kind, "space " + std::to_string(k) + ": " + v.detail);
    if (x.level[k].dim != dim) rep.add("shape", "space " + std::to_string(k) + " has a different truncation");
    if (x.face[k].size() != (k == 0 ? 0 : k + 1) || x.degen[k].size() != (k + 1 == levels ? 0 : k + 1))
      rep.add("shape", "space " + std::to_string(k) + " has the wrong number of outer maps");
  }
  if (!rep.ok()) return rep;

  auto check_map = [&](const SSetMap& f, const TruncSSet& from, const TruncSSet& to, const std::string& what) {
    if (f.cell.size() != static_cast<std::size_t>(dim) + 1) {
      rep.add("shape", what);
      return;
    }
    for (int m = 0; m <= dim; ++m) {
      if (f.cell[static_cast<std::size_t>(m)].size() != from.size(m)) {
        rep.add("shape", what + " at dimension " + std::to_string(m));
        return;
      }
      for (int v : f.cell[static_cast<std::size_t>(m)])
        if (v < 0 || static_cast<std::size_t>(v) >= to.size(m)) {
          rep.add("range", what + " at dimension " + std::to_string(m));
          return;
        }
    }
    for (int m = 0; m <= dim; ++m)
      for (int c = 0; c < static_cast<int>(from.size(m)); ++c) {
        if (m > 0)
          for (int i = 0; i <= m; ++i)
            if (f(m - 1, from.d(m, i, c)) != to.d(m, i, f(m, c))) rep.add("not_simplicial", what + " vs inner d" + std::to_string(i));
        if (m < dim)
          for (int i = 0; i <= m; ++i)
            if (f(m + 1, from.s(m, i, c)) != to.s(m, i, f(m, c))) rep.add("not_simplicial", what + " vs inner s" + std::to_string(i));
      }
  };
  for (std::size_t k = 0; k < levels; ++k) {
    for (std::size_t i = 0; i < x.face[k].size(); ++i)
      check_map(x.face[k][i], x.level[k], x.level[k - 1], "outer d" + std::to_string(i) + " on space " + std::to_string(k));
    for (std::size_t i = 0; i < x.degen[k].size(); ++i)
      check_map(x.degen[k][i], x.level[k], x.level[k + 1], "outer s" + std::to_string(i) + " on space " + std::to_string(k));
  }
  if (!rep.ok()) return rep;

  auto D = [&](int k, int i, int m, int c) { return x.face[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)](m, c); };
  auto S = [&](int k, int i, int m, int c) { return x.degen[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)](m, c); };
  for (int k = 0; k <= x.n; ++k)
    for (int m = 0; m <= dim; ++m)
      for (int c = 0; c < static_cast<int>(x.level[static_cast<std::size_t>(k)].size(m)); ++c) {
        const std::string at = "space " + std::to_string(k) + " dimension " + std::to_string(m);
        if (k >= 2)
          for (int j = 1; j <= k; ++j)
            for (int i = 0; i < j; ++i)
              if (D(k - 1, i, m, D(k, j, m, c)) != D(k - 1, j - 1, m, D(k, i, m, c))) rep.add("outer_face_face", at);
        if (k < x.n)
          for (int j = 0; j <= k; ++j) {
            const int sc = S(k, j, m, c);
            for (int i = 0; i <= k + 1; ++i) {
              int expect;
              if (i == j || i == j + 1) expect = c;
              else if (i < j) expect = S(k - 1, j - 1, m, D(k, i, m, c));
              else expect = S(k - 1, j, m, D(k, i - 1, m, c));
              if (D(k + 1, i, m, sc) != expect) rep.add("outer_face_degen", at);
            }
          }
        if (k + 2 <= x.n)
          for (int j = 0; j <= k; ++j)
            for (int i = 0; i <= j; ++i)
              if (S(k + 1, i, m, S(k, j, m, c)) != S(k + 1, j + 1, m, S(k, i, m, c))) rep.add("outer_degen_degen", at);
      }
  const TruncSSet& x0 = x.level[0];
  for (int m = 1; m <= dim; ++m)
    for (int c = 0; c < static_cast<int>(x0.size(m)); ++c)
      if (!x0.is_degenerate(m, c)) rep.add("not_discrete", "space 0 has a nondegenerate " + std::to_string(m) + "-cell");
  return rep;
}

fpcat::FinCategory homotopy_category(const SegalSpaceData& x) {
  if (x.n < 2) throw InvalidInput("the homotopy category needs spaces 0, 1 and 2");
  auto rep = validate_segal_space(x);
  if (!rep.ok()) throw InvalidInput("invalid Segal space data: " + rep.violations.front().kind + " (" + rep.violations.front().detail + ")");
  const TruncSSet& x0 = x.level[0];
  const TruncSSet& x1 = x.level[1];
  const TruncSSet& x2 = x.level[2];
  auto vertex_face = [&](int k, int i, int v) { return x.face[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)](0, v); };

  const Components comp = pi0(x1);
  std::vector<int> rep_vertex(comp.count, -1);
  for (int v = 0; v < static_cast<int>(x1.size(0)); ++v)
    if (rep_vertex[static_cast<std::size_t>(comp.of[static_cast<std::size_t>(v)])] < 0)
      rep_vertex[static_cast<std::size_t>(comp.of[static_cast<std::size_t>(v)])] = v;

  std::vector<fpcat::Morphism> ms;
  for (std::size_t c = 0; c < comp.count; ++c) {
    const int v = rep_vertex[c];
    ms.push_back({x1.cells[0][static_cast<std::size_t>(v)], vertex_face(1, 1, v), vertex_face(1, 0, v)});
  }
  std::vector<int> identity;
  for (int a = 0; a < static_cast<int>(x0.size(0)); ++a)
    identity.push_back(comp.of[static_cast<std::size_t>(x.degen[0][0](0, a))]);

  const std::size_t n = ms.size();
  std::vector<int> table(n * n, -1);
  std::vector<int> witness(n * n, -1);
  for (int t = 0; t < static_cast<int>(x2.size(0)); ++t) {
    const int f = comp.of[static_cast<std::size_t>(vertex_face(2, 2, t))];
    const int g = comp.of[static_cast<std::size_t>(vertex_face(2, 0, t))];
    const int gf = comp.of[static_cast<std::size_t>(vertex_face(2, 1, t))];
    const std::size_t slot = static_cast<std::size_t>(g) * n + static_cast<std::size_t>(f);
    if (table[slot] < 0) {
      table[slot] = gf;
      witness[slot] = t;
    } else if (table[slot] != gf) {
      throw CompositionIllDefined("composite of '" + ms[static_cast<std::size_t>(f)].name + "' then '" +
                                      ms[static_cast<std::size_t>(g)].name + "' depends on the lift",
                                  {witness[slot], t});
    }
  }
  for (std::size_t f = 0; f < n; ++f)
    for (std::size_t g = 0; g < n; ++g)
      if (ms[f].tgt == ms[g].src && table[g * n + f] < 0)
        throw SegalMapNotComponentSurjective("no 2-simplex lies over the pair ('" + ms[f].name + "', '" + ms[g].name + "')");

  fpcat::FinCategory c(x0.cells[0], std::move(ms), std::move(identity), std::move(table));
  auto laws = validate_category(c);
  if (!laws.ok())
    throw CompositionIllDefined("induced composition is not a category: " + laws.violations.front().kind + " " +
                                    laws.violations.front().detail,
                                {});
  return c;
}

SegalSpaceData discrete_segal_space(const fpcat::FinCategory& c, int m) { return levelwise_discrete(nerve(c, 2), m); }

SegalSpaceData levelwise_discrete(const TruncSSet& nv, int m) {
  if (nv.dim < 2) throw InvalidInput("levelwise_discrete needs cells up to dimension 2");
  SegalSpaceData x;
  x.n = 2;
  for (int k = 0; k <= 2; ++k) x.level.push_back(discrete_sset(nv.cells[static_cast<std::size_t>(k)], m));
  auto constant = [&](const std::vector<int>& col) {
    SSetMap f;
    f.cell.assign(static_cast<std::size_t>(m) + 1, col);
    return f;
  };
  x.face.resize(3);
  x.degen.resize(3);
  for (int k = 1; k <= 2; ++k)
    for (int i = 0; i <= k; ++i) x.face[static_cast<std::size_t>(k)].push_back(constant(nv.face[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)]));
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i <= k; ++i) x.degen[static_cast<std::size_t>(k)].push_back(constant(nv.degen[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)]));
  return x;
}

namespace {

// Tuples (x_0, ..., x_k, c_1, ..., c_k) with c_j an m-cell of hom(x_{j-1}, x_j).
struct Level {
  std::vector<std::vector<std::vector<int>>> tuples;  // [m]
  std::vector<std::map<std::vector<int>, int>> index;
};

}  // namespace

SegalSpaceData enriched_nerve(const EnrichedCategory& c) {
  const int nobj = static_cast<int>(c.objects.size());
  auto hom = [&](int a, int b) -> const TruncSSet* {
    const auto& h = c.hom[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    return h ? &*h : nullptr;
  };
  int dim = -1;
  for (int a = 0; a < nobj; ++a) {
    if (!hom(a, a)) throw InvalidInput("object '" + c.objects[static_cast<std::size_t>(a)] + "' has no endomorphism space");
    for (int b = 0; b < nobj; ++b)
      if (const auto* h = hom(a, b)) {
        if (dim >= 0 && h->dim != dim) throw InvalidInput("hom spaces must share one truncation level");
        dim = h->dim;
      }
  }
  if (dim < 0) throw InvalidInput("enriched category has no objects");
  auto identity_cell = [&](int a, int m) {
    int v = c.identity[static_cast<std::size_t>(a)];
    for (int j = 0; j < m; ++j) v = hom(a, a)->s(j, 0, v);
    return v;
  };

  std::vector<Level> lv(3);
  for (int k = 0; k <= 2; ++k) {
    lv[static_cast<std::size_t>(k)].tuples.resize(static_cast<std::size_t>(dim) + 1);
    lv[static_cast<std::size_t>(k)].index.resize(static_cast<std::size_t>(dim) + 1);
  }
  for (int m = 0; m <= dim; ++m) {
    auto& t0 = lv[0].tuples[static_cast<std::size_t>(m)];
    for (int a = 0; a < nobj; ++a) t0.push_back({a});
    auto& t1 = lv[1].tuples[static_cast<std::size_t>(m)];
    for (int a = 0; a < nobj; ++a)
      for (int b = 0; b < nobj; ++b)
        if (const auto* h = hom(a, b))
          for (int f = 0; f < static_cast<int>(h->size(m)); ++f) t1.push_back({a, b, f});
    auto& t2 = lv[2].tuples[static_cast<std::size_t>(m)];
    for (const auto& p : t1)
      for (int d = 0; d < nobj; ++d)
        if (const auto* h = hom(p[1], d))
          for (int g = 0; g < static_cast<int>(h->size(m)); ++g) t2.push_back({p[0], p[1], d, p[2], g});
  }
  for (auto& l : lv)
    for (int m = 0; m <= dim; ++m)
      for (std::size_t i = 0; i < l.tuples[static_cast<std::size_t>(m)].size(); ++i)
        l.index[static_cast<std::size_t>(m)].emplace(l.tuples[static_cast<std::size_t>(m)][i], static_cast<int>(i));

  // Inner structure acts on the hom cells of a tuple; objects are untouched.
  auto inner = [&](int k, const std::vector<int>& t, auto&& op) {
    std::vector<int> u = t;
    for (int j = 1; j <= k; ++j) {
      const int a = t[static_cast<std::size_t>(j - 1)];
      const int b = t[static_cast<std::size_t>(j)];
      auto& cell = u[static_cast<std::size_t>(k + j)];
      cell = op(*hom(a, b), cell);
    }
    return u;
  };
  auto name = [&](int k, int m, const std::vector<int>& t) {
    std::string s;
    for (int j = 0; j <= k; ++j) {
      if (j) s += ",";
      s += c.objects[static_cast<std::size_t>(t[static_cast<std::size_t>(j)])];
    }
    for (int j = 1; j <= k; ++j) {
      s += j == 1 ? ":" : "|";
      const auto* h = hom(t[static_cast<std::size_t>(j - 1)], t[static_cast<std::size_t>(j)]);
      s += h->cells[static_cast<std::size_t>(m)][static_cast<std::size_t>(t[static_cast<std::size_t>(k + j)])];
    }
    return s;
  };

  SegalSpaceData x;
  x.n = 2;
  for (int k = 0; k <= 2; ++k) {
    const auto& l = lv[static_cast<std::size_t>(k)];
    TruncSSet s;
    s.dim = dim;
    s.cells.resize(static_cast<std::size_t>(dim) + 1);
    s.face.resize(static_cast<std::size_t>(dim) + 1);
    s.degen.resize(static_cast<std::size_t>(dim) + 1);
    for (int m = 0; m <= dim; ++m) {
      const auto& ts = l.tuples[static_cast<std::size_t>(m)];
      for (const auto& t : ts) s.cells[static_cast<std::size_t>(m)].push_back(name(k, m, t));
      if (m > 0)
        for (int i = 0; i <= m; ++i) {
          std::vector<int> col;
          for (const auto& t : ts)
            col.push_back(l.index[static_cast<std::size_t>(m - 1)].at(inner(k, t, [&](const TruncSSet& h, int v) { return h.d(m, i, v); })));
          s.face[static_cast<std::size_t>(m)].push_back(col);
        }
      if (m < dim)
        for (int i = 0; i <= m; ++i) {
          std::vector<int> col;
          for (const auto& t : ts)
            col.push_back(l.index[static_cast<std::size_t>(m + 1)].at(inner(k, t, [&](const TruncSSet& h, int v) { return h.s(m, i, v); })));
          s.degen[static_cast<std::size_t>(m)].push_back(col);
        }
    }
    x.level.push_back(std::move(s));
  }

  auto outer = [&](int from, int to, auto&& op) {
    SSetMap f;
    for (int m = 0; m <= dim; ++m) {
      std::vector<int> col;
      for (const auto& t : lv[static_cast<std::size_t>(from)].tuples[static_cast<std::size_t>(m)])
        col.push_back(lv[static_cast<std::size_t>(to)].index[static_cast<std::size_t>(m)].at(op(m, t)));
      f.cell.push_back(std::move(col));
    }
    return f;
  };
  x.face.resize(3);
  x.degen.resize(3);
  x.face[1].push_back(outer(1, 0, [](int, const std::vector<int>& t) { return std::vector<int>{t[1]}; }));
  x.face[1].push_back(outer(1, 0, [](int, const std::vector<int>& t) { return std::vector<int>{t[0]}; }));
  x.face[2].push_back(outer(2, 1, [](int, const std::vector<int>& t) { return std::vector<int>{t[1], t[2], t[4]}; }));
  x.face[2].push_back(outer(2, 1, [&](int m, const std::vector<int>& t) {
    return std::vector<int>{t[0], t[2], c.compose(t[0], t[1], t[2], m, t[4], t[3])};
  }));
  x.face[2].push_back(outer(2, 1, [](int, const std::vector<int>& t) { return std::vector<int>{t[0], t[1], t[3]}; }));
  x.degen[0].push_back(outer(0, 1, [&](int m, const std::vector<int>& t) {
    return std::vector<int>{t[0], t[0], identity_cell(t[0], m)};
  }));
  x.degen[1].push_back(outer(1, 2, [&](int m, const std::vector<int>& t) {
    return std::vector<int>{t[0], t[0], t[1], identity_cell(t[0], m), t[2]};
  }));
  x.degen[1].push_back(outer(1, 2, [&](int m, const std::vector<int>& t) {
    return std::vector<int>{t[0], t[1], t[1], t[2], identity_cell(t[1], m)};
  }));
  return x;
}

}  // namespace hck::simplicial
