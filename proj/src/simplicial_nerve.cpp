#include <map>
#include <numeric>

#include "hck/parallel.hpp"
#include "hck/simplicial.hpp"

namespace hck::simplicial {

TruncSSet nerve(const fpcat::FinCategory& c, int n) {
  if (n < 0) throw InvalidInput("negative truncation");
  const auto levels = static_cast<std::size_t>(n) + 1;
  std::vector<std::vector<std::vector<int>>> tuples(levels);
  std::vector<std::map<std::vector<int>, int>> index(levels);
  // Level 0 holds objects as one-element tuples; higher levels hold morphisms.
  for (std::size_t x = 0; x < c.num_objects(); ++x) tuples[0].push_back({static_cast<int>(x)});
  auto end_object = [&](std::size_t k, const std::vector<int>& t) { return k == 0 ? t[0] : c.tgt(t.back()); };
  for (std::size_t k = 1; k < levels; ++k)
    for (const auto& t : tuples[k - 1]) {
      const int at = end_object(k - 1, t);
      for (std::size_t m = 0; m < c.num_morphisms(); ++m) {
        if (c.src(static_cast<int>(m)) != at) continue;
        std::vector<int> u = k == 1 ? std::vector<int>{} : t;
        u.push_back(static_cast<int>(m));
        tuples[k].push_back(std::move(u));
      }
    }
  for (std::size_t k = 0; k < levels; ++k)
    for (std::size_t i = 0; i < tuples[k].size(); ++i) index[k].emplace(tuples[k][i], static_cast<int>(i));

  TruncSSet x;
  x.dim = n;
  x.cells.resize(levels);
  x.face.resize(levels);
  x.degen.resize(levels);
  for (std::size_t k = 0; k < levels; ++k) {
    for (const auto& t : tuples[k]) {
      if (k == 0) {
        x.cells[0].push_back(c.objects()[static_cast<std::size_t>(t[0])]);
        continue;
      }
      std::string name;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) name += "|";
        name += c.morphisms()[static_cast<std::size_t>(t[i])].name;
      }
      x.cells[k].push_back(name);
    }
    if (k > 0)
      for (std::size_t i = 0; i <= k; ++i) {
        std::vector<int> col;
        for (const auto& t : tuples[k]) {
          std::vector<int> u;
          if (k == 1) {
            u = {i == 0 ? c.tgt(t[0]) : c.src(t[0])};
          } else if (i == 0) {
            u.assign(t.begin() + 1, t.end());
          } else if (i == k) {
            u.assign(t.begin(), t.end() - 1);
          } else {
            u = t;
            u[i - 1] = c.compose(t[i], t[i - 1]);
            u.erase(u.begin() + static_cast<long>(i));
          }
          col.push_back(index[k - 1].at(u));
        }
        x.face[k].push_back(col);
      }
    if (k + 1 < levels)
      for (std::size_t i = 0; i <= k; ++i) {
        std::vector<int> col;
        for (const auto& t : tuples[k]) {
          std::vector<int> u;
          if (k == 0) {
            u = {c.identity(t[0])};
          } else {
            // Vertex i of the chain: source of f_{i+1}, or the final target.
            const int v = i < t.size() ? c.src(t[i]) : c.tgt(t.back());
            u = t;
            u.insert(u.begin() + static_cast<long>(i), c.identity(v));
          }
          col.push_back(index[k + 1].at(u));
        }
        x.degen[k].push_back(col);
      }
  }
  return x;
}

SegalReport is_segal(const TruncSSet& x) {
  SegalReport rep;
  const std::size_t nv = x.size(0);
  for (int k = 1; k <= x.dim; ++k) {
    SegalLevel lv;
    lv.k = k;
    lv.simplices = x.size(k);
    // Chains of k edges, counted by their final vertex.
    std::vector<std::size_t> chains(nv, 1);
    for (int step = 0; step < k; ++step) {
      std::vector<std::size_t> next(nv, 0);
      for (int e = 0; e < static_cast<int>(x.size(1)); ++e)
        next[static_cast<std::size_t>(x.d(1, 0, e))] += chains[static_cast<std::size_t>(x.d(1, 1, e))];
      chains = std::move(next);
    }
    lv.fiber_product = std::accumulate(chains.begin(), chains.end(), std::size_t{0});
    std::map<std::vector<int>, int> seen;
    lv.injective = true;
    for (int s = 0; s < static_cast<int>(lv.simplices) && lv.injective; ++s) {
      std::vector<int> edges;
      for (int i = 0; i < k; ++i) edges.push_back(x.restrict_to(k, s, {i, i + 1}));
      lv.injective = seen.emplace(edges, s).second;
    }
    lv.bijective = lv.injective && lv.simplices == lv.fiber_product;
    rep.segal = rep.segal && lv.bijective;
    rep.levels.push_back(lv);
  }
  return rep;
}

fpcat::FinPresentation fundamental_category(const TruncSSet& x) {
  if (x.dim < 2) throw InvalidInput("the fundamental category needs cells up to dimension 2");
  std::vector<fpcat::Arrow> arrows;
  std::vector<int> arrow_of(x.size(1), -1);
  for (int e = 0; e < static_cast<int>(x.size(1)); ++e) {
    if (x.is_degenerate(1, e)) continue;
    arrow_of[static_cast<std::size_t>(e)] = static_cast<int>(arrows.size());
    arrows.push_back({x.cells[1][static_cast<std::size_t>(e)], x.cells[0][static_cast<std::size_t>(x.d(1, 1, e))],
                      x.cells[0][static_cast<std::size_t>(x.d(1, 0, e))]});
  }
  fpcat::Graph g(x.cells[0], arrows);
  auto path = [&](int e) {
    const int a = arrow_of[static_cast<std::size_t>(e)];
    if (a < 0) return fpcat::Path{x.d(1, 0, e), {}};
    return fpcat::Path{x.d(1, 1, e), {a}};
  };
  std::vector<fpcat::Relation> rels;
  for (int s = 0; s < static_cast<int>(x.size(2)); ++s) {
    if (x.is_degenerate(2, s)) continue;
    rels.push_back({fpcat::concat(path(x.d(2, 2, s)), path(x.d(2, 0, s))), path(x.d(2, 1, s))});
  }
  return fpcat::FinPresentation(std::move(g), std::move(rels));
}

bool HornReport::all_fillable() const {
  for (const auto& h : horns)
    if (h.fillers == 0) return false;
  return true;
}

bool HornReport::all_unique() const {
  for (const auto& h : horns)
    if (h.fillers != 1) return false;
  return true;
}

namespace {

HornReport horns_impl(const TruncSSet& x, int n, bool parallel) {
  if (n != 2 && n != 3) throw InvalidInput("inner horns are supported for n = 2, 3");
  if (x.dim < n) throw InvalidInput("truncation too low for horns of dimension " + std::to_string(n));
  HornReport rep;
  const int lower = n - 1;
  const auto nl = static_cast<std::int64_t>(x.size(lower));
  for (int missing = 1; missing < n; ++missing) {
    std::vector<int> present;
    for (int i = 0; i <= n; ++i)
      if (i != missing) present.push_back(i);

    std::map<std::vector<int>, std::size_t> fillers;
    for (int s = 0; s < static_cast<int>(x.size(n)); ++s) {
      std::vector<int> key;
      for (int i : present) key.push_back(x.d(n, i, s));
      ++fillers[key];
    }
    // Faces x_a, x_b with a < b must satisfy d_a(x_b) = d_{b-1}(x_a).
    auto compatible = [&](const std::vector<int>& chosen, int candidate) {
      const int b = present[chosen.size()];
      for (std::size_t p = 0; p < chosen.size(); ++p) {
        const int a = present[p];
        if (x.d(lower, a, candidate) != x.d(lower, b - 1, chosen[p])) return false;
      }
      return true;
    };
    auto from_first = [&](std::int64_t first) {
      std::vector<Horn> out;
      std::vector<int> chosen{static_cast<int>(first)};
      auto extend = [&](auto&& self) -> void {
        if (chosen.size() == present.size()) {
          auto it = fillers.find(chosen);
          out.push_back({n, missing, chosen, it == fillers.end() ? 0 : it->second});
          return;
        }
        for (int c = 0; c < static_cast<int>(nl); ++c) {
          if (!compatible(chosen, c)) continue;
          chosen.push_back(c);
          self(self);
          chosen.pop_back();
        }
      };
      extend(extend);
      return out;
    };
    std::vector<std::vector<Horn>> parts;
    if (parallel) {
      parts = par::map_indexed<std::vector<Horn>>(nl, from_first);
    } else {
      for (std::int64_t f = 0; f < nl; ++f) parts.push_back(from_first(f));
    }
    for (auto& part : parts) rep.horns.insert(rep.horns.end(), part.begin(), part.end());
  }
  return rep;
}

}  // namespace

HornReport inner_horn_fillers(const TruncSSet& x, int n) { return horns_impl(x, n, true); }
HornReport inner_horn_fillers_serial(const TruncSSet& x, int n) { return horns_impl(x, n, false); }

Components pi0(const TruncSSet& x) {
  const std::size_t nv = x.size(0);
  std::vector<int> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    return v;
  };
  if (x.dim >= 1)
    for (int e = 0; e < static_cast<int>(x.size(1)); ++e) {
      int a = find(x.d(1, 0, e));
      int b = find(x.d(1, 1, e));
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  Components comp;
  comp.of.assign(nv, -1);
  std::map<int, int> number;
  for (std::size_t v = 0; v < nv; ++v) {
    auto [it, fresh] = number.emplace(find(static_cast<int>(v)), static_cast<int>(number.size()));
    comp.of[v] = it->second;
  }
  comp.count = number.size();
  return comp;
}

}  // namespace hck::simplicial
