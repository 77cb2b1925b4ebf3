#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_map>

#include "hck/fpcat.hpp"
#include "hck/parallel.hpp"

namespace hck::fpcat {
namespace {

std::string key_of(const Path& p) {
  std::string k = std::to_string(p.start);
  k.push_back(':');
  for (int a : p.arrows) {
    k += std::to_string(a);
    k.push_back(',');
  }
  return k;
}

int vertex_at(const Graph& g, const Path& p, std::size_t pos) {
  return pos == 0 ? p.start : g.tgt(p.arrows[pos - 1]);
}


// All single relation applications to p, in (relation, direction, position)
// order. Results longer than the budget are dropped and flagged.
std::vector<RewriteStep> rewrites(const FinPresentation& pres, const Path& p, std::size_t budget,
                                  bool& escaped) {
  const Graph& g = pres.graph();
  std::vector<RewriteStep> out;
  for (std::size_t r = 0; r < pres.relations().size(); ++r) {
    for (int dir = 0; dir < 2; ++dir) {
      const Path& from = dir == 0 ? pres.relations()[r].lhs : pres.relations()[r].rhs;
      const Path& to = dir == 0 ? pres.relations()[r].rhs : pres.relations()[r].lhs;
      const std::size_t k = from.length();
      if (k > p.length()) continue;
      for (std::size_t pos = 0; pos + k <= p.length(); ++pos) {
        if (vertex_at(g, p, pos) != from.start) continue;
        if (!std::equal(from.arrows.begin(), from.arrows.end(), p.arrows.begin() + static_cast<long>(pos)))
          continue;
        const std::size_t new_len = p.length() - k + to.length();
        if (new_len > budget) {
          escaped = true;
          continue;
        }
        Path q{p.start, {}};
        q.arrows.reserve(new_len);
        q.arrows.insert(q.arrows.end(), p.arrows.begin(), p.arrows.begin() + static_cast<long>(pos));
        q.arrows.insert(q.arrows.end(), to.arrows.begin(), to.arrows.end());
        q.arrows.insert(q.arrows.end(), p.arrows.begin() + static_cast<long>(pos + k), p.arrows.end());
        out.push_back({r, dir == 0, pos, std::move(q)});
      }
    }
  }
  return out;
}

struct ClassExploration {
  std::vector<Path> nodes;
  std::vector<int> parent;
  std::vector<RewriteStep> via;
  std::unordered_map<std::string, int> index;
  bool closed = true;
};

ClassExploration explore(const FinPresentation& pres, const Path& start, std::size_t budget,
                         bool parallel) {
  ClassExploration ex;
  ex.nodes.push_back(start);
  ex.parent.push_back(-1);
  ex.via.emplace_back();
  ex.index.emplace(key_of(start), 0);
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    struct Expansion {
      std::vector<RewriteStep> steps;
      bool escaped = false;
    };
    auto expand = [&](std::int64_t i) {
      Expansion e;
      e.steps = rewrites(pres, ex.nodes[static_cast<std::size_t>(frontier[static_cast<std::size_t>(i)])], budget, e.escaped);
      return e;
    };
    std::vector<Expansion> expansions;
    const auto n = static_cast<std::int64_t>(frontier.size());
    if (parallel) {
      expansions = par::map_indexed<Expansion>(n, expand);
    } else {
      for (std::int64_t i = 0; i < n; ++i) expansions.push_back(expand(i));
    }
    // Deterministic merge in frontier order.
    std::vector<int> next;
    for (std::size_t i = 0; i < expansions.size(); ++i) {
      if (expansions[i].escaped) ex.closed = false;
      for (auto& s : expansions[i].steps) {
        auto key = key_of(s.result);
        if (ex.index.count(key)) continue;
        const int id = static_cast<int>(ex.nodes.size());
        ex.index.emplace(std::move(key), id);
        ex.nodes.push_back(s.result);
        ex.parent.push_back(frontier[i]);
        ex.via.push_back(std::move(s));
        next.push_back(id);
      }
    }
    frontier = std::move(next);
  }
  return ex;
}

WordProblemResult solve(const FinPresentation& p, const Path& u, const Path& v, std::size_t budget,
                        bool parallel) {
  const Graph& g = p.graph();
  if (!is_composable(g, u) || !is_composable(g, v)) throw InvalidInput("word problem inputs must be composable paths");
  if (u.start != v.start || path_end(g, u) != path_end(g, v))
    throw InvalidInput("word problem inputs " + path_to_string(g, u) + " and " + path_to_string(g, v) +
                       " are not parallel");
  WordProblemResult res;
  if (u.length() > budget || v.length() > budget) return res;

  auto ex_u = explore(p, u, budget, parallel);
  res.explored = ex_u.nodes.size();
  auto hit = ex_u.index.find(key_of(v));
  if (hit != ex_u.index.end()) {
    res.decision = Decision::Equal;
    for (int at = hit->second; ex_u.parent[static_cast<std::size_t>(at)] >= 0; at = ex_u.parent[static_cast<std::size_t>(at)])
      res.witness.push_back(ex_u.via[static_cast<std::size_t>(at)]);
    std::reverse(res.witness.begin(), res.witness.end());
    return res;
  }
  if (ex_u.closed) {
    res.decision = Decision::Distinct;
    return res;
  }
  auto ex_v = explore(p, v, budget, parallel);
  res.explored += ex_v.nodes.size();
  if (ex_v.closed) res.decision = Decision::Distinct;
  return res;
}

}  // namespace

std::string to_string(Decision d) {
  switch (d) {
    case Decision::Equal: return "Equal";
    case Decision::Distinct: return "Distinct";
    case Decision::Unknown: return "Unknown";
  }
  return "?";
}

WordProblemResult word_problem(const FinPresentation& p, const Path& u, const Path& v, std::size_t budget) {
  return solve(p, u, v, budget, true);
}

WordProblemResult word_problem_serial(const FinPresentation& p, const Path& u, const Path& v,
                                      std::size_t budget) {
  return solve(p, u, v, budget, false);
}

bool replay_witness(const FinPresentation& p, const Path& u, const Path& v,
                    const std::vector<RewriteStep>& steps) {
  const Graph& g = p.graph();
  Path cur = u;
  for (const auto& s : steps) {
    if (s.relation >= p.relations().size()) return false;
    const auto& rel = p.relations()[s.relation];
    const Path& from = s.forward ? rel.lhs : rel.rhs;
    const Path& to = s.forward ? rel.rhs : rel.lhs;
    if (s.position + from.length() > cur.length()) return false;
    if (vertex_at(g, cur, s.position) != from.start) return false;
    if (!std::equal(from.arrows.begin(), from.arrows.end(), cur.arrows.begin() + static_cast<long>(s.position)))
      return false;
    Path next{cur.start, {}};
    next.arrows.insert(next.arrows.end(), cur.arrows.begin(), cur.arrows.begin() + static_cast<long>(s.position));
    next.arrows.insert(next.arrows.end(), to.arrows.begin(), to.arrows.end());
    next.arrows.insert(next.arrows.end(), cur.arrows.begin() + static_cast<long>(s.position + from.length()),
                       cur.arrows.end());
    if (!(next == s.result)) return false;
    cur = std::move(next);
  }
  return cur == v;
}

// ---- quotient --------------------------------------------------------------

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

bool path_less(const Graph& g, const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  for (std::size_t i = 0; i < a.length(); ++i) {
    const auto& x = g.arrows()[static_cast<std::size_t>(a.arrows[i])].id;
    const auto& y = g.arrows()[static_cast<std::size_t>(b.arrows[i])].id;
    if (x != y) return x < y;
  }
  return false;
}

}  // namespace

int Quotient::class_of(const Graph&, const Path& p) const {
  auto it = index.find(key_of(p));
  return it == index.end() ? -1 : it->second;
}

Quotient quotient_category(const FinPresentation& p, std::size_t max_len, std::size_t max_window) {
  const Graph& g = p.graph();
  const std::size_t window_len = 2 * max_len;

  // Window: every composable path of length <= 2 * max_len, so that every
  // composite of two in-range representatives is present.
  std::vector<Path> window;
  std::unordered_map<std::string, int> where;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) window.push_back(Path{static_cast<int>(v), {}});
  std::size_t layer_begin = 0;
  for (std::size_t len = 1; len <= window_len; ++len) {
    const std::size_t layer_end = window.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      const int at = path_end(g, window[i]);
      for (std::size_t a = 0; a < g.num_arrows(); ++a) {
        if (g.src(static_cast<int>(a)) != at) continue;
        Path q = window[i];
        q.arrows.push_back(static_cast<int>(a));
        window.push_back(std::move(q));
        if (window.size() > max_window)
          throw BudgetExceeded("quotient window exceeds " + std::to_string(max_window) + " paths");
      }
    }
    layer_begin = layer_end;
  }
  for (std::size_t i = 0; i < window.size(); ++i) where.emplace(key_of(window[i]), static_cast<int>(i));

  UnionFind uf(window.size());
  for (std::size_t i = 0; i < window.size(); ++i) {
    bool escaped = false;
    for (const auto& s : rewrites(p, window[i], window_len, escaped))
      uf.unite(static_cast<int>(i), where.at(key_of(s.result)));
  }

  // A class is a morphism when it has a member of length <= max_len; its
  // representative is the least such member.
  std::map<int, int> rep_of_root;
  for (std::size_t i = 0; i < window.size(); ++i) {
    if (window[i].length() > max_len) continue;
    const int root = uf.find(static_cast<int>(i));
    auto it = rep_of_root.find(root);
    if (it == rep_of_root.end() || path_less(g, window[i], window[static_cast<std::size_t>(it->second)]))
      rep_of_root[root] = static_cast<int>(i);
  }

  std::vector<int> reps;
  for (auto& [root, rep] : rep_of_root) reps.push_back(rep);
  std::sort(reps.begin(), reps.end(), [&](int a, int b) {
    const Path& x = window[static_cast<std::size_t>(a)];
    const Path& y = window[static_cast<std::size_t>(b)];
    if (x.start != y.start) return x.start < y.start;
    if (path_end(g, x) != path_end(g, y)) return path_end(g, x) < path_end(g, y);
    return path_less(g, x, y);
  });

  Quotient q;
  std::map<int, int> morphism_of_root;
  std::vector<Morphism> morphisms;
  std::vector<int> identity(g.num_vertices(), -1);
  for (int r : reps) {
    const Path& path = window[static_cast<std::size_t>(r)];
    const int m = static_cast<int>(morphisms.size());
    morphism_of_root[uf.find(r)] = m;
    morphisms.push_back({path_to_string(g, path), path.start, path_end(g, path)});
    if (path.arrows.empty()) identity[static_cast<std::size_t>(path.start)] = m;
    q.representatives.push_back(path);
  }

  const std::size_t n = morphisms.size();
  std::vector<int> table(n * n, -1);
  for (std::size_t f = 0; f < n; ++f)
    for (std::size_t h = 0; h < n; ++h) {
      if (morphisms[f].tgt != morphisms[h].src) continue;
      Path comp = concat(q.representatives[f], q.representatives[h]);
      const int root = uf.find(where.at(key_of(comp)));
      auto it = morphism_of_root.find(root);
      if (it == morphism_of_root.end())
        throw NotSaturated("composite " + path_to_string(g, comp) + " has no representative of length <= " +
                           std::to_string(max_len));
      table[h * n + f] = it->second;
    }

  for (std::size_t i = 0; i < window.size(); ++i) {
    if (window[i].length() > max_len) continue;
    q.index.emplace(key_of(window[i]), morphism_of_root.at(uf.find(static_cast<int>(i))));
  }
  std::vector<std::string> objects = g.vertices();
  q.category = FinCategory(std::move(objects), std::move(morphisms), std::move(identity), std::move(table));
  return q;
}

}  // namespace hck::fpcat
