#include <algorithm>
#include <sstream>

#include "hck/fpcat.hpp"

namespace hck::fpcat {

Graph::Graph(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (!vertex_index_.emplace(vertices_[i], static_cast<int>(i)).second)
      throw InvalidInput("duplicate vertex '" + vertices_[i] + "'");
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    const auto& a = arrows_[i];
    if (!arrow_index_.emplace(a.id, static_cast<int>(i)).second)
      throw InvalidInput("duplicate arrow '" + a.id + "'");
    auto s = vertex_index_.find(a.src);
    auto t = vertex_index_.find(a.tgt);
    if (s == vertex_index_.end() || t == vertex_index_.end())
      throw InvalidInput("arrow '" + a.id + "' has an undeclared endpoint");
    src_.push_back(s->second);
    tgt_.push_back(t->second);
  }
}

int Graph::vertex(const std::string& name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) throw InvalidInput("unknown vertex '" + name + "'");
  return it->second;
}

int Graph::arrow(const std::string& name) const {
  auto it = arrow_index_.find(name);
  if (it == arrow_index_.end()) throw InvalidInput("unknown arrow '" + name + "'");
  return it->second;
}

Path make_path(const Graph& g, const std::string& start, const std::vector<std::string>& arrows) {
  Path p{g.vertex(start), {}};
  for (const auto& a : arrows) p.arrows.push_back(g.arrow(a));
  if (!is_composable(g, p)) throw InvalidInput("path " + path_to_string(g, p) + " is not composable");
  return p;
}

Path make_path(const Graph& g, const std::vector<std::string>& arrows) {
  if (arrows.empty()) throw InvalidInput("an empty path needs an explicit start vertex");
  return make_path(g, g.arrows()[static_cast<std::size_t>(g.arrow(arrows.front()))].src, arrows);
}

int path_end(const Graph& g, const Path& p) { return p.arrows.empty() ? p.start : g.tgt(p.arrows.back()); }

bool is_composable(const Graph& g, const Path& p) {
  if (p.start < 0 || static_cast<std::size_t>(p.start) >= g.num_vertices()) return false;
  int at = p.start;
  for (int a : p.arrows) {
    if (a < 0 || static_cast<std::size_t>(a) >= g.num_arrows() || g.src(a) != at) return false;
    at = g.tgt(a);
  }
  return true;
}

std::string path_to_string(const Graph& g, const Path& p) {
  if (p.arrows.empty()) return "id_" + g.vertices()[static_cast<std::size_t>(p.start)];
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += ".";
    s += g.arrows()[static_cast<std::size_t>(p.arrows[i])].id;
  }
  return s;
}

Path concat(const Path& a, const Path& b) {
  Path r = a;
  r.arrows.insert(r.arrows.end(), b.arrows.begin(), b.arrows.end());
  return r;
}

FinPresentation::FinPresentation(Graph graph, std::vector<Relation> relations)
    : graph_(std::move(graph)), relations_(std::move(relations)) {
  for (const auto& r : relations_) {
    if (!is_composable(graph_, r.lhs) || !is_composable(graph_, r.rhs))
      throw InvalidInput("relation side is not a composable path");
    if (r.lhs.start != r.rhs.start || path_end(graph_, r.lhs) != path_end(graph_, r.rhs))
      throw InvalidInput("relation " + path_to_string(graph_, r.lhs) + " = " +
                         path_to_string(graph_, r.rhs) + " is not a parallel pair");
  }
}

std::vector<Path> enumerate_paths(const Graph& g, const std::string& from, const std::string& to,
                                  std::size_t max_len) {
  const int s = g.vertex(from);
  const int t = g.vertex(to);
  // Out-arrows sorted by identifier give lexicographic order within a length.
  std::vector<std::vector<int>> out(g.num_vertices());
  for (std::size_t a = 0; a < g.num_arrows(); ++a) out[static_cast<std::size_t>(g.src(static_cast<int>(a)))].push_back(static_cast<int>(a));
  for (auto& v : out)
    std::sort(v.begin(), v.end(), [&](int x, int y) { return g.arrows()[static_cast<std::size_t>(x)].id < g.arrows()[static_cast<std::size_t>(y)].id; });

  std::vector<Path> result;
  std::vector<Path> layer{Path{s, {}}};
  for (std::size_t len = 0;; ++len) {
    for (const auto& p : layer)
      if (path_end(g, p) == t) result.push_back(p);
    if (len == max_len) break;
    std::vector<Path> next;
    for (const auto& p : layer)
      for (int a : out[static_cast<std::size_t>(path_end(g, p))]) {
        Path q = p;
        q.arrows.push_back(a);
        next.push_back(std::move(q));
      }
    if (next.empty()) break;
    layer = std::move(next);
  }
  return result;
}

}  // namespace hck::fpcat
