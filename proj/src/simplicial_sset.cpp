#include <algorithm>
#include <map>

#include "hck/simplicial.hpp"

namespace hck::simplicial {

std::vector<std::size_t> TruncSSet::sizes() const {
  std::vector<std::size_t> out;
  for (const auto& c : cells) out.push_back(c.size());
  return out;
}

bool TruncSSet::is_degenerate(int k, int x) const {
  if (k == 0) return false;
  for (int i = 0; i < k; ++i) {
    // x = s_i(y) forces y = d_i(x).
    if (s(k - 1, i, d(k, i, x)) == x) return true;
  }
  return false;
}

int TruncSSet::restrict_to(int k, int x, const std::vector<int>& vertices) const {
  int level = k;
  for (int j = k; j >= 0; --j) {
    if (std::find(vertices.begin(), vertices.end(), j) != vertices.end()) continue;
    x = d(level, j, x);
    --level;
  }
  return x;
}

ValidationReport validate_sset(const TruncSSet& x) {
  ValidationReport rep;
  const auto dim = static_cast<std::size_t>(x.dim);
  if (x.dim < 0 || x.cells.size() != dim + 1 || x.face.size() != dim + 1 || x.degen.size() != dim + 1) {
    rep.add("shape", "levels do not match dim " + std::to_string(x.dim));
    return rep;
  }
  for (std::size_t k = 0; k <= dim; ++k) {
    const std::size_t nf = k == 0 ? 0 : k + 1;
    const std::size_t nd = k == dim ? 0 : k + 1;
    if (x.face[k].size() != nf || x.degen[k].size() != nd) {
      rep.add("shape", "level " + std::to_string(k) + " has the wrong number of structure maps");
      continue;
    }
    for (std::size_t i = 0; i < nf; ++i) {
      if (x.face[k][i].size() != x.cells[k].size()) rep.add("shape", "d" + std::to_string(i) + " on level " + std::to_string(k));
      for (int v : x.face[k][i])
        if (v < 0 || static_cast<std::size_t>(v) >= x.cells[k - 1].size())
          rep.add("range", "d" + std::to_string(i) + " on level " + std::to_string(k));
    }
    for (std::size_t i = 0; i < nd; ++i) {
      if (x.degen[k][i].size() != x.cells[k].size()) rep.add("shape", "s" + std::to_string(i) + " on level " + std::to_string(k));
      for (int v : x.degen[k][i])
        if (v < 0 || static_cast<std::size_t>(v) >= x.cells[k + 1].size())
          rep.add("range", "s" + std::to_string(i) + " on level " + std::to_string(k));
    }
  }
  if (!rep.ok()) return rep;

  auto where = [&](int k, int i, int j, int c) {
    return "level " + std::to_string(k) + " (" + std::to_string(i) + ", " + std::to_string(j) + ") at '" +
           x.cells[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)] + "'";
  };
  for (int k = 0; k <= x.dim; ++k)
    for (int c = 0; c < static_cast<int>(x.size(k)); ++c) {
      if (k >= 2)
        for (int j = 1; j <= k; ++j)
          for (int i = 0; i < j; ++i)
            if (x.d(k - 1, i, x.d(k, j, c)) != x.d(k - 1, j - 1, x.d(k, i, c))) rep.add("face_face", where(k, i, j, c));
      if (k < x.dim)
        for (int j = 0; j <= k; ++j) {
          const int sc = x.s(k, j, c);
          for (int i = 0; i <= k + 1; ++i) {
            int expect;
            if (i == j || i == j + 1) {
              expect = c;
            } else if (i < j) {
              expect = x.s(k - 1, j - 1, x.d(k, i, c));
            } else {
              expect = x.s(k - 1, j, x.d(k, i - 1, c));
            }
            if (x.d(k + 1, i, sc) != expect) rep.add("face_degen", where(k, i, j, c));
          }
        }
      if (k + 2 <= x.dim)
        for (int j = 0; j <= k; ++j)
          for (int i = 0; i <= j; ++i)
            if (x.s(k + 1, i, x.s(k, j, c)) != x.s(k + 1, j + 1, x.s(k, i, c))) rep.add("degen_degen", where(k, i, j, c));
    }
  return rep;
}

TruncSSet truncate(const TruncSSet& x, int dim) {
  if (dim < 0 || dim > x.dim) throw InvalidInput("cannot truncate to dimension " + std::to_string(dim));
  TruncSSet y;
  y.dim = dim;
  const auto n = static_cast<std::size_t>(dim) + 1;
  y.cells.assign(x.cells.begin(), x.cells.begin() + static_cast<long>(n));
  y.face.assign(x.face.begin(), x.face.begin() + static_cast<long>(n));
  y.degen.assign(x.degen.begin(), x.degen.begin() + static_cast<long>(n));
  y.degen.back().clear();
  return y;
}

TruncSSet standard_subcomplex(int n, const std::vector<std::vector<int>>& generators, int dim) {
  if (n < 0 || n > 9) throw InvalidInput("standard simplices are supported for 0 <= n <= 9");
  if (dim < 0) throw InvalidInput("negative truncation");
  auto contained = [&](const std::vector<int>& seq) {
    for (const auto& g : generators)
      if (std::all_of(seq.begin(), seq.end(), [&](int v) { return std::find(g.begin(), g.end(), v) != g.end(); }))
        return true;
    return false;
  };
  std::vector<std::vector<std::vector<int>>> seqs(static_cast<std::size_t>(dim) + 1);
  std::vector<std::map<std::vector<int>, int>> index(static_cast<std::size_t>(dim) + 1);
  for (int k = 0; k <= dim; ++k) {
    std::vector<int> seq(static_cast<std::size_t>(k) + 1, 0);
    while (true) {
      if (contained(seq)) {
        index[static_cast<std::size_t>(k)].emplace(seq, static_cast<int>(seqs[static_cast<std::size_t>(k)].size()));
        seqs[static_cast<std::size_t>(k)].push_back(seq);
      }
      // Next monotone sequence in lexicographic order.
      int p = k;
      while (p >= 0 && seq[static_cast<std::size_t>(p)] == n) --p;
      if (p < 0) break;
      const int v = seq[static_cast<std::size_t>(p)] + 1;
      for (int q = p; q <= k; ++q) seq[static_cast<std::size_t>(q)] = v;
    }
  }
  TruncSSet x;
  x.dim = dim;
  x.cells.resize(static_cast<std::size_t>(dim) + 1);
  x.face.resize(static_cast<std::size_t>(dim) + 1);
  x.degen.resize(static_cast<std::size_t>(dim) + 1);
  for (int k = 0; k <= dim; ++k) {
    const auto& level = seqs[static_cast<std::size_t>(k)];
    for (const auto& s : level) {
      std::string name;
      for (int v : s) name += static_cast<char>('0' + v);
      x.cells[static_cast<std::size_t>(k)].push_back(name);
    }
    if (k > 0)
      for (int i = 0; i <= k; ++i) {
        std::vector<int> col;
        for (const auto& s : level) {
          auto t = s;
          t.erase(t.begin() + i);
          col.push_back(index[static_cast<std::size_t>(k - 1)].at(t));
        }
        x.face[static_cast<std::size_t>(k)].push_back(col);
      }
    if (k < dim)
      for (int i = 0; i <= k; ++i) {
        std::vector<int> col;
        for (const auto& s : level) {
          auto t = s;
          t.insert(t.begin() + i, s[static_cast<std::size_t>(i)]);
          col.push_back(index[static_cast<std::size_t>(k + 1)].at(t));
        }
        x.degen[static_cast<std::size_t>(k)].push_back(col);
      }
  }
  return x;
}

namespace {
std::vector<int> all_but(int n, int skip) {
  std::vector<int> v;
  for (int i = 0; i <= n; ++i)
    if (i != skip) v.push_back(i);
  return v;
}
}  // namespace

TruncSSet standard_simplex(int n, int dim) { return standard_subcomplex(n, {all_but(n, -1)}, dim); }

TruncSSet simplex_boundary(int n, int dim) {
  std::vector<std::vector<int>> gens;
  for (int j = 0; j <= n; ++j) gens.push_back(all_but(n, j));
  return standard_subcomplex(n, gens, dim);
}

TruncSSet horn(int n, int i, int dim) {
  if (i < 0 || i > n) throw InvalidInput("horn index out of range");
  std::vector<std::vector<int>> gens;
  for (int j = 0; j <= n; ++j)
    if (j != i) gens.push_back(all_but(n, j));
  return standard_subcomplex(n, gens, dim);
}

TruncSSet spine(int n, int dim) {
  std::vector<std::vector<int>> gens;
  for (int j = 0; j < n; ++j) gens.push_back({j, j + 1});
  if (n == 0) gens.push_back({0});
  return standard_subcomplex(n, gens, dim);
}

TruncSSet points(int k, int dim) {
  if (k < 1) throw InvalidInput("points needs k >= 1");
  std::vector<std::vector<int>> gens;
  for (int j = 0; j < k; ++j) gens.push_back({j});
  return standard_subcomplex(k - 1, gens, dim);
}

TruncSSet discrete_sset(const std::vector<std::string>& names, int dim) {
  TruncSSet x;
  x.dim = dim;
  std::vector<int> id(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) id[i] = static_cast<int>(i);
  for (int k = 0; k <= dim; ++k) {
    x.cells.push_back(names);
    x.face.emplace_back(k == 0 ? 0 : static_cast<std::size_t>(k) + 1, id);
    x.degen.emplace_back(k == dim ? 0 : static_cast<std::size_t>(k) + 1, id);
  }
  return x;
}

TruncSSet product(const TruncSSet& x, const TruncSSet& y) {
  if (x.dim != y.dim) throw InvalidInput("product needs equal truncation levels");
  TruncSSet p;
  p.dim = x.dim;
  p.cells.resize(static_cast<std::size_t>(p.dim) + 1);
  p.face.resize(static_cast<std::size_t>(p.dim) + 1);
  p.degen.resize(static_cast<std::size_t>(p.dim) + 1);
  for (int k = 0; k <= p.dim; ++k) {
    const int nx = static_cast<int>(x.size(k));
    const int ny = static_cast<int>(y.size(k));
    for (int a = 0; a < nx; ++a)
      for (int b = 0; b < ny; ++b)
        p.cells[static_cast<std::size_t>(k)].push_back(x.cells[static_cast<std::size_t>(k)][static_cast<std::size_t>(a)] + "," +
                                                     y.cells[static_cast<std::size_t>(k)][static_cast<std::size_t>(b)]);
    if (k > 0) {
      const int my = static_cast<int>(y.size(k - 1));
      for (int i = 0; i <= k; ++i) {
        std::vector<int> col;
        for (int a = 0; a < nx; ++a)
          for (int b = 0; b < ny; ++b) col.push_back(x.d(k, i, a) * my + y.d(k, i, b));
        p.face[static_cast<std::size_t>(k)].push_back(col);
      }
    }
    if (k < p.dim) {
      const int my = static_cast<int>(y.size(k + 1));
      for (int i = 0; i <= k; ++i) {
        std::vector<int> col;
        for (int a = 0; a < nx; ++a)
          for (int b = 0; b < ny; ++b) col.push_back(x.s(k, i, a) * my + y.s(k, i, b));
        p.degen[static_cast<std::size_t>(k)].push_back(col);
      }
    }
  }
  return p;
}

}  // namespace hck::simplicial
