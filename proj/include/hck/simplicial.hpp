#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hck/common.hpp"
#include "hck/fpcat.hpp"

// Truncated simplicial sets, nerves, Segal maps, the fundamental category and
// homotopy categories of finite Segal-category data.
namespace hck::simplicial {

/// Simplicial set known up to dimension `dim`. face[k][i][x] = d_i(x) for
/// x in cells[k], 1 <= k <= dim; degen[k][i][x] = s_i(x) for k < dim.
/// face[0] is empty and degen[dim] is empty.
struct TruncSSet {
  int dim = 0;
  std::vector<std::vector<std::string>> cells;
  std::vector<std::vector<std::vector<int>>> face;
  std::vector<std::vector<std::vector<int>>> degen;

  std::size_t size(int k) const { return cells[static_cast<std::size_t>(k)].size(); }
  int d(int k, int i, int x) const {
    return face[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)][static_cast<std::size_t>(x)];
  }
  int s(int k, int i, int x) const {
    return degen[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)][static_cast<std::size_t>(x)];
  }
  /// Sizes (|X_0|, ..., |X_dim|).
  std::vector<std::size_t> sizes() const;
  /// True iff x in X_k is in the image of some degeneracy.
  bool is_degenerate(int k, int x) const;
  /// The restriction of x in X_k to the vertices listed (strictly increasing).
  int restrict_to(int k, int x, const std::vector<int>& vertices) const;
};

/// Every simplicial identity that stays inside the truncation, plus shape and
/// range checks. Each violation names the level, indices and cell.
ValidationReport validate_sset(const TruncSSet& x);

/// Keeps levels 0..dim of x.
TruncSSet truncate(const TruncSSet& x, int dim);

/// The simplicial subset of the standard simplex on n+1 vertices generated by
/// the given vertex sets, truncated at `dim`. Cells are monotone vertex
/// sequences, named by their digits (n <= 9).
TruncSSet standard_subcomplex(int n, const std::vector<std::vector<int>>& generators, int dim);
TruncSSet standard_simplex(int n, int dim);
TruncSSet simplex_boundary(int n, int dim);
/// The horn missing face i (the face opposite vertex i) and the interior.
TruncSSet horn(int n, int i, int dim);
/// The chain of edges {0,1}, {1,2}, ..., {n-1,n}.
TruncSSet spine(int n, int dim);
/// k isolated points.
TruncSSet points(int k, int dim);
/// A constant simplicial set: every level is `names`, all maps identities.
TruncSSet discrete_sset(const std::vector<std::string>& names, int dim);
/// Levelwise product; cell (a, b) is named "a,b" and indexed a * |Y_k| + b.
TruncSSet product(const TruncSSet& x, const TruncSSet& y);

/// Composable k-tuples (f_1, ..., f_k) with f_1 applied first, named by their
/// morphism names joined with "|"; 0-cells are the objects.
TruncSSet nerve(const fpcat::FinCategory& c, int n);

struct SegalLevel {
  int k = 0;
  std::size_t simplices = 0;
  std::size_t fiber_product = 0;
  bool injective = false;
  bool bijective = false;
};

struct SegalReport {
  bool segal = true;
  std::vector<SegalLevel> levels;  // k = 1..dim
};

/// The Segal map X_k -> X_1 x_{X_0} ... x_{X_0} X_1 at every level.
SegalReport is_segal(const TruncSSet& x);

/// Vertices, nondegenerate edges, and d2(s).d0(s) = d1(s) for each
/// nondegenerate 2-simplex s; degenerate edges become identity paths.
fpcat::FinPresentation fundamental_category(const TruncSSet& x);

struct Horn {
  int n = 0;
  int missing = 0;               // the inner index i
  std::vector<int> faces;        // the given (n-1)-cells, in increasing face order
  std::size_t fillers = 0;
};

struct HornReport {
  std::vector<Horn> horns;
  bool all_fillable() const;
  bool all_unique() const;
};

/// Every inner horn of dimension n in {2, 3} with its number of fillers.
HornReport inner_horn_fillers(const TruncSSet& x, int n);
HornReport inner_horn_fillers_serial(const TruncSSet& x, int n);

struct Components {
  std::vector<int> of;  // component index of each vertex, numbered by first vertex
  std::size_t count = 0;
};
Components pi0(const TruncSSet& x);

// ---- Segal spaces -----------------------------------------------------------

/// A simplicial map between truncated simplicial sets: cell[m][x].
struct SSetMap {
  std::vector<std::vector<int>> cell;
  int operator()(int m, int x) const {
    return cell[static_cast<std::size_t>(m)][static_cast<std::size_t>(x)];
  }
};

/// Bisimplicial data: level[k] is the space of k-simplices for k = 0..n;
/// face[k][i] : level[k] -> level[k-1] and degen[k][i] : level[k] -> level[k+1].
struct SegalSpaceData {
  int n = 0;
  std::vector<TruncSSet> level;
  std::vector<std::vector<SSetMap>> face;
  std::vector<std::vector<SSetMap>> degen;
};

ValidationReport validate_segal_space(const SegalSpaceData& x);

class SegalMapNotComponentSurjective : public Error {
 public:
  using Error::Error;
};

class CompositionIllDefined : public Error {
 public:
  CompositionIllDefined(std::string what, std::vector<int> lifts)
      : Error(std::move(what)), lifts_(std::move(lifts)) {}
  /// Two level-2 vertices over the same pair of components whose composites differ.
  const std::vector<int>& lifts() const { return lifts_; }

 private:
  std::vector<int> lifts_;
};

/// Objects X_0, homs the components of the fibres of X_1, composition lifted
/// through X_2. Every lift is compared, so the result never depends on choice.
fpcat::FinCategory homotopy_category(const SegalSpaceData& x);

/// Levels 0..2 of x, each made into a discrete space of dimension m.
SegalSpaceData levelwise_discrete(const TruncSSet& x, int m);
/// The nerve of c with every space discrete of dimension m.
SegalSpaceData discrete_segal_space(const fpcat::FinCategory& c, int m);

/// A category enriched in truncated simplicial sets. compose(a, b, c, m, g, f)
/// is the m-cell g∘f of hom(a, c) for f in hom(a, b) and g in hom(b, c);
/// identity[a] is a vertex of hom(a, a). Missing homs are empty.
struct EnrichedCategory {
  std::vector<std::string> objects;
  std::vector<std::vector<std::optional<TruncSSet>>> hom;
  std::vector<int> identity;
  std::function<int(int, int, int, int, int, int)> compose;
};

/// Levels 0..2 of the nerve of an enriched category.
SegalSpaceData enriched_nerve(const EnrichedCategory& c);

}  // namespace hck::simplicial
