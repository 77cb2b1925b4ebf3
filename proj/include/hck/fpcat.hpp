#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hck/common.hpp"

// Finitely presented categories: graphs, paths, presentations by parallel-path
// relations, bounded congruence closure, and finite categories as tables.
namespace hck::fpcat {

struct Arrow {
  std::string id;
  std::string src;
  std::string tgt;
};

class Graph {
 public:
  Graph() = default;
  /// Throws InvalidInput on duplicate identifiers or dangling endpoints.
  Graph(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_arrows() const { return arrows_.size(); }

  int vertex(const std::string& name) const;
  int arrow(const std::string& name) const;
  int src(int arrow) const { return src_[static_cast<std::size_t>(arrow)]; }
  int tgt(int arrow) const { return tgt_[static_cast<std::size_t>(arrow)]; }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<int> src_, tgt_;
  std::map<std::string, int> vertex_index_, arrow_index_;
};

/// A morphism of the free category: arrows listed in the order they are
/// traversed (first arrow applied first). An empty list is an identity.
struct Path {
  int start = 0;
  std::vector<int> arrows;

  std::size_t length() const { return arrows.size(); }
  bool operator==(const Path&) const = default;
};

Path make_path(const Graph& g, const std::string& start, const std::vector<std::string>& arrows);
/// Builds a path from arrow names alone; start is the source of the first arrow.
Path make_path(const Graph& g, const std::vector<std::string>& arrows);
int path_end(const Graph& g, const Path& p);
bool is_composable(const Graph& g, const Path& p);
std::string path_to_string(const Graph& g, const Path& p);
Path concat(const Path& a, const Path& b);

struct Relation {
  Path lhs;
  Path rhs;
};

class FinPresentation {
 public:
  FinPresentation() = default;
  /// Throws InvalidInput when a relation is not a pair of parallel paths.
  FinPresentation(Graph graph, std::vector<Relation> relations);

  const Graph& graph() const { return graph_; }
  const std::vector<Relation>& relations() const { return relations_; }

 private:
  Graph graph_;
  std::vector<Relation> relations_;
};

struct Morphism {
  std::string name;
  int src = 0;
  int tgt = 0;
};

/// A finite category stored as tables. compose(g, f) is g∘f (f first) and is
/// -1 exactly when tgt(f) != src(g). The category laws are not enforced on
/// construction; see validate_category.
class FinCategory {
 public:
  FinCategory() = default;
  FinCategory(std::vector<std::string> objects, std::vector<Morphism> morphisms,
              std::vector<int> identity, std::vector<int> compose_table);

  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<Morphism>& morphisms() const { return morphisms_; }
  std::size_t num_objects() const { return objects_.size(); }
  std::size_t num_morphisms() const { return morphisms_.size(); }

  int identity(int object) const { return identity_[static_cast<std::size_t>(object)]; }
  int src(int m) const { return morphisms_[static_cast<std::size_t>(m)].src; }
  int tgt(int m) const { return morphisms_[static_cast<std::size_t>(m)].tgt; }
  int compose(int g, int f) const { return table_[static_cast<std::size_t>(g) * morphisms_.size() + static_cast<std::size_t>(f)]; }
  void set_compose(int g, int f, int gf) { table_[static_cast<std::size_t>(g) * morphisms_.size() + static_cast<std::size_t>(f)] = gf; }
  bool is_identity(int m) const { return identity(src(m)) == m; }

  int object(const std::string& name) const;
  int morphism(const std::string& name) const;
  std::vector<int> hom(int a, int b) const;

 private:
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<int> identity_;
  std::vector<int> table_;
};

// ---- operations ------------------------------------------------------------

/// All composable arrow sequences from `from` to `to` of length <= max_len,
/// ordered by length and then lexicographically by arrow identifier.
std::vector<Path> enumerate_paths(const Graph& g, const std::string& from, const std::string& to,
                                  std::size_t max_len);

enum class Decision { Equal, Distinct, Unknown };
std::string to_string(Decision d);

/// One application of a relation: the occurrence of one side starting at
/// `position` is replaced by the other side, producing `result`.
struct RewriteStep {
  std::size_t relation = 0;
  bool forward = true;  // lhs -> rhs
  std::size_t position = 0;
  Path result;
};

struct WordProblemResult {
  Decision decision = Decision::Unknown;
  std::vector<RewriteStep> witness;  // u -> ... -> v when Equal
  std::size_t explored = 0;          // paths visited
};

/// Bounded congruence closure. Equal comes with a replayable witness; Distinct
/// is reported only when the class of u (or of v) is closed inside the window.
WordProblemResult word_problem(const FinPresentation& p, const Path& u, const Path& v,
                               std::size_t budget);
WordProblemResult word_problem_serial(const FinPresentation& p, const Path& u, const Path& v,
                                      std::size_t budget);

/// Replays a rewrite witness from u; true iff every step is a legal relation
/// application and the final path equals v.
bool replay_witness(const FinPresentation& p, const Path& u, const Path& v,
                    const std::vector<RewriteStep>& steps);

class NotSaturated : public Error {
 public:
  using Error::Error;
};

struct Quotient {
  FinCategory category;
  std::vector<Path> representatives;  // per morphism
  /// Morphism index of a path of length <= max_len, or -1.
  int class_of(const Graph& g, const Path& p) const;
  std::map<std::string, int> index;  // path key -> morphism
};

/// Congruence quotient on the window of paths of length <= max_len.
/// Throws NotSaturated when some composite of representatives leaves the window.
Quotient quotient_category(const FinPresentation& p, std::size_t max_len,
                           std::size_t max_window = 2'000'000);

struct Assignment {
  std::map<std::string, std::string> objects;  // vertex -> object name
  std::map<std::string, std::string> arrows;   // arrow  -> morphism name
};

/// Whether the assignment extends to a functor out of the presented category.
/// Throws InvalidInput on a partial or ill-typed assignment.
bool check_functor(const FinPresentation& p, const FinCategory& target, const Assignment& a);

ValidationReport validate_category(const FinCategory& c);
bool is_gaunt(const FinCategory& c);

/// The free-walking k-cell for k in {0, 1}; higher cells live in bicat.
FinPresentation cell(int k);

/// Every morphism is a generator, every composite a relation.
FinPresentation tautological_presentation(const FinCategory& c);
Assignment identity_assignment(const FinCategory& c);

struct CategoryIso {
  std::vector<int> objects;
  std::vector<int> morphisms;
};
/// Brute-force isomorphism search; intended for small categories.
std::optional<CategoryIso> find_isomorphism(const FinCategory& c, const FinCategory& d);
/// Checks that the given maps form an isomorphism of categories.
bool is_isomorphism(const FinCategory& c, const FinCategory& d, const CategoryIso& iso);

// ---- stock categories and presentations -----------------------------------

FinCategory point_category();
/// The poset {0 < 1 < ... < n}.
FinCategory ordinal(int n);
/// Preorder on {0..n-1} from a reflexive-transitive relation leq[i][j].
FinCategory poset_category(const std::vector<std::vector<bool>>& leq);
FinCategory walking_arrow();
/// One-object category of Z/n under addition.
FinCategory cyclic_group(int n);
/// One-object category of a finite monoid; compose(g, f) = table[g][f].
FinCategory monoid_category(const std::vector<std::vector<int>>& table, int unit,
                            const std::vector<std::string>& names = {});
/// Walking isomorphism J: objects j, jbar; f : j -> jbar, g : jbar -> j inverse.
FinCategory walking_isomorphism();
/// Free category on the boundary of the 2-simplex: f02 and f12.f01 distinct.
FinCategory boundary_delta2_category();

/// Product category; objects "(a,b)", morphisms "(f,g)".
FinCategory product(const FinCategory& c, const FinCategory& d);

FinPresentation walking_isomorphism_presentation();
FinPresentation delta2_presentation();
/// One vertex x and one loop a, with optional relation a^order = id.
FinPresentation loop_presentation(std::optional<int> order);

/// Builds a category from names. Each composite entry is {f, g, g∘f}, listed
/// in diagrammatic order (f applied first). Throws InvalidInput on unknown names.
FinCategory category_from_names(const std::vector<std::string>& objects,
                                const std::vector<Morphism>& morphisms,
                                const std::vector<std::string>& identities,
                                const std::vector<std::array<std::string, 3>>& composites);

}  // namespace hck::fpcat
