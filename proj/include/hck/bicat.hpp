#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hck/common.hpp"
#include "hck/fpcat.hpp"

// Finite bicategories stored as global tables of 1-cells and 2-cells.
namespace hck::bicat {

struct Cell1 {
  std::string name;
  int src = 0;  // objects
  int tgt = 0;
};

struct Cell2 {
  std::string name;
  int src = 0;  // parallel 1-cells
  int tgt = 0;
};

/// Composites are -1 where undefined. vcomp(b, a) = b·a applies a first;
/// hcomp1(g, f) = g∘f applies f first; hcomp2(b, a) = b*a whiskers a: f⇒f'
/// with b: g⇒g' into g∘f ⇒ g'∘f'. assoc(h, g, f) : (h∘g)∘f ⇒ h∘(g∘f),
/// lunit(f) : 1_b∘f ⇒ f, runit(f) : f∘1_a ⇒ f.
struct FinBicategory {
  std::vector<std::string> objects;
  std::vector<Cell1> cells1;
  std::vector<Cell2> cells2;
  std::vector<int> unit;     // per object: the identity 1-cell
  std::vector<int> id2;      // per 1-cell: the identity 2-cell
  std::vector<int> vcomp;    // n2 x n2
  std::vector<int> hcomp1;   // n1 x n1
  std::vector<int> hcomp2;   // n2 x n2
  std::vector<int> assoc;    // n1 x n1 x n1
  std::vector<int> lunit;    // per 1-cell
  std::vector<int> runit;    // per 1-cell

  std::size_t n1() const { return cells1.size(); }
  std::size_t n2() const { return cells2.size(); }
  int src1(int f) const { return cells1[static_cast<std::size_t>(f)].src; }
  int tgt1(int f) const { return cells1[static_cast<std::size_t>(f)].tgt; }
  int src2(int a) const { return cells2[static_cast<std::size_t>(a)].src; }
  int tgt2(int a) const { return cells2[static_cast<std::size_t>(a)].tgt; }
  int v(int b, int a) const { return vcomp[static_cast<std::size_t>(b) * n2() + static_cast<std::size_t>(a)]; }
  int h1(int g, int f) const { return hcomp1[static_cast<std::size_t>(g) * n1() + static_cast<std::size_t>(f)]; }
  int h2(int b, int a) const { return hcomp2[static_cast<std::size_t>(b) * n2() + static_cast<std::size_t>(a)]; }
  int a(int h, int g, int f) const {
    return assoc[(static_cast<std::size_t>(h) * n1() + static_cast<std::size_t>(g)) * n1() + static_cast<std::size_t>(f)];
  }
  int l(int f) const { return lunit[static_cast<std::size_t>(f)]; }
  int r(int f) const { return runit[static_cast<std::size_t>(f)]; }
  int id(int f) const { return id2[static_cast<std::size_t>(f)]; }

  int object(const std::string& name) const;
  int cell1(const std::string& name) const;
  int cell2(const std::string& name) const;
  /// 1-cells a -> b, and 2-cells f => g.
  std::vector<int> hom1(int a, int b) const;
  std::vector<int> hom2(int f, int g) const;
  /// The vertical inverse of a 2-cell, or -1.
  int inverse(int a) const;
  /// hom(a, b) as a category: objects are 1-cells, morphisms 2-cells.
  fpcat::FinCategory hom_category(int a, int b) const;
};

/// Shape and range of every table, hom categories, functoriality of hcomp
/// (identities and interchange), invertibility and naturality of the
/// coherence cells, pentagon and triangle. Empty report = valid.
ValidationReport validate_bicategory(const FinBicategory& b);

/// 1-cells reversed: hom^rev(a, b) = hom(b, a), g ∘rev f = f ∘ g.
FinBicategory reversed(const FinBicategory& b);

/// f : a -> b, g : b -> a, ev : f∘g ⇒ 1_b, coev : 1_a ⇒ g∘f.
struct DualityDatum {
  int f = 0;
  int g = 0;
  int ev = 0;
  int coev = 0;
  bool operator==(const DualityDatum&) const = default;
};

/// Both snake composites
///   l_f · (ev*1_f) · a⁻¹_{f,g,f} · (1_f*coev) · r_f⁻¹
///   r_g · (1_g*ev) · a_{g,f,g} · (coev*1_g) · l_g⁻¹
/// are identities. False when ev or coev has the wrong source or target.
/// Throws InvalidInput when indices are out of range or f, g are not opposite.
bool check_zigzag(const FinBicategory& b, const DualityDatum& d);

/// Every datum (g, ev, coev) for f passing check_zigzag, ordered by (g, ev,
/// coev). Throws BudgetExceeded when more than `budget` candidates would be tried.
std::vector<DualityDatum> find_right_duals(const FinBicategory& b, int f, std::size_t budget = 50'000'000);
std::vector<DualityDatum> find_right_duals_serial(const FinBicategory& b, int f,
                                                  std::size_t budget = 50'000'000);
/// Data exhibiting f as the right dual of some g: results have .g == f.
std::vector<DualityDatum> find_left_duals(const FinBicategory& b, int f, std::size_t budget = 50'000'000);

/// The duality data for f form a category whose morphisms are 2-cells φ :
/// g ⇒ g' with ev'·(1_f*φ) = ev and (φ*1_f)·coev = coev'. True iff it is
/// empty or has exactly one morphism between every ordered pair of objects.
bool duals_groupoid_contractible(const FinBicategory& b, int f);

// ---- monoidal categories and delooping --------------------------------------

/// A monoidal structure on a finite category. tensor_obj[x * n + y] = x⊗y,
/// tensor_mor[f * m + g] = f⊗g, assoc[(x * n + y) * n + z] : (x⊗y)⊗z → x⊗(y⊗z),
/// lunit[x] : 1⊗x → x, runit[x] : x⊗1 → x, optional braiding[x * n + y] : x⊗y → y⊗x.
struct MonoidalData {
  fpcat::FinCategory category;
  std::vector<int> tensor_obj;
  std::vector<int> tensor_mor;
  int unit = 0;
  std::vector<int> assoc;
  std::vector<int> lunit;
  std::vector<int> runit;
  std::optional<std::vector<int>> braiding;
};

/// One object, 1-cells the objects of m, 2-cells its morphisms, g∘f = g⊗f.
/// No validation.
FinBicategory deloop_unchecked(const MonoidalData& m);
/// Monoidal axioms through the delooping, plus naturality, invertibility and
/// the hexagons of a braiding if present.
ValidationReport validate_monoidal(const MonoidalData& m);
/// Throws InvalidInput carrying the first violation when validation fails.
FinBicategory deloop(const MonoidalData& m);

/// A finite group (or monoid) as a discrete monoidal category.
MonoidalData discrete_monoidal(const std::vector<std::vector<int>>& table, int unit,
                               const std::vector<std::string>& names = {}, bool braided = false);
/// Vector spaces of dimension 0 and 1 over F_p with all linear maps, ⊗ of
/// dimensions, symmetric.
MonoidalData vector_space_skeleton(int p);
/// The 2-group with objects Z/2, automorphisms Z/2 on each object and
/// associator the cocycle ω(x, y, z) = xyz (or zero when `twisted` is false).
MonoidalData two_group_z2(bool twisted);

/// Objects, morphisms as 1-cells, identity 2-cells only.
FinBicategory locally_discrete(const fpcat::FinCategory& c);
/// Finite ordinals [n] for the listed n, monotone maps as 1-cells and the
/// pointwise order as 2-cells. {0, 1} contains the adjunction
/// (const : [1] -> [0]) ⊣ (top : [0] -> [1]).
FinBicategory monotone_maps(const std::vector<int>& ordinals);
/// The walking 2-cell: objects 0, 1; hom(0, 1) has s, t and alpha : s ⇒ t.
FinBicategory cell2();

/// Names and generators of the stock bicategories exercised by the tests.
struct CorpusEntry {
  std::string name;
  FinBicategory bicategory;
};
std::vector<CorpusEntry> bicategory_corpus();

// ---- Eckmann–Hilton -----------------------------------------------------------

/// A binary operation on {0..n-1}: table[x * n + y] = x op y.
struct BinaryOp {
  int n = 0;
  std::vector<int> table;
  int operator()(int x, int y) const {
    return table[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)];
  }
};

struct EckmannHiltonReport {
  bool units_valid = false;  // e1 is a unit for op1 and e2 for op2
  bool interchange = false;  // (a op1 b) op2 (c op1 d) = (a op2 c) op1 (b op2 d)
  bool ops_equal = false;
  bool commutative = false;
  bool associative = false;
  bool units_equal = false;
  std::vector<std::string> witnesses;  // first failing instance per property
};

EckmannHiltonReport eckmann_hilton(const BinaryOp& op1, const BinaryOp& op2, int e1, int e2);

struct SweepResult {
  std::size_t ops = 0;             // unital operations enumerated
  std::size_t pairs = 0;           // ordered pairs checked
  std::size_t interchange = 0;     // pairs satisfying interchange
  std::size_t counterexamples = 0; // interchange pairs failing a conclusion
  std::vector<std::pair<std::size_t, std::size_t>> first_counterexamples;
};

/// Every unital operation on {0..n-1} with its unit.
std::vector<std::pair<BinaryOp, int>> unital_operations(int n);
/// Every ordered pair of unital operations on a set of size n.
SweepResult eckmann_hilton_sweep(int n);
SweepResult eckmann_hilton_sweep_serial(int n);

}  // namespace hck::bicat
