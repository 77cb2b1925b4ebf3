#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hck/common.hpp"

// Finitely generated abelian groups through integer Smith normal form,
// Whitehead's quadratic functor Γ and the certain exact sequence of a simply
// connected 3-type.
namespace hck::wh {

using Integer = mpz_class;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, const std::vector<long>& data);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const;
  IntMatrix transpose() const;
  bool is_diagonal() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> data_;
};

/// U m V = D with U, V unimodular, D diagonal (rectangular) with
/// non-negative entries d_1 | d_2 | ... ; zeros last.
struct Smith {
  IntMatrix d, u, v;
  IntMatrix v_inv;
  bool verified = false;  // U m V = D and U, V unimodular, re-checked by multiplication
};
Smith smith_normal_form(const IntMatrix& m);
/// The diagonal of D followed by zeros up to min(rows, cols).
std::vector<Integer> smith_diagonal(const Smith& s);

// ---- groups -------------------------------------------------------------------

using Element = std::vector<std::int64_t>;

/// ℤ/d_1 ⊕ ... ⊕ ℤ/d_r ⊕ ℤ^f with 2 <= d_1 | d_2 | ... (invariant factors).
struct FinAbGroup {
  std::vector<std::int64_t> factors;
  std::size_t free_rank = 0;

  bool operator==(const FinAbGroup&) const = default;
  bool is_finite() const { return free_rank == 0; }
  std::size_t rank() const { return factors.size() + free_rank; }  // coordinates per element
  /// |A|; throws InvalidInput for infinite groups.
  std::uint64_t order() const;
  std::string to_string() const;  // "0", "Z/4", "Z/2 + Z/4 + Z"

  Element zero() const { return Element(rank(), 0); }
  Element normalize(Element x) const;
  Element add(const Element& x, const Element& y) const;
  Element neg(const Element& x) const;
  Element scale(std::int64_t n, const Element& x) const;
  bool contains(const Element& x) const;  // coordinates in canonical range
  /// Lexicographic enumeration of a finite group (first coordinate most significant).
  Element element_at(std::uint64_t index) const;
  std::uint64_t index_of(const Element& x) const;
};

/// Canonical form of ⊕ ℤ/n_i ⊕ ℤ^f for arbitrary orders (n_i = 0 means ℤ, 1 is dropped).
FinAbGroup canonical_group(const std::vector<Integer>& orders, std::size_t free_rank = 0);
FinAbGroup cyclic(std::int64_t n);
FinAbGroup integers();
FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b);
FinAbGroup tensor(const FinAbGroup& a, const FinAbGroup& b);
/// Comma-separated cyclic orders, "Z" for a free summand ("2,4", "3,Z");
/// "", "0" and "trivial" are the trivial group. The result is canonical.
FinAbGroup parse_group(const std::string& text);
/// Every abelian group of order <= n, by invariant factors.
std::vector<FinAbGroup> groups_up_to(std::uint64_t n);

/// Quotient ℤ^n / (row span of relations) in canonical form, with coordinates.
struct Cokernel {
  FinAbGroup group;
  IntMatrix coords;   // n x rank: row j = canonical coordinates of e_j (unreduced)
  IntMatrix section;  // rank x n: row i = a preimage in ℤ^n of canonical generator i
  Smith smith;

  Element image_of(const std::vector<Integer>& x) const;
};
Cokernel cokernel(const std::vector<std::vector<Integer>>& relations, std::size_t n);

/// A homomorphism given by the images of the canonical generators of src.
struct Hom {
  FinAbGroup src, tgt;
  std::vector<Element> images;

  Element operator()(const Element& x) const;
  bool well_defined() const;  // d_i · images[i] = 0 for every finite factor d_i
};

FinAbGroup kernel(const Hom& h);
FinAbGroup cokernel(const Hom& h);
/// All homomorphisms between finite groups (enumerated).
std::vector<Hom> all_homs(const FinAbGroup& a, const FinAbGroup& b);

// ---- Γ --------------------------------------------------------------------------

struct GammaPresentation {
  FinAbGroup gamma;
  std::vector<Element> universal;  // indexed by element_at order of A: γ(a)
  std::size_t generators = 0;
  std::size_t relations = 0;
  bool smith_verified = false;
  IntMatrix section;  // canonical generator i as a combination of the γ(a)
};

/// Γ(A) from its defining presentation; A finite with |A| <= bound.
GammaPresentation gamma_presentation(const FinAbGroup& a, std::uint64_t bound = 16);
GammaPresentation gamma_presentation_serial(const FinAbGroup& a, std::uint64_t bound = 16);
/// Relation rows of the presentation, in a fixed order (parallel assembly).
std::vector<std::vector<Integer>> gamma_relations(const FinAbGroup& a);
std::vector<std::vector<Integer>> gamma_relations_serial(const FinAbGroup& a);

/// Closed form: Γ(ℤ/n) = ℤ/n (n odd), ℤ/2n (n even), Γ(ℤ) = ℤ and
/// Γ(A ⊕ B) = Γ(A) ⊕ Γ(B) ⊕ (A ⊗ B).
FinAbGroup gamma_structure(const FinAbGroup& a);

// ---- quadratic maps ------------------------------------------------------------

struct QuadMapTable {
  FinAbGroup domain, codomain;
  std::vector<Element> table;  // indexed by domain.element_at order
  const Element& operator()(const Element& a) const { return table[domain.index_of(a)]; }
};

struct QuadraticWitness {
  std::string law;  // "shape", "even" or "cube"
  std::vector<Element> args;
  std::string detail;
};
struct QuadraticVerdict {
  bool quadratic = false;
  std::optional<QuadraticWitness> witness;
};
QuadraticVerdict is_quadratic(const QuadMapTable& f);

class NotQuadratic : public Error {
 public:
  NotQuadratic(std::string what, QuadraticWitness w) : Error(std::move(what)), witness_(std::move(w)) {}
  const QuadraticWitness& witness() const { return witness_; }

 private:
  QuadraticWitness witness_;
};

struct InducedHom {
  Hom hom;                       // Γ(domain) -> codomain
  GammaPresentation gamma;
  bool reproduces = false;       // hom(γ(a)) = f(a) for every a
  bool unique = false;           // the γ(a) generate Γ(domain)
  std::string certificate;
};
InducedHom induced_hom(const QuadMapTable& f);

/// The universal quadratic map a ↦ γ(a) as a table.
QuadMapTable universal_map(const FinAbGroup& a);

// ---- 3-types --------------------------------------------------------------------

/// π₂, π₃ and q. For π₂ = ℤ the map is q(n) = n² · q_one and `q` is unused.
struct ThreeTypeData {
  FinAbGroup pi2, pi3;
  QuadMapTable q;
  std::optional<Element> q_one;
};
ThreeTypeData sphere_type();         // π₂ = π₃ = ℤ, q(n) = n²
ThreeTypeData projective_plane_type();  // π₂ = ℤ, π₃ = 0

/// The map Γ(π₂) -> π₃ induced by q.
Hom gamma_to_pi3(const ThreeTypeData& t);

struct ExactSequence {
  FinAbGroup gamma, h3, h4;
  Hom map;
};
ExactSequence certain_exact_sequence(const ThreeTypeData& t);

/// True iff q(s) = 0.
bool lift_obstruction(const ThreeTypeData& t, const Element& s);

struct BraidedTwoGroupData {
  FinAbGroup a, b;
  std::vector<Element> assoc;  // index (x * |A| + y) * |A| + z
  std::vector<Element> braid;  // index x * |A| + y
};
struct BraidingQ {
  QuadMapTable q;
  QuadraticVerdict verdict;
};
/// q(x) = braid(x, x), with its quadraticity verdict.
BraidingQ q_from_braiding(const BraidedTwoGroupData& b);

}  // namespace hck::wh
