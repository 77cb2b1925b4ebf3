#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hck/common.hpp"
#include "hck/qmatrix.hpp"

// Finite-dimensional algebras over Q, bimodules and bimodule maps: the
// Morita bicategory at desk scale.
namespace hck::alg {

/// e_i · e_j = Σ_k mult[(i * dim + j) * dim + k] e_k.
struct Algebra {
  std::size_t dim = 0;
  std::vector<Rational> mult;
  std::vector<Rational> unit;

  const Rational& m(std::size_t i, std::size_t j, std::size_t k) const { return mult[(i * dim + j) * dim + k]; }
  /// x ↦ e_i x and x ↦ x e_j.
  QMatrix left_mult(std::size_t i) const;
  QMatrix right_mult(std::size_t j) const;
  /// Product of two coordinate columns.
  QMatrix product(const QMatrix& x, const QMatrix& y) const;
  QMatrix unit_vector() const { return QMatrix::column(unit); }
  bool operator==(const Algebra&) const = default;
};

ValidationReport validate_algebra(const Algebra& a);

Algebra opposite(const Algebra& a);
/// Basis e_i ⊗ f_j at index i * dim(b) + j.
Algebra tensor(const Algebra& a, const Algebra& b);
/// Blocks a then b.
Algebra direct_product(const Algebra& a, const Algebra& b);

Algebra rationals();
/// Q^n with orthogonal idempotents.
Algebra diagonal_algebra(std::size_t n);
/// Matrix units e_{ij} at index i * n + j.
Algebra matrix_algebra(std::size_t n);
/// Q[Z/n] with basis g^0, ..., g^{n-1}.
Algebra cyclic_group_algebra(std::size_t n);
/// Q[x]/(x^k) with basis 1, x, ..., x^{k-1}.
Algebra truncated_polynomial(std::size_t k);
/// Q[x]/(x^2 - c) with basis 1, x.
Algebra quadratic_algebra(const Rational& c);
/// Upper triangular 2x2 matrices, basis e11, e12, e22.
Algebra upper_triangular();

/// lact[i] is the left action of e_i in `left`, ract[j] the right action of
/// e_j in `right`.
struct Bimodule {
  Algebra left;
  Algebra right;
  std::size_t dim = 0;
  std::vector<QMatrix> lact;
  std::vector<QMatrix> ract;
};

ValidationReport validate_bimodule(const Bimodule& m);

/// A as an A-A bimodule.
Bimodule identity_bimodule(const Algebra& a);
/// Q^d over (Q, Q).
Bimodule vector_space(std::size_t d);
Bimodule zero_bimodule(const Algebra& a, const Algebra& b);
/// A with right action twisted by an algebra automorphism: x · a = x σ(a).
Bimodule twisted_identity(const Algebra& a, const QMatrix& sigma);
/// The A-B bimodule with actions l and r (coordinates given in bases of A, B):
/// A acts through the algebra map e_i ↦ l[i] and B through e_j ↦ r[j].
Bimodule from_actions(const Algebra& a, const Algebra& b, std::vector<QMatrix> l, std::vector<QMatrix> r);
/// M ⊠ N over (A ⊗ C, B ⊗ D) on the space M ⊗ N.
Bimodule external_tensor(const Bimodule& m, const Bimodule& n);

/// matrix : src -> tgt in the given bases.
struct BimoduleMap {
  QMatrix matrix;
};

bool is_bimodule_map(const Bimodule& src, const Bimodule& tgt, const QMatrix& f);
/// A basis of the bimodule maps src -> tgt.
std::vector<QMatrix> intertwiners(const Bimodule& src, const Bimodule& tgt);

/// M ⊗_B N. projection: M ⊗ N -> result, section: result -> M ⊗ N spanned by
/// the non-pivot coordinates of the relation space.
struct TensorProduct {
  Bimodule result;
  QMatrix projection;
  QMatrix section;
};
TensorProduct tensor_over(const Bimodule& m, const Bimodule& n);

/// f : R-S, g : S-R, ev : g ⊗_R f -> S, coev : R -> f ⊗_S g, making g a right
/// dual of f.
struct DualityDatum {
  Bimodule f;
  Bimodule g;
  QMatrix ev;
  QMatrix coev;
};

/// f -> f ⊗_S g ⊗_R f -> f and g -> g ⊗_R f ⊗_S g -> g as matrices.
struct Snakes {
  QMatrix on_f;
  QMatrix on_g;
};
/// Throws InvalidInput when the algebras or shapes of the datum do not match.
Snakes snakes(const DualityDatum& d);
/// Typing, bimodule-map conditions on ev and coev, and both snakes identities.
bool check_zigzag(const DualityDatum& d);

/// Rank data of an inconsistent linear system A x = b.
struct RankCertificate {
  std::size_t equations = 0;
  std::size_t unknowns = 0;
  std::size_t rank = 0;            // rank A
  std::size_t augmented_rank = 0;  // rank [A | b]
  std::string to_string() const;
};

struct DualResult {
  std::optional<DualityDatum> datum;
  RankCertificate certificate;  // set when datum is empty
};

/// Right dual of M : A-B. Candidate Hom_B(M, B) with canonical ev; coev solved
/// for. datum->f is M.
DualResult right_dual_candidate(const Bimodule& m);
/// Left dual of M : A-B. Candidate Hom_A(M, A) with canonical ev; coev solved
/// for. datum->g is M.
DualResult left_dual_candidate(const Bimodule& m);

struct Separability {
  bool separable = false;
  std::optional<QMatrix> idempotent;  // e in A ⊗ A with a e = e a and μ(e) = 1
  RankCertificate certificate;
};
Separability is_separable(const Algebra& a);

class EvNotRightDualizable : public Error {
 public:
  EvNotRightDualizable(std::string what, RankCertificate cert) : Error(std::move(what)), cert_(cert) {}
  const RankCertificate& certificate() const { return cert_; }

 private:
  RankCertificate cert_;
};

class InconclusiveWithinBudget : public Error {
 public:
  using Error::Error;
};

class PreconditionUnmet : public Error {
 public:
  using Error::Error;
};

/// The bimodule ev : A ⊗ A^op -> Q, i.e. A with (a ⊗ b) · x = a x b.
Bimodule evaluation_bimodule(const Algebra& a);
/// (1 ⊗ ev) ∘ (τ ⊗ 1) ∘ (1 ⊗ ev^R) as an A-A bimodule.
Bimodule serre_automorphism(const Algebra& a);

struct IsoResult {
  std::optional<QMatrix> iso;
  std::string certificate;  // why none exists
};
/// Sweeps integer combinations of an intertwiner basis with coefficients in
/// [-bound, bound] by increasing max-norm. Throws InconclusiveWithinBudget
/// when the sweep cannot certify an answer.
IsoResult bimodule_iso_exists(const Bimodule& m, const Bimodule& n, int bound = 3, std::size_t budget = 200'000);

/// S ⊗_A S ≅ A.
bool radford_check(const Algebra& a, int bound = 3);

struct AmbiReport {
  bool ambidextrous = false;
  std::string detail;
  std::optional<DualityDatum> datum;  // (f^R, f, coev^L, ev^L)
};
/// Throws PreconditionUnmet when m has no right dual.
AmbiReport ambidexterity_check(const Bimodule& m, int bound = 3);

struct NamedAlgebra {
  std::string name;
  Algebra algebra;
};
struct NamedBimodule {
  std::string name;
  Bimodule bimodule;
};
std::vector<NamedAlgebra> algebra_corpus();
/// Bimodules between separable corpus algebras.
std::vector<NamedBimodule> bimodule_corpus();

}  // namespace hck::alg
