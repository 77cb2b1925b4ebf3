#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hck/common.hpp"
#include "hck/qmatrix.hpp"

// 1-dimensional bordisms as words of elementary slices: typing, planar normal
// forms, matrix-valued field theories and the homotopy-quotient comparison.
namespace hck::bordism {

enum class Sign { Plus, Minus };
using SignSeq = std::vector<Sign>;

SignSeq parse_signs(const std::string& text);  // "+,-,+" or "+-+"; "" is empty
std::string to_string(const SignSeq& s);

/// Elbow variant: LR is the pair (+, −), RL the pair (−, +).
enum class Elbow { LR, RL };

struct Slice {
  enum class Kind { Id, Cup, Cap, JUp, JDown };
  Kind kind = Kind::Id;
  std::size_t pos = 0;
  Elbow elbow = Elbow::LR;
  bool operator==(const Slice&) const = default;
};

Slice cup(std::size_t pos, Elbow e = Elbow::LR);
Slice cap(std::size_t pos, Elbow e = Elbow::LR);
Slice jup(std::size_t pos);    // − -> +
Slice jdown(std::size_t pos);  // + -> −

struct CobWord {
  SignSeq domain;
  std::vector<Slice> slices;
  bool operator==(const CobWord&) const = default;
};

/// `dom:+,- ; cap@1:LR ; cup@0:RL ; jup@2`; positions are 0-based.
CobWord parse_word(const std::string& text);
std::string to_string(const CobWord& w);

enum class Calculus { Oriented, Unoriented, Quotient };
std::string to_string(Calculus c);
Calculus parse_calculus(const std::string& name);

class IllTyped : public Error {
 public:
  IllTyped(std::string what, std::size_t position) : Error(std::move(what)), position_(position) {}
  /// Index of the first offending slice.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// The codomain. Oriented: cups must match their variant and j-slices are
/// rejected. Unoriented: signs are decoration (caps still create their
/// variant's signs), j-slices rejected. Quotient: as Oriented plus j-slices
/// that must flip the sign they name.
SignSeq typecheck(const CobWord& w, Calculus c = Calculus::Oriented);

/// Boundary points are numbered domain first, then codomain. partner[p] is the
/// point joined to p; flips[p] is the parity of j-slices along p's strand.
struct NormalForm {
  std::size_t domain_size = 0;
  std::size_t codomain_size = 0;
  std::vector<std::size_t> partner;
  std::vector<int> flips;
  std::size_t loops = 0;
  bool operator==(const NormalForm&) const = default;
  bool operator<(const NormalForm& o) const;
  std::string to_string() const;
};

NormalForm normal_form(const CobWord& w, Calculus c = Calculus::Oriented);

/// A word over the given boundary whose normal form is nf.
CobWord replay(const NormalForm& nf, const SignSeq& domain, const SignSeq& codomain, Calculus c);

struct Comparison {
  bool equal = false;
  bool boundary_mismatch = false;
};
Comparison compare_words(const CobWord& u, const CobWord& v, Calculus c);
/// Words with different boundaries are unequal.
bool words_equal(const CobWord& u, const CobWord& v, Calculus c);

/// Juxtaposition u ⊔ v (v's slices shifted past u's strands, run after u's).
CobWord juxtapose(const CobWord& u, const CobWord& v, Calculus c);
/// v after u.
CobWord compose(const CobWord& u, const CobWord& v);

/// Local rewrites: straightening a snake, cancelling an inverse pair of
/// j-slices, or swapping adjacent slices acting on disjoint strands.
std::vector<CobWord> rewrite_moves(const CobWord& w, Calculus c);

// ---- field theories ----------------------------------------------------------

/// V = Q^dim for +, its dual for −. ev : V ⊗ V∨ -> Q (1 x dim²), coev : Q ->
/// V∨ ⊗ V (dim² x 1), index i * dim + j. pairing b is symmetric nondegenerate
/// for unoriented data.
struct MatrixTFT {
  std::size_t dim = 0;
  QMatrix ev;
  QMatrix coev;
  std::optional<QMatrix> pairing;
};

/// The standard dual pair on Q^d with pairing b (identity when omitted).
MatrixTFT standard_tft(std::size_t d, std::optional<QMatrix> pairing = std::nullopt);
/// ev from an invertible d x d matrix E (ev(e_i ⊗ f_j) = E_ij), coev = E^{-1}.
MatrixTFT tft_from(const QMatrix& e, std::optional<QMatrix> pairing);
/// Twenty valid theories with dim V in {1, 2, 3}, all with pairings.
std::vector<MatrixTFT> tft_corpus();

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};
class InvalidTFTData : public Error {
 public:
  using Error::Error;
};

ValidationReport validate_tft(const MatrixTFT& z, Calculus c);

/// The linear map of the word: dim^{|codomain|} x dim^{|domain|}.
QMatrix evaluate_tft(const CobWord& w, const MatrixTFT& z, Calculus c = Calculus::Oriented);

// ---- presentations and the homotopy quotient -------------------------------------

struct Relation {
  std::string name;
  CobWord lhs;
  CobWord rhs;
};
std::vector<Relation> generating_relations(Calculus c);

/// Image of one quotient slice in the unoriented calculus.
using Assignment = std::function<std::vector<Slice>(const Slice&)>;
/// Cups and caps to themselves, j-slices to nothing.
Assignment standard_assignment();
CobWord apply_assignment(const CobWord& w, const Assignment& f);

struct QuotientCheck {
  ValidationReport report;
  std::size_t relations_checked = 0;
  std::size_t boundaries = 0;            // (domain, codomain) sign pairs compared
  std::size_t unoriented_forms = 0;      // Σ over boundaries of |NF_U|
  std::size_t quotient_forms = 0;        // Σ over boundaries of |NF_Q| reached by lifts
  std::size_t quotient_forms_enumerated = 0;  // distinct NF_Q of quotient words, all checked injective
};

/// Relations of the quotient presentation map to unoriented equalities; and
/// for every sign boundary with at most `max_boundary` points on each side,
/// the unoriented normal forms of words of length <= max_len correspond
/// bijectively to quotient normal forms under forgetting signs and flips.
QuotientCheck quotient_functor_check(std::size_t max_len = 6, std::size_t max_boundary = 4,
                                     const Assignment& f = standard_assignment());

/// Normal forms of all words of length <= max_len from `domain` whose
/// codomain has at most max_codomain points, keyed by codomain.
struct ReachableForms {
  std::vector<std::pair<SignSeq, NormalForm>> forms;  // sorted, distinct
};
ReachableForms reachable_forms(const SignSeq& domain, Calculus c, std::size_t max_len, std::size_t max_codomain);
ReachableForms reachable_forms_serial(const SignSeq& domain, Calculus c, std::size_t max_len,
                                      std::size_t max_codomain);

}  // namespace hck::bordism
