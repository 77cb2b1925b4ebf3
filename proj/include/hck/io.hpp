#pragma once

#include <string>

#include <json.hpp>

#include "hck/algmod.hpp"
#include "hck/bicat.hpp"
#include "hck/bordism.hpp"
#include "hck/fpcat.hpp"
#include "hck/qmatrix.hpp"
#include "hck/simplicial.hpp"
#include "hck/whitehead.hpp"

// JSON schemas for every input type. Readers throw InvalidInput naming the
// offending field; writers produce what the readers accept.
namespace hck::io {

using Json = nlohmann::json;

/// "p/q" strings; readers also accept integers.
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);
/// A list of rows.
Json to_json(const QMatrix& m);
QMatrix qmatrix_from_json(const Json& j);

// {"vertices":[...], "arrows":[{"id","src","tgt"}], "relations":[[[lhs ids],[rhs ids]], ...]}
// An empty side is the identity at the other side's endpoints.
Json to_json(const fpcat::Graph& g);
fpcat::Graph graph_from_json(const Json& j);
Json to_json(const fpcat::FinPresentation& p);
fpcat::FinPresentation presentation_from_json(const Json& j);
Json to_json(const fpcat::Graph& g, const fpcat::Path& p);  // arrow ids

// {"objects":[...], "morphisms":[{"id","src","tgt"}], "identities":[...],
//  "compose":[[f, g, g∘f], ...]} with f applied first.
Json to_json(const fpcat::FinCategory& c);
fpcat::FinCategory category_from_json(const Json& j);
// {"objects":{vertex: object}, "arrows":{arrow: morphism}}
Json to_json(const fpcat::Assignment& a);
fpcat::Assignment assignment_from_json(const Json& j);

// {"dim":N, "cells":[[names...],...], "face":[[[..],..],..], "degen":[...]}
Json to_json(const simplicial::TruncSSet& x);
simplicial::TruncSSet sset_from_json(const Json& j);
// {"n":N, "levels":[sset...], "face":[[map...]...], "degen":[[map...]...]};
// a map is a list of cell arrays, one per dimension.
Json to_json(const simplicial::SegalSpaceData& x);
simplicial::SegalSpaceData segal_space_from_json(const Json& j);

// Cells by name: {"objects", "cells1":[{"id","src","tgt"}], "cells2":[...],
//  "unit":[1-cell per object], "id2":[2-cell per 1-cell],
//  "vcomp":[[b, a, b·a]], "hcomp1":[[g, f, g∘f]], "hcomp2":[[b, a, b*a]],
//  "assoc":[[h, g, f, cell]], "lunit":[..], "runit":[..]}
Json to_json(const bicat::FinBicategory& b);
bicat::FinBicategory bicategory_from_json(const Json& j);
// {"table":[[..]..], "unit":0, "names":[..], "braided":false}: a discrete monoid.
bicat::MonoidalData monoid_from_json(const Json& j);
// {"n":2, "table":[...]}
Json to_json(const bicat::BinaryOp& op);
bicat::BinaryOp binary_op_from_json(const Json& j);

// {"dim":n, "mult":[[[q,...],...],...], "unit":[q,...]}: mult[i][j] = e_i e_j.
Json to_json(const alg::Algebra& a);
alg::Algebra algebra_from_json(const Json& j);
// {"left":algebra, "right":algebra, "dim":d, "lact":[matrix...], "ract":[matrix...]}
Json to_json(const alg::Bimodule& m);
alg::Bimodule bimodule_from_json(const Json& j);

// {"dim":d, "ev":[q...], "coev":[q...], "pairing":matrix}; or {"E":matrix, "pairing":matrix}.
Json to_json(const bordism::MatrixTFT& z);
bordism::MatrixTFT tft_from_json(const Json& j);
Json to_json(const bordism::NormalForm& nf);

// {"factors":[2,4], "free_rank":0}
Json to_json(const wh::FinAbGroup& g);
wh::FinAbGroup group_from_json(const Json& j);
Json to_json(const wh::IntMatrix& m);
wh::IntMatrix int_matrix_from_json(const Json& j);
// {"domain":group, "codomain":group, "table":[[..], ...]} indexed by domain.element_at.
Json to_json(const wh::QuadMapTable& f);
wh::QuadMapTable quad_map_from_json(const Json& j);
Json to_json(const wh::Hom& h);
// {"pi2":group, "pi3":group, "q":map} or {"pi2":{"free_rank":1}, "pi3":.., "q_one":[..]}
Json to_json(const wh::ThreeTypeData& t);
wh::ThreeTypeData three_type_from_json(const Json& j);
// {"a":group, "b":group, "assoc":[[..]...], "braid":[[..]...]}
Json to_json(const wh::BraidedTwoGroupData& b);
wh::BraidedTwoGroupData braided_from_json(const Json& j);
Json to_json(const wh::QuadraticWitness& w);

}  // namespace hck::io
