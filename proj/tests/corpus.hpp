#pragma once

#include <vector>

#include "hck/fpcat.hpp"

namespace corpus {

/// Every category structure (labelled, identities fixed) with 1..max_objects
/// objects and at most max_morphisms morphisms, found by backtracking over
/// composition tables with associativity pruning.
std::vector<hck::fpcat::FinCategory> enumerate_categories(int max_objects, int max_morphisms);

/// Hand-built categories with at most 3 objects and up to 12 morphisms:
/// groups, monoids, preorders, groupoids and products of these.
std::vector<hck::fpcat::FinCategory> structured_categories();

/// Both of the above, with the exhaustive part up to 5 morphisms.
std::vector<hck::fpcat::FinCategory> category_corpus();

}  // namespace corpus
