#pragma once

#include <vector>

#include "hck/whitehead.hpp"

namespace hck::wh::detail {

/// Row-echelon basis (positive pivots, increasing pivot columns) of the
/// lattice spanned by rows of length n.
std::vector<std::vector<Integer>> echelon_rows(std::vector<std::vector<Integer>> rows, std::size_t n);

}  // namespace hck::wh::detail
