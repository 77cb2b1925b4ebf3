#pragma once

#include <vector>

#include "hck/algmod.hpp"

namespace hck::alg::detail {

QMatrix vstack_all(const std::vector<QMatrix>& blocks, std::size_t cols);
/// Σ c_k basis[k] for matrices of equal shape.
QMatrix combine(const std::vector<QMatrix>& basis, const std::vector<Rational>& c);
/// Σ_i v_i m[i].
QMatrix action_of(const std::vector<QMatrix>& m, const QMatrix& v);
/// Coordinates of each matrix in `images` with respect to the linearly
/// independent `basis`, as columns of a square matrix.
QMatrix coordinate_matrix(const std::vector<QMatrix>& basis, const std::vector<QMatrix>& images);
RankCertificate certify(const QMatrix& a, const QMatrix& b);

}  // namespace hck::alg::detail
