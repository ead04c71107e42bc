#pragma once

#include <optional>

#include "matchfield/rational.hpp"

namespace matchfield::linalg {

/// Rank over Q of the given rows.
std::size_t rank(RationalMatrix rows);
std::size_t rank(const std::vector<IntVector>& rows);

Rational determinant(RationalMatrix square);

/// Solves A x = b for square nonsingular A; nullopt when A is singular.
std::optional<RationalVector> solve(RationalMatrix a, RationalVector b);

/// Affine dimension of a finite point set (rank of differences to the first point).
std::size_t affine_dimension(const std::vector<IntVector>& points);

}  // namespace matchfield::linalg
