#pragma once

#include "exem/types.hpp"

namespace exem {

/// Plain Euclidean distance between two vectors of equal length.
double euclidean_dist(const Vector& u, const Vector& v);

/// Euclidean distance after multiplying each coordinate difference by
/// inv_scale[i]. All inv_scale entries must be strictly positive.
double weighted_euclidean_dist(const Vector& u, const Vector& v, const Vector& inv_scale);

/// Per-column mean of a non-empty matrix.
Vector column_mean(const Matrix& m);

/// Per-column standard deviation with divisor (rows - ddof). Requires rows > ddof.
Vector column_std(const Matrix& m, Index ddof);

}  // namespace exem
