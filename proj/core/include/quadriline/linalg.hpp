#pragma once

#include <vector>

#include "quadriline/scalar.hpp"

namespace quadriline {

using Matrix = std::vector<std::vector<Scalar>>;
using Vector = std::vector<Scalar>;

/// Reduced row echelon form, in place. Returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m);

/// A basis of {x : m·x = 0}. `cols` fixes the width when `m` has no rows.
std::vector<Vector> nullspace(Matrix m, std::size_t cols, const Field& field);

std::size_t rank(Matrix m);

}  // namespace quadriline
