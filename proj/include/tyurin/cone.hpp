#pragma once

#include "tyurin/integer.hpp"

#include <vector>

namespace tyurin::detail {

/// Extreme rays of the pointed cone {x : <row, x> >= 0 for every row}, as
/// primitive integer vectors in lexicographic order. The rows must span the
/// whole space (otherwise the cone has a lineality space); an Error named
/// "NotPointed" is thrown if they do not.
std::vector<LatticeVector> extreme_rays(const std::vector<LatticeVector>& rows, std::size_t dim);

} // namespace tyurin::detail
