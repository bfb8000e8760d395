#pragma once

#include "schar/cyclotomic.hpp"

#include <vector>

namespace schar::detail {

/// Exact Gauss-Jordan inverse over the cyclotomic field, preferring pivots
/// in small subfields.  Throws std::runtime_error on a singular matrix.
std::vector<std::vector<Cyclotomic>> invert_matrix(
    std::vector<std::vector<Cyclotomic>> a);

}  // namespace schar::detail
