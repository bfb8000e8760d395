#pragma once

#include "schar/simplex.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace schar {

/// A bounded system of inequalities <normal, (1, x)> >= rhs over the real
/// cyclotomic field, together with per-coordinate integer bounds derived
/// from the vertex coordinates of the originating simplex.
struct ConstraintSystem {
  std::vector<std::vector<Cyclotomic>> normals;  // homogeneous, length dim+1
  std::vector<Cyclotomic> rhs;                   // one per normal
  std::vector<std::pair<Rational, Rational>> bounds_hint;  // [lo, hi] per
                                                           // coordinate

  long dim() const {
    return normals.empty() ? 0 : static_cast<long>(normals.front().size()) - 1;
  }
};

/// Build the constraint system of a simplex: one inequality per facet with
/// right-hand side 0, and coordinate bounds from floor/ceil of the vertex
/// coordinate minima/maxima.
ConstraintSystem constraint_system(const SSimplex& s);

/// Raise the right-hand side of the named constraints from 0 to 1.  Only
/// valid for constraints whose normal vector is rational (the inequality
/// can then be sharpened between integer points); an irrational column
/// throws std::invalid_argument and the caller must post-filter instead.
ConstraintSystem strengthen(const ConstraintSystem& cs,
                            const std::vector<long>& columns);

/// Thrown by enumerate_points when the point limit is exceeded.
struct LimitExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EnumerateOptions {
  int threads = 1;             // worker count; output is order-independent
  std::optional<long> limit;   // abort (LimitExceeded) past this many points
};

/// All integer points satisfying the system, sorted lexicographically.
/// Project-and-lift recursion: coordinates are fixed one at a time (tightest
/// hinted range first) and the exact feasible interval of the next coordinate
/// over each fibre is found by exact linear programming over the field.
/// Requires the system to be a simplex description (dim+1 independent
/// normals); throws std::runtime_error otherwise.
std::vector<std::vector<Integer>> enumerate_points(
    const ConstraintSystem& cs, const EnumerateOptions& options = {});

/// Independent oracle: scan the integer box spanned by bounds_hint and keep
/// the points satisfying every constraint, with exact sign tests.  Same
/// ordering contract as enumerate_points.  Refuses (std::invalid_argument)
/// dimensions above the cap.
std::vector<std::vector<Integer>> brute_force(const ConstraintSystem& cs,
                                              long dimension_cap = 8);

}  // namespace schar
