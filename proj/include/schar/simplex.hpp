#pragma once

#include "schar/real_table.hpp"

#include <vector>

namespace schar {

/// The simplex of a real character table: points x in R^{m-1} with
/// <column_j, (1, x)> >= 0 for every column of V.  The homogeneous facet
/// normals are exactly the columns of V (entry 0 is the affine part, equal
/// to 1 before dilation); the m vertices are affine vectors of length m-1.
struct SSimplex {
  long dim = 0;                                       // m - 1
  std::vector<std::vector<Cyclotomic>> facet_normals; // m vectors, length m
  std::vector<std::vector<Cyclotomic>> vertices;      // m vectors, length m-1
  std::vector<int> orbit_sizes;                       // copied from the table
};

/// Build the simplex from a real table.  Facet normals are the columns of V;
/// each vertex is obtained by an exact kernel solve: the homogenized vertex j
/// spans the kernel of the matrix of all columns except j and is scaled so
/// its leading coordinate is 1.  Throws std::runtime_error if V is singular
/// or a kernel vector has leading coordinate <= 0.
SSimplex simplex_from_table(const RealCharacterTable& rt);

/// Vertices by the closed formula: vertex j has coordinates
/// V[i][j] / orbit_sizes[i] for i = 1..m-1.  Cross-checked against the
/// kernel-solve vertices; a mismatch throws std::logic_error.
std::vector<std::vector<Cyclotomic>> closed_form_vertices(
    const RealCharacterTable& rt);

/// Coordinates are "integral" when they are algebraic integers, i.e. all
/// coefficients over the integral basis of the field are integers; for
/// rational coordinates this is the ordinary integer test.
struct PolaritySuite {
  bool is_lattice = false;     // all vertex coordinates integral
  bool is_reflexive = false;   // lattice, and all facets <n, x> <= 1 with
                               // integral n after dehomogenization
  bool is_self_polar = false;  // dehomogenized facet normals = vertex set
};

PolaritySuite polarity_suite(const SSimplex& s);

/// Scale the simplex by a positive integer factor: vertices are multiplied
/// by k and the affine entry of each facet normal picks up the factor.
/// Throws std::invalid_argument for k < 1.
SSimplex dilate(const SSimplex& s, long k);

/// True iff every facet value <normal, (1, x)> is >= 0 (boundary included).
/// Throws std::invalid_argument on dimension mismatch.
bool contains(const SSimplex& s, const std::vector<Cyclotomic>& x);

}  // namespace schar
