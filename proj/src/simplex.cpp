#include "schar/simplex.hpp"

#include "detail_linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace schar {

namespace detail {

std::vector<std::vector<Cyclotomic>> invert_matrix(
    std::vector<std::vector<Cyclotomic>> a) {
  const long n = static_cast<long>(a.size());
  std::vector<std::vector<Cyclotomic>> inv(n, std::vector<Cyclotomic>(n));
  for (long i = 0; i < n; ++i) {
    inv[i][i] = Cyclotomic(1);
  }
  for (long col = 0; col < n; ++col) {
    // Prefer pivots in small subfields: they keep the eliminations (and the
    // pivot inversion) cheap when the matrix mixes several conductors.
    long pivot = -1;
    for (long r = col; r < n; ++r) {
      if (a[r][col].is_zero()) {
        continue;
      }
      if (pivot < 0 ||
          a[r][col].conductor() < a[pivot][col].conductor() ||
          (a[r][col].conductor() == a[pivot][col].conductor() &&
           a[r][col].terms().size() < a[pivot][col].terms().size())) {
        pivot = r;
      }
    }
    if (pivot < 0) {
      throw std::runtime_error("matrix is singular");
    }
    std::swap(a[col], a[pivot]);
    std::swap(inv[col], inv[pivot]);
    const Cyclotomic scale = a[col][col].inverse();
    for (long c = 0; c < n; ++c) {
      a[col][c] *= scale;
      inv[col][c] *= scale;
    }
    for (long r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) {
        continue;
      }
      const Cyclotomic factor = a[r][col];
      for (long c = 0; c < n; ++c) {
        a[r][c] -= factor * a[col][c];
        inv[r][c] -= factor * inv[col][c];
      }
    }
  }
  return inv;
}

}  // namespace detail

namespace {

// Integrality in the ring of integers: the basis used by Cyclotomic is an
// integral basis, so a value is an algebraic integer iff every stored
// coefficient is an integer.  (For rational values this is the usual test.)
bool is_integral(const Cyclotomic& v) {
  for (const auto& [exponent, coeff] : v.terms()) {
    (void)exponent;
    if (!is_integer(coeff)) {
      return false;
    }
  }
  return true;
}

std::vector<Cyclotomic> dehomogenize(const std::vector<Cyclotomic>& normal) {
  const Cyclotomic scale = normal[0].inverse();
  std::vector<Cyclotomic> out;
  out.reserve(normal.size() - 1);
  for (std::size_t i = 1; i < normal.size(); ++i) {
    out.push_back(normal[i] * scale);
  }
  return out;
}

}  // namespace

SSimplex simplex_from_table(const RealCharacterTable& rt) {
  const long m = rt.m();
  SSimplex s;
  s.dim = m - 1;
  s.orbit_sizes = rt.orbit_sizes;
  s.facet_normals.reserve(m);
  for (long j = 0; j < m; ++j) {
    std::vector<Cyclotomic> column;
    column.reserve(m);
    for (long i = 0; i < m; ++i) {
      column.push_back(rt.V[i][j]);
    }
    s.facet_normals.push_back(std::move(column));
  }

  // Row j of V^{-1} is orthogonal to every column of V except column j, so
  // it spans the kernel required for vertex j.
  const auto inverse = detail::invert_matrix(rt.V);
  s.vertices.reserve(m);
  for (long j = 0; j < m; ++j) {
    const Cyclotomic& lead = inverse[j][0];
    if (real_sign(lead) <= 0) {
      throw std::runtime_error(
          "vertex kernel vector has non-positive leading coordinate");
    }
    const Cyclotomic scale = lead.inverse();
    std::vector<Cyclotomic> vertex;
    vertex.reserve(m - 1);
    for (long i = 1; i < m; ++i) {
      vertex.push_back(inverse[j][i] * scale);
    }
    s.vertices.push_back(std::move(vertex));
  }
  return s;
}

std::vector<std::vector<Cyclotomic>> closed_form_vertices(
    const RealCharacterTable& rt) {
  const long m = rt.m();
  std::vector<std::vector<Cyclotomic>> vertices;
  vertices.reserve(m);
  for (long j = 0; j < m; ++j) {
    std::vector<Cyclotomic> vertex;
    vertex.reserve(m - 1);
    for (long i = 1; i < m; ++i) {
      Rational inv_orbit(1, rt.orbit_sizes[i]);
      inv_orbit.canonicalize();
      vertex.push_back(rt.V[i][j] * Cyclotomic(inv_orbit));
    }
    vertices.push_back(std::move(vertex));
  }
  if (vertices != simplex_from_table(rt).vertices) {
    throw std::logic_error(
        "closed-form vertices disagree with the kernel solves");
  }
  return vertices;
}

PolaritySuite polarity_suite(const SSimplex& s) {
  PolaritySuite result;

  result.is_lattice = true;
  for (const auto& vertex : s.vertices) {
    for (const auto& coord : vertex) {
      if (!is_integral(coord)) {
        result.is_lattice = false;
        break;
      }
    }
    if (!result.is_lattice) {
      break;
    }
  }

  // Facet j reads <normal, (1,x)> >= 0, i.e. <-n/n_0, x> <= 1 with n_0 the
  // affine entry; the polar vertex -n/n_0 is integral iff n/n_0 is.
  result.is_reflexive = result.is_lattice;
  for (const auto& normal : s.facet_normals) {
    if (!result.is_reflexive) {
      break;
    }
    const auto n0 = normal[0].as_rational();
    if (!n0 || *n0 <= 0) {
      result.is_reflexive = false;
      break;
    }
    for (std::size_t i = 1; i < normal.size(); ++i) {
      Cyclotomic scaled = normal[i] * Cyclotomic(Rational(1) / *n0);
      if (!is_integral(scaled)) {
        result.is_reflexive = false;
        break;
      }
    }
  }

  std::vector<std::vector<Cyclotomic>> polar;
  polar.reserve(s.facet_normals.size());
  for (const auto& normal : s.facet_normals) {
    polar.push_back(dehomogenize(normal));
  }
  std::vector<std::vector<Cyclotomic>> verts = s.vertices;
  std::sort(polar.begin(), polar.end());
  std::sort(verts.begin(), verts.end());
  result.is_self_polar = polar == verts;
  return result;
}

SSimplex dilate(const SSimplex& s, long k) {
  if (k < 1) {
    throw std::invalid_argument("dilation factor must be positive");
  }
  if (k == 1) {
    return s;
  }
  SSimplex out;
  out.dim = s.dim;
  out.orbit_sizes = s.orbit_sizes;
  const Cyclotomic factor{Rational(k)};
  out.facet_normals.reserve(s.facet_normals.size());
  for (const auto& normal : s.facet_normals) {
    std::vector<Cyclotomic> scaled = normal;
    scaled[0] *= factor;
    out.facet_normals.push_back(std::move(scaled));
  }
  out.vertices.reserve(s.vertices.size());
  for (const auto& vertex : s.vertices) {
    std::vector<Cyclotomic> scaled;
    scaled.reserve(vertex.size());
    for (const auto& coord : vertex) {
      scaled.push_back(coord * factor);
    }
    out.vertices.push_back(std::move(scaled));
  }
  return out;
}

bool contains(const SSimplex& s, const std::vector<Cyclotomic>& x) {
  if (static_cast<long>(x.size()) != s.dim) {
    throw std::invalid_argument("point has wrong dimension");
  }
  for (const auto& normal : s.facet_normals) {
    Cyclotomic value = normal[0];
    for (long i = 0; i < s.dim; ++i) {
      value += normal[i + 1] * x[i];
    }
    if (real_sign(value) < 0) {
      return false;
    }
  }
  return true;
}

}  // namespace schar
