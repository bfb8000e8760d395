#include "schar/lattice.hpp"

#include "detail_linalg.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <thread>
#include <type_traits>
#include <utility>
#include <vector>

namespace schar {

namespace {

int scalar_sign(const Rational& v) { return sgn(v); }
int scalar_sign(const Cyclotomic& v) {
  return v.is_zero() ? 0 : real_sign(v);
}

bool scalar_is_zero(const Rational& v) { return v == 0; }
bool scalar_is_zero(const Cyclotomic& v) { return v.is_zero(); }

Rational scalar_inverse(const Rational& v) { return Rational(1) / v; }
Cyclotomic scalar_inverse(const Cyclotomic& v) { return v.inverse(); }

template <class T>
T scalar_from_integer(const Integer& v) {
  if constexpr (std::is_same_v<T, Rational>) {
    return Rational(v);
  } else {
    return Cyclotomic(Rational(v));
  }
}

/// Minimize cost.mu subject to rows.mu = b, mu >= 0, exactly.
/// Two-phase dense-tableau primal simplex with Bland's rule, so every
/// pivot choice (and hence the arithmetic) is deterministic.  Returns
/// nullopt when the system is infeasible.
template <class T>
std::optional<T> lp_minimize(const std::vector<std::vector<T>>& a,
                             const std::vector<T>& b,
                             const std::vector<T>& cost) {
  const long rows_n = static_cast<long>(a.size());
  const long cols_n = static_cast<long>(cost.size());
  const long width = cols_n + rows_n + 1;  // variables, artificials, rhs
  std::vector<std::vector<T>> tab(rows_n, std::vector<T>(width, T(0)));
  std::vector<long> basis(rows_n);
  for (long r = 0; r < rows_n; ++r) {
    const bool flip = scalar_sign(b[r]) < 0;
    for (long c = 0; c < cols_n; ++c) {
      tab[r][c] = flip ? -a[r][c] : a[r][c];
    }
    tab[r][cols_n + r] = T(1);
    tab[r][width - 1] = flip ? -b[r] : b[r];
    basis[r] = cols_n + r;
  }

  // Reduced-cost row, canonicalized against the artificial basis: phase one
  // minimizes the sum of the artificial variables.
  std::vector<T> z(width, T(0));
  for (long r = 0; r < rows_n; ++r) {
    for (long c = 0; c < cols_n; ++c) {
      z[c] -= tab[r][c];
    }
    z[width - 1] -= tab[r][width - 1];
  }

  const auto pivot = [&](long pr, long pc) {
    const T inv = scalar_inverse(tab[pr][pc]);
    for (long c = 0; c < width; ++c) {
      tab[pr][c] *= inv;
    }
    tab[pr][pc] = T(1);
    for (long r = 0; r < rows_n; ++r) {
      if (r == pr) {
        continue;
      }
      const T factor = tab[r][pc];
      if (scalar_is_zero(factor)) {
        continue;
      }
      for (long c = 0; c < width; ++c) {
        tab[r][c] -= factor * tab[pr][c];
      }
      tab[r][pc] = T(0);
    }
    const T zf = z[pc];
    if (!scalar_is_zero(zf)) {
      for (long c = 0; c < width; ++c) {
        z[c] -= zf * tab[pr][c];
      }
      z[pc] = T(0);
    }
    basis[pr] = pc;
  };

  // Bland's rule: enter at the first negative reduced cost, leave at the
  // minimum ratio with ties broken by the smallest basis index.
  const auto optimize = [&](long allowed_cols) -> bool {
    for (;;) {
      long enter = -1;
      for (long c = 0; c < allowed_cols; ++c) {
        if (scalar_sign(z[c]) < 0) {
          enter = c;
          break;
        }
      }
      if (enter < 0) {
        return true;
      }
      long leave = -1;
      for (long r = 0; r < rows_n; ++r) {
        if (scalar_sign(tab[r][enter]) <= 0) {
          continue;
        }
        if (leave < 0) {
          leave = r;
          continue;
        }
        const int cmp = scalar_sign(tab[r][width - 1] * tab[leave][enter] -
                                    tab[leave][width - 1] * tab[r][enter]);
        if (cmp < 0 || (cmp == 0 && basis[r] < basis[leave])) {
          leave = r;
        }
      }
      if (leave < 0) {
        return false;  // unbounded
      }
      pivot(leave, enter);
    }
  };

  if (!optimize(width - 1)) {
    throw std::runtime_error("unbounded direction in lattice enumeration");
  }
  if (scalar_sign(z[width - 1]) != 0) {
    return std::nullopt;  // artificials cannot all vanish: infeasible
  }

  // Pivot leftover artificials out of the basis; a row that offers no pivot
  // is identically zero (a redundant constraint) and stays inert.
  for (long r = 0; r < rows_n; ++r) {
    if (basis[r] < cols_n) {
      continue;
    }
    for (long c = 0; c < cols_n; ++c) {
      if (!scalar_is_zero(tab[r][c])) {
        pivot(r, c);
        break;
      }
    }
  }

  std::fill(z.begin(), z.end(), T(0));
  for (long c = 0; c < cols_n; ++c) {
    z[c] = cost[c];
  }
  for (long r = 0; r < rows_n; ++r) {
    if (basis[r] >= cols_n) {
      continue;
    }
    const T f = z[basis[r]];
    if (scalar_is_zero(f)) {
      continue;
    }
    for (long c = 0; c < width; ++c) {
      z[c] -= f * tab[r][c];
    }
    z[basis[r]] = T(0);
  }
  if (!optimize(cols_n)) {
    throw std::runtime_error("unbounded direction in lattice enumeration");
  }
  return -z[width - 1];
}

/// The system rewritten in barycentric coordinates: a point x lies in the
/// polytope iff (1, x) = sum_j lambda_j (1, w_j) with sum lambda = 1 and
/// lambda_j >= r_j, where w_j are the vertices and r_j the strengthened
/// lower bounds.  Fibre bounds then become small equality-form LPs over
/// mu = lambda - r >= 0.
struct FibreGeometry {
  long m = 0;
  long d = 0;
  std::vector<std::vector<Cyclotomic>> w;  // m vertices, d coordinates
  std::vector<Cyclotomic> r;               // m lower bounds
  Cyclotomic s;                            // 1 - sum r
  std::vector<Cyclotomic> base;            // base[i] = sum_j r_j w_j[i]

  // Rational fast path, used for every node whose LP only touches
  // rational data.
  bool r_rational = true;
  std::vector<Rational> r_rat;
  Rational s_rat;
  std::vector<char> row_rational;           // per coordinate
  std::vector<std::vector<Rational>> w_rat;  // valid where row_rational
  std::vector<Rational> base_rat;

  std::vector<long> perm;  // coordinate assignment order
};

FibreGeometry make_geometry(const ConstraintSystem& cs) {
  FibreGeometry g;
  g.d = cs.dim();
  g.m = static_cast<long>(cs.normals.size());
  if (g.m != g.d + 1) {
    throw std::runtime_error(
        "constraint system does not describe a simplex (needs dim+1 facets)");
  }
  if (static_cast<long>(cs.rhs.size()) != g.m) {
    throw std::invalid_argument("one right-hand side per normal required");
  }
  for (const auto& n : cs.normals) {
    if (static_cast<long>(n.size()) != g.d + 1) {
      throw std::invalid_argument("inconsistent normal vector length");
    }
  }

  std::vector<std::vector<Cyclotomic>> matrix(
      g.m, std::vector<Cyclotomic>(g.m));
  for (long i = 0; i < g.m; ++i) {
    for (long j = 0; j < g.m; ++j) {
      matrix[i][j] = cs.normals[j][i];
    }
  }
  const auto inverse = detail::invert_matrix(matrix);

  g.w.assign(g.m, std::vector<Cyclotomic>(g.d));
  g.r.resize(g.m);
  g.s = Cyclotomic(1);
  for (long j = 0; j < g.m; ++j) {
    const Cyclotomic& lead = inverse[j][0];
    if (scalar_sign(lead) <= 0) {
      throw std::runtime_error("constraint system has no interior");
    }
    const Cyclotomic scale = lead.inverse();
    for (long i = 1; i < g.m; ++i) {
      g.w[j][i - 1] = inverse[j][i] * scale;
    }
    // Facet j evaluates to 1/lead at vertex j and to 0 at the others, so
    // the barycentric lower bound is rhs scaled by lead.
    g.r[j] = cs.rhs[j] * lead;
    g.s -= g.r[j];
  }
  g.base.assign(g.d, Cyclotomic(0));
  for (long i = 0; i < g.d; ++i) {
    for (long j = 0; j < g.m; ++j) {
      if (!g.r[j].is_zero()) {
        g.base[i] += g.r[j] * g.w[j][i];
      }
    }
  }

  g.r_rat.resize(g.m);
  for (long j = 0; j < g.m; ++j) {
    const auto q = g.r[j].as_rational();
    if (!q) {
      g.r_rational = false;
      break;
    }
    g.r_rat[j] = *q;
  }
  if (g.r_rational) {
    g.s_rat = *g.s.as_rational();
  }
  g.row_rational.assign(g.d, 0);
  g.w_rat.assign(g.m, std::vector<Rational>(g.d));
  g.base_rat.assign(g.d, Rational(0));
  for (long i = 0; i < g.d; ++i) {
    if (!g.r_rational) {
      break;
    }
    bool ok = true;
    for (long j = 0; j < g.m && ok; ++j) {
      const auto q = g.w[j][i].as_rational();
      if (q) {
        g.w_rat[j][i] = *q;
      } else {
        ok = false;
      }
    }
    if (ok) {
      g.row_rational[i] = 1;
      g.base_rat[i] = *g.base[i].as_rational();
    }
  }

  // Assign the coordinate with the narrowest vertex range first: tight
  // coordinates prune the search tree best.
  std::vector<Cyclotomic> range(g.d);
  for (long i = 0; i < g.d; ++i) {
    long lo = 0;
    long hi = 0;
    for (long j = 1; j < g.m; ++j) {
      if (compare_real(g.w[j][i], g.w[lo][i]) < 0) {
        lo = j;
      }
      if (compare_real(g.w[j][i], g.w[hi][i]) > 0) {
        hi = j;
      }
    }
    range[i] = g.w[hi][i] - g.w[lo][i];
  }
  g.perm.resize(g.d);
  for (long i = 0; i < g.d; ++i) {
    g.perm[i] = i;
  }
  std::sort(g.perm.begin(), g.perm.end(), [&](long x, long y) {
    const int cmp = compare_real(range[x], range[y]);
    if (cmp != 0) {
      return cmp < 0;
    }
    return x < y;
  });
  return g;
}

template <class T>
const T& geometry_w(const FibreGeometry& g, long j, long i) {
  if constexpr (std::is_same_v<T, Rational>) {
    return g.w_rat[j][i];
  } else {
    return g.w[j][i];
  }
}

template <class T>
const T& geometry_base(const FibreGeometry& g, long i) {
  if constexpr (std::is_same_v<T, Rational>) {
    return g.base_rat[i];
  } else {
    return g.base[i];
  }
}

template <class T>
const T& geometry_s(const FibreGeometry& g) {
  if constexpr (std::is_same_v<T, Rational>) {
    return g.s_rat;
  } else {
    return g.s;
  }
}

/// Exact [lo, hi] of coordinate perm[depth] over the fibre with the first
/// `depth` permuted coordinates fixed; nullopt when the fibre is empty.
template <class T>
std::optional<std::pair<Integer, Integer>> fibre_bounds(
    const FibreGeometry& g, long depth, const std::vector<Integer>& fixed) {
  const long q = g.perm[depth];
  std::vector<std::vector<T>> rows;
  std::vector<T> b;
  rows.reserve(depth + 1);
  b.reserve(depth + 1);
  rows.emplace_back(g.m, T(1));
  b.push_back(geometry_s<T>(g));
  for (long u = 0; u < depth; ++u) {
    const long i = g.perm[u];
    std::vector<T> row(g.m);
    for (long j = 0; j < g.m; ++j) {
      row[j] = geometry_w<T>(g, j, i);
    }
    rows.push_back(std::move(row));
    b.push_back(scalar_from_integer<T>(fixed[u]) - geometry_base<T>(g, i));
  }
  std::vector<T> cost(g.m);
  std::vector<T> neg_cost(g.m);
  for (long j = 0; j < g.m; ++j) {
    cost[j] = geometry_w<T>(g, j, q);
    neg_cost[j] = -cost[j];
  }
  const auto lo = lp_minimize<T>(rows, b, cost);
  if (!lo) {
    return std::nullopt;
  }
  const auto neg_hi = lp_minimize<T>(rows, b, neg_cost);
  if (!neg_hi) {
    return std::nullopt;
  }
  const T lo_value = *lo + geometry_base<T>(g, q);
  const T hi_value = -*neg_hi + geometry_base<T>(g, q);
  return std::make_pair(ceil_to_integer(lo_value),
                        floor_to_integer(hi_value));
}

struct AbortSearch {};

struct SearchState {
  const FibreGeometry* geometry = nullptr;
  std::optional<long> limit;
  std::atomic<long>* counter = nullptr;
  std::atomic<bool>* abort = nullptr;
  std::vector<std::vector<Integer>> found;
};

void search_fibres(SearchState& state, long depth, std::vector<Integer>& fixed,
                   bool prefix_rational) {
  const FibreGeometry& g = *state.geometry;
  if (state.abort->load(std::memory_order_relaxed)) {
    throw AbortSearch{};
  }
  if (depth == g.d) {
    if (state.limit) {
      const long seen = state.counter->fetch_add(1) + 1;
      if (seen > *state.limit) {
        state.abort->store(true);
        throw AbortSearch{};
      }
    }
    std::vector<Integer> point(g.d);
    for (long u = 0; u < g.d; ++u) {
      point[g.perm[u]] = fixed[u];
    }
    state.found.push_back(std::move(point));
    return;
  }
  const bool node_rational =
      prefix_rational && g.row_rational[g.perm[depth]] != 0;
  const auto bounds =
      node_rational ? fibre_bounds<Rational>(g, depth, fixed)
                    : fibre_bounds<Cyclotomic>(g, depth, fixed);
  if (!bounds) {
    return;
  }
  for (Integer v = bounds->first; v <= bounds->second; ++v) {
    fixed.push_back(v);
    search_fibres(state, depth + 1, fixed, node_rational);
    fixed.pop_back();
  }
}

}  // namespace

ConstraintSystem constraint_system(const SSimplex& s) {
  ConstraintSystem cs;
  cs.normals = s.facet_normals;
  cs.rhs.assign(s.facet_normals.size(), Cyclotomic(0));
  cs.bounds_hint.reserve(s.dim);
  for (long i = 0; i < s.dim; ++i) {
    long lo = 0;
    long hi = 0;
    for (long j = 1; j < static_cast<long>(s.vertices.size()); ++j) {
      if (compare_real(s.vertices[j][i], s.vertices[lo][i]) < 0) {
        lo = j;
      }
      if (compare_real(s.vertices[j][i], s.vertices[hi][i]) > 0) {
        hi = j;
      }
    }
    cs.bounds_hint.emplace_back(Rational(floor_to_integer(s.vertices[lo][i])),
                                Rational(ceil_to_integer(s.vertices[hi][i])));
  }
  return cs;
}

ConstraintSystem strengthen(const ConstraintSystem& cs,
                            const std::vector<long>& columns) {
  ConstraintSystem out = cs;
  for (const long j : columns) {
    if (j < 0 || j >= static_cast<long>(out.normals.size())) {
      throw std::out_of_range("strengthen: no such constraint");
    }
    for (const auto& entry : out.normals[j]) {
      if (!entry.as_rational()) {
        throw std::invalid_argument(
            "strengthen: constraint has irrational entries; the integer "
            "sharpening argument does not apply (post-filter instead)");
      }
    }
    out.rhs[j] = Cyclotomic(1);
  }
  return out;
}

std::vector<std::vector<Integer>> enumerate_points(
    const ConstraintSystem& cs, const EnumerateOptions& options) {
  const FibreGeometry g = make_geometry(cs);
  if (g.d == 0) {
    if (scalar_sign(g.s) >= 0) {
      return {std::vector<Integer>{}};
    }
    return {};
  }

  std::atomic<long> counter{0};
  std::atomic<bool> abort{false};

  const bool top_rational = g.r_rational && g.row_rational[g.perm[0]] != 0;
  const auto top =
      top_rational
          ? fibre_bounds<Rational>(g, 0, {})
          : fibre_bounds<Cyclotomic>(g, 0, {});
  if (!top) {
    return {};
  }
  std::vector<Integer> top_values;
  for (Integer v = top->first; v <= top->second; ++v) {
    top_values.push_back(v);
  }

  const int workers =
      std::max(1, std::min<int>(options.threads,
                                static_cast<int>(top_values.size())));

  std::vector<SearchState> states(workers);
  for (auto& st : states) {
    st.geometry = &g;
    st.limit = options.limit;
    st.counter = &counter;
    st.abort = &abort;
  }

  const auto run_worker = [&](int id) {
    std::vector<Integer> fixed;
    fixed.reserve(g.d);
    for (std::size_t idx = id; idx < top_values.size();
         idx += static_cast<std::size_t>(workers)) {
      fixed.push_back(top_values[idx]);
      search_fibres(states[id], 1, fixed, top_rational);
      fixed.pop_back();
    }
  };

  if (workers == 1) {
    try {
      run_worker(0);
    } catch (const AbortSearch&) {
      // fallthrough: reported below
    }
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int id = 0; id < workers; ++id) {
      pool.emplace_back([&, id] {
        try {
          run_worker(id);
        } catch (const AbortSearch&) {
          // limit reached: reported below
        } catch (...) {
          errors[id] = std::current_exception();
          abort.store(true);
        }
      });
    }
    for (auto& t : pool) {
      t.join();
    }
    for (const auto& err : errors) {
      if (err) {
        std::rethrow_exception(err);
      }
    }
  }

  if (options.limit && counter.load() > *options.limit) {
    throw LimitExceeded("lattice point limit exceeded");
  }

  std::vector<std::vector<Integer>> out;
  for (auto& st : states) {
    out.insert(out.end(), std::make_move_iterator(st.found.begin()),
               std::make_move_iterator(st.found.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Integer>> brute_force(const ConstraintSystem& cs,
                                              long dimension_cap) {
  const long d = cs.dim();
  if (d > dimension_cap) {
    throw std::invalid_argument("brute_force: dimension above the cap");
  }
  if (static_cast<long>(cs.bounds_hint.size()) != d) {
    throw std::invalid_argument("brute_force: bounds_hint required");
  }
  std::vector<Integer> lo(d);
  std::vector<Integer> hi(d);
  for (long i = 0; i < d; ++i) {
    lo[i] = ceil_to_integer(cs.bounds_hint[i].first);
    hi[i] = floor_to_integer(cs.bounds_hint[i].second);
    if (lo[i] > hi[i]) {
      return {};
    }
  }

  std::vector<std::vector<Integer>> out;
  std::vector<Integer> x = lo;
  const auto satisfies_all = [&]() {
    for (std::size_t j = 0; j < cs.normals.size(); ++j) {
      Cyclotomic value = cs.normals[j][0] - cs.rhs[j];
      for (long i = 0; i < d; ++i) {
        value += cs.normals[j][i + 1] * Cyclotomic(Rational(x[i]));
      }
      if (scalar_sign(value) < 0) {
        return false;
      }
    }
    return true;
  };
  for (;;) {
    if (satisfies_all()) {
      out.push_back(x);
    }
    long pos = d - 1;
    while (pos >= 0 && x[pos] == hi[pos]) {
      x[pos] = lo[pos];
      --pos;
    }
    if (pos < 0) {
      break;
    }
    ++x[pos];
  }
  return out;
}

}  // namespace schar
