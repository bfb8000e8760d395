#include "schar/lattice.hpp"
#include "schar/s_character.hpp"
#include "schar/simplex.hpp"

#include <chrono>
#include <utility>
#include <vector>

namespace schar {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(const Clock::time_point& start) {
  const std::chrono::duration<double, std::milli> d = Clock::now() - start;
  return d.count();
}

bool column_is_rational(const RealCharacterTable& rt, long j) {
  for (long i = 0; i < rt.m(); ++i) {
    if (!rt.V[i][j].is_rational()) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::vector<long> strengthenable_columns(const RealCharacterTable& rt,
                                         bool include_identity) {
  std::vector<long> columns;
  for (const long j : rt.prime_power_columns) {
    if (j == 0 && !include_identity) {
      continue;
    }
    if (column_is_rational(rt, j)) {
      columns.push_back(j);
    }
  }
  return columns;
}

SearchReport search(const CharacterTable& t, const SearchOptions& options) {
  SearchReport report;
  report.group = t.name;
  report.class_count = t.size();

  auto phase = Clock::now();
  const RealCharacterTable rt = realify(t);
  report.real_count = rt.m();
  report.rational_count = galois_orbit_count(t);
  report.timings_ms["fold"] = elapsed_ms(phase);

  phase = Clock::now();
  const SSimplex simplex = simplex_from_table(rt);
  ConstraintSystem cs = constraint_system(simplex);

  // Irrational columns are left to the decode-side filter, as is the
  // identity column when order 1 does not count as prime power.
  if (options.strengthen && !options.count_all_points) {
    cs = strengthen(
        cs, strengthenable_columns(rt, options.include_identity));
  }
  report.timings_ms["simplex"] = elapsed_ms(phase);

  phase = Clock::now();
  EnumerateOptions enumerate_options;
  enumerate_options.threads = options.threads;
  enumerate_options.limit = options.limit;
  const std::vector<std::vector<Integer>> points =
      enumerate_points(cs, enumerate_options);
  report.timings_ms["enumerate"] = elapsed_ms(phase);
  if (options.count_all_points) {
    report.lattice_point_total = static_cast<long>(points.size());
  }

  phase = Clock::now();
  for (const std::vector<Integer>& point : points) {
    SCharacter candidate = decode(point, rt, options.include_identity);
    if (candidate.is_trivial || !candidate.positive_on_prime_power) {
      continue;
    }
    if (options.faithful_only && !candidate.is_faithful) {
      continue;
    }
    if (options.ordinary_only && !candidate.is_ordinary) {
      continue;
    }
    if (!candidate.is_ordinary) {
      ++report.virtual_hit_count;
    }
    report.hits.push_back(std::move(candidate));
  }
  report.timings_ms["decode"] = elapsed_ms(phase);
  return report;
}

}  // namespace schar
