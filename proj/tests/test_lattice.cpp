#include "schar/lattice.hpp"

#include "schar/real_table.hpp"
#include "schar/simplex.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

using schar::ConstraintSystem;
using schar::Cyclotomic;
using schar::EnumerateOptions;
using schar::Integer;
using schar::LimitExceeded;
using schar::Rational;
using schar::brute_force;
using schar::constraint_system;
using schar::contains;
using schar::enumerate_points;
using schar::realify;
using schar::simplex_from_table;
using schar::strengthen;
using schar_test::load;

namespace {

ConstraintSystem system_of(const std::string& name) {
  return constraint_system(simplex_from_table(realify(load(name))));
}

std::vector<Integer> point(const std::vector<long>& values) {
  return std::vector<Integer>(values.begin(), values.end());
}

// Columns whose facet normals are rational, i.e. eligible for strengthen.
std::vector<long> rational_columns(const ConstraintSystem& cs) {
  std::vector<long> out;
  for (long j = 0; j < static_cast<long>(cs.normals.size()); ++j) {
    bool ok = true;
    for (const auto& e : cs.normals[j]) {
      if (!e.as_rational()) {
        ok = false;
        break;
      }
    }
    if (ok) {
      out.push_back(j);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("segment systems enumerate exactly their integer range") {
  const auto cs = system_of("C2");
  const std::vector<std::vector<Integer>> expected = {point({-1}), point({0}),
                                                      point({1})};
  CHECK(enumerate_points(cs) == expected);
  CHECK(brute_force(cs) == expected);

  // A hand-built fractional segment 1/3 <= x <= 7/2.
  ConstraintSystem seg;
  seg.normals = {{Cyclotomic(Rational(-1, 3)), Cyclotomic(1)},
                 {Cyclotomic(Rational(7, 2)), Cyclotomic(-1)}};
  seg.rhs = {Cyclotomic(0), Cyclotomic(0)};
  seg.bounds_hint = {{Rational(0), Rational(4)}};
  const std::vector<std::vector<Integer>> expected_seg = {
      point({1}), point({2}), point({3})};
  CHECK(enumerate_points(seg) == expected_seg);
  CHECK(brute_force(seg) == expected_seg);
}

TEST_CASE("enumerate agrees with the brute-force oracle on small tables") {
  const std::vector<std::string> names = {"C2", "C3", "S3",     "D8",   "Q8",
                                          "SL(2,3)", "S4", "A5", "L2(7)"};
  for (const auto& name : names) {
    CAPTURE(name);
    const auto simplex = simplex_from_table(realify(load(name)));
    const auto cs = constraint_system(simplex);
    const auto fast = enumerate_points(cs);
    const auto slow = brute_force(cs);
    CHECK(fast == slow);
    CHECK(!fast.empty());

    // The origin is always an interior point.
    const std::vector<Integer> origin(cs.dim());
    CHECK(std::find(fast.begin(), fast.end(), origin) != fast.end());

    // Spot-check every reported point against the facet description.
    for (const auto& x : fast) {
      std::vector<Cyclotomic> coords;
      coords.reserve(x.size());
      for (const auto& v : x) {
        coords.emplace_back(Rational(v));
      }
      CHECK(contains(simplex, coords));
    }

    // Strengthened systems must agree between both engines as well, and
    // only ever shrink the solution set.
    const auto tightened = strengthen(cs, rational_columns(cs));
    const auto fast_tight = enumerate_points(tightened);
    CHECK(fast_tight == brute_force(tightened));
    for (const auto& x : fast_tight) {
      CHECK(std::find(fast.begin(), fast.end(), x) != fast.end());
    }
  }
}

TEST_CASE("strengthening rules") {
  const auto cs = system_of("S4");
  const auto same = strengthen(cs, {});
  CHECK(same.rhs == cs.rhs);
  CHECK(same.normals == cs.normals);

  // Strengthening both endpoints of the order-2 segment pins the origin.
  const auto c2 = strengthen(system_of("C2"), {0, 1});
  CHECK(enumerate_points(c2) == std::vector<std::vector<Integer>>{point({0})});

  // Irrational columns are refused; the golden-ratio columns of the
  // degree-60 alternating group are the classic case.
  const auto a5 = system_of("A5");
  CHECK_THROWS_AS(strengthen(a5, {3}), std::invalid_argument);
  CHECK_THROWS_AS(strengthen(a5, {99}), std::out_of_range);
}

TEST_CASE("dilated segments pick up the extra integer points") {
  const auto c2 = constraint_system(
      dilate(simplex_from_table(realify(load("C2"))), 3));
  const auto points = enumerate_points(c2);
  REQUIRE(points.size() == 7);
  CHECK(points.front() == point({-3}));
  CHECK(points.back() == point({3}));
  CHECK(brute_force(c2) == points);
}

TEST_CASE("limits and worker counts") {
  const auto cs = system_of("S4");
  const auto all = enumerate_points(cs);

  EnumerateOptions limited;
  limited.limit = 3;
  CHECK_THROWS_AS(enumerate_points(cs, limited), LimitExceeded);
  limited.limit = static_cast<long>(all.size());
  CHECK(enumerate_points(cs, limited) == all);

  EnumerateOptions parallel;
  parallel.threads = 3;
  CHECK(enumerate_points(cs, parallel) == all);
  parallel.limit = 3;
  CHECK_THROWS_AS(enumerate_points(cs, parallel), LimitExceeded);

  // Determinism: repeated runs are byte-identical.
  CHECK(enumerate_points(cs) == all);
}

TEST_CASE("the degree-20160 alternating group has 3636 lattice points") {
  const auto cs = system_of("A8");
  const auto points = enumerate_points(cs);
  CHECK(points.size() == 3636);
  const std::vector<Integer> origin(cs.dim());
  CHECK(std::find(points.begin(), points.end(), origin) != points.end());

  // All eleven-dimensional work collapses once the prime-power facets are
  // sharpened: only the trivial point and one other solution survive.
  const auto rt = realify(load("A8"));
  const auto tightened = strengthen(cs, rt.prime_power_columns);
  const auto tight_points = enumerate_points(tightened);
  CHECK(tight_points.size() == 2);
  for (const auto& x : tight_points) {
    CHECK(std::find(points.begin(), points.end(), x) != points.end());
  }
}

TEST_CASE("brute force refuses oversized boxes") {
  const auto a8 = system_of("A8");
  CHECK_THROWS_AS(brute_force(a8), std::invalid_argument);
  CHECK_THROWS_AS(brute_force(system_of("S4"), 2), std::invalid_argument);
}
