#include "schar/character_table.hpp"
#include "schar/real_table.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

using schar::CharacterTable;
using schar::Cyclotomic;
using schar::Integer;
using schar::Rational;
using schar_test::load;

namespace {

std::vector<Integer> degrees_of(const CharacterTable& t) {
  std::vector<Integer> out;
  for (const auto& row : t.irreducibles) {
    out.push_back(row[0].as_rational()->get_num());
  }
  return out;
}

}  // namespace

TEST_CASE("parsing the bundled S4 table") {
  const CharacterTable t = load("S4");
  CHECK(t.name == "S4");
  CHECK(t.group_order == 24);
  REQUIRE(t.size() == 5);
  CHECK(degrees_of(t) == std::vector<Integer>{1, 1, 2, 3, 3});
  CHECK(t.classes[0].name == "1a");
  CHECK(t.classes[4].name == "4a");
  CHECK(t.classes[3].size == 8);
  CHECK(t.classes[3].element_order == 3);
}

TEST_CASE("parsing the bundled L2(7) table with irrational values") {
  const CharacterTable t = load("L2(7)");
  REQUIRE(t.size() == 6);
  CHECK(degrees_of(t) == std::vector<Integer>{1, 3, 3, 6, 7, 8});
  // The degree-3 characters take the two conjugate quadratic values
  // (-1 +- sqrt(-7))/2 on the classes of order 7.
  const Cyclotomic b7 = t.irreducibles[1][4];
  CHECK(b7.conductor() == 7);
  CHECK(!b7.is_real());
  CHECK(b7.conjugate() == t.irreducibles[1][5]);
  CHECK(b7 + b7.conjugate() == Cyclotomic(-1));
  CHECK(b7 * b7.conjugate() == Cyclotomic(2));
}

TEST_CASE("parsing an inline two-class table") {
  const std::string doc = R"({
    "name": "C2", "order": 2,
    "classes": [{"name": "1a", "size": 1, "order": 1},
                {"name": "2a", "size": 1, "order": 2}],
    "irreducibles": [[1, 1], [1, -1]]
  })";
  const CharacterTable t = schar::parse_table(doc);
  REQUIRE(t.size() == 2);
  CHECK(t.irreducibles[1][1] == Cyclotomic(-1));
  CHECK(schar::validate(t).ok());
}

TEST_CASE("parse errors name the offending field") {
  CHECK_THROWS_WITH_AS(schar::parse_table("{"),
                       doctest::Contains("malformed JSON"), std::runtime_error);
  CHECK_THROWS_WITH_AS(schar::parse_table(R"({"order": 2})"),
                       doctest::Contains("name"), std::runtime_error);

  const std::string non_square = R"({
    "name": "X", "order": 2,
    "classes": [{"name": "1a", "size": 1, "order": 1},
                {"name": "2a", "size": 1, "order": 2}],
    "irreducibles": [[1, 1]]
  })";
  CHECK_THROWS_WITH_AS(schar::parse_table(non_square),
                       doctest::Contains("square"), std::runtime_error);

  const std::string identity_later = R"({
    "name": "X", "order": 2,
    "classes": [{"name": "2a", "size": 1, "order": 2},
                {"name": "1a", "size": 1, "order": 1}],
    "irreducibles": [[1, 1], [1, -1]]
  })";
  CHECK_THROWS_WITH_AS(schar::parse_table(identity_later),
                       doctest::Contains("identity"), std::runtime_error);

  const std::string bad_value = R"({
    "name": "X", "order": 1,
    "classes": [{"name": "1a", "size": 1, "order": 1}],
    "irreducibles": [[true]]
  })";
  CHECK_THROWS_WITH_AS(schar::parse_table(bad_value),
                       doctest::Contains("irreducibles[0][0]"),
                       std::runtime_error);
}

TEST_CASE("validate accepts every bundled table") {
  for (const char* name : {"C2", "C3", "S3", "D8", "Q8", "SL(2,3)", "S4", "A5",
                           "L2(7)", "A8", "M12", "J1", "2.A8"}) {
    CAPTURE(name);
    const CharacterTable t = load(name);
    const auto report = schar::validate(t);
    CHECK(report.ok());
    Integer degree_squares = 0;
    for (const auto& d : degrees_of(t)) {
      degree_squares += d * d;
    }
    CHECK(degree_squares == t.group_order);
  }
}

TEST_CASE("validate pinpoints a corrupted value") {
  CharacterTable t = load("S4");
  // Corrupt the degree-2 character on the first order-2 class: 2 -> 3.
  REQUIRE(t.irreducibles[2][1] == Cyclotomic(2));
  t.irreducibles[2][1] = Cyclotomic(3);
  const auto report = schar::validate(t);
  REQUIRE(!report.ok());
  bool row_hit = false;
  bool col_hit = false;
  for (const auto& v : report.violations) {
    if (v.rule == "row-orthogonality" && v.row == 2 && v.col == 2) {
      row_hit = true;
    }
    if (v.rule == "column-orthogonality" && (v.row == 1 || v.col == 1)) {
      col_hit = true;
    }
  }
  CHECK(row_hit);
  CHECK(col_hit);
}

TEST_CASE("realify is the identity on a table that is already real") {
  const CharacterTable t = load("S4");
  const auto real = schar::realify(t);
  REQUIRE(real.m() == 5);
  CHECK(real.orbit_sizes == std::vector<int>{1, 1, 1, 1, 1});
  for (long i = 0; i < 5; ++i) {
    CHECK(real.V[i] == t.irreducibles[i]);
    CHECK(real.column_classes[i] == std::vector<long>{i});
  }
  // All five classes of S4 have prime power order (1, 2, 2, 3, 4).
  CHECK(real.prime_power_columns == std::vector<long>{0, 1, 2, 3, 4});
}

TEST_CASE("realify folds the L2(7) table to the known 5x5 matrix") {
  const CharacterTable t = load("L2(7)");
  const auto real = schar::realify(t);
  REQUIRE(real.m() == 5);
  CHECK(real.orbit_sizes == std::vector<int>{1, 2, 1, 1, 1});
  CHECK(real.row_orbits[1] == std::vector<long>{1, 2});
  CHECK(real.column_classes[4] == std::vector<long>{4, 5});
  CHECK(real.class_to_column == std::vector<long>{0, 1, 2, 3, 4, 4});
  const std::vector<std::vector<long>> expected = {{1, 1, 1, 1, 1},
                                                   {6, -2, 0, 2, -1},
                                                   {6, 2, 0, 0, -1},
                                                   {7, -1, 1, -1, 0},
                                                   {8, 0, -1, 0, 1}};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    for (std::size_t j = 0; j < expected[i].size(); ++j) {
      CHECK(real.V[i][j] == Cyclotomic(expected[i][j]));
    }
  }
  // Prime power orders among merged columns: 1, 2, 3, 4, 7.
  CHECK(real.prime_power_columns == std::vector<long>{0, 1, 2, 3, 4});
}

TEST_CASE("realify merges the conjugate pairs of A8") {
  const CharacterTable t = load("A8");
  REQUIRE(t.size() == 14);
  const auto real = schar::realify(t);
  CHECK(real.m() == 12);
  int pairs = 0;
  for (int o : real.orbit_sizes) {
    if (o == 2) {
      ++pairs;
    }
  }
  CHECK(pairs == 2);
  // Element orders 1,2,2,3,3,4,4,5,7 give prime power columns; 6a, 6b and
  // the merged 15ab column do not.
  CHECK(real.prime_power_columns.size() == 9);
}

TEST_CASE("realify reports column counts for the large tables") {
  CHECK(schar::realify(load("M12")).m() == 14);
  CHECK(schar::realify(load("J1")).m() == 15);
  CHECK(schar::realify(load("2.A8")).m() == 18);
}

TEST_CASE("galois orbit counts") {
  CHECK(schar::galois_orbit_count(load("C2")) == 2);
  CHECK(schar::galois_orbit_count(load("S4")) == 5);
  CHECK(schar::galois_orbit_count(load("A8")) == 12);
  CHECK(schar::galois_orbit_count(load("M12")) == 14);
  CHECK(schar::galois_orbit_count(load("J1")) == 10);
  // A5: the two degree-3 characters carry golden-ratio values and fuse.
  CHECK(schar::galois_orbit_count(load("A5")) == 4);
  // SL(2,3): two pairs of cube-root characters fuse.
  CHECK(schar::galois_orbit_count(load("SL(2,3)")) == 5);
}

TEST_CASE("decompose round-trips the irreducibles") {
  for (const char* name : {"S4", "L2(7)", "A5"}) {
    CAPTURE(name);
    const CharacterTable t = load(name);
    for (long i = 0; i < t.size(); ++i) {
      const auto coeffs = schar::decompose(t, t.irreducibles[i]);
      for (long j = 0; j < t.size(); ++j) {
        CHECK(coeffs[j] == (i == j ? 1 : 0));
      }
    }
  }
}

TEST_CASE("decompose standard class functions") {
  const CharacterTable t = load("L2(7)");

  // The all-ones function is the trivial character.
  std::vector<Cyclotomic> ones(6, Cyclotomic(1));
  CHECK(schar::decompose(t, ones) ==
        std::vector<Integer>{1, 0, 0, 0, 0, 0});

  // The regular character (|G|, 0, ..., 0) decomposes with the degrees.
  std::vector<Cyclotomic> regular(6);
  regular[0] = Cyclotomic(Rational(t.group_order));
  CHECK(schar::decompose(t, regular) ==
        std::vector<Integer>{1, 3, 3, 6, 7, 8});

  // chi * conj(chi) for the first degree-3 character: its values are
  // (9, 1, 0, 1, 2, 2), which is the trivial plus the degree-8 character.
  std::vector<Cyclotomic> prod;
  for (long c = 0; c < 6; ++c) {
    prod.push_back(t.irreducibles[1][c] * t.irreducibles[1][c].conjugate());
  }
  CHECK(prod[4] == Cyclotomic(2));
  const auto coeffs = schar::decompose(t, prod);
  CHECK(coeffs == std::vector<Integer>{1, 0, 0, 0, 0, 1});
  CHECK(coeffs[0] == 1);
}

TEST_CASE("decompose rejects non-virtual class functions") {
  const CharacterTable t = load("S4");
  std::vector<Cyclotomic> values = t.irreducibles[2];
  values[0] *= Cyclotomic(Rational(Integer(1), Integer(2)));
  CHECK_THROWS_AS((void)schar::decompose(t, values), std::domain_error);
  std::vector<Cyclotomic> short_values(3, Cyclotomic(1));
  CHECK_THROWS_AS((void)schar::decompose(t, short_values),
                  std::invalid_argument);
}

TEST_CASE("prime power predicate") {
  for (long n : {1L, 2L, 3L, 4L, 5L, 8L, 9L, 16L, 25L, 27L, 121L}) {
    CAPTURE(n);
    CHECK(schar::is_prime_power_or_one(n));
  }
  for (long n : {6L, 10L, 12L, 15L, 30L, 100L}) {
    CAPTURE(n);
    CHECK(!schar::is_prime_power_or_one(n));
  }
}
