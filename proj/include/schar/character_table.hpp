#pragma once

#include "schar/cyclotomic.hpp"

#include <string>
#include <vector>

namespace schar {

/// One conjugacy class of a finite group.
struct ConjugacyClass {
  std::string name;    // conventional label, e.g. "2a"
  Integer size;        // number of elements in the class
  long element_order;  // order of any element of the class
};

/// Complex character table: one row per irreducible character, one column
/// per conjugacy class.  The identity class comes first and the trivial
/// character is row 0.
struct CharacterTable {
  std::string name;
  Integer group_order;
  std::vector<ConjugacyClass> classes;
  std::vector<std::vector<Cyclotomic>> irreducibles;

  long size() const { return static_cast<long>(classes.size()); }
};

/// Parse a character table from JSON text.
///
/// Expected shape:
///   {"name": str, "order": int,
///    "classes": [{"name": str, "size": int, "order": int}, ...],
///    "irreducibles": [[value, ...], ...]}
/// where value is an integer, a rational string "a/b", or
/// {"n": int, "terms": [[exponent, coefficient], ...]}.
/// Throws std::runtime_error naming the offending field on malformed input,
/// a non-square matrix, or an identity class that is not first.
CharacterTable parse_table(const std::string& json_text);

/// Parse a character table from a JSON file on disk.
CharacterTable parse_table_file(const std::string& path);

/// A single violated table invariant located by row/column where applicable.
struct Violation {
  std::string rule;  // stable identifier, e.g. "row-orthogonality"
  long row = -1;     // character index, or -1
  long col = -1;     // class index, or -1
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Check every table invariant with exact arithmetic: class sizes sum to the
/// group order and divide it, element orders divide it, the first row is all
/// ones, the first column consists of positive integers whose squares sum to
/// the group order, and full row and column orthogonality.  Returns all
/// violations found; an empty report means the table is valid.
ValidationReport validate(const CharacterTable& t);

/// Number of orbits of irreducible characters under the Galois action
/// zeta -> zeta^k over all k coprime to the lcm of value conductors
/// (= number of irreducible rational characters).
long galois_orbit_count(const CharacterTable& t);

/// Coefficients of a class function in the basis of irreducible characters:
/// a_i = (1/|G|) sum_c |c| * values[c] * conjugate(chi_i(c)).
/// Throws std::domain_error unless every coefficient is a rational integer.
std::vector<Integer> decompose(const CharacterTable& t,
                               const std::vector<Cyclotomic>& values);

/// True if n is 1 or a prime power p^k.
bool is_prime_power_or_one(long n);

}  // namespace schar
