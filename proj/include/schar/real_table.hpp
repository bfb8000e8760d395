#pragma once

#include "schar/character_table.hpp"

#include <vector>

namespace schar {

/// Real folding of a complex character table.
///
/// Rows of the complex table are grouped into complex-conjugation orbits
/// (size 1 or 2) and each orbit is summed, producing a real-valued matrix U
/// with one row per orbit.  Columns of U that are exactly equal are then
/// merged; by Brauer's permutation lemma the number of merged columns equals
/// the number of row orbits, so V is square of size m.
struct RealCharacterTable {
  std::vector<std::vector<Cyclotomic>> V;        // m x m, all entries real
  std::vector<int> orbit_sizes;                  // 1 or 2 per row of V
  std::vector<std::vector<long>> row_orbits;     // complex row indices per row
  std::vector<std::vector<long>> column_classes; // class indices per column
  std::vector<long> class_to_column;             // class index -> column of V
  std::vector<long> prime_power_columns;         // columns with prime power
                                                 // element order (1 included)

  long m() const { return static_cast<long>(V.size()); }
};

/// Fold a (valid) complex table to its real form.  Throws
/// std::runtime_error on internal inconsistencies: a conjugate row missing
/// from the table, merged columns whose class data disagree, or a row/column
/// count mismatch.
RealCharacterTable realify(const CharacterTable& t);

}  // namespace schar
