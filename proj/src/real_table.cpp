#include "schar/real_table.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace schar {

RealCharacterTable realify(const CharacterTable& t) {
  const long n = t.size();

  // Group rows into complex-conjugation orbits and sum each orbit.
  std::map<std::vector<Cyclotomic>, long> row_index;
  for (long i = 0; i < n; ++i) {
    row_index.emplace(t.irreducibles[i], i);
  }
  std::vector<std::vector<long>> row_orbits;
  std::vector<int> orbit_sizes;
  std::vector<std::vector<Cyclotomic>> summed;
  std::vector<bool> used(n, false);
  for (long i = 0; i < n; ++i) {
    if (used[i]) {
      continue;
    }
    used[i] = true;
    std::vector<Cyclotomic> conj_row;
    conj_row.reserve(n);
    for (const Cyclotomic& v : t.irreducibles[i]) {
      conj_row.push_back(v.conjugate());
    }
    if (conj_row == t.irreducibles[i]) {
      row_orbits.push_back({i});
      orbit_sizes.push_back(1);
      summed.push_back(t.irreducibles[i]);
    } else {
      const auto it = row_index.find(conj_row);
      if (it == row_index.end()) {
        throw std::runtime_error("conjugate of character row " +
                                 std::to_string(i) + " is not in the table");
      }
      const long j = it->second;
      used[j] = true;
      row_orbits.push_back({i, j});
      orbit_sizes.push_back(2);
      std::vector<Cyclotomic> sum;
      sum.reserve(n);
      for (long c = 0; c < n; ++c) {
        sum.push_back(t.irreducibles[i][c] + t.irreducibles[j][c]);
      }
      summed.push_back(std::move(sum));
    }
  }
  const long rows = static_cast<long>(summed.size());

  // Merge exactly-equal columns of the summed matrix.
  RealCharacterTable result;
  result.row_orbits = std::move(row_orbits);
  result.orbit_sizes = std::move(orbit_sizes);
  result.class_to_column.assign(n, -1);
  std::map<std::vector<Cyclotomic>, long> column_index;
  for (long c = 0; c < n; ++c) {
    std::vector<Cyclotomic> column;
    column.reserve(rows);
    for (long r = 0; r < rows; ++r) {
      column.push_back(summed[r][c]);
    }
    const auto it = column_index.find(column);
    if (it == column_index.end()) {
      const long col = static_cast<long>(result.column_classes.size());
      column_index.emplace(std::move(column), col);
      result.column_classes.push_back({c});
      result.class_to_column[c] = col;
    } else {
      const long col = it->second;
      const long first = result.column_classes[col][0];
      if (t.classes[first].element_order != t.classes[c].element_order ||
          t.classes[first].size != t.classes[c].size) {
        throw std::runtime_error("merged columns " + t.classes[first].name +
                                 ", " + t.classes[c].name +
                                 " have mismatched class data");
      }
      result.column_classes[col].push_back(c);
      result.class_to_column[c] = col;
    }
  }

  const long cols = static_cast<long>(result.column_classes.size());
  if (cols != rows) {
    throw std::runtime_error("real table is not square: " +
                             std::to_string(rows) + " row orbits vs " +
                             std::to_string(cols) + " merged columns");
  }

  result.V.reserve(rows);
  for (long r = 0; r < rows; ++r) {
    std::vector<Cyclotomic> row;
    row.reserve(cols);
    for (long col = 0; col < cols; ++col) {
      const Cyclotomic& v = summed[r][result.column_classes[col][0]];
      if (!v.is_real()) {
        throw std::runtime_error("summed character row " + std::to_string(r) +
                                 " has a non-real value " + v.str());
      }
      row.push_back(v);
    }
    result.V.push_back(std::move(row));
  }

  for (long col = 0; col < cols; ++col) {
    const long c = result.column_classes[col][0];
    if (is_prime_power_or_one(t.classes[c].element_order)) {
      result.prime_power_columns.push_back(col);
    }
  }
  return result;
}

}  // namespace schar
