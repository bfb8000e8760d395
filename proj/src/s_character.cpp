#include "schar/s_character.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace schar {

namespace {

using nlohmann::json;

const json& require_field(const json& j, const char* field,
                          const std::string& where) {
  auto it = j.find(field);
  if (it == j.end()) {
    throw std::runtime_error(where + ": missing field \"" + field + "\"");
  }
  return *it;
}

}  // namespace

SCharacter decode(const std::vector<Integer>& x, const RealCharacterTable& rt,
                  bool include_identity) {
  const long m = rt.m();
  if (static_cast<long>(x.size()) != m - 1) {
    std::ostringstream os;
    os << "lattice point has dimension " << x.size() << ", expected " << m - 1;
    throw std::invalid_argument(os.str());
  }

  SCharacter s;
  s.coeffs.reserve(m);
  s.coeffs.emplace_back(1);
  s.coeffs.insert(s.coeffs.end(), x.begin(), x.end());

  long n = 0;
  for (const auto& orbit : rt.row_orbits) {
    n += static_cast<long>(orbit.size());
  }
  s.complex_coeffs.assign(n, Integer(0));
  for (long i = 0; i < m; ++i) {
    for (const long k : rt.row_orbits[i]) {
      s.complex_coeffs[k] = s.coeffs[i];
    }
  }

  std::vector<Cyclotomic> coeff_values;
  coeff_values.reserve(m);
  for (long i = 0; i < m; ++i) {
    coeff_values.emplace_back(Rational(s.coeffs[i]));
  }

  std::vector<Cyclotomic> column_values(m);
  for (long j = 0; j < m; ++j) {
    Cyclotomic acc;
    for (long i = 0; i < m; ++i) {
      if (s.coeffs[i] == 0) {
        continue;
      }
      acc += coeff_values[i] * rt.V[i][j];
    }
    if (real_sign(acc) < 0) {
      throw std::domain_error(
          "not an S-character: negative value " + acc.str() + " at class " +
          std::to_string(rt.column_classes[j].front()));
    }
    column_values[j] = std::move(acc);
  }

  const long class_count = static_cast<long>(rt.class_to_column.size());
  s.values.reserve(class_count);
  for (long c = 0; c < class_count; ++c) {
    s.values.push_back(column_values[rt.class_to_column[c]]);
  }

  s.is_trivial = true;
  s.is_ordinary = true;
  for (long i = 1; i < m; ++i) {
    if (s.coeffs[i] != 0) {
      s.is_trivial = false;
    }
    if (s.coeffs[i] < 0) {
      s.is_ordinary = false;
    }
  }

  for (long c = 0; c < class_count; ++c) {
    if (s.values[c].is_zero()) {
      s.zero_classes.push_back(c);
    }
  }

  std::vector<char> prime_power_column(m, 0);
  for (const long j : rt.prime_power_columns) {
    prime_power_column[j] = 1;
  }
  s.positive_on_prime_power = true;
  for (const long c : s.zero_classes) {
    if (c == 0) {
      if (include_identity) {
        s.positive_on_prime_power = false;
        break;
      }
      continue;
    }
    if (prime_power_column[rt.class_to_column[c]]) {
      s.positive_on_prime_power = false;
      break;
    }
  }

  // A class lies in the kernel of a real row exactly when the row value
  // there equals the degree entry, and then it lies in the kernel of every
  // complex constituent of that row.  Merged classes share a column, so it
  // suffices to find, for each non-identity column, a nonzero-coefficient
  // row whose value differs from its degree.
  s.is_faithful = true;
  for (long j = 1; j < m; ++j) {
    bool separated = false;
    for (long i = 1; i < m; ++i) {
      if (s.coeffs[i] != 0 && rt.V[i][j] != rt.V[i][0]) {
        separated = true;
        break;
      }
    }
    if (!separated) {
      s.is_faithful = false;
      break;
    }
  }
  return s;
}

FusionMap parse_fusion(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw std::runtime_error("malformed JSON: top level must be an object");
  }

  FusionMap fm;
  const json& from = require_field(doc, "from", "fusion");
  if (!from.is_string()) {
    throw std::runtime_error("fusion: field \"from\" must be a string");
  }
  fm.source = from.get<std::string>();
  const json& to = require_field(doc, "to", "fusion");
  if (!to.is_string()) {
    throw std::runtime_error("fusion: field \"to\" must be a string");
  }
  fm.target = to.get<std::string>();

  const json& map = require_field(doc, "map", "fusion");
  if (!map.is_array() || map.empty()) {
    throw std::runtime_error("fusion: field \"map\" must be a non-empty array");
  }
  for (std::size_t c = 0; c < map.size(); ++c) {
    if (!map[c].is_number_integer() || map[c].get<long>() < 0) {
      throw std::runtime_error("fusion: map[" + std::to_string(c) +
                               "] must be a non-negative integer");
    }
    fm.class_map.push_back(map[c].get<long>());
  }
  return fm;
}

FusionMap parse_fusion_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_fusion(buffer.str());
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void validate_fusion(const FusionMap& fm, const CharacterTable& tG,
                     const CharacterTable& tF) {
  if (fm.source != tG.name) {
    throw std::invalid_argument("invalid fusion: source \"" + fm.source +
                                "\" does not name the table \"" + tG.name +
                                "\"");
  }
  if (fm.target != tF.name) {
    throw std::invalid_argument("invalid fusion: target \"" + fm.target +
                                "\" does not name the table \"" + tF.name +
                                "\"");
  }
  if (static_cast<long>(fm.class_map.size()) != tG.size()) {
    throw std::invalid_argument(
        "invalid fusion: map covers " + std::to_string(fm.class_map.size()) +
        " classes, expected " + std::to_string(tG.size()));
  }
  if (tG.group_order % tF.group_order != 0) {
    throw std::invalid_argument(
        "invalid fusion: target order does not divide source order");
  }
  for (long c = 0; c < tG.size(); ++c) {
    if (fm.class_map[c] >= tF.size()) {
      throw std::invalid_argument("invalid fusion: map[" + std::to_string(c) +
                                  "] is out of range");
    }
  }
  if (fm.class_map[0] != 0) {
    throw std::invalid_argument(
        "invalid fusion: identity class must map to the identity class");
  }

  const Integer kernel_order = tG.group_order / tF.group_order;
  std::vector<Integer> fibre_size(tF.size(), Integer(0));
  for (long c = 0; c < tG.size(); ++c) {
    fibre_size[fm.class_map[c]] += tG.classes[c].size;
  }
  for (long f = 0; f < tF.size(); ++f) {
    const Integer expected = kernel_order * tF.classes[f].size;
    if (fibre_size[f] != expected) {
      throw std::invalid_argument(
          "invalid fusion: classes fusing to " + tF.classes[f].name +
          " have total size " + fibre_size[f].get_str() + ", expected " +
          expected.get_str());
    }
  }
}

std::vector<Cyclotomic> project(const std::vector<Cyclotomic>& values_on_G,
                                const FusionMap& fm, const CharacterTable& tG,
                                const CharacterTable& tF) {
  validate_fusion(fm, tG, tF);
  if (static_cast<long>(values_on_G.size()) != tG.size()) {
    throw std::invalid_argument("class function has wrong number of values");
  }

  std::vector<Cyclotomic> result(tF.size());
  for (long f = 0; f < tF.size(); ++f) {
    Cyclotomic acc;
    for (long c = 0; c < tG.size(); ++c) {
      if (fm.class_map[c] != f) {
        continue;
      }
      acc += Cyclotomic(Rational(tG.classes[c].size)) * values_on_G[c];
    }
    Rational scale(tF.group_order, tF.classes[f].size * tG.group_order);
    scale.canonicalize();
    result[f] = acc * Cyclotomic(scale);
  }
  return result;
}

SCharacter product_schar(const CharacterTable& t, long i) {
  if (i < 0 || i >= t.size()) {
    throw std::out_of_range("irreducible index out of range: " +
                            std::to_string(i));
  }

  std::vector<Cyclotomic> values;
  values.reserve(t.size());
  for (long c = 0; c < t.size(); ++c) {
    values.push_back(t.irreducibles[i][c] * t.irreducibles[i][c].conjugate());
  }
  const std::vector<Integer> multiplicities = decompose(t, values);

  const RealCharacterTable rt = realify(t);
  std::vector<Integer> x;
  x.reserve(rt.m() - 1);
  for (long row = 0; row < rt.m(); ++row) {
    const Integer& first = multiplicities[rt.row_orbits[row][0]];
    for (const long k : rt.row_orbits[row]) {
      if (multiplicities[k] != first) {
        throw std::runtime_error(
            "corrupt table: conjugate characters occur with different "
            "multiplicities");
      }
    }
    if (row == 0) {
      if (first != 1) {
        throw std::runtime_error(
            "corrupt table: trivial constituent multiplicity is " +
            first.get_str());
      }
    } else {
      x.push_back(first);
    }
  }
  return decode(x, rt);
}

}  // namespace schar
