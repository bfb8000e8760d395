#include "schar/character_table.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace schar {

namespace {

using nlohmann::json;

const json& require_field(const json& j, const char* field, const std::string& where) {
  auto it = j.find(field);
  if (it == j.end()) {
    throw std::runtime_error(where + ": missing field \"" + field + "\"");
  }
  return *it;
}

long require_positive(const json& j, const char* field, const std::string& where) {
  const json& v = require_field(j, field, where);
  if (!v.is_number_integer() || v.get<long>() <= 0) {
    throw std::runtime_error(where + ": field \"" + field +
                             "\" must be a positive integer");
  }
  return v.get<long>();
}

Rational parse_rational(const json& v, const std::string& where) {
  if (v.is_number_integer()) {
    return Rational(v.get<long>());
  }
  if (v.is_string()) {
    try {
      return rational_from_string(v.get<std::string>());
    } catch (const std::exception& e) {
      throw std::runtime_error(where + ": " + e.what());
    }
  }
  throw std::runtime_error(where + ": expected an integer or a rational string");
}

Cyclotomic parse_value(const json& v, long row, long col) {
  std::ostringstream os;
  os << "irreducibles[" << row << "][" << col << "]";
  const std::string where = os.str();
  if (v.is_number_integer() || v.is_string()) {
    return Cyclotomic(parse_rational(v, where));
  }
  if (v.is_object()) {
    long n = require_positive(v, "n", where);
    const json& terms = require_field(v, "terms", where);
    if (!terms.is_array()) {
      throw std::runtime_error(where + ": \"terms\" must be an array");
    }
    std::vector<std::pair<long, Rational>> parsed;
    for (const json& term : terms) {
      if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer()) {
        throw std::runtime_error(where +
                                 ": each term must be [exponent, coefficient]");
      }
      parsed.emplace_back(term[0].get<long>(), parse_rational(term[1], where));
    }
    return Cyclotomic::from_terms(n, parsed);
  }
  throw std::runtime_error(where + ": unsupported value type");
}

}  // namespace

CharacterTable parse_table(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw std::runtime_error("malformed JSON: top level must be an object");
  }

  CharacterTable t;
  const json& name = require_field(doc, "name", "table");
  if (!name.is_string()) {
    throw std::runtime_error("table: field \"name\" must be a string");
  }
  t.name = name.get<std::string>();
  t.group_order = Integer(require_positive(doc, "order", "table"));

  const json& classes = require_field(doc, "classes", "table");
  if (!classes.is_array() || classes.empty()) {
    throw std::runtime_error("classes: must be a non-empty array");
  }
  for (std::size_t c = 0; c < classes.size(); ++c) {
    std::ostringstream os;
    os << "classes[" << c << "]";
    const std::string where = os.str();
    const json& entry = classes[c];
    if (!entry.is_object()) {
      throw std::runtime_error(where + ": must be an object");
    }
    ConjugacyClass cc;
    const json& cname = require_field(entry, "name", where);
    if (!cname.is_string()) {
      throw std::runtime_error(where + ": field \"name\" must be a string");
    }
    cc.name = cname.get<std::string>();
    cc.size = Integer(require_positive(entry, "size", where));
    cc.element_order = require_positive(entry, "order", where);
    t.classes.push_back(std::move(cc));
  }
  if (t.classes[0].element_order != 1 || t.classes[0].size != 1) {
    throw std::runtime_error("classes[0]: identity class must come first");
  }

  const json& rows = require_field(doc, "irreducibles", "table");
  const std::size_t n = t.classes.size();
  if (!rows.is_array() || rows.size() != n) {
    std::ostringstream os;
    os << "irreducibles: expected a square " << n << "x" << n << " matrix";
    throw std::runtime_error(os.str());
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) {
      std::ostringstream os;
      os << "irreducibles[" << i << "]: expected " << n << " values";
      throw std::runtime_error(os.str());
    }
    std::vector<Cyclotomic> row;
    row.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
      row.push_back(parse_value(rows[i][j], static_cast<long>(i),
                                static_cast<long>(j)));
    }
    t.irreducibles.push_back(std::move(row));
  }
  return t;
}

CharacterTable parse_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_table(buffer.str());
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

bool is_prime_power_or_one(long n) {
  if (n < 1) {
    return false;
  }
  if (n == 1) {
    return true;
  }
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) {
        n /= p;
      }
      return n == 1;
    }
  }
  return true;  // n itself is prime
}

ValidationReport validate(const CharacterTable& t) {
  ValidationReport report;
  const long n = t.size();
  auto add = [&report](std::string rule, long row, long col, std::string detail) {
    report.violations.push_back({std::move(rule), row, col, std::move(detail)});
  };

  Integer size_sum = 0;
  for (long c = 0; c < n; ++c) {
    const ConjugacyClass& cc = t.classes[c];
    size_sum += cc.size;
    if (t.group_order % cc.size != 0) {
      add("class-size-divides", -1, c,
          "class " + cc.name + " size does not divide the group order");
    }
    if (t.group_order % Integer(cc.element_order) != 0) {
      add("element-order-divides", -1, c,
          "class " + cc.name + " element order does not divide the group order");
    }
  }
  if (size_sum != t.group_order) {
    add("size-sum", -1, -1, "class sizes sum to " + size_sum.get_str() +
                                ", expected " + t.group_order.get_str());
  }

  const Cyclotomic one(Rational(1));
  for (long c = 0; c < n; ++c) {
    if (t.irreducibles[0][c] != one) {
      add("first-row-ones", 0, c, "trivial character value is not 1");
    }
  }

  Integer degree_square_sum = 0;
  for (long i = 0; i < n; ++i) {
    const auto deg = t.irreducibles[i][0].as_rational();
    if (!deg || !is_integer(*deg) || *deg <= 0) {
      add("degree-positive-integer", i, 0,
          "degree is not a positive integer: " + t.irreducibles[i][0].str());
      continue;
    }
    degree_square_sum += deg->get_num() * deg->get_num();
  }
  if (degree_square_sum != t.group_order) {
    add("degree-square-sum", -1, -1,
        "degree squares sum to " + degree_square_sum.get_str() + ", expected " +
            t.group_order.get_str());
  }

  // Row orthogonality: (1/|G|) sum_c |c| chi_i(c) conj(chi_j(c)) = delta_ij.
  const Cyclotomic order_value{Rational(t.group_order)};
  for (long i = 0; i < n; ++i) {
    for (long j = i; j < n; ++j) {
      Cyclotomic acc;
      for (long c = 0; c < n; ++c) {
        acc += Cyclotomic(Rational(t.classes[c].size)) * t.irreducibles[i][c] *
               t.irreducibles[j][c].conjugate();
      }
      const Cyclotomic expected = (i == j) ? order_value : Cyclotomic();
      if (acc != expected) {
        add("row-orthogonality", i, j,
            "scalar product of rows " + std::to_string(i) + ", " +
                std::to_string(j) + " is " + acc.str() + "/" +
                t.group_order.get_str());
      }
    }
  }

  // Column orthogonality: sum_i chi_i(c) conj(chi_i(d)) = delta_cd |G|/|c|.
  for (long c = 0; c < n; ++c) {
    for (long d = c; d < n; ++d) {
      Cyclotomic acc;
      for (long i = 0; i < n; ++i) {
        acc += t.irreducibles[i][c] * t.irreducibles[i][d].conjugate();
      }
      Cyclotomic expected;
      if (c == d) {
        Rational centralizer(t.group_order, t.classes[c].size);
        centralizer.canonicalize();
        expected = Cyclotomic(centralizer);
      }
      if (acc != expected) {
        add("column-orthogonality", c, d,
            "scalar product of classes " + t.classes[c].name + ", " +
                t.classes[d].name + " is " + acc.str());
      }
    }
  }
  return report;
}

namespace {

long mulmod(long a, long b, long m) {
  return static_cast<long>(static_cast<__int128>(a) * b % m);
}

long powmod(long base, long exp, long m) {
  long result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) {
      result = mulmod(result, base, m);
    }
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::vector<std::pair<long, int>> factorize_long(long n) {
  std::vector<std::pair<long, int>> factors;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      int v = 0;
      while (n % p == 0) {
        n /= p;
        ++v;
      }
      factors.emplace_back(p, v);
    }
  }
  if (n > 1) {
    factors.emplace_back(n, 1);
  }
  return factors;
}

long primitive_root_mod_p(long p) {
  if (p == 2) {
    return 1;
  }
  const auto factors = factorize_long(p - 1);
  for (long g = 2; g < p; ++g) {
    bool ok = true;
    for (const auto& [q, v] : factors) {
      (void)v;
      if (powmod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      return g;
    }
  }
  throw std::logic_error("no primitive root found");
}

long inverse_mod(long a, long m) {
  long t = 0, new_t = 1, r = m, new_r = ((a % m) + m) % m;
  while (new_r != 0) {
    long q = r / new_r;
    std::swap(t -= q * new_t, new_t);
    std::swap(r -= q * new_r, new_r);
  }
  if (r != 1) {
    throw std::logic_error("element not invertible");
  }
  return ((t % m) + m) % m;
}

// x with x = g (mod q) and x = 1 (mod n/q), for q a prime power factor of n.
long crt_lift(long g, long q, long n) {
  const long rest = n / q;
  if (rest == 1) {
    return ((g % n) + n) % n;
  }
  const long t = mulmod(((g - 1) % q + q) % q, inverse_mod(rest, q), q);
  return (1 + mulmod(rest % n, t, n)) % n;
}

// Generators of the unit group (Z/n)^*, n > 1.
std::vector<long> unit_group_generators(long n) {
  std::vector<long> gens;
  for (const auto& [p, v] : factorize_long(n)) {
    long q = 1;
    for (int i = 0; i < v; ++i) {
      q *= p;
    }
    if (p == 2) {
      if (v >= 2) {
        gens.push_back(crt_lift(q - 1, q, n));
      }
      if (v >= 3) {
        gens.push_back(crt_lift(3, q, n));
      }
    } else {
      long g = primitive_root_mod_p(p);
      if (v >= 2 && powmod(g, p - 1, p * p) == 1) {
        g += p;
      }
      gens.push_back(crt_lift(g, q, n));
    }
  }
  return gens;
}

}  // namespace

long galois_orbit_count(const CharacterTable& t) {
  const long n = t.size();
  long big_n = 1;
  for (const auto& row : t.irreducibles) {
    for (const auto& v : row) {
      const long c = v.conductor();
      const long g = std::gcd(big_n, c);
      big_n = big_n / g * c;
    }
  }
  if (big_n == 1) {
    return n;
  }

  std::map<std::vector<Cyclotomic>, long> row_index;
  for (long i = 0; i < n; ++i) {
    row_index.emplace(t.irreducibles[i], i);
  }

  std::vector<long> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<long(long)> find = [&](long x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };

  for (const long k : unit_group_generators(big_n)) {
    for (long i = 0; i < n; ++i) {
      std::vector<Cyclotomic> image;
      image.reserve(n);
      for (const Cyclotomic& v : t.irreducibles[i]) {
        image.push_back(v.galois(k));
      }
      const auto it = row_index.find(image);
      if (it == row_index.end()) {
        throw std::runtime_error(
            "galois image of a character is not a row of the table");
      }
      parent[find(i)] = find(it->second);
    }
  }

  long orbits = 0;
  for (long i = 0; i < n; ++i) {
    if (find(i) == i) {
      ++orbits;
    }
  }
  return orbits;
}

std::vector<Integer> decompose(const CharacterTable& t,
                               const std::vector<Cyclotomic>& values) {
  const long n = t.size();
  if (static_cast<long>(values.size()) != n) {
    throw std::invalid_argument("class function has wrong number of values");
  }
  Rational inv_order(Integer(1), t.group_order);
  inv_order.canonicalize();
  std::vector<Integer> coeffs;
  coeffs.reserve(n);
  for (long i = 0; i < n; ++i) {
    Cyclotomic acc;
    for (long c = 0; c < n; ++c) {
      acc += Cyclotomic(Rational(t.classes[c].size)) * values[c] *
             t.irreducibles[i][c].conjugate();
    }
    acc *= Cyclotomic(inv_order);
    const auto r = acc.as_rational();
    if (!r || !is_integer(*r)) {
      throw std::domain_error("not a virtual character: coefficient of row " +
                              std::to_string(i) + " is " + acc.str());
    }
    coeffs.push_back(r->get_num());
  }
  return coeffs;
}

}  // namespace schar
