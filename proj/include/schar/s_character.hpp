#pragma once

#include "schar/character_table.hpp"
#include "schar/real_table.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace schar {

/// A virtual character containing the trivial character exactly once whose
/// values are all non-negative real, together with classification flags.
///
/// `coeffs` lives over the rows of the real table (coeffs[0] == 1);
/// `complex_coeffs` expands it to the complex irreducibles, so a merged
/// conjugate pair shares one coefficient.  `values` holds one value per
/// conjugacy class of the original table (merged columns duplicated back).
struct SCharacter {
  std::vector<Integer> coeffs;
  std::vector<Integer> complex_coeffs;
  std::vector<Cyclotomic> values;
  bool is_trivial = false;              // coeffs == (1, 0, ..., 0)
  bool is_ordinary = false;             // all coeffs >= 0, i.e. a character
  bool is_faithful = false;             // kernels of the constituents with
                                        // nonzero coefficient intersect
                                        // trivially
  std::vector<long> zero_classes;       // classes with value exactly zero
  bool positive_on_prime_power = false; // no zero class of prime power
                                        // element order
};

/// Decode a lattice point x (length m-1; the leading coefficient 1 is
/// implicit) into an SCharacter over the given real table.  Values are
/// checked to be non-negative with exact signs; a negative value raises
/// std::domain_error.  `include_identity` controls whether the identity
/// class (element order 1) counts as having prime power order when
/// computing positive_on_prime_power.
SCharacter decode(const std::vector<Integer>& x, const RealCharacterTable& rt,
                  bool include_identity = true);

/// Class fusion induced by a surjection G ->> F on conjugacy classes:
/// class_map[c] is the index of the F-class that the G-class c maps to.
struct FusionMap {
  std::string source;           // name of the big table (G)
  std::string target;           // name of the quotient table (F)
  std::vector<long> class_map;  // length = number of classes of G
};

/// Parse a fusion map from JSON text of the shape
///   {"from": str, "to": str, "map": [int, ...]}.
/// Throws std::runtime_error naming the offending field on malformed input.
FusionMap parse_fusion(const std::string& json_text);

/// Parse a fusion map from a JSON file on disk.
FusionMap parse_fusion_file(const std::string& path);

/// Check a fusion map against its two tables.  Throws std::invalid_argument
/// if the names do not match, the map length or an index is out of range,
/// the identity class does not map to the identity, |F| does not divide
/// |G|, or some fibre violates the size identity
///   sum of |c| over classes c of G fusing to f  =  (|G| / |F|) * |f|.
void validate_fusion(const FusionMap& fm, const CharacterTable& tG,
                     const CharacterTable& tF);

/// Carry a class function on G down to the quotient F by fusion-weighted
/// averaging: the value at an F-class f is
///   (|F| / (|f| * |G|)) * sum over G-classes c fusing to f of |c| * phi(c).
/// The fusion map is validated first.  Irreducible characters of G map to
/// irreducible characters of F or to zero; S-characters map to S-characters.
std::vector<Cyclotomic> project(const std::vector<Cyclotomic>& values_on_G,
                                const FusionMap& fm, const CharacterTable& tG,
                                const CharacterTable& tF);

/// The product chi_i * conjugate(chi_i) of the i-th irreducible (0-based)
/// decomposed back into an SCharacter.  The result is always a lattice point
/// of the simplex; a decomposition failure signals a corrupt table.
SCharacter product_schar(const CharacterTable& t, long i);

/// Columns at which "nonzero at prime power element order" sharpens to the
/// constraint "value >= 1": the prime power columns whose entries are all
/// rational (values there are rational algebraic integers, hence integers).
/// include_identity = false drops the identity column.
std::vector<long> strengthenable_columns(const RealCharacterTable& rt,
                                         bool include_identity = true);

struct SearchOptions {
  bool strengthen = true;        // pre-impose value >= 1 at rational prime
                                 // power columns during enumeration
  bool include_identity = true;  // identity class counts as prime power order
  bool faithful_only = true;     // keep only faithful hits
  bool ordinary_only = false;    // keep only ordinary (non-virtual) hits
  bool count_all_points = false; // force a full enumeration and record the
                                 // total number of lattice points
  int threads = 1;               // enumeration workers
  std::optional<long> limit = std::nullopt;  // abort enumeration beyond this
                                             // many points (LimitExceeded)
};

/// Result of a full search over one table.
struct SearchReport {
  std::string group;
  long class_count = 0;     // number of conjugacy classes (= irreducibles)
  long real_count = 0;      // number of real irreducible characters
  long rational_count = 0;  // number of rational irreducible characters
  std::optional<long> lattice_point_total;  // set iff count_all_points
  std::vector<SCharacter> hits;  // lexicographic by coeffs
  long virtual_hit_count = 0;    // hits that are not ordinary characters
  std::map<std::string, double> timings_ms;  // phase -> elapsed milliseconds
};

/// Run the search pipeline: fold the table to its real form, build the
/// simplex, enumerate its lattice points (optionally strengthened at the
/// rational prime power columns), decode each point and keep the non-trivial
/// S-characters that vanish on no class of prime power element order,
/// applying the faithful/ordinary filters from the options.  Positivity at
/// irrational prime power columns is always enforced by the decode-side
/// filter, so strengthening never changes the hit set.  A limit overrun
/// propagates as LimitExceeded.
SearchReport search(const CharacterTable& t, const SearchOptions& options = {});

}  // namespace schar
