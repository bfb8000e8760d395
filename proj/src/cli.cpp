#include "schar/cli.hpp"

#include "schar/character_table.hpp"
#include "schar/lattice.hpp"
#include "schar/real_table.hpp"
#include "schar/s_character.hpp"
#include "schar/simplex.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace schar {

namespace {

using ojson = nlohmann::ordered_json;

std::string resolve_table_path(const std::string& arg) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (fs::exists(arg, ec)) {
    return arg;
  }
  if (const char* dir = std::getenv("SCHAR_CORPUS_DIR")) {
    const fs::path base(dir);
    for (const fs::path& candidate : {base / arg, base / (arg + ".json")}) {
      if (fs::exists(candidate, ec)) {
        return candidate.string();
      }
    }
  }
  return arg;  // let the file parser report the failure
}

ojson integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) {
    return z.get_si();
  }
  return z.get_str();
}

ojson rational_to_json(const Rational& q) {
  if (is_integer(q)) {
    return integer_to_json(q.get_num());
  }
  return q.get_str();
}

/// Values are serialized in the same shape the table parser accepts: an
/// integer, a rational string "a/b", or {"n": conductor, "terms": [...]}.
ojson value_to_json(const Cyclotomic& v) {
  if (const auto r = v.as_rational()) {
    return rational_to_json(*r);
  }
  ojson terms = ojson::array();
  for (const auto& [exponent, coefficient] : v.terms()) {
    terms.push_back(ojson::array({exponent, rational_to_json(coefficient)}));
  }
  return ojson{{"n", v.conductor()}, {"terms", std::move(terms)}};
}

template <typename Sequence>
ojson integers_to_json(const Sequence& xs) {
  ojson out = ojson::array();
  for (const auto& x : xs) {
    out.push_back(integer_to_json(x));
  }
  return out;
}

ojson values_to_json(const std::vector<Cyclotomic>& values) {
  ojson out = ojson::array();
  for (const Cyclotomic& v : values) {
    out.push_back(value_to_json(v));
  }
  return out;
}

template <typename Sequence>
std::string join_integers(const Sequence& xs) {
  std::ostringstream os;
  bool first = true;
  for (const auto& x : xs) {
    if (!first) {
      os << ' ';
    }
    os << x.get_str();
    first = false;
  }
  return os.str();
}

std::string join_values(const std::vector<Cyclotomic>& values) {
  std::ostringstream os;
  bool first = true;
  for (const Cyclotomic& v : values) {
    if (!first) {
      os << ' ';
    }
    os << v.str();
    first = false;
  }
  return os.str();
}

void emit(std::ostream& out, const ojson& report) {
  out << report.dump(2) << "\n";
}

struct TableBundle {
  CharacterTable table;
  RealCharacterTable real;
};

TableBundle load_table(const std::string& arg) {
  TableBundle bundle;
  bundle.table = parse_table_file(resolve_table_path(arg));
  bundle.real = realify(bundle.table);
  return bundle;
}

int run_validate(const std::string& path, const std::string& format,
                 std::ostream& out) {
  const CharacterTable t = parse_table_file(resolve_table_path(path));
  const ValidationReport report = validate(t);
  if (format == "json") {
    ojson violations = ojson::array();
    for (const Violation& v : report.violations) {
      violations.push_back(ojson{{"rule", v.rule},
                                 {"row", v.row},
                                 {"col", v.col},
                                 {"detail", v.detail}});
    }
    emit(out, ojson{{"table", t.name},
                    {"valid", report.ok()},
                    {"violations", std::move(violations)}});
  } else {
    if (report.ok()) {
      out << t.name << ": valid character table\n";
    } else {
      out << t.name << ": " << report.violations.size() << " violation(s)\n";
      for (const Violation& v : report.violations) {
        out << "  " << v.rule << " (row " << v.row << ", col " << v.col
            << "): " << v.detail << "\n";
      }
    }
  }
  return report.ok() ? 0 : 1;
}

int run_info(const std::string& path, const std::string& format,
             std::ostream& out) {
  const TableBundle bundle = load_table(path);
  const long rational = galois_orbit_count(bundle.table);
  if (format == "json") {
    emit(out, ojson{{"name", bundle.table.name},
                    {"order", integer_to_json(bundle.table.group_order)},
                    {"class_count", bundle.table.size()},
                    {"real_count", bundle.real.m()},
                    {"rational_count", rational}});
  } else {
    out << bundle.table.name << ": order "
        << bundle.table.group_order.get_str() << ", " << bundle.table.size()
        << " classes, " << bundle.real.m() << " real, " << rational
        << " rational\n";
  }
  return 0;
}

int run_simplex(const std::string& path, const std::string& format,
                std::ostream& out) {
  const TableBundle bundle = load_table(path);
  const SSimplex simplex = simplex_from_table(bundle.real);
  closed_form_vertices(bundle.real);  // independent cross-check of the solve
  const PolaritySuite polarity = polarity_suite(simplex);
  if (format == "json") {
    ojson vertices = ojson::array();
    for (const auto& vertex : simplex.vertices) {
      vertices.push_back(values_to_json(vertex));
    }
    ojson normals = ojson::array();
    for (const auto& normal : simplex.facet_normals) {
      normals.push_back(values_to_json(normal));
    }
    emit(out, ojson{{"group", bundle.table.name},
                    {"dim", simplex.dim},
                    {"vertices", std::move(vertices)},
                    {"facet_normals", std::move(normals)},
                    {"polarity",
                     ojson{{"is_lattice", polarity.is_lattice},
                           {"is_reflexive", polarity.is_reflexive},
                           {"is_self_polar", polarity.is_self_polar}}}});
  } else {
    const auto yesno = [](bool b) { return b ? "yes" : "no"; };
    out << bundle.table.name << ": simplex of dimension " << simplex.dim
        << " with " << simplex.vertices.size() << " vertices\n";
    out << "lattice: " << yesno(polarity.is_lattice)
        << "  reflexive: " << yesno(polarity.is_reflexive)
        << "  self-polar: " << yesno(polarity.is_self_polar) << "\n";
    for (std::size_t j = 0; j < simplex.vertices.size(); ++j) {
      out << "vertex " << j << ": " << join_values(simplex.vertices[j])
          << "\n";
    }
  }
  return 0;
}

struct EnumerateArgs {
  std::string path;
  std::string format = "text";
  bool strengthen = false;
  bool oracle = false;
  int threads = 1;
  std::optional<long> limit;
};

int run_enumerate(const EnumerateArgs& args, std::ostream& out) {
  const TableBundle bundle = load_table(args.path);
  ConstraintSystem cs =
      constraint_system(simplex_from_table(bundle.real));
  if (args.strengthen) {
    cs = strengthen(cs, strengthenable_columns(bundle.real));
  }
  EnumerateOptions options;
  options.threads = args.threads;
  options.limit = args.limit;
  const auto points = enumerate_points(cs, options);

  std::optional<bool> oracle_agrees;
  if (args.oracle) {
    oracle_agrees = (points == brute_force(cs));
  }

  if (args.format == "json") {
    ojson report{{"group", bundle.table.name},
                 {"dim", cs.dim()},
                 {"strengthened", args.strengthen},
                 {"count", static_cast<long>(points.size())}};
    if (oracle_agrees) {
      report["oracle_agrees"] = *oracle_agrees;
    }
    ojson list = ojson::array();
    for (const auto& point : points) {
      list.push_back(integers_to_json(point));
    }
    report["points"] = std::move(list);
    emit(out, report);
  } else {
    out << bundle.table.name << ": " << points.size() << " lattice point"
        << (points.size() == 1 ? "" : "s")
        << (args.strengthen ? " (strengthened)" : "") << "\n";
    if (oracle_agrees) {
      out << "oracle agrees: " << (*oracle_agrees ? "yes" : "no") << "\n";
    }
    for (const auto& point : points) {
      out << join_integers(point) << "\n";
    }
  }
  return (oracle_agrees && !*oracle_agrees) ? 1 : 0;
}

struct SearchArgs {
  std::string path;
  std::string format = "text";
  bool timings = false;
  SearchOptions options;
};

ojson hit_to_json(const SCharacter& hit, const CharacterTable& t) {
  ojson names = ojson::array();
  for (const long c : hit.zero_classes) {
    names.push_back(t.classes[c].name);
  }
  return ojson{{"coeffs", integers_to_json(hit.coeffs)},
               {"complex_coeffs", integers_to_json(hit.complex_coeffs)},
               {"values", values_to_json(hit.values)},
               {"is_ordinary", hit.is_ordinary},
               {"is_faithful", hit.is_faithful},
               {"zero_classes", hit.zero_classes},
               {"zero_class_names", std::move(names)}};
}

void search_table_row(std::ostream& out, const SearchReport& report) {
  out << std::left << std::setw(10) << "group" << std::right << std::setw(8)
      << "classes" << std::setw(6) << "real" << std::setw(10) << "rational"
      << std::setw(9) << "S-char." << std::setw(7) << "virt." << "\n";
  out << std::left << std::setw(10) << report.group << std::right
      << std::setw(8) << report.class_count << std::setw(6)
      << report.real_count << std::setw(10) << report.rational_count
      << std::setw(9) << report.hits.size() << std::setw(7)
      << report.virtual_hit_count << "\n";
}

int run_search(const SearchArgs& args, std::ostream& out) {
  const TableBundle bundle = load_table(args.path);
  const SearchReport report = search(bundle.table, args.options);

  if (args.format == "json") {
    ojson doc{{"group", report.group},
              {"class_count", report.class_count},
              {"real_count", report.real_count},
              {"rational_count", report.rational_count},
              {"lattice_point_total",
               report.lattice_point_total
                   ? ojson(*report.lattice_point_total)
                   : ojson(nullptr)},
              {"hit_count", static_cast<long>(report.hits.size())},
              {"virtual_hit_count", report.virtual_hit_count}};
    ojson hits = ojson::array();
    for (const SCharacter& hit : report.hits) {
      hits.push_back(hit_to_json(hit, bundle.table));
    }
    doc["hits"] = std::move(hits);
    if (args.timings) {
      ojson timings;
      for (const auto& [phase, ms] : report.timings_ms) {
        timings[phase] = ms;
      }
      doc["timings_ms"] = std::move(timings);
    }
    emit(out, doc);
  } else {
    search_table_row(out, report);
    for (std::size_t h = 0; h < report.hits.size(); ++h) {
      const SCharacter& hit = report.hits[h];
      out << "\nhit " << h + 1 << ": "
          << (hit.is_ordinary ? "ordinary" : "virtual") << ", "
          << (hit.is_faithful ? "faithful" : "not faithful") << "\n";
      out << "  coefficients: " << join_integers(hit.complex_coeffs) << "\n";
      out << "  real basis:   " << join_integers(hit.coeffs) << "\n";
      out << "  values: " << join_values(hit.values) << "\n";
      out << "  zeros at:";
      for (const long c : hit.zero_classes) {
        out << " " << bundle.table.classes[c].name;
      }
      out << "\n";
    }
    if (report.lattice_point_total) {
      out << "\nlattice points: " << *report.lattice_point_total << "\n";
    }
    if (args.timings) {
      out << "\ntimings:";
      for (const auto& [phase, ms] : report.timings_ms) {
        out << " " << phase << " " << std::fixed << std::setprecision(1) << ms
            << "ms";
      }
      out << "\n";
    }
  }
  return 0;
}

struct ProjectArgs {
  std::string source_path;
  std::string target_path;
  std::string fusion_path;
  std::string format = "text";
  bool irreducibles = false;
  int threads = 1;
  std::optional<long> limit;
};

int run_project(const ProjectArgs& args, std::ostream& out) {
  const TableBundle source = load_table(args.source_path);
  const TableBundle target = load_table(args.target_path);
  const FusionMap fm = parse_fusion_file(args.fusion_path);
  validate_fusion(fm, source.table, target.table);

  if (args.irreducibles) {
    ojson images = ojson::array();
    std::vector<std::string> lines;
    for (long i = 0; i < source.table.size(); ++i) {
      const auto projected =
          project(source.table.irreducibles[i], fm, source.table, target.table);
      const bool zero =
          std::all_of(projected.begin(), projected.end(),
                      [](const Cyclotomic& v) { return v.is_zero(); });
      ojson row{{"row", i}};
      std::ostringstream line;
      line << "row " << i << " -> ";
      if (zero) {
        row["image"] = "zero";
        line << "zero";
      } else {
        long match = -1;
        for (long k = 0; k < target.table.size(); ++k) {
          if (projected == target.table.irreducibles[k]) {
            match = k;
            break;
          }
        }
        if (match >= 0) {
          row["image"] = match;
          line << "row " << match;
        } else {
          row["image"] = nullptr;
          row["values"] = values_to_json(projected);
          line << "no irreducible (values " << join_values(projected) << ")";
        }
      }
      images.push_back(std::move(row));
      lines.push_back(line.str());
    }
    if (args.format == "json") {
      emit(out, ojson{{"source", source.table.name},
                      {"target", target.table.name},
                      {"irreducible_images", std::move(images)}});
    } else {
      out << source.table.name << " -> " << target.table.name
          << ": irreducible images\n";
      for (const std::string& line : lines) {
        out << line << "\n";
      }
    }
    return 0;
  }

  SearchOptions options;
  options.threads = args.threads;
  options.limit = args.limit;
  const SearchReport report = search(source.table, options);
  ojson projections = ojson::array();
  std::vector<std::string> lines;
  for (const SCharacter& hit : report.hits) {
    const auto projected = project(hit.values, fm, source.table, target.table);
    const auto coefficients = decompose(target.table, projected);
    projections.push_back(ojson{{"values", values_to_json(projected)},
                                {"coeffs", integers_to_json(coefficients)}});
    std::ostringstream line;
    line << "values " << join_values(projected) << " ; coefficients "
         << join_integers(coefficients);
    lines.push_back(line.str());
  }
  if (args.format == "json") {
    emit(out, ojson{{"source", source.table.name},
                    {"target", target.table.name},
                    {"hit_count", static_cast<long>(report.hits.size())},
                    {"projections", std::move(projections)}});
  } else {
    out << source.table.name << " -> " << target.table.name << ": "
        << report.hits.size() << " hit(s) projected\n";
    for (std::size_t h = 0; h < lines.size(); ++h) {
      out << "hit " << h + 1 << ": " << lines[h] << "\n";
    }
  }
  return 0;
}

void add_format_option(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
}

void add_limit_option(CLI::App* cmd, std::optional<long>& limit) {
  cmd->add_option("--limit", limit,
                  "abort once the enumeration exceeds this many points")
      ->check(CLI::NonNegativeNumber);
}

void add_threads_option(CLI::App* cmd, int& threads) {
  cmd->add_option("--threads", threads, "enumeration worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact S-character toolkit: character table validation, "
               "simplex geometry, lattice point enumeration, search for "
               "S-characters without zeros of prime power order, and "
               "projection to quotient groups",
               "schar"};
  app.set_help_all_flag("--help-all", "print help for all subcommands");
  app.require_subcommand(1);

  std::string validate_path, validate_format = "text";
  CLI::App* cmd_validate =
      app.add_subcommand("validate", "check all character table invariants");
  cmd_validate->add_option("table", validate_path, "table file")->required();
  add_format_option(cmd_validate, validate_format);

  std::string info_path, info_format = "text";
  CLI::App* cmd_info = app.add_subcommand(
      "info", "class, real and rational irreducible counts");
  cmd_info->add_option("table", info_path, "table file")->required();
  add_format_option(cmd_info, info_format);

  std::string simplex_path, simplex_format = "text";
  CLI::App* cmd_simplex = app.add_subcommand(
      "simplex", "vertices, facet normals and polarity of the simplex");
  cmd_simplex->add_option("table", simplex_path, "table file")->required();
  add_format_option(cmd_simplex, simplex_format);

  EnumerateArgs enumerate_args;
  CLI::App* cmd_enumerate = app.add_subcommand(
      "enumerate", "enumerate the lattice points of the simplex");
  cmd_enumerate->add_option("table", enumerate_args.path, "table file")
      ->required();
  add_format_option(cmd_enumerate, enumerate_args.format);
  cmd_enumerate->add_flag(
      "--strengthen", enumerate_args.strengthen,
      "pre-impose value >= 1 at rational prime power columns");
  cmd_enumerate->add_flag("--oracle", enumerate_args.oracle,
                          "cross-check against the brute force engine "
                          "(small tables only)");
  add_threads_option(cmd_enumerate, enumerate_args.threads);
  add_limit_option(cmd_enumerate, enumerate_args.limit);

  SearchArgs search_args;
  CLI::App* cmd_search = app.add_subcommand(
      "search", "find S-characters without zeros of prime power order");
  cmd_search->add_option("table", search_args.path, "table file")->required();
  add_format_option(cmd_search, search_args.format);
  cmd_search->add_flag("--strengthen,!--no-strengthen",
                       search_args.options.strengthen,
                       "pre-impose value >= 1 at rational prime power "
                       "columns (default: on)");
  cmd_search->add_flag("--include-identity,!--no-include-identity",
                       search_args.options.include_identity,
                       "count order 1 as a prime power (default: on)");
  cmd_search->add_flag("--faithful-only,!--no-faithful-only",
                       search_args.options.faithful_only,
                       "keep only faithful hits (default: on)");
  cmd_search->add_flag("--ordinary-only", search_args.options.ordinary_only,
                       "keep only ordinary (non-virtual) hits");
  cmd_search->add_flag("--count-all", search_args.options.count_all_points,
                       "enumerate the whole simplex and report the total");
  cmd_search->add_flag("--timings", search_args.timings,
                       "include per-phase timings in the report");
  add_threads_option(cmd_search, search_args.options.threads);
  add_limit_option(cmd_search, search_args.options.limit);

  ProjectArgs project_args;
  CLI::App* cmd_project = app.add_subcommand(
      "project", "project search hits (or irreducibles) to a quotient");
  cmd_project->add_option("table", project_args.source_path, "table file")
      ->required();
  cmd_project
      ->add_option("quotient", project_args.target_path,
                   "quotient table file")
      ->required();
  cmd_project
      ->add_option("--fusion", project_args.fusion_path,
                   "class fusion file for the quotient map")
      ->required();
  add_format_option(cmd_project, project_args.format);
  cmd_project->add_flag("--irreducibles", project_args.irreducibles,
                        "project each irreducible instead of the search hits");
  add_threads_option(cmd_project, project_args.threads);
  add_limit_option(cmd_project, project_args.limit);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (cmd_validate->parsed()) {
      return run_validate(validate_path, validate_format, out);
    }
    if (cmd_info->parsed()) {
      return run_info(info_path, info_format, out);
    }
    if (cmd_simplex->parsed()) {
      return run_simplex(simplex_path, simplex_format, out);
    }
    if (cmd_enumerate->parsed()) {
      return run_enumerate(enumerate_args, out);
    }
    if (cmd_search->parsed()) {
      return run_search(search_args, out);
    }
    if (cmd_project->parsed()) {
      return run_project(project_args, out);
    }
    err << "error: no subcommand selected\n";
    return 1;
  } catch (const LimitExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace schar
