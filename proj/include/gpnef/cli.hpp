#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"  // vendored

#include "gpnef/dsl.hpp"
#include "gpnef/io.hpp"

namespace gpnef {

struct Query {
  CartanType type;
  std::vector<int> omitted;

  enum class Command { Describe, Curves, Restrict, Nef, Ample, Seshadri, ExportGkm };
  Command command = Command::Describe;

  std::string bundle_text;     // empty when the command takes no bundle
  std::string point_selector;  // "", "all", or a fixed point id

  enum class Output { Table, Json, Dot };
  Output output = Output::Table;

  std::uint64_t max_cosets = kDefaultCosetCap;
};

namespace detail {

// Raised when --help is requested; carries the rendered help text.
struct HelpRequested {
  std::string text;
};

inline const char* command_name(Query::Command c) {
  switch (c) {
    case Query::Command::Describe:
      return "describe";
    case Query::Command::Curves:
      return "curves";
    case Query::Command::Restrict:
      return "restrict";
    case Query::Command::Nef:
      return "nef";
    case Query::Command::Ample:
      return "ample";
    case Query::Command::Seshadri:
      return "seshadri";
    case Query::Command::ExportGkm:
      return "export-gkm";
  }
  return "?";
}

inline Query::Command command_from_name(const std::string& s) {
  for (Query::Command c :
       {Query::Command::Describe, Query::Command::Curves, Query::Command::Restrict,
        Query::Command::Nef, Query::Command::Ample, Query::Command::Seshadri,
        Query::Command::ExportGkm})
    if (s == command_name(c)) return c;
  throw UsageError("unknown command '" + s +
                   "' (expected one of describe, curves, restrict, nef, ample, "
                   "seshadri, export-gkm)");
}

inline std::vector<int> parse_csv_nodes(const std::string& s) {
  std::vector<int> out;
  size_t start = 0;
  while (start <= s.size()) {
    size_t comma = s.find(',', start);
    if (comma == std::string::npos) comma = s.size();
    const std::string piece = s.substr(start, comma - start);
    if (piece.empty())
      throw UsageError("--omit: empty entry in '" + s + "'");
    size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(piece, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != piece.size())
      throw UsageError("--omit: '" + piece + "' is not an integer");
    out.push_back(value);
    start = comma + 1;
  }
  return out;
}

inline const char* kHelpFooter = R"(Commands:
  describe    summary of the flag variety and its GKM graph
  curves      list the invariant curves (id, endpoints, root label)
  restrict    splitting type of --bundle on every invariant curve
  nef         nef verdict for --bundle
  ample       ample verdict for --bundle
  seshadri    Seshadri constant of --bundle at --point (fixed point id or 'all')
  export-gkm  GKM graph as JSON, or DOT with --dot

Bundle DSL:
  expr   := term ('+' term)*        direct sum
  term   := factor ('*' factor)*    tensor product
  factor := 'Q' | 'S' | 'T'         tautological quotient/sub, tangent bundle
                                    (Grassmannians: type A, one omitted node)
          | 'triv(r)'               trivial bundle of rank r
          | 'L[c1,...,cr]'          line bundle by fundamental-weight coefficients
          | 'dual(e)' | 'det(e)' | 'sym(k,e)' | 'wedge(k,e)' | '(e)'

Nodes use Bourbaki numbering. Omitting node d in type A(n-1) gives Gr(d,n);
--type A1 --omit 1 is the projective line.

Exit codes: 0 success, 1 precondition failure, 2 usage error, 3 enumeration cap.
)";

}  // namespace detail

// Parses and validates argv (without the program name). Throws UsageError or
// ConfigError on bad input and detail::HelpRequested for --help.
inline Query parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Nef/ample certification and Seshadri constants of equivariant "
               "bundles on flag varieties, via invariant-curve splitting types"};
  app.footer(detail::kHelpFooter);

  std::string type_str, omit_str, command_str, bundle_str, point_str;
  bool json_flag = false, dot_flag = false;
  std::uint64_t max_cosets = kDefaultCosetCap;

  app.add_option("--type", type_str, "Cartan type, e.g. A3, B2, E6")->required();
  app.add_option("--omit", omit_str,
                 "omitted simple-root nodes (comma separated, 1-based)")
      ->required();
  app.add_option("command", command_str,
                 "describe | curves | restrict | nef | ample | seshadri | export-gkm")
      ->required();
  app.add_option("--bundle", bundle_str, "bundle expression (see the DSL below)");
  app.add_option("--point", point_str, "fixed point id or 'all' (seshadri)");
  app.add_flag("--json", json_flag, "emit JSON instead of a table");
  app.add_flag("--dot", dot_flag, "emit DOT (export-gkm only)");
  app.add_option("--max-cosets", max_cosets,
                 "enumeration cap on |W/W_P| (default 10000000)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    throw detail::HelpRequested{app.help()};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  Query q;
  q.type = CartanType::parse(type_str);
  q.omitted = detail::parse_csv_nodes(omit_str);
  for (int i : q.omitted)
    if (i < 1 || i > q.type.rank)
      throw UsageError("--omit: node " + std::to_string(i) +
                       " out of range 1.." + std::to_string(q.type.rank));
  q.command = detail::command_from_name(command_str);
  q.bundle_text = bundle_str;
  q.point_selector = point_str;
  q.max_cosets = max_cosets;

  const bool needs_bundle =
      q.command == Query::Command::Restrict || q.command == Query::Command::Nef ||
      q.command == Query::Command::Ample || q.command == Query::Command::Seshadri;
  const char* cmd = detail::command_name(q.command);
  if (needs_bundle && q.bundle_text.empty())
    throw UsageError(std::string("command '") + cmd + "' requires --bundle");
  if (!needs_bundle && !q.bundle_text.empty())
    throw UsageError(std::string("command '") + cmd + "' does not take --bundle");
  if (q.command == Query::Command::Seshadri && q.point_selector.empty())
    throw UsageError("command 'seshadri' requires --point (id or 'all')");
  if (q.command != Query::Command::Seshadri && !q.point_selector.empty())
    throw UsageError(std::string("command '") + cmd + "' does not take --point");
  if (dot_flag && q.command != Query::Command::ExportGkm)
    throw UsageError("--dot applies to export-gkm only");
  if (json_flag && dot_flag) throw UsageError("--json and --dot conflict");
  q.output = dot_flag ? Query::Output::Dot
             : json_flag || q.command == Query::Command::ExportGkm
                 ? Query::Output::Json
                 : Query::Output::Table;

  if (needs_bundle) parse_bundle(q.bundle_text);  // syntax check up front

  if (q.command == Query::Command::Seshadri && q.point_selector != "all") {
    size_t used = 0;
    bool ok = true;
    try {
      if (std::stoi(q.point_selector, &used) < 0) ok = false;
    } catch (const std::exception&) {
      ok = false;
    }
    if (!ok || used != q.point_selector.size())
      throw UsageError("--point: expected a nonnegative id or 'all', got '" +
                       q.point_selector + "'");
  }
  return q;
}

// Executes a validated query, writing the result to out. Errors propagate as
// exceptions; cli_main translates them to exit codes.
inline int run(const Query& q, std::ostream& out) {
  const RootSystem rs = build_root_system(q.type);
  const Parabolic p = Parabolic::from_omitted(rs, q.omitted);
  const GkmGraph g = invariant_curves(rs, p, q.max_cosets);
  const bool json = q.output == Query::Output::Json;

  switch (q.command) {
    case Query::Command::Describe:
      if (json)
        out << describe_to_json(g).dump(2) << "\n";
      else
        describe_to_text(g, out);
      break;
    case Query::Command::Curves:
      if (json)
        out << gkm_to_json(g)["edges"].dump(2) << "\n";
      else
        curves_to_text(g, out);
      break;
    case Query::Command::Restrict: {
      const RestrictionTable t = restriction_table(parse_bundle(q.bundle_text), g);
      if (json)
        out << restriction_to_json(t).dump(2) << "\n";
      else
        table_to_text(t, out);
      break;
    }
    case Query::Command::Nef:
    case Query::Command::Ample: {
      const PositivityVerdict v = positivity(parse_bundle(q.bundle_text), g);
      if (json) {
        out << verdict_to_json(v).dump(2) << "\n";
      } else {
        const bool yes = q.command == Query::Command::Nef
                             ? v.status != PositivityStatus::NotNef
                             : v.status == PositivityStatus::Ample;
        out << detail::command_name(q.command) << ": " << (yes ? "yes" : "no")
            << "\n";
        verdict_to_text(v, out);
      }
      break;
    }
    case Query::Command::Seshadri: {
      const BundleExpr e = parse_bundle(q.bundle_text);
      std::vector<int> ids;
      if (q.point_selector == "all") {
        for (const FixedPoint& x : g.points()) ids.push_back(x.id);
      } else {
        ids.push_back(std::stoi(q.point_selector));
      }
      Json arr = Json::array();
      for (int id : ids) {
        const SeshadriResult r = seshadri(e, g, id);
        if (json)
          arr.push_back(seshadri_entry_to_json(id, r));
        else
          seshadri_to_text(id, r, out);
      }
      if (json) out << arr.dump(2) << "\n";
      break;
    }
    case Query::Command::ExportGkm:
      if (q.output == Query::Output::Dot)
        out << gkm_to_dot(g);
      else
        out << gkm_to_json(g).dump(2) << "\n";
      break;
  }
  return 0;
}

// Full process entry: maps the error taxonomy onto the exit-code contract.
inline int cli_main(int argc, const char* const* argv, std::ostream& out,
                    std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  try {
    return run(parse_args(args), out);
  } catch (const detail::HelpRequested& h) {
    out << h.text;
    return 0;
  } catch (const CapError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace gpnef
