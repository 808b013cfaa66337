#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include "icosa/model.hpp"
#include "icosa/render.hpp"
#include "icosa/verify.hpp"

namespace icosa {

namespace detail {

/// Domain selection for CLI input: an explicit flag wins; otherwise any
/// primed or plus label forces the 12-vertex domain, and bare digits
/// default to the five points of A5.
inline const Domain& choose_domain(std::string_view text,
                                   const std::string& flag) {
  if (flag == "ico") return icosahedron_domain();
  if (flag == "a5") return a5_domain();
  for (char c : text)
    if (c == '\'' || c == '+') return icosahedron_domain();
  return a5_domain();
}

/// Resolves arbitrary user input to an element of the rotation group:
/// either directly, or through the inverse of the verified bijection
/// when the input lives on the A5 side.
inline Permutation to_rotation(const Model& m, const Permutation& p) {
  if (p.domain() == m.ico.domain()) {
    if (!m.ico.contains(p))
      throw Error("permutation is not an element of the rotation group");
    return p;
  }
  if (!m.a5.contains(p))
    throw Error(
        "permutation is not an element of A5 (odd permutations have no "
        "corresponding rotation)");
  return m.hom.preimage_of(p);
}

inline void emit_json(std::ostream& out, const json& j) {
  out << j.dump(2) << "\n";
}

}  // namespace detail

/// Entry point behind the `icosa` binary; `args` excludes the program
/// name. Exit status: 0 success, 1 verification failure, 2 usage or
/// input errors.
inline int cli_main(const std::vector<std::string>& args, std::ostream& out,
                    std::ostream& err) {
  CLI::App app{"The 60 icosahedron rotations and their correspondence with "
               "the alternating group A5, as checkable data."};
  app.name("icosa");
  app.require_subcommand(1);

  int table = 0;
  bool as_json = false;
  bool as_text = false;
  std::string perm_text;
  std::string domain_flag;
  std::string from_flag;

  CLI::App* verify = app.add_subcommand(
      "verify", "run the verification suite; exit 0 iff no check fails");
  verify->add_option("--table", table, "check a single table (1..7)")
      ->check(CLI::Range(1, 7));
  verify->add_flag("--json", as_json, "emit the report as JSON");

  CLI::App* tables = app.add_subcommand(
      "tables", "emit the reference tables recomputed from the generators");
  tables->add_option("--table", table, "emit a single table (1..7)")
      ->check(CLI::Range(1, 7));
  tables->add_flag("--json", as_json, "emit JSON");
  tables->add_flag("--text", as_text, "emit plain text (default)");

  CLI::App* classify = app.add_subcommand(
      "classify", "print rotation class, axis, order and A5 image");
  classify->add_option("perm", perm_text, "permutation in cycle notation")
      ->required();
  classify->add_option("--domain", domain_flag, "force the input domain")
      ->check(CLI::IsMember({"ico", "a5"}));

  CLI::App* word = app.add_subcommand(
      "word", "print the certified shortest generator word");
  word->add_option("perm", perm_text, "permutation in cycle notation")
      ->required();
  word->add_option("--domain", domain_flag, "force the input domain")
      ->check(CLI::IsMember({"ico", "a5"}));

  CLI::App* map_cmd = app.add_subcommand(
      "map", "map a permutation through the isomorphism (either direction)");
  map_cmd->add_option("perm", perm_text, "permutation in cycle notation")
      ->required();
  map_cmd->add_option("--from", from_flag, "side the input lives on")
      ->required()
      ->check(CLI::IsMember({"ico", "a5"}));

  CLI::App* graph =
      app.add_subcommand("graph", "emit the derived icosahedron structure");
  graph->add_flag("--json", as_json, "emit JSON");

  CLI::App* corr = app.add_subcommand(
      "correspondence", "emit the verified 60-row correspondence");
  corr->add_flag("--json", as_json, "emit JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const Model& m = standard_model();

    if (verify->parsed()) {
      const VerificationReport report =
          table > 0 ? verify_table(m, table) : verify_all(m);
      if (as_json)
        detail::emit_json(out, report_to_json(report));
      else
        out << report_to_text(report);
      return report.ok() ? 0 : 1;
    }

    if (tables->parsed()) {
      if (as_json) {
        if (table > 0) {
          detail::emit_json(out, table_to_json(m, table));
        } else {
          json all = json::array();
          for (int n = 1; n <= 7; ++n) all.push_back(table_to_json(m, n));
          detail::emit_json(out, json{{"tables", std::move(all)}});
        }
      } else {
        if (table > 0) {
          out << table_to_text(m, table);
        } else {
          for (int n = 1; n <= 7; ++n) {
            if (n > 1) out << "\n";
            out << table_to_text(m, n);
          }
        }
      }
      return 0;
    }

    if (classify->parsed()) {
      const Domain& dom = detail::choose_domain(perm_text, domain_flag);
      const Permutation input = parse_cycles(perm_text, dom);
      const Permutation rotation = detail::to_rotation(m, input);
      const RotationClass cls = classify_rotation(rotation, m.ico, m.graph);
      out << "class: " << kind_name(cls.kind) << "\n"
          << "axis: " << cls.axis_str(m.graph.vertices()) << "\n"
          << "order: " << order(rotation) << "\n"
          << "a5: " << format_cycles(m.hom.image_of(rotation)) << "\n";
      return 0;
    }

    if (word->parsed()) {
      const Domain& dom = detail::choose_domain(perm_text, domain_flag);
      const Permutation input = parse_cycles(perm_text, dom);
      const Permutation rotation = detail::to_rotation(m, input);
      out << shortest_word(m.ico, rotation).str() << "\n";
      return 0;
    }

    if (map_cmd->parsed()) {
      const Domain& dom =
          from_flag == "ico" ? icosahedron_domain() : a5_domain();
      const Permutation input = parse_cycles(perm_text, dom);
      if (from_flag == "ico") {
        if (!m.ico.contains(input))
          throw Error("permutation is not an element of the rotation group");
        out << format_cycles(m.hom.image_of(input)) << "\n";
      } else {
        if (!m.a5.contains(input))
          throw Error("permutation is not an element of A5");
        out << format_cycles(m.hom.preimage_of(input)) << "\n";
      }
      return 0;
    }

    if (graph->parsed()) {
      if (as_json)
        detail::emit_json(out, graph_to_json(m.graph));
      else
        out << graph_to_text(m.graph);
      return 0;
    }

    if (corr->parsed()) {
      if (as_json)
        detail::emit_json(out, correspondence_to_json(m));
      else
        out << correspondence_to_text(m);
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  err << "error: no subcommand\n";
  return 2;
}

}  // namespace icosa
