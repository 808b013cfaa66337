#pragma once

#include <json.hpp>

#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "icosa/model.hpp"
#include "icosa/verify.hpp"

namespace icosa {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Verification reports.

inline std::string report_to_text(const VerificationReport& report) {
  std::ostringstream out;
  for (const auto& e : report.entries) {
    switch (e.status) {
      case CheckStatus::pass:
        out << "[PASS]   " << e.name << ": " << e.computed << "\n";
        break;
      case CheckStatus::fail:
        out << "[FAIL]   " << e.name << ": expected " << e.expected
            << ", computed " << e.computed << "\n";
        break;
      case CheckStatus::errata:
        out << "[ERRATA] " << e.name << ": fixture says " << e.expected
            << ", computed " << e.computed << "\n";
        break;
    }
  }
  out << "summary: " << report.entries.size() << " checks, "
      << report.passes() << " pass, " << report.failures() << " fail, "
      << report.erratas() << " errata\n";
  return out.str();
}

inline json report_to_json(const VerificationReport& report) {
  json checks = json::array();
  for (const auto& e : report.entries)
    checks.push_back({{"name", e.name},
                      {"status", status_name(e.status)},
                      {"expected", e.expected},
                      {"computed", e.computed}});
  return json{{"checks", std::move(checks)},
              {"summary",
               {{"total", report.entries.size()},
                {"pass", report.passes()},
                {"fail", report.failures()},
                {"errata", report.erratas()},
                {"ok", report.ok()}}}};
}

// ---------------------------------------------------------------------------
// Computed tables. Everything here is recomputed from the generators;
// the embedded fixtures are not consulted.

namespace detail {

inline std::map<int, Permutation> computed_q(const Model& m) {
  std::map<int, Permutation> q;
  for (const auto& base : fixtures::kTable6)
    q.emplace(base.index, m.hom.image_of(m.eval_letters(
                              join_letters(base.prefix_letters,
                                           base.last_letters))));
  return q;
}

inline std::string word_for_row(std::string_view name) {
  if (name == "D" || name == "Y" || name == "T") return std::string(name);
  for (const auto& def : fixtures::kTable1Words)
    if (def.name == name) return std::string(def.letters);
  throw Error("no defining word for '" + std::string(name) + "'");
}

inline std::string pad(const std::string& s, std::size_t width) {
  std::string out = s;
  while (out.size() < width) out += ' ';
  return out;
}

}  // namespace detail

inline std::string table_to_text(const Model& m, int n) {
  std::ostringstream out;
  const Domain& vdom = m.graph.vertices();
  out << "table " << n << ": " << fixtures::kTableTitles[n] << "\n";

  switch (n) {
    case 1: {
      out << detail::pad("", 4);
      for (const auto& l : vdom.labels()) out << detail::pad(l.text(), 5);
      out << "\n";
      for (const auto& row : fixtures::kTable1) {
        const Permutation& p = m.rotation_named(row.name);
        out << detail::pad(std::string(row.name) + ":", 4);
        for (std::size_t i = 0; i < vdom.size(); ++i)
          out << detail::pad(vdom.label(p.image(i)).text(), 5);
        out << "\n";
      }
      break;
    }
    case 2: {
      for (std::size_t i = 0; i < 5; ++i) {
        const auto& left = fixtures::kTable2[i];
        const auto& right = fixtures::kTable2[i + 5];
        auto cell = [&](const fixtures::Table2Row& row) {
          return detail::pad(
              format_cycles(m.hom.image_of(m.eval_letters(row.rotation_letters))) +
                  " <-> " + std::string(row.rotation_display),
              22);
        };
        out << cell(left) << cell(right) << "\n";
      }
      break;
    }
    case 3: {
      auto cell = [&](const fixtures::Table3Row& row) {
        const Permutation p = m.eval_letters(row.word);
        const RotationClass cls = classify_rotation(p, m.ico, m.graph);
        return detail::pad(cls.axis_str(vdom) + " = " + std::string(row.word),
                           28);
      };
      for (std::size_t i = 0; i + 1 < fixtures::kTable3FirstConfigRows; i += 2)
        out << cell(fixtures::kTable3[i]) << cell(fixtures::kTable3[i + 1])
            << "\n";
      for (std::size_t i = fixtures::kTable3FirstConfigRows;
           i < fixtures::kTable3.size(); ++i)
        out << cell(fixtures::kTable3[i]);
      out << "\n";
      break;
    }
    case 4: {
      for (const auto& row : fixtures::kTable4) {
        const Permutation f1 =
            m.hom.image_of(m.rotation_named(row.word.substr(0, 1)));
        const Permutation f2 =
            m.hom.image_of(m.rotation_named(row.word.substr(1, 1)));
        const Permutation product = compose(f1, f2);
        out << detail::pad(std::string(row.word), 4) << "<-> "
            << format_cycles(f1) << format_cycles(f2) << " = "
            << format_cycles(product) << "\n";
      }
      break;
    }
    case 5: {
      for (const auto& row : fixtures::kTable5) {
        const Permutation p = m.eval_letters(row.letters);
        out << detail::pad(std::string(row.display), 6) << "= ";
        for (std::size_t v : p.fixed_point_positions())
          out << "(" << vdom.label(v).text() << ")";
        out << "  " << format_cycles(p) << "\n";
      }
      break;
    }
    case 6: {
      const auto q = detail::computed_q(m);
      for (const auto& row : fixtures::kTable6) {
        const Permutation f1 = m.hom.image_of(m.eval_letters(row.prefix_letters));
        const Permutation f2 = m.hom.image_of(m.eval_letters(row.last_letters));
        out << "S" << row.index << " = " << detail::pad(std::string(row.display), 6)
            << "<-> " << format_cycles(f1) << format_cycles(f2) << " = "
            << format_cycles(q.at(row.index)) << " = Q" << row.index << "\n";
      }
      break;
    }
    case 7: {
      const auto q = detail::computed_q(m);
      std::vector<std::string> cycles;
      for (const auto& p : m.a5.elements())
        if (cycle_type(p) == CycleType::of({{5, 1}}))
          cycles.push_back(format_cycles(p));
      std::sort(cycles.begin(), cycles.end());
      for (const auto& text : cycles) {
        const Permutation p = parse_cycles(text, a5_domain());
        for (const auto& [i, qi] : q)
          for (int beta = 1; beta <= 4; ++beta)
            if (power(qi, beta) == p)
              out << text << " = Q" << i << "^" << beta << "\n";
      }
      break;
    }
    default:
      throw Error("table id must be 1..7, got " + std::to_string(n));
  }
  return out.str();
}

inline json table_to_json(const Model& m, int n) {
  const Domain& vdom = m.graph.vertices();
  json rows = json::array();

  switch (n) {
    case 1:
      for (const auto& row : fixtures::kTable1) {
        const Permutation& p = m.rotation_named(row.name);
        json images = json::array();
        for (std::size_t i = 0; i < vdom.size(); ++i)
          images.push_back(vdom.label(p.image(i)).text());
        rows.push_back({{"name", std::string(row.name)},
                        {"word", detail::word_for_row(row.name)},
                        {"images", std::move(images)}});
      }
      break;
    case 2:
      for (const auto& row : fixtures::kTable2)
        rows.push_back(
            {{"a5_cycles", format_cycles(m.hom.image_of(
                               m.eval_letters(row.rotation_letters)))},
             {"rotation", std::string(row.rotation_display)}});
      break;
    case 3:
      for (const auto& row : fixtures::kTable3) {
        const Permutation p = m.eval_letters(row.word);
        const RotationClass cls = classify_rotation(p, m.ico, m.graph);
        json axis = json::array();
        for (const auto& comp : cls.axis) {
          json edge = json::array();
          for (std::size_t v : comp) edge.push_back(vdom.label(v).text());
          axis.push_back(std::move(edge));
        }
        rows.push_back({{"word", std::string(row.word)},
                        {"axis_edges", std::move(axis)}});
      }
      break;
    case 4:
      for (const auto& row : fixtures::kTable4) {
        const Permutation f1 =
            m.hom.image_of(m.rotation_named(row.word.substr(0, 1)));
        const Permutation f2 =
            m.hom.image_of(m.rotation_named(row.word.substr(1, 1)));
        rows.push_back({{"word", std::string(row.word)},
                        {"factors", {format_cycles(f1), format_cycles(f2)}},
                        {"product", format_cycles(compose(f1, f2))}});
      }
      break;
    case 5:
      for (const auto& row : fixtures::kTable5) {
        const Permutation p = m.eval_letters(row.letters);
        json fixed = json::array();
        for (std::size_t v : p.fixed_point_positions())
          fixed.push_back(vdom.label(v).text());
        rows.push_back({{"word", std::string(row.display)},
                        {"fixes", std::move(fixed)},
                        {"cycles", format_cycles(p)}});
      }
      break;
    case 6: {
      const auto q = detail::computed_q(m);
      for (const auto& row : fixtures::kTable6) {
        const Permutation f1 = m.hom.image_of(m.eval_letters(row.prefix_letters));
        const Permutation f2 = m.hom.image_of(m.eval_letters(row.last_letters));
        rows.push_back({{"index", row.index},
                        {"word", std::string(row.display)},
                        {"factors", {format_cycles(f1), format_cycles(f2)}},
                        {"q_cycles", format_cycles(q.at(row.index))}});
      }
      break;
    }
    case 7: {
      const auto q = detail::computed_q(m);
      std::vector<std::string> cycles;
      for (const auto& p : m.a5.elements())
        if (cycle_type(p) == CycleType::of({{5, 1}}))
          cycles.push_back(format_cycles(p));
      std::sort(cycles.begin(), cycles.end());
      for (const auto& text : cycles) {
        const Permutation p = parse_cycles(text, a5_domain());
        for (const auto& [i, qi] : q)
          for (int beta = 1; beta <= 4; ++beta)
            if (power(qi, beta) == p)
              rows.push_back(
                  {{"cycles", text}, {"q_index", i}, {"exponent", beta}});
      }
      break;
    }
    default:
      throw Error("table id must be 1..7, got " + std::to_string(n));
  }

  return json{{"table", n},
              {"title", std::string(fixtures::kTableTitles[n])},
              {"rows", std::move(rows)}};
}

// ---------------------------------------------------------------------------
// Graph export.

inline std::string graph_to_text(const IcosaGraph& g) {
  std::ostringstream out;
  const Domain& dom = g.vertices();
  out << "vertices (" << dom.size() << "):";
  for (const auto& l : dom.labels()) out << " " << l.text();
  out << "\n";

  out << "edges (" << g.edges().size() << "):";
  for (const auto& e : g.edges())
    out << " {" << dom.label(e[0]).text() << "," << dom.label(e[1]).text()
        << "}";
  out << "\n";

  out << "faces (" << g.faces().size() << "):";
  for (const auto& f : g.faces())
    out << " {" << dom.label(f[0]).text() << "," << dom.label(f[1]).text()
        << "," << dom.label(f[2]).text() << "}";
  out << "\n";

  out << "antipodes (" << dom.size() / 2 << "):";
  for (std::size_t v = 0; v < dom.size(); ++v)
    if (v < g.antipode(v))
      out << " {" << dom.label(v).text() << ","
          << dom.label(g.antipode(v)).text() << "}";
  out << "\n";
  return out.str();
}

inline json graph_to_json(const IcosaGraph& g) {
  const Domain& dom = g.vertices();
  json vertices = json::array();
  for (const auto& l : dom.labels()) vertices.push_back(l.text());

  json edges = json::array();
  for (const auto& e : g.edges())
    edges.push_back({dom.label(e[0]).text(), dom.label(e[1]).text()});

  json faces = json::array();
  for (const auto& f : g.faces())
    faces.push_back({dom.label(f[0]).text(), dom.label(f[1]).text(),
                     dom.label(f[2]).text()});

  json antipodes = json::array();
  for (std::size_t v = 0; v < dom.size(); ++v)
    if (v < g.antipode(v))
      antipodes.push_back(
          {dom.label(v).text(), dom.label(g.antipode(v)).text()});

  return json{{"vertices", std::move(vertices)},
              {"edges", std::move(edges)},
              {"faces", std::move(faces)},
              {"antipodes", std::move(antipodes)}};
}

// ---------------------------------------------------------------------------
// The 60-row correspondence. Field names are part of the interface:
// word, rotation_cycles, class, axis, a5_cycles, a5_class.

inline std::string correspondence_to_text(const Model& m) {
  const Domain& vdom = m.graph.vertices();
  std::ostringstream out;
  out << detail::pad("word", 7) << detail::pad("rotation_cycles", 44)
      << detail::pad("class", 10) << detail::pad("axis", 26)
      << detail::pad("a5_cycles", 14) << "a5_class\n";
  for (const auto& row : m.correspondence.rows) {
    const std::string rot = format_cycles(row.rotation);
    const std::string img = format_cycles(row.image);
    out << detail::pad(row.word.str(), 7)
        << detail::pad(rot.empty() ? "-" : rot, 44)
        << detail::pad(kind_name(row.cls.kind), 10)
        << detail::pad(row.cls.axis_str(vdom), 26)
        << detail::pad(img.empty() ? "-" : img, 14) << row.image_class.str()
        << "\n";
  }
  return out.str();
}

inline json correspondence_to_json(const Model& m) {
  const Domain& vdom = m.graph.vertices();
  json rows = json::array();
  for (const auto& row : m.correspondence.rows) {
    json axis = json::array();
    for (const auto& comp : row.cls.axis) {
      json part = json::array();
      for (std::size_t v : comp) part.push_back(vdom.label(v).text());
      axis.push_back(std::move(part));
    }
    rows.push_back({{"word", row.word.str()},
                    {"rotation_cycles", format_cycles(row.rotation)},
                    {"class", kind_name(row.cls.kind)},
                    {"axis", std::move(axis)},
                    {"a5_cycles", format_cycles(row.image)},
                    {"a5_class", row.image_class.str()}});
  }
  return json{{"rows", std::move(rows)}};
}

}  // namespace icosa
