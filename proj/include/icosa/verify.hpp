#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "icosa/fixtures.hpp"
#include "icosa/model.hpp"

namespace icosa {

// Verification vocabulary:
//   pass    - the check holds.
//   fail    - a computed invariant is violated; flips the exit status.
//   errata  - a fixture row disagrees with internally consistent computed
//             truth; reported distinctly and never silently rewritten.

enum class CheckStatus { pass, fail, errata };

inline std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::errata: return "errata";
  }
  return "?";
}

struct CheckEntry {
  std::string name;
  std::string expected;
  std::string computed;
  CheckStatus status = CheckStatus::pass;
};

struct VerificationReport {
  std::vector<CheckEntry> entries;

  void add(std::string name, CheckStatus status, std::string expected,
           std::string computed) {
    entries.push_back(
        {std::move(name), std::move(expected), std::move(computed), status});
  }

  /// Fixture-vs-computed comparison: a mismatch is an errata entry.
  void fixture_check(std::string name, bool ok, std::string expected,
                     std::string computed) {
    add(std::move(name), ok ? CheckStatus::pass : CheckStatus::errata,
        std::move(expected), std::move(computed));
  }

  /// Computed invariant: a violation is a failure.
  void invariant_check(std::string name, bool ok, std::string expected,
                       std::string computed) {
    add(std::move(name), ok ? CheckStatus::pass : CheckStatus::fail,
        std::move(expected), std::move(computed));
  }

  void append(VerificationReport other) {
    for (auto& e : other.entries) entries.push_back(std::move(e));
  }

  std::size_t count(CheckStatus s) const {
    std::size_t n = 0;
    for (const auto& e : entries)
      if (e.status == s) ++n;
    return n;
  }

  std::size_t passes() const { return count(CheckStatus::pass); }
  std::size_t failures() const { return count(CheckStatus::fail); }
  std::size_t erratas() const { return count(CheckStatus::errata); }

  /// Overall pass: zero failures. Errata entries do not flip the status;
  /// they are enumerated on their own.
  bool ok() const { return failures() == 0; }
};

namespace detail {

inline std::array<std::size_t, 2> parse_fixture_edge(std::string_view text,
                                                     const Domain& dom) {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw Error("malformed fixture edge '" + std::string(text) + "'");
  const std::string_view inner = text.substr(1, text.size() - 2);
  const auto comma = inner.find(',');
  if (comma == std::string_view::npos)
    throw Error("malformed fixture edge '" + std::string(text) + "'");
  const auto a = dom.find(inner.substr(0, comma));
  const auto b = dom.find(inner.substr(comma + 1));
  if (!a || !b)
    throw Error("fixture edge '" + std::string(text) +
                "' names an unknown vertex");
  return IcosaGraph::edge_key(*a, *b);
}

inline std::string join_letters(std::string_view a, std::string_view b) {
  return std::string(a) + std::string(b);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Table checks. Each takes the fixture rows explicitly so tests can inject
// corrupted copies; the verify_table(n) entry point binds the embedded data.

/// Table 1: D, Y, T are taken as definitions; every other row must equal
/// the evaluation of its defining word.
inline VerificationReport verify_table1(
    const Model& m, std::span<const fixtures::Table1Row> rows,
    std::span<const fixtures::WordDef> words) {
  VerificationReport report;
  auto find_row = [&](std::string_view name) -> const fixtures::Table1Row* {
    for (const auto& r : rows)
      if (r.name == name) return &r;
    return nullptr;
  };

  auto compare_row = [&](const std::string& check_name,
                         const fixtures::Table1Row& row,
                         const Permutation& computed) {
    try {
      const Permutation fixture = fixtures::row_permutation(row);
      report.fixture_check(check_name, fixture == computed,
                           format_cycles(fixture), format_cycles(computed));
    } catch (const Error& e) {
      report.fixture_check(check_name, false, "a valid image row", e.what());
    }
  };

  for (std::string_view name : {"D", "Y", "T"}) {
    const auto* row = find_row(name);
    if (!row) {
      report.fixture_check("table1/" + std::string(name), false,
                           "a row named " + std::string(name), "missing row");
      continue;
    }
    compare_row("table1/" + std::string(name), *row, m.rotation_named(name));
  }

  // Evaluate the defining words over a local map seeded with the
  // generators, so each word may refer to previously defined rotations.
  std::vector<std::pair<std::string, Permutation>> local;
  for (std::string_view name : {"D", "Y", "T"})
    local.emplace_back(std::string(name), m.rotation_named(name));
  auto local_value = [&](char c) -> const Permutation& {
    for (const auto& [n, p] : local)
      if (n.size() == 1 && n[0] == c) return p;
    throw Error(std::string("word letter '") + c + "' is not defined yet");
  };

  for (const auto& def : words) {
    Permutation computed = identity(m.ico_gens.domain());
    for (char c : def.letters) computed = compose(computed, local_value(c));
    local.emplace_back(std::string(def.name), computed);

    const auto* row = find_row(def.name);
    if (!row) {
      report.fixture_check("table1/" + std::string(def.name), false,
                           "a row named " + std::string(def.name),
                           "missing row");
      continue;
    }
    compare_row(
        "table1/" + std::string(def.name) + "=" + std::string(def.letters),
        *row, computed);
  }
  return report;
}

/// Table 2: each stated 3-cycle is the image of its rotation under the
/// homomorphism.
inline VerificationReport verify_table2(
    const Model& m, std::span<const fixtures::Table2Row> rows) {
  VerificationReport report;
  for (const auto& row : rows) {
    const Permutation computed =
        m.hom.image_of(m.eval_letters(row.rotation_letters));
    const Permutation stated = parse_cycles(row.a5_cycles, a5_domain());
    report.fixture_check(
        "table2/" + std::string(row.a5_cycles) + "<->" +
            std::string(row.rotation_display),
        computed == stated, std::string(row.a5_cycles), format_cycles(computed));
  }
  return report;
}

/// Table 3: each product is an edge rotation with exactly the stated
/// pair of axis edges.
inline VerificationReport verify_table3(
    const Model& m, std::span<const fixtures::Table3Row> rows) {
  VerificationReport report;
  for (const auto& row : rows) {
    const std::string name = "table3/" + std::string(row.word);
    const std::string expected =
        std::string(row.edge1) + "," + std::string(row.edge2);
    const Permutation product = m.eval_letters(row.word);
    const auto idx = m.ico.index_of(product);
    if (!idx) {
      report.fixture_check(name, false, expected, "product is not in the group");
      continue;
    }
    const RotationClass& cls = m.class_of(*idx);
    if (cls.kind != RotationKind::edge) {
      report.fixture_check(name, false, expected,
                           "product is a " + kind_name(cls.kind) + " rotation");
      continue;
    }
    const auto e1 = detail::parse_fixture_edge(row.edge1, m.graph.vertices());
    const auto e2 = detail::parse_fixture_edge(row.edge2, m.graph.vertices());
    std::set<std::vector<std::size_t>> stated = {{e1[0], e1[1]}, {e2[0], e2[1]}};
    std::set<std::vector<std::size_t>> computed = {cls.axis[0], cls.axis[1]};
    report.fixture_check(name, stated == computed, expected,
                         cls.axis_str(m.graph.vertices()));
  }
  return report;
}

/// Table 4: the full chain per row: the factors are the images of the two
/// face rotations, the rewrites are the same permutations, their product
/// is the stated double transposition with the stated fixed point, and it
/// equals the image of the edge rotation.
inline VerificationReport verify_table4(
    const Model& m, std::span<const fixtures::Table4Row> rows) {
  VerificationReport report;
  const Domain& dom = a5_domain();
  for (const auto& row : rows) {
    const std::string name = "table4/" + std::string(row.word);
    const std::string expected = std::string(row.factor1) +
                                 std::string(row.factor2) + " = " +
                                 std::string(row.transpositions) + "(" +
                                 std::string(row.fixed_point) + ")";
    std::string problem;
    try {
      const Permutation f1 = parse_cycles(row.factor1, dom);
      const Permutation f2 = parse_cycles(row.factor2, dom);
      const Permutation img1 =
          m.hom.image_of(m.rotation_named(row.word.substr(0, 1)));
      const Permutation img2 =
          m.hom.image_of(m.rotation_named(row.word.substr(1, 1)));
      if (!(f1 == img1))
        problem = "first factor is " + format_cycles(img1);
      else if (!(f2 == img2))
        problem = "second factor is " + format_cycles(img2);
      else if (!row.rewrite1.empty() &&
               !(parse_cycles(row.rewrite1, dom) == f1))
        problem = "rewrite " + std::string(row.rewrite1) +
                  " is not the first factor";
      else if (!row.rewrite2.empty() &&
               !(parse_cycles(row.rewrite2, dom) == f2))
        problem = "rewrite " + std::string(row.rewrite2) +
                  " is not the second factor";
      else {
        const Permutation product = compose(f1, f2);
        const Permutation stated = parse_cycles(row.transpositions, dom);
        if (!(product == stated))
          problem = "factors compose to " + format_cycles(product);
        else if (!stated.fixes(Label(std::string(row.fixed_point))))
          problem = "stated fixed point moves";
        else if (!(cycle_type(stated) == CycleType::of({{1, 1}, {2, 2}})))
          problem = "result is of class " + cycle_type(stated).str();
        else if (!(m.hom.image_of(m.eval_letters(row.word)) == stated))
          problem = "image of " + std::string(row.word) + " is " +
                    format_cycles(m.hom.image_of(m.eval_letters(row.word)));
      }
    } catch (const Error& e) {
      problem = e.what();
    }
    report.fixture_check(name, problem.empty(), expected,
                         problem.empty() ? "chain verified" : problem);
  }
  return report;
}

/// Table 5: each product fixes the stated vertex pair and equals the
/// stated pair of 5-cycles.
inline VerificationReport verify_table5(
    const Model& m, std::span<const fixtures::Table5Row> rows) {
  VerificationReport report;
  const Domain& dom = m.graph.vertices();
  for (const auto& row : rows) {
    const std::string name = "table5/" + std::string(row.display);
    const std::string expected = "(" + std::string(row.fixed1) + ")(" +
                                 std::string(row.fixed2) + ") " +
                                 std::string(row.cycle1) +
                                 std::string(row.cycle2);
    const Permutation value = m.eval_letters(row.letters);
    std::string problem;
    const auto fixed = value.fixed_point_positions();
    std::set<std::size_t> stated_fixed = {*dom.find(row.fixed1),
                                          *dom.find(row.fixed2)};
    if (std::set<std::size_t>(fixed.begin(), fixed.end()) != stated_fixed)
      problem = "fixes " + std::to_string(fixed.size()) + " other vertices";
    else if (!(value == parse_cycles(std::string(row.cycle1) +
                                         std::string(row.cycle2),
                                     dom)))
      problem = "product is " + format_cycles(value);
    report.fixture_check(name, problem.empty(), expected,
                         problem.empty() ? format_cycles(value) : problem);
  }
  return report;
}

/// Table 6: each S_i maps to the stated Q_i, and the stated factors are
/// the images of its two parts.
inline VerificationReport verify_table6(
    const Model& m, std::span<const fixtures::Table6Row> rows) {
  VerificationReport report;
  const Domain& dom = a5_domain();
  for (const auto& row : rows) {
    const std::string name =
        "table6/S" + std::to_string(row.index) + "=" + std::string(row.display);
    const std::string expected = std::string(row.factor1) +
                                 std::string(row.factor2) + " = " +
                                 std::string(row.q_cycles);
    std::string problem;
    try {
      const Permutation f1 =
          m.hom.image_of(m.eval_letters(row.prefix_letters));
      const Permutation f2 = m.hom.image_of(m.eval_letters(row.last_letters));
      const Permutation q = m.hom.image_of(m.eval_letters(
          detail::join_letters(row.prefix_letters, row.last_letters)));
      if (!(parse_cycles(row.factor1, dom) == f1))
        problem = "first factor is " + format_cycles(f1);
      else if (!(parse_cycles(row.factor2, dom) == f2))
        problem = "second factor is " + format_cycles(f2);
      else if (!(compose(f1, f2) == q))
        problem = "factors compose to " + format_cycles(compose(f1, f2));
      else if (!(parse_cycles(row.q_cycles, dom) == q))
        problem = "Q is " + format_cycles(q);
    } catch (const Error& e) {
      problem = e.what();
    }
    report.fixture_check(name, problem.empty(), expected,
                         problem.empty() ? "chain verified" : problem);
  }
  return report;
}

/// Table 7: all 24 rows match power(Q_i, exponent), listed in
/// lexicographic order and covering the k5 class exactly.
inline VerificationReport verify_table7(
    const Model& m, std::span<const fixtures::Table7Row> rows) {
  VerificationReport report;
  const Domain& dom = a5_domain();

  std::map<int, Permutation> q;
  for (const auto& base : fixtures::kTable6)
    q.emplace(base.index,
              m.hom.image_of(m.eval_letters(detail::join_letters(
                  base.prefix_letters, base.last_letters))));

  for (const auto& row : rows) {
    const std::string name = "table7/" + std::string(row.cycles);
    const std::string expected = std::string(row.cycles) + "=Q" +
                                 std::to_string(row.q_index) + "^" +
                                 std::to_string(row.exponent);
    const Permutation computed = power(q.at(row.q_index), row.exponent);
    const Permutation stated = parse_cycles(row.cycles, dom);
    report.fixture_check(name, computed == stated, expected,
                         format_cycles(computed));
  }

  bool lex = true;
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (!(rows[i - 1].cycles < rows[i].cycles)) lex = false;
  report.fixture_check("table7/lexicographic-order", lex,
                       "rows strictly ascending",
                       lex ? "rows strictly ascending" : "rows out of order");

  std::set<std::vector<std::size_t>> stated_set;
  for (const auto& row : rows)
    stated_set.insert(parse_cycles(row.cycles, dom).images());
  std::set<std::vector<std::size_t>> five_cycles;
  for (const auto& p : m.a5.elements())
    if (cycle_type(p) == CycleType::of({{5, 1}})) five_cycles.insert(p.images());
  report.fixture_check(
      "table7/coverage", stated_set == five_cycles,
      "all 24 five-cycles once each",
      std::to_string(stated_set.size()) + " distinct rows of " +
          std::to_string(five_cycles.size()) + " five-cycles");
  return report;
}

/// Runs the checks for one table against the embedded fixtures.
inline VerificationReport verify_table(const Model& m, int n) {
  switch (n) {
    case 1: return verify_table1(m, fixtures::kTable1, fixtures::kTable1Words);
    case 2: return verify_table2(m, fixtures::kTable2);
    case 3: return verify_table3(m, fixtures::kTable3);
    case 4: return verify_table4(m, fixtures::kTable4);
    case 5: return verify_table5(m, fixtures::kTable5);
    case 6: return verify_table6(m, fixtures::kTable6);
    case 7: return verify_table7(m, fixtures::kTable7);
    default: throw Error("table id must be 1..7, got " + std::to_string(n));
  }
}

// ---------------------------------------------------------------------------
// Invariant suites (computed truth only; violations are failures).

inline VerificationReport verify_group_orders(const Model& m) {
  VerificationReport report;
  report.invariant_check("orders/rotations", m.ico.order() == 60, "60",
                         std::to_string(m.ico.order()));
  report.invariant_check("orders/a5", m.a5.order() == 60, "60",
                         std::to_string(m.a5.order()));
  return report;
}

inline VerificationReport verify_relation_suite(const Model& m) {
  VerificationReport report;
  const auto relations = fixtures::relation_words();
  const RelationReport ico = verify_relations(m.ico_gens, relations);
  const RelationReport a5 = verify_relations(m.a5.generators(), relations);
  for (std::size_t i = 0; i < fixtures::kRelations.size(); ++i) {
    const std::string display(fixtures::kRelations[i].display);
    report.invariant_check("relations/rotations/" + display,
                           ico.checks[i].pass, "holds",
                           ico.checks[i].pass ? "holds" : "violated");
    report.invariant_check("relations/a5/" + display, a5.checks[i].pass,
                           "holds", a5.checks[i].pass ? "holds" : "violated");
  }
  return report;
}

inline VerificationReport verify_census(const Model& m) {
  VerificationReport report;
  const auto expect = [&](VerificationReport& r, const std::string& name,
                          std::size_t got, std::size_t want) {
    r.invariant_check(name, got == want, std::to_string(want),
                      std::to_string(got));
  };

  const auto a5_parts = partition_by_cycle_type(m.a5);
  expect(report, "census/a5/k1=5", a5_parts.at(CycleType::of({{1, 5}})).size(), 1);
  expect(report, "census/a5/k1=2,k3=1",
         a5_parts.at(CycleType::of({{1, 2}, {3, 1}})).size(), 20);
  expect(report, "census/a5/k1=1,k2=2",
         a5_parts.at(CycleType::of({{1, 1}, {2, 2}})).size(), 15);
  expect(report, "census/a5/k5=1", a5_parts.at(CycleType::of({{5, 1}})).size(), 24);

  const auto ico_parts = partition_by_cycle_type(m.ico);
  expect(report, "census/rotations/k1=12",
         ico_parts.at(CycleType::of({{1, 12}})).size(), 1);
  expect(report, "census/rotations/k3=4",
         ico_parts.at(CycleType::of({{3, 4}})).size(), 20);
  expect(report, "census/rotations/k2=6",
         ico_parts.at(CycleType::of({{2, 6}})).size(), 15);
  expect(report, "census/rotations/k1=2,k5=2",
         ico_parts.at(CycleType::of({{1, 2}, {5, 2}})).size(), 24);

  std::map<RotationKind, std::size_t> kinds;
  for (const auto& c : m.classes) ++kinds[c.kind];
  expect(report, "census/geometric/identity", kinds[RotationKind::identity], 1);
  expect(report, "census/geometric/face", kinds[RotationKind::face], 20);
  expect(report, "census/geometric/edge", kinds[RotationKind::edge], 15);
  expect(report, "census/geometric/vertex", kinds[RotationKind::vertex], 24);
  return report;
}

inline VerificationReport verify_isomorphism_suite(const Model& m) {
  VerificationReport report;
  const IsoReport iso = verify_isomorphism(m.hom);
  report.invariant_check(
      "isomorphism/multiplicativity", iso.multiplicativity_failures == 0,
      "0 failures in " + std::to_string(iso.pair_checks) + " pairs",
      std::to_string(iso.multiplicativity_failures) + " failures" +
          (iso.first_failure.empty() ? "" : " (" + iso.first_failure + ")"));
  report.invariant_check("isomorphism/injective", iso.injective,
                         "60 distinct images", iso.injective ? "60 distinct images"
                                                             : "images collide");
  report.invariant_check("isomorphism/surjective", iso.surjective,
                         "image covers A5",
                         iso.surjective ? "image covers A5" : "image misses A5");

  std::size_t tuples = 0, lemma_ok = 0;
  const Domain& dom = a5_domain();
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = 0; b < 5; ++b)
      for (std::size_t c = 0; c < 5; ++c)
        for (std::size_t d = 0; d < 5; ++d) {
          if (a == b || a == c || a == d || b == c || b == d || c == d)
            continue;
          ++tuples;
          if (double_transposition_identity(dom.label(a), dom.label(b),
                                            dom.label(c), dom.label(d), dom))
            ++lemma_ok;
        }
  report.invariant_check("isomorphism/double-transposition-lemma",
                         lemma_ok == tuples,
                         std::to_string(tuples) + " tuples",
                         std::to_string(lemma_ok) + " tuples hold");
  return report;
}

inline VerificationReport verify_geometry(const Model& m) {
  VerificationReport report;
  const IcosaGraph& g = m.graph;
  report.invariant_check("geometry/vertices", g.vertices().size() == 12, "12",
                         std::to_string(g.vertices().size()));
  report.invariant_check("geometry/edges", g.edges().size() == 30, "30",
                         std::to_string(g.edges().size()));
  report.invariant_check("geometry/faces", g.faces().size() == 20, "20",
                         std::to_string(g.faces().size()));

  bool regular = true;
  for (std::size_t v = 0; v < g.vertices().size(); ++v)
    if (g.neighbors(v).size() != 5) regular = false;
  report.invariant_check("geometry/degree", regular, "every vertex degree 5",
                         regular ? "every vertex degree 5" : "irregular");

  bool edge_faces = true;
  for (const auto& e : g.edges()) {
    std::size_t in_faces = 0;
    for (const auto& f : g.faces()) {
      const bool a = std::find(f.begin(), f.end(), e[0]) != f.end();
      const bool b = std::find(f.begin(), f.end(), e[1]) != f.end();
      if (a && b) ++in_faces;
    }
    if (in_faces != 2) edge_faces = false;
  }
  report.invariant_check("geometry/edge-face-incidence", edge_faces,
                         "every edge in exactly 2 faces",
                         edge_faces ? "every edge in exactly 2 faces"
                                    : "incidence broken");

  bool all_autos = true;
  for (const auto& p : m.ico.elements())
    if (!is_automorphism(p, g)) all_autos = false;
  report.invariant_check("geometry/rotations-are-automorphisms", all_autos,
                         "all 60", all_autos ? "all 60" : "violated");

  bool pairs_ok = true;
  std::string computed_pairs;
  for (const auto& [a, b] : fixtures::kAntipodePairs) {
    const auto pa = g.vertices().find(a), pb = g.vertices().find(b);
    if (!pa || !pb || g.antipode(*pa) != *pb) pairs_ok = false;
    if (!computed_pairs.empty()) computed_pairs += ' ';
    computed_pairs += "{" + std::string(a) + "," +
                      (pa ? g.vertices().label(g.antipode(*pa)).text()
                          : std::string("?")) +
                      "}";
  }
  report.fixture_check("geometry/antipodal-pairs", pairs_ok,
                       "{1',1+} {2',2+} {3',3+} {1,1''} {2,2''} {3,3''}",
                       computed_pairs);

  const auto f0 = g.vertices().find(fixtures::kSeedOppositeFace[0]);
  const auto f1 = g.vertices().find(fixtures::kSeedOppositeFace[1]);
  const auto f2 = g.vertices().find(fixtures::kSeedOppositeFace[2]);
  const bool opposite = f0 && f1 && f2 && g.has_face({*f0, *f1, *f2});
  report.fixture_check("geometry/opposite-seed-face", opposite,
                       "{1'',3'',2'} is a face",
                       opposite ? "{1'',3'',2'} is a face" : "missing face");
  return report;
}

inline VerificationReport verify_trichotomy(const Model& m) {
  VerificationReport report;
  std::vector<const Permutation*> face_rotations;
  for (std::size_t i = 0; i < m.ico.order(); ++i)
    if (m.class_of(i).kind == RotationKind::face)
      face_rotations.push_back(&m.ico.element(i));

  std::size_t eligible = 0, edge_cases = 0, other = 0, mismatches = 0;
  std::map<std::vector<std::size_t>, std::size_t> witnesses;
  for (const auto* r1 : face_rotations) {
    for (const auto* r2 : face_rotations) {
      if (!shared_vertex_config(*r1, *r2, m.ico, m.graph)) continue;
      ++eligible;
      try {
        const auto out = shared_vertex_compose(*r1, *r2, m.ico, m.graph);
        if (out.kind == SharedVertexCase::not_edge_rotation) {
          ++other;
        } else {
          ++edge_cases;
          ++witnesses[out.product.images()];
        }
      } catch (const std::logic_error&) {
        ++mismatches;
      }
    }
  }

  report.invariant_check("fig2/eligible-pairs", eligible == 240, "240",
                         std::to_string(eligible));
  report.invariant_check("fig2/predictions-match", mismatches == 0,
                         "0 mismatches", std::to_string(mismatches) + " mismatches");
  report.invariant_check(
      "fig2/case-split", edge_cases == 120 && other == 120, "120 edge / 120 not",
      std::to_string(edge_cases) + " edge / " + std::to_string(other) + " not");

  bool multiple = witnesses.size() == 15;
  std::size_t low = eligible, high = 0;
  for (const auto& [img, count] : witnesses) {
    low = std::min(low, count);
    high = std::max(high, count);
  }
  multiple = multiple && low >= 2 && low == high;
  report.invariant_check(
      "fig2/multiplicity", multiple,
      "each of 15 edge rotations from >=2 ordered pairs, uniformly",
      std::to_string(witnesses.size()) + " rotations, " + std::to_string(low) +
          ".." + std::to_string(high) + " pairs each");
  return report;
}

inline VerificationReport verify_power_correspondence(const Model& m) {
  VerificationReport report;
  std::set<std::vector<std::size_t>> images;
  bool all_five_cycles = true;
  for (const auto& base : fixtures::kTable6) {
    const Permutation s = m.eval_letters(
        detail::join_letters(base.prefix_letters, base.last_letters));
    const Permutation q = m.hom.image_of(s);
    for (int beta = 1; beta <= 4; ++beta) {
      const Permutation lhs = m.hom.image_of(power(s, beta));
      const Permutation rhs = power(q, beta);
      report.invariant_check(
          "powers/S" + std::to_string(base.index) + "^" + std::to_string(beta),
          lhs == rhs, "image(S^b) = Q^b",
          lhs == rhs ? "image(S^b) = Q^b" : format_cycles(lhs) + " vs " +
                                                format_cycles(rhs));
      images.insert(rhs.images());
      if (!(cycle_type(rhs) == CycleType::of({{5, 1}}))) all_five_cycles = false;
    }
  }
  report.invariant_check("powers/distinct", images.size() == 24,
                         "24 distinct images", std::to_string(images.size()));
  report.invariant_check("powers/five-cycles", all_five_cycles,
                         "all images are 5-cycles",
                         all_five_cycles ? "all images are 5-cycles"
                                         : "some image is not a 5-cycle");

  // The sorted computed images reproduce the table-7 listing.
  std::vector<std::string> computed;
  for (const auto& img : images)
    computed.push_back(format_cycles(Permutation(a5_domain(), img)));
  std::sort(computed.begin(), computed.end());
  bool matches = computed.size() == fixtures::kTable7.size();
  for (std::size_t i = 0; matches && i < computed.size(); ++i)
    if (computed[i] != fixtures::kTable7[i].cycles) matches = false;
  report.fixture_check("powers/table7-listing", matches,
                       "sorted images equal the table-7 rows",
                       matches ? "sorted images equal the table-7 rows"
                               : "listing differs");
  return report;
}

inline VerificationReport verify_roundtrip(const Model& m) {
  VerificationReport report;
  bool ico_ok = true;
  for (const auto& p : m.ico.elements())
    if (!(parse_cycles(format_cycles(p), m.ico.domain()) == p)) ico_ok = false;
  report.invariant_check("roundtrip/rotations", ico_ok, "60 of 60",
                         ico_ok ? "60 of 60" : "round trip broken");
  bool a5_ok = true;
  for (const auto& p : m.a5.elements())
    if (!(parse_cycles(format_cycles(p), m.a5.domain()) == p)) a5_ok = false;
  report.invariant_check("roundtrip/a5", a5_ok, "60 of 60",
                         a5_ok ? "60 of 60" : "round trip broken");
  return report;
}

/// The full deterministic suite: invariants first, then the seven tables.
inline VerificationReport verify_all(const Model& m) {
  VerificationReport report;
  report.append(verify_group_orders(m));
  report.append(verify_relation_suite(m));
  report.append(verify_census(m));
  report.append(verify_geometry(m));
  report.append(verify_isomorphism_suite(m));
  report.append(verify_trichotomy(m));
  report.append(verify_power_correspondence(m));
  report.append(verify_roundtrip(m));
  for (int n = 1; n <= 7; ++n) report.append(verify_table(m, n));
  return report;
}

}  // namespace icosa
