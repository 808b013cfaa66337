// Acceptance suite: one check per shipping criterion, one line of output
// each, exit 0 only when every criterion holds. All checks are exact
// integer/combinatorial comparisons; there are no tolerances to tune.

#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "icosa/cli.hpp"
#include "icosa/domains.hpp"
#include "icosa/fixtures.hpp"
#include "icosa/model.hpp"
#include "icosa/notation.hpp"
#include "icosa/render.hpp"
#include "icosa/verify.hpp"

using namespace icosa;

namespace {

struct Criterion {
  std::string title;
  std::function<bool(std::string&)> run;
};

bool check_group_orders(std::string& detail) {
  const Group ico = generate(fixtures::icosahedron_generators());
  const Group a5 = build_a5();
  detail = "|<D,Y,T>| = " + std::to_string(ico.order()) +
           ", |<(1,4,5),(2,4,5),(3,4,5)>| = " + std::to_string(a5.order());
  return ico.order() == 60 && a5.order() == 60;
}

bool check_relations(std::string& detail) {
  const Model& m = standard_model();
  const auto relations = fixtures::relation_words();
  const RelationReport ico = verify_relations(m.ico_gens, relations);
  const RelationReport a5 = verify_relations(m.a5.generators(), relations);
  std::size_t held = 0;
  for (const auto& c : ico.checks) held += c.pass ? 1 : 0;
  for (const auto& c : a5.checks) held += c.pass ? 1 : 0;
  detail = std::to_string(held) + "/12 relations hold on the two sides";
  return ico.all_pass() && a5.all_pass();
}

bool check_words(std::string& detail) {
  const Model& m = standard_model();
  const VerificationReport r =
      verify_table1(m, fixtures::kTable1, fixtures::kTable1Words);
  detail = std::to_string(r.passes()) + "/10 rows match (" +
           std::to_string(r.erratas()) + " errata)";
  return r.failures() == 0 && r.erratas() == 0;
}

bool check_census(std::string& detail) {
  const Model& m = standard_model();
  const auto ico = partition_by_cycle_type(m.ico);
  const auto a5 = partition_by_cycle_type(m.a5);
  const std::size_t ico_id = ico.at(CycleType::of({{1, 12}})).size();
  const std::size_t ico_face = ico.at(CycleType::of({{3, 4}})).size();
  const std::size_t ico_edge = ico.at(CycleType::of({{2, 6}})).size();
  const std::size_t ico_vertex = ico.at(CycleType::of({{1, 2}, {5, 2}})).size();
  const std::size_t a5_id = a5.at(CycleType::of({{1, 5}})).size();
  const std::size_t a5_3 = a5.at(CycleType::of({{1, 2}, {3, 1}})).size();
  const std::size_t a5_22 = a5.at(CycleType::of({{1, 1}, {2, 2}})).size();
  const std::size_t a5_5 = a5.at(CycleType::of({{5, 1}})).size();
  detail = "rotations " + std::to_string(ico_id) + "/" +
           std::to_string(ico_face) + "/" + std::to_string(ico_edge) + "/" +
           std::to_string(ico_vertex) + ", a5 " + std::to_string(a5_id) + "/" +
           std::to_string(a5_3) + "/" + std::to_string(a5_22) + "/" +
           std::to_string(a5_5);
  const bool derived_twenty = a5_3 == 60 - 1 - 15 - 24;
  return ico_id == 1 && ico_face == 20 && ico_edge == 15 && ico_vertex == 24 &&
         a5_id == 1 && a5_3 == 20 && a5_22 == 15 && a5_5 == 24 &&
         derived_twenty;
}

bool check_isomorphism(std::string& detail) {
  const IsoReport r = verify_isomorphism(standard_model().hom);
  detail = std::to_string(r.pair_checks) + " pairs, " +
           std::to_string(r.multiplicativity_failures) + " failures, " +
           (r.injective ? "injective" : "NOT injective") + ", " +
           (r.surjective ? "surjective" : "NOT surjective");
  return r.pass() && r.pair_checks == 3600;
}

bool check_geometry(std::string& detail) {
  const Model& m = standard_model();
  const IcosaGraph fresh =
      build_graph(generate(fixtures::icosahedron_generators()),
                  fixtures::seed_face());
  bool regular = true;
  for (std::size_t v = 0; v < fresh.vertices().size(); ++v)
    if (fresh.neighbors(v).size() != 5) regular = false;
  bool pairs = true;
  for (const auto& [a, b] : fixtures::kAntipodePairs) {
    const auto pa = fresh.vertices().find(a);
    const auto pb = fresh.vertices().find(b);
    if (!pa || !pb || fresh.antipode(*pa) != *pb) pairs = false;
  }
  detail = std::to_string(fresh.faces().size()) + " faces, " +
           std::to_string(fresh.edges().size()) + " edges, " +
           std::to_string(fresh.vertices().size()) + " vertices, " +
           (regular ? "5-regular" : "NOT 5-regular") + ", " +
           (pairs ? "antipodes match the six stated pairs"
                  : "antipode mismatch");
  return fresh.faces().size() == 20 && fresh.edges().size() == 30 &&
         fresh.vertices().size() == 12 && regular && pairs &&
         m.graph.faces().size() == 20;
}

bool check_trichotomy(std::string& detail) {
  const Model& m = standard_model();
  std::vector<const Permutation*> face_rotations;
  for (std::size_t i = 0; i < m.ico.order(); ++i)
    if (m.class_of(i).kind == RotationKind::face)
      face_rotations.push_back(&m.ico.element(i));

  std::size_t eligible = 0, mismatches = 0;
  std::map<std::vector<std::size_t>, std::size_t> witnesses;
  for (const auto* r1 : face_rotations)
    for (const auto* r2 : face_rotations) {
      if (!shared_vertex_config(*r1, *r2, m.ico, m.graph)) continue;
      ++eligible;
      try {
        const auto out = shared_vertex_compose(*r1, *r2, m.ico, m.graph);
        if (out.kind != SharedVertexCase::not_edge_rotation)
          ++witnesses[out.product.images()];
      } catch (const std::logic_error&) {
        ++mismatches;
      }
    }

  std::size_t max_witnesses = 0;
  for (const auto& [img, count] : witnesses)
    max_witnesses = std::max(max_witnesses, count);
  detail = std::to_string(eligible) + " eligible ordered pairs, " +
           std::to_string(mismatches) + " prediction mismatches, best-" +
           "witnessed edge rotation has " + std::to_string(max_witnesses) +
           " pairs";
  return eligible > 0 && mismatches == 0 && max_witnesses >= 2;
}

bool check_tables(std::string& detail) {
  const Model& m = standard_model();
  std::size_t fails = 0, erratas = 0;
  for (int n = 1; n <= 7; ++n) {
    const VerificationReport r = verify_table(m, n);
    fails += r.failures();
    erratas += r.erratas();
  }
  detail = "tables 1..7: " + std::to_string(fails) + " fail, " +
           std::to_string(erratas) + " errata";
  return fails == 0;
}

bool check_powers(std::string& detail) {
  const Model& m = standard_model();
  std::set<std::string> images;
  bool all_match = true;
  for (const auto& base : fixtures::kTable6) {
    const Permutation s = m.eval_letters(std::string(base.prefix_letters) +
                                         std::string(base.last_letters));
    const Permutation q = m.hom.image_of(s);
    for (int beta = 1; beta <= 4; ++beta) {
      if (!(m.hom.image_of(power(s, beta)) == power(q, beta)))
        all_match = false;
      images.insert(format_cycles(power(q, beta)));
    }
  }
  std::vector<std::string> sorted(images.begin(), images.end());
  bool matches_table = sorted.size() == fixtures::kTable7.size();
  for (std::size_t i = 0; matches_table && i < sorted.size(); ++i)
    if (sorted[i] != fixtures::kTable7[i].cycles) matches_table = false;
  detail = "24 power images, " + std::to_string(images.size()) +
           " distinct, lexicographic listing " +
           (matches_table ? "matches" : "differs");
  return all_match && images.size() == 24 && matches_table;
}

bool check_roundtrip_and_determinism(std::string& detail) {
  const Model& m = standard_model();
  std::size_t round = 0;
  for (const auto& p : m.ico.elements())
    if (parse_cycles(format_cycles(p), m.ico.domain()) == p) ++round;
  for (const auto& p : m.a5.elements())
    if (parse_cycles(format_cycles(p), m.a5.domain()) == p) ++round;

  std::ostringstream out1, err1, out2, err2;
  const int c1 = cli_main({"verify", "--json"}, out1, err1);
  const int c2 = cli_main({"verify", "--json"}, out2, err2);
  const bool stable = c1 == 0 && c2 == 0 && out1.str() == out2.str();
  detail = std::to_string(round) + "/120 round trips, verify --json " +
           (stable ? "byte-identical across runs" : "UNSTABLE");
  return round == 120 && stable;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"group orders are 60 on both sides", check_group_orders},
      {"defining relations hold on both sides", check_relations},
      {"table-1 words evaluate to their rows", check_words},
      {"class census is 1/20/15/24 on both sides", check_census},
      {"isomorphism oracle: 3600 pairs, injective, surjective",
       check_isomorphism},
      {"geometry reconstruction from the seed face", check_geometry},
      {"shared-vertex trichotomy with repeated witnesses", check_trichotomy},
      {"tables 1..7 verify with zero failures", check_tables},
      {"power correspondence matches the table-7 listing", check_powers},
      {"cycle round-trip and byte-stable verify --json",
       check_roundtrip_and_determinism},
  };

  std::size_t passed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (ok) ++passed;
    std::cout << "[" << (i + 1 < 10 ? " " : "") << i + 1 << "/10] "
              << (ok ? "PASS" : "FAIL") << "  " << criteria[i].title << " ("
              << detail << ")\n";
  }
  std::cout << "acceptance: " << passed << "/" << criteria.size()
            << " criteria passed\n";
  return passed == criteria.size() ? 0 : 1;
}
