#pragma once

#include <array>
#include <string_view>
#include <utility>
#include <vector>

#include "icosa/domains.hpp"
#include "icosa/group.hpp"
#include "icosa/permutation.hpp"

namespace icosa::fixtures {

// Read-only reference dataset: the seven tables that the verifier checks
// against computed truth. These rows are transcribed exactly as given,
// including any typos; the verifier's errata channel is the designated
// place for discrepancies, so do not "correct" entries here.

/// Vertex column order shared by table 1 and the icosahedron domain.
inline constexpr std::array<std::string_view, 12> kVertexOrder = {
    "1", "2", "3", "1'", "2'", "3'", "1+", "2+", "3+", "1''", "2''", "3''"};

// ---------------------------------------------------------------------------
// Table 1: face rotations as full vertex-image rows.
// D, Y, T are the defining generators; the others are named products.

struct Table1Row {
  std::string_view name;
  std::array<std::string_view, 12> images;
};

inline constexpr std::array<Table1Row, 10> kTable1 = {{
    {"D", {"3", "3'", "2+", "2", "1''", "1'", "2''", "1", "1+", "3''", "3+", "2'"}},
    {"Y", {"3+", "1", "1'", "2'", "3", "2''", "2+", "3''", "2", "3'", "1''", "1+"}},
    {"T", {"2'", "1+", "2", "3''", "3'", "1", "3", "3+", "1''", "2+", "1'", "2''"}},
    {"A", {"1+", "1''", "3'", "2", "3''", "2+", "2''", "3", "2'", "1'", "1", "3+"}},
    {"Z", {"1'", "2+", "2''", "3+", "3", "1''", "3'", "3''", "1", "1+", "2'", "2"}},
    {"V", {"3''", "2'", "3+", "2''", "1+", "1", "2", "1'", "1''", "3", "2+", "3'"}},
    {"X", {"2", "3", "1", "2'", "3'", "1'", "2+", "3+", "1+", "2''", "3''", "1''"}},
    {"W", {"2'", "1''", "1+", "3+", "2''", "3", "3'", "2", "3''", "2+", "1", "1'"}},
    {"B", {"2+", "3'", "2''", "1", "1+", "3''", "1''", "1'", "3", "2'", "3+", "2"}},
    {"C", {"3''", "3+", "1'", "1''", "2", "2+", "1", "2''", "2'", "3", "3'", "1+"}},
}};

/// Defining words for the non-generator rows of table 1. X is given in
/// terms of the already-defined A and V (X = Y A A Y V).
struct WordDef {
  std::string_view name;
  std::string_view letters;
};

inline constexpr std::array<WordDef, 7> kTable1Words = {{
    {"A", "DYDT"},
    {"Z", "YTYD"},
    {"V", "TDTY"},
    {"W", "DTYT"},
    {"B", "YDTD"},
    {"C", "TYDY"},
    {"X", "YAAYV"},
}};

// ---------------------------------------------------------------------------
// Table 2: the ten 3-cycles of A5 paired with face rotations.

struct Table2Row {
  std::string_view a5_cycles;
  std::string_view rotation_display;  // e.g. "C^2"
  std::string_view rotation_letters;  // e.g. "CC"
};

inline constexpr std::array<Table2Row, 10> kTable2 = {{
    {"(1,4,5)", "D", "D"},
    {"(2,4,5)", "Y", "Y"},
    {"(3,4,5)", "T", "T"},
    {"(1,3,5)", "C^2", "CC"},
    {"(2,3,5)", "B", "B"},
    {"(1,2,5)", "W", "W"},
    {"(1,3,4)", "Z^2", "ZZ"},
    {"(2,3,4)", "A", "A"},
    {"(1,2,4)", "V", "V"},
    {"(1,2,3)", "X", "X"},
}};

// ---------------------------------------------------------------------------
// Table 3: each edge rotation's pair of opposite axis edges and one
// ordered pair of face rotations generating it. The last three rows are
// the ones produced by the second shared-vertex configuration.

struct Table3Row {
  std::string_view edge1;
  std::string_view edge2;
  std::string_view word;
};

inline constexpr std::array<Table3Row, 15> kTable3 = {{
    {"(1,2)", "(1'',2'')", "CZ"},
    {"(3+,2)", "(3',2'')", "ZX"},
    {"(2,3)", "(2'',3'')", "YD"},
    {"(1+,2)", "(1',2'')", "XW"},
    {"(3,1)", "(3'',1'')", "TY"},
    {"(2+,3)", "(2',3'')", "XB"},
    {"(1,3+)", "(3',1'')", "XC"},
    {"(1',3+)", "(3',1+)", "BY"},
    {"(3,1+)", "(1',3'')", "VX"},
    {"(1',2+)", "(2',1+)", "CT"},
    {"(1,2+)", "(2',1'')", "AX"},
    {"(2',3+)", "(3',2+)", "YV"},
    {"(1,1')", "(1+,1'')", "DY"},
    {"(2,2')", "(2+,2'')", "YT"},
    {"(3,3')", "(3+,3'')", "TD"},
}};

/// Number of leading table-3 rows that come from the first configuration
/// (axis edge [u,z]); the final three come from the second ([x,a]).
inline constexpr std::size_t kTable3FirstConfigRows = 12;

// ---------------------------------------------------------------------------
// Table 4: edge rotations against the double transpositions of A5.
// Each chain is: product of the two factor 3-cycles, an optional
// notational rewrite of the same cycles, and the resulting double
// transposition with its fixed point. The factor cycles are not
// disjoint, so the verifier composes them explicitly instead of parsing
// the product as one expression.

struct Table4Row {
  std::string_view word;
  std::string_view factor1;
  std::string_view factor2;
  std::string_view rewrite1;  // empty when the row has no middle step
  std::string_view rewrite2;
  std::string_view transpositions;
  std::string_view fixed_point;
};

inline constexpr std::array<Table4Row, 15> kTable4 = {{
    {"CZ", "(1,5,3)", "(1,4,3)", "(3,1,5)", "(3,1,4)", "(3,4)(1,5)", "2"},
    {"YD", "(2,4,5)", "(1,4,5)", "(4,5,2)", "(4,5,1)", "(4,1)(5,2)", "3"},
    {"TY", "(3,4,5)", "(2,4,5)", "(4,5,3)", "(4,5,2)", "(4,2)(5,3)", "1"},
    {"XC", "(1,2,3)", "(1,5,3)", "(3,1,2)", "(3,1,5)", "(3,5)(1,2)", "4"},
    {"VX", "(1,2,4)", "(1,2,3)", "", "", "(1,3)(2,4)", "5"},
    {"AX", "(2,3,4)", "(1,2,3)", "(2,3,4)", "(2,3,1)", "(2,1)(3,4)", "5"},
    {"ZX", "(1,4,3)", "(1,2,3)", "(3,1,4)", "(3,1,2)", "(3,2)(1,4)", "5"},
    {"XW", "(1,2,3)", "(1,2,5)", "", "", "(1,5)(2,3)", "4"},
    {"XB", "(1,2,3)", "(2,3,5)", "(2,3,1)", "(2,3,5)", "(2,5)(1,3)", "4"},
    {"BY", "(2,3,5)", "(2,4,5)", "(5,2,3)", "(5,2,4)", "(5,4)(2,3)", "1"},
    {"CT", "(1,5,3)", "(3,4,5)", "(5,3,1)", "(5,3,4)", "(5,4)(3,1)", "2"},
    {"YV", "(2,4,5)", "(1,2,4)", "(2,4,5)", "(2,4,1)", "(2,1)(4,5)", "3"},
    {"DY", "(1,4,5)", "(2,4,5)", "(4,5,1)", "(4,5,2)", "(4,2)(5,1)", "3"},
    {"YT", "(2,4,5)", "(3,4,5)", "(4,5,2)", "(4,5,3)", "(4,3)(5,2)", "1"},
    {"TD", "(3,4,5)", "(1,4,5)", "(4,5,3)", "(4,5,1)", "(4,1)(5,3)", "2"},
}};

// ---------------------------------------------------------------------------
// Table 5: one vertex rotation per axis, written as a product of face
// rotations, with its fixed vertex pair and its two 5-cycles.

struct Table5Row {
  std::string_view display;  // e.g. "X^2D"
  std::string_view letters;  // e.g. "XXD"
  std::string_view fixed1;
  std::string_view fixed2;
  std::string_view cycle1;
  std::string_view cycle2;
};

inline constexpr std::array<Table5Row, 6> kTable5 = {{
    {"X^2D", "XXD", "1'", "1+", "(1,2+,2'',3'',3+)", "(2,3,3',1'',2')"},
    {"X^2Y", "XXY", "2'", "2+", "(1,1',2'',3',3)", "(2,3+,3'',1'',1+)"},
    {"X^2T", "XXT", "3'", "3+", "(1,2,2',3'',1')", "(3,1+,1'',2'',2+)"},
    {"W^2A", "WWA", "1", "1''", "(2,3,2+,1',3+)", "(2',1+,3',2'',3'')"},
    {"B^2Z", "BBZ", "2", "2''", "(1,3+,2',1+,3)", "(1',3'',1'',3',2+)"},
    {"C^2V", "CCV", "3", "3''", "(1,2,1+,3',2+)", "(1',3+,2',1'',2'')"},
}};

// ---------------------------------------------------------------------------
// Table 6: the 5-cycle Q_i associated with each table-5 rotation S_i,
// derived by composing the images of its two factors.

struct Table6Row {
  int index;                        // i in S_i / Q_i
  std::string_view display;         // e.g. "X^2D"
  std::string_view prefix_letters;  // squared factor, e.g. "XX"
  std::string_view last_letters;    // trailing factor, e.g. "D"
  std::string_view factor1;
  std::string_view factor2;
  std::string_view q_cycles;
};

inline constexpr std::array<Table6Row, 6> kTable6 = {{
    {1, "X^2D", "XX", "D", "(1,3,2)", "(1,4,5)", "(1,3,2,4,5)"},
    {2, "X^2Y", "XX", "Y", "(1,3,2)", "(2,4,5)", "(1,3,4,5,2)"},
    {3, "X^2T", "XX", "T", "(1,3,2)", "(3,4,5)", "(1,4,5,3,2)"},
    {4, "W^2A", "WW", "A", "(1,5,2)", "(2,3,4)", "(1,5,3,4,2)"},
    {5, "B^2Z", "BB", "Z", "(2,5,3)", "(1,4,3)", "(1,4,3,2,5)"},
    {6, "C^2V", "CC", "V", "(1,3,5)", "(1,2,4)", "(1,3,5,2,4)"},
}};

// ---------------------------------------------------------------------------
// Table 7: all 24 five-cycles of A5 in lexicographic order, each written
// as a power of one of Q1..Q6.

struct Table7Row {
  std::string_view cycles;
  int q_index;
  int exponent;
};

inline constexpr std::array<Table7Row, 24> kTable7 = {{
    {"(1,2,3,4,5)", 6, 3}, {"(1,2,3,5,4)", 3, 4}, {"(1,2,4,3,5)", 4, 4},
    {"(1,2,4,5,3)", 5, 3}, {"(1,2,5,3,4)", 1, 2}, {"(1,2,5,4,3)", 2, 4},
    {"(1,3,2,4,5)", 1, 1}, {"(1,3,2,5,4)", 4, 2}, {"(1,3,4,2,5)", 3, 3},
    {"(1,3,4,5,2)", 2, 1}, {"(1,3,5,2,4)", 6, 1}, {"(1,3,5,4,2)", 5, 2},
    {"(1,4,2,3,5)", 2, 2}, {"(1,4,2,5,3)", 6, 4}, {"(1,4,3,2,5)", 5, 1},
    {"(1,4,3,5,2)", 1, 3}, {"(1,4,5,2,3)", 4, 3}, {"(1,4,5,3,2)", 3, 1},
    {"(1,5,2,3,4)", 5, 4}, {"(1,5,2,4,3)", 3, 2}, {"(1,5,3,2,4)", 2, 3},
    {"(1,5,3,4,2)", 4, 1}, {"(1,5,4,2,3)", 1, 4}, {"(1,5,4,3,2)", 6, 2},
}};

// ---------------------------------------------------------------------------
// Geometry anchors.

/// Seed face for the orbit construction and its stated opposite face.
inline constexpr std::array<std::string_view, 3> kSeedFace = {"1", "2+", "3"};
inline constexpr std::array<std::string_view, 3> kSeedOppositeFace = {"1''", "3''", "2'"};

/// The six antipodal vertex pairs (the vertex-rotation axes).
inline constexpr std::array<std::array<std::string_view, 2>, 6> kAntipodePairs = {{
    {"1'", "1+"}, {"2'", "2+"}, {"3'", "3+"},
    {"1", "1''"}, {"2", "2''"}, {"3", "3''"},
}};

/// Defining relations, as word pairs over {D,Y,T} plus a display form.
struct RelationDef {
  std::string_view display;
  std::string_view lhs_letters;
  std::string_view rhs_letters;
};

inline constexpr std::array<RelationDef, 6> kRelations = {{
    {"D^3=I", "DDD", ""},
    {"Y^3=I", "YYY", ""},
    {"T^3=I", "TTT", ""},
    {"(DT)^2=I", "DTDT", ""},
    {"(DY)^2=I", "DYDY", ""},
    {"(YT)^2=I", "YTYT", ""},
}};

/// Per-table one-line titles, indexed by table id 1..7.
inline constexpr std::array<std::string_view, 8> kTableTitles = {
    "",
    "face rotations and vertex permutations",
    "the 3-cycles of A5 and the face rotations",
    "edge rotations as products of face rotations",
    "edge rotations and the double transpositions of A5",
    "vertex rotations generated by face rotations",
    "the base 5-cycle Q_i for each vertex axis",
    "the 24 five-cycles of A5 as powers of Q_i",
};

// ---------------------------------------------------------------------------
// Typed accessors.

/// Builds the permutation described by a table-1 row (a full image list
/// in vertex column order).
inline Permutation row_permutation(const Table1Row& row) {
  const Domain& dom = icosahedron_domain();
  std::vector<std::size_t> images(dom.size());
  for (std::size_t i = 0; i < row.images.size(); ++i) {
    auto pos = dom.find(row.images[i]);
    if (!pos)
      throw Error("table 1 row " + std::string(row.name) +
                  " names unknown vertex '" + std::string(row.images[i]) + "'");
    images[i] = *pos;
  }
  return Permutation(dom, std::move(images));
}

inline const Table1Row& table1_row(std::string_view name) {
  for (const auto& row : kTable1)
    if (row.name == name) return row;
  throw Error("no table 1 row named '" + std::string(name) + "'");
}

/// The three defining generators D, Y, T acting on the 12 vertices.
inline GeneratorSet icosahedron_generators() {
  std::vector<NamedGenerator> gens;
  for (std::string_view name : {"D", "Y", "T"})
    gens.push_back({std::string(name), row_permutation(table1_row(name))});
  return GeneratorSet(std::move(gens));
}

inline std::array<Label, 3> seed_face() {
  return {Label(std::string(kSeedFace[0])), Label(std::string(kSeedFace[1])),
          Label(std::string(kSeedFace[2]))};
}

inline std::vector<std::pair<Word, Word>> relation_words() {
  std::vector<std::pair<Word, Word>> rels;
  for (const auto& r : kRelations)
    rels.emplace_back(Word::of_letters(r.lhs_letters),
                      Word::of_letters(r.rhs_letters));
  return rels;
}

}  // namespace icosa::fixtures
