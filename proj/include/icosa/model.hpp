#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "icosa/domains.hpp"
#include "icosa/error.hpp"
#include "icosa/fixtures.hpp"
#include "icosa/group.hpp"
#include "icosa/icosahedron.hpp"
#include "icosa/isomorphism.hpp"
#include "icosa/notation.hpp"

namespace icosa {

/// Everything derived from the three generators in one immutable bundle:
/// the two order-60 groups, the reconstructed icosahedron, the verified
/// homomorphism onto A5, per-element classifications and the 60-row
/// correspondence. Built once, shared read-only.
struct Model {
  GeneratorSet ico_gens;
  Group ico;
  IcosaGraph graph;
  Group a5;
  Homomorphism hom;
  std::vector<RotationClass> classes;  // indexed like ico.elements()
  Correspondence correspondence;
  // The ten named rotations D,Y,T,A,Z,V,W,B,C,X, with D,Y,T the
  // generators and the rest computed from their defining words.
  std::vector<std::pair<std::string, Permutation>> named_rotations;

  const Permutation& rotation_named(std::string_view name) const {
    for (const auto& [n, p] : named_rotations)
      if (n == name) return p;
    throw Error("no rotation named '" + std::string(name) + "'");
  }

  /// Left-to-right product of named rotations given as letters, e.g.
  /// "XXD"; spaces are ignored.
  Permutation eval_letters(std::string_view letters) const {
    Permutation acc = identity(ico_gens.domain());
    for (char c : letters) {
      if (c == ' ') continue;
      acc = compose(acc, rotation_named(std::string_view(&c, 1)));
    }
    return acc;
  }

  const RotationClass& class_of(std::size_t element_index) const {
    return classes.at(element_index);
  }
};

inline Model make_model() {
  GeneratorSet gens = fixtures::icosahedron_generators();
  Group ico = generate(gens);
  IcosaGraph graph = build_graph(ico, fixtures::seed_face());
  Group a5 = build_a5();

  std::vector<NamedGenerator> images;
  for (const auto& row : fixtures::kTable2) {
    if (row.rotation_letters.size() == 1 &&
        (row.rotation_letters == "D" || row.rotation_letters == "Y" ||
         row.rotation_letters == "T")) {
      images.push_back({std::string(row.rotation_letters),
                        parse_cycles(row.a5_cycles, a5_domain())});
    }
  }
  Homomorphism hom = extend_hom(ico, a5, std::move(images));

  std::vector<RotationClass> classes;
  classes.reserve(ico.order());
  for (const auto& p : ico.elements())
    classes.push_back(classify_rotation(p, ico, graph));

  Correspondence correspondence = full_correspondence(hom, graph);

  std::vector<std::pair<std::string, Permutation>> named;
  for (std::string_view name : {"D", "Y", "T"})
    named.emplace_back(std::string(name), gens.value_of(name));
  auto value_named = [&](std::string_view n) -> const Permutation& {
    for (const auto& [name, p] : named)
      if (name == n) return p;
    throw Error("word refers to '" + std::string(n) +
                "' before it is defined");
  };
  for (const auto& def : fixtures::kTable1Words) {
    Permutation acc = identity(gens.domain());
    for (char c : def.letters)
      acc = compose(acc, value_named(std::string_view(&c, 1)));
    named.emplace_back(std::string(def.name), std::move(acc));
  }

  return Model{std::move(gens),  std::move(ico),   std::move(graph),
               std::move(a5),    std::move(hom),   std::move(classes),
               std::move(correspondence), std::move(named)};
}

/// The shared read-only instance used by the verifier and the CLI.
inline const Model& standard_model() {
  static const Model model = make_model();
  return model;
}

}  // namespace icosa
