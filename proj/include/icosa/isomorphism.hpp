#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "icosa/domains.hpp"
#include "icosa/error.hpp"
#include "icosa/group.hpp"
#include "icosa/icosahedron.hpp"
#include "icosa/notation.hpp"
#include "icosa/permutation.hpp"

namespace icosa {

/// The order-60 group on {1..5} generated by the three 3-cycles
/// (1,4,5), (2,4,5), (3,4,5), with the same generator names as the
/// rotation side.
inline Group build_a5() {
  const Domain& dom = a5_domain();
  return generate(GeneratorSet({{"D", parse_cycles("(1,4,5)", dom)},
                                {"Y", parse_cycles("(2,4,5)", dom)},
                                {"T", parse_cycles("(3,4,5)", dom)}}));
}

/// A candidate homomorphism between two concrete finite groups, given by
/// generator images and materialized over every source element. The map
/// is only a candidate until verify_isomorphism has checked it; both
/// groups are stored by value, so the object is self-contained.
class Homomorphism {
public:
  Homomorphism(Group source, Group target,
               std::vector<NamedGenerator> generator_images,
               std::vector<Permutation> element_images)
      : source_(std::move(source)),
        target_(std::move(target)),
        generator_images_(std::move(generator_images)),
        element_images_(std::move(element_images)) {
    if (element_images_.size() != source_.order())
      throw Error("element image list does not cover the source group");
    // Build the reverse index when the images form a bijection onto the
    // target; otherwise leave it empty and let preimage_of refuse.
    std::map<std::vector<std::size_t>, std::size_t> seen;
    bool bijective = element_images_.size() == target_.order();
    for (std::size_t i = 0; bijective && i < element_images_.size(); ++i) {
      const auto idx = target_.index_of(element_images_[i]);
      if (!idx || !seen.emplace(element_images_[i].images(), i).second)
        bijective = false;
    }
    if (bijective) {
      preimage_.resize(target_.order());
      for (std::size_t i = 0; i < element_images_.size(); ++i)
        preimage_[*target_.index_of(element_images_[i])] = i;
      has_preimage_ = true;
    }
  }

  const Group& source() const noexcept { return source_; }
  const Group& target() const noexcept { return target_; }
  const std::vector<NamedGenerator>& generator_images() const noexcept {
    return generator_images_;
  }

  const Permutation& image_at(std::size_t source_index) const {
    return element_images_.at(source_index);
  }

  const Permutation& image_of(const Permutation& g) const {
    const auto idx = source_.index_of(g);
    if (!idx) throw Error("permutation is not an element of the source group");
    return element_images_[*idx];
  }

  /// The reverse direction, available once the images are a verified
  /// bijection onto the target.
  const Permutation& preimage_of(const Permutation& h) const {
    if (!has_preimage_)
      throw Error("the map is not a bijection onto the target group");
    const auto idx = target_.index_of(h);
    if (!idx) throw Error("permutation is not an element of the target group");
    return source_.element(preimage_[*idx]);
  }

private:
  Group source_;
  Group target_;
  std::vector<NamedGenerator> generator_images_;
  std::vector<Permutation> element_images_;
  std::vector<std::size_t> preimage_;
  bool has_preimage_ = false;
};

/// Builds the candidate map: each source element is sent through its
/// shortest generator word, evaluated in the target over the given
/// generator images. Well-definedness is not assumed here; it is what
/// verify_isomorphism establishes by exhaustive checking.
inline Homomorphism extend_hom(const Group& source, const Group& target,
                               std::vector<NamedGenerator> generator_images) {
  const GeneratorSet image_set{generator_images};
  std::vector<Permutation> element_images;
  element_images.reserve(source.order());
  for (std::size_t i = 0; i < source.order(); ++i)
    element_images.push_back(evaluate_word(image_set, source.word_at(i)));
  return Homomorphism(source, target, std::move(generator_images),
                      std::move(element_images));
}

/// Exhaustive isomorphism oracle: multiplicativity over every ordered
/// pair of source elements, injectivity, and surjectivity onto the
/// target. Failures are counted, never thrown.
struct IsoReport {
  std::size_t pair_checks = 0;
  std::size_t multiplicativity_failures = 0;
  std::string first_failure;
  bool injective = false;
  bool surjective = false;

  bool pass() const {
    return multiplicativity_failures == 0 && injective && surjective;
  }
};

inline IsoReport verify_isomorphism(const Homomorphism& h) {
  IsoReport report;
  const Group& src = h.source();

  for (std::size_t i = 0; i < src.order(); ++i) {
    for (std::size_t j = 0; j < src.order(); ++j) {
      ++report.pair_checks;
      const Permutation product = compose(src.element(i), src.element(j));
      const auto product_index = src.index_of(product);
      const bool ok =
          product_index &&
          h.image_at(*product_index) == compose(h.image_at(i), h.image_at(j));
      if (!ok) {
        ++report.multiplicativity_failures;
        if (report.first_failure.empty())
          report.first_failure = "image(g" + std::to_string(i) + " * g" +
                                 std::to_string(j) +
                                 ") != image(g" + std::to_string(i) +
                                 ") * image(g" + std::to_string(j) + ")";
      }
    }
  }

  std::map<std::vector<std::size_t>, std::size_t> distinct;
  for (std::size_t i = 0; i < src.order(); ++i)
    distinct.emplace(h.image_at(i).images(), i);
  report.injective = distinct.size() == src.order();

  std::size_t hit = 0;
  for (const auto& t : h.target().elements())
    if (distinct.count(t.images())) ++hit;
  report.surjective = hit == h.target().order();

  return report;
}

/// Checks (a,b,c)(a,b,d) == (a,d)(b,c) for four distinct points of the
/// domain, under left-to-right composition.
inline bool double_transposition_identity(const Label& a, const Label& b,
                                          const Label& c, const Label& d,
                                          const Domain& dom) {
  const std::size_t pa = dom.position(a), pb = dom.position(b),
                    pc = dom.position(c), pd = dom.position(d);
  if (pa == pb || pa == pc || pa == pd || pb == pc || pb == pd || pc == pd)
    throw Error("the four points must be distinct");

  auto cycle3 = [&](std::size_t x, std::size_t y, std::size_t z) {
    std::vector<std::size_t> img(dom.size());
    std::iota(img.begin(), img.end(), std::size_t{0});
    img[x] = y;
    img[y] = z;
    img[z] = x;
    return Permutation(dom, std::move(img));
  };
  auto swap2 = [&](std::vector<std::size_t>& img, std::size_t x, std::size_t y) {
    img[x] = y;
    img[y] = x;
  };

  std::vector<std::size_t> rhs_img(dom.size());
  std::iota(rhs_img.begin(), rhs_img.end(), std::size_t{0});
  swap2(rhs_img, pa, pd);
  swap2(rhs_img, pb, pc);

  return compose(cycle3(pa, pb, pc), cycle3(pa, pb, pd)) ==
         Permutation(dom, std::move(rhs_img));
}

/// One row of the verified 60-element bijection.
struct CorrespondenceRow {
  std::size_t element_index;  // index into the source group
  Word word;                  // certified shortest generator word
  Permutation rotation;
  RotationClass cls;
  Permutation image;          // the A5 element
  CycleType image_class;
};

struct Correspondence {
  std::vector<CorrespondenceRow> rows;
};

/// Materializes the 60-row table: identity first, then face rotations
/// grouped by axis, then edge rotations by axis, then vertex rotations
/// by axis; within an axis, rows are ascending powers of the
/// lexicographically least rotation about it. Class correspondence and
/// bijectivity are asserted during construction.
inline Correspondence full_correspondence(const Homomorphism& h,
                                          const IcosaGraph& g) {
  const Group& src = h.source();
  if (!(src.domain() == g.vertices()))
    throw Error("the source group does not act on the graph's vertices");

  struct AxisGroup {
    std::vector<std::size_t> key;
    std::vector<std::size_t> members;  // element indices
  };
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> face_axes,
      edge_axes, vertex_axes;
  std::vector<RotationClass> classes(src.order());

  std::optional<std::size_t> identity_index;
  for (std::size_t i = 0; i < src.order(); ++i) {
    classes[i] = classify_rotation(src.element(i), src, g);
    std::vector<std::size_t> key;
    for (const auto& comp : classes[i].axis)
      key.insert(key.end(), comp.begin(), comp.end());
    switch (classes[i].kind) {
      case RotationKind::identity: identity_index = i; break;
      case RotationKind::face: face_axes[key].push_back(i); break;
      case RotationKind::edge: edge_axes[key].push_back(i); break;
      case RotationKind::vertex: vertex_axes[key].push_back(i); break;
    }
  }
  if (!identity_index) throw Error("the source group has no identity element");

  Correspondence out;
  auto add_row = [&](std::size_t i) {
    out.rows.push_back({i, src.word_at(i), src.element(i), classes[i],
                        h.image_at(i), cycle_type(h.image_at(i))});
  };

  // Within one axis, order the rotations as ascending powers of the
  // lexicographically least member.
  auto add_axis_members = [&](const std::vector<std::size_t>& members) {
    const std::size_t base = *std::min_element(
        members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
          return src.element(a).images() < src.element(b).images();
        });
    Permutation acc = src.element(base);
    for (std::size_t k = 0; k < members.size(); ++k) {
      const auto idx = src.index_of(acc);
      if (!idx || std::find(members.begin(), members.end(), *idx) ==
                      members.end())
        throw Error("axis members are not powers of one rotation");
      add_row(*idx);
      acc = compose(acc, src.element(base));
    }
  };

  add_row(*identity_index);
  for (const auto& [key, members] : face_axes) add_axis_members(members);
  for (const auto& [key, members] : edge_axes) add_axis_members(members);
  for (const auto& [key, members] : vertex_axes) add_axis_members(members);

  if (out.rows.size() != src.order())
    throw Error("correspondence has " + std::to_string(out.rows.size()) +
                " rows, expected " + std::to_string(src.order()));

  // Distinct images and the class/cycle-type pairing.
  std::map<std::vector<std::size_t>, std::size_t> image_set;
  for (const auto& row : out.rows) {
    image_set.emplace(row.image.images(), row.element_index);
    CycleType expected;
    switch (row.cls.kind) {
      case RotationKind::identity: expected = CycleType::of({{1, 5}}); break;
      case RotationKind::face: expected = CycleType::of({{1, 2}, {3, 1}}); break;
      case RotationKind::edge: expected = CycleType::of({{1, 1}, {2, 2}}); break;
      case RotationKind::vertex: expected = CycleType::of({{5, 1}}); break;
    }
    if (!(row.image_class == expected))
      throw Error("class correspondence fails for row with word " +
                  row.word.str());
  }
  if (image_set.size() != out.rows.size())
    throw Error("correspondence images are not distinct");

  return out;
}

}  // namespace icosa
