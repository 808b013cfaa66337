#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "icosa/error.hpp"
#include "icosa/group.hpp"
#include "icosa/notation.hpp"
#include "icosa/permutation.hpp"

namespace icosa {

/// The combinatorial icosahedron: 12 vertices, 30 edges, 20 triangular
/// faces and the antipodal vertex pairing. Always derived from the group
/// action by build_graph, never typed in by hand. Immutable.
class IcosaGraph {
public:
  IcosaGraph(Domain vertices, std::vector<std::array<std::size_t, 2>> edges,
             std::vector<std::array<std::size_t, 3>> faces,
             std::vector<std::size_t> antipode)
      : vertices_(std::move(vertices)),
        edges_(std::move(edges)),
        faces_(std::move(faces)),
        antipode_(std::move(antipode)),
        adjacency_(vertices_.size()) {
    for (const auto& e : edges_) {
      adjacency_[e[0]].push_back(e[1]);
      adjacency_[e[1]].push_back(e[0]);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
  }

  const Domain& vertices() const noexcept { return vertices_; }
  const std::vector<std::array<std::size_t, 2>>& edges() const noexcept {
    return edges_;
  }
  const std::vector<std::array<std::size_t, 3>>& faces() const noexcept {
    return faces_;
  }

  static std::array<std::size_t, 2> edge_key(std::size_t a, std::size_t b) {
    return {std::min(a, b), std::max(a, b)};
  }

  static std::array<std::size_t, 3> face_key(std::array<std::size_t, 3> f) {
    std::sort(f.begin(), f.end());
    return f;
  }

  bool has_edge(std::size_t a, std::size_t b) const {
    return std::binary_search(edges_.begin(), edges_.end(), edge_key(a, b));
  }

  bool has_face(std::array<std::size_t, 3> f) const {
    return std::binary_search(faces_.begin(), faces_.end(), face_key(f));
  }

  std::size_t antipode(std::size_t v) const { return antipode_.at(v); }

  const Label& antipode(const Label& v) const {
    return vertices_.label(antipode_.at(vertices_.position(v)));
  }

  const std::vector<std::size_t>& neighbors(std::size_t v) const {
    return adjacency_.at(v);
  }

private:
  Domain vertices_;
  std::vector<std::array<std::size_t, 2>> edges_;  // sorted pairs, sorted
  std::vector<std::array<std::size_t, 3>> faces_;  // sorted triples, sorted
  std::vector<std::size_t> antipode_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

/// Reconstructs the icosahedron from the rotation group: faces are the
/// orbit of the seed face, edges are the pairs inside faces, and the
/// antipodal pairing is read off the fixed vertex pairs of the 24
/// order-5 elements. Every structural count is checked and a mismatch
/// reports the count found.
inline IcosaGraph build_graph(const Group& rotations,
                              const std::array<Label, 3>& seed_face) {
  const Domain& dom = rotations.domain();

  std::array<std::size_t, 3> seed{};
  for (std::size_t i = 0; i < 3; ++i) seed[i] = dom.position(seed_face[i]);
  if (seed[0] == seed[1] || seed[0] == seed[2] || seed[1] == seed[2])
    throw Error("seed face must have three distinct vertices");

  std::set<std::array<std::size_t, 3>> face_set;
  for (const auto& p : rotations.elements())
    face_set.insert(IcosaGraph::face_key(
        {p.image(seed[0]), p.image(seed[1]), p.image(seed[2])}));

  if (face_set.size() != 20)
    throw Error("face orbit produced " + std::to_string(face_set.size()) +
                " faces, expected 20");

  std::set<std::array<std::size_t, 2>> edge_set;
  std::set<std::size_t> covered;
  for (const auto& f : face_set) {
    edge_set.insert(IcosaGraph::edge_key(f[0], f[1]));
    edge_set.insert(IcosaGraph::edge_key(f[0], f[2]));
    edge_set.insert(IcosaGraph::edge_key(f[1], f[2]));
    covered.insert(f.begin(), f.end());
  }
  if (edge_set.size() != 30)
    throw Error("face orbit produced " + std::to_string(edge_set.size()) +
                " edges, expected 30");
  if (covered.size() != dom.size() || dom.size() != 12)
    throw Error("face orbit covers " + std::to_string(covered.size()) +
                " vertices, expected 12");

  // Antipodal pairing from the fixed vertex pairs of the order-5 elements.
  std::vector<std::optional<std::size_t>> pairing(dom.size());
  std::size_t order5 = 0;
  for (const auto& p : rotations.elements()) {
    if (order(p) != 5) continue;
    ++order5;
    const auto fixed = p.fixed_point_positions();
    if (fixed.size() != 2)
      throw Error("order-5 element fixes " + std::to_string(fixed.size()) +
                  " vertices, expected 2");
    for (int side = 0; side < 2; ++side) {
      const std::size_t a = fixed[side], b = fixed[1 - side];
      if (pairing[a] && *pairing[a] != b)
        throw Error("conflicting antipodal partners for vertex '" +
                    dom.label(a).text() + "'");
      pairing[a] = b;
    }
  }
  if (order5 != 24)
    throw Error("found " + std::to_string(order5) +
                " order-5 elements, expected 24");

  std::vector<std::size_t> antipode(dom.size());
  for (std::size_t v = 0; v < dom.size(); ++v) {
    if (!pairing[v])
      throw Error("vertex '" + dom.label(v).text() +
                  "' is fixed by no order-5 element");
    if (*pairing[v] == v)
      throw Error("antipodal pairing fixes vertex '" + dom.label(v).text() +
                  "'");
    antipode[v] = *pairing[v];
  }
  for (std::size_t v = 0; v < dom.size(); ++v)
    if (antipode[antipode[v]] != v)
      throw Error("antipodal pairing is not an involution");

  IcosaGraph graph(dom,
                   std::vector<std::array<std::size_t, 2>>(edge_set.begin(),
                                                           edge_set.end()),
                   std::vector<std::array<std::size_t, 3>>(face_set.begin(),
                                                           face_set.end()),
                   std::move(antipode));

  for (std::size_t v = 0; v < dom.size(); ++v)
    if (graph.neighbors(v).size() != 5)
      throw Error("vertex '" + dom.label(v).text() + "' has degree " +
                  std::to_string(graph.neighbors(v).size()) + ", expected 5");

  for (const auto& e : graph.edges()) {
    std::size_t in_faces = 0;
    for (const auto& f : graph.faces()) {
      const bool a = f[0] == e[0] || f[1] == e[0] || f[2] == e[0];
      const bool b = f[0] == e[1] || f[1] == e[1] || f[2] == e[1];
      if (a && b) ++in_faces;
    }
    if (in_faces != 2)
      throw Error("an edge lies in " + std::to_string(in_faces) +
                  " faces, expected 2");
    if (!graph.has_edge(graph.antipode(e[0]), graph.antipode(e[1])))
      throw Error("antipodal image of an edge is not an edge");
  }
  for (const auto& f : graph.faces())
    if (!graph.has_face(
            {graph.antipode(f[0]), graph.antipode(f[1]), graph.antipode(f[2])}))
      throw Error("antipodal image of a face is not a face");

  return graph;
}

inline IcosaGraph build_graph(const GeneratorSet& gens,
                              const std::array<Label, 3>& seed_face) {
  return build_graph(generate(gens), seed_face);
}

/// True iff `p` maps edges to edges.
inline bool is_automorphism(const Permutation& p, const IcosaGraph& g) {
  if (!(p.domain() == g.vertices())) return false;
  for (const auto& e : g.edges())
    if (!g.has_edge(p.image(e[0]), p.image(e[1]))) return false;
  return true;
}

enum class RotationKind { identity, face, edge, vertex };

inline std::string kind_name(RotationKind k) {
  switch (k) {
    case RotationKind::identity: return "identity";
    case RotationKind::face: return "face";
    case RotationKind::edge: return "edge";
    case RotationKind::vertex: return "vertex";
  }
  return "?";
}

/// Geometric classification of a rotation, with its axis given as the
/// two antipodal components it passes through: a pair of faces, a pair
/// of edges, or a pair of vertices. Components are sorted by domain
/// position; the component holding the least vertex comes first.
struct RotationClass {
  RotationKind kind = RotationKind::identity;
  std::vector<std::vector<std::size_t>> axis;  // empty for the identity

  /// Display form: "{1,3,2+},{2',1'',3''}" for faces and edges,
  /// "{1',1+}" for a vertex pair, "-" for the identity.
  std::string axis_str(const Domain& dom) const {
    if (axis.empty()) return "-";
    if (kind == RotationKind::vertex)
      return "{" + dom.label(axis[0][0]).text() + "," +
             dom.label(axis[1][0]).text() + "}";
    std::string out;
    for (std::size_t c = 0; c < axis.size(); ++c) {
      if (c) out += ',';
      out += '{';
      for (std::size_t k = 0; k < axis[c].size(); ++k) {
        if (k) out += ',';
        out += dom.label(axis[c][k]).text();
      }
      out += '}';
    }
    return out;
  }

  friend bool operator==(const RotationClass& a, const RotationClass& b) = default;
};

namespace detail {

inline std::vector<std::vector<std::size_t>> order_axis(
    std::vector<std::size_t> a, std::vector<std::size_t> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

}  // namespace detail

/// Classifies a group element as the identity, a face rotation (order 3),
/// an edge rotation (order 2) or a vertex rotation (order 5), extracting
/// its axis from cycle structure plus face/edge membership. Elements
/// outside the generated group are rejected.
inline RotationClass classify_rotation(const Permutation& p,
                                       const Group& rotations,
                                       const IcosaGraph& g) {
  if (!rotations.contains(p))
    throw Error("permutation is not an element of the rotation group");

  if (p.is_identity()) return {RotationKind::identity, {}};

  const std::size_t n = order(p);
  const auto cycles = cycle_positions(p);

  if (n == 3) {
    std::vector<std::vector<std::size_t>> on_faces;
    for (const auto& cyc : cycles) {
      if (cyc.size() != 3)
        throw Error("order-3 element is not four 3-cycles");
      if (g.has_face({cyc[0], cyc[1], cyc[2]})) on_faces.push_back(cyc);
    }
    if (on_faces.size() != 2)
      throw Error("order-3 element has " + std::to_string(on_faces.size()) +
                  " face-supported cycles, expected 2");
    return {RotationKind::face,
            detail::order_axis(on_faces[0], on_faces[1])};
  }

  if (n == 2) {
    std::vector<std::vector<std::size_t>> on_edges;
    for (const auto& cyc : cycles) {
      if (cyc.size() != 2)
        throw Error("order-2 element is not six transpositions");
      if (g.has_edge(cyc[0], cyc[1])) on_edges.push_back(cyc);
    }
    if (on_edges.size() != 2)
      throw Error("order-2 element has " + std::to_string(on_edges.size()) +
                  " edge-supported transpositions, expected 2");
    return {RotationKind::edge, detail::order_axis(on_edges[0], on_edges[1])};
  }

  if (n == 5) {
    const auto fixed = p.fixed_point_positions();
    if (fixed.size() != 2)
      throw Error("order-5 element fixes " + std::to_string(fixed.size()) +
                  " vertices, expected 2");
    if (g.antipode(fixed[0]) != fixed[1])
      throw Error("fixed vertices of an order-5 element are not antipodal");
    return {RotationKind::vertex, detail::order_axis({fixed[0]}, {fixed[1]})};
  }

  throw Error("element of order " + std::to_string(n) +
              " is not an icosahedral rotation");
}

/// The five neighbors of `x` in cyclic adjacency order. Canonical form:
/// start at the position-minimal neighbor and step toward its
/// position-minimal neighbor inside the pentagon.
inline std::vector<Label> neighbor_pentagon(const Label& x,
                                            const IcosaGraph& g) {
  const auto pos = g.vertices().find(x.text());
  if (!pos) throw Error("label '" + x.text() + "' is not a vertex");
  const auto& nbrs = g.neighbors(*pos);
  if (nbrs.size() != 5)
    throw Error("vertex '" + x.text() + "' does not have five neighbors");

  auto pentagon_neighbors = [&](std::size_t v) {
    std::vector<std::size_t> out;
    for (std::size_t w : nbrs)
      if (w != v && g.has_edge(v, w)) out.push_back(w);
    return out;
  };

  const std::size_t start = nbrs[0];
  auto first_step = pentagon_neighbors(start);
  if (first_step.size() != 2)
    throw Error("neighbors of '" + x.text() + "' do not form a pentagon");

  std::vector<std::size_t> walk = {start, std::min(first_step[0], first_step[1])};
  while (walk.size() < 5) {
    const auto next = pentagon_neighbors(walk.back());
    if (next.size() != 2)
      throw Error("neighbors of '" + x.text() + "' do not form a pentagon");
    const std::size_t prev = walk[walk.size() - 2];
    walk.push_back(next[0] == prev ? next[1] : next[0]);
  }

  std::vector<Label> out;
  out.reserve(5);
  for (std::size_t v : walk) out.push_back(g.vertices().label(v));
  return out;
}

/// The two faces and pentagon roles of a shared-vertex configuration:
/// r1 cycles the face {x,y,z} as x->y->z->x, r2 cycles {x,u,v} as
/// x->u->v->x, and a is the fifth neighbor of x.
struct SharedVertexConfig {
  std::size_t x, y, z, u, v, a;
};

enum class SharedVertexCase { edge_uz, edge_xa, not_edge_rotation };

inline std::string case_name(SharedVertexCase c) {
  switch (c) {
    case SharedVertexCase::edge_uz: return "edge[u,z]";
    case SharedVertexCase::edge_xa: return "edge[x,a]";
    case SharedVertexCase::not_edge_rotation: return "not-edge-rotation";
  }
  return "?";
}

struct SharedVertexOutcome {
  SharedVertexConfig config;
  SharedVertexCase kind = SharedVertexCase::not_edge_rotation;
  std::optional<std::array<std::size_t, 2>> predicted_axis_edge;
  Permutation product;
  RotationClass product_class;
};

namespace detail {

inline std::size_t max_face_overlap(const RotationClass& a,
                                    const RotationClass& b) {
  std::size_t best = 0;
  for (const auto& fa : a.axis)
    for (const auto& fb : b.axis) {
      std::size_t shared = 0;
      for (std::size_t v : fa)
        if (std::find(fb.begin(), fb.end(), v) != fb.end()) ++shared;
      best = std::max(best, shared);
    }
  return best;
}

}  // namespace detail

/// Extracts the shared-vertex configuration for two face rotations whose
/// axis faces meet in exactly one vertex (equivalently, whose axis
/// supports meet in exactly one antipodal vertex pair; the config is
/// taken at the position-minimal shared vertex). Returns nullopt when
/// the sharing count rules the pair out; throws if either input is not
/// a face rotation.
inline std::optional<SharedVertexConfig> shared_vertex_config(
    const Permutation& r1, const Permutation& r2, const Group& rotations,
    const IcosaGraph& g) {
  const RotationClass c1 = classify_rotation(r1, rotations, g);
  const RotationClass c2 = classify_rotation(r2, rotations, g);
  if (c1.kind != RotationKind::face)
    throw Error("first operand is a " + kind_name(c1.kind) +
                " rotation, expected a face rotation");
  if (c2.kind != RotationKind::face)
    throw Error("second operand is a " + kind_name(c2.kind) +
                " rotation, expected a face rotation");

  std::vector<std::size_t> shared;
  for (const auto& fa : c1.axis)
    for (std::size_t v : fa)
      for (const auto& fb : c2.axis)
        if (std::find(fb.begin(), fb.end(), v) != fb.end()) shared.push_back(v);
  std::sort(shared.begin(), shared.end());

  if (shared.size() != 2 || g.antipode(shared[0]) != shared[1])
    return std::nullopt;

  const std::size_t x = shared[0];
  const std::size_t y = r1.image(x);
  const std::size_t z = r1.image(y);
  const std::size_t u = r2.image(x);
  const std::size_t v = r2.image(u);

  const auto& nbrs = g.neighbors(x);
  std::size_t a = x;
  for (std::size_t w : nbrs)
    if (w != y && w != z && w != u && w != v) {
      if (a != x) throw Error("shared-vertex pentagon has too many leftovers");
      a = w;
    }
  if (a == x) throw Error("shared-vertex pentagon has no fifth vertex");
  return SharedVertexConfig{x, y, z, u, v, a};
}

/// The shared-vertex trichotomy: if the pentagon edge [u,z] exists the
/// product r1*r2 is the edge rotation about [u,z]; otherwise if [v,y]
/// exists it is the edge rotation about [x,a]; otherwise the product is
/// not an edge rotation. The prediction is cross-checked against the
/// classification of the composed product.
inline SharedVertexOutcome shared_vertex_compose(const Permutation& r1,
                                                 const Permutation& r2,
                                                 const Group& rotations,
                                                 const IcosaGraph& g) {
  auto cfg = shared_vertex_config(r1, r2, rotations, g);
  if (!cfg) {
    const auto c1 = classify_rotation(r1, rotations, g);
    const auto c2 = classify_rotation(r2, rotations, g);
    throw Error("axis faces share " +
                std::to_string(detail::max_face_overlap(c1, c2)) +
                " vertices, expected exactly 1");
  }

  Permutation product = compose(r1, r2);
  RotationClass product_class = classify_rotation(product, rotations, g);

  SharedVertexOutcome out{*cfg, SharedVertexCase::not_edge_rotation,
                          std::nullopt, std::move(product),
                          std::move(product_class)};
  if (g.has_edge(cfg->u, cfg->z)) {
    out.kind = SharedVertexCase::edge_uz;
    out.predicted_axis_edge = IcosaGraph::edge_key(cfg->u, cfg->z);
  } else if (g.has_edge(cfg->v, cfg->y)) {
    out.kind = SharedVertexCase::edge_xa;
    out.predicted_axis_edge = IcosaGraph::edge_key(cfg->x, cfg->a);
  }

  if (out.predicted_axis_edge) {
    const auto& e = *out.predicted_axis_edge;
    const std::vector<std::size_t> comp{e[0], e[1]};
    const bool consistent =
        out.product_class.kind == RotationKind::edge &&
        (out.product_class.axis[0] == comp || out.product_class.axis[1] == comp);
    if (!consistent)
      throw std::logic_error(
          "shared-vertex prediction disagrees with the classified product");
  } else if (out.product_class.kind == RotationKind::edge) {
    throw std::logic_error(
        "shared-vertex prediction disagrees with the classified product");
  }
  return out;
}

}  // namespace icosa
