#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "trigroup/presentation.hpp"
#include "trigroup/words.hpp"

namespace trigroup {

/// An edge traversed forwards (tail to head) or backwards.
struct OrientedEdge {
  std::uint32_t edge = 0;
  bool reversed = false;

  constexpr OrientedEdge flipped() const noexcept { return {edge, !reversed}; }
  friend constexpr bool operator==(OrientedEdge, OrientedEdge) = default;
};

struct Edge {
  std::uint32_t tail = 0;
  std::uint32_t head = 0;
};

/// A 2-cell given by its chosen boundary path. Positions along the path are
/// 1-based in every public function.
struct Face {
  std::vector<OrientedEdge> boundary;
};

/// Finite combinatorial 2-complex. Boundary paths must be closed edge paths.
class TwoComplex {
 public:
  TwoComplex() = default;
  TwoComplex(std::uint32_t vertex_count, std::vector<Edge> edges, std::vector<Face> faces);

  /// Complex with the given face boundaries and the fewest vertex
  /// identifications that make every boundary path closed.
  static TwoComplex from_gluing(std::uint32_t edge_count, std::vector<Face> faces);

  std::uint32_t vertex_count() const noexcept { return vertex_count_; }
  std::uint32_t edge_count() const noexcept { return static_cast<std::uint32_t>(edges_.size()); }
  std::uint32_t face_count() const noexcept { return static_cast<std::uint32_t>(faces_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Face>& faces() const noexcept { return faces_; }
  const Face& face(std::uint32_t f) const { return faces_.at(f); }

  std::uint32_t tail(OrientedEdge oe) const { return oe.reversed ? edges_[oe.edge].head : edges_[oe.edge].tail; }
  std::uint32_t head(OrientedEdge oe) const { return oe.reversed ? edges_[oe.edge].tail : edges_[oe.edge].head; }

 private:
  std::uint32_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<Face> faces_;
};

/// Abstract labelled 2-complex: `pi[f]` in 1..n is the relator slot of
/// face f and must hit every slot.
struct AbstractLabelledComplex {
  TwoComplex base;
  std::uint32_t n = 0;
  std::vector<std::uint32_t> pi;

  AbstractLabelledComplex() = default;
  AbstractLabelledComplex(TwoComplex base, std::uint32_t n, std::vector<std::uint32_t> pi);
};

/// 2-complex mapped to the presentation complex: each face remembers its
/// tuple position and each edge carries a letter read from tail to head.
struct LabelledTwoComplex {
  TwoComplex base;
  std::vector<std::uint32_t> relator_index;       // 0-based tuple positions
  std::vector<std::optional<Letter>> edge_label;  // forward reading, per edge
  std::optional<TriangularPresentation> presentation;

  /// Word read along the boundary path of face f (all its edges must be labelled).
  Word face_word(std::uint32_t f, std::uint32_t m) const;
  /// Checks edge labels against the bound presentation, if any.
  void validate() const;
};

/// Number of occurrences of e, in either orientation, over all boundary paths.
std::uint32_t edge_degree(const TwoComplex& y, std::uint32_t e);
std::vector<std::uint32_t> edge_degrees(const TwoComplex& y);

/// Sum over edges of max(deg(e) - 1, 0).
std::uint64_t cancel(const TwoComplex& y);

/// 1-based least position of e in the boundary path of f, if f contains e.
std::optional<std::uint32_t> least_position(const TwoComplex& y, std::uint32_t e, std::uint32_t f);

// The functionals below take the face labelling explicitly. Only equality
// and order of labels matter, so they serve both abstract complexes (pi) and
// labelled complexes (tuple positions).

int xi(const TwoComplex& y, std::span<const std::uint32_t> labels, std::uint32_t e, std::uint32_t f);
std::uint64_t red(const TwoComplex& y, std::span<const std::uint32_t> labels);

/// Nonzero (edge, label) summands of red, for reporting.
struct RedContribution {
  std::uint32_t edge;
  std::uint32_t label;
  std::uint32_t tied_faces;    // faces of this label holding e at the least position
  std::uint32_t contribution;  // tied_faces - 1
};
std::vector<RedContribution> red_contributions(const TwoComplex& y, std::span<const std::uint32_t> labels);

/// Throws unless every edge lies on some face boundary.
void require_all_edges_in_faces(const TwoComplex& y);

int chi(const TwoComplex& y, std::span<const std::uint32_t> labels, std::uint32_t e, std::uint32_t f);

/// |f| minus the number of edges of f that are both label-minimal and at
/// least position; the count of letters of f forced by earlier words.
std::uint32_t delta_face(const TwoComplex& y, std::span<const std::uint32_t> labels, std::uint32_t f);

inline std::uint64_t red(const AbstractLabelledComplex& y) { return red(y.base, y.pi); }
inline std::uint64_t red(const LabelledTwoComplex& y) { return red(y.base, y.relator_index); }
inline std::uint32_t delta_face(const AbstractLabelledComplex& y, std::uint32_t f) {
  return delta_face(y.base, y.pi, f);
}

/// A path in one of the parts handed to glue_complexes.
struct PartPath {
  std::uint32_t part = 0;
  std::vector<OrientedEdge> edges;
};

struct PathIdentification {
  PartPath first;
  PartPath second;
};

/// Disjoint union of `parts` with the listed paths identified edge by edge.
/// Faces never merge; vertices and edges are merged with union-find.
LabelledTwoComplex glue_complexes(const std::vector<LabelledTwoComplex>& parts,
                                  const std::vector<PathIdentification>& identifications);

}  // namespace trigroup
