#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "trigroup/complex.hpp"
#include "trigroup/presentation.hpp"

namespace trigroup {

struct DiagramEdge {
  std::uint32_t tail = 0;
  std::uint32_t head = 0;
  Letter label;  // read from tail to head
};

/// A triangular 2-cell of a planar diagram.
///
/// `sides[k]` runs from `corners[k]` to `corners[k+1]`, counterclockwise.
/// The chosen boundary path starts at side `start` and reads the face
/// counterclockwise, or clockwise when `clockwise` is set.
struct DiagramFace {
  std::array<std::uint32_t, 3> corners{};
  std::array<OrientedEdge, 3> sides{};
  std::uint32_t relator = 0;
  std::uint8_t start = 0;
  bool clockwise = false;
};

/// Planar van Kampen diagram over a triangular presentation. The planar
/// embedding is carried by the counterclockwise corner order of every face;
/// `boundary` is the outer cycle traversed with the diagram on its left.
struct VanKampenDiagram {
  std::uint32_t vertex_count = 0;
  std::vector<DiagramEdge> edges;
  std::vector<DiagramFace> faces;
  std::vector<OrientedEdge> boundary;

  std::uint32_t area() const noexcept { return static_cast<std::uint32_t>(faces.size()); }
  std::uint32_t perimeter() const noexcept { return static_cast<std::uint32_t>(boundary.size()); }

  Letter read(OrientedEdge oe) const { return oe.reversed ? edges[oe.edge].label.inverse() : edges[oe.edge].label; }
  std::uint32_t tail(OrientedEdge oe) const { return oe.reversed ? edges[oe.edge].head : edges[oe.edge].tail; }
  std::uint32_t head(OrientedEdge oe) const { return oe.reversed ? edges[oe.edge].tail : edges[oe.edge].head; }

  /// The chosen boundary path of face f as oriented edges.
  std::vector<OrientedEdge> boundary_path(std::uint32_t f) const;
  /// Word spelled by the chosen boundary path of face f.
  Word face_word(std::uint32_t f, std::uint32_t m) const;

  /// Underlying labelled 2-complex (faces keep their boundary path choice).
  LabelledTwoComplex to_labelled_complex(const TriangularPresentation* p = nullptr) const;
};

/// Face word read starting along e in e's own direction, following the face
/// in that direction. Two faces across an interior edge are a cancelling
/// (mirror) pair exactly when these words coincide.
Word reading_from_edge(const VanKampenDiagram& d, std::uint32_t face, std::uint32_t edge, std::uint32_t m);

/// Number of faces on each edge (1 on the boundary, 2 inside).
std::vector<std::uint32_t> diagram_edge_faces(const VanKampenDiagram& d);

/// True when no interior edge separates a mirror pair of faces. Label-only;
/// does not look at relator indices.
bool has_no_mirror_pair(const VanKampenDiagram& d, std::uint32_t m);

/// Reducedness over a presentation. Throws if some face does not spell its
/// relator (the diagram is not bound to `p`).
bool is_reduced_diagram(const VanKampenDiagram& d, const TriangularPresentation& p);

/// Throws unless the diagram is an orientable surface with one simple
/// boundary cycle whose faces are embedded triangles.
void require_surface_with_one_boundary(const VanKampenDiagram& d);

/// V = 1 + (|D| + |dD|)/2 and E = (3|D| + |dD|)/2. Throws on inputs that
/// are not surfaces with a single boundary cycle.
bool euler_check(const VanKampenDiagram& d);

std::uint64_t cancel(const VanKampenDiagram& d);
std::uint64_t red(const VanKampenDiagram& d);

enum class BoundaryMark { Geodesic1, Geodesic2, Connector };

struct BoundaryPartition {
  std::uint32_t e0 = 0;  // connector edges
  std::uint32_t e1 = 0;  // geodesic edges whose opposite corner is off both geodesics
  std::uint32_t e2 = 0;  // geodesic edges whose opposite corner is on a geodesic
  std::vector<int> category;  // per boundary position: 0, 1 or 2
};

/// Splits the boundary into E0/E1/E2. `marks[k]` tags boundary position k;
/// each geodesic must be one nonempty cyclic arc, connectors may be empty.
BoundaryPartition partition_boundary(const VanKampenDiagram& d, const std::vector<BoundaryMark>& marks);

/// Strip of 2t triangles between the paths a^t and b^{-1}a^t in <a,b | abb>.
/// Bottom vertices p_i = a^i, top vertices q_i = b^{-1}a^i.
VanKampenDiagram parallel_strip(std::uint32_t t);

/// Marks for parallel_strip: bottom row Geodesic1, top row Geodesic2, end rungs Connector.
std::vector<BoundaryMark> parallel_strip_marks(const VanKampenDiagram& strip);

}  // namespace trigroup
