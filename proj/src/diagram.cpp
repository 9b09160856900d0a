#include "trigroup/diagram.hpp"

#include <algorithm>
#include <set>

#include "trigroup/error.hpp"
#include "trigroup/union_find.hpp"

namespace trigroup {

namespace {

constexpr std::uint32_t next3(std::uint32_t k) { return (k + 1) % 3; }
constexpr std::uint32_t prev3(std::uint32_t k) { return (k + 2) % 3; }

}  // namespace

std::vector<OrientedEdge> VanKampenDiagram::boundary_path(std::uint32_t f) const {
  const DiagramFace& face = faces.at(f);
  std::vector<OrientedEdge> path;
  std::uint32_t k = face.start;
  for (int step = 0; step < 3; ++step) {
    if (face.clockwise) {
      path.push_back(face.sides[k].flipped());
      k = prev3(k);
    } else {
      path.push_back(face.sides[k]);
      k = next3(k);
    }
  }
  return path;
}

Word VanKampenDiagram::face_word(std::uint32_t f, std::uint32_t m) const {
  std::vector<Letter> letters;
  for (const OrientedEdge& oe : boundary_path(f)) letters.push_back(read(oe));
  return Word(m, std::move(letters));
}

LabelledTwoComplex VanKampenDiagram::to_labelled_complex(const TriangularPresentation* p) const {
  std::vector<Edge> base_edges;
  std::vector<std::optional<Letter>> labels;
  for (const DiagramEdge& e : edges) {
    base_edges.push_back({e.tail, e.head});
    labels.emplace_back(e.label);
  }
  std::vector<Face> base_faces;
  std::vector<std::uint32_t> index;
  for (std::uint32_t f = 0; f < faces.size(); ++f) {
    base_faces.push_back(Face{boundary_path(f)});
    index.push_back(faces[f].relator);
  }
  LabelledTwoComplex out;
  out.base = TwoComplex(vertex_count, std::move(base_edges), std::move(base_faces));
  out.relator_index = std::move(index);
  out.edge_label = std::move(labels);
  if (p) out.presentation = *p;
  return out;
}

Word reading_from_edge(const VanKampenDiagram& d, std::uint32_t face, std::uint32_t edge, std::uint32_t m) {
  const DiagramFace& f = d.faces.at(face);
  for (std::uint32_t k = 0; k < 3; ++k) {
    if (f.sides[k].edge != edge) continue;
    std::vector<Letter> letters;
    if (!f.sides[k].reversed) {
      for (std::uint32_t j = 0, s = k; j < 3; ++j, s = next3(s)) letters.push_back(d.read(f.sides[s]));
    } else {
      for (std::uint32_t j = 0, s = k; j < 3; ++j, s = prev3(s)) letters.push_back(d.read(f.sides[s].flipped()));
    }
    return Word(m, std::move(letters));
  }
  fail(ErrorCode::InvalidArgument, "face " + std::to_string(face) + " does not contain edge " + std::to_string(edge));
}

std::vector<std::uint32_t> diagram_edge_faces(const VanKampenDiagram& d) {
  std::vector<std::uint32_t> count(d.edges.size(), 0);
  for (const DiagramFace& f : d.faces) {
    for (const OrientedEdge& s : f.sides) ++count.at(s.edge);
  }
  return count;
}

bool has_no_mirror_pair(const VanKampenDiagram& d, std::uint32_t m) {
  std::vector<std::vector<std::uint32_t>> on_edge(d.edges.size());
  for (std::uint32_t f = 0; f < d.faces.size(); ++f) {
    for (const OrientedEdge& s : d.faces[f].sides) on_edge[s.edge].push_back(f);
  }
  for (std::uint32_t e = 0; e < on_edge.size(); ++e) {
    const auto& fs = on_edge[e];
    for (std::size_t i = 0; i < fs.size(); ++i) {
      for (std::size_t j = i + 1; j < fs.size(); ++j) {
        if (reading_from_edge(d, fs[i], e, m) == reading_from_edge(d, fs[j], e, m)) return false;
      }
    }
  }
  return true;
}

bool is_reduced_diagram(const VanKampenDiagram& d, const TriangularPresentation& p) {
  for (std::uint32_t f = 0; f < d.faces.size(); ++f) {
    const std::uint32_t i = d.faces[f].relator;
    if (i >= p.relators.size() || d.face_word(f, p.m) != p.relators[i]) {
      fail(ErrorCode::Precondition, "face " + std::to_string(f) + " is not bound to relator " + std::to_string(i) +
                                        " of the presentation");
    }
  }
  return has_no_mirror_pair(d, p.m);
}

void require_surface_with_one_boundary(const VanKampenDiagram& d) {
  auto bad = [](const std::string& why) { fail(ErrorCode::Precondition, "not a disc diagram: " + why); };
  if (d.faces.empty()) bad("no faces");

  for (std::uint32_t f = 0; f < d.faces.size(); ++f) {
    const DiagramFace& face = d.faces[f];
    const auto& c = face.corners;
    if (c[0] == c[1] || c[1] == c[2] || c[0] == c[2]) bad("face " + std::to_string(f) + " has repeated corners");
    for (std::uint32_t k = 0; k < 3; ++k) {
      const OrientedEdge s = face.sides[k];
      if (s.edge >= d.edges.size()) bad("face " + std::to_string(f) + " uses a missing edge");
      if (c[k] >= d.vertex_count) bad("face " + std::to_string(f) + " uses a missing vertex");
      if (d.tail(s) != c[k] || d.head(s) != c[next3(k)]) bad("side " + std::to_string(k) + " of face " + std::to_string(f) + " does not join its corners");
    }
  }

  // Each edge: one side (boundary) or two opposite sides (interior).
  std::vector<std::vector<OrientedEdge>> uses(d.edges.size());
  for (const DiagramFace& face : d.faces) {
    for (const OrientedEdge& s : face.sides) uses[s.edge].push_back(s);
  }
  std::set<std::uint32_t> boundary_edges;
  for (std::uint32_t e = 0; e < uses.size(); ++e) {
    if (uses[e].empty()) bad("edge " + std::to_string(e) + " lies in no face");
    if (uses[e].size() > 2) bad("edge " + std::to_string(e) + " lies in more than two faces");
    if (uses[e].size() == 2 && uses[e][0].reversed == uses[e][1].reversed) bad("faces on edge " + std::to_string(e) + " are not coherently oriented");
    if (uses[e].size() == 1) boundary_edges.insert(e);
  }

  // Boundary: a simple closed path through exactly the one-sided edges, in
  // the direction of their face sides.
  if (d.boundary.size() != boundary_edges.size()) bad("boundary cycle does not match the one-sided edges");
  std::set<std::uint32_t> visited_edges;
  std::set<std::uint32_t> visited_vertices;
  for (std::size_t k = 0; k < d.boundary.size(); ++k) {
    const OrientedEdge b = d.boundary[k];
    if (b.edge >= d.edges.size() || !boundary_edges.count(b.edge)) bad("boundary uses an interior or missing edge");
    if (!visited_edges.insert(b.edge).second) bad("boundary repeats an edge");
    if (uses[b.edge][0] != b) bad("boundary runs against its face");
    if (d.head(b) != d.tail(d.boundary[(k + 1) % d.boundary.size()])) bad("boundary is not a closed path");
    if (!visited_vertices.insert(d.tail(b)).second) bad("boundary is not simple");
  }

  // Links: the corners at each vertex form a single fan, and the faces are connected.
  UnionFind corner_uf(3 * d.faces.size());
  UnionFind face_uf(d.faces.size());
  std::vector<std::vector<std::size_t>> corners_at(d.vertex_count);
  // (edge, vertex) -> corners touching that edge at that vertex
  std::vector<std::vector<std::size_t>> at_edge_tail(d.edges.size());
  std::vector<std::vector<std::size_t>> at_edge_head(d.edges.size());
  for (std::uint32_t f = 0; f < d.faces.size(); ++f) {
    const DiagramFace& face = d.faces[f];
    for (std::uint32_t k = 0; k < 3; ++k) {
      const std::size_t corner = 3 * static_cast<std::size_t>(f) + k;
      corners_at[face.corners[k]].push_back(corner);
      for (const OrientedEdge s : {face.sides[k], face.sides[prev3(k)]}) {
        auto& bucket = d.edges[s.edge].tail == face.corners[k] ? at_edge_tail[s.edge] : at_edge_head[s.edge];
        bucket.push_back(corner);
      }
    }
  }
  for (std::uint32_t e = 0; e < d.edges.size(); ++e) {
    for (const auto* bucket : {&at_edge_tail[e], &at_edge_head[e]}) {
      for (std::size_t i = 1; i < bucket->size(); ++i) {
        corner_uf.unite((*bucket)[0], (*bucket)[i]);
        face_uf.unite((*bucket)[0] / 3, (*bucket)[i] / 3);
      }
    }
  }
  for (std::uint32_t v = 0; v < d.vertex_count; ++v) {
    if (corners_at[v].empty()) bad("vertex " + std::to_string(v) + " lies in no face");
    const std::size_t root = corner_uf.find(corners_at[v][0]);
    for (std::size_t c : corners_at[v]) {
      if (corner_uf.find(c) != root) bad("vertex " + std::to_string(v) + " is a cut point");
    }
  }
  for (std::size_t f = 1; f < d.faces.size(); ++f) {
    if (face_uf.find(f) != face_uf.find(0)) bad("faces are not connected");
  }
}

bool euler_check(const VanKampenDiagram& d) {
  require_surface_with_one_boundary(d);
  const std::uint64_t area = d.area();
  const std::uint64_t perimeter = d.perimeter();
  if ((area + perimeter) % 2 != 0) return false;
  const bool vertices_ok = d.vertex_count == 1 + (area + perimeter) / 2;
  const bool edges_ok = d.edges.size() == (3 * area + perimeter) / 2;
  return vertices_ok && edges_ok;
}

std::uint64_t cancel(const VanKampenDiagram& d) {
  std::uint64_t total = 0;
  for (std::uint32_t c : diagram_edge_faces(d)) total += c > 0 ? c - 1 : 0;
  return total;
}

std::uint64_t red(const VanKampenDiagram& d) { return red(d.to_labelled_complex()); }

BoundaryPartition partition_boundary(const VanKampenDiagram& d, const std::vector<BoundaryMark>& marks) {
  const std::size_t n = d.boundary.size();
  if (marks.size() != n) {
    fail(ErrorCode::InvalidArgument, "got " + std::to_string(marks.size()) + " marks for a boundary of length " + std::to_string(n));
  }
  for (BoundaryMark g : {BoundaryMark::Geodesic1, BoundaryMark::Geodesic2}) {
    std::size_t runs = 0;
    std::size_t count = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (marks[k] != g) continue;
      ++count;
      if (marks[(k + n - 1) % n] != g) ++runs;
    }
    if (count == 0 || runs != 1) fail(ErrorCode::InvalidArgument, "each geodesic side must be one nonempty arc of the boundary");
  }

  std::set<std::uint32_t> geodesic_vertices;
  for (std::size_t k = 0; k < n; ++k) {
    if (marks[k] == BoundaryMark::Connector) continue;
    geodesic_vertices.insert(d.tail(d.boundary[k]));
    geodesic_vertices.insert(d.head(d.boundary[k]));
  }

  BoundaryPartition out;
  out.category.assign(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    if (marks[k] == BoundaryMark::Connector) {
      ++out.e0;
      continue;
    }
    const std::uint32_t e = d.boundary[k].edge;
    std::uint32_t opposite = d.vertex_count;
    for (const DiagramFace& face : d.faces) {
      for (std::uint32_t j = 0; j < 3; ++j) {
        if (face.sides[j].edge == e) opposite = face.corners[(j + 2) % 3];
      }
    }
    if (opposite == d.vertex_count) fail(ErrorCode::Precondition, "boundary edge " + std::to_string(e) + " lies in no face");
    if (geodesic_vertices.count(opposite)) {
      ++out.e2;
      out.category[k] = 2;
    } else {
      ++out.e1;
      out.category[k] = 1;
    }
  }
  return out;
}

VanKampenDiagram parallel_strip(std::uint32_t t) {
  if (t == 0) fail(ErrorCode::InvalidArgument, "strip needs at least one square");
  const Letter a{0, false};
  const Letter b{1, false};
  auto p = [](std::uint32_t i) { return i; };
  auto q = [t](std::uint32_t i) { return t + 1 + i; };
  auto bottom = [](std::uint32_t i) { return i; };
  auto top = [t](std::uint32_t i) { return t + i; };
  auto rung = [t](std::uint32_t i) { return 2 * t + i; };
  auto diagonal = [t](std::uint32_t i) { return 3 * t + 1 + i; };

  VanKampenDiagram d;
  d.vertex_count = 2 * (t + 1);
  d.edges.resize(4 * t + 1);
  for (std::uint32_t i = 0; i < t; ++i) {
    d.edges[bottom(i)] = {p(i), p(i + 1), a};
    d.edges[top(i)] = {q(i), q(i + 1), a};
    d.edges[diagonal(i)] = {p(i + 1), q(i), b};
  }
  for (std::uint32_t i = 0; i <= t; ++i) d.edges[rung(i)] = {q(i), p(i), b};

  for (std::uint32_t i = 0; i < t; ++i) {
    // (q_i, p_i, p_{i+1}) reads b a b counterclockwise; abb starts at the bottom side.
    DiagramFace lower;
    lower.corners = {q(i), p(i), p(i + 1)};
    lower.sides = {OrientedEdge{rung(i), false}, OrientedEdge{bottom(i), false}, OrientedEdge{diagonal(i), false}};
    lower.start = 1;
    d.faces.push_back(lower);
    // (q_i, p_{i+1}, q_{i+1}) reads B B A counterclockwise; abb reads clockwise from the top side.
    DiagramFace upper;
    upper.corners = {q(i), p(i + 1), q(i + 1)};
    upper.sides = {OrientedEdge{diagonal(i), true}, OrientedEdge{rung(i + 1), true}, OrientedEdge{top(i), true}};
    upper.start = 2;
    upper.clockwise = true;
    d.faces.push_back(upper);
  }

  for (std::uint32_t i = 0; i < t; ++i) d.boundary.push_back({bottom(i), false});
  d.boundary.push_back({rung(t), true});
  for (std::uint32_t i = t; i-- > 0;) d.boundary.push_back({top(i), true});
  d.boundary.push_back({rung(0), false});
  return d;
}

std::vector<BoundaryMark> parallel_strip_marks(const VanKampenDiagram& strip) {
  const std::uint32_t t = (strip.perimeter() - 2) / 2;
  std::vector<BoundaryMark> marks;
  for (std::uint32_t i = 0; i < t; ++i) marks.push_back(BoundaryMark::Geodesic1);
  marks.push_back(BoundaryMark::Connector);
  for (std::uint32_t i = 0; i < t; ++i) marks.push_back(BoundaryMark::Geodesic2);
  marks.push_back(BoundaryMark::Connector);
  return marks;
}

}  // namespace trigroup
