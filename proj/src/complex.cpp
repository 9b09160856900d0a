#include "trigroup/complex.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "trigroup/error.hpp"
#include "trigroup/union_find.hpp"

namespace trigroup {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

void check_labels(const TwoComplex& y, std::span<const std::uint32_t> labels) {
  if (labels.size() != y.face_count()) {
    fail(ErrorCode::InvalidArgument, "face labelling has " + std::to_string(labels.size()) + " entries for " +
                                         std::to_string(y.face_count()) + " faces");
  }
}

void check_edge(const TwoComplex& y, std::uint32_t e) {
  if (e >= y.edge_count()) fail(ErrorCode::InvalidArgument, "unknown edge " + std::to_string(e));
}

void check_face(const TwoComplex& y, std::uint32_t f) {
  if (f >= y.face_count()) fail(ErrorCode::InvalidArgument, "unknown face " + std::to_string(f));
}

struct Occurrence {
  std::uint32_t face;
  std::uint32_t least_position;
};

// For every edge, the faces containing it with the least position of the
// edge in each, in face order.
std::vector<std::vector<Occurrence>> occurrences(const TwoComplex& y) {
  std::vector<std::vector<Occurrence>> occ(y.edge_count());
  for (std::uint32_t f = 0; f < y.face_count(); ++f) {
    const auto& path = y.face(f).boundary;
    for (std::uint32_t k = 0; k < path.size(); ++k) {
      auto& list = occ[path[k].edge];
      if (list.empty() || list.back().face != f) list.push_back({f, k + 1});
    }
  }
  return occ;
}

}  // namespace

TwoComplex::TwoComplex(std::uint32_t vertex_count, std::vector<Edge> edges, std::vector<Face> faces)
    : vertex_count_(vertex_count), edges_(std::move(edges)), faces_(std::move(faces)) {
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (edges_[e].tail >= vertex_count_ || edges_[e].head >= vertex_count_) {
      fail(ErrorCode::InvalidArgument, "edge " + std::to_string(e) + " references a missing vertex");
    }
  }
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    const auto& path = faces_[f].boundary;
    if (path.empty()) fail(ErrorCode::InvalidArgument, "face " + std::to_string(f) + " has an empty boundary");
    for (const OrientedEdge& oe : path) {
      if (oe.edge >= edges_.size()) {
        fail(ErrorCode::InvalidArgument, "face " + std::to_string(f) + " references missing edge " + std::to_string(oe.edge));
      }
    }
    for (std::size_t k = 0; k < path.size(); ++k) {
      if (head(path[k]) != tail(path[(k + 1) % path.size()])) {
        fail(ErrorCode::InvalidArgument, "boundary path of face " + std::to_string(f) + " is not closed at position " +
                                             std::to_string(k + 1));
      }
    }
  }
}

TwoComplex TwoComplex::from_gluing(std::uint32_t edge_count, std::vector<Face> faces) {
  // Node 2e is the tail of edge e, node 2e+1 its head.
  UnionFind uf(2 * static_cast<std::size_t>(edge_count));
  auto tail_node = [](OrientedEdge oe) { return 2 * static_cast<std::size_t>(oe.edge) + (oe.reversed ? 1 : 0); };
  auto head_node = [](OrientedEdge oe) { return 2 * static_cast<std::size_t>(oe.edge) + (oe.reversed ? 0 : 1); };
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& path = faces[f].boundary;
    for (const OrientedEdge& oe : path) {
      if (oe.edge >= edge_count) {
        fail(ErrorCode::InvalidArgument, "face " + std::to_string(f) + " references missing edge " + std::to_string(oe.edge));
      }
    }
    for (std::size_t k = 0; k < path.size(); ++k) uf.unite(head_node(path[k]), tail_node(path[(k + 1) % path.size()]));
  }
  std::vector<std::uint32_t> vertex_of(uf.size(), kNone);
  std::uint32_t vertices = 0;
  for (std::size_t node = 0; node < uf.size(); ++node) {
    const std::size_t root = uf.find(node);
    if (vertex_of[root] == kNone) vertex_of[root] = vertices++;
  }
  std::vector<Edge> edges(edge_count);
  for (std::uint32_t e = 0; e < edge_count; ++e) {
    edges[e] = {vertex_of[uf.find(2 * static_cast<std::size_t>(e))], vertex_of[uf.find(2 * static_cast<std::size_t>(e) + 1)]};
  }
  return TwoComplex(vertices, std::move(edges), std::move(faces));
}

AbstractLabelledComplex::AbstractLabelledComplex(TwoComplex b, std::uint32_t slots, std::vector<std::uint32_t> labels)
    : base(std::move(b)), n(slots), pi(std::move(labels)) {
  check_labels(base, pi);
  if (n < 1 || n > base.face_count()) {
    fail(ErrorCode::InvalidArgument, "number of distinct relators must lie in 1..|Y|, got " + std::to_string(n));
  }
  std::vector<bool> hit(n + 1, false);
  for (std::uint32_t v : pi) {
    if (v < 1 || v > n) fail(ErrorCode::InvalidArgument, "face label " + std::to_string(v) + " outside 1.." + std::to_string(n));
    hit[v] = true;
  }
  for (std::uint32_t i = 1; i <= n; ++i) {
    if (!hit[i]) fail(ErrorCode::InvalidArgument, "face labelling is not surjective: label " + std::to_string(i) + " unused");
  }
}

Word LabelledTwoComplex::face_word(std::uint32_t f, std::uint32_t m) const {
  std::vector<Letter> letters;
  for (const OrientedEdge& oe : base.face(f).boundary) {
    const auto& label = edge_label.at(oe.edge);
    if (!label) fail(ErrorCode::Precondition, "edge " + std::to_string(oe.edge) + " on face " + std::to_string(f) + " is unlabelled");
    letters.push_back(oe.reversed ? label->inverse() : *label);
  }
  return Word(m, std::move(letters));
}

void LabelledTwoComplex::validate() const {
  check_labels(base, relator_index);
  if (edge_label.size() != base.edge_count()) fail(ErrorCode::InvalidArgument, "edge label map has the wrong size");
  if (!presentation) return;
  for (std::uint32_t f = 0; f < base.face_count(); ++f) {
    const std::uint32_t i = relator_index[f];
    if (i >= presentation->relators.size()) fail(ErrorCode::InvalidArgument, "face " + std::to_string(f) + " names a missing relator");
    if (face_word(f, presentation->m) != presentation->relators[i]) {
      fail(ErrorCode::Precondition, "boundary of face " + std::to_string(f) + " does not spell relator " + std::to_string(i));
    }
  }
}

std::vector<std::uint32_t> edge_degrees(const TwoComplex& y) {
  std::vector<std::uint32_t> deg(y.edge_count(), 0);
  for (const Face& face : y.faces()) {
    for (const OrientedEdge& oe : face.boundary) ++deg[oe.edge];
  }
  return deg;
}

std::uint32_t edge_degree(const TwoComplex& y, std::uint32_t e) {
  check_edge(y, e);
  std::uint32_t deg = 0;
  for (const Face& face : y.faces()) {
    deg += static_cast<std::uint32_t>(std::count_if(face.boundary.begin(), face.boundary.end(),
                                                    [e](OrientedEdge oe) { return oe.edge == e; }));
  }
  return deg;
}

std::uint64_t cancel(const TwoComplex& y) {
  std::uint64_t total = 0;
  for (std::uint32_t d : edge_degrees(y)) total += d > 0 ? d - 1 : 0;
  return total;
}

std::optional<std::uint32_t> least_position(const TwoComplex& y, std::uint32_t e, std::uint32_t f) {
  check_edge(y, e);
  check_face(y, f);
  const auto& path = y.face(f).boundary;
  for (std::uint32_t k = 0; k < path.size(); ++k) {
    if (path[k].edge == e) return k + 1;
  }
  return std::nullopt;
}

int xi(const TwoComplex& y, std::span<const std::uint32_t> labels, std::uint32_t e, std::uint32_t f) {
  check_labels(y, labels);
  const auto mine = least_position(y, e, f);
  if (!mine) return 0;
  for (std::uint32_t g = 0; g < y.face_count(); ++g) {
    if (labels[g] != labels[f]) continue;
    const auto theirs = least_position(y, e, g);
    if (theirs && *theirs < *mine) return 0;
  }
  return 1;
}

std::vector<RedContribution> red_contributions(const TwoComplex& y, std::span<const std::uint32_t> labels) {
  check_labels(y, labels);
  std::vector<RedContribution> out;
  const auto occ = occurrences(y);
  for (std::uint32_t e = 0; e < y.edge_count(); ++e) {
    // label -> (least position among faces of that label, number of faces attaining it)
    std::map<std::uint32_t, std::pair<std::uint32_t, std::uint32_t>> best;
    for (const Occurrence& o : occ[e]) {
      auto [it, inserted] = best.try_emplace(labels[o.face], o.least_position, 1);
      if (inserted) continue;
      if (o.least_position < it->second.first) {
        it->second = {o.least_position, 1};
      } else if (o.least_position == it->second.first) {
        ++it->second.second;
      }
    }
    for (const auto& [label, entry] : best) {
      if (entry.second > 1) out.push_back({e, label, entry.second, entry.second - 1});
    }
  }
  return out;
}

std::uint64_t red(const TwoComplex& y, std::span<const std::uint32_t> labels) {
  std::uint64_t total = 0;
  for (const RedContribution& c : red_contributions(y, labels)) total += c.contribution;
  return total;
}

void require_all_edges_in_faces(const TwoComplex& y) {
  const auto deg = edge_degrees(y);
  for (std::uint32_t e = 0; e < deg.size(); ++e) {
    if (deg[e] == 0) {
      fail(ErrorCode::Precondition, "edge " + std::to_string(e) + " lies in no face; chi and delta need every edge in a 2-cell");
    }
  }
}

int chi(const TwoComplex& y, std::span<const std::uint32_t> labels, std::uint32_t e, std::uint32_t f) {
  check_labels(y, labels);
  check_edge(y, e);
  check_face(y, f);
  require_all_edges_in_faces(y);
  if (!least_position(y, e, f)) return 0;
  std::uint32_t min_label = kNone;
  for (std::uint32_t g = 0; g < y.face_count(); ++g) {
    if (least_position(y, e, g)) min_label = std::min(min_label, labels[g]);
  }
  return labels[f] == min_label ? 1 : 0;
}

std::uint32_t delta_face(const TwoComplex& y, std::span<const std::uint32_t> labels, std::uint32_t f) {
  check_labels(y, labels);
  check_face(y, f);
  require_all_edges_in_faces(y);
  const auto occ = occurrences(y);
  const auto& path = y.face(f).boundary;
  std::uint32_t unforced = 0;
  std::vector<std::uint32_t> seen;
  for (const OrientedEdge& oe : path) {
    if (std::find(seen.begin(), seen.end(), oe.edge) != seen.end()) continue;
    seen.push_back(oe.edge);
    std::uint32_t min_label = kNone;
    std::uint32_t min_position = kNone;  // among faces with labels[f]
    std::uint32_t own_position = kNone;
    for (const Occurrence& o : occ[oe.edge]) {
      min_label = std::min(min_label, labels[o.face]);
      if (labels[o.face] == labels[f]) min_position = std::min(min_position, o.least_position);
      if (o.face == f) own_position = o.least_position;
    }
    if (labels[f] == min_label && own_position == min_position) ++unforced;
  }
  return static_cast<std::uint32_t>(path.size()) - unforced;
}

LabelledTwoComplex glue_complexes(const std::vector<LabelledTwoComplex>& parts,
                                  const std::vector<PathIdentification>& identifications) {
  std::vector<std::uint32_t> vertex_offset;
  std::vector<std::uint32_t> edge_offset;
  std::uint32_t vertices = 0;
  std::uint32_t edges = 0;
  for (const auto& part : parts) {
    vertex_offset.push_back(vertices);
    edge_offset.push_back(edges);
    vertices += part.base.vertex_count();
    edges += part.base.edge_count();
  }

  // Oriented-edge node 2e is e forwards, 2e+1 is e backwards.
  UnionFind vuf(vertices);
  UnionFind euf(2 * static_cast<std::size_t>(edges));

  auto global = [&](const PartPath& path, std::size_t k) -> std::pair<const LabelledTwoComplex*, OrientedEdge> {
    if (path.part >= parts.size()) fail(ErrorCode::InvalidArgument, "identification names a missing part");
    const LabelledTwoComplex& part = parts[path.part];
    const OrientedEdge oe = path.edges[k];
    if (oe.edge >= part.base.edge_count()) fail(ErrorCode::InvalidArgument, "identification names a missing edge");
    return {&part, oe};
  };
  auto read = [](const LabelledTwoComplex& part, OrientedEdge oe) {
    const auto& label = part.edge_label.at(oe.edge);
    if (!label) fail(ErrorCode::Precondition, "identified path crosses an unlabelled edge");
    return oe.reversed ? label->inverse() : *label;
  };

  for (const auto& id : identifications) {
    if (id.first.edges.size() != id.second.edges.size()) {
      fail(ErrorCode::InvalidArgument, "identified paths have lengths " + std::to_string(id.first.edges.size()) + " and " +
                                           std::to_string(id.second.edges.size()));
    }
    for (std::size_t k = 0; k < id.first.edges.size(); ++k) {
      auto [pa, a] = global(id.first, k);
      auto [pb, b] = global(id.second, k);
      if (read(*pa, a) != read(*pb, b)) {
        fail(ErrorCode::Precondition, "label mismatch at position " + std::to_string(k + 1) + " of an identified path");
      }
      const std::size_t ga = edge_offset[id.first.part] + a.edge;
      const std::size_t gb = edge_offset[id.second.part] + b.edge;
      const bool same = a.reversed == b.reversed;
      euf.unite(2 * ga, 2 * gb + (same ? 0 : 1));
      euf.unite(2 * ga + 1, 2 * gb + (same ? 1 : 0));
      const auto ta = vertex_offset[id.first.part] + pa->base.tail(a);
      const auto ha = vertex_offset[id.first.part] + pa->base.head(a);
      const auto tb = vertex_offset[id.second.part] + pb->base.tail(b);
      const auto hb = vertex_offset[id.second.part] + pb->base.head(b);
      vuf.unite(ta, tb);
      vuf.unite(ha, hb);
    }
  }

  std::vector<std::uint32_t> vertex_id(vertices, kNone);
  std::uint32_t new_vertices = 0;
  for (std::uint32_t v = 0; v < vertices; ++v) {
    const auto r = vuf.find(v);
    if (vertex_id[r] == kNone) vertex_id[r] = new_vertices++;
    vertex_id[v] = vertex_id[r];
  }

  // An edge class is represented by its least oriented node; that node's
  // orientation fixes the direction of the merged edge.
  std::vector<std::uint32_t> class_id(2 * static_cast<std::size_t>(edges), kNone);
  std::vector<Edge> new_edges;
  std::vector<std::optional<Letter>> new_labels;
  std::vector<OrientedEdge> image(edges);
  for (std::uint32_t p = 0; p < parts.size(); ++p) {
    const auto& part = parts[p];
    for (std::uint32_t e = 0; e < part.base.edge_count(); ++e) {
      const std::size_t g = edge_offset[p] + e;
      const std::size_t rf = euf.find(2 * g);
      const std::size_t rb = euf.find(2 * g + 1);
      if (rf == rb) fail(ErrorCode::Precondition, "identifications glue an edge to its own reverse");
      const std::size_t root = std::min(rf, rb);
      const bool reversed = (root == rb);
      if (class_id[root] == kNone) {
        class_id[root] = static_cast<std::uint32_t>(new_edges.size());
        const OrientedEdge local{e, reversed};
        new_edges.push_back({vertex_id[vertex_offset[p] + part.base.tail(local)],
                             vertex_id[vertex_offset[p] + part.base.head(local)]});
        const auto& label = part.edge_label.at(e);
        new_labels.push_back(label ? std::optional<Letter>(reversed ? label->inverse() : *label) : std::nullopt);
      }
      image[g] = {class_id[root], reversed};
    }
  }

  std::vector<Face> faces;
  std::vector<std::uint32_t> relator_index;
  for (std::uint32_t p = 0; p < parts.size(); ++p) {
    const auto& part = parts[p];
    for (std::uint32_t f = 0; f < part.base.face_count(); ++f) {
      Face face;
      for (const OrientedEdge& oe : part.base.face(f).boundary) {
        const OrientedEdge img = image[edge_offset[p] + oe.edge];
        face.boundary.push_back(oe.reversed ? img.flipped() : img);
      }
      faces.push_back(std::move(face));
      relator_index.push_back(part.relator_index.at(f));
    }
  }

  LabelledTwoComplex out;
  out.base = TwoComplex(new_vertices, std::move(new_edges), std::move(faces));
  out.relator_index = std::move(relator_index);
  out.edge_label = std::move(new_labels);
  if (!parts.empty()) out.presentation = parts.front().presentation;
  return out;
}

}  // namespace trigroup
