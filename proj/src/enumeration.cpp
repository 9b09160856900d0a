#include "trigroup/enumeration.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <thread>

#include "trigroup/error.hpp"
#include "trigroup/fulfillment.hpp"

namespace trigroup {

namespace {

using Code = std::vector<std::uint32_t>;

std::vector<std::vector<std::uint32_t>> faces_on_edges(const VanKampenDiagram& d) {
  std::vector<std::vector<std::uint32_t>> out(d.edges.size());
  for (std::uint32_t f = 0; f < d.faces.size(); ++f) {
    for (const OrientedEdge& s : d.faces[f].sides) out[s.edge].push_back(f);
  }
  return out;
}

// Sides of a face in traversal order, starting at `entry`. Mirrored
// traversals walk every face clockwise.
std::array<OrientedEdge, 3> ordered_sides(const DiagramFace& face, OrientedEdge entry, bool mirror) {
  for (std::uint32_t j = 0; j < 3; ++j) {
    if (!mirror && face.sides[j] == entry) return {face.sides[j], face.sides[(j + 1) % 3], face.sides[(j + 2) % 3]};
    if (mirror && face.sides[j].flipped() == entry) {
      return {face.sides[j].flipped(), face.sides[(j + 2) % 3].flipped(), face.sides[(j + 1) % 3].flipped()};
    }
  }
  fail(ErrorCode::Precondition, "traversal entered a face through an edge it does not have");
}

struct Traversal {
  Code code;
  std::vector<std::uint32_t> face_order;
  std::vector<std::array<OrientedEdge, 3>> sides;  // per visited face, traversal order
  std::vector<std::uint32_t> vertex_id;
  std::vector<std::uint32_t> edge_id;
  std::vector<OrientedEdge> first_seen;  // per original edge
};

constexpr std::uint32_t kNone = 0xffffffffU;

Traversal traverse(const VanKampenDiagram& d, const std::vector<std::vector<std::uint32_t>>& on_edge, std::size_t root,
                   bool mirror) {
  Traversal t;
  t.vertex_id.assign(d.vertex_count, kNone);
  t.edge_id.assign(d.edges.size(), kNone);
  t.first_seen.resize(d.edges.size());
  std::vector<bool> seen(d.faces.size(), false);
  std::uint32_t next_vertex = 0;
  std::uint32_t next_edge = 0;

  const OrientedEdge entry = mirror ? d.boundary[root].flipped() : d.boundary[root];
  std::vector<std::pair<std::uint32_t, OrientedEdge>> queue{{on_edge[entry.edge][0], entry}};
  seen[queue[0].first] = true;
  t.code.reserve(10 * d.faces.size());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto [f, in] = queue[head];
    const auto sides = ordered_sides(d.faces[f], in, mirror);
    t.face_order.push_back(f);
    t.sides.push_back(sides);
    t.code.push_back(d.faces[f].relator);
    for (const OrientedEdge& s : sides) {
      const std::uint32_t v = d.tail(s);
      if (t.vertex_id[v] == kNone) t.vertex_id[v] = next_vertex++;
      if (t.edge_id[s.edge] == kNone) {
        t.edge_id[s.edge] = next_edge++;
        t.first_seen[s.edge] = s;
      }
      t.code.push_back(t.vertex_id[v]);
      t.code.push_back(t.edge_id[s.edge]);
      t.code.push_back(d.read(s).code());
      for (std::uint32_t g : on_edge[s.edge]) {
        if (!seen[g]) {
          seen[g] = true;
          queue.emplace_back(g, s.flipped());
        }
      }
    }
  }
  if (queue.size() != d.faces.size()) fail(ErrorCode::Precondition, "diagram faces are not connected");
  return t;
}

std::pair<std::size_t, bool> best_root(const VanKampenDiagram& d, const std::vector<std::vector<std::uint32_t>>& on_edge,
                                       Code* best_code) {
  if (d.boundary.empty()) fail(ErrorCode::Precondition, "diagram has no boundary");
  Code best;
  std::pair<std::size_t, bool> root{0, false};
  for (std::size_t k = 0; k < d.boundary.size(); ++k) {
    for (bool mirror : {false, true}) {
      Code c = traverse(d, on_edge, k, mirror).code;
      if (best.empty() || c < best) {
        best = std::move(c);
        root = {k, mirror};
      }
    }
  }
  if (best_code) *best_code = std::move(best);
  return root;
}

// Picks the first (start, orientation) whose reading spells the face's relator.
void choose_boundary_path(VanKampenDiagram& d, std::uint32_t f, const Word& relator) {
  DiagramFace& face = d.faces[f];
  for (std::uint8_t start = 0; start < 3; ++start) {
    for (bool cw : {false, true}) {
      face.start = start;
      face.clockwise = cw;
      if (d.face_word(f, relator.alphabet_size()) == relator) return;
    }
  }
  fail(ErrorCode::Precondition, "face " + std::to_string(f) + " does not spell relator " + std::to_string(face.relator));
}

VanKampenDiagram rebuild(const VanKampenDiagram& d, const Traversal& t, std::size_t root, bool mirror,
                         const TriangularPresentation& p) {
  VanKampenDiagram out;
  out.vertex_count = d.vertex_count;
  out.edges.resize(d.edges.size());
  for (std::uint32_t e = 0; e < d.edges.size(); ++e) {
    const OrientedEdge s = t.first_seen[e];
    out.edges[t.edge_id[e]] = {t.vertex_id[d.tail(s)], t.vertex_id[d.head(s)], d.read(s)};
  }
  std::vector<OrientedEdge> new_boundary_side(d.edges.size());
  for (std::size_t i = 0; i < t.face_order.size(); ++i) {
    DiagramFace face;
    face.relator = d.faces[t.face_order[i]].relator;
    for (std::uint32_t k = 0; k < 3; ++k) {
      const OrientedEdge s = t.sides[i][k];
      face.corners[k] = t.vertex_id[d.tail(s)];
      face.sides[k] = {t.edge_id[s.edge], s.reversed != t.first_seen[s.edge].reversed};
      new_boundary_side[t.edge_id[s.edge]] = face.sides[k];
    }
    out.faces.push_back(face);
  }
  for (std::uint32_t f = 0; f < out.faces.size(); ++f) {
    const std::uint32_t r = out.faces[f].relator;
    if (r >= p.relators.size()) fail(ErrorCode::Precondition, "face uses relator " + std::to_string(r) + " outside the tuple");
    choose_boundary_path(out, f, p.relators[r]);
  }
  // Boundary in the new orientation, starting at the root edge.
  std::vector<std::uint32_t> uses(out.edges.size(), 0);
  for (const DiagramFace& face : out.faces) {
    for (const OrientedEdge& s : face.sides) ++uses[s.edge];
  }
  std::map<std::uint32_t, OrientedEdge> leaving;
  for (std::uint32_t e = 0; e < out.edges.size(); ++e) {
    if (uses[e] == 1) leaving[out.tail(new_boundary_side[e])] = new_boundary_side[e];
  }
  const OrientedEdge root_edge = mirror ? d.boundary[root].flipped() : d.boundary[root];
  OrientedEdge cur = new_boundary_side[t.edge_id[root_edge.edge]];
  for (std::size_t i = 0; i < leaving.size(); ++i) {
    out.boundary.push_back(cur);
    cur = leaving.at(out.head(cur));
  }
  return out;
}

VanKampenDiagram single_face(const Word& r, std::uint32_t index) {
  VanKampenDiagram d;
  d.vertex_count = 3;
  for (std::uint32_t k = 0; k < 3; ++k) d.edges.push_back({k, (k + 1) % 3, r[k]});
  DiagramFace face;
  face.corners = {0, 1, 2};
  face.sides = {OrientedEdge{0, false}, OrientedEdge{1, false}, OrientedEdge{2, false}};
  face.relator = index;
  d.faces.push_back(face);
  d.boundary = {face.sides[0], face.sides[1], face.sides[2]};
  return d;
}

using Level = std::map<Code, VanKampenDiagram>;

// Glues one new triangle to d in every reduced way, adding canonical forms to out.
void grow(const VanKampenDiagram& d, const TriangularPresentation& p, Level& out) {
  const auto on_edge = faces_on_edges(d);
  const std::size_t n = d.boundary.size();
  const std::uint32_t new_edge = static_cast<std::uint32_t>(d.edges.size());
  for (std::size_t k = 0; k < n; ++k) {
    for (int shared = 1; shared <= 2; ++shared) {
      if (shared == 2 && n < 3) continue;
      const OrientedEdge b = d.boundary[k];
      const OrientedEdge c = d.boundary[(k + 1) % n];
      DiagramFace face;
      std::vector<std::uint32_t> known;  // sides with existing edges
      if (shared == 1) {
        const std::uint32_t w = d.vertex_count;
        face.corners = {d.head(b), d.tail(b), w};
        face.sides = {b.flipped(), OrientedEdge{new_edge, false}, OrientedEdge{new_edge + 1, false}};
        known = {0};
      } else {
        face.corners = {d.head(c), d.tail(c), d.tail(b)};
        face.sides = {c.flipped(), b.flipped(), OrientedEdge{new_edge, false}};
        known = {0, 1};
      }

      std::set<std::pair<std::uint32_t, std::vector<std::uint32_t>>> tried;
      for (std::uint32_t i = 0; i < p.relators.size(); ++i) {
        const Word& r = p.relators[i];
        for (std::uint8_t start = 0; start < 3; ++start) {
          for (bool cw : {false, true}) {
            // Letter each side must carry, read counterclockwise.
            std::array<Letter, 3> need{};
            for (std::uint32_t j = 0; j < 3; ++j) {
              if (!cw) {
                need[(start + j) % 3] = r[j];
              } else {
                need[(start + 3 - j) % 3] = r[j].inverse();
              }
            }
            bool ok = true;
            for (std::uint32_t s : known) ok = ok && d.read(face.sides[s]) == need[s];
            if (!ok) continue;
            std::vector<std::uint32_t> fresh;
            for (std::uint32_t s = static_cast<std::uint32_t>(known.size()); s < 3; ++s) fresh.push_back(need[s].code());
            if (!tried.insert({i, fresh}).second) continue;

            VanKampenDiagram nd = d;
            if (shared == 1) {
              nd.vertex_count += 1;
              nd.edges.push_back({d.tail(b), d.vertex_count, need[1]});
              nd.edges.push_back({d.vertex_count, d.head(b), need[2]});
            } else {
              nd.edges.push_back({d.tail(b), d.head(c), need[2]});
            }
            DiagramFace placed = face;
            placed.relator = i;
            placed.start = start;
            placed.clockwise = cw;
            nd.faces.push_back(placed);
            const std::uint32_t fnew = static_cast<std::uint32_t>(nd.faces.size() - 1);

            bool reduced = true;
            for (std::uint32_t s : known) {
              const std::uint32_t e = face.sides[s].edge;
              const std::uint32_t g = on_edge[e][0];
              if (reading_from_edge(nd, fnew, e, p.m) == reading_from_edge(nd, g, e, p.m)) reduced = false;
            }
            if (!reduced) continue;

            std::vector<OrientedEdge> boundary;
            for (std::size_t j = 0; j < n; ++j) {
              if (j == k) {
                if (shared == 1) {
                  boundary.push_back(placed.sides[1]);
                  boundary.push_back(placed.sides[2]);
                } else {
                  boundary.push_back(placed.sides[2]);
                }
              } else if (!(shared == 2 && j == (k + 1) % n)) {
                boundary.push_back(d.boundary[j]);
              }
            }
            nd.boundary = std::move(boundary);

            const auto nd_edges = faces_on_edges(nd);
            Code code;
            const auto [root, mirror] = best_root(nd, nd_edges, &code);
            if (out.count(code)) continue;
            const Traversal t = traverse(nd, nd_edges, root, mirror);
            out.emplace(std::move(code), rebuild(nd, t, root, mirror, p));
          }
        }
      }
    }
  }
}

}  // namespace

Code canonical_code(const VanKampenDiagram& d) {
  Code code;
  best_root(d, faces_on_edges(d), &code);
  return code;
}

VanKampenDiagram canonical_form(const VanKampenDiagram& d, const TriangularPresentation& p) {
  const auto on_edge = faces_on_edges(d);
  const auto [root, mirror] = best_root(d, on_edge, nullptr);
  return rebuild(d, traverse(d, on_edge, root, mirror), root, mirror, p);
}

std::vector<VanKampenDiagram> enumerate_reduced_diagrams(const DiagramBudget& b, unsigned workers) {
  if (b.max_faces < 1) fail(ErrorCode::InvalidArgument, "max_faces must be at least 1");
  if (b.max_faces > b.cap) {
    fail(ErrorCode::CapExceeded, "max_faces " + std::to_string(b.max_faces) + " exceeds the cap " + std::to_string(b.cap) +
                                     "; raise it with --max-faces-cap");
  }
  if (b.epsilon <= 0) fail(ErrorCode::InvalidArgument, "epsilon must be positive");
  const TriangularPresentation& p = b.presentation;
  for (const Word& r : p.relators) {
    if (r.size() != 3) fail(ErrorCode::InvalidArgument, "relators must have length 3");
  }
  workers = std::max(1U, workers);

  Level level;
  for (std::uint32_t i = 0; i < p.relators.size(); ++i) {
    const VanKampenDiagram d = single_face(p.relators[i], i);
    Code code = canonical_code(d);
    if (!level.count(code)) level.emplace(std::move(code), canonical_form(d, p));
  }

  std::vector<VanKampenDiagram> all;
  for (std::uint32_t area = 1;; ++area) {
    std::vector<const VanKampenDiagram*> current;
    for (const auto& [code, d] : level) {
      all.push_back(d);
      current.push_back(&d);
    }
    if (area == b.max_faces || current.empty()) break;

    const unsigned used = static_cast<unsigned>(std::min<std::size_t>(workers, current.size()));
    std::vector<Level> parts(std::max(1U, used));
    if (used <= 1) {
      for (const VanKampenDiagram* d : current) grow(*d, p, parts[0]);
    } else {
      std::vector<std::thread> threads;
      for (unsigned w = 0; w < used; ++w) {
        threads.emplace_back([&, w] {
          const std::size_t begin = current.size() * w / used;
          const std::size_t end = current.size() * (w + 1) / used;
          for (std::size_t i = begin; i < end; ++i) grow(*current[i], p, parts[w]);
        });
      }
      for (auto& t : threads) t.join();
    }
    Level next;
    for (Level& part : parts) next.merge(part);
    level = std::move(next);
  }
  return all;
}

IsoperimetricReport isoperimetric_report(const DiagramBudget& b, const std::vector<VanKampenDiagram>& diagrams) {
  const Rational d = b.presentation.density;
  IsoperimetricReport rep;
  rep.density = d;
  rep.epsilon = b.epsilon;
  rep.max_faces = b.max_faces;
  rep.diagrams_by_area.assign(b.max_faces + 1, 0);
  for (const VanKampenDiagram& dg : diagrams) {
    DiagramRecord r;
    r.area = dg.area();
    r.perimeter = dg.perimeter();
    r.cancel = cancel(dg);
    r.red = red(dg);
    r.cancel_bound = Rational(BigInt(r.cancel)) <= 3 * (d + b.epsilon) * r.area;
    r.boundary_bound = Rational(BigInt(r.perimeter)) >= 3 * (1 - 2 * d - 2 * b.epsilon) * r.area;
    r.identity = 3ULL * r.area == r.perimeter + 2 * r.cancel;
    r.euler = euler_check(dg);
    r.reduced = is_reduced_diagram(dg, b.presentation);
    if (r.area < rep.diagrams_by_area.size()) ++rep.diagrams_by_area[r.area];
    rep.cancel_violations += !r.cancel_bound;
    rep.boundary_violations += !r.boundary_bound;
    rep.identity_failures += !r.identity;
    rep.euler_failures += !r.euler;
    rep.red_nonzero += r.red != 0;
    rep.equivalence_failures += r.cancel_bound != r.boundary_bound;
    rep.records.push_back(r);
  }
  return rep;
}

IsoperimetricReport isoperimetric_report(const DiagramBudget& b, unsigned workers) {
  return isoperimetric_report(b, enumerate_reduced_diagrams(b, workers));
}

LabelledComplexReport labelled_complex_report(const TriangularPresentation& p, const Rational& epsilon,
                                              const std::vector<BoundComplex>& complexes) {
  LabelledComplexReport rep;
  rep.density = p.density;
  rep.epsilon = epsilon;
  for (std::size_t k = 0; k < complexes.size(); ++k) {
    const BoundComplex& bc = complexes[k];
    if (!fulfils(bc.complex, bc.iota, p)) {
      fail(ErrorCode::Precondition, "complex " + std::to_string(k) + " is not fulfilled by its sub-tuple");
    }
    LabelledComplexRecord r;
    r.faces = bc.complex.base.face_count();
    r.cancel = cancel(bc.complex.base);
    r.red = red(bc.complex);
    r.lhs = static_cast<std::int64_t>(r.cancel) - static_cast<std::int64_t>(r.red);
    r.rhs = 3 * (p.density + epsilon) * r.faces;
    r.holds = Rational(r.lhs) <= r.rhs;
    rep.violations += !r.holds;
    rep.records.push_back(r);
  }
  return rep;
}

}  // namespace trigroup
