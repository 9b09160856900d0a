#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "trigroup/presentation.hpp"

namespace trigroup {

inline constexpr std::uint32_t kNoVertex = 0xffffffffU;

struct BallCaps {
  std::uint32_t max_radius = 12;
  std::uint64_t max_vertices = 2'000'000;
};

/// Ball of radius R around the identity in the folded Cayley graph.
///
/// Vertices are numbered in breadth-first order from the origin (0),
/// visiting neighbours in letter-code order. `next(v, c)` is the endpoint
/// of the edge leaving v with letter code c, or kNoVertex when it leaves
/// the ball. Closed vertices (distance < R) have every edge inside the ball
/// and every relator cycle through them closes up.
struct BallGraph {
  std::uint32_t m = 0;
  std::uint32_t radius = 0;
  std::vector<std::uint32_t> distance;
  std::vector<std::uint32_t> targets;  // vertex * 2m + letter code

  std::uint32_t vertex_count() const noexcept { return static_cast<std::uint32_t>(distance.size()); }
  std::uint32_t next(std::uint32_t v, std::uint32_t code) const { return targets[static_cast<std::size_t>(v) * 2 * m + code]; }
  bool closed(std::uint32_t v) const { return distance[v] < radius; }
  /// Vertex reached from v by reading w, or kNoVertex if the walk leaves the ball.
  std::uint32_t walk(std::uint32_t v, const Word& w) const;
};

/// Breadth-first expansion interleaved with relator folding until every
/// vertex within distance R is complete and satisfies all relators.
/// `shuffle_seed` randomizes the processing order (the result must not
/// depend on it).
BallGraph build_ball(const TriangularPresentation& p, std::uint32_t radius, BallCaps caps = {},
                     std::optional<std::uint64_t> shuffle_seed = std::nullopt);

/// Edge labels are consistent under inversion and distances match a BFS.
bool ball_is_consistent(const BallGraph& g);

/// Every relator, read from every closed vertex, returns to that vertex.
bool relators_close_at_closed_vertices(const BallGraph& g, const TriangularPresentation& p);

/// Graph distances from `source` inside the ball (kNoVertex if unreachable).
std::vector<std::uint32_t> ball_distances(const BallGraph& g, std::uint32_t source);

/// A shortest path from `from` to `to` inside the ball, as a vertex list.
/// Ties are broken towards the smaller letter code at each step from `from`.
std::vector<std::uint32_t> ball_geodesic(const BallGraph& g, std::uint32_t from, std::uint32_t to);

struct SlimEstimate {
  std::uint32_t defect = 0;  // max over triangles examined
  std::uint64_t triangles = 0;
  std::uint32_t closed_vertices = 0;
  std::array<std::uint32_t, 3> witness{kNoVertex, kNoVertex, kNoVertex};
};

/// Largest slimness defect over geodesic triangles with closed corners:
/// max distance from a point of one side to the union of the other two.
/// `samples` = 0 examines every triangle. A lower bound for the ball's
/// slimness constant under the chosen geodesics.
SlimEstimate slim_delta_estimate(const BallGraph& g, std::uint64_t samples, std::uint64_t seed, unsigned workers = 1);

struct StripCheck {
  std::uint32_t t = 0;
  std::uint32_t faces = 0;
  std::uint64_t cancel = 0;
  std::uint64_t expected_cancel = 0;
  bool euler = false;
  bool reduced = false;
  std::uint32_t e0 = 0;
  std::uint32_t e1 = 0;
  std::uint32_t e2 = 0;
  bool realized = false;  // every strip edge is an edge of the ball
  bool ok = false;
};

struct Fig1Report {
  std::uint32_t radius = 8;
  std::uint32_t ball_vertices = 0;
  std::vector<std::uint32_t> gamma;              // vertices a^i
  std::vector<std::uint32_t> gamma_distance;     // from the origin
  std::vector<std::uint32_t> translate;          // vertices b^-1 a^i
  std::vector<std::uint32_t> translate_distance; // from b^-1
  bool gamma_geodesic = false;
  bool translate_geodesic = false;
  bool disjoint = false;
  std::uint32_t hausdorff = 0;
  std::vector<StripCheck> strips;
  bool ok = false;
};

/// Parallel geodesics a^i and b^-1 a^i in <a, b | abb>, with the strip
/// diagrams between them.
Fig1Report fig1_demo();

}  // namespace trigroup
