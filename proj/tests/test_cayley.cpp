#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>

#include "trigroup/cayley.hpp"
#include "trigroup/error.hpp"

using namespace trigroup;

namespace {

TriangularPresentation abb() { return make_presentation(2, Rational(0), 0, {Word::parse(2, "abb")}); }

// <a, b | abb> is Z with b = 1 and a = -2. Letter codes a, A, b, B.
constexpr std::array<int, 4> kStep{-2, 2, 1, -1};

int line_distance(int x, int y) { return (std::abs(x - y) + 1) / 2; }

// Geodesic on the integer line inside [-lim, lim], ties to the smaller code.
std::vector<int> line_geodesic(int from, int to, int lim) {
  std::vector<int> path{from};
  while (from != to) {
    for (int c = 0; c < 4; ++c) {
      const int next = from + kStep[c];
      if (std::abs(next) <= lim && line_distance(next, to) + 1 == line_distance(from, to)) {
        from = next;
        break;
      }
    }
    path.push_back(from);
  }
  return path;
}

std::uint32_t line_defect(int x, int y, int z, int lim) {
  const std::array<std::vector<int>, 3> sides{line_geodesic(x, y, lim), line_geodesic(y, z, lim), line_geodesic(z, x, lim)};
  std::uint32_t worst = 0;
  for (int i = 0; i < 3; ++i) {
    for (int v : sides[i]) {
      int best = 1 << 20;
      for (int j : {(i + 1) % 3, (i + 2) % 3})
        for (int u : sides[j]) best = std::min(best, line_distance(u, v));
      worst = std::max<std::uint32_t>(worst, static_cast<std::uint32_t>(best));
    }
  }
  return worst;
}

// Integer position of every ball vertex, found by walking from the origin.
std::vector<int> positions(const BallGraph& g) {
  std::vector<int> pos(g.vertex_count(), 1 << 20);
  pos[0] = 0;
  std::vector<std::uint32_t> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const std::uint32_t v = queue[i];
    for (std::uint32_t c = 0; c < 4; ++c) {
      const std::uint32_t w = g.next(v, c);
      if (w == kNoVertex || pos[w] != 1 << 20) continue;
      pos[w] = pos[v] + kStep[c];
      queue.push_back(w);
    }
  }
  return pos;
}

}  // namespace

TEST_SUITE("cayley") {
  TEST_CASE("free group ball") {
    const auto free2 = make_presentation(2, Rational(0), 0, {});
    const BallGraph g = build_ball(free2, 2);
    CHECK(g.vertex_count() == 17);
    CHECK(ball_is_consistent(g));
    CHECK(build_ball(free2, 3).vertex_count() == 53);
    CHECK(build_ball(make_presentation(3, Rational(0), 0, {}), 2).vertex_count() == 1 + 6 + 30);
    // trees have no slimness defect
    CHECK(slim_delta_estimate(build_ball(free2, 3), 0, 1).defect == 0);
  }

  TEST_CASE("abb is the integer line") {
    const auto p = abb();
    const BallGraph g = build_ball(p, 4);
    REQUIRE(g.vertex_count() == 17);
    CHECK(ball_is_consistent(g));
    CHECK(relators_close_at_closed_vertices(g, p));
    const auto pos = positions(g);
    std::vector<int> sorted = pos;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < 17; ++i) CHECK(sorted[i] == i - 8);
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
      CHECK(g.distance[v] == static_cast<std::uint32_t>(line_distance(0, pos[v])));
      // a = b^-2 at every closed vertex
      if (g.closed(v)) CHECK(g.walk(v, Word::parse(2, "a")) == g.walk(v, Word::parse(2, "BB")));
    }
    const auto from3 = ball_distances(g, 3);
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) CHECK(from3[v] == static_cast<std::uint32_t>(line_distance(pos[3], pos[v])));
  }

  TEST_CASE("processing order does not change the ball") {
    const auto p = sample_presentation(3, Rational(2, 5), 11);
    const BallGraph ref = build_ball(p, 4);
    CHECK(ball_is_consistent(ref));
    CHECK(relators_close_at_closed_vertices(ref, p));
    for (std::uint64_t s = 1; s <= 5; ++s) {
      const BallGraph g = build_ball(p, 4, {}, s);
      CHECK(g.distance == ref.distance);
      CHECK(g.targets == ref.targets);
    }
    for (std::uint64_t s = 1; s <= 3; ++s) {
      const BallGraph g = build_ball(abb(), 5, {}, s);
      CHECK(g.targets == build_ball(abb(), 5).targets);
    }
  }

  TEST_CASE("slim defect against the integer line") {
    const BallGraph g = build_ball(abb(), 4);
    const auto pos = positions(g);
    std::vector<std::uint32_t> closed;
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
      if (g.closed(v)) closed.push_back(v);
    REQUIRE(closed.size() == 13);
    std::uint32_t expected = 0;
    for (std::size_t i = 0; i < closed.size(); ++i)
      for (std::size_t j = i + 1; j < closed.size(); ++j)
        for (std::size_t k = j + 1; k < closed.size(); ++k)
          expected = std::max(expected, line_defect(pos[closed[i]], pos[closed[j]], pos[closed[k]], 8));
    const SlimEstimate all = slim_delta_estimate(g, 0, 1);
    CHECK(all.triangles == 13 * 12 * 11 / 6);
    CHECK(all.closed_vertices == 13);
    CHECK(all.defect == expected);
    CHECK(all.defect == 1);
    CHECK(slim_delta_estimate(g, 0, 1, 3).defect == all.defect);
    const SlimEstimate some = slim_delta_estimate(g, 200, 9);
    CHECK(some.triangles == 200);
    CHECK(some.defect <= all.defect);
    CHECK(slim_delta_estimate(g, 200, 9, 2).witness == some.witness);
  }

  TEST_CASE("geodesics") {
    const BallGraph g = build_ball(abb(), 4);
    const auto pos = positions(g);
    for (std::uint32_t u = 0; u < g.vertex_count(); u += 3) {
      for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
        const auto path = ball_geodesic(g, u, v);
        CHECK(path.front() == u);
        CHECK(path.back() == v);
        CHECK(path.size() == static_cast<std::size_t>(line_distance(pos[u], pos[v])) + 1);
      }
    }
  }

  TEST_CASE("parallel geodesics and strips") {
    const Fig1Report r = fig1_demo();
    CHECK(r.ok);
    CHECK(r.gamma_geodesic);
    CHECK(r.translate_geodesic);
    CHECK(r.disjoint);
    CHECK(r.hausdorff == 1);
    REQUIRE_FALSE(r.strips.empty());
    for (const auto& s : r.strips) {
      CHECK(s.faces == 2 * s.t);
      CHECK(s.cancel == s.expected_cancel);
      CHECK(s.cancel == 2 * s.t - 1);
      CHECK(s.euler);
      CHECK(s.reduced);
      CHECK(s.e0 == 2);
      CHECK(s.e2 == 2 * s.t);
      CHECK(s.realized);
    }
  }

  TEST_CASE("caps and preconditions") {
    const auto p = abb();
    CHECK_THROWS_AS(build_ball(p, 20), Error);
    BallCaps tight;
    tight.max_vertices = 5;
    CHECK_THROWS_AS(build_ball(make_presentation(2, Rational(0), 0, {}), 3, tight), Error);
    // a = b^-2 = b^2 and b = a^-2 force a trivial group
    const auto trivial =
        make_presentation(2, Rational(0), 0, {Word::parse(2, "abb"), Word::parse(2, "aBB"), Word::parse(2, "aab")});
    const BallGraph g = build_ball(trivial, 3);
    CHECK(g.vertex_count() == 1);
    try {
      slim_delta_estimate(g, 0, 1);
      FAIL("expected a precondition error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Precondition);
    }
  }
}
