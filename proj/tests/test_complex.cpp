#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "trigroup/chain.hpp"
#include "trigroup/complex.hpp"
#include "trigroup/diagram.hpp"
#include "trigroup/error.hpp"

using namespace trigroup;

namespace {

OrientedEdge fw(std::uint32_t e) { return {e, false}; }
OrientedEdge bw(std::uint32_t e) { return {e, true}; }

AbstractLabelledComplex make(std::uint32_t edges, std::vector<std::vector<OrientedEdge>> paths, std::vector<std::uint32_t> pi) {
  std::vector<Face> faces;
  for (auto& p : paths) faces.push_back(Face{std::move(p)});
  const std::uint32_t n = *std::max_element(pi.begin(), pi.end());
  return {TwoComplex::from_gluing(edges, std::move(faces)), n, std::move(pi)};
}

// Independent expansion of Red straight from its definition.
std::uint64_t red_by_definition(const AbstractLabelledComplex& y) {
  std::uint64_t total = 0;
  for (std::uint32_t e = 0; e < y.base.edge_count(); ++e) {
    for (std::uint32_t i = 1; i <= y.n; ++i) {
      // least positions of e over faces labelled i
      std::vector<std::uint32_t> pos;
      for (std::uint32_t f = 0; f < y.base.face_count(); ++f) {
        if (y.pi[f] != i) continue;
        const auto& b = y.base.face(f).boundary;
        for (std::uint32_t k = 0; k < b.size(); ++k) {
          if (b[k].edge == e) {
            pos.push_back(k + 1);
            break;
          }
        }
      }
      if (pos.empty()) continue;
      const auto least = *std::min_element(pos.begin(), pos.end());
      const auto ties = static_cast<std::uint64_t>(std::count(pos.begin(), pos.end(), least));
      total += ties - 1;
    }
  }
  return total;
}

}  // namespace

TEST_SUITE("complex") {
  TEST_CASE("degrees and Cancel") {
    const auto tri = make(3, {{fw(0), fw(1), fw(2)}}, {1});
    CHECK(edge_degree(tri.base, 0) == 1);
    CHECK(cancel(tri.base) == 0);

    const auto pair = make(5, {{fw(0), fw(1), fw(2)}, {bw(0), fw(3), fw(4)}}, {1, 2});
    CHECK(edge_degree(pair.base, 0) == 2);
    CHECK(cancel(pair.base) == 1);

    const auto loop = make(2, {{fw(0), fw(0), fw(1)}}, {1});
    CHECK(edge_degree(loop.base, 0) == 2);
    CHECK(cancel(loop.base) == 1);

    const auto twin = make(3, {{fw(0), fw(1), fw(2)}, {fw(0), fw(1), fw(2)}}, {1, 1});
    CHECK(cancel(twin.base) == 3);
    CHECK_THROWS_AS(edge_degree(tri.base, 7), Error);
  }

  TEST_CASE("the six-face edge contributes 4 - 1") {
    // e = edge 0; faces 0-3 hold it at position 2, faces 4-5 at position 3
    std::vector<std::vector<OrientedEdge>> paths;
    std::uint32_t next = 1;
    for (int f = 0; f < 4; ++f) {
      paths.push_back({fw(next), fw(0), fw(next + 1)});
      next += 2;
    }
    for (int f = 0; f < 2; ++f) {
      paths.push_back({fw(next), fw(next + 1), fw(0)});
      next += 2;
    }
    const auto y = make(next, paths, {1, 1, 1, 1, 1, 1});
    const auto contributions = red_contributions(y.base, y.pi);
    REQUIRE(contributions.size() == 1);
    CHECK(contributions[0].edge == 0);
    CHECK(contributions[0].tied_faces == 4);
    CHECK(contributions[0].contribution == 3);
    CHECK(red(y) == 3);
    CHECK(red_by_definition(y) == 3);
  }

  TEST_CASE("xi tie rule") {
    const auto lone = make(3, {{fw(0), fw(1), fw(2)}}, {1});
    CHECK(xi(lone.base, lone.pi, 0, 0) == 1);

    const auto tie = make(5, {{fw(1), fw(0), fw(2)}, {fw(3), bw(0), fw(4)}}, {1, 1});
    CHECK(xi(tie.base, tie.pi, 0, 0) == 1);
    CHECK(xi(tie.base, tie.pi, 0, 1) == 1);

    const auto lead = make(5, {{fw(0), fw(1), fw(2)}, {fw(3), bw(0), fw(4)}}, {1, 1});
    CHECK(xi(lead.base, lead.pi, 0, 0) == 1);
    CHECK(xi(lead.base, lead.pi, 0, 1) == 0);
    CHECK(xi(lead.base, lead.pi, 3, 0) == 0);  // face does not contain the edge
  }

  TEST_CASE("Red examples") {
    const auto twin = make(3, {{fw(0), fw(1), fw(2)}, {fw(0), fw(1), fw(2)}}, {1, 1});
    CHECK(red(twin) == 3);
    const auto distinct = make(3, {{fw(0), fw(1), fw(2)}, {fw(0), fw(1), fw(2)}}, {1, 2});
    CHECK(red(distinct) == 0);
    // rotating a boundary path changes least positions
    const auto rotated = make(3, {{fw(0), fw(1), fw(2)}, {fw(1), fw(2), fw(0)}}, {1, 1});
    CHECK(red(rotated) == 0);
  }

  TEST_CASE("chi and delta") {
    const auto lone = make(3, {{fw(0), fw(1), fw(2)}}, {1});
    CHECK(chi(lone.base, lone.pi, 0, 0) == 1);
    CHECK(delta_face(lone, 0) == 0);

    const auto shared = make(5, {{fw(0), fw(1), fw(2)}, {bw(0), fw(3), fw(4)}}, {1, 2});
    CHECK(chi(shared.base, shared.pi, 0, 1) == 0);
    CHECK(chi(shared.base, shared.pi, 0, 0) == 1);
    CHECK(delta_face(shared, 0) == 0);
    CHECK(delta_face(shared, 1) == 1);

    const auto same = make(5, {{fw(0), fw(1), fw(2)}, {bw(0), fw(3), fw(4)}}, {1, 1});
    CHECK(chi(same.base, same.pi, 0, 1) == 1);

    const auto twin = make(3, {{fw(0), fw(1), fw(2)}, {fw(0), fw(1), fw(2)}}, {1, 1});
    CHECK(delta_face(twin, 0) == 0);
    CHECK(delta_face(twin, 1) == 0);

    // a repeated edge is in least position once
    const auto loop = make(2, {{fw(0), fw(0), fw(1)}}, {1});
    CHECK(delta_face(loop, 0) == 1);
  }

  TEST_CASE("chi needs every edge on a face") {
    TwoComplex with_isolated(3, {{0, 1}, {1, 2}, {2, 0}, {0, 0}}, {Face{{fw(0), fw(1), fw(2)}}});
    const std::vector<std::uint32_t> pi{1};
    CHECK_THROWS_AS(delta_face(with_isolated, pi, 0), Error);
    CHECK(cancel(with_isolated) == 0);  // degenerate complexes are fine elsewhere
  }

  TEST_CASE("boundary paths must be closed") {
    CHECK_THROWS_AS(TwoComplex(3, {{0, 1}, {1, 2}, {0, 2}}, {Face{{fw(0), fw(1), fw(2)}}}), Error);
    CHECK_THROWS_AS(AbstractLabelledComplex(TwoComplex::from_gluing(3, {Face{{fw(0), fw(1), fw(2)}}}), 2, {1}), Error);
  }

  TEST_CASE("random complexes: Red matches its definition, label invariances") {
    RandomSource rng(2718);
    for (int t = 0; t < 2000; ++t) {
      const auto y = random_labelled_complex(rng, {6, 2, 4});
      const auto r = red(y);
      CHECK(r == red_by_definition(y));
      // relabel with a random permutation of 1..n
      std::vector<std::uint32_t> perm(y.n);
      std::iota(perm.begin(), perm.end(), 1U);
      for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
      std::vector<std::uint32_t> pi2;
      for (auto l : y.pi) pi2.push_back(perm[l - 1]);
      CHECK(red(y.base, pi2) == r);
      std::uint64_t sum = 0;
      for (std::uint32_t f = 0; f < y.base.face_count(); ++f) {
        const auto d = delta_face(y, f);
        CHECK(d <= y.base.face(f).boundary.size());
        sum += d;
      }
      CHECK(r + sum >= cancel(y.base));
    }
  }

  TEST_CASE("chain inequality on 10^4 random complexes") {
    const ChainReport a = chain_check(10000, 1);
    CHECK(a.samples == 10000);
    CHECK(a.violations == 0);
    CHECK(a.tight > 0);
    const ChainReport b = chain_check(10000, 1, {}, 3);
    CHECK(b.tight == a.tight);
  }

  TEST_CASE("gluing") {
    auto single = [](const char* w) {
      LabelledTwoComplex y;
      y.base = TwoComplex(3, {{0, 1}, {1, 2}, {2, 0}}, {Face{{fw(0), fw(1), fw(2)}}});
      y.relator_index = {0};
      const Word word = Word::parse(2, w);
      for (int k = 0; k < 3; ++k) y.edge_label.emplace_back(word[k]);
      return y;
    };
    const auto a = single("abb");
    const auto glued = glue_complexes({a, a}, {{{0, {fw(0)}}, {1, {fw(0)}}}});
    CHECK(glued.base.face_count() == 2);
    CHECK(glued.base.edge_count() == 5);
    CHECK(cancel(glued.base) == 1);

    // k copies along a path of length 2: each glued edge has degree k
    const std::uint32_t k = 4;
    std::vector<LabelledTwoComplex> parts(k, a);
    std::vector<PathIdentification> ids;
    for (std::uint32_t i = 1; i < k; ++i) ids.push_back({{0, {fw(0), fw(1)}}, {i, {fw(0), fw(1)}}});
    const auto fan = glue_complexes(parts, ids);
    CHECK(cancel(fan.base) == (k - 1) * 2);

    CHECK_THROWS_AS(glue_complexes({a, a}, {{{0, {fw(0)}}, {1, {fw(1)}}}}), Error);  // a against b
    CHECK_THROWS_AS(glue_complexes({a, a}, {{{0, {fw(0)}}, {1, {fw(0), fw(1)}}}}), Error);
  }

  TEST_CASE("diagram Cancel counts interior edges") {
    for (std::uint32_t t = 1; t <= 4; ++t) {
      const VanKampenDiagram s = parallel_strip(t);
      const auto faces_on = diagram_edge_faces(s);
      const auto interior = static_cast<std::uint64_t>(std::count(faces_on.begin(), faces_on.end(), 2U));
      CHECK(cancel(s) == interior);
      CHECK(cancel(s) == 2 * t - 1);
    }
  }
}
