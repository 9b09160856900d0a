#include "trigroup/cayley.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <set>
#include <thread>

#include "trigroup/diagram.hpp"
#include "trigroup/error.hpp"
#include "trigroup/rng.hpp"
#include "trigroup/union_find.hpp"

namespace trigroup {

namespace {

using Variant = std::array<std::uint32_t, 3>;

// Rotations of every relator and of its inverse, as letter codes.
std::vector<Variant> relator_variants(const TriangularPresentation& p) {
  std::vector<Variant> out;
  for (const Word& r : p.relators) {
    for (const Word& w : {r, r.inverse()}) {
      for (std::size_t k = 0; k < 3; ++k) {
        const Word v = w.rotated(k);
        out.push_back({v[0].code(), v[1].code(), v[2].code()});
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

template <class T>
void shuffle_with(std::vector<T>& items, RandomSource* rng) {
  if (!rng) return;
  for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[rng->below(i)]);
}

class Folder {
 public:
  Folder(std::uint32_t m, std::uint64_t max_vertices) : letters_(2 * m), max_vertices_(max_vertices) { add_vertex(); }

  std::uint32_t add_vertex() {
    if (uf_.size() >= max_vertices_) {
      fail(ErrorCode::CapExceeded, "ball construction exceeded the vertex budget of " + std::to_string(max_vertices_) +
                                       "; raise --max-vertices or lower --radius");
    }
    uf_.add();
    adj_.resize(adj_.size() + letters_, kNoVertex);
    return static_cast<std::uint32_t>(uf_.size() - 1);
  }

  std::uint32_t find(std::uint32_t v) { return static_cast<std::uint32_t>(uf_.find(v)); }

  std::uint32_t get(std::uint32_t v, std::uint32_t c) {
    const std::uint32_t t = adj_[static_cast<std::size_t>(v) * letters_ + c];
    return t == kNoVertex ? kNoVertex : find(t);
  }

  void link(std::uint32_t v, std::uint32_t c, std::uint32_t w) {
    adj_[static_cast<std::size_t>(v) * letters_ + c] = w;
    adj_[static_cast<std::size_t>(w) * letters_ + (c ^ 1U)] = v;
  }

  void merge(std::uint32_t a, std::uint32_t b) {
    std::deque<std::pair<std::uint32_t, std::uint32_t>> pending{{a, b}};
    while (!pending.empty()) {
      auto [x, y] = pending.front();
      pending.pop_front();
      x = find(x);
      y = find(y);
      if (x == y) continue;
      const std::uint32_t keep = std::min(x, y);
      const std::uint32_t gone = std::max(x, y);
      uf_.unite(keep, gone);
      for (std::uint32_t c = 0; c < letters_; ++c) {
        const std::uint32_t raw = adj_[static_cast<std::size_t>(gone) * letters_ + c];
        if (raw == kNoVertex) continue;
        const std::uint32_t t = find(raw);
        const std::uint32_t s = get(keep, c);
        if (s == kNoVertex) {
          adj_[static_cast<std::size_t>(keep) * letters_ + c] = t;
        } else if (s != t) {
          pending.emplace_back(s, t);
        }
      }
    }
  }

  // Distances from the origin over live vertices; kNoVertex for dead or unreachable ones.
  std::vector<std::uint32_t> distances() {
    std::vector<std::uint32_t> dist(uf_.size(), kNoVertex);
    const std::uint32_t origin = find(0);
    dist[origin] = 0;
    std::vector<std::uint32_t> queue{origin};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::uint32_t v = queue[head];
      for (std::uint32_t c = 0; c < letters_; ++c) {
        const std::uint32_t w = get(v, c);
        if (w != kNoVertex && dist[w] == kNoVertex) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
      }
    }
    return dist;
  }

  std::size_t size() const { return uf_.size(); }

 private:
  std::uint32_t letters_;
  std::uint64_t max_vertices_;
  UnionFind uf_;
  std::vector<std::uint32_t> adj_;
};

std::vector<std::uint32_t> multi_source_distances(const BallGraph& g, const std::vector<std::uint32_t>& sources) {
  std::vector<std::uint32_t> dist(g.vertex_count(), kNoVertex);
  std::vector<std::uint32_t> queue;
  for (std::uint32_t s : sources) {
    if (dist[s] == kNoVertex) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t v = queue[head];
    for (std::uint32_t c = 0; c < 2 * g.m; ++c) {
      const std::uint32_t w = g.next(v, c);
      if (w != kNoVertex && dist[w] == kNoVertex) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::uint32_t triangle_defect(const BallGraph& g, std::uint32_t x, std::uint32_t y, std::uint32_t z) {
  const std::array<std::vector<std::uint32_t>, 3> sides{ball_geodesic(g, x, y), ball_geodesic(g, y, z), ball_geodesic(g, z, x)};
  std::uint32_t defect = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<std::uint32_t> others = sides[(i + 1) % 3];
    others.insert(others.end(), sides[(i + 2) % 3].begin(), sides[(i + 2) % 3].end());
    const auto dist = multi_source_distances(g, others);
    for (std::uint32_t v : sides[i]) defect = std::max(defect, dist[v]);
  }
  return defect;
}

}  // namespace

std::uint32_t BallGraph::walk(std::uint32_t v, const Word& w) const {
  for (const Letter& l : w.letters()) {
    if (v == kNoVertex) return kNoVertex;
    v = next(v, l.code());
  }
  return v;
}

BallGraph build_ball(const TriangularPresentation& p, std::uint32_t radius, BallCaps caps,
                     std::optional<std::uint64_t> shuffle_seed) {
  if (p.m == 0) fail(ErrorCode::InvalidArgument, "presentation has no generators");
  if (radius > caps.max_radius) {
    fail(ErrorCode::CapExceeded, "radius " + std::to_string(radius) + " exceeds the cap " + std::to_string(caps.max_radius) +
                                     "; raise --max-radius");
  }
  const std::uint32_t letters = 2 * p.m;
  std::vector<Variant> variants = relator_variants(p);
  std::optional<RandomSource> rng;
  if (shuffle_seed) rng.emplace(*shuffle_seed);
  RandomSource* order = rng ? &*rng : nullptr;

  Folder f(p.m, caps.max_vertices);
  bool changed = true;
  std::vector<std::uint32_t> dist;
  while (changed) {
    changed = false;
    dist = f.distances();
    std::vector<std::uint32_t> inner;
    for (std::uint32_t v = 0; v < dist.size(); ++v) {
      if (dist[v] != kNoVertex && dist[v] <= radius) inner.push_back(v);
    }
    shuffle_with(inner, order);
    for (std::uint32_t v : inner) {
      for (std::uint32_t c = 0; c < letters; ++c) {
        if (f.get(v, c) == kNoVertex) {
          const std::uint32_t w = f.add_vertex();
          f.link(v, c, w);
          changed = true;
        }
      }
    }
    shuffle_with(variants, order);
    for (std::uint32_t v0 : inner) {
      for (const Variant& r : variants) {
        const std::uint32_t v = f.find(v0);
        const std::uint32_t a = f.get(v, r[0]);
        const std::uint32_t u = f.get(v, r[2] ^ 1U);
        if (a == kNoVertex || u == kNoVertex) continue;
        const std::uint32_t ay = f.get(a, r[1]);
        if (ay != kNoVertex) {
          if (ay != u) {
            f.merge(ay, u);
            changed = true;
          }
          continue;
        }
        const std::uint32_t uy = f.get(u, r[1] ^ 1U);
        if (uy != kNoVertex) {
          if (uy != a) {
            f.merge(uy, a);
            changed = true;
          }
          continue;
        }
        f.link(a, r[1], u);
        changed = true;
      }
    }
  }

  // Canonical breadth-first numbering of the vertices within the radius.
  BallGraph g;
  g.m = p.m;
  g.radius = radius;
  std::vector<std::uint32_t> new_id(f.size(), kNoVertex);
  std::vector<std::uint32_t> queue{f.find(0)};
  new_id[queue[0]] = 0;
  g.distance.push_back(0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t v = queue[head];
    for (std::uint32_t c = 0; c < letters; ++c) {
      const std::uint32_t w = f.get(v, c);
      if (w == kNoVertex || new_id[w] != kNoVertex || dist[w] > radius) continue;
      new_id[w] = static_cast<std::uint32_t>(queue.size());
      queue.push_back(w);
      g.distance.push_back(dist[w]);
    }
  }
  g.targets.assign(queue.size() * letters, kNoVertex);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (std::uint32_t c = 0; c < letters; ++c) {
      const std::uint32_t w = f.get(queue[i], c);
      if (w != kNoVertex && new_id[w] != kNoVertex) g.targets[i * letters + c] = new_id[w];
    }
  }
  return g;
}

bool ball_is_consistent(const BallGraph& g) {
  if (g.vertex_count() == 0 || g.targets.size() != static_cast<std::size_t>(g.vertex_count()) * 2 * g.m) return false;
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    for (std::uint32_t c = 0; c < 2 * g.m; ++c) {
      const std::uint32_t w = g.next(v, c);
      if (w == kNoVertex) {
        if (g.closed(v)) return false;
        continue;
      }
      if (w >= g.vertex_count() || g.next(w, c ^ 1U) != v) return false;
    }
  }
  return ball_distances(g, 0) == g.distance;
}

bool relators_close_at_closed_vertices(const BallGraph& g, const TriangularPresentation& p) {
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    if (!g.closed(v)) continue;
    for (const Word& r : p.relators) {
      if (g.walk(v, r) != v) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> ball_distances(const BallGraph& g, std::uint32_t source) {
  if (source >= g.vertex_count()) fail(ErrorCode::InvalidArgument, "vertex " + std::to_string(source) + " is not in the ball");
  return multi_source_distances(g, {source});
}

std::vector<std::uint32_t> ball_geodesic(const BallGraph& g, std::uint32_t from, std::uint32_t to) {
  const auto dist = ball_distances(g, to);
  if (from >= g.vertex_count() || dist[from] == kNoVertex) {
    fail(ErrorCode::InvalidArgument, "no path between the given vertices inside the ball");
  }
  std::vector<std::uint32_t> path{from};
  std::uint32_t v = from;
  while (v != to) {
    for (std::uint32_t c = 0; c < 2 * g.m; ++c) {
      const std::uint32_t w = g.next(v, c);
      if (w != kNoVertex && dist[w] + 1 == dist[v]) {
        v = w;
        break;
      }
    }
    path.push_back(v);
  }
  return path;
}

SlimEstimate slim_delta_estimate(const BallGraph& g, std::uint64_t samples, std::uint64_t seed, unsigned workers) {
  std::vector<std::uint32_t> closed;
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    if (g.closed(v)) closed.push_back(v);
  }
  if (closed.size() < 3) {
    fail(ErrorCode::Precondition, "need at least 3 closed vertices, the ball has " + std::to_string(closed.size()) +
                                      "; increase the radius");
  }
  const std::uint64_t n = closed.size();
  const bool exhaustive = samples == 0;
  const std::uint64_t total = exhaustive ? n * (n - 1) * (n - 2) / 6 : samples;
  if (exhaustive && total > 50'000'000ULL) {
    fail(ErrorCode::CapExceeded, "exhaustive mode would examine " + std::to_string(total) + " triangles; pass --samples");
  }

  // Triangle with index t: a uniform sample, or the t-th triple in lexicographic order.
  std::vector<std::array<std::uint32_t, 3>> triples;
  if (exhaustive) {
    for (std::uint64_t i = 0; i < n; ++i)
      for (std::uint64_t j = i + 1; j < n; ++j)
        for (std::uint64_t k = j + 1; k < n; ++k) triples.push_back({closed[i], closed[j], closed[k]});
  } else {
    for (std::uint64_t t = 0; t < samples; ++t) {
      RandomSource rng(derive_seed(seed, t));
      const std::uint64_t i = rng.below(n);
      std::uint64_t j = rng.below(n - 1);
      if (j >= i) ++j;
      std::uint64_t k = rng.below(n - 2);
      for (std::uint64_t skip : {std::min(i, j), std::max(i, j)}) {
        if (k >= skip) ++k;
      }
      triples.push_back({closed[i], closed[j], closed[k]});
    }
  }

  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, triples.size()))));
  struct Best {
    std::uint32_t defect = 0;
    std::size_t index = 0;
    bool any = false;
  };
  std::vector<Best> best(workers);
  auto run = [&](unsigned w) {
    const std::size_t begin = triples.size() * w / workers;
    const std::size_t end = triples.size() * (w + 1) / workers;
    for (std::size_t t = begin; t < end; ++t) {
      const std::uint32_t d = triangle_defect(g, triples[t][0], triples[t][1], triples[t][2]);
      if (!best[w].any || d > best[w].defect) best[w] = {d, t, true};
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }
  Best overall;
  for (const Best& b : best) {
    if (!b.any) continue;
    if (!overall.any || b.defect > overall.defect || (b.defect == overall.defect && b.index < overall.index)) overall = b;
  }

  SlimEstimate est;
  est.defect = overall.defect;
  est.triangles = triples.size();
  est.closed_vertices = static_cast<std::uint32_t>(closed.size());
  if (overall.any) est.witness = triples[overall.index];
  return est;
}

Fig1Report fig1_demo() {
  constexpr std::uint32_t kLength = 6;
  const TriangularPresentation p = make_presentation(2, 0, 0, {Word::parse(2, "abb")});
  const Letter a{0, false};
  const Letter b_inv{1, true};

  Fig1Report rep;
  const BallGraph g = build_ball(p, rep.radius);
  rep.ball_vertices = g.vertex_count();

  std::uint32_t v = 0;
  std::uint32_t u = g.next(0, b_inv.code());
  for (std::uint32_t i = 0; i <= kLength; ++i) {
    if (v == kNoVertex || u == kNoVertex) fail(ErrorCode::Precondition, "paths leave the ball");
    rep.gamma.push_back(v);
    rep.translate.push_back(u);
    v = g.next(v, a.code());
    u = g.next(u, a.code());
  }
  const auto from_translate_start = ball_distances(g, rep.translate[0]);
  rep.gamma_geodesic = true;
  rep.translate_geodesic = true;
  for (std::uint32_t i = 0; i <= kLength; ++i) {
    rep.gamma_distance.push_back(g.distance[rep.gamma[i]]);
    rep.translate_distance.push_back(from_translate_start[rep.translate[i]]);
    rep.gamma_geodesic = rep.gamma_geodesic && rep.gamma_distance[i] == i;
    rep.translate_geodesic = rep.translate_geodesic && rep.translate_distance[i] == i;
  }
  const std::set<std::uint32_t> gamma_set(rep.gamma.begin(), rep.gamma.end());
  rep.disjoint = std::none_of(rep.translate.begin(), rep.translate.end(), [&](std::uint32_t x) { return gamma_set.count(x); });
  const auto to_translate = multi_source_distances(g, rep.translate);
  const auto to_gamma = multi_source_distances(g, rep.gamma);
  for (std::uint32_t x : rep.gamma) rep.hausdorff = std::max(rep.hausdorff, to_translate[x]);
  for (std::uint32_t x : rep.translate) rep.hausdorff = std::max(rep.hausdorff, to_gamma[x]);

  bool strips_ok = true;
  for (std::uint32_t t = 1; t <= 4; ++t) {
    const VanKampenDiagram strip = parallel_strip(t);
    StripCheck s;
    s.t = t;
    s.faces = strip.area();
    s.cancel = cancel(strip);
    s.expected_cancel = 2 * t - 1;
    s.euler = euler_check(strip);
    s.reduced = is_reduced_diagram(strip, p);
    const BoundaryPartition part = partition_boundary(strip, parallel_strip_marks(strip));
    s.e0 = part.e0;
    s.e1 = part.e1;
    s.e2 = part.e2;
    // p_i = a^i sits at gamma[i], q_i = b^-1 a^i at translate[i].
    auto place = [&](std::uint32_t x) { return x <= t ? rep.gamma[x] : rep.translate[x - t - 1]; };
    s.realized = std::all_of(strip.edges.begin(), strip.edges.end(), [&](const DiagramEdge& e) {
      return g.next(place(e.tail), e.label.code()) == place(e.head);
    });
    s.ok = s.cancel == s.expected_cancel && s.euler && s.reduced && s.e1 == 0 && s.e2 == 2 * t && s.realized;
    strips_ok = strips_ok && s.ok;
    rep.strips.push_back(s);
  }
  rep.ok = rep.gamma_geodesic && rep.translate_geodesic && rep.disjoint && rep.hausdorff == 1 && strips_ok;
  return rep;
}

}  // namespace trigroup
