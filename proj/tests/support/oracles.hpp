// Independent reference computations used by the unit and acceptance tests.
// Nothing here calls into the library's algorithms except for building
// input objects.
#pragma once

#include <algorithm>
#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "trigroup/complex.hpp"

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;

// Letters are codes 0..2m-1; code ^ 1 is the inverse.
using Triple = std::array<int, 3>;

/// Cyclically reduced length-3 words by filtering all (2m)^3 letter triples.
inline std::vector<Triple> cyc_reduced_triples(std::uint32_t m) {
  std::vector<Triple> out;
  const int k = static_cast<int>(2 * m);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c) {
        const bool reduced = (a ^ 1) != b && (b ^ 1) != c;
        const bool cyclic = (c ^ 1) != a;
        if (reduced && cyclic) out.push_back({a, b, c});
      }
  return out;
}

struct Slots {
  std::uint32_t edges = 0;
  // per face: label (1-based), three (edge, reversed)
  std::vector<std::uint32_t> label;
  std::vector<std::array<std::pair<std::uint32_t, bool>, 3>> side;
};

inline Slots slots_of(const trigroup::AbstractLabelledComplex& y) {
  Slots s;
  s.edges = y.base.edge_count();
  for (std::uint32_t f = 0; f < y.base.face_count(); ++f) {
    const auto& b = y.base.face(f).boundary;
    s.label.push_back(y.pi[f]);
    s.side.push_back({std::pair{b[0].edge, b[0].reversed}, std::pair{b[1].edge, b[1].reversed},
                      std::pair{b[2].edge, b[2].reversed}});
  }
  return s;
}

/// Consistent i-tuples for every level i, by running over all tuples.
inline std::vector<BigInt> brute_force_counts(const trigroup::AbstractLabelledComplex& y, std::uint32_t m) {
  const Slots s = slots_of(y);
  const auto words = cyc_reduced_triples(m);
  std::vector<BigInt> counts(y.n + 1, 0);
  counts[0] = 1;
  for (std::uint32_t level = 1; level <= y.n; ++level) {
    // odometer over words^level
    std::vector<std::size_t> idx(level, 0);
    for (;;) {
      std::vector<int> forward(s.edges, -1);
      bool ok = true;
      for (std::size_t f = 0; f < s.label.size() && ok; ++f) {
        if (s.label[f] > level) continue;
        const Triple& w = words[idx[s.label[f] - 1]];
        for (int p = 0; p < 3 && ok; ++p) {
          const auto [e, rev] = s.side[f][p];
          const int v = rev ? (w[p] ^ 1) : w[p];
          if (forward[e] < 0) forward[e] = v;
          else if (forward[e] != v) ok = false;
        }
      }
      if (ok) ++counts[level];
      std::size_t k = 0;
      while (k < level && ++idx[k] == words.size()) idx[k++] = 0;
      if (k == level) break;
    }
  }
  return counts;
}

/// Consistent i-tuples by inclusion-exclusion over the cyclic-reduction
/// constraints. Variables are word positions (j, p); edges force
/// equalities x = y or x = y^-1, and each constraint forbids
/// x_{j,p+1} = x_{j,p}^-1. Only the parity of the composed inversions
/// matters, so every consistent class of variables has 2m solutions.
/// Returns, per level, coefficients c[k] with count = sum_k c[k] (2m)^k.
inline std::vector<std::vector<std::int64_t>> inclusion_exclusion_polys(const trigroup::AbstractLabelledComplex& y) {
  const Slots s = slots_of(y);
  const std::uint32_t n = y.n;
  std::vector<std::vector<std::int64_t>> polys(n + 1);
  polys[0] = {1};

  struct Parity {
    std::vector<int> parent, par;
    bool broken = false;
    explicit Parity(int k) : parent(k), par(k, 0) { std::iota(parent.begin(), parent.end(), 0); }
    std::pair<int, int> find(int x) {
      int p = 0;
      while (parent[x] != x) {
        p ^= par[x];
        x = parent[x];
      }
      return {x, p};
    }
    int classes = 0;
    void join(int a, int b, int parity) {  // x_a = x_b ^ parity
      auto [ra, pa] = find(a);
      auto [rb, pb] = find(b);
      if (ra == rb) {
        if ((pa ^ pb) != parity) broken = true;
        return;
      }
      parent[ra] = rb;
      par[ra] = pa ^ pb ^ parity;
      --classes;
    }
  };

  for (std::uint32_t level = 1; level <= n; ++level) {
    const int vars = static_cast<int>(3 * level);
    // base equalities from edges: variable (j,p) writes letter on edge, forward = x ^ rev
    std::vector<std::pair<int, int>> first_writer(s.edges, {-1, 0});
    std::vector<std::array<int, 3>> base;  // a, b, parity
    for (std::size_t f = 0; f < s.label.size(); ++f) {
      if (s.label[f] > level) continue;
      for (int p = 0; p < 3; ++p) {
        const auto [e, rev] = s.side[f][p];
        const int v = static_cast<int>(3 * (s.label[f] - 1)) + p;
        if (first_writer[e].first < 0) {
          first_writer[e] = {v, rev ? 1 : 0};
        } else {
          // x_v ^ rev == x_w ^ rev_w
          base.push_back({v, first_writer[e].first, (rev ? 1 : 0) ^ first_writer[e].second});
        }
      }
    }
    std::vector<std::array<int, 2>> forbid;  // x_a = x_b ^ 1 forbidden
    for (std::uint32_t j = 0; j < level; ++j) {
      const int b0 = static_cast<int>(3 * j);
      forbid.push_back({b0 + 1, b0});
      forbid.push_back({b0 + 2, b0 + 1});
      forbid.push_back({b0, b0 + 2});
    }
    std::vector<std::int64_t> poly(vars + 1, 0);
    const std::size_t subsets = std::size_t{1} << forbid.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
      Parity uf(vars);
      uf.classes = vars;
      for (const auto& b : base) uf.join(b[0], b[1], b[2]);
      int bits = 0;
      for (std::size_t c = 0; c < forbid.size(); ++c) {
        if ((mask >> c) & 1U) {
          uf.join(forbid[c][0], forbid[c][1], 1);
          ++bits;
        }
      }
      if (uf.broken) continue;
      poly[uf.classes] += (bits % 2 == 0) ? 1 : -1;
    }
    polys[level] = poly;
  }
  return polys;
}

inline BigInt evaluate(const std::vector<std::int64_t>& poly, std::uint32_t m) {
  BigInt total = 0;
  BigInt power = 1;
  for (std::int64_t c : poly) {
    total += BigInt(c) * power;
    power *= 2 * m;
  }
  return total;
}

/// Triangular abstract complexes, one per isomorphism class (face
/// permutations preserving labels, edge renaming, edge reorientation),
/// with at most max_faces faces and every labelling sorted by face.
/// Vertices come from the finest gluing.
struct SmallComplex {
  std::uint32_t faces = 0;
  std::vector<int> edge_class;  // per slot
  std::vector<int> reversed;    // per slot
  std::vector<std::uint32_t> pi;
};

inline std::vector<int> small_complex_code(const SmallComplex& c) {
  const int F = static_cast<int>(c.faces);
  std::vector<int> perm(F);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  do {
    std::vector<int> id(c.edge_class.size() + 1, -1), flip(c.edge_class.size() + 1, 0);
    int next = 0;
    std::vector<int> code;
    for (int k = 0; k < F; ++k) {
      const int f = perm[k];
      code.push_back(static_cast<int>(c.pi[f]));
      for (int p = 0; p < 3; ++p) {
        const int slot = 3 * f + p;
        const int e = c.edge_class[slot];
        if (id[e] < 0) {
          id[e] = next++;
          flip[e] = c.reversed[slot];
        }
        code.push_back(id[e]);
        code.push_back(c.reversed[slot] ^ flip[e]);
      }
    }
    if (best.empty() || code < best) best = code;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Calls visit once per isomorphism class.
inline void for_each_small_complex(std::uint32_t max_faces, const std::function<void(const SmallComplex&)>& visit) {
  std::set<std::vector<int>> seen;
  for (std::uint32_t F = 1; F <= max_faces; ++F) {
    // sorted surjective labellings of F faces
    std::vector<std::vector<std::uint32_t>> labellings;
    std::vector<std::uint32_t> pi(F, 1);
    std::function<void(std::uint32_t)> lab = [&](std::uint32_t f) {
      if (f == F) {
        labellings.push_back(pi);
        return;
      }
      const std::uint32_t prev = f == 0 ? 0 : pi[f - 1];
      for (std::uint32_t v = std::max(1U, prev); v <= prev + 1; ++v) {
        pi[f] = v;
        lab(f + 1);
      }
    };
    lab(0);

    const int S = static_cast<int>(3 * F);
    SmallComplex c;
    c.faces = F;
    c.edge_class.assign(S, 0);
    c.reversed.assign(S, 0);
    std::function<void(int, int)> partition = [&](int slot, int classes) {
      if (slot == S) {
        std::vector<int> first(classes, -1);
        for (int t = 0; t < S; ++t)
          if (first[c.edge_class[t]] < 0) first[c.edge_class[t]] = t;
        std::vector<int> free_slots;
        for (int t = 0; t < S; ++t)
          if (first[c.edge_class[t]] != t) free_slots.push_back(t);
        for (std::uint32_t mask = 0; mask < (1U << free_slots.size()); ++mask) {
          std::fill(c.reversed.begin(), c.reversed.end(), 0);
          for (std::size_t i = 0; i < free_slots.size(); ++i) c.reversed[free_slots[i]] = (mask >> i) & 1U;
          for (const auto& l : labellings) {
            c.pi = l;
            if (seen.insert(small_complex_code(c)).second) visit(c);
          }
        }
        return;
      }
      for (int k = 0; k <= classes; ++k) {
        c.edge_class[slot] = k;
        partition(slot + 1, std::max(classes, k + 1));
      }
    };
    partition(0, 0);
  }
}

inline trigroup::AbstractLabelledComplex to_complex(const SmallComplex& c) {
  std::vector<trigroup::Face> faces(c.faces);
  int edges = 0;
  for (std::uint32_t f = 0; f < c.faces; ++f) {
    for (int p = 0; p < 3; ++p) {
      const int slot = static_cast<int>(3 * f) + p;
      faces[f].boundary.push_back({static_cast<std::uint32_t>(c.edge_class[slot]), c.reversed[slot] != 0});
      edges = std::max(edges, c.edge_class[slot] + 1);
    }
  }
  const std::uint32_t n = *std::max_element(c.pi.begin(), c.pi.end());
  return {trigroup::TwoComplex::from_gluing(static_cast<std::uint32_t>(edges), std::move(faces)), n, c.pi};
}

}  // namespace oracle
