// Brute-force reference for reduced triangular disc diagrams: every choice
// of face words and every partial pairing of sides, filtered by topology,
// canonicalized by trying all relabellings.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "trigroup/diagram.hpp"
#include "trigroup/words.hpp"

namespace oracle {

struct DiscFace {
  std::uint32_t relator = 0;
  std::array<int, 3> word{};  // counterclockwise letter codes, side k from corner k to k+1
};

struct Disc {
  std::vector<DiscFace> faces;
  std::vector<int> partner;  // per side slot 3f+k: glued slot or -1
};

using DiscCode = std::vector<int>;

inline DiscCode disc_code(const Disc& d) {
  const int F = static_cast<int>(d.faces.size());
  DiscCode best;
  std::vector<int> perm(F);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (int mirror = 0; mirror < 2; ++mirror) {
      std::vector<int> rot(F, 0);
      for (;;) {
        // old slot -> new slot
        std::vector<int> where(3 * F);
        for (int k = 0; k < F; ++k) {
          const int f = perm[k];
          for (int s = 0; s < 3; ++s) {
            const int mu = mirror ? 2 - s : s;
            where[3 * f + s] = 3 * k + (mu - rot[f] + 3) % 3;
          }
        }
        DiscCode code;
        for (int k = 0; k < F; ++k) {
          const int f = perm[k];
          code.push_back(static_cast<int>(d.faces[f].relator));
          std::array<int, 3> w = d.faces[f].word;
          if (mirror) w = {w[2] ^ 1, w[1] ^ 1, w[0] ^ 1};
          for (int s = 0; s < 3; ++s) code.push_back(w[(s + rot[f]) % 3]);
        }
        std::vector<int> glue(3 * F, -1);
        for (int slot = 0; slot < 3 * F; ++slot) {
          if (d.partner[slot] >= 0) glue[where[slot]] = where[d.partner[slot]];
        }
        code.insert(code.end(), glue.begin(), glue.end());
        if (best.empty() || code < best) best = code;
        int i = 0;
        while (i < F && ++rot[i] == 3) rot[i++] = 0;
        if (i == F) break;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Topological disc with embedded faces and no mirror pair across an edge.
inline bool is_reduced_disc(const Disc& d) {
  const int F = static_cast<int>(d.faces.size());
  std::vector<int> uf(3 * F);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  auto corner = [](int f, int c) { return 3 * f + (c % 3); };
  std::vector<int> comp(F);
  std::iota(comp.begin(), comp.end(), 0);
  auto cfind = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  int pairs = 0;
  for (int slot = 0; slot < 3 * F; ++slot) {
    const int other = d.partner[slot];
    if (other < slot) continue;
    ++pairs;
    const int fa = slot / 3, sa = slot % 3, fb = other / 3, sb = other % 3;
    // side sa runs corner sa -> sa+1; glued against side sb reversed
    uf[find(corner(fa, sa))] = find(corner(fb, sb + 1));
    uf[find(corner(fa, sa + 1))] = find(corner(fb, sb));
    comp[cfind(fa)] = cfind(fb);
    const auto& A = d.faces[fa].word;
    const auto& B = d.faces[fb].word;
    if (A[sa] != (B[sb] ^ 1)) return false;  // letters disagree
    const int a2 = A[(sa + 1) % 3], a3 = A[(sa + 2) % 3];
    const int y2 = B[(sb + 1) % 3], y3 = B[(sb + 2) % 3];
    if (a2 == (y3 ^ 1) && a3 == (y2 ^ 1)) return false;  // mirror pair
  }
  for (int f = 0; f < F; ++f) {
    if (cfind(f) != cfind(0)) return false;
    const int c0 = find(corner(f, 0)), c1 = find(corner(f, 1)), c2 = find(corner(f, 2));
    if (c0 == c1 || c1 == c2 || c0 == c2) return false;
  }
  std::set<int> vertices;
  for (int c = 0; c < 3 * F; ++c) vertices.insert(find(c));
  const int V = static_cast<int>(vertices.size());
  const int E = 3 * F - pairs;
  // every vertex link is a path or a cycle by construction; Euler
  // characteristic 1 then forces a disc
  return V - E + F == 1;
}

/// Canonical codes of all reduced discs with 1..max_faces faces, by area.
inline std::map<int, std::set<DiscCode>> brute_force_discs(std::uint32_t m, const std::vector<trigroup::Word>& relators,
                                                           std::uint32_t max_faces) {
  (void)m;
  std::vector<DiscFace> options;
  for (std::uint32_t i = 0; i < relators.size(); ++i) {
    const auto& r = relators[i].letters();
    for (int inv = 0; inv < 2; ++inv) {
      for (int rot = 0; rot < 3; ++rot) {
        DiscFace f;
        f.relator = i;
        for (int k = 0; k < 3; ++k) {
          f.word[k] = inv ? static_cast<int>(r[(rot + 2 - k + 3) % 3].code() ^ 1U)
                          : static_cast<int>(r[(rot + k) % 3].code());
        }
        options.push_back(f);
      }
    }
  }
  std::map<int, std::set<DiscCode>> out;
  for (std::uint32_t F = 1; F <= max_faces; ++F) {
    Disc d;
    d.faces.resize(F);
    d.partner.assign(3 * F, -1);
    std::vector<std::size_t> pick(F, 0);
    std::function<void(int)> match = [&](int slot) {
      while (slot < static_cast<int>(3 * F) && d.partner[slot] >= 0) ++slot;
      if (slot == static_cast<int>(3 * F)) {
        if (is_reduced_disc(d)) out[static_cast<int>(F)].insert(disc_code(d));
        return;
      }
      match(slot + 1);  // leave unglued
      for (int other = slot + 1; other < static_cast<int>(3 * F); ++other) {
        if (d.partner[other] >= 0) continue;
        d.partner[slot] = other;
        d.partner[other] = slot;
        match(slot + 1);
        d.partner[slot] = d.partner[other] = -1;
      }
    };
    for (;;) {
      for (std::uint32_t f = 0; f < F; ++f) d.faces[f] = options[pick[f]];
      match(0);
      std::uint32_t i = 0;
      while (i < F && ++pick[i] == options.size()) pick[i++] = 0;
      if (i == F) break;
    }
  }
  return out;
}

/// The same encoding for a library diagram.
inline DiscCode disc_code_of(const trigroup::VanKampenDiagram& d) {
  Disc out;
  const int F = static_cast<int>(d.faces.size());
  out.faces.resize(F);
  out.partner.assign(3 * F, -1);
  std::map<std::uint32_t, int> first_slot;
  for (int f = 0; f < F; ++f) {
    out.faces[f].relator = d.faces[f].relator;
    for (int k = 0; k < 3; ++k) {
      out.faces[f].word[k] = static_cast<int>(d.read(d.faces[f].sides[k]).code());
      const std::uint32_t e = d.faces[f].sides[k].edge;
      auto it = first_slot.find(e);
      if (it == first_slot.end()) {
        first_slot.emplace(e, 3 * f + k);
      } else {
        out.partner[3 * f + k] = it->second;
        out.partner[it->second] = 3 * f + k;
      }
    }
  }
  return disc_code(out);
}

}  // namespace oracle
