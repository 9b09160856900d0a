#include "trigroup/fulfillment.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>
#include <unordered_map>

#include "trigroup/error.hpp"
#include "trigroup/rng.hpp"

namespace trigroup {

namespace {

struct Slot {
  std::uint32_t edge;
  bool reversed;
};

// slots[j][p]: oriented edges that receive letter p of word j+1.
struct SlotTable {
  std::uint32_t edges = 0;
  std::uint32_t word_length = 0;
  std::vector<std::vector<std::vector<Slot>>> slots;
};

SlotTable make_slot_table(const AbstractLabelledComplex& y, std::uint32_t required_length) {
  SlotTable t;
  t.edges = y.base.edge_count();
  t.word_length = required_length;
  t.slots.assign(y.n, std::vector<std::vector<Slot>>(required_length));
  for (std::uint32_t f = 0; f < y.base.face_count(); ++f) {
    const auto& path = y.base.face(f).boundary;
    if (path.size() != required_length) {
      fail(ErrorCode::Precondition, "face " + std::to_string(f) + " has boundary length " + std::to_string(path.size()) +
                                        "; words have length " + std::to_string(required_length));
    }
    for (std::uint32_t p = 0; p < required_length; ++p) {
      t.slots[y.pi[f] - 1][p].push_back({path[p].edge, path[p].reversed});
    }
  }
  return t;
}

constexpr int kUnset = -1;

// Edge values as letter codes for the forward orientation, with an undo trail.
struct EdgeState {
  std::vector<int> value;
  std::vector<std::uint32_t> trail;

  explicit EdgeState(std::uint32_t edges) : value(edges, kUnset) {}

  std::size_t mark() const { return trail.size(); }
  void undo(std::size_t to) {
    while (trail.size() > to) {
      value[trail.back()] = kUnset;
      trail.pop_back();
    }
  }
  // Writes letter code c on the given slots; false on a clash.
  bool write(const std::vector<Slot>& slots, int c) {
    for (const Slot& s : slots) {
      const int normalized = s.reversed ? (c ^ 1) : c;
      int& v = value[s.edge];
      if (v == kUnset) {
        v = normalized;
        trail.push_back(s.edge);
      } else if (v != normalized) {
        return false;
      }
    }
    return true;
  }
  bool write_word(const SlotTable& t, std::uint32_t j, const Word& w) {
    for (std::uint32_t p = 0; p < t.word_length; ++p) {
      if (!write(t.slots[j][p], static_cast<int>(w[p].code()))) return false;
    }
    return true;
  }
};

using Count = unsigned __int128;

// Letters on the edges still needed by later words, one byte per edge.
using Frontier = std::string;

// Level-by-level transfer count. After word j only the letters on edges
// shared with some later word matter, so tuples agreeing there are merged.
class LevelCounter {
 public:
  LevelCounter(const SlotTable& table, std::uint32_t m) : table_(table), m_(m) {
    const std::size_t n = table.slots.size();
    std::vector<std::uint32_t> first(table.edges, kNever), last(table.edges, kNever);
    for (std::uint32_t j = 0; j < n; ++j) {
      for (const auto& pos : table.slots[j]) {
        for (const Slot& s : pos) {
          if (first[s.edge] == kNever) first[s.edge] = j;
          last[s.edge] = j;
        }
      }
    }
    // live[j]: edges written by words <= j and read again by a word > j
    live_.resize(n);
    for (std::uint32_t e = 0; e < table.edges; ++e) {
      if (first[e] == kNever) continue;
      for (std::uint32_t j = first[e]; j < last[e]; ++j) live_[j].push_back(e);
    }
  }

  std::vector<Count> run(unsigned workers) {
    std::vector<Count> counts(table_.slots.size() + 1, 0);
    counts[0] = 1;
    std::unordered_map<Frontier, Count> level{{Frontier(), 1}};
    for (std::uint32_t j = 0; j < table_.slots.size(); ++j) {
      std::vector<std::pair<const Frontier*, Count>> items;
      items.reserve(level.size());
      for (const auto& [key, c] : level) items.emplace_back(&key, c);
      const unsigned threads = static_cast<unsigned>(std::min<std::size_t>(std::max(1U, workers), items.size()));
      std::vector<std::unordered_map<Frontier, Count>> next(threads);
      std::vector<Count> total(threads, 0);
      auto work = [&](unsigned w) {
        EdgeState state(table_.edges);
        for (std::size_t k = w; k < items.size(); k += threads) {
          extend(j, *items[k].first, items[k].second, state, next[w], total[w]);
        }
      };
      if (threads == 1) {
        work(0);
      } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
      }
      level = std::move(next[0]);
      for (unsigned w = 1; w < threads; ++w) {
        for (auto& [key, c] : next[w]) level[key] += c;
      }
      for (const Count c : total) counts[j + 1] += c;
      if (level.empty()) break;
    }
    return counts;
  }

 private:
  static constexpr std::uint32_t kNever = 0xffffffffU;

  void extend(std::uint32_t j, const Frontier& key, Count weight, EdgeState& state,
              std::unordered_map<Frontier, Count>& out, Count& total) const {
    const auto& before = j == 0 ? kEmpty : live_[j - 1];
    for (std::size_t i = 0; i < before.size(); ++i) state.value[before[i]] = static_cast<unsigned char>(key[i]);
    const auto& after = live_[j];
    const int letters = static_cast<int>(2 * m_);
    Frontier next(after.size(), '\0');
    for (int c0 = 0; c0 < letters; ++c0) {
      const std::size_t m0 = state.mark();
      if (state.write(table_.slots[j][0], c0)) {
        for (int c1 = 0; c1 < letters; ++c1) {
          if (c1 == (c0 ^ 1)) continue;
          const std::size_t m1 = state.mark();
          if (state.write(table_.slots[j][1], c1)) {
            for (int c2 = 0; c2 < letters; ++c2) {
              if (c2 == (c1 ^ 1) || c2 == (c0 ^ 1)) continue;
              const std::size_t m2 = state.mark();
              if (state.write(table_.slots[j][2], c2)) {
                for (std::size_t i = 0; i < after.size(); ++i) next[i] = static_cast<char>(state.value[after[i]]);
                out[next] += weight;
                total += weight;
              }
              state.undo(m2);
            }
          }
          state.undo(m1);
        }
      }
      state.undo(m0);
    }
    for (std::uint32_t e : before) state.value[e] = kUnset;
  }

  static inline const std::vector<std::uint32_t> kEmpty{};
  const SlotTable& table_;
  std::uint32_t m_;
  std::vector<std::vector<std::uint32_t>> live_;
};

BigInt to_big(Count c) {
  BigInt out = 0;
  BigInt scale = 1;
  while (c != 0) {
    out += scale * static_cast<std::uint64_t>(c & 0xffffffffU);
    scale <<= 32;
    c >>= 32;
  }
  return out;
}

}  // namespace

PartialLabelling partial_label(const AbstractLabelledComplex& y, const std::vector<Word>& words) {
  if (words.size() > y.n) {
    fail(ErrorCode::InvalidArgument, "got " + std::to_string(words.size()) + " words for " + std::to_string(y.n) + " relator slots");
  }
  PartialLabelling pl;
  pl.words = words;
  pl.forward.assign(y.base.edge_count(), {});
  pl.backward.assign(y.base.edge_count(), {});
  for (std::uint32_t f = 0; f < y.base.face_count(); ++f) {
    const std::uint32_t j = y.pi[f];
    if (j > words.size()) continue;
    const Word& w = words[j - 1];
    const auto& path = y.base.face(f).boundary;
    if (path.size() != w.size()) {
      fail(ErrorCode::InvalidArgument, "word " + std::to_string(j) + " has length " + std::to_string(w.size()) + " but face " +
                                           std::to_string(f) + " has boundary length " + std::to_string(path.size()));
    }
    for (std::size_t i = 0; i < path.size(); ++i) {
      auto& set = path[i].reversed ? pl.backward[path[i].edge] : pl.forward[path[i].edge];
      auto it = std::lower_bound(set.begin(), set.end(), w[i]);
      if (it == set.end() || *it != w[i]) set.insert(it, w[i]);
    }
  }
  return pl;
}

bool is_consistent(const PartialLabelling& pl) {
  for (std::size_t e = 0; e < pl.forward.size(); ++e) {
    const auto& fw = pl.forward[e];
    const auto& bw = pl.backward[e];
    if (fw.size() > 1 || bw.size() > 1) return false;
    if (!fw.empty() && !bw.empty() && fw[0] != bw[0].inverse()) return false;
  }
  return true;
}

bool fulfils(const AbstractLabelledComplex& y, const std::vector<std::uint32_t>& iota, const TriangularPresentation& p) {
  if (iota.size() != y.n) {
    fail(ErrorCode::InvalidArgument, "indexing map has " + std::to_string(iota.size()) + " entries for " + std::to_string(y.n) + " slots");
  }
  std::vector<std::uint32_t> sorted = iota;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    fail(ErrorCode::InvalidArgument, "indexing map is not injective");
  }
  std::vector<Word> words;
  for (std::uint32_t i : iota) {
    if (i >= p.relators.size()) fail(ErrorCode::InvalidArgument, "indexing map names missing relator " + std::to_string(i));
    words.push_back(p.relators[i]);
  }
  return is_consistent(partial_label(y, words));
}

std::vector<std::vector<std::uint32_t>> find_fulfilling_subtuples(const AbstractLabelledComplex& y,
                                                                  const TriangularPresentation& p, std::size_t limit) {
  const SlotTable table = make_slot_table(y, 3);
  std::vector<std::vector<std::uint32_t>> hits;
  std::vector<std::uint32_t> iota;
  std::vector<bool> used(p.relators.size(), false);
  EdgeState state(table.edges);
  auto search = [&](auto&& self, std::uint32_t j) -> void {
    if (hits.size() >= limit) return;
    if (j == y.n) {
      hits.push_back(iota);
      return;
    }
    for (std::uint32_t r = 0; r < p.relators.size() && hits.size() < limit; ++r) {
      if (used[r]) continue;
      const std::size_t mark = state.mark();
      if (state.write_word(table, j, p.relators[r])) {
        used[r] = true;
        iota.push_back(r);
        self(self, j + 1);
        iota.pop_back();
        used[r] = false;
      }
      state.undo(mark);
    }
  };
  search(search, 0);
  return hits;
}

FulfillmentProbe exact_probabilities(const AbstractLabelledComplex& y, std::uint32_t m, ExactCaps caps, unsigned workers) {
  if (m == 0) fail(ErrorCode::InvalidArgument, "alphabet size m must be at least 1");
  if (m > caps.max_m || y.n > caps.max_n) {
    fail(ErrorCode::CapExceeded, "exact fulfilment needs m <= " + std::to_string(caps.max_m) + " and n <= " +
                                     std::to_string(caps.max_n) + " (got m=" + std::to_string(m) + ", n=" + std::to_string(y.n) +
                                     "); raise --max-m to override, cost grows like ((2m-1)^3+1)^n");
  }
  const SlotTable table = make_slot_table(y, 3);

  if (m > 127) fail(ErrorCode::CapExceeded, "exact fulfilment supports m <= 127");
  // Largest level count is support^n; keep it inside the 128-bit accumulator.
  const BigInt support_big = count_cyc_reduced_len3(m);
  if (boost::multiprecision::pow(support_big, y.n) >= (BigInt(1) << 127)) {
    fail(ErrorCode::CapExceeded, "exact fulfilment count would overflow 128 bits");
  }
  LevelCounter counter(table, m);
  const std::vector<Count> counts = counter.run(workers);

  FulfillmentProbe probe;
  probe.m = m;
  probe.support = count_cyc_reduced_len3(m);
  BigInt denominator = 1;
  for (std::uint32_t i = 0; i <= y.n; ++i) {
    probe.consistent.push_back(to_big(counts[i]));
    probe.probability.emplace_back(Rational(probe.consistent.back(), denominator));
    denominator *= probe.support;
  }
  return probe;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> lemma_bound(const AbstractLabelledComplex& y) {
  require_all_edges_in_faces(y.base);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t i = 1; i <= y.n; ++i) out.emplace_back(i, 0);
  for (std::uint32_t f = 0; f < y.base.face_count(); ++f) {
    auto& entry = out[y.pi[f] - 1].second;
    entry = std::max(entry, delta_face(y.base, y.pi, f));
  }
  return out;
}

std::vector<LevelCheck> check_ratio_bounds(const AbstractLabelledComplex& y, const FulfillmentProbe& probe) {
  const auto deltas = lemma_bound(y);
  const BigInt base = 2 * BigInt(probe.m) - 1;
  std::vector<LevelCheck> out;
  for (const auto& [level, delta] : deltas) {
    LevelCheck c;
    c.level = level;
    c.delta = delta;
    const Rational& prev = probe.probability.at(level - 1);
    c.ratio = prev == 0 ? Rational(0) : Rational(probe.probability.at(level) / prev);
    c.bound = Rational(BigInt(1), boost::multiprecision::pow(base, delta));
    c.holds = c.ratio <= c.bound;
    out.push_back(c);
  }
  return out;
}

bool product_bound_holds(const AbstractLabelledComplex& y, const FulfillmentProbe& probe) {
  Rational product = 1;
  for (const LevelCheck& c : check_ratio_bounds(y, probe)) product *= c.bound;
  return product >= probe.probability.back();
}

Rational final_bound_exponent(const AbstractLabelledComplex& y, const Rational& density) {
  const std::uint32_t faces = y.base.face_count();
  if (faces == 0) fail(ErrorCode::InvalidArgument, "complex has no faces");
  const Rational red_minus_cancel = Rational(BigInt(red(y))) - Rational(BigInt(cancel(y.base)));
  const Rational per_face = (Rational(3 * faces) + 2 * red_minus_cancel) / Rational(faces);
  return (per_face - 3 * (1 - 2 * density)) / 2;
}

double final_probability_bound(const AbstractLabelledComplex& y, std::uint32_t m, const Rational& density) {
  if (m == 0) fail(ErrorCode::InvalidArgument, "alphabet size m must be at least 1");
  return std::exp(std::log(2.0 * m - 1.0) * to_double(final_bound_exponent(y, density)));
}

std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1 + z2 / n;
  const double center = (phat + z2 / (2 * n)) / denom;
  const double half = z / denom * std::sqrt(phat * (1 - phat) / n + z2 / (4 * n * n));
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

MonteCarloEstimate montecarlo_fulfillment(const AbstractLabelledComplex& y, std::uint32_t m, std::uint64_t trials,
                                          std::uint64_t seed, unsigned workers) {
  if (trials == 0) fail(ErrorCode::InvalidArgument, "need at least one trial");
  if (m == 0) fail(ErrorCode::InvalidArgument, "alphabet size m must be at least 1");
  const SlotTable table = make_slot_table(y, 3);
  workers = std::max(1U, workers);

  auto run = [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<std::uint64_t> hits(y.n, 0);
    EdgeState state(table.edges);
    for (std::uint64_t t = begin; t < end; ++t) {
      RandomSource rng(derive_seed(seed, t));
      std::vector<Word> words;
      for (std::uint32_t j = 0; j < y.n; ++j) words.push_back(sample_cyc_reduced_len3(m, rng));
      for (std::uint32_t j = 0; j < y.n; ++j) {
        if (!state.write_word(table, j, words[j])) break;
        ++hits[j];
      }
      state.undo(0);
    }
    return hits;
  };

  std::vector<std::uint64_t> hits(y.n, 0);
  if (workers == 1) {
    hits = run(0, trials);
  } else {
    std::vector<std::vector<std::uint64_t>> partial(workers);
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = trials * w / workers;
      const std::uint64_t end = trials * (w + 1) / workers;
      threads.emplace_back([&, w, begin, end] { partial[w] = run(begin, end); });
    }
    for (auto& t : threads) t.join();
    for (const auto& part : partial) {
      for (std::size_t i = 0; i < hits.size(); ++i) hits[i] += part[i];
    }
  }

  MonteCarloEstimate est;
  est.trials = trials;
  est.seed = seed;
  est.successes = hits;
  const std::uint64_t full = hits.empty() ? trials : hits.back();
  est.estimate = static_cast<double>(full) / static_cast<double>(trials);
  // z for a two-sided 99% interval
  std::tie(est.lower, est.upper) = wilson_interval(full, trials, 2.5758293035489004);
  return est;
}

}  // namespace trigroup
