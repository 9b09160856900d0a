#include "trigroup/chain.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "trigroup/error.hpp"

namespace trigroup {

namespace {

// Random surjection of `slots` items onto `classes` values: a random set of
// `classes` items takes each value once, the rest are uniform.
std::vector<std::uint32_t> random_surjection(RandomSource& rng, std::uint32_t slots, std::uint32_t classes) {
  std::vector<std::uint32_t> order(slots);
  std::iota(order.begin(), order.end(), 0U);
  for (std::size_t i = slots; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  std::vector<std::uint32_t> out(slots);
  for (std::uint32_t i = 0; i < slots; ++i) {
    out[order[i]] = i < classes ? i : static_cast<std::uint32_t>(rng.below(classes));
  }
  return out;
}

}  // namespace

AbstractLabelledComplex random_labelled_complex(RandomSource& rng, const RandomComplexConfig& config) {
  if (config.max_faces == 0 || config.min_length == 0 || config.min_length > config.max_length) {
    fail(ErrorCode::InvalidArgument, "random complex needs max_faces >= 1 and 1 <= min_length <= max_length");
  }
  const std::uint32_t faces = 1 + static_cast<std::uint32_t>(rng.below(config.max_faces));
  std::vector<std::uint32_t> lengths(faces);
  for (auto& l : lengths) l = config.min_length + static_cast<std::uint32_t>(rng.below(config.max_length - config.min_length + 1));
  const std::uint32_t slots = std::accumulate(lengths.begin(), lengths.end(), 0U);
  const std::uint32_t edges = 1 + static_cast<std::uint32_t>(rng.below(slots));
  const std::vector<std::uint32_t> edge_of = random_surjection(rng, slots, edges);

  std::vector<Face> boundary(faces);
  std::size_t slot = 0;
  for (std::uint32_t f = 0; f < faces; ++f) {
    for (std::uint32_t i = 0; i < lengths[f]; ++i, ++slot) {
      boundary[f].boundary.push_back({edge_of[slot], rng.below(2) == 1});
    }
  }
  const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.below(faces));
  std::vector<std::uint32_t> pi = random_surjection(rng, faces, n);
  for (auto& x : pi) x += 1;
  return AbstractLabelledComplex(TwoComplex::from_gluing(edges, std::move(boundary)), n, std::move(pi));
}

ChainReport chain_check(std::uint64_t samples, std::uint64_t seed, const RandomComplexConfig& config, unsigned workers) {
  constexpr std::size_t kKeptFailures = 20;
  workers = std::max(1U, workers);
  struct Part {
    std::uint64_t violations = 0;
    std::uint64_t tight = 0;
    std::vector<ChainSample> failures;
  };
  std::vector<Part> parts(workers);
  auto run = [&](unsigned w) {
    const std::uint64_t begin = samples * w / workers;
    const std::uint64_t end = samples * (w + 1) / workers;
    for (std::uint64_t i = begin; i < end; ++i) {
      RandomSource rng(derive_seed(seed, i));
      const AbstractLabelledComplex y = random_labelled_complex(rng, config);
      ChainSample s;
      s.index = i;
      s.faces = y.base.face_count();
      s.cancel = cancel(y.base);
      s.red = red(y);
      for (std::uint32_t f = 0; f < s.faces; ++f) s.delta_sum += delta_face(y, f);
      const std::uint64_t left = s.red + s.delta_sum;
      if (left < s.cancel) {
        ++parts[w].violations;
        if (parts[w].failures.size() < kKeptFailures) parts[w].failures.push_back(s);
      } else if (left == s.cancel) {
        ++parts[w].tight;
      }
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }
  ChainReport rep;
  rep.samples = samples;
  rep.seed = seed;
  for (const Part& p : parts) {
    rep.violations += p.violations;
    rep.tight += p.tight;
    for (const ChainSample& s : p.failures) {
      if (rep.failures.size() < kKeptFailures) rep.failures.push_back(s);
    }
  }
  return rep;
}

}  // namespace trigroup
