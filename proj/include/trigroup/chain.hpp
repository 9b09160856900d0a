#pragma once

#include <cstdint>
#include <vector>

#include "trigroup/complex.hpp"
#include "trigroup/rng.hpp"

namespace trigroup {

struct RandomComplexConfig {
  std::uint32_t max_faces = 6;
  std::uint32_t min_length = 3;  // boundary lengths drawn uniformly from [min_length, max_length]
  std::uint32_t max_length = 3;
};

/// Random abstract labelled complex: a face count in [1, max_faces], every
/// boundary slot glued to one of E edge classes (E uniform, every class
/// used) with a random orientation, vertices from the finest gluing, and a
/// random surjective labelling onto [1, n] with n uniform in [1, faces].
AbstractLabelledComplex random_labelled_complex(RandomSource& rng, const RandomComplexConfig& config = {});

struct ChainSample {
  std::uint64_t index = 0;
  std::uint32_t faces = 0;
  std::uint64_t cancel = 0;
  std::uint64_t red = 0;
  std::uint64_t delta_sum = 0;
};

struct ChainReport {
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t violations = 0;
  std::uint64_t tight = 0;  // red + sum delta == cancel
  std::vector<ChainSample> failures;  // at most 20, in sample order
};

/// red(Y) + sum_f delta(f) >= cancel(Y) on `samples` random complexes.
/// Sample i uses the stream derive_seed(seed, i).
ChainReport chain_check(std::uint64_t samples, std::uint64_t seed, const RandomComplexConfig& config = {},
                        unsigned workers = 1);

}  // namespace trigroup
