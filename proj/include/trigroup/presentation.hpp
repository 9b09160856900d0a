#pragma once

#include <cstdint>
#include <vector>

#include "trigroup/exact.hpp"
#include "trigroup/words.hpp"

namespace trigroup {

/// A random triangular presentation: m generators and an ordered tuple of
/// cyclically reduced length-3 relators. Tuple order is meaningful and
/// repetitions are kept.
struct TriangularPresentation {
  std::uint32_t m = 0;
  Rational density;
  std::uint64_t seed = 0;
  std::vector<Word> relators;
};

/// floor((2m-1)^(3d)), computed exactly as the largest n with
/// n^q <= (2m-1)^(3p) where d = p/q.
std::uint64_t relator_count(std::uint32_t m, const Rational& density);

TriangularPresentation sample_presentation(std::uint32_t m, const Rational& density, std::uint64_t seed);

/// Builds a presentation from explicit relators and checks that each one is
/// a cyclically reduced word of length 3 over the alphabet.
TriangularPresentation make_presentation(std::uint32_t m, const Rational& density, std::uint64_t seed,
                                         std::vector<Word> relators);

/// Least word among all rotations of w and of w^{-1}.
Word symmetry_class_representative(const Word& w);

/// False when two relator positions hold words that agree up to cyclic
/// rotation and/or inversion.
bool relators_distinct_up_to_symmetry(const TriangularPresentation& p);

/// True when some relator is x^3 for a single letter x.
bool has_proper_power(const TriangularPresentation& p);

}  // namespace trigroup
