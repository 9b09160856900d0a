#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "trigroup/rng.hpp"

namespace trigroup {

/// A generator or its inverse. Generators are numbered from 0.
struct Letter {
  std::uint32_t generator = 0;
  bool inverted = false;

  constexpr Letter inverse() const noexcept { return {generator, !inverted}; }

  /// Dense code in [0, 2m): generator g maps to 2g, its inverse to 2g+1.
  /// This is also the order used for lexicographic comparison.
  constexpr std::uint32_t code() const noexcept { return 2 * generator + (inverted ? 1 : 0); }
  static constexpr Letter from_code(std::uint32_t c) noexcept { return {c / 2, (c & 1U) != 0}; }

  /// Signed 1-based index: +(g+1) or -(g+1). Used by the JSON encoding.
  constexpr std::int64_t signed_index() const noexcept {
    return inverted ? -static_cast<std::int64_t>(generator) - 1 : static_cast<std::int64_t>(generator) + 1;
  }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter a, Letter b) noexcept { return a.code() <=> b.code(); }
};

constexpr bool are_inverse(Letter a, Letter b) noexcept {
  return a.generator == b.generator && a.inverted != b.inverted;
}

/// A word over the alphabet of `m` generators and their inverses.
///
/// Equality is sequence equality; cyclic conjugacy is never implied.
class Word {
 public:
  Word() = default;
  Word(std::uint32_t m, std::vector<Letter> letters);

  /// Parses a-z as generators and A-Z as inverses (requires m <= 26).
  static Word parse(std::uint32_t m, std::string_view text);
  /// Parses signed 1-based generator indices.
  static Word from_signed(std::uint32_t m, const std::vector<std::int64_t>& indices);

  std::uint32_t alphabet_size() const noexcept { return m_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;
  /// Cyclic rotation: the result starts at position `k` of this word.
  Word rotated(std::size_t k) const;

  bool is_reduced() const noexcept;
  bool is_cyclically_reduced() const noexcept;

  std::string to_string() const;
  std::vector<std::int64_t> to_signed() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::uint32_t m_ = 0;
  std::vector<Letter> letters_;
};

Word free_reduce(const Word& w);

/// Cyclically reduced representative of the conjugacy class of `w`,
/// obtained by stripping inverse pairs from both ends of free_reduce(w).
Word cyclic_reduce(const Word& w);

/// (2m-1)^3 + 1, the number of cyclically reduced words of length 3.
std::uint64_t count_cyc_reduced_len3(std::uint32_t m);

inline constexpr std::uint32_t kDefaultEnumerationCap = 6;

/// All cyclically reduced words of length 3 in lexicographic letter order.
std::vector<Word> enumerate_cyc_reduced_len3(std::uint32_t m, std::uint32_t cap = kDefaultEnumerationCap);

/// Uniform cyclically reduced word of length 3.
Word sample_cyc_reduced_len3(std::uint32_t m, RandomSource& rng);

}  // namespace trigroup
