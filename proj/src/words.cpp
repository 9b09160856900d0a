#include "trigroup/words.hpp"

#include <limits>

#include "trigroup/error.hpp"

namespace trigroup {

Word::Word(std::uint32_t m, std::vector<Letter> letters) : m_(m), letters_(std::move(letters)) {
  for (const Letter& x : letters_) {
    if (x.generator >= m_) {
      fail(ErrorCode::InvalidArgument,
           "letter generator " + std::to_string(x.generator) + " outside alphabet of size " + std::to_string(m_));
    }
  }
}

Word Word::parse(std::uint32_t m, std::string_view text) {
  if (m > 26) fail(ErrorCode::InvalidArgument, "letter strings need m <= 26; use signed-integer arrays");
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char c : text) {
    if (c >= 'a' && c <= 'z') {
      letters.push_back({static_cast<std::uint32_t>(c - 'a'), false});
    } else if (c >= 'A' && c <= 'Z') {
      letters.push_back({static_cast<std::uint32_t>(c - 'A'), true});
    } else {
      fail(ErrorCode::Parse, std::string("invalid letter '") + c + "' in word \"" + std::string(text) + "\"");
    }
  }
  return Word(m, std::move(letters));
}

Word Word::from_signed(std::uint32_t m, const std::vector<std::int64_t>& indices) {
  std::vector<Letter> letters;
  letters.reserve(indices.size());
  for (std::int64_t s : indices) {
    if (s == 0) fail(ErrorCode::Parse, "signed letter index 0 is not allowed");
    const std::int64_t g = (s > 0 ? s : -s) - 1;
    if (g > std::numeric_limits<std::uint32_t>::max()) fail(ErrorCode::Parse, "letter index out of range");
    letters.push_back({static_cast<std::uint32_t>(g), s < 0});
  }
  return Word(m, std::move(letters));
}

Word Word::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (Letter& x : out) x = x.inverse();
  Word w;
  w.m_ = m_;
  w.letters_ = std::move(out);
  return w;
}

Word Word::rotated(std::size_t k) const {
  Word w;
  w.m_ = m_;
  const std::size_t n = letters_.size();
  w.letters_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) w.letters_.push_back(letters_[(i + k) % n]);
  return w;
}

bool Word::is_reduced() const noexcept {
  for (std::size_t i = 1; i < letters_.size(); ++i) {
    if (are_inverse(letters_[i - 1], letters_[i])) return false;
  }
  return true;
}

bool Word::is_cyclically_reduced() const noexcept {
  if (!is_reduced()) return false;
  return letters_.size() < 2 || !are_inverse(letters_.front(), letters_.back());
}

std::string Word::to_string() const {
  std::string s;
  s.reserve(letters_.size());
  for (const Letter& x : letters_) {
    const char base = x.inverted ? 'A' : 'a';
    s.push_back(static_cast<char>(base + x.generator));
  }
  return s;
}

std::vector<std::int64_t> Word::to_signed() const {
  std::vector<std::int64_t> out;
  out.reserve(letters_.size());
  for (const Letter& x : letters_) out.push_back(x.signed_index());
  return out;
}

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const Letter& x : w.letters()) {
    if (!stack.empty() && are_inverse(stack.back(), x)) {
      stack.pop_back();
    } else {
      stack.push_back(x);
    }
  }
  return Word(w.alphabet_size(), std::move(stack));
}

Word cyclic_reduce(const Word& w) {
  const Word r = free_reduce(w);
  const auto& xs = r.letters();
  std::size_t lo = 0;
  std::size_t hi = xs.size();
  while (hi - lo >= 2 && are_inverse(xs[lo], xs[hi - 1])) {
    ++lo;
    --hi;
  }
  return Word(r.alphabet_size(), std::vector<Letter>(xs.begin() + static_cast<std::ptrdiff_t>(lo),
                                                     xs.begin() + static_cast<std::ptrdiff_t>(hi)));
}

std::uint64_t count_cyc_reduced_len3(std::uint32_t m) {
  if (m == 0) fail(ErrorCode::InvalidArgument, "alphabet size m must be at least 1");
  // (2m-1)^3 must fit in 64 bits.
  if (m > 1'300'000) fail(ErrorCode::InvalidArgument, "m too large for a 64-bit count");
  const std::uint64_t b = 2ULL * m - 1;
  return b * b * b + 1;
}

std::vector<Word> enumerate_cyc_reduced_len3(std::uint32_t m, std::uint32_t cap) {
  if (m == 0) fail(ErrorCode::InvalidArgument, "alphabet size m must be at least 1");
  if (m > cap) {
    fail(ErrorCode::CapExceeded, "enumeration of length-3 words at m=" + std::to_string(m) +
                                     " exceeds cap " + std::to_string(cap) + " (raise --max-m to override)");
  }
  const std::uint32_t n = 2 * m;
  std::vector<Word> out;
  out.reserve(count_cyc_reduced_len3(m));
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      for (std::uint32_t c = 0; c < n; ++c) {
        Word w(m, {Letter::from_code(a), Letter::from_code(b), Letter::from_code(c)});
        if (w.is_cyclically_reduced()) out.push_back(std::move(w));
      }
    }
  }
  return out;
}

Word sample_cyc_reduced_len3(std::uint32_t m, RandomSource& rng) {
  if (m == 0) fail(ErrorCode::InvalidArgument, "alphabet size m must be at least 1");
  // Every reduced word has proposal probability 1/(2m(2m-1)^2); rejecting
  // the ones whose ends cancel leaves the uniform law on cyclically reduced words.
  const std::uint64_t n = 2ULL * m;
  for (;;) {
    const Letter x0 = Letter::from_code(static_cast<std::uint32_t>(rng.below(n)));
    auto next_after = [&](Letter prev) {
      // Uniform over the 2m-1 letters other than prev^{-1}.
      std::uint32_t c = static_cast<std::uint32_t>(rng.below(n - 1));
      if (c >= prev.inverse().code()) ++c;
      return Letter::from_code(c);
    };
    const Letter x1 = next_after(x0);
    const Letter x2 = next_after(x1);
    if (are_inverse(x2, x0)) continue;
    return Word(m, {x0, x1, x2});
  }
}

}  // namespace trigroup
