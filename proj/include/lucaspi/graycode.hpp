#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lucaspi {

/// Fixed-length bit string. The leftmost bit is the outermost sign of the
/// nested radical it indexes (0 = plus, 1 = minus).
class GrayWord {
 public:
  GrayWord() = default;
  explicit GrayWord(std::vector<std::uint8_t> bits);

  // Parses a string over {0,1}; the empty string is the empty word.
  static GrayWord parse(std::string_view text);
  static GrayWord zeros(std::size_t length);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  std::span<const std::uint8_t> bits() const { return bits_; }
  std::string to_string() const;

  GrayWord operator+(const GrayWord& suffix) const;

  friend bool operator==(const GrayWord&, const GrayWord&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Ordered signs over {+1, -1}; signs[0] is b_k, the outermost sign.
class SignSequence {
 public:
  explicit SignSequence(std::vector<int> signs);

  std::size_t size() const { return signs_.size(); }
  int operator[](std::size_t i) const { return signs_[i]; }
  std::span<const int> signs() const { return signs_; }

  friend bool operator==(const SignSequence&, const SignSequence&) = default;

 private:
  std::vector<int> signs_;
};

inline constexpr int kMaxGenerateOrder = 62;
inline constexpr int kMaxRankLength = 63;

/// Binary-reflected Gray code of the given order, built by the reflection
/// step: prefix 0 to the previous code, then 1 to it in reverse.
std::vector<GrayWord> generate(int order);

/// g_{order,index} with 1-based index, without materializing the code.
GrayWord word_at(int order, std::uint64_t index);

/// 1-based position of the word in the reflected code of its length.
/// The empty word has rank 1.
std::uint64_t rank(const GrayWord& word);

/// j(b_k, ..., b_1) = (2^k - sum_{j=1..k} 2^{k-j} prod_{i<j} b_{k-i} + 1) / 2,
/// evaluated literally in exact integer arithmetic (k <= 62).
std::uint64_t moreno_index(const SignSequence& signs);

// +1 -> 0, -1 -> 1, position by position.
GrayWord word_from_signs(const SignSequence& signs);
SignSequence signs_from_word(const GrayWord& word);

std::size_t hamming_distance(const GrayWord& a, const GrayWord& b);

}  // namespace lucaspi
