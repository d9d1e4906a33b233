#include "lucaspi/graycode.hpp"

#include <algorithm>

#include "lucaspi/errors.hpp"

namespace lucaspi {

GrayWord::GrayWord(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_) {
    if (b > 1) throw ArgumentError("GrayWord bits must be 0 or 1");
  }
}

GrayWord GrayWord::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw ArgumentError("word must match [01]*, got '" + std::string(text) + "'");
    }
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return GrayWord(std::move(bits));
}

GrayWord GrayWord::zeros(std::size_t length) {
  return GrayWord(std::vector<std::uint8_t>(length, 0));
}

std::string GrayWord::to_string() const {
  std::string out;
  out.reserve(bits_.size());
  for (auto b : bits_) out.push_back(static_cast<char>('0' + b));
  return out;
}

GrayWord GrayWord::operator+(const GrayWord& suffix) const {
  std::vector<std::uint8_t> bits = bits_;
  bits.insert(bits.end(), suffix.bits_.begin(), suffix.bits_.end());
  return GrayWord(std::move(bits));
}

SignSequence::SignSequence(std::vector<int> signs) : signs_(std::move(signs)) {
  for (int s : signs_) {
    if (s != 1 && s != -1) throw ArgumentError("signs must be +1 or -1");
  }
}

std::vector<GrayWord> generate(int order) {
  if (order < 1 || order > kMaxGenerateOrder) {
    throw ArgumentError("Gray code order must be in [1, 62], got " + std::to_string(order));
  }
  std::vector<std::vector<std::uint8_t>> code{{0}, {1}};
  for (int m = 2; m <= order; ++m) {
    std::vector<std::vector<std::uint8_t>> next;
    next.reserve(code.size() * 2);
    for (const auto& w : code) {
      std::vector<std::uint8_t> bits{0};
      bits.insert(bits.end(), w.begin(), w.end());
      next.push_back(std::move(bits));
    }
    for (auto it = code.rbegin(); it != code.rend(); ++it) {
      std::vector<std::uint8_t> bits{1};
      bits.insert(bits.end(), it->begin(), it->end());
      next.push_back(std::move(bits));
    }
    code = std::move(next);
  }
  std::vector<GrayWord> out;
  out.reserve(code.size());
  for (auto& w : code) out.emplace_back(std::move(w));
  return out;
}

GrayWord word_at(int order, std::uint64_t index) {
  if (order < 1 || order > kMaxRankLength) {
    throw ArgumentError("Gray code order must be in [1, 63], got " + std::to_string(order));
  }
  const std::uint64_t count = std::uint64_t{1} << order;
  if (index < 1 || index > count) {
    throw ArgumentError("Gray index " + std::to_string(index) + " outside [1, 2^" +
                        std::to_string(order) + "]");
  }
  const std::uint64_t k = index - 1;
  const std::uint64_t gray = k ^ (k >> 1);
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(order));
  for (int i = 0; i < order; ++i) {
    bits[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((gray >> (order - 1 - i)) & 1U);
  }
  return GrayWord(std::move(bits));
}

std::uint64_t rank(const GrayWord& word) {
  if (word.size() > static_cast<std::size_t>(kMaxRankLength)) {
    throw ArgumentError("rank is defined for words of length <= 63, got " +
                        std::to_string(word.size()));
  }
  std::uint64_t binary = 0;
  std::uint8_t running = 0;
  for (auto b : word.bits()) {
    running ^= b;
    binary = (binary << 1) | running;
  }
  return binary + 1;
}

std::uint64_t moreno_index(const SignSequence& signs) {
  const std::size_t k = signs.size();
  if (k < 1 || k > 62) {
    throw ArgumentError("moreno_index needs 1 <= k <= 62, got " + std::to_string(k));
  }
  std::int64_t sum = 0;
  std::int64_t product = 1;
  for (std::size_t j = 1; j <= k; ++j) {
    product *= signs[j - 1];
    sum += (std::int64_t{1} << (k - j)) * product;
  }
  // 2^k - sum + 1 lies in [2, 2^(k+1)]; modular uint64 arithmetic is exact here.
  const std::uint64_t twice = (std::uint64_t{1} << k) + 1 - static_cast<std::uint64_t>(sum);
  return twice / 2;
}

GrayWord word_from_signs(const SignSequence& signs) {
  std::vector<std::uint8_t> bits;
  bits.reserve(signs.size());
  for (int s : signs.signs()) bits.push_back(s == 1 ? 0 : 1);
  return GrayWord(std::move(bits));
}

SignSequence signs_from_word(const GrayWord& word) {
  std::vector<int> signs;
  signs.reserve(word.size());
  for (auto b : word.bits()) signs.push_back(b == 0 ? 1 : -1);
  return SignSequence(std::move(signs));
}

std::size_t hamming_distance(const GrayWord& a, const GrayWord& b) {
  if (a.size() != b.size()) throw ArgumentError("hamming_distance needs equal lengths");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i] ? 1 : 0;
  return d;
}

}  // namespace lucaspi
