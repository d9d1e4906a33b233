#include "lucaspi/radicals.hpp"

#include <string>

#include "lucaspi/errors.hpp"

namespace lucaspi {
namespace {

void check_three_term_domain(int n, int m, std::uint64_t h) {
  if (m < 1 || m > kMaxRankLength || n <= m + 1 || n > kMaxRankLength) {
    throw ArgumentError("three-term identity needs 1 <= m and m + 1 < n <= 63, got n=" +
                        std::to_string(n) + " m=" + std::to_string(m));
  }
  const std::uint64_t h_max = (std::uint64_t{1} << m) - 2;
  if (h > h_max) {
    throw ArgumentError("three-term identity needs 0 <= h <= 2^m - 2 = " +
                        std::to_string(h_max) + ", got h=" + std::to_string(h));
  }
}

}  // namespace

BigReal ClosedForm::value(int precision_bits) const {
  return 2 * cos_pi(angle, precision_bits);
}

BigReal evaluate(const GrayWord& word, int precision_bits) {
  require_precision(precision_bits);
  const std::size_t depth = word.size();
  const int work = precision_bits + static_cast<int>(2 * depth) + kGuardBits;
  BigReal t = sqrt(BigReal(2, work));
  BigReal radicand(work);
  for (std::size_t i = depth; i-- > 0;) {
    if (word[i] == 0) {
      radicand = 2 + t;
    } else {
      radicand = 2 - t;
    }
    if (radicand.sign() < 0) {
      throw ComputationError("negative radicand at depth " + std::to_string(i) +
                             " of word " + word.to_string());
    }
    t = sqrt(radicand);
  }
  return t.with_precision(precision_bits);
}

ClosedForm closed_form(const GrayWord& word) {
  if (word.size() + 2 > static_cast<std::size_t>(PiRational::kMaxDenExp)) {
    throw ArgumentError("closed_form supports words of length <= 61, got " +
                        std::to_string(word.size()));
  }
  const std::uint64_t j = rank(word);
  return ClosedForm{PiRational(2 * j - 1, static_cast<int>(word.size()) + 2)};
}

GrayWord compose_word(bool prefix_one, std::size_t zeros, const GrayWord& suffix) {
  GrayWord head = GrayWord::zeros(zeros);
  if (prefix_one) head = GrayWord::parse("1") + head;
  return head + suffix;
}

GrayWord prefixed_gray_word(int n, int m, std::uint64_t index) {
  if (n < m + 1) {
    throw ArgumentError("prefixed_gray_word needs n >= m + 1, got n=" + std::to_string(n) +
                        " m=" + std::to_string(m));
  }
  return compose_word(true, static_cast<std::size_t>(n - m - 1), word_at(m, index));
}

BigReal verify_three_term(int n, int m, std::uint64_t h, int precision_bits) {
  check_three_term_domain(n, m, h);
  const int work = precision_bits + kGuardBits;
  const std::uint64_t half = std::uint64_t{1} << m;
  const BigReal lhs = 2 * evaluate(prefixed_gray_word(n, m, h + 2), work);
  const BigReal rhs =
      evaluate(prefixed_gray_word(n, m, h + 1), work) *
          evaluate(GrayWord::zeros(static_cast<std::size_t>(n - 1)), work) +
      evaluate(prefixed_gray_word(n, m, half - h), work) *
          evaluate(word_at(n - 1, std::uint64_t{1} << (n - 1)), work);
  return abs(lhs - rhs).with_precision(precision_bits);
}

BigReal verify_three_term_derived(int n, int m, std::uint64_t h, int precision_bits) {
  check_three_term_domain(n, m, h);
  const int work = precision_bits + kGuardBits;
  const BigReal lhs = 2 * evaluate(prefixed_gray_word(n, m, h + 2), work);
  const BigReal rhs =
      evaluate(prefixed_gray_word(n, m, h + 1), work) *
          evaluate(GrayWord::zeros(static_cast<std::size_t>(n - 1)), work) +
      evaluate(word_at(n, h + 1), work) *
          evaluate(word_at(n - 1, std::uint64_t{1} << (n - 1)), work);
  return abs(lhs - rhs).with_precision(precision_bits);
}

}  // namespace lucaspi
