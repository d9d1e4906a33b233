#pragma once

#include <cstddef>
#include <cstdint>

#include "lucaspi/big_real.hpp"
#include "lucaspi/graycode.hpp"
#include "lucaspi/numerics.hpp"

namespace lucaspi {

/// 2 cos(angle * pi): the trigonometric value of a nested radical.
struct ClosedForm {
  PiRational angle;

  BigReal value(int precision_bits) const;
};

/// sqrt(2 ± sqrt(2 ± ... ± sqrt 2)) with one sign per bit of the word and
/// word.size() + 1 occurrences of 2. The empty word is sqrt 2.
///
/// Evaluated innermost-out at precision_bits + 2*size + 32 so that the
/// "2 - t" steps with t close to 2 keep the absolute error of the result
/// below 2^(1 - precision_bits). Throws ComputationError naming the depth
/// if a radicand is negative.
BigReal evaluate(const GrayWord& word, int precision_bits);

/// Angle (2 rank(word) - 1) / 2^(size + 2); valid for word.size() <= 61.
ClosedForm closed_form(const GrayWord& word);

class NestedRadical {
 public:
  explicit NestedRadical(GrayWord word) : word_(std::move(word)) {}

  const GrayWord& word() const { return word_; }
  std::size_t sign_count() const { return word_.size(); }
  BigReal evaluate(int precision_bits) const { return lucaspi::evaluate(word_, precision_bits); }
  ClosedForm closed_form() const { return lucaspi::closed_form(word_); }

 private:
  GrayWord word_;
};

// [1][0 x zeros][suffix], or [0 x zeros][suffix] without the leading one.
GrayWord compose_word(bool prefix_one, std::size_t zeros, const GrayWord& suffix);

/// The depth-n word 1 0...0 g_{m,index} (n - m - 1 zeros), n >= m + 1.
GrayWord prefixed_gray_word(int n, int m, std::uint64_t index);

/// |LHS - RHS| of the three-term identity taken literally:
///   2 r(g_{m,h+2}) = r(g_{m,h+1}) sqrt w(0^{n-1}) + r(g_{m,2^m-h}) sqrt w(1 0^{n-2})
/// with r(g) = sqrt w(1 0...0 g) of depth n. All four radicals are
/// evaluated directly. Requires n > m+1, 0 <= h <= 2^m - 2.
BigReal verify_three_term(int n, int m, std::uint64_t h, int precision_bits);

/// Same identity with the third radical replaced by sqrt w(g_{n,h+1}) =
/// 2 cos((2h+1) pi / 2^{n+2}), which is what the angle-addition step behind
/// it produces. Same domain as verify_three_term.
BigReal verify_three_term_derived(int n, int m, std::uint64_t h, int precision_bits);

}  // namespace lucaspi
