#pragma once

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

namespace lucaspi {

/// Arbitrary-precision binary floating point number backed by MPFR.
///
/// All arithmetic (+, -, *, /, sqrt, atan, sin, cos, acos) is correctly
/// rounded to nearest at the precision of the result. A binary operation
/// yields the smaller of its operand precisions; compound assignment keeps
/// the precision of the left operand. Use with_precision() to raise it.
class BigReal {
 public:
  explicit BigReal(int precision_bits);
  BigReal(long value, int precision_bits);

  static BigReal from_double(double value, int precision_bits);
  static BigReal from_string(std::string_view decimal, int precision_bits);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  int precision_bits() const { return static_cast<int>(mpfr_get_prec(value_)); }

  // Copy rounded (or exactly widened) to the given precision.
  BigReal with_precision(int precision_bits) const;

  mpfr_ptr raw() { return value_; }
  mpfr_srcptr raw() const { return value_; }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_nan() const { return mpfr_nan_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  // e such that 2^(e-1) <= |x| < 2^e; very negative for zero.
  long exponent2() const;

  // Fixed notation with the given number of digits after the point, rounded.
  std::string to_fixed(int decimals) const;
  // Scientific notation with the given number of significant digits.
  std::string to_scientific(int significant) const;
  // Shortest of fixed/scientific with the given number of significant digits.
  std::string to_decimal(int significant) const;

  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);
  BigReal& operator+=(long rhs);
  BigReal& operator-=(long rhs);
  BigReal& operator*=(long rhs);
  BigReal& operator/=(long rhs);

 private:
  mpfr_t value_;
};

BigReal operator+(const BigReal& a, const BigReal& b);
BigReal operator-(const BigReal& a, const BigReal& b);
BigReal operator*(const BigReal& a, const BigReal& b);
BigReal operator/(const BigReal& a, const BigReal& b);
BigReal operator-(const BigReal& a);

BigReal operator+(const BigReal& a, long b);
BigReal operator-(const BigReal& a, long b);
BigReal operator*(const BigReal& a, long b);
BigReal operator/(const BigReal& a, long b);
BigReal operator+(long a, const BigReal& b);
BigReal operator-(long a, const BigReal& b);
BigReal operator*(long a, const BigReal& b);
BigReal operator/(long a, const BigReal& b);

bool operator==(const BigReal& a, const BigReal& b);
std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);
bool operator==(const BigReal& a, long b);
std::partial_ordering operator<=>(const BigReal& a, long b);

BigReal sqrt(const BigReal& x);
BigReal abs(const BigReal& x);
BigReal square(const BigReal& x);
// x * 2^e, exact.
BigReal ldexp(const BigReal& x, long e);
BigReal atan(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal acos(const BigReal& x);
// 2^e as a BigReal at the given precision, exact.
BigReal pow2(long e, int precision_bits);

}  // namespace lucaspi
