#pragma once

#include <cstdint>
#include <string>

#include "lucaspi/big_real.hpp"

namespace lucaspi {

inline constexpr int kMinPrecisionBits = 64;
inline constexpr int kGuardBits = 32;

// Throws ConfigurationError when precision_bits < kMinPrecisionBits.
void require_precision(int precision_bits);

/// Dyadic multiple of pi: (num / 2^den_exp) * pi with num odd and the angle
/// strictly inside (0, pi).
class PiRational {
 public:
  static constexpr int kMaxDenExp = 63;

  PiRational(std::uint64_t num, int den_exp);

  // Reduces num/den; rejects denominators that are not powers of two.
  static PiRational from_ratio(std::uint64_t num, std::uint64_t den);

  std::uint64_t num() const { return num_; }
  int den_exp() const { return den_exp_; }
  double to_double() const;
  std::string to_string() const;  // "num/2^den_exp"

  friend bool operator==(const PiRational&, const PiRational&) = default;

 private:
  std::uint64_t num_;
  int den_exp_;
};

enum class ArctanFormula {
  machin,   // 16 atan(1/5) - 4 atan(1/239)
  stormer,  // 48 atan(1/18) + 32 atan(1/57) - 20 atan(1/239)
};

// atan(1/k) by its alternating power series, faithfully rounded.
BigReal arctan_inverse(std::uint64_t k, int precision_bits);

// pi from a Machin-type arctangent combination, without memoization.
BigReal arctan_series_pi(ArctanFormula formula, int precision_bits);

/// Reference pi with absolute error below 2^(1 - precision_bits).
/// Computed by the Machin series with kGuardBits extra bits and memoized
/// at the highest precision requested so far (thread-safe).
BigReal reference_pi(int precision_bits);

/// sin(q pi) and cos(q pi) by reduction to [0, pi/4] against reference_pi
/// and a Taylor series evaluated with kGuardBits extra bits.
BigReal sin_pi(const PiRational& q, int precision_bits);
BigReal cos_pi(const PiRational& q, int precision_bits);

// (1 + sqrt 5) / 2.
BigReal reference_phi(int precision_bits);

}  // namespace lucaspi
