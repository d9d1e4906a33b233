#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lucaspi/big_real.hpp"
#include "lucaspi/graycode.hpp"
#include "lucaspi/parallel.hpp"

namespace lucaspi {

/// One row of a convergence table. abs_error is measured against
/// reference_pi at the record's precision.
struct ApproxRecord {
  int n;
  std::optional<int> m;
  std::optional<std::uint64_t> h;
  BigReal approximant;
  BigReal abs_error;
  GrayWord word;

  // floor(-log10(abs_error / pi)); capped at the precision in digits when
  // the error is zero.
  int digits_correct() const;
};

/// 2^{n+1} sqrt w(1 0^{n-1}) = 2^{n+2} sin(pi / 2^{n+2}). n >= 1.
ApproxRecord classic_term(int n, int precision_bits);

/// (2^{n+1} / (2h+1)) sqrt w(1 0...0 g_{m,h+1}), depth n.
/// Requires m >= 1, 0 <= h <= 2^m - 1, n > m + 1.
ApproxRecord gray_term(int m, std::uint64_t h, int n, int precision_bits);

/// e(n) = pi / 2^{n+1} - sqrt w(1 0^{n-1}). n >= 1.
BigReal error_sequence(int n, int precision_bits);

/// (2^n / (2h+1)) atan sqrt(1 / (w/2 - 1)^2 - 1), w = w(g_{n-1, 2^{n-1} - h})
/// evaluated as a radical. Equals pi for every n >= 2, 0 <= h <= 2^{n-2} - 1.
BigReal exact_pi(int n, std::uint64_t h, int precision_bits);

enum class PhiVariant {
  standard,  // 2^{(n-1)/2}: converges to the golden ratio
  shifted,   // 2^{n/2-1}: converges to sqrt(10)/4 + 1/2
};

/// 2^{e} w(1 0^{n-3} 1 1)^{1/4} / sqrt(pi) + 1/2 with the exponent chosen by
/// the variant. n >= 4.
BigReal phi_asymptotic(int n, int precision_bits, PhiVariant variant = PhiVariant::standard);

/// (2^{n/2-1} / sqrt pi) sqrt(atan sqrt(1 / (w/2 - 1)^2 - 1)) + 1/2 with
/// w = w(g_{n-1, 2^{n-1} - 2}). Equals the golden ratio for every n >= 4.
BigReal phi_exact(int n, int precision_bits);

enum class Method { classic, gray };

struct TableSpec {
  Method method = Method::classic;
  int m = 0;
  std::uint64_t h = 0;
  int n_first = 1;
  int n_last = 0;  // empty when n_last < n_first
};

/// One record per n in [n_first, n_last], in order of n.
std::vector<ApproxRecord> convergence_table(const TableSpec& spec, int precision_bits,
                                            Execution exec = Execution::parallel);

}  // namespace lucaspi
