#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lucaspi/big_real.hpp"
#include "lucaspi/graycode.hpp"
#include "lucaspi/numerics.hpp"
#include "lucaspi/parallel.hpp"

namespace lucaspi {

/// L_n(x): n-fold iteration of t -> t^2 - 2 from t = x, evaluated with
/// 2n + 32 guard bits. L_0(x) = x.
BigReal eval_L(int n, const BigReal& x, int precision_bits);

/// M^a_n(x): n-fold iteration of t -> 2a t^2 - 1/a from t = x. Requires a > 0.
BigReal eval_M(int n, const BigReal& a, const BigReal& x, int precision_bits);

/// Chebyshev polynomials by three-term recurrence, at the precision of x.
/// Endpoints x = +-1 return the exact values (+-1)^k and (+-1)^k (k+1).
BigReal cheb_T(std::uint64_t k, const BigReal& x);
BigReal cheb_U(std::uint64_t k, const BigReal& x);

/// A positive zero of L_n (or of M^a_n, scaled). The value is carried at
/// precision_bits + 2n so that residual checks at precision_bits are not
/// polluted by rounding of the input.
struct ZeroDescriptor {
  int n;
  std::uint64_t j;  // Gray rank in [1, 2^{n-1}]
  GrayWord word;    // length n - 1
  PiRational angle;
  BigReal value;
};

/// The 2^{n-1} positive zeros of L_n in Gray order (strictly decreasing),
/// each produced from its closed-form angle. 2 <= n <= 24.
std::vector<ZeroDescriptor> positive_zeros(int n, int precision_bits,
                                           Execution exec = Execution::parallel);

/// Zeros of M^a_n: positive_zeros(n) scaled by 1/(2a). Requires a > 0.
std::vector<ZeroDescriptor> m_zeros(int n, const BigReal& a, int precision_bits,
                                    Execution exec = Execution::parallel);

/// Clause-by-clause check of the interleaving statement relating the
/// zeros of L_n and L_{n+1}, taken literally:
///   i)   smallest zero of L_{n+1} < smallest zero of L_n
///   ii)  leading-bit-1 zeros of L_{n+1}, other than the smallest, fall
///        exactly one into each gap between consecutive zeros of L_n
///   iii) leading-bit-0 zeros of L_{n+1} all exceed the largest zero of L_n
/// Zeros are computed by radical evaluation of their words.
struct InterleavingReport {
  int n;
  bool clause_i = true;
  bool clause_ii = true;
  bool clause_iii = true;
  std::size_t gap_count = 0;
  std::vector<std::string> violations;

  bool passed() const { return clause_i && clause_ii && clause_iii; }
};

InterleavingReport check_interleaving(int n, int precision_bits);

/// Strict alternation z^{n+1}_{2k-1} > z^n_k > z^{n+1}_{2k} for every k,
/// with z^n_k the k-th positive zero of L_n in Gray order. This is the
/// arrangement the closed-form angles imply: two zeros of L_{n+1} in every
/// gap of L_n and one on each side.
struct InterlacingReport {
  int n;
  std::size_t comparisons = 0;
  std::vector<std::string> violations;

  bool passed() const { return violations.empty(); }
};

InterlacingReport check_interlacing(int n, int precision_bits);

/// Maximum two-sided residual of each identity over random samples:
///   t_form:  L_n(x) = 2 T_{2^{n-1}}(x^2/2 - 1)
///   cos_form: L_n(2 cos t) = 2 cos(2^n t)
///   u_form: prod_{i<=n} L_i(x) = U_{2^n - 1}(x^2/2 - 1)
///   sin_form: prod_{i<=n} L_i(2 cos t) = sin(2^{n+1} t) / sin(2t)
/// Samples x are uniform in (-2, 2) away from +-sqrt 2 by 2^-16; sin_form also
/// rejects |sin 2t| < 2^-16. t = acos(x/2).
struct IdentityReport {
  int n;
  int samples;
  BigReal t_form;
  BigReal cos_form;
  BigReal u_form;
  BigReal sin_form;

  BigReal max_residual() const;
};

IdentityReport identity_suite(int n, int samples, int precision_bits, std::uint64_t seed,
                              Execution exec = Execution::parallel);

/// |L_n(x) - 2 cos(2^{n-1} atan(sqrt(1 - u^2) / u))| with u = x^2/2 - 1.
/// Domain: |x| < 2, |x| != sqrt 2, n >= 1, and (n >= 3 or |x| > sqrt 2).
BigReal arctan_form_check(int n, const BigReal& x, int precision_bits);

/// |M^a_n(x) - (1/a - a 2^{2n-1} x^2)| / x^2. Requires n >= 2, a > 0, x != 0.
BigReal maclaurin_defect(int n, const BigReal& a, const BigReal& x, int precision_bits = 256);

}  // namespace lucaspi
