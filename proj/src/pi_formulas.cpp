#include "lucaspi/pi_formulas.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "lucaspi/errors.hpp"
#include "lucaspi/numerics.hpp"
#include "lucaspi/radicals.hpp"

namespace lucaspi {
namespace {

BigReal error_against_pi(const BigReal& approximant, int precision_bits) {
  return abs(approximant - reference_pi(precision_bits));
}

// atan sqrt(1 / (w/2 - 1)^2 - 1) for w = w(g_{n-1, 2^{n-1} - h}), at `work` bits.
BigReal zero_angle_arctan(int n, std::uint64_t h, int work) {
  const GrayWord word = word_at(n - 1, (std::uint64_t{1} << (n - 1)) - h);
  const BigReal omega = square(evaluate(word, work));
  const BigReal c = omega / 2 - 1;
  return atan(sqrt(1 / square(c) - 1));
}

void check_exact_domain(int n, std::uint64_t h, const char* what) {
  if (n < 2 || n > kMaxRankLength) {
    throw ArgumentError(std::string(what) + " needs 2 <= n <= 63, got n=" + std::to_string(n));
  }
  const std::uint64_t h_max = (std::uint64_t{1} << (n - 2)) - 1;
  if (h > h_max) {
    throw ArgumentError(std::string(what) + " needs h <= 2^(n-2) - 1 = " +
                        std::to_string(h_max) + ", got h=" + std::to_string(h));
  }
}

void check_gray_domain(int m, std::uint64_t h, int n) {
  if (m < 1 || m > kMaxRankLength - 1) {
    throw ArgumentError("gray_term needs 1 <= m <= 62, got m=" + std::to_string(m));
  }
  const std::uint64_t h_max = (std::uint64_t{1} << m) - 1;
  if (h > h_max) {
    throw ArgumentError("gray_term needs h <= 2^m - 1 = " + std::to_string(h_max) +
                        ", got h=" + std::to_string(h));
  }
  if (n <= m + 1) {
    throw ArgumentError("gray_term needs n > m + 1, got n=" + std::to_string(n) +
                        " m=" + std::to_string(m));
  }
}

}  // namespace

int ApproxRecord::digits_correct() const {
  const int cap = static_cast<int>(std::floor(approximant.precision_bits() * std::log10(2.0)));
  if (abs_error.is_zero()) return cap;
  BigReal ratio = abs_error.with_precision(64) / reference_pi(64);
  mpfr_log10(ratio.raw(), ratio.raw(), MPFR_RNDN);
  const double digits = std::floor(-ratio.to_double());
  return std::min(cap, static_cast<int>(digits));
}

ApproxRecord classic_term(int n, int precision_bits) {
  if (n < 1) throw ArgumentError("classic_term needs n >= 1, got " + std::to_string(n));
  require_precision(precision_bits);
  GrayWord word = compose_word(true, static_cast<std::size_t>(n - 1), GrayWord{});
  const BigReal root = evaluate(word, precision_bits + n + 8);
  BigReal approximant = ldexp(root, n + 1).with_precision(precision_bits);
  BigReal error = error_against_pi(approximant, precision_bits);
  return ApproxRecord{n, std::nullopt, std::nullopt, std::move(approximant), std::move(error),
                      std::move(word)};
}

ApproxRecord gray_term(int m, std::uint64_t h, int n, int precision_bits) {
  check_gray_domain(m, h, n);
  require_precision(precision_bits);
  GrayWord word = prefixed_gray_word(n, m, h + 1);
  const int work = precision_bits + n + 8;
  const BigReal root = evaluate(word, work);
  BigReal approximant =
      (ldexp(root, n + 1) / static_cast<long>(2 * h + 1)).with_precision(precision_bits);
  BigReal error = error_against_pi(approximant, precision_bits);
  return ApproxRecord{n, m, h, std::move(approximant), std::move(error), std::move(word)};
}

BigReal error_sequence(int n, int precision_bits) {
  if (n < 1) throw ArgumentError("error_sequence needs n >= 1, got " + std::to_string(n));
  require_precision(precision_bits);
  const int work = precision_bits + kGuardBits;
  const GrayWord word = compose_word(true, static_cast<std::size_t>(n - 1), GrayWord{});
  const BigReal e = ldexp(reference_pi(work), -(n + 1)) - evaluate(word, work);
  return e.with_precision(precision_bits);
}

BigReal exact_pi(int n, std::uint64_t h, int precision_bits) {
  check_exact_domain(n, h, "exact_pi");
  require_precision(precision_bits);
  const int work = precision_bits + 2 * n + kGuardBits;
  const BigReal angle = zero_angle_arctan(n, h, work);
  return (ldexp(angle, n) / static_cast<long>(2 * h + 1)).with_precision(precision_bits);
}

BigReal phi_asymptotic(int n, int precision_bits, PhiVariant variant) {
  if (n < 4) throw ArgumentError("phi_asymptotic needs n >= 4, got " + std::to_string(n));
  require_precision(precision_bits);
  const int work = precision_bits + n + kGuardBits;
  const GrayWord word = compose_word(true, static_cast<std::size_t>(n - 3), GrayWord::parse("11"));
  const BigReal fourth_root = sqrt(evaluate(word, work));
  // 2^{(n-1)/2} or 2^{n/2-1}, as sqrt of 2^{n-1} or 2^{n-2}.
  const long doubled_exponent = variant == PhiVariant::standard ? n - 1 : n - 2;
  const BigReal scale = sqrt(pow2(doubled_exponent, work));
  const BigReal phi = scale * fourth_root / sqrt(reference_pi(work)) + BigReal(1, work) / 2;
  return phi.with_precision(precision_bits);
}

BigReal phi_exact(int n, int precision_bits) {
  if (n < 4) {
    throw ArgumentError("phi_exact needs n >= 4 (h = 2 <= 2^(n-2) - 1), got n=" +
                        std::to_string(n));
  }
  check_exact_domain(n, 2, "phi_exact");
  require_precision(precision_bits);
  const int work = precision_bits + 2 * n + kGuardBits;
  const BigReal angle = zero_angle_arctan(n, 2, work);
  const BigReal scale = sqrt(pow2(n - 2, work));
  const BigReal phi = scale / sqrt(reference_pi(work)) * sqrt(angle) + BigReal(1, work) / 2;
  return phi.with_precision(precision_bits);
}

std::vector<ApproxRecord> convergence_table(const TableSpec& spec, int precision_bits,
                                            Execution exec) {
  if (spec.n_last < spec.n_first) return {};
  require_precision(precision_bits);
  // Validate the whole range up front so errors name the first bad row.
  if (spec.method == Method::classic) {
    if (spec.n_first < 1) throw ArgumentError("classic table needs n >= 1");
  } else {
    check_gray_domain(spec.m, spec.h, spec.n_first);
    check_gray_domain(spec.m, spec.h, spec.n_last);
  }
  const auto count = static_cast<std::size_t>(spec.n_last - spec.n_first + 1);
  std::vector<std::optional<ApproxRecord>> rows(count);
  parallel_for(count, exec, [&](std::size_t i) {
    const int n = spec.n_first + static_cast<int>(i);
    rows[i] = spec.method == Method::classic ? classic_term(n, precision_bits)
                                             : gray_term(spec.m, spec.h, n, precision_bits);
  });
  std::vector<ApproxRecord> out;
  out.reserve(count);
  for (auto& r : rows) out.push_back(std::move(*r));
  return out;
}

}  // namespace lucaspi
