#include "lucaspi/lucas_lehmer.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <optional>
#include <random>

#include "lucaspi/errors.hpp"
#include "lucaspi/radicals.hpp"

namespace lucaspi {
namespace {

void check_depth(int n) {
  if (n < 0) throw ArgumentError("depth n must be >= 0, got " + std::to_string(n));
}

void check_positive(const BigReal& a) {
  if (!(a > 0L)) throw ArgumentError("parameter a must be > 0, got " + a.to_decimal(17));
}

int log2_magnitude(const BigReal& x) {
  return x.is_zero() ? 0 : static_cast<int>(std::labs(x.exponent2()));
}

std::vector<BigReal> evaluate_all(int length, int precision_bits, Execution exec) {
  const std::size_t count = std::size_t{1} << length;
  std::vector<std::optional<BigReal>> values(count);
  parallel_for(count, exec, [&](std::size_t i) {
    values[i] = evaluate(word_at(length, i + 1), precision_bits);
  });
  std::vector<BigReal> out;
  out.reserve(count);
  for (auto& v : values) out.push_back(std::move(*v));
  return out;
}

std::string describe(const GrayWord& word, const BigReal& value) {
  return word.to_string() + " (" + value.to_decimal(12) + ")";
}

constexpr std::size_t kMaxListedViolations = 16;

void add_violation(std::vector<std::string>& list, std::string message) {
  if (list.size() < kMaxListedViolations) list.push_back(std::move(message));
}

}  // namespace

BigReal eval_L(int n, const BigReal& x, int precision_bits) {
  check_depth(n);
  require_precision(precision_bits);
  const int work = std::max(precision_bits + 2 * n + kGuardBits, x.precision_bits());
  BigReal t = x.with_precision(work);
  for (int i = 0; i < n; ++i) {
    t = square(t) - 2;
  }
  return t.with_precision(precision_bits);
}

BigReal eval_M(int n, const BigReal& a, const BigReal& x, int precision_bits) {
  check_depth(n);
  check_positive(a);
  require_precision(precision_bits);
  const int work = std::max({precision_bits + 2 * n + kGuardBits + 2 * log2_magnitude(a),
                             x.precision_bits(), a.precision_bits()});
  const BigReal two_a = 2 * a.with_precision(work);
  const BigReal inv_a = 1 / a.with_precision(work);
  BigReal t = x.with_precision(work);
  for (int i = 0; i < n; ++i) {
    t = two_a * square(t) - inv_a;
  }
  return t.with_precision(precision_bits);
}

BigReal cheb_T(std::uint64_t k, const BigReal& x) {
  const int prec = x.precision_bits();
  if (x == 1L) return BigReal(1, prec);
  if (x == -1L) return BigReal(k % 2 == 0 ? 1 : -1, prec);
  if (k == 0) return BigReal(1, prec);
  const int work = prec + 2 * static_cast<int>(std::bit_width(k)) + kGuardBits;
  const BigReal y = x.with_precision(work);
  BigReal prev(1, work);
  BigReal cur = y;
  const BigReal two_y = 2 * y;
  for (std::uint64_t i = 2; i <= k; ++i) {
    BigReal next = two_y * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur.with_precision(prec);
}

BigReal cheb_U(std::uint64_t k, const BigReal& x) {
  const int prec = x.precision_bits();
  if (k > static_cast<std::uint64_t>(std::numeric_limits<long>::max() - 1)) {
    throw ArgumentError("cheb_U index too large");
  }
  if (x == 1L) return BigReal(static_cast<long>(k + 1), prec);
  if (x == -1L) {
    const long magnitude = static_cast<long>(k + 1);
    return BigReal(k % 2 == 0 ? magnitude : -magnitude, prec);
  }
  if (k == 0) return BigReal(1, prec);
  const int work = prec + 2 * static_cast<int>(std::bit_width(k)) + kGuardBits;
  const BigReal two_y = 2 * x.with_precision(work);
  BigReal prev(1, work);
  BigReal cur = two_y;
  for (std::uint64_t i = 2; i <= k; ++i) {
    BigReal next = two_y * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur.with_precision(prec);
}

std::vector<ZeroDescriptor> positive_zeros(int n, int precision_bits, Execution exec) {
  if (n < 2 || n > 24) {
    throw ArgumentError("positive_zeros needs 2 <= n <= 24, got " + std::to_string(n));
  }
  require_precision(precision_bits);
  const int value_bits = precision_bits + 2 * n;
  const std::size_t count = std::size_t{1} << (n - 1);
  std::vector<std::optional<ZeroDescriptor>> slots(count);
  parallel_for(count, exec, [&](std::size_t i) {
    const std::uint64_t j = i + 1;
    GrayWord word = word_at(n - 1, j);
    const ClosedForm form = closed_form(word);
    slots[i].emplace(ZeroDescriptor{n, j, std::move(word), form.angle, form.value(value_bits)});
  });
  std::vector<ZeroDescriptor> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

std::vector<ZeroDescriptor> m_zeros(int n, const BigReal& a, int precision_bits, Execution exec) {
  check_positive(a);
  std::vector<ZeroDescriptor> zeros = positive_zeros(n, precision_bits, exec);
  const int value_bits = precision_bits + 2 * n + 2 * log2_magnitude(a);
  const BigReal two_a = 2 * a.with_precision(value_bits);
  for (auto& z : zeros) {
    z.value = z.value.with_precision(value_bits) / two_a;
  }
  return zeros;
}

InterleavingReport check_interleaving(int n, int precision_bits) {
  if (n < 2 || n > 16) {
    throw ArgumentError("check_interleaving needs 2 <= n <= 16, got " + std::to_string(n));
  }
  require_precision(precision_bits);
  InterleavingReport report{n};
  const std::vector<BigReal> lower = evaluate_all(n - 1, precision_bits, Execution::parallel);
  const std::vector<BigReal> upper = evaluate_all(n, precision_bits, Execution::parallel);

  const auto lower_min = std::min_element(lower.begin(), lower.end(),
                                          [](const BigReal& a, const BigReal& b) { return a < b; });
  const auto lower_max = std::max_element(lower.begin(), lower.end(),
                                          [](const BigReal& a, const BigReal& b) { return a < b; });
  const auto upper_min = std::min_element(upper.begin(), upper.end(),
                                          [](const BigReal& a, const BigReal& b) { return a < b; });
  const auto smallest = static_cast<std::size_t>(upper_min - upper.begin());

  if (!(*upper_min < *lower_min)) {
    report.clause_i = false;
    add_violation(report.violations,
                  "i) smallest zero of L_" + std::to_string(n + 1) + " " +
                      describe(word_at(n, smallest + 1), *upper_min) +
                      " is not below smallest zero of L_" + std::to_string(n) + " " +
                      lower_min->to_decimal(12));
  }

  // Gaps between consecutive zeros of L_n, ascending.
  std::vector<BigReal> ascending = lower;
  std::sort(ascending.begin(), ascending.end(),
            [](const BigReal& a, const BigReal& b) { return a < b; });
  report.gap_count = ascending.size() - 1;
  std::vector<std::size_t> per_gap(report.gap_count, 0);

  for (std::size_t i = 0; i < upper.size(); ++i) {
    const GrayWord word = word_at(n, i + 1);
    if (word[0] == 1) {
      if (i == smallest) continue;
      const auto pos = std::upper_bound(ascending.begin(), ascending.end(), upper[i],
                                        [](const BigReal& v, const BigReal& e) { return v < e; });
      const auto idx = static_cast<std::size_t>(pos - ascending.begin());
      const bool inside = idx >= 1 && idx < ascending.size() && ascending[idx - 1] < upper[i];
      if (inside) {
        ++per_gap[idx - 1];
      } else {
        report.clause_ii = false;
        add_violation(report.violations,
                      "ii) leading-bit-1 zero " + describe(word, upper[i]) + " lies in no gap");
      }
    } else if (!(upper[i] > *lower_max)) {
      report.clause_iii = false;
      add_violation(report.violations, "iii) leading-bit-0 zero " + describe(word, upper[i]) +
                                           " is not above largest zero of L_" +
                                           std::to_string(n) + " " + lower_max->to_decimal(12));
    }
  }
  for (std::size_t g = 0; g < per_gap.size(); ++g) {
    if (per_gap[g] != 1) {
      report.clause_ii = false;
      add_violation(report.violations, "ii) gap (" + ascending[g].to_decimal(12) + ", " +
                                           ascending[g + 1].to_decimal(12) + ") holds " +
                                           std::to_string(per_gap[g]) +
                                           " leading-bit-1 zeros, expected 1");
    }
  }
  return report;
}

InterlacingReport check_interlacing(int n, int precision_bits) {
  if (n < 2 || n > 16) {
    throw ArgumentError("check_interlacing needs 2 <= n <= 16, got " + std::to_string(n));
  }
  require_precision(precision_bits);
  InterlacingReport report{n};
  const std::vector<BigReal> lower = evaluate_all(n - 1, precision_bits, Execution::parallel);
  const std::vector<BigReal> upper = evaluate_all(n, precision_bits, Execution::parallel);
  for (std::size_t k = 0; k < lower.size(); ++k) {
    report.comparisons += 2;
    if (!(upper[2 * k] > lower[k] && lower[k] > upper[2 * k + 1])) {
      add_violation(report.violations, "zero " + std::to_string(k + 1) + " of L_" +
                                           std::to_string(n) + " not between zeros " +
                                           std::to_string(2 * k + 1) + " and " +
                                           std::to_string(2 * k + 2) + " of L_" +
                                           std::to_string(n + 1));
    }
  }
  return report;
}

BigReal IdentityReport::max_residual() const {
  BigReal worst = t_form;
  for (const BigReal* r : {&cos_form, &u_form, &sin_form}) {
    if (*r > worst) worst = *r;
  }
  return worst;
}

IdentityReport identity_suite(int n, int samples, int precision_bits, std::uint64_t seed,
                              Execution exec) {
  if (n < 1 || n > 14) {
    throw ArgumentError("identity_suite needs 1 <= n <= 14, got " + std::to_string(n));
  }
  if (samples < 1) throw ArgumentError("identity_suite needs samples >= 1");
  require_precision(precision_bits);

  // Draw the sample abscissae serially so results do not depend on the schedule.
  std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(n));
  const double exclusion = std::ldexp(1.0, -16);
  const double root2 = std::sqrt(2.0);
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(samples));
  while (xs.size() < static_cast<std::size_t>(samples)) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const double x = -2.0 + 4.0 * u;
    const double sin2t = x * std::sqrt(std::max(0.0, 1.0 - x * x / 4.0));
    if (x <= -2.0 || std::fabs(std::fabs(x) - root2) < exclusion ||
        std::fabs(sin2t) < exclusion) {
      continue;
    }
    xs.push_back(x);
  }

  const int work = precision_bits + 4 * n + 64;
  const std::uint64_t t_index = std::uint64_t{1} << (n - 1);
  const std::uint64_t u_index = (std::uint64_t{1} << n) - 1;

  struct Residuals {
    std::optional<BigReal> t_form, cos_form, u_form, sin_form;
  };
  std::vector<Residuals> per_sample(xs.size());
  parallel_for(xs.size(), exec, [&](std::size_t s) {
    const BigReal x = BigReal::from_double(xs[s], work);
    const BigReal u = square(x) / 2 - 1;

    // L_1..L_n at x and their running product.
    BigReal t = x;
    BigReal product(1, work);
    for (int i = 1; i <= n; ++i) {
      t = square(t) - 2;
      product *= t;
    }
    per_sample[s].t_form = abs(t - 2 * cheb_T(t_index, u));
    per_sample[s].u_form = abs(product - cheb_U(u_index, u));

    const BigReal theta = acos(x / 2);
    const BigReal x_theta = 2 * cos(theta);
    BigReal l = x_theta;
    BigReal l_product(1, work);
    for (int i = 1; i <= n; ++i) {
      l = square(l) - 2;
      l_product *= l;
    }
    per_sample[s].cos_form = abs(l - 2 * cos(ldexp(theta, n)));
    per_sample[s].sin_form = abs(l_product - sin(ldexp(theta, n + 1)) / sin(ldexp(theta, 1)));
  });

  IdentityReport report{n, samples, BigReal(precision_bits), BigReal(precision_bits),
                        BigReal(precision_bits), BigReal(precision_bits)};
  for (const auto& r : per_sample) {
    if (*r.t_form > report.t_form) report.t_form = r.t_form->with_precision(precision_bits);
    if (*r.cos_form > report.cos_form) report.cos_form = r.cos_form->with_precision(precision_bits);
    if (*r.u_form > report.u_form) report.u_form = r.u_form->with_precision(precision_bits);
    if (*r.sin_form > report.sin_form) report.sin_form = r.sin_form->with_precision(precision_bits);
  }
  return report;
}

BigReal arctan_form_check(int n, const BigReal& x, int precision_bits) {
  require_precision(precision_bits);
  if (n < 1) throw ArgumentError("arctan_form_check needs n >= 1, got " + std::to_string(n));
  const int work = std::max(precision_bits + 2 * n + kGuardBits, x.precision_bits());
  const BigReal xw = x.with_precision(work);
  // Squaring at double width is exact, so the sqrt 2 test is exact too.
  const BigReal x2 = square(x.with_precision(2 * x.precision_bits()));
  if (!(abs(xw) < 2L)) throw ArgumentError("arctan_form_check needs |x| < 2");
  if (x2 == 2L) throw ArgumentError("arctan_form_check excludes |x| = sqrt 2");
  if (n < 3 && !(x2 > 2L)) {
    throw ArgumentError("arctan_form_check needs n >= 3 when |x| < sqrt 2 (got n=" +
                        std::to_string(n) + ")");
  }
  const BigReal u = square(xw) / 2 - 1;
  const BigReal r = atan(sqrt(1 - square(u)) / u);
  const BigReal rhs = 2 * cos(ldexp(r, n - 1));
  const BigReal lhs = eval_L(n, xw, work);
  return abs(lhs - rhs).with_precision(precision_bits);
}

BigReal maclaurin_defect(int n, const BigReal& a, const BigReal& x, int precision_bits) {
  if (n < 2) throw ArgumentError("maclaurin_defect needs n >= 2, got " + std::to_string(n));
  check_positive(a);
  if (x.is_zero()) throw ArgumentError("maclaurin_defect needs x != 0");
  require_precision(precision_bits);
  const int work = std::max({precision_bits + 4 * log2_magnitude(x) + 2 * n + kGuardBits +
                                 2 * log2_magnitude(a),
                             x.precision_bits(), a.precision_bits()});
  const BigReal aw = a.with_precision(work);
  const BigReal xw = x.with_precision(work);
  const BigReal m = eval_M(n, aw, xw, work);
  const BigReal x2 = square(xw);
  const BigReal model = 1 / aw - ldexp(aw * x2, 2 * n - 1);
  return (abs(m - model) / x2).with_precision(precision_bits);
}

}  // namespace lucaspi
