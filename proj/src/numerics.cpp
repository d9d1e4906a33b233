#include "lucaspi/numerics.hpp"

#include <bit>
#include <mutex>
#include <optional>
#include <shared_mutex>

#include "lucaspi/errors.hpp"

namespace lucaspi {
namespace {

// Sum of a power series whose terms shrink geometrically; stops once a term
// falls below 2^-(work + 4) relative to the leading term.
bool negligible(const BigReal& term, long lead_exponent, int work) {
  return term.is_zero() || term.exponent2() < lead_exponent - work - 4;
}

// sin(x) for 0 <= x <= pi/4 by Taylor series at the precision of x.
BigReal sin_series(const BigReal& x) {
  const int work = x.precision_bits();
  if (x.is_zero()) return BigReal(work);
  const BigReal x2 = square(x);
  BigReal term = x;
  BigReal sum = x;
  const long lead = x.exponent2();
  for (long k = 1;; ++k) {
    term *= x2;
    term /= (2 * k) * (2 * k + 1);
    if (k % 2 == 1) {
      sum -= term;
    } else {
      sum += term;
    }
    if (negligible(term, lead, work)) break;
  }
  return sum;
}

// cos(x) for 0 <= x <= pi/4 by Taylor series at the precision of x.
BigReal cos_series(const BigReal& x) {
  const int work = x.precision_bits();
  const BigReal x2 = square(x);
  BigReal term(1, work);
  BigReal sum(1, work);
  if (x.is_zero()) return sum;
  for (long k = 1;; ++k) {
    term *= x2;
    term /= (2 * k - 1) * (2 * k);
    if (k % 2 == 1) {
      sum -= term;
    } else {
      sum += term;
    }
    if (negligible(term, 1, work)) break;
  }
  return sum;
}

// num * pi / 2^den_exp at the given precision.
BigReal dyadic_angle(std::uint64_t num, int den_exp, int precision_bits) {
  BigReal angle = reference_pi(precision_bits + 8).with_precision(precision_bits + 8);
  mpfr_mul_ui(angle.raw(), angle.raw(), num, MPFR_RNDN);
  mpfr_div_2ui(angle.raw(), angle.raw(), static_cast<unsigned long>(den_exp), MPFR_RNDN);
  return angle.with_precision(precision_bits);
}

enum class Kernel { sine, cosine };

// Reduces q in (0, 1) to a kernel call on an angle in [0, pi/4]:
//   sin(q pi) = sin((1-q) pi),  cos(q pi) = -cos((1-q) pi)   for q > 1/2
//   sin(q pi) = cos((1/2-q) pi), cos(q pi) = sin((1/2-q) pi)  for q > 1/4
BigReal reduced_trig(const PiRational& q, Kernel kernel, int precision_bits) {
  require_precision(precision_bits);
  const int work = precision_bits + kGuardBits;
  const int e = q.den_exp();
  const std::uint64_t one = e == 64 ? 0 : (std::uint64_t{1} << e);
  const std::uint64_t half = std::uint64_t{1} << (e - 1);
  std::uint64_t num = q.num();
  bool negate = false;
  if (num > half) {
    num = one - num;
    if (kernel == Kernel::cosine) negate = true;
  }
  // Now num/2^e lies in (0, 1/2].
  const std::uint64_t quarter = e >= 2 ? (std::uint64_t{1} << (e - 2)) : 0;
  bool swap = false;
  if (e < 2 || num > quarter) {
    num = half - num;
    swap = true;
  }
  const Kernel used = swap ? (kernel == Kernel::sine ? Kernel::cosine : Kernel::sine) : kernel;
  const BigReal x = num == 0 ? BigReal(work) : dyadic_angle(num, e, work);
  BigReal value = used == Kernel::sine ? sin_series(x) : cos_series(x);
  if (negate) value = -value;
  return value.with_precision(precision_bits);
}

struct PiCache {
  std::shared_mutex mutex;
  std::optional<BigReal> value;
};

PiCache& pi_cache() {
  static PiCache cache;
  return cache;
}

}  // namespace

void require_precision(int precision_bits) {
  if (precision_bits < kMinPrecisionBits) {
    throw ConfigurationError("precision_bits must be >= " +
                             std::to_string(kMinPrecisionBits) + ", got " +
                             std::to_string(precision_bits));
  }
}

PiRational::PiRational(std::uint64_t num, int den_exp) : num_(num), den_exp_(den_exp) {
  if (den_exp < 1 || den_exp > kMaxDenExp) {
    throw ArgumentError("PiRational denominator exponent must be in [1, 63], got " +
                        std::to_string(den_exp));
  }
  if (num % 2 == 0) {
    throw ArgumentError("PiRational numerator must be odd, got " + std::to_string(num));
  }
  if (num >= (std::uint64_t{1} << den_exp)) {
    throw ArgumentError("PiRational angle must lie in (0, pi): " + std::to_string(num) +
                        "/2^" + std::to_string(den_exp));
  }
}

PiRational PiRational::from_ratio(std::uint64_t num, std::uint64_t den) {
  if (num == 0 || den == 0) throw ArgumentError("PiRational needs a nonzero ratio");
  const int shift = std::min(std::countr_zero(num), std::countr_zero(den));
  num >>= shift;
  den >>= shift;
  if (!std::has_single_bit(den)) {
    throw ArgumentError("PiRational denominator must be a power of two, got " +
                        std::to_string(den));
  }
  return PiRational(num, std::countr_zero(den));
}

double PiRational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(std::uint64_t{1} << den_exp_);
}

std::string PiRational::to_string() const {
  return std::to_string(num_) + "/2^" + std::to_string(den_exp_);
}

BigReal arctan_inverse(std::uint64_t k, int precision_bits) {
  if (k < 2) throw ArgumentError("arctan_inverse needs k >= 2");
  const int work = precision_bits + 16;
  BigReal power(1, work);
  mpfr_div_ui(power.raw(), power.raw(), k, MPFR_RNDN);
  BigReal sum = power;
  const long lead = power.exponent2();
  BigReal term(work);
  for (unsigned long i = 1;; ++i) {
    mpfr_div_ui(power.raw(), power.raw(), k, MPFR_RNDN);
    mpfr_div_ui(power.raw(), power.raw(), k, MPFR_RNDN);
    mpfr_div_ui(term.raw(), power.raw(), 2 * i + 1, MPFR_RNDN);
    if (i % 2 == 1) {
      sum -= term;
    } else {
      sum += term;
    }
    if (negligible(term, lead, work)) break;
  }
  return sum.with_precision(precision_bits);
}

BigReal arctan_series_pi(ArctanFormula formula, int precision_bits) {
  const int work = precision_bits + 8;
  BigReal pi(work);
  switch (formula) {
    case ArctanFormula::machin:
      pi = 16 * arctan_inverse(5, work) - 4 * arctan_inverse(239, work);
      break;
    case ArctanFormula::stormer:
      pi = 48 * arctan_inverse(18, work) + 32 * arctan_inverse(57, work) -
           20 * arctan_inverse(239, work);
      break;
  }
  return pi.with_precision(precision_bits);
}

BigReal reference_pi(int precision_bits) {
  require_precision(precision_bits);
  const int work = precision_bits + kGuardBits;
  PiCache& cache = pi_cache();
  {
    std::shared_lock lock(cache.mutex);
    if (cache.value && cache.value->precision_bits() >= work) {
      return cache.value->with_precision(precision_bits);
    }
  }
  BigReal fresh = arctan_series_pi(ArctanFormula::machin, work);
  BigReal result = fresh.with_precision(precision_bits);
  std::unique_lock lock(cache.mutex);
  if (!cache.value || cache.value->precision_bits() < work) {
    cache.value = std::move(fresh);
  }
  return result;
}

BigReal sin_pi(const PiRational& q, int precision_bits) {
  return reduced_trig(q, Kernel::sine, precision_bits);
}

BigReal cos_pi(const PiRational& q, int precision_bits) {
  return reduced_trig(q, Kernel::cosine, precision_bits);
}

BigReal reference_phi(int precision_bits) {
  const int work = precision_bits + kGuardBits;
  const BigReal phi = (1 + sqrt(BigReal(5, work))) / 2;
  return phi.with_precision(precision_bits);
}

}  // namespace lucaspi
