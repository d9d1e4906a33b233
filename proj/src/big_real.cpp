#include "lucaspi/big_real.hpp"

#include <algorithm>
#include <climits>
#include <string>

#include "lucaspi/errors.hpp"

namespace lucaspi {
namespace {

mpfr_prec_t checked_prec(int precision_bits) {
  if (precision_bits < 2) {
    throw ConfigurationError("precision must be at least 2 bits, got " +
                             std::to_string(precision_bits));
  }
  return static_cast<mpfr_prec_t>(precision_bits);
}

int min_prec(const BigReal& a, const BigReal& b) {
  return std::min(a.precision_bits(), b.precision_bits());
}

std::string format(const char* spec, int digits, mpfr_srcptr x) {
  char* buffer = nullptr;
  const int len = mpfr_asprintf(&buffer, spec, digits, x);
  if (len < 0 || buffer == nullptr) {
    throw ComputationError("mpfr_asprintf failed");
  }
  std::string out(buffer, static_cast<std::size_t>(len));
  mpfr_free_str(buffer);
  return out;
}

}  // namespace

BigReal::BigReal(int precision_bits) {
  mpfr_init2(value_, checked_prec(precision_bits));
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal(long value, int precision_bits) {
  mpfr_init2(value_, checked_prec(precision_bits));
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigReal BigReal::from_double(double value, int precision_bits) {
  BigReal out(precision_bits);
  mpfr_set_d(out.value_, value, MPFR_RNDN);
  return out;
}

BigReal BigReal::from_string(std::string_view decimal, int precision_bits) {
  BigReal out(precision_bits);
  const std::string text(decimal);
  if (text.empty() || mpfr_set_str(out.value_, text.c_str(), 10, MPFR_RNDN) != 0) {
    throw ArgumentError("not a decimal number: '" + text + "'");
  }
  return out;
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

BigReal BigReal::with_precision(int precision_bits) const {
  BigReal out(precision_bits);
  mpfr_set(out.value_, value_, MPFR_RNDN);
  return out;
}

long BigReal::exponent2() const {
  if (!mpfr_regular_p(value_)) return LONG_MIN / 2;
  return static_cast<long>(mpfr_get_exp(value_));
}

std::string BigReal::to_fixed(int decimals) const {
  return format("%.*Rf", decimals, value_);
}

std::string BigReal::to_scientific(int significant) const {
  return format("%.*Re", std::max(significant - 1, 0), value_);
}

std::string BigReal::to_decimal(int significant) const {
  return format("%.*Rg", std::max(significant, 1), value_);
}

BigReal& BigReal::operator+=(const BigReal& rhs) {
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator-=(const BigReal& rhs) {
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator*=(const BigReal& rhs) {
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator/=(const BigReal& rhs) {
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator+=(long rhs) {
  mpfr_add_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator-=(long rhs) {
  mpfr_sub_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigReal operator+(const BigReal& a, const BigReal& b) {
  BigReal out(min_prec(a, b));
  mpfr_add(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return out;
}
BigReal operator-(const BigReal& a, const BigReal& b) {
  BigReal out(min_prec(a, b));
  mpfr_sub(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return out;
}
BigReal operator*(const BigReal& a, const BigReal& b) {
  BigReal out(min_prec(a, b));
  mpfr_mul(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return out;
}
BigReal operator/(const BigReal& a, const BigReal& b) {
  BigReal out(min_prec(a, b));
  mpfr_div(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return out;
}
BigReal operator-(const BigReal& a) {
  BigReal out(a.precision_bits());
  mpfr_neg(out.raw(), a.raw(), MPFR_RNDN);
  return out;
}

BigReal operator+(const BigReal& a, long b) {
  BigReal out(a.precision_bits());
  mpfr_add_si(out.raw(), a.raw(), b, MPFR_RNDN);
  return out;
}
BigReal operator-(const BigReal& a, long b) {
  BigReal out(a.precision_bits());
  mpfr_sub_si(out.raw(), a.raw(), b, MPFR_RNDN);
  return out;
}
BigReal operator*(const BigReal& a, long b) {
  BigReal out(a.precision_bits());
  mpfr_mul_si(out.raw(), a.raw(), b, MPFR_RNDN);
  return out;
}
BigReal operator/(const BigReal& a, long b) {
  BigReal out(a.precision_bits());
  mpfr_div_si(out.raw(), a.raw(), b, MPFR_RNDN);
  return out;
}
BigReal operator+(long a, const BigReal& b) { return b + a; }
BigReal operator-(long a, const BigReal& b) {
  BigReal out(b.precision_bits());
  mpfr_si_sub(out.raw(), a, b.raw(), MPFR_RNDN);
  return out;
}
BigReal operator*(long a, const BigReal& b) { return b * a; }
BigReal operator/(long a, const BigReal& b) {
  BigReal out(b.precision_bits());
  mpfr_si_div(out.raw(), a, b.raw(), MPFR_RNDN);
  return out;
}

bool operator==(const BigReal& a, const BigReal& b) {
  return mpfr_equal_p(a.raw(), b.raw()) != 0;
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.raw(), b.raw())) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.raw(), b.raw());
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

bool operator==(const BigReal& a, long b) {
  return !a.is_nan() && mpfr_cmp_si(a.raw(), b) == 0;
}

std::partial_ordering operator<=>(const BigReal& a, long b) {
  if (a.is_nan()) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(a.raw(), b);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

BigReal sqrt(const BigReal& x) {
  BigReal out(x.precision_bits());
  mpfr_sqrt(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

BigReal abs(const BigReal& x) {
  BigReal out(x.precision_bits());
  mpfr_abs(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

BigReal square(const BigReal& x) {
  BigReal out(x.precision_bits());
  mpfr_sqr(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

BigReal ldexp(const BigReal& x, long e) {
  BigReal out(x.precision_bits());
  mpfr_mul_2si(out.raw(), x.raw(), e, MPFR_RNDN);
  return out;
}

BigReal atan(const BigReal& x) {
  BigReal out(x.precision_bits());
  mpfr_atan(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

BigReal sin(const BigReal& x) {
  BigReal out(x.precision_bits());
  mpfr_sin(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

BigReal cos(const BigReal& x) {
  BigReal out(x.precision_bits());
  mpfr_cos(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

BigReal acos(const BigReal& x) {
  BigReal out(x.precision_bits());
  mpfr_acos(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

BigReal pow2(long e, int precision_bits) {
  BigReal out(1, precision_bits);
  mpfr_mul_2si(out.raw(), out.raw(), e, MPFR_RNDN);
  return out;
}

}  // namespace lucaspi
