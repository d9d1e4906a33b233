#include <gtest/gtest.h>

#include "lucaspi/errors.hpp"
#include "lucaspi/numerics.hpp"
#include "lucaspi/pi_formulas.hpp"
#include "support/oracle.hpp"
#include "support/test_support.hpp"

namespace lucaspi {
namespace {

using test::matches;
using test::within;

TEST(GrayTerm, WorkedExample) {
  const ApproxRecord r8 = gray_term(3, 5, 8, 199);
  EXPECT_EQ(r8.word.to_string(), "10000111");
  EXPECT_EQ(r8.approximant.to_fixed(6), "3.140996");
  EXPECT_TRUE(matches(r8.approximant, oracle::kGray_3_5_8, -190));
  EXPECT_EQ(r8.m, 3);
  EXPECT_EQ(r8.h, 5u);

  const ApproxRecord r12 = gray_term(3, 5, 12, 199);
  EXPECT_EQ(r12.approximant.to_fixed(9), "3.141590324");
  EXPECT_TRUE(matches(r12.approximant, oracle::kGray_3_5_12, -95));
  EXPECT_EQ(r12.digits_correct(), 6);
}

TEST(GrayTerm, Domain) {
  EXPECT_THROW(gray_term(3, 8, 10, 128), ArgumentError);
  EXPECT_THROW(gray_term(3, 9, 10, 128), ArgumentError);
  EXPECT_THROW(gray_term(3, 0, 4, 128), ArgumentError);
  EXPECT_THROW(gray_term(0, 0, 4, 128), ArgumentError);
  EXPECT_NO_THROW(gray_term(3, 7, 5, 128));
}

// pi - gray_term ~ pi^3 (2h+1)^2 / (6 4^(n+2)) once the angle is small.
TEST(GrayTerm, ErrorScaling) {
  const int p = 256;
  const BigReal pi = reference_pi(p);
  for (int m = 1; m <= 4; ++m) {
    for (std::uint64_t h = 0; h < (std::uint64_t{1} << m); ++h) {
      for (int n = m + 6; n <= m + 20; ++n) {
        const ApproxRecord r = gray_term(m, h, n, p);
        const long k = static_cast<long>(2 * h + 1);
        const BigReal model = ldexp(pi * pi * pi * (k * k), -2 * (n + 2)) / 6L;
        const BigReal ratio = r.abs_error / model;
        ASSERT_TRUE(ratio > BigReal::from_string("0.5", 64) && ratio < 2L)
            << m << " " << h << " " << n << " ratio " << ratio.to_decimal(6);
        ASSERT_TRUE(r.approximant < pi);
      }
    }
  }
}

TEST(ClassicTerm, ValuesAndBelowPi) {
  EXPECT_TRUE(matches(classic_term(1, 199).approximant, oracle::kClassic1, -190));
  EXPECT_EQ(classic_term(1, 199).word.to_string(), "1");
  const BigReal err10 = classic_term(10, 199).abs_error;
  const BigReal want = BigReal::from_string(oracle::kClassic10Error, 64);
  EXPECT_TRUE(abs(err10 - want) / want < BigReal::from_string("1e-9", 64));
  const BigReal pi = reference_pi(256);
  for (int n = 1; n <= 60; ++n) EXPECT_TRUE(classic_term(n, 256).approximant < pi) << n;
  EXPECT_THROW(classic_term(0, 128), ArgumentError);
}

TEST(ErrorSequence, PositiveDecreasingCubic) {
  const int p = 256;
  std::optional<BigReal> previous;
  for (int n = 1; n <= 60; ++n) {
    BigReal e = error_sequence(n, p);
    ASSERT_TRUE(e > 0L) << n;
    if (previous) {
      ASSERT_TRUE(e < *previous) << n;
      if (n >= 6) {
        // e(n) ~ 2 (x^3 / 6) with x = pi / 2^(n+2): ratio tends to 8
        const BigReal ratio = *previous / e;
        ASSERT_TRUE(abs(ratio - 8L) < BigReal::from_string("0.01", 64)) << n;
      }
    }
    previous = std::move(e);
  }
  EXPECT_THROW(error_sequence(0, p), ArgumentError);
}

TEST(ExactPi, IdentityForEveryAdmissibleH) {
  const int p = 128;
  const BigReal pi = reference_pi(p);
  for (int n = 2; n <= 10; ++n) {
    for (std::uint64_t h = 0; h < (std::uint64_t{1} << (n - 2)); ++h) {
      ASSERT_TRUE(within(exact_pi(n, h, p), pi, 24 - p)) << n << " " << h;
    }
  }
  EXPECT_TRUE(within(exact_pi(30, 12345, 256), reference_pi(256), 24 - 256));
  EXPECT_THROW(exact_pi(1, 0, p), ArgumentError);
  EXPECT_THROW(exact_pi(4, 4, p), ArgumentError);
}

TEST(GoldenRatio, ExactIdentity) {
  EXPECT_TRUE(matches(phi_exact(4, 128), oracle::kPhi, -100));
  EXPECT_TRUE(matches(phi_exact(12, 256), oracle::kPhi, -190));
  for (int n = 4; n <= 16; ++n) {
    EXPECT_TRUE(within(phi_exact(n, 160), phi_exact(4, 160), 24 - 160)) << n;
  }
  EXPECT_THROW(phi_exact(3, 128), ArgumentError);
}

TEST(GoldenRatio, AsymptoticVariants) {
  const int p = 256;
  const BigReal phi = reference_phi(p);
  std::optional<BigReal> previous;
  for (int n = 6; n <= 40; ++n) {
    BigReal e = abs(phi_asymptotic(n, p) - phi);
    if (previous) ASSERT_TRUE(e < *previous) << n;
    previous = std::move(e);
  }
  EXPECT_TRUE(*previous < BigReal::from_string("1e-23", 64));
  // With exponent n/2 - 1 the sequence converges elsewhere.
  EXPECT_TRUE(matches(phi_asymptotic(60, p, PhiVariant::shifted), oracle::kPhiShiftedLimit, -100));
  EXPECT_THROW(phi_asymptotic(3, p), ArgumentError);
}

TEST(ConvergenceTable, Classic) {
  TableSpec spec;
  spec.n_first = 1;
  spec.n_last = 20;
  const auto rows = convergence_table(spec, 199);
  ASSERT_EQ(rows.size(), 20u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].n, static_cast<int>(i + 1));
    EXPECT_FALSE(rows[i].m.has_value());
    if (i > 0) EXPECT_TRUE(rows[i].abs_error < rows[i - 1].abs_error);
  }
}

TEST(ConvergenceTable, GrayAndEmpty) {
  TableSpec spec{Method::gray, 3, 5, 8, 12};
  const auto rows = convergence_table(spec, 199);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows.front().approximant.to_fixed(6), "3.140996");
  EXPECT_EQ(rows.back().approximant.to_fixed(9), "3.141590324");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_TRUE(rows[i].abs_error < rows[i - 1].abs_error);
  }
  spec.n_last = 7;
  EXPECT_TRUE(convergence_table(spec, 199).empty());
  spec = TableSpec{Method::gray, 3, 9, 8, 12};
  EXPECT_THROW(convergence_table(spec, 199), ArgumentError);
  spec = TableSpec{Method::gray, 3, 5, 4, 12};
  EXPECT_THROW(convergence_table(spec, 199), ArgumentError);
}

TEST(ApproxRecord, DigitsCorrect) {
  EXPECT_EQ(gray_term(3, 5, 8, 199).digits_correct(), 3);
  EXPECT_EQ(classic_term(10, 199).digits_correct(), 7);
}

}  // namespace
}  // namespace lucaspi
