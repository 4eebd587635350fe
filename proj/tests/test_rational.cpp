#include <gtest/gtest.h>

#include "ghr/rational.hpp"

using ghr::Rational01;

TEST(Rational, KeepsLowestTerms) {
  Rational01 a(2, 4);
  EXPECT_EQ(a.numerator(), 1u);
  EXPECT_EQ(a.denominator(), 2u);
  EXPECT_EQ(a.str(), "1/2");
  EXPECT_EQ(Rational01(3, 3).str(), "1");
  EXPECT_EQ(Rational01(0, 7).str(), "0");
  EXPECT_EQ(Rational01(0, 7), Rational01::zero());
}

TEST(Rational, ParsesFractionsAndIntegers) {
  EXPECT_EQ(Rational01::parse("1/2"), Rational01(1, 2));
  EXPECT_EQ(Rational01::parse("2/6"), Rational01(1, 3));
  EXPECT_EQ(Rational01::parse("0"), Rational01::zero());
  EXPECT_EQ(Rational01::parse("1"), Rational01::one());
  EXPECT_EQ(Rational01::parse("5/5"), Rational01::one());
}

TEST(Rational, RejectsBadText) {
  for (const char* bad : {"", "3/2", "1/0", "-1/2", "a", "1/", "/2", "0.5", "2"})
    EXPECT_THROW(Rational01::parse(bad), ghr::StructuralError) << bad;
  EXPECT_THROW(Rational01(1, 0), ghr::PreconditionError);
  EXPECT_THROW(Rational01(3, 2), ghr::PreconditionError);
}

TEST(Rational, OrdersExactly) {
  EXPECT_LT(Rational01(1, 3), Rational01(1, 2));
  EXPECT_LT(Rational01(999'999'999, 1'000'000'000), Rational01::one());
  EXPECT_EQ(std::min(Rational01(2, 3), Rational01(3, 4)), Rational01(2, 3));
  EXPECT_EQ(std::max(Rational01(2, 3), Rational01(3, 4)), Rational01(3, 4));
  // Cross products beyond 64 bits.
  Rational01 big(999'999'999'999'999'998ull, 999'999'999'999'999'999ull);
  EXPECT_LT(big, Rational01::one());
  EXPECT_GT(big, Rational01(1, 2));
}

TEST(Rational, RoundTripsThroughText) {
  for (std::uint64_t q = 1; q <= 12; ++q)
    for (std::uint64_t p = 0; p <= q; ++p) {
      Rational01 v(p, q);
      EXPECT_EQ(Rational01::parse(v.str()), v);
    }
}
