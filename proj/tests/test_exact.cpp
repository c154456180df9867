#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "bilab/exact.hpp"

using bilab::GRat;
using bilab::Rat;

TEST(Rat, CanonicalForm) {
  Rat r = bilab::rat_make(2, 4);
  EXPECT_EQ(r.str(), "1/2");
  EXPECT_EQ(bilab::rat_make(-3, -6).str(), "1/2");
  EXPECT_EQ(bilab::rat_make(3, -6).str(), "-1/2");
  EXPECT_EQ(bilab::rat_make(0, 5).str(), "0");
  EXPECT_EQ(bilab::rat_make(6, 3).str(), "2");
}

TEST(Rat, ZeroDenominatorRejected) {
  EXPECT_THROW(bilab::rat_make(1, 0), bilab::InvalidScalar);
  EXPECT_THROW(Rat(1) / Rat(0), bilab::InvalidScalar);
}

TEST(Rat, Parse) {
  EXPECT_EQ(Rat::parse("3/4"), bilab::rat_make(3, 4));
  EXPECT_EQ(Rat::parse("-7"), Rat(-7));
  EXPECT_EQ(Rat::parse("10/-4"), bilab::rat_make(-5, 2));
  EXPECT_THROW(Rat::parse("0.5"), bilab::InvalidScalar);
  EXPECT_THROW(Rat::parse("1/0"), bilab::InvalidScalar);
  EXPECT_THROW(Rat::parse(""), bilab::InvalidScalar);
  EXPECT_THROW(Rat::parse("abc"), bilab::InvalidScalar);
}

TEST(Rat, FieldAxiomsRandomized) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
  for (int i = 0; i < 300; ++i) {
    Rat a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
    EXPECT_EQ(a - a, Rat(0));
  }
}

TEST(Rat, FloatConversionRoundsCorrectly) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000000);
  for (int i = 0; i < 500; ++i) {
    long p = num(rng), q = den(rng);
    // Both operands are exact doubles, so IEEE division is correctly rounded.
    EXPECT_EQ(Rat(p, q).to_float(), static_cast<double>(p) / static_cast<double>(q));
  }
  EXPECT_EQ(Rat(1, 3).to_float(), 1.0 / 3.0);
  EXPECT_EQ(Rat(0).to_float(), 0.0);
}

TEST(Rat, Ordering) {
  EXPECT_LT(Rat(1, 3), Rat(1, 2));
  EXPECT_GT(Rat(-1, 3), Rat(-1, 2));
  EXPECT_EQ(Rat(-2, 3).sign(), -1);
  EXPECT_TRUE(Rat(4, 2).is_integer());
}

TEST(Rat, SignPow) {
  EXPECT_EQ(bilab::sign_pow(0), Rat(1));
  EXPECT_EQ(bilab::sign_pow(3), Rat(-1));
  EXPECT_EQ(bilab::pow(Rat(2, 3), 3), Rat(8, 27));
}

TEST(GRat, Arithmetic) {
  GRat i = GRat::i();
  EXPECT_EQ(i * i, GRat(Rat(-1)));
  GRat z(Rat(1, 2), Rat(1));
  EXPECT_EQ(z.str(), "1/2+i");
  EXPECT_EQ((-i).str(), "-i");
  EXPECT_EQ(z * z.conj(), GRat(Rat(5, 4)));
}
