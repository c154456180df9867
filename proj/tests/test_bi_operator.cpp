#include <gtest/gtest.h>

#include "bilab/bi_operator.hpp"
#include "bilab/random.hpp"

using bilab::BIParams;
using bilab::Poly;
using bilab::Rat;

namespace {

const BIParams kP1{Rat(1), Rat(2), Rat(1, 2), Rat(1, 4)};

// Pointwise K1 from the rational-function form, at x0 away from 0 and -1/2.
Rat k1_pointwise(const BIParams& P, const Poly& p, const Rat& x0) {
  const Rat half(1, 2);
  Rat f = (x0 - P.rho1) * (x0 - P.rho2) / x0;
  Rat g = (x0 - P.r1 + half) * (x0 - P.r2 + half) / (x0 + half);
  Rat px = bilab::poly_eval(p, x0);
  return f * (px - bilab::poly_eval(p, -x0)) + g * (bilab::poly_eval(p, -x0 - Rat(1)) - px) + P.h() * px;
}

BIParams random_params(bilab::TupleGenerator& g) {
  return {g.rational(20, 9), g.rational(20, 9), g.rational(20, 9), g.rational(20, 9)};
}

}  // namespace

TEST(BIOperator, K1Examples) {
  EXPECT_EQ(bilab::k1_apply(kP1, Poly(Rat(1))), Poly(Rat(11, 4)));
  EXPECT_EQ(bilab::k1_apply(kP1, Poly::x()), Poly({Rat(4), Rat(-15, 4)}));
  Poly b1({Rat(-8, 13), Rat(1)});
  EXPECT_EQ(bilab::k1_apply(kP1, b1), b1 * Rat(-15, 4));
}

TEST(BIOperator, K1MatchesPointwiseOracle) {
  bilab::TupleGenerator g(21);
  for (int t = 0; t < 10; ++t) {
    BIParams P = random_params(g);
    for (unsigned d = 0; d <= 8; ++d) {
      Poly p = Poly::monomial(d, Rat(1)) + Poly({g.rational(5, 3), g.rational(5, 3)});
      Poly img = bilab::k1_apply(P, p);
      for (long x = 1; x <= 4; ++x) {
        Rat x0(x, 3);
        EXPECT_EQ(bilab::poly_eval(img, x0), k1_pointwise(P, p, x0));
      }
    }
  }
}

TEST(BIOperator, K2AndK3) {
  EXPECT_EQ(bilab::k2_apply(kP1, Poly(Rat(1))), Poly({Rat(1, 2), Rat(2)}));
  EXPECT_EQ(bilab::k2_apply(kP1, Poly::x()), Poly({Rat(0), Rat(1, 2), Rat(2)}));
  EXPECT_TRUE(bilab::k2_apply(kP1, Poly()).is_zero());
  Poly k2one = bilab::k2_apply(kP1, Poly(Rat(1)));
  Poly expect = bilab::k1_apply(kP1, k2one) + k2one * Rat(11, 4) - Poly(Rat(15, 2));
  EXPECT_EQ(bilab::k3_apply(kP1, Poly(Rat(1))), expect);
  EXPECT_TRUE(bilab::k3_apply(kP1, Poly()).is_zero());
  BIParams spin{Rat(0), Rat(3, 7), Rat(0), Rat(3, 7)};
  Poly one(Rat(1));
  EXPECT_EQ(bilab::k3_apply(spin, one),
            bilab::k1_apply(spin, bilab::k2_apply(spin, one)) + bilab::k2_apply(spin, bilab::k1_apply(spin, one)));
}

TEST(BIOperator, StructureConstants) {
  auto w = bilab::structure_constants(kP1);
  EXPECT_EQ(w.omega1, Rat(17, 2));
  EXPECT_EQ(w.omega2, Rat(75, 8));
  EXPECT_EQ(w.omega3, Rat(15, 2));
  bilab::StructureConstants zero{Rat(0), Rat(0), Rat(0)};
  EXPECT_EQ(bilab::structure_constants({Rat(0), Rat(5, 3), Rat(0), Rat(5, 3)}), zero);
  EXPECT_EQ(bilab::structure_constants({}), zero);
}

TEST(BIOperator, RelationsP1) {
  auto rep = bilab::check_bi_relations(kP1, 10);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.checked(), 33u);
  EXPECT_TRUE(bilab::check_bi_relations({Rat(0), Rat(2, 5), Rat(0), Rat(2, 5)}, 10).ok());
  bilab::TupleGenerator g(1);
  EXPECT_TRUE(bilab::check_bi_relations(random_params(g), 0).ok());
}

TEST(BIOperator, Casimir) {
  EXPECT_EQ(bilab::casimir_scalar(kP1, 8), Rat(83, 8));
  EXPECT_EQ(bilab::casimir_scalar({}, 6), Rat(-1, 4));
  Rat a(3, 5);
  EXPECT_EQ(bilab::casimir_scalar({Rat(0), a, Rat(0), a}, 6), Rat(4) * a * a - Rat(1, 4));
}

TEST(BIOperator, K1Matrix) {
  auto m = bilab::k1_matrix(kP1, 1);
  EXPECT_EQ(m(0, 0), Rat(11, 4));
  EXPECT_EQ(m(0, 1), Rat(4));
  EXPECT_EQ(m(1, 0), Rat(0));
  EXPECT_EQ(m(1, 1), Rat(-15, 4));
  auto m0 = bilab::k1_matrix(kP1, 0);
  EXPECT_EQ(m0(0, 0), kP1.h());
  auto m3 = bilab::k1_matrix(kP1, 3);
  EXPECT_TRUE(m3.is_upper_triangular());
  const Rat diag[] = {Rat(11, 4), Rat(-15, 4), Rat(19, 4), Rat(-23, 4)};
  for (unsigned i = 0; i < 4; ++i) EXPECT_EQ(m3(i, i), diag[i]);
}

TEST(BIOperatorProperty, DegreePreservedAndRelationsHold) {
  bilab::TupleGenerator g(7);
  for (int t = 0; t < 15; ++t) {
    BIParams P = random_params(g);
    if (P.h().is_zero()) continue;
    for (unsigned d = 0; d <= 30; d += 5) {
      Poly p = Poly::monomial(d) + (d > 0 ? Poly({g.rational(9, 4)}) : Poly());
      // Leading coefficient of K1 x^d is (-1)^d (d + h).
      Rat lead = bilab::sign_pow(d) * (Rat(static_cast<long>(d)) + P.h());
      if (lead.is_zero()) continue;
      EXPECT_EQ(bilab::k1_apply(P, p).degree(), static_cast<int>(d));
    }
    EXPECT_TRUE(bilab::check_bi_relations(P, 6).ok()) << P.str();
    EXPECT_EQ(bilab::casimir_scalar(P, 6), P.casimir_value());
  }
}
