#include <gtest/gtest.h>

#include "bilab/random.hpp"
#include "bilab/sl1.hpp"

using bilab::ModuleParams;
using bilab::Poly;
using bilab::Rat;

TEST(Sl1, RhoSquared) {
  ModuleParams M(1, Rat(1, 4));
  EXPECT_EQ(bilab::rho_squared(M, 1), Rat(3, 2));
  EXPECT_EQ(bilab::rho_squared(M, 0), Rat(0));
  EXPECT_EQ(bilab::rho_squared(M, 2), Rat(2));
  for (unsigned n = 0; n <= 30; ++n)
    EXPECT_EQ(bilab::rho_squared(M, n + 1) - bilab::rho_squared(M, n), Rat(1) + Rat(2) * M.mu * bilab::sign_pow(n));
}

TEST(Sl1, ParamsValidated) {
  EXPECT_THROW(ModuleParams(0, Rat(1)), bilab::InvalidParameters);
  EXPECT_THROW(ModuleParams(1, Rat(-1, 2)), bilab::InvalidParameters);
}

TEST(Sl1, ModuleRelations) {
  auto rep = bilab::module_bilinear_check(ModuleParams(1, Rat(1, 4)), 10);
  EXPECT_TRUE(rep.ok()) << rep.to_json(true).dump(2);
  EXPECT_EQ(rep.notes().front().second, "-1/4");
  auto rep2 = bilab::module_bilinear_check(ModuleParams(-1, Rat(1, 3)), 10);
  EXPECT_TRUE(rep2.ok());
  EXPECT_EQ(rep2.notes().front().second, "1/3");
}

TEST(Sl1, BosonLimit) {
  bilab::Sl1Module mod(ModuleParams(1, Rat(0)));
  for (unsigned n = 0; n <= 10; ++n) {
    auto v = bilab::StateVector::basis(n);
    EXPECT_EQ(mod.jminus(mod.jplus(v)) - mod.jplus(mod.jminus(v)), v);
  }
}

TEST(Sl1, OspCasimir) {
  auto rep = bilab::osp_casimir_check(ModuleParams(1, Rat(1, 4)), 8);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.notes().front().second, "1/16");
  EXPECT_TRUE(bilab::osp_casimir_check(ModuleParams(-1, Rat(1, 4)), 8).ok());
  EXPECT_TRUE(bilab::osp_casimir_check(ModuleParams(1, Rat(0)), 8).ok());
}

TEST(Sl1Property, RandomModules) {
  bilab::TupleGenerator g(17);
  for (int t = 0; t < 20; ++t) {
    ModuleParams M(g.integer(0, 1) ? 1 : -1, g.above_minus_half(9, 4));
    EXPECT_TRUE(bilab::module_bilinear_check(M, 12).ok()) << M.str();
    EXPECT_TRUE(bilab::osp_casimir_check(M, 12).ok()) << M.str();
  }
}

TEST(Dunkl, Derivative) {
  EXPECT_EQ(bilab::dunkl_derivative(Rat(2, 7), Poly::monomial(2)), Poly({Rat(0), Rat(2)}));
  Rat nu(1, 3);
  EXPECT_EQ(bilab::dunkl_derivative(nu, Poly::monomial(3)), Poly::monomial(2, Rat(3) + Rat(2) * nu));
  EXPECT_EQ(bilab::dunkl_derivative(Rat(1, 4), Poly::x()), Poly(Rat(3, 2)));
}

TEST(Dunkl, Commutator) {
  Rat nu(1, 4);
  Poly x2 = Poly::monomial(2);
  Poly lhs = bilab::dunkl_derivative(nu, Poly::x() * x2) - Poly::x() * bilab::dunkl_derivative(nu, x2);
  EXPECT_EQ(lhs, x2 * Rat(3, 2));
  EXPECT_TRUE(bilab::dunkl_commutator_check(Rat(0), 12).ok());
  auto rep = bilab::dunkl_commutator_check(Rat(1, 3), 15);
  EXPECT_TRUE(rep.ok()) << rep.to_json(true).dump(2);
  EXPECT_THROW(bilab::dunkl_commutator_check(Rat(-1), 3), bilab::InvalidParameters);
}
