#pragma once

// Difference-operator realization of the Bannai-Ito algebra on polynomials.
//
//   K1 = F(x)(1 - R) + G(x)(T+R - 1) + h
//   K2 = 2x + 1/2
//   K3 = {K1, K2} - omega3
//
// with F(x) = (x - rho1)(x - rho2)/x and G(x) = (x - r1 + 1/2)(x - r2 + 1/2)/(x + 1/2).
// Both reflection differences vanish at the pole of their prefactor, so
// K1 maps polynomials to polynomials of the same degree.

#include <array>
#include <cstddef>
#include <string>

#include "bilab/exact.hpp"
#include "bilab/matrix.hpp"
#include "bilab/poly.hpp"
#include "bilab/report.hpp"

namespace bilab {

struct BIParams {
  Rat rho1, rho2, r1, r2;

  Rat h() const { return rho1 + rho2 - r1 - r2 + Rat(1, 2); }
  Rat omega1() const { return Rat(4) * (rho1 * rho2 + r1 * r2); }
  Rat omega2() const { return Rat(2) * (rho1 * rho1 + rho2 * rho2 - r1 * r1 - r2 * r2); }
  Rat omega3() const { return Rat(4) * (rho1 * rho2 - r1 * r2); }
  /// Value of K1^2 + K2^2 + K3^2 in this realization.
  Rat casimir_value() const {
    return Rat(2) * (rho1 * rho1 + rho2 * rho2 + r1 * r1 + r2 * r2) - Rat(1, 4);
  }

  std::string str() const {
    return "(rho1=" + rho1.str() + ", rho2=" + rho2.str() + ", r1=" + r1.str() + ", r2=" + r2.str() + ")";
  }
  friend bool operator==(const BIParams&, const BIParams&) = default;
};

struct StructureConstants {
  Rat omega1, omega2, omega3;
  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;
};

inline StructureConstants structure_constants(const BIParams& P) {
  return {P.omega1(), P.omega2(), P.omega3()};
}

inline Poly k1_apply(const BIParams& P, const Poly& p) {
  const Rat half(1, 2);
  Poly numer_f = Poly({P.rho1 * P.rho2, -(P.rho1 + P.rho2), Rat(1)});
  Poly numer_g = Poly({half - P.r1, Rat(1)}) * Poly({half - P.r2, Rat(1)});
  Poly reflect_diff = poly_divide_exact(p - poly_reflect(p), Rat(0));
  Poly shift_diff = poly_divide_exact(poly_shift_reflect(p) - p, -half);
  return numer_f * reflect_diff + numer_g * shift_diff + p * P.h();
}

inline Poly k2_apply(const BIParams& /*P*/, const Poly& p) {
  return Poly({Rat(1, 2), Rat(2)}) * p;
}

inline Poly k3_apply(const BIParams& P, const Poly& p) {
  return k1_apply(P, k2_apply(P, p)) + k2_apply(P, k1_apply(P, p)) - p * P.omega3();
}

/// Checks the three anticommutation relations on x^0 .. x^maxdeg.
inline VerificationReport check_bi_relations(const BIParams& P, unsigned maxdeg) {
  VerificationReport rep("bi_relations " + P.str());
  auto K1 = [&](const Poly& p) { return k1_apply(P, p); };
  auto K2 = [&](const Poly& p) { return k2_apply(P, p); };
  auto K3 = [&](const Poly& p) { return k3_apply(P, p); };
  const auto w = structure_constants(P);
  for (unsigned j = 0; j <= maxdeg; ++j) {
    Poly xj = Poly::monomial(j);
    Poly k1 = K1(xj), k2 = K2(xj), k3 = K3(xj);
    rep.add_exact("{K1,K2} = K3 + w3", j, (K1(k2) + K2(k1)).str(), (k3 + xj * w.omega3).str());
    rep.add_exact("{K2,K3} = K1 + w1", j, (K2(k3) + K3(k2)).str(), (k1 + xj * w.omega1).str());
    rep.add_exact("{K3,K1} = K2 + w2", j, (K3(k1) + K1(k3)).str(), (k2 + xj * w.omega2).str());
  }
  return rep;
}

/// Applies K1^2 + K2^2 + K3^2 to each monomial and returns the common scalar.
inline Rat casimir_scalar(const BIParams& P, unsigned maxdeg) {
  Rat c;
  for (unsigned j = 0; j <= maxdeg; ++j) {
    Poly xj = Poly::monomial(j);
    Poly k1 = k1_apply(P, xj), k2 = k2_apply(P, xj), k3 = k3_apply(P, xj);
    Poly q = k1_apply(P, k1) + k2_apply(P, k2) + k3_apply(P, k3);
    Rat cj = q.coeff(j);
    if (!(q == xj * cj)) throw NonScalarCasimir("Casimir on x^" + std::to_string(j) + " gives " + q.str());
    if (j == 0) c = cj;
    else if (!(cj == c))
      throw NonScalarCasimir("Casimir scalar " + cj.str() + " on x^" + std::to_string(j) + " differs from " + c.str());
  }
  return c;
}

/// Matrix of K1 on {1, x, ..., x^N}; column j holds the coefficients of K1 x^j.
inline RatMatrix k1_matrix(const BIParams& P, unsigned N) {
  RatMatrix m(N + 1, N + 1);
  for (unsigned j = 0; j <= N; ++j) {
    Poly img = k1_apply(P, Poly::monomial(j));
    for (unsigned i = 0; i <= N; ++i) m(i, j) = img.coeff(i);
  }
  return m;
}

}  // namespace bilab
