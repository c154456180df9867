#pragma once

// Bannai-Ito polynomials B_n(x): three independent constructions
// (three-term recurrence, terminating 4F3 sums, eigenvectors of the
// triangular K1 matrix), ladder operators, the two-diagonal V operator,
// complementary polynomials I_n and the finite Gauss quadrature that
// appears when the recurrence truncates.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "bilab/bi_operator.hpp"
#include "bilab/errors.hpp"
#include "bilab/exact.hpp"
#include "bilab/poly.hpp"
#include "bilab/report.hpp"

namespace bilab {

/// lambda_n = (-1)^n (n + h).
inline Rat eigenvalue(const BIParams& P, unsigned n) {
  return sign_pow(n) * (Rat(static_cast<long>(n)) + P.h());
}

struct RecurrenceCoeffs {
  unsigned n = 0;
  Rat A;
  Rat C;
};

inline RecurrenceCoeffs recurrence_coeffs(const BIParams& P, unsigned n) {
  const Rat nn(static_cast<long>(n));
  const Rat& p1 = P.rho1;
  const Rat& p2 = P.rho2;
  const Rat& r1 = P.r1;
  const Rat& r2 = P.r2;
  const Rat shift = p1 + p2 - r1 - r2;
  Rat den_a = Rat(4) * (nn + shift + Rat(1));
  if (den_a.is_zero())
    throw DegenerateParameters("A_n denominator 4(n+rho1+rho2-r1-r2+1) vanishes at n=" + std::to_string(n));
  RecurrenceCoeffs out{n, {}, {}};
  if (n % 2 == 0) {
    out.A = (nn + 1 + Rat(2) * p1 - Rat(2) * r1) * (nn + 1 + Rat(2) * p1 - Rat(2) * r2) / den_a;
  } else {
    out.A = (nn + 1 + Rat(2) * (p1 + p2 - r1 - r2)) * (nn + 1 + Rat(2) * (p1 + p2)) / den_a;
  }
  if (n == 0) return out;  // C_0 carries the factor n
  Rat den_c = Rat(4) * (nn + shift);
  if (den_c.is_zero())
    throw DegenerateParameters("C_n denominator 4(n+rho1+rho2-r1-r2) vanishes at n=" + std::to_string(n));
  if (n % 2 == 0) {
    out.C = -(nn * (nn - Rat(2) * r1 - Rat(2) * r2)) / den_c;
  } else {
    out.C = -((nn + Rat(2) * p2 - Rat(2) * r2) * (nn + Rat(2) * p2 - Rat(2) * r1)) / den_c;
  }
  return out;
}

/// B_0 .. B_n from B_{k+1} = (x - (rho1 - A_k - C_k)) B_k - A_{k-1} C_k B_{k-1}.
inline std::vector<Poly> bi_recurrence_all(const BIParams& P, unsigned n) {
  std::vector<Poly> out;
  out.reserve(n + 1);
  out.emplace_back(Rat(1));
  Rat prev_a;
  for (unsigned k = 0; k < n; ++k) {
    auto rc = recurrence_coeffs(P, k);
    Poly next = Poly({-(P.rho1 - rc.A - rc.C), Rat(1)}) * out[k];
    if (k > 0) next -= out[k - 1] * (prev_a * rc.C);
    out.push_back(std::move(next));
    prev_a = rc.A;
  }
  return out;
}

inline Poly bi_recurrence(const BIParams& P, unsigned n) { return bi_recurrence_all(P, n).back(); }

namespace detail {

struct LowerParam {
  Rat value;
  const char* name;
};

inline Rat checked_pochhammer(const LowerParam& b, unsigned k) {
  Rat v = pochhammer(b.value, k);
  if (v.is_zero())
    throw DegenerateParameters("lower parameter " + std::string(b.name) + " = " + b.value.str() +
                               " makes (" + b.name + ")_" + std::to_string(k) + " vanish");
  return v;
}

// sum_{k=0}^{terms} (-terms)_k (a2)_k (x + s1)_k (-x + s2)_k / ((b1)_k (b2)_k (b3)_k k!)
inline Poly terminating_4f3(unsigned terms, const Rat& a2, const Rat& s1, const Rat& s2,
                            const LowerParam& b1, const LowerParam& b2, const LowerParam& b3) {
  const Rat a1 = -Rat(static_cast<long>(terms));
  Poly sum;
  Poly up1(Rat(1)), up2(Rat(1));
  for (unsigned k = 0; k <= terms; ++k) {
    if (k > 0) {
      up1 = up1 * Poly({s1 + Rat(static_cast<long>(k - 1)), Rat(1)});
      up2 = up2 * Poly({s2 + Rat(static_cast<long>(k - 1)), Rat(-1)});
    }
    Rat c = pochhammer(a1, k) * pochhammer(a2, k);
    c /= checked_pochhammer(b1, k) * checked_pochhammer(b2, k) * checked_pochhammer(b3, k) *
         pochhammer(Rat(1), k);
    sum += up1 * up2 * c;
  }
  return sum;
}

}  // namespace detail

/// Monic normalization c_n of the 4F3 expression.
inline Rat bi_normalization(const BIParams& P, unsigned n) {
  const unsigned m = n / 2, p = n % 2;
  const Rat half(1, 2);
  Rat den = pochhammer(Rat(static_cast<long>(m)) + P.h() + half, m + p);
  if (den.is_zero())
    throw DegenerateParameters("normalization denominator (m+h+1/2)_(m+p) vanishes at n=" + std::to_string(n));
  Rat num = pochhammer(Rat(1) - P.r1 - P.r2, m) * pochhammer(P.rho1 - P.r1 + half, m + p) *
            pochhammer(P.rho2 - P.r1 + half, m + p);
  return sign_pow(p) * num / den;
}

/// B_n from the parity-split pair of terminating 4F3 series.
inline Poly bi_hypergeometric(const BIParams& P, unsigned n) {
  const Rat half(1, 2), three_half(3, 2);
  const Rat nn(static_cast<long>(n));
  const Rat& h = P.h();
  const detail::LowerParam b1{Rat(1) - P.r1 - P.r2, "1-r1-r2"};
  const detail::LowerParam b2{P.rho1 - P.r1 + half, "rho1-r1+1/2"};
  const detail::LowerParam b3{P.rho2 - P.r1 + half, "rho2-r1+1/2"};
  const detail::LowerParam b2s{P.rho1 - P.r1 + three_half, "rho1-r1+3/2"};
  const detail::LowerParam b3s{P.rho2 - P.r1 + three_half, "rho2-r1+3/2"};
  const Poly lin({half - P.r1, Rat(1)});  // x - r1 + 1/2
  const Rat s_first = half - P.r1, s_second = three_half - P.r1, s_neg = half - P.r1;

  Poly body;
  if (n % 2 == 0) {
    body = detail::terminating_4f3(n / 2, (nn + 1) / Rat(2) + h, s_first, s_neg, b1, b2, b3);
    if (n > 0) {
      Poly tail = detail::terminating_4f3(n / 2 - 1, (nn + 1) / Rat(2) + h, s_second, s_neg, b1, b2s, b3s);
      Rat pref = (nn / Rat(2)) / (detail::checked_pochhammer(b2, 1) * detail::checked_pochhammer(b3, 1));
      body += lin * tail * pref;
    }
  } else {
    const unsigned terms = (n - 1) / 2;
    body = detail::terminating_4f3(terms, nn / Rat(2) + h, s_first, s_neg, b1, b2, b3);
    Poly tail = detail::terminating_4f3(terms, (nn + 2) / Rat(2) + h, s_second, s_neg, b1, b2s, b3s);
    Rat pref = -(nn / Rat(2) + h) / (detail::checked_pochhammer(b2, 1) * detail::checked_pochhammer(b3, 1));
    body += lin * tail * pref;
  }
  return body * bi_normalization(P, n);
}

/// Parameter-level screen for the 4F3 route up to degree nmax, reporting the
/// first vanishing quantity in a fixed order (lower parameters, then c_n).
inline void validate_hypergeometric(const BIParams& P, unsigned nmax) {
  const Rat half(1, 2);
  const detail::LowerParam lower[] = {
      {Rat(1) - P.r1 - P.r2, "1-r1-r2"},
      {P.rho1 - P.r1 + half, "rho1-r1+1/2"},
      {P.rho2 - P.r1 + half, "rho2-r1+1/2"},
  };
  detail::checked_pochhammer(lower[0], nmax / 2);
  detail::checked_pochhammer(lower[1], (nmax + 1) / 2);
  detail::checked_pochhammer(lower[2], (nmax + 1) / 2);
  for (unsigned n = 0; n <= nmax; ++n) bi_normalization(P, n);
}

/// Monic eigenvector of the triangular K1 matrix for lambda_n, by back substitution.
inline Poly bi_from_operator(const BIParams& P, unsigned n) {
  RatMatrix m = k1_matrix(P, n);
  const Rat lam = m(n, n);
  std::vector<Rat> v(n + 1);
  v[n] = Rat(1);
  for (unsigned i = n; i-- > 0;) {
    Rat pivot = m(i, i) - lam;
    if (pivot.is_zero())
      throw DegenerateSpectrum("lambda_" + std::to_string(n) + " = " + lam.str() + " repeats lambda_" +
                               std::to_string(i));
    Rat acc;
    for (unsigned j = i + 1; j <= n; ++j) acc += m(i, j) * v[j];
    v[i] = -acc / pivot;
  }
  return Poly(std::move(v));
}

/// x_s = (-1)^s (s/2 + rho1 + 1/4) - 1/4.
inline Rat grid_point(const Rat& rho1, unsigned s) {
  return sign_pow(s) * (Rat(static_cast<long>(s), 2) + rho1 + Rat(1, 4)) - Rat(1, 4);
}
inline Rat grid_point(const BIParams& P, unsigned s) { return grid_point(P.rho1, s); }

enum class Ladder { Plus, Minus };

/// K+ = (K2 + K3)(K1 - 1/2) - (w2 + w3)/2,  K- = (K2 - K3)(K1 + 1/2) + (w2 - w3)/2.
inline Poly ladder_apply(const BIParams& P, Ladder sign, const Poly& p) {
  const Rat half(1, 2);
  if (sign == Ladder::Plus) {
    Poly t = k1_apply(P, p) - p * half;
    return k2_apply(P, t) + k3_apply(P, t) - p * ((P.omega2() + P.omega3()) / Rat(2));
  }
  Poly t = k1_apply(P, p) + p * half;
  return k2_apply(P, t) - k3_apply(P, t) + p * ((P.omega2() - P.omega3()) / Rat(2));
}

/// Ladder coefficients for B_n. Only the pair matching the parity of n is
/// filled: (alpha0, beta0) for even n, (alpha1, beta1) for odd n.
struct LadderCoeffs {
  unsigned n = 0;
  Rat alpha0, alpha1, beta0, beta1;

  const Rat& alpha() const { return n % 2 == 0 ? alpha0 : alpha1; }
  const Rat& beta() const { return n % 2 == 0 ? beta0 : beta1; }
};

inline LadderCoeffs ladder_coeffs(const BIParams& P, unsigned n) {
  const Rat nn(static_cast<long>(n)), half(1, 2);
  const Rat h = P.h();
  LadderCoeffs out;
  out.n = n;
  auto den = [&] {
    Rat d = nn + h - half;
    if (d.is_zero()) throw DegenerateParameters("ladder denominator n+h-1/2 vanishes at n=" + std::to_string(n));
    return d;
  };
  if (n % 2 == 0) {
    out.alpha0 = n == 0 ? Rat(0)
                        : Rat(2) * nn * (nn / Rat(2) + P.rho1 + P.rho2) * (P.r1 + P.r2 - nn / Rat(2)) *
                              ((nn - 1) / Rat(2) + h) / den();
    out.beta0 = Rat(4) * (nn + h + half);
  } else {
    out.alpha1 = Rat(-4) * (nn + h + half);
    const Rat n2 = nn / Rat(2);
    out.beta1 = Rat(4) * (P.rho1 - P.r1 + n2) * (P.rho2 - P.r1 + n2) * (P.rho1 - P.r2 + n2) *
                (P.rho2 - P.r2 + n2) / den();
  }
  return out;
}

/// V = K+ (K1 + 1/2) + K- (K1 - 1/2).
inline Poly v_apply_ladder(const BIParams& P, const Poly& p) {
  const Rat half(1, 2);
  Poly k1 = k1_apply(P, p);
  return ladder_apply(P, Ladder::Plus, k1 + p * half) + ladder_apply(P, Ladder::Minus, k1 - p * half);
}

/// V = 2 K2 (K1^2 - 1/4) - w3 K1 - w2/2.
inline Poly v_apply_closed(const BIParams& P, const Poly& p) {
  Poly k1 = k1_apply(P, p);
  Poly inner = k1_apply(P, k1) - p * Rat(1, 4);
  return k2_apply(P, inner) * Rat(2) - k1 * P.omega3() - p * (P.omega2() / Rat(2));
}

/// Two-diagonal action of V on B_n predicted by the ladder coefficients.
inline Poly v_on_bn_two_diagonal(const BIParams& P, const std::vector<Poly>& B, unsigned n) {
  const Rat half(1, 2);
  const Rat lam = eigenvalue(P, n);
  const auto lc = ladder_coeffs(P, n);
  Poly below = n > 0 ? B[n - 1] : Poly();
  if (n % 2 == 0) return below * ((lam + half) * lc.alpha0) + B[n + 1] * ((lam - half) * lc.beta0);
  return below * ((lam - half) * lc.beta1) + B[n + 1] * ((lam + half) * lc.alpha1);
}

/// Diagonal form [(lambda_n^2 - 1/4)(4x + 1) - w3 lambda_n - w2/2] B_n.
inline Poly v_on_bn_multiplicative(const BIParams& P, const Poly& bn, unsigned n) {
  const Rat lam = eigenvalue(P, n);
  const Rat q = lam * lam - Rat(1, 4);
  Poly factor({q - P.omega3() * lam - P.omega2() / Rat(2), Rat(4) * q});
  return factor * bn;
}

/// I_n = (B_{n+1} - (B_{n+1}(rho1)/B_n(rho1)) B_n) / (x - rho1).
inline Poly complementary_bi(const BIParams& P, unsigned n) {
  auto B = bi_recurrence_all(P, n + 1);
  Rat bn_at = poly_eval(B[n], P.rho1);
  if (bn_at.is_zero())
    throw DegenerateParameters("B_" + std::to_string(n) + "(rho1) = 0; complementary polynomial undefined");
  Poly numer = B[n + 1] - B[n] * (poly_eval(B[n + 1], P.rho1) / bn_at);
  return poly_divide_exact(numer, P.rho1);
}

struct QuadratureNode {
  unsigned s = 0;        // grid index the node was matched to
  double grid = 0;       // x_s
  double node = 0;       // Jacobi-matrix eigenvalue
  double weight = 0;     // squared first eigenvector component
};

/// Gauss quadrature of the truncated recurrence (A_N = 0) on N+1 nodes.
/// Nodes are ordered by the grid index they match.
inline std::vector<QuadratureNode> discrete_weights(const BIParams& P, unsigned N) {
  std::vector<RecurrenceCoeffs> rc;
  for (unsigned k = 0; k <= N; ++k) rc.push_back(recurrence_coeffs(P, k));
  if (!rc[N].A.is_zero())
    throw NotFinitelyOrthogonal("A_" + std::to_string(N) + " = " + rc[N].A.str() + " does not truncate");
  for (unsigned k = 1; k <= N; ++k) {
    Rat u = rc[k - 1].A * rc[k].C;
    if (u.sign() <= 0)
      throw NotFinitelyOrthogonal("A_" + std::to_string(k - 1) + " C_" + std::to_string(k) + " = " + u.str() +
                                  " is not positive");
  }
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(N + 1, N + 1);
  for (unsigned k = 0; k <= N; ++k) {
    J(k, k) = (P.rho1 - rc[k].A - rc[k].C).to_float();
    if (k > 0) J(k, k - 1) = J(k - 1, k) = std::sqrt((rc[k - 1].A * rc[k].C).to_float());
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  std::vector<QuadratureNode> out(N + 1);
  std::vector<bool> used(N + 1, false);
  for (unsigned e = 0; e <= N; ++e) {
    double node = es.eigenvalues()(e);
    unsigned best = 0;
    double best_d = INFINITY;
    for (unsigned s = 0; s <= N; ++s) {
      double d = std::abs(grid_point(P, s).to_float() - node);
      if (!used[s] && d < best_d) {
        best_d = d;
        best = s;
      }
    }
    used[best] = true;
    double v0 = es.eigenvectors()(0, e);
    out[best] = {best, grid_point(P, best).to_float(), node, v0 * v0};
  }
  return out;
}

/// Exact Christoffel weights w_s = 1 / sum_k B_k(x_s)^2 / (u_1 ... u_k), u_k = A_{k-1} C_k.
inline std::vector<Rat> christoffel_weights(const BIParams& P, unsigned N) {
  auto B = bi_recurrence_all(P, N);
  std::vector<Rat> norms(N + 1);
  norms[0] = Rat(1);
  Rat prev_a = recurrence_coeffs(P, 0).A;
  for (unsigned k = 1; k <= N; ++k) {
    auto rc = recurrence_coeffs(P, k);
    norms[k] = norms[k - 1] * prev_a * rc.C;
    prev_a = rc.A;
  }
  std::vector<Rat> w(N + 1);
  for (unsigned s = 0; s <= N; ++s) {
    Rat x = grid_point(P, s), acc;
    for (unsigned k = 0; k <= N; ++k) {
      Rat b = poly_eval(B[k], x);
      acc += b * b / norms[k];
    }
    w[s] = Rat(1) / acc;
  }
  return w;
}

/// Finite orthogonality under truncation: nodes against the grid, weight
/// positivity and normalization, float and exact orthogonality.
inline VerificationReport check_finite_orthogonality(const BIParams& P, unsigned N) {
  VerificationReport rep("finite_orthogonality " + P.str() + " N=" + std::to_string(N));
  auto nodes = discrete_weights(P, N);
  auto B = bi_recurrence_all(P, N);
  auto exact_w = christoffel_weights(P, N);
  double total = 0;
  for (const auto& q : nodes) {
    rep.add_residual("node = x_s", q.s, std::abs(q.node - q.grid), 1e-10);
    rep.add_result("weight > 0", q.s, q.weight > 0, std::to_string(q.weight), "> 0");
    rep.add_residual("weight = exact Christoffel weight", q.s, std::abs(q.weight - exact_w[q.s].to_float()), 1e-10);
    total += q.weight;
  }
  rep.add_residual("sum of weights = 1", N, std::abs(total - 1.0), 1e-10);
  std::vector<std::vector<double>> vals(N + 1, std::vector<double>(N + 1));
  std::vector<std::vector<Rat>> exact_vals(N + 1, std::vector<Rat>(N + 1));
  for (unsigned k = 0; k <= N; ++k)
    for (unsigned s = 0; s <= N; ++s) {
      exact_vals[k][s] = poly_eval(B[k], grid_point(P, s));
      vals[k][s] = exact_vals[k][s].to_float();
    }
  auto inner = [&](unsigned a, unsigned b) {
    double acc = 0;
    for (const auto& q : nodes) acc += q.weight * vals[a][q.s] * vals[b][q.s];
    return acc;
  };
  for (unsigned m = 0; m <= N; ++m)
    for (unsigned n = m + 1; n <= N; ++n) {
      // Normalized (cosine) form: raw values of B_n grow like n!-scale.
      double c = inner(m, n) / std::sqrt(inner(m, m) * inner(n, n));
      rep.add_residual("sum w B_m B_n = 0 (normalized, m=" + std::to_string(m) + ")", n, std::abs(c), 1e-9);
      Rat ex;
      for (unsigned s = 0; s <= N; ++s) ex += exact_w[s] * exact_vals[m][s] * exact_vals[n][s];
      rep.add_exact("exact sum w B_m B_n (m=" + std::to_string(m) + ")", n, ex.str(), "0");
    }
  return rep;
}

/// Recurrence = 4F3 = operator eigenvector for n <= nmax, and the eigen-equation
/// K1 B_n = lambda_n B_n for n <= eig_nmax.
inline VerificationReport check_polynomial_routes(const BIParams& P, unsigned nmax, unsigned eig_nmax) {
  VerificationReport rep("bi_polynomials " + P.str());
  auto B = bi_recurrence_all(P, std::max(nmax, eig_nmax));
  for (unsigned n = 0; n <= nmax; ++n) {
    rep.add_exact("recurrence = 4F3", n, B[n].str(), bi_hypergeometric(P, n).str());
    rep.add_exact("recurrence = operator eigenvector", n, B[n].str(), bi_from_operator(P, n).str());
  }
  for (unsigned n = 0; n <= eig_nmax; ++n)
    rep.add_exact("K1 B_n = lambda_n B_n", n, k1_apply(P, B[n]).str(), (B[n] * eigenvalue(P, n)).str());
  return rep;
}

/// Ladder actions and V on B_0..B_nmax; the relations {K1, K+-} = +-K+- and
/// the equality of both V forms on monomials up to maxdeg.
inline VerificationReport check_ladder_and_v(const BIParams& P, unsigned nmax, unsigned maxdeg) {
  VerificationReport rep("ladder_v " + P.str());
  auto B = bi_recurrence_all(P, nmax + 1);
  for (unsigned n = 0; n <= nmax; ++n) {
    const auto lc = ladder_coeffs(P, n);
    const Poly below = n > 0 ? B[n - 1] : Poly();
    Poly kp = ladder_apply(P, Ladder::Plus, B[n]);
    Poly km = ladder_apply(P, Ladder::Minus, B[n]);
    if (n % 2 == 0) {
      rep.add_exact("K+ B_n = alpha0 B_(n-1)", n, kp.str(), (below * lc.alpha0).str());
      rep.add_exact("K- B_n = beta0 B_(n+1)", n, km.str(), (B[n + 1] * lc.beta0).str());
    } else {
      rep.add_exact("K+ B_n = alpha1 B_(n+1)", n, kp.str(), (B[n + 1] * lc.alpha1).str());
      rep.add_exact("K- B_n = beta1 B_(n-1)", n, km.str(), (below * lc.beta1).str());
    }
    Poly v = v_apply_ladder(P, B[n]);
    rep.add_exact("V B_n two-diagonal", n, v.str(), v_on_bn_two_diagonal(P, B, n).str());
    rep.add_exact("V B_n multiplicative", n, v.str(), v_on_bn_multiplicative(P, B[n], n).str());
  }
  for (unsigned j = 0; j <= maxdeg; ++j) {
    Poly xj = Poly::monomial(j);
    Poly k1 = k1_apply(P, xj);
    Poly kp = ladder_apply(P, Ladder::Plus, xj);
    Poly km = ladder_apply(P, Ladder::Minus, xj);
    rep.add_exact("{K1,K+} = K+", j, (k1_apply(P, kp) + ladder_apply(P, Ladder::Plus, k1)).str(), kp.str());
    rep.add_exact("{K1,K-} = -K-", j, (k1_apply(P, km) + ladder_apply(P, Ladder::Minus, k1)).str(), (-km).str());
    rep.add_exact("V via ladders = V closed form", j, v_apply_ladder(P, xj).str(), v_apply_closed(P, xj).str());
  }
  return rep;
}

}  // namespace bilab
