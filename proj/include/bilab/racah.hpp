#pragma once

// Racah problem for three sl_{-1}(2) discrete-series modules (all epsilon_i = +1).
//
// Exact side: the (N+1)-dimensional Bannai-Ito representation in the basis
// diagonalizing K3 = -Q12. K1 is stored monic-conjugated (superdiagonal 1,
// subdiagonal U_k^2 = B_{k-1} D_k) so that no square roots are needed.
//
// Float side: the intermediate Casimirs built directly on a fixed-J0 slice of
// the threefold tensor product, used as an independent oracle.
//
// The total Casimir eigenvalue on the relevant block is q4 = -mu with
// mu = (-1)^N mu4; for odd N the block with q4 = -mu4 does not close.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "bilab/bi_operator.hpp"
#include "bilab/bi_poly.hpp"
#include "bilab/errors.hpp"
#include "bilab/exact.hpp"
#include "bilab/matrix.hpp"
#include "bilab/report.hpp"
#include "bilab/sl1.hpp"

namespace bilab {

struct RacahParams {
  Rat mu1, mu2, mu3;
  unsigned N = 0;

  RacahParams() = default;
  RacahParams(Rat m1, Rat m2, Rat m3, unsigned n) : mu1(std::move(m1)), mu2(std::move(m2)), mu3(std::move(m3)), N(n) {
    const Rat lo(-1, 2);
    if (!(mu1 > lo) || !(mu2 > lo) || !(mu3 > lo))
      throw InvalidParameters("each mu_i must exceed -1/2, got " + str());
  }

  Rat mu4() const { return mu1 + mu2 + mu3 + Rat(static_cast<long>(N) + 1); }
  Rat mu() const { return sign_pow(N) * mu4(); }
  Rat omega1() const { return Rat(2) * (mu1 * mu() + mu2 * mu3); }
  Rat omega2() const { return Rat(2) * (mu1 * mu3 + mu2 * mu()); }
  Rat omega3() const { return Rat(2) * (mu1 * mu2 + mu3 * mu()); }
  Rat casimir() const { return mu1 * mu1 + mu2 * mu2 + mu3 * mu3 + mu4() * mu4() - Rat(1, 4); }

  /// BI parameters under rho1 = (mu2+mu3)/2, rho2 = (mu1+mu)/2, r1 = (mu3-mu2)/2, r2 = (mu-mu1)/2.
  BIParams identifications() const {
    const Rat half(1, 2);
    return {(mu2 + mu3) * half, (mu1 + mu()) * half, (mu3 - mu2) * half, (mu() - mu1) * half};
  }

  /// (-1)^s (s + mu2 + mu3 + 1/2).
  Rat k1_eigenvalue(unsigned s) const { return sign_pow(s) * (Rat(static_cast<long>(s)) + mu2 + mu3 + Rat(1, 2)); }
  /// (-1)^k (k + mu1 + mu2 + 1/2).
  Rat k3_eigenvalue(unsigned k) const { return sign_pow(k) * (Rat(static_cast<long>(k)) + mu1 + mu2 + Rat(1, 2)); }

  std::string str() const {
    return "(mu1=" + mu1.str() + ", mu2=" + mu2.str() + ", mu3=" + mu3.str() + ", N=" + std::to_string(N) + ")";
  }
};

struct BkDk {
  Rat B, D;
};

/// B_k and D_k; the D_k denominator is 2(k + mu1 + mu2) and D_0 = 0.
inline BkDk bk_dk(const RacahParams& RP, unsigned k) {
  const Rat kk(static_cast<long>(k));
  const Rat &m1 = RP.mu1, &m2 = RP.mu2, &m3 = RP.mu3;
  const Rat mu = RP.mu();
  BkDk out;
  if (k % 2 == 0) {
    out.B = (kk + Rat(2) * m2 + 1) * (kk + m1 + m2 + m3 - mu + 1) / (Rat(2) * (kk + m1 + m2 + 1));
    out.D = k == 0 ? Rat(0) : -(kk * (kk + m1 + m2 - m3 - mu)) / (Rat(2) * (kk + m1 + m2));
  } else {
    out.B = (kk + Rat(2) * m1 + Rat(2) * m2 + 1) * (kk + m1 + m2 + m3 + mu + 1) / (Rat(2) * (kk + m1 + m2 + 1));
    out.D = -((kk + Rat(2) * m1) * (kk + m1 + m2 - m3 + mu)) / (Rat(2) * (kk + m1 + m2));
  }
  return out;
}

struct TridiagRep {
  RacahParams params;
  std::vector<Rat> B, D;
  std::vector<Rat> diag;     // V_k
  std::vector<Rat> u_sq;     // U_k^2 = B_{k-1} D_k, index k = 1..N (entry 0 unused)
  RatMatrix K1, K2, K3;
  Rat Q;                     // expected Casimir value

  std::size_t dim() const { return diag.size(); }

  /// Symmetric float form with U_k = sqrt(B_{k-1} D_k) > 0.
  Eigen::MatrixXd k1_symmetric() const {
    const auto n = static_cast<Eigen::Index>(dim());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
      m(k, k) = diag[k].to_float();
      if (k > 0) m(k, k - 1) = m(k - 1, k) = std::sqrt(u_sq[k].to_float());
    }
    return m;
  }
};

inline TridiagRep build_tridiag_rep(const RacahParams& RP) {
  const unsigned n = RP.N + 1;
  TridiagRep rep;
  rep.params = RP;
  for (unsigned k = 0; k < n; ++k) {
    auto bd = bk_dk(RP, k);
    rep.B.push_back(bd.B);
    rep.D.push_back(bd.D);
    rep.diag.push_back(RP.mu2 + RP.mu3 + Rat(1, 2) - bd.B - bd.D);
  }
  if (!rep.B[RP.N].is_zero())
    throw TruncationFailure("B_N = " + rep.B[RP.N].str() + " for " + RP.str());
  rep.u_sq.assign(n, Rat(0));
  for (unsigned k = 1; k < n; ++k) {
    rep.u_sq[k] = rep.B[k - 1] * rep.D[k];
    if (rep.u_sq[k].sign() <= 0)
      throw NotUnitary("B_" + std::to_string(k - 1) + " D_" + std::to_string(k) + " = " + rep.u_sq[k].str() +
                       " is not positive for " + RP.str());
  }
  rep.K1 = RatMatrix(n, n);
  rep.K3 = RatMatrix(n, n);
  for (unsigned k = 0; k < n; ++k) {
    rep.K1(k, k) = rep.diag[k];
    if (k > 0) {
      rep.K1(k - 1, k) = Rat(1);
      rep.K1(k, k - 1) = rep.u_sq[k];
    }
    rep.K3(k, k) = RP.k3_eigenvalue(k);
  }
  rep.K2 = anticommutator(rep.K1, rep.K3) - RatMatrix::identity(n, RP.omega2());
  rep.Q = RP.casimir();
  return rep;
}

/// Continuant det(lambda - K1) by the three-term recurrence.
inline Rat k1_characteristic(const TridiagRep& rep, const Rat& lambda) {
  Rat prev(1), cur = lambda - rep.diag[0];
  for (std::size_t k = 1; k < rep.dim(); ++k) {
    Rat next = (lambda - rep.diag[k]) * cur - rep.u_sq[k] * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Exact BI relations, Casimir, K3 diagonal, exact K1 spectrum and the
/// B_k = 2 A_k, D_k = 2 C_k identifications.
inline VerificationReport verify_tridiag_rep(const TridiagRep& rep) {
  const RacahParams& RP = rep.params;
  VerificationReport out("racah_exact " + RP.str());
  const auto n = rep.dim();
  auto mat_eq = [&](const std::string& rel, const RatMatrix& a, const RatMatrix& b) {
    bool ok = a == b;
    out.add_result(rel, static_cast<long long>(RP.N), ok, ok ? "" : "matrices differ", "");
  };
  mat_eq("{K1,K3} = K2 + Omega2", anticommutator(rep.K1, rep.K3), rep.K2 + RatMatrix::identity(n, RP.omega2()));
  mat_eq("{K1,K2} = K3 + Omega3", anticommutator(rep.K1, rep.K2), rep.K3 + RatMatrix::identity(n, RP.omega3()));
  mat_eq("{K2,K3} = K1 + Omega1", anticommutator(rep.K2, rep.K3), rep.K1 + RatMatrix::identity(n, RP.omega1()));
  mat_eq("K1^2 + K2^2 + K3^2 = Q_BI", rep.K1 * rep.K1 + rep.K2 * rep.K2 + rep.K3 * rep.K3,
         RatMatrix::identity(n, rep.Q));
  const BIParams P = RP.identifications();
  for (unsigned k = 0; k < n; ++k) {
    out.add_exact("K3 diagonal", k, rep.K3(k, k).str(), RP.k3_eigenvalue(k).str());
    auto rc = recurrence_coeffs(P, k);
    out.add_exact("B_k = 2 A_k", k, rep.B[k].str(), (Rat(2) * rc.A).str());
    out.add_exact("D_k = 2 C_k", k, rep.D[k].str(), (Rat(2) * rc.C).str());
    out.add_exact("det(K1 - lambda_s) = 0", k, k1_characteristic(rep, RP.k1_eigenvalue(k)).str(), "0");
    out.add_exact("2 x_s + 1/2 = lambda_s", k, (Rat(2) * grid_point(P, k) + Rat(1, 2)).str(),
                  RP.k1_eigenvalue(k).str());
  }
  return out;
}

/// Float K1 spectrum against (-1)^s (s + mu2 + mu3 + 1/2) and the exact K3 diagonal.
inline VerificationReport k1_spectrum_check(const TridiagRep& rep, const RacahParams& RP) {
  VerificationReport out("racah_spectrum " + RP.str());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(rep.k1_symmetric());
  std::vector<double> got(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::vector<double> want;
  for (unsigned s = 0; s <= RP.N; ++s) want.push_back(RP.k1_eigenvalue(s).to_float());
  std::sort(want.begin(), want.end());
  for (unsigned i = 0; i <= RP.N; ++i) out.add_residual("K1 eigenvalue", i, std::abs(got[i] - want[i]), 1e-10);
  for (unsigned k = 0; k <= RP.N; ++k) out.add_exact("K3 diagonal", k, rep.K3(k, k).str(), RP.k3_eigenvalue(k).str());
  return out;
}

struct Overlaps {
  Eigen::MatrixXd matrix;   // (s, k) -> <s|k>, rows ordered by s
  std::vector<double> w;    // <s|0>
  VerificationReport report;
};

/// <s|k> from the K1 eigenvectors, signs fixed by <s|0> > 0, checked against
/// <s|k> / <s|0> = 2^k B_k(x_s) / (U_1 ... U_k).
inline Overlaps racah_overlaps(const TridiagRep& rep) {
  const RacahParams& RP = rep.params;
  const unsigned n = RP.N + 1;
  const BIParams P = RP.identifications();
  Overlaps out{Eigen::MatrixXd(n, n), std::vector<double>(n), VerificationReport("racah_overlaps " + RP.str())};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(rep.k1_symmetric());
  const Eigen::MatrixXd& V = es.eigenvectors();
  std::vector<bool> used(n, false);
  for (unsigned e = 0; e < n; ++e) {
    unsigned best = 0;
    double best_d = INFINITY;
    for (unsigned s = 0; s < n; ++s) {
      double d = std::abs(RP.k1_eigenvalue(s).to_float() - es.eigenvalues()(e));
      if (!used[s] && d < best_d) best_d = d, best = s;
    }
    used[best] = true;
    double sign = V(0, e) < 0 ? -1.0 : 1.0;
    for (unsigned k = 0; k < n; ++k) out.matrix(best, k) = sign * V(k, e);
  }
  double orth = (V.transpose() * V - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
  out.report.add_residual("K1 eigenvectors orthonormal", RP.N, orth, 1e-10);

  auto B = bi_recurrence_all(P, RP.N);
  double u_prod = 1.0, two_k = 1.0;
  for (unsigned k = 0; k < n; ++k) {
    if (k > 0) {
      u_prod *= std::sqrt(rep.u_sq[k].to_float());
      two_k *= 2.0;
    }
    Eigen::VectorXd ratio(n), pred(n);
    for (unsigned s = 0; s < n; ++s) {
      ratio(s) = out.matrix(s, k) / out.matrix(s, 0);
      pred(s) = two_k * poly_eval(B[k], grid_point(P, s)).to_float();
    }
    // Proportionality with the best-fit constant, then the predicted constant.
    double c = ratio.dot(pred) / pred.dot(pred);
    double scale = std::max(ratio.cwiseAbs().maxCoeff(), 1e-300);
    out.report.add_residual("<s|k> proportional to w(s) 2^k B_k(x_s)", k, (ratio - c * pred).cwiseAbs().maxCoeff() / scale,
                            1e-9);
    out.report.add_residual("proportionality constant = 1/(U_1...U_k)", k,
                            (ratio - pred / u_prod).cwiseAbs().maxCoeff() / scale, 1e-9);
  }
  for (unsigned s = 0; s < n; ++s) {
    out.w[s] = out.matrix(s, 0);
    out.report.add_result("w(s) > 0", s, out.w[s] > 0, std::to_string(out.w[s]), "> 0");
  }
  // Squared overlaps with |k=0> are the Gauss weights of the truncated recurrence.
  auto nodes = discrete_weights(P, RP.N);
  for (const auto& q : nodes)
    out.report.add_residual("w(s)^2 = quadrature weight", q.s, std::abs(out.w[q.s] * out.w[q.s] - q.weight), 1e-10);
  return out;
}

// ---------------------------------------------------------------------------
// Tensor-product oracle.

/// Fixed-J0 slice n1 + n2 + n3 = m of three modules, with a box n_i <= m+1
/// large enough for every quadratic expression used here.
class TensorSlice {
 public:
  using Vec = Eigen::VectorXd;
  using Op = std::function<Vec(const Vec&)>;

  TensorSlice(std::array<double, 3> mu, unsigned m) : mu_(mu), m_(m), box_(m + 2) {
    for (unsigned a = 0; a <= m; ++a)
      for (unsigned b = 0; a + b <= m; ++b) slice_.push_back(index(a, b, m - a - b));
  }

  unsigned m() const { return m_; }
  Eigen::Index dim() const { return static_cast<Eigen::Index>(slice_.size()); }

  Vec jplus(int i, const Vec& v) const { return shift(i, v, +1); }
  Vec jminus(int i, const Vec& v) const { return shift(i, v, -1); }
  Vec j0(int i, const Vec& v) const {
    return diag(v, [&](const std::array<unsigned, 3>& n) { return n[i] + mu_[i] + 0.5; });
  }
  Vec r(int i, const Vec& v) const {
    return diag(v, [&](const std::array<unsigned, 3>& n) { return n[i] % 2 == 0 ? 1.0 : -1.0; });
  }

  /// Matrix of `op` on the slice; throws if `op` leaves the slice.
  Eigen::MatrixXd matrix(const Op& op) const {
    const Eigen::Index d = dim();
    Eigen::MatrixXd out(d, d);
    std::vector<bool> in_slice(static_cast<std::size_t>(box_ * box_ * box_), false);
    for (auto idx : slice_) in_slice[idx] = true;
    for (Eigen::Index j = 0; j < d; ++j) {
      Vec e = Vec::Zero(box_ * box_ * box_);
      e(slice_[j]) = 1.0;
      Vec img = op(e);
      for (Eigen::Index i = 0; i < img.size(); ++i)
        if (!in_slice[i] && img(i) != 0.0) throw std::logic_error("operator leaves the J0 slice");
      for (Eigen::Index i = 0; i < d; ++i) out(i, j) = img(slice_[i]);
    }
    return out;
  }

 private:
  Eigen::Index index(unsigned a, unsigned b, unsigned c) const {
    return static_cast<Eigen::Index>((a * box_ + b) * box_ + c);
  }
  std::array<unsigned, 3> unpack(Eigen::Index idx) const {
    auto u = static_cast<unsigned>(idx);
    return {u / (box_ * box_), (u / box_) % box_, u % box_};
  }
  double rho(int i, unsigned n) const { return std::sqrt(n + (n % 2 == 1 ? 2.0 * mu_[i] : 0.0)); }

  template <class F>
  Vec diag(const Vec& v, F value) const {
    Vec out = Vec::Zero(v.size());
    for (Eigen::Index k = 0; k < v.size(); ++k)
      if (v(k) != 0.0) out(k) = value(unpack(k)) * v(k);
    return out;
  }
  Vec shift(int i, const Vec& v, int step) const {
    Vec out = Vec::Zero(v.size());
    for (Eigen::Index k = 0; k < v.size(); ++k) {
      if (v(k) == 0.0) continue;
      auto n = unpack(k);
      if (step < 0 && n[i] == 0) continue;
      unsigned target = n[i] + step;
      if (target >= box_) throw std::logic_error("tensor box too small");
      double c = step > 0 ? rho(i, target) : rho(i, n[i]);
      n[i] = target;
      out(index(n[0], n[1], n[2])) += c * v(k);
    }
    return out;
  }

  std::array<double, 3> mu_;
  unsigned m_;
  unsigned box_;
  std::vector<Eigen::Index> slice_;
};

/// Slice matrices of the intermediate and total Casimirs (epsilon_i = +1).
struct TensorCasimirs {
  Eigen::MatrixXd Q12, Q23, Q4, J04, R4, R1, R2, R3, K2formula;
};

inline TensorCasimirs tensor_casimirs(const RacahParams& RP, unsigned m) {
  const std::array<double, 3> mu{RP.mu1.to_float(), RP.mu2.to_float(), RP.mu3.to_float()};
  const TensorSlice T(mu, m);
  using Vec = TensorSlice::Vec;
  // Q_ij = (J+^i R^j + J+^j)(J-^i R^j + J-^j) R^i R^j - (J0^i + J0^j - 1/2) R^i R^j.
  auto qij = [&](int i, int j) {
    return [&, i, j](const Vec& v) {
      Vec rr = T.r(i, T.r(j, v));
      Vec lower = T.jminus(i, T.r(j, rr)) + T.jminus(j, rr);
      Vec upper = T.jplus(i, T.r(j, lower)) + T.jplus(j, lower);
      return Vec(upper - (T.j0(i, rr) + T.j0(j, rr) - 0.5 * rr));
    };
  };
  auto jm4 = [&](const Vec& v) { return Vec(T.jminus(0, T.r(1, T.r(2, v))) + T.jminus(1, T.r(2, v)) + T.jminus(2, v)); };
  auto jp4 = [&](const Vec& v) { return Vec(T.jplus(0, T.r(1, T.r(2, v))) + T.jplus(1, T.r(2, v)) + T.jplus(2, v)); };
  auto j04 = [&](const Vec& v) { return Vec(T.j0(0, v) + T.j0(1, v) + T.j0(2, v)); };
  auto r4 = [&](const Vec& v) { return T.r(0, T.r(1, T.r(2, v))); };
  auto q4 = [&](const Vec& v) {
    Vec rv = r4(v);
    return Vec(jp4(jm4(rv)) - (j04(rv) - 0.5 * rv));
  };
  // K2 = (J+^1 J-^3 - J-^1 J+^3) R^1 R^2 + R^1 R^3 / 2 - Q1 R^3 - Q3 R^1, Q_i = -mu_i.
  auto k2 = [&](const Vec& v) {
    Vec rr = T.r(0, T.r(1, v));
    Vec mixed = T.jplus(0, T.jminus(2, rr)) - T.jminus(0, T.jplus(2, rr));
    return Vec(mixed + 0.5 * T.r(0, T.r(2, v)) + mu[0] * T.r(2, v) + mu[2] * T.r(0, v));
  };
  TensorCasimirs out;
  out.Q12 = T.matrix(qij(0, 1));
  out.Q23 = T.matrix(qij(1, 2));
  out.Q4 = T.matrix(q4);
  out.J04 = T.matrix(j04);
  out.R4 = T.matrix(r4);
  out.R1 = T.matrix([&](const Vec& v) { return T.r(0, v); });
  out.R2 = T.matrix([&](const Vec& v) { return T.r(1, v); });
  out.R3 = T.matrix([&](const Vec& v) { return T.r(2, v); });
  out.K2formula = T.matrix(k2);
  return out;
}

namespace detail {

inline double max_abs(const Eigen::MatrixXd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }
inline Eigen::MatrixXd acomm(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) { return a * b + b * a; }

/// Max distance from each eigenvalue of a symmetric matrix to the nearest allowed value.
inline double spectrum_distance(const Eigen::MatrixXd& m, const std::vector<double>& allowed) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  double worst = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    double best = INFINITY;
    for (double a : allowed) best = std::min(best, std::abs(es.eigenvalues()(i) - a));
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace detail

/// Spectra and commutation of the tensor Casimirs on the m-slice, then the BI
/// relations, K2 formula and Casimir on the Q4 = -mu eigenspace.
inline VerificationReport tensor_oracle(const RacahParams& RP, unsigned m) {
  using detail::acomm;
  using detail::max_abs;
  VerificationReport rep("tensor_oracle " + RP.str() + " m=" + std::to_string(m));
  const auto T = tensor_casimirs(RP, m);
  const double m1 = RP.mu1.to_float(), m2 = RP.mu2.to_float(), m3 = RP.mu3.to_float();
  const Eigen::Index d = T.Q12.rows();
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(d, d);

  std::vector<double> q12_allowed, q23_allowed, q23_variant;
  for (unsigned s = 0; s <= m; ++s) {
    double sgn = s % 2 == 0 ? 1.0 : -1.0;
    q12_allowed.push_back(-sgn * (s + m1 + m2 + 0.5));
    q23_allowed.push_back(-sgn * (s + m2 + m3 + 0.5));
    q23_variant.push_back(sgn * (s + m2 + m3 + 0.5));
  }
  rep.add_residual("Q12 symmetric", m, max_abs(T.Q12 - T.Q12.transpose()), 1e-12);
  rep.add_residual("Q23 symmetric", m, max_abs(T.Q23 - T.Q23.transpose()), 1e-12);
  rep.add_residual("spec Q12 in (-1)^(s+1)(s+mu1+mu2+1/2)", m, detail::spectrum_distance(T.Q12, q12_allowed), 1e-9);
  rep.add_residual("spec Q23 in (-1)^(s+1)(s+mu2+mu3+1/2)", m, detail::spectrum_distance(T.Q23, q23_allowed), 1e-9);
  {
    // Opposite-sign form of the q23 spectrum; incompatible with K1 = -Q23 having
    // eigenvalues (-1)^s (s + mu2 + mu3 + 1/2), recorded for the report only.
    double dist = detail::spectrum_distance(T.Q23, q23_variant);
    rep.add({"spec Q23 in (-1)^s(s+mu2+mu3+1/2) (variant)", m, VerificationReport::fmt_double(dist), "<= 1e-9",
             dist <= 1e-9, false, dist});
  }
  rep.add_residual("J0(4) = m + mu1 + mu2 + mu3 + 3/2", m, max_abs(T.J04 - (m + m1 + m2 + m3 + 1.5) * I), 1e-12);
  rep.add_residual("[Q4,Q12] = 0", m, max_abs(T.Q4 * T.Q12 - T.Q12 * T.Q4), 1e-10);
  rep.add_residual("[Q4,Q23] = 0", m, max_abs(T.Q4 * T.Q23 - T.Q23 * T.Q4), 1e-10);

  // Q4 eigenspace for q4 = -mu.
  const double q4 = -RP.mu().to_float();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T.Q4);
  std::vector<Eigen::Index> cols;
  for (Eigen::Index i = 0; i < d; ++i)
    if (std::abs(es.eigenvalues()(i) - q4) < 1e-8) cols.push_back(i);
  const auto k = static_cast<Eigen::Index>(cols.size());
  const bool full = m >= RP.N;
  if (full)
    rep.add_result("dim(Q4 = -mu eigenspace) = N+1", m, k == static_cast<Eigen::Index>(RP.N) + 1, std::to_string(k),
                   std::to_string(RP.N + 1));
  if (k == 0) return rep;
  Eigen::MatrixXd Pm(d, k);
  for (Eigen::Index j = 0; j < k; ++j) Pm.col(j) = es.eigenvectors().col(cols[j]);
  const Eigen::MatrixXd K1 = -Pm.transpose() * T.Q23 * Pm;
  const Eigen::MatrixXd K3 = -Pm.transpose() * T.Q12 * Pm;
  const Eigen::MatrixXd Ik = Eigen::MatrixXd::Identity(k, k);
  const double O1 = RP.omega1().to_float(), O2 = RP.omega2().to_float(), O3 = RP.omega3().to_float();
  const Eigen::MatrixXd K2 = acomm(K1, K3) - O2 * Ik;
  rep.add_residual("eigenspace invariant under Q12, Q23", m,
                   std::max(max_abs(T.Q12 * Pm + Pm * K3), max_abs(T.Q23 * Pm + Pm * K1)), 1e-9);
  rep.add_residual("{K1,K2} = K3 + Omega3 (tensor)", m, max_abs(acomm(K1, K2) - K3 - O3 * Ik), 1e-9);
  rep.add_residual("{K2,K3} = K1 + Omega1 (tensor)", m, max_abs(acomm(K2, K3) - K1 - O1 * Ik), 1e-9);
  rep.add_residual("K2 explicit formula (tensor)", m, max_abs(Pm.transpose() * T.K2formula * Pm - K2), 1e-9);
  rep.add_residual("Casimir = mu1^2+mu2^2+mu3^2+mu4^2-1/4 (tensor)", m,
                   max_abs(K1 * K1 + K2 * K2 + K3 * K3 - RP.casimir().to_float() * Ik), 1e-9);
  if (!full) return rep;
  std::vector<double> k1_spec, k3_spec;
  for (unsigned s = 0; s <= RP.N; ++s) {
    k1_spec.push_back(RP.k1_eigenvalue(s).to_float());
    k3_spec.push_back(RP.k3_eigenvalue(s).to_float());
  }
  rep.add_residual("spec K1 on eigenspace", m, detail::spectrum_distance(K1, k1_spec), 1e-9);
  rep.add_residual("spec K3 on eigenspace", m, detail::spectrum_distance(K3, k3_spec), 1e-9);

  // K1 in the K3 eigenbasis against the exact tridiagonal data.
  const TridiagRep exact = build_tridiag_rep(RP);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> e3(K3);
  std::vector<Eigen::Index> order(static_cast<std::size_t>(k));
  for (unsigned kk = 0; kk <= RP.N; ++kk) {
    Eigen::Index best = 0;
    double bd = INFINITY;
    for (Eigen::Index i = 0; i < k; ++i) {
      double dd = std::abs(e3.eigenvalues()(i) - k3_spec[kk]);
      if (dd < bd) bd = dd, best = i;
    }
    order[kk] = best;
  }
  Eigen::MatrixXd basis(k, k);
  for (Eigen::Index j = 0; j < k; ++j) basis.col(j) = e3.eigenvectors().col(order[j]);
  const Eigen::MatrixXd K1k = basis.transpose() * K1 * basis;
  double worst = 0;
  for (Eigen::Index a = 0; a < k; ++a)
    for (Eigen::Index b = 0; b < k; ++b) {
      // Eigenvector signs are arbitrary, so off-diagonal entries compare in modulus.
      double diff;
      if (a == b) diff = K1k(a, a) - exact.diag[a].to_float();
      else if (std::abs(a - b) == 1) diff = std::abs(K1k(a, b)) - std::sqrt(exact.u_sq[std::max(a, b)].to_float());
      else diff = K1k(a, b);
      worst = std::max(worst, std::abs(diff));
    }
  rep.add_residual("K1 in K3 basis = (U_k, V_k) tridiagonal", m, worst, 1e-9);
  return rep;
}

/// Central extension on the whole slice with C3 = -Q12, C1 = -Q23,
/// C2 := {C3,C1} + 2 mu2 Q - 2 mu3 mu1, Q = Q4; then H = Omega^2 + Omega with
/// Omega = Q R and S = Omega + 1/2.
inline VerificationReport central_extension_check(const RacahParams& RP, unsigned m) {
  using detail::acomm;
  using detail::max_abs;
  VerificationReport rep("central_extension " + RP.str() + " m=" + std::to_string(m));
  const auto T = tensor_casimirs(RP, m);
  const double m1 = RP.mu1.to_float(), m2 = RP.mu2.to_float(), m3 = RP.mu3.to_float();
  const Eigen::Index d = T.Q12.rows();
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(d, d);
  const Eigen::MatrixXd C3 = -T.Q12, C1 = -T.Q23, &Q = T.Q4;
  const Eigen::MatrixXd C2 = acomm(C3, C1) + 2 * m2 * Q - 2 * m3 * m1 * I;
  rep.add_residual("{C1,C2} = C3 - 2 mu3 Q + 2 mu1 mu2", m, max_abs(acomm(C1, C2) - (C3 - 2 * m3 * Q + 2 * m1 * m2 * I)),
                   1e-9);
  rep.add_residual("{C2,C3} = C1 - 2 mu1 Q + 2 mu2 mu3", m, max_abs(acomm(C2, C3) - (C1 - 2 * m1 * Q + 2 * m2 * m3 * I)),
                   1e-9);
  rep.add_residual("[Q,C_i] = 0", m,
                   std::max({max_abs(Q * C1 - C1 * Q), max_abs(Q * C2 - C2 * Q), max_abs(Q * C3 - C3 * Q)}), 1e-9);
  const Eigen::MatrixXd decomposition = -C1 * T.R1 - C2 * T.R2 - C3 * T.R3 + m1 * T.R2 * T.R3 + m2 * T.R1 * T.R3 +
                                        m3 * T.R1 * T.R2 + 0.5 * T.R4;
  rep.add_residual("Q = -C1R1 - C2R2 - C3R3 + mu1R2R3 + mu2R1R3 + mu3R1R2 + R/2", m, max_abs(Q - decomposition), 1e-9);

  const Eigen::MatrixXd Omega = Q * T.R4;
  const Eigen::MatrixXd H = Omega * Omega + Omega;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eo(0.5 * (Omega + Omega.transpose()), Eigen::EigenvaluesOnly);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eh(0.5 * (H + H.transpose()), Eigen::EigenvaluesOnly);
  std::vector<double> predicted;
  for (Eigen::Index i = 0; i < eo.eigenvalues().size(); ++i) {
    double w = eo.eigenvalues()(i);
    predicted.push_back(w * w + w);
  }
  std::sort(predicted.begin(), predicted.end());
  double worst = 0;
  for (Eigen::Index i = 0; i < d; ++i) worst = std::max(worst, std::abs(eh.eigenvalues()(i) - predicted[i]));
  rep.add_residual("spec H = {w^2 + w : w in spec(QR)}", m, worst, 1e-9);
  const Eigen::MatrixXd S = Omega + 0.5 * I;
  rep.add_residual("1/2{S,S} = H + 1/4", m, max_abs(0.5 * acomm(S, S) - H - 0.25 * I), 1e-12);
  return rep;
}

}  // namespace bilab
