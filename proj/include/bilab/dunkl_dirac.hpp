#pragma once

// Trivariate Z2^3 Dunkl calculus over Gaussian rationals, the Dunkl angular
// momenta J_i, the spinor operator Gamma = sigma.J + mu.R and its symmetries.
//
// Every operator here preserves total degree, so identities are checked on
// each homogeneous slice separately, one report entry per identity per slice.

#include <array>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bilab/errors.hpp"
#include "bilab/exact.hpp"
#include "bilab/report.hpp"

namespace bilab {

using Exponent3 = std::array<unsigned, 3>;

class Poly3 {
 public:
  Poly3() = default;
  static Poly3 monomial(Exponent3 e, GRat c = GRat(1)) {
    Poly3 p;
    p.add(e, std::move(c));
    return p;
  }

  const std::map<Exponent3, GRat>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  void add(const Exponent3& e, const GRat& c) {
    auto [it, inserted] = t_.try_emplace(e, c);
    if (!inserted) it->second += c;
    if (it->second == GRat()) t_.erase(it);
  }

  /// True iff every stored monomial has total degree d.
  bool homogeneous(unsigned d) const {
    for (const auto& [e, c] : t_)
      if (e[0] + e[1] + e[2] != d) return false;
    return true;
  }

  Poly3& operator+=(const Poly3& o) {
    for (const auto& [e, c] : o.t_) add(e, c);
    return *this;
  }
  Poly3& operator*=(const GRat& s) {
    if (s == GRat()) {
      t_.clear();
      return *this;
    }
    for (auto& [e, c] : t_) c *= s;
    return *this;
  }
  friend Poly3 operator+(Poly3 a, const Poly3& b) { return a += b; }
  friend Poly3 operator-(Poly3 a, Poly3 b) { return a += (b *= GRat(-1)); }
  friend Poly3 operator*(Poly3 a, const GRat& s) { return a *= s; }
  friend bool operator==(const Poly3&, const Poly3&) = default;

  std::string str() const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : t_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.str() + ")";
      for (int i = 0; i < 3; ++i)
        if (e[i] > 0) out += "*x" + std::to_string(i + 1) + (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
    }
    return out;
  }

 private:
  std::map<Exponent3, GRat> t_;
};

struct SpinorPoly3 {
  Poly3 up, down;

  SpinorPoly3& operator+=(const SpinorPoly3& o) {
    up += o.up;
    down += o.down;
    return *this;
  }
  friend SpinorPoly3 operator+(SpinorPoly3 a, const SpinorPoly3& b) { return a += b; }
  friend SpinorPoly3 operator*(SpinorPoly3 a, const GRat& s) {
    a.up *= s;
    a.down *= s;
    return a;
  }
  friend SpinorPoly3 operator-(const SpinorPoly3& a, const SpinorPoly3& b) { return a + b * GRat(-1); }
  friend bool operator==(const SpinorPoly3&, const SpinorPoly3&) = default;

  bool homogeneous(unsigned d) const { return up.homogeneous(d) && down.homogeneous(d); }
  std::string str() const { return "[" + up.str() + " ; " + down.str() + "]"; }
};

struct DiracParams {
  std::array<Rat, 3> mu;

  DiracParams() = default;
  DiracParams(Rat m1, Rat m2, Rat m3) : mu{std::move(m1), std::move(m2), std::move(m3)} {
    for (const auto& m : mu)
      if (!(m > Rat(-1, 2))) throw InvalidParameters("each mu_i must exceed -1/2, got " + m.str());
  }
  Rat sum() const { return mu[0] + mu[1] + mu[2]; }
  std::string str() const { return "(mu1=" + mu[0].str() + ", mu2=" + mu[1].str() + ", mu3=" + mu[2].str() + ")"; }
};

// Axis arguments are 0-based (x1 -> 0).

inline Poly3 reflect(int i, const Poly3& p) {
  Poly3 out;
  for (const auto& [e, c] : p.terms()) out.add(e, e[i] % 2 == 0 ? c : -c);
  return out;
}

inline Poly3 multiply_x(int i, const Poly3& p) {
  Poly3 out;
  for (const auto& [key, c] : p.terms()) {
    Exponent3 e = key;
    ++e[i];
    out.add(e, c);
  }
  return out;
}

/// D_i x^a = a x^(a-1) for even a, (a + 2 mu_i) x^(a-1) for odd a.
inline Poly3 dunkl_partial(const DiracParams& DP, int i, const Poly3& p) {
  Poly3 out;
  for (const auto& [key, c] : p.terms()) {
    Exponent3 e = key;
    if (e[i] == 0) continue;
    Rat f(static_cast<long>(e[i]));
    if (e[i] % 2 == 1) f += Rat(2) * DP.mu[i];
    --e[i];
    out.add(e, c * GRat(f));
  }
  return out;
}

/// J_i = (1/i)(x_j D_k - x_k D_j), (ijk) cyclic.
inline Poly3 angular_momentum(const DiracParams& DP, int i, const Poly3& p) {
  const int j = (i + 1) % 3, k = (i + 2) % 3;
  Poly3 t = multiply_x(j, dunkl_partial(DP, k, p)) - multiply_x(k, dunkl_partial(DP, j, p));
  return t * -GRat::i();
}

/// Pauli matrix sigma_{i+1} on the spinor index.
inline SpinorPoly3 pauli(int i, const SpinorPoly3& s) {
  switch (i) {
    case 0: return {s.down, s.up};
    case 1: return {s.down * -GRat::i(), s.up * GRat::i()};
    default: return {s.up, s.down * GRat(-1)};
  }
}

using SpinorOp = std::function<SpinorPoly3(const SpinorPoly3&)>;

namespace ops {

inline SpinorOp lift(std::function<Poly3(const Poly3&)> f) {
  return [f = std::move(f)](const SpinorPoly3& s) { return SpinorPoly3{f(s.up), f(s.down)}; };
}
inline SpinorOp identity() {
  return [](const SpinorPoly3& s) { return s; };
}
/// a after b.
inline SpinorOp compose(SpinorOp a, SpinorOp b) {
  return [a = std::move(a), b = std::move(b)](const SpinorPoly3& s) { return a(b(s)); };
}
inline SpinorOp compose(SpinorOp a, SpinorOp b, SpinorOp c) { return compose(std::move(a), compose(std::move(b), std::move(c))); }
inline SpinorOp linear(std::vector<std::pair<GRat, SpinorOp>> terms) {
  return [terms = std::move(terms)](const SpinorPoly3& s) {
    SpinorPoly3 out;
    for (const auto& [c, op] : terms) out += op(s) * c;
    return out;
  };
}
inline SpinorOp commutator(const SpinorOp& a, const SpinorOp& b) {
  return [a, b](const SpinorPoly3& s) { return a(b(s)) - b(a(s)); };
}
inline SpinorOp anticommutator(const SpinorOp& a, const SpinorOp& b) {
  return [a, b](const SpinorPoly3& s) { return a(b(s)) + b(a(s)); };
}
inline SpinorOp zero() {
  return [](const SpinorPoly3&) { return SpinorPoly3{}; };
}

}  // namespace ops

/// The operators of the spinor setting, built once per parameter tuple.
struct DiracOperators {
  DiracParams params;
  std::array<SpinorOp, 3> J, R, sigma, M, X, K;
  SpinorOp Gamma, Y, Id, GammaPlus1, Jsq, Xterm;

  explicit DiracOperators(DiracParams DP) : params(std::move(DP)) {
    using namespace ops;
    const auto& mu = params.mu;
    Id = identity();
    for (int i = 0; i < 3; ++i) {
      J[i] = lift([p = params, i](const Poly3& q) { return angular_momentum(p, i, q); });
      R[i] = lift([i](const Poly3& q) { return reflect(i, q); });
      sigma[i] = [i](const SpinorPoly3& s) { return pauli(i, s); };
    }
    std::vector<std::pair<GRat, SpinorOp>> g;
    for (int i = 0; i < 3; ++i) {
      g.emplace_back(GRat(1), compose(sigma[i], J[i]));
      g.emplace_back(GRat(mu[i]), R[i]);
    }
    Gamma = linear(std::move(g));
    GammaPlus1 = linear({{GRat(1), Gamma}, {GRat(1), Id}});
    Y = compose(R[0], R[1], R[2]);
    for (int i = 0; i < 3; ++i) {
      const int j = (i + 1) % 3, k = (i + 2) % 3;
      SpinorOp inner = linear({{GRat(mu[j]), R[j]}, {GRat(mu[k]), R[k]}, {GRat(Rat(1, 2)), Id}});
      M[i] = linear({{GRat(1), J[i]}, {GRat(1), compose(sigma[i], inner)}});
      X[i] = compose(sigma[i], R[i]);
    }
    for (int i = 0; i < 3; ++i) K[i] = compose(M[i], X[i], Y);
    Jsq = linear({{GRat(1), compose(J[0], J[0])}, {GRat(1), compose(J[1], J[1])}, {GRat(1), compose(J[2], J[2])}});
    auto one_minus = [&](int a, int b) { return linear({{GRat(1), Id}, {GRat(-1), compose(R[a], R[b])}}); };
    Xterm = linear({{GRat(Rat(2) * mu[0] * mu[1]), one_minus(0, 1)},
                    {GRat(Rat(2) * mu[1] * mu[2]), one_minus(1, 2)},
                    {GRat(Rat(2) * mu[0] * mu[2]), one_minus(0, 2)},
                    {GRat(-mu[0]), R[0]},
                    {GRat(-mu[1]), R[1]},
                    {GRat(-mu[2]), R[2]},
                    {GRat(params.sum()), Id}});
  }
};

inline SpinorPoly3 gamma_apply(const DiracParams& DP, const SpinorPoly3& s) { return DiracOperators(DP).Gamma(s); }

/// Homogeneous spinor basis of degree d: each monomial in the up slot, then the down slot.
inline std::vector<SpinorPoly3> spinor_slice(unsigned d) {
  std::vector<SpinorPoly3> out;
  for (unsigned a = 0; a <= d; ++a)
    for (unsigned b = 0; a + b <= d; ++b) {
      Exponent3 e{a, b, d - a - b};
      out.push_back({Poly3::monomial(e), {}});
      out.push_back({{}, Poly3::monomial(e)});
    }
  return out;
}

namespace detail {

/// One entry for `lhs == rhs` on the whole degree-d slice, keeping the first counterexample.
inline void check_on_slice(VerificationReport& rep, const std::string& relation, unsigned d, const SpinorOp& lhs,
                           const SpinorOp& rhs, bool required = true) {
  for (const auto& s : spinor_slice(d)) {
    SpinorPoly3 l = lhs(s), r = rhs(s);
    if (!(l == r)) {
      rep.add({relation, d, "on " + s.str() + ": " + l.str(), r.str(), false, required, std::nullopt});
      return;
    }
  }
  rep.add({relation, d, {}, {}, true, required, std::nullopt});
}

inline void check_degree(VerificationReport& rep, const std::string& name, unsigned d, const SpinorOp& op) {
  for (const auto& s : spinor_slice(d)) {
    SpinorPoly3 img = op(s);
    if (!img.homogeneous(d)) {
      rep.add_result(name + " preserves degree", d, false, img.str(), "degree " + std::to_string(d));
      return;
    }
  }
  rep.add_result(name + " preserves degree", d, true);
}

inline const char* axis(int i) {
  static const char* names[] = {"1", "2", "3"};
  return names[i];
}

}  // namespace detail

/// [J_j, J_k] = i J_l (1 + 2 mu_l R_l) for cyclic (j, k, l), on slices 0..maxdeg.
inline VerificationReport jj_commutator_check(const DiracParams& DP, unsigned maxdeg) {
  using namespace ops;
  VerificationReport rep("dirac_comm " + DP.str());
  const DiracOperators O(DP);
  for (unsigned d = 0; d <= maxdeg; ++d) {
    for (int j = 0; j < 3; ++j) {
      const int k = (j + 1) % 3, l = (j + 2) % 3;
      SpinorOp rhs = linear({{GRat::i(), O.J[l]}, {GRat::i() * GRat(Rat(2) * DP.mu[l]), compose(O.J[l], O.R[l])}});
      std::string rel = std::string("[J") + detail::axis(j) + ",J" + detail::axis(k) + "] = i J" + detail::axis(l) +
                        "(1 + 2 mu" + detail::axis(l) + " R" + detail::axis(l) + ")";
      detail::check_on_slice(rep, rel, d, commutator(O.J[j], O.J[k]), rhs);
    }
    for (int i = 0; i < 3; ++i) detail::check_degree(rep, std::string("J") + detail::axis(i), d, O.J[i]);
  }
  rep.note("comm1_reading",
           "[J_j,J_k] = i eps_jkl J_l (1 + 2 mu_l R_l); the relabeling [J_i,J_j] = i eps_ijk J_k (1 + 2 mu_k R_k) "
           "ranges over the same cyclic triples and is the same statement");
  return rep;
}

/// (Gamma^2 + Gamma) = J^2 - Xterm + (sum mu)(sum mu + 1) on slices 0..maxdeg.
inline VerificationReport gamma_square_identity(const DiracParams& DP, unsigned maxdeg) {
  using namespace ops;
  VerificationReport rep("dirac_gamma_square " + DP.str());
  const DiracOperators O(DP);
  const Rat s = DP.sum();
  SpinorOp lhs = linear({{GRat(1), compose(O.Gamma, O.Gamma)}, {GRat(1), O.Gamma}});
  SpinorOp rhs = linear({{GRat(1), O.Jsq}, {GRat(-1), O.Xterm}, {GRat(s * (s + Rat(1))), O.Id}});
  for (unsigned d = 0; d <= maxdeg; ++d) {
    detail::check_on_slice(rep, "Gamma^2 + Gamma = J^2 - Xterm + (sum mu)(sum mu + 1)", d, lhs, rhs);
    detail::check_degree(rep, "Gamma", d, O.Gamma);
  }
  return rep;
}

/// Symmetries of Gamma and the Bannai-Ito relations of K_i = M_i X_i Y.
/// Non-cyclic coefficient variants are recorded with required = false.
inline VerificationReport symmetry_check(const DiracParams& DP, unsigned maxdeg) {
  using namespace ops;
  VerificationReport rep("dirac_symmetry " + DP.str());
  const DiracOperators O(DP);
  const auto& mu = DP.mu;
  const SpinorOp zero_op = zero();
  for (unsigned d = 0; d <= maxdeg; ++d) {
    auto ax = [](int i) { return std::string(detail::axis(i)); };
    for (int i = 0; i < 3; ++i) {
      const int j = (i + 1) % 3, k = (i + 2) % 3;
      detail::check_on_slice(rep, "[Gamma,M" + ax(i) + "] = 0", d, commutator(O.Gamma, O.M[i]), zero_op);
      detail::check_on_slice(rep, "[Gamma,X" + ax(i) + "] = 0", d, commutator(O.Gamma, O.X[i]), zero_op);
      detail::check_on_slice(rep, "[M" + ax(i) + ",X" + ax(i) + "] = 0", d, commutator(O.M[i], O.X[i]), zero_op);
      detail::check_on_slice(rep, "{M" + ax(i) + ",X" + ax(j) + "} = 0", d, anticommutator(O.M[i], O.X[j]), zero_op);
      detail::check_on_slice(rep, "{M" + ax(i) + ",X" + ax(k) + "} = 0", d, anticommutator(O.M[i], O.X[k]), zero_op);
      detail::check_on_slice(rep, "[M" + ax(i) + ",Y] = 0", d, commutator(O.M[i], O.Y), zero_op);
      detail::check_on_slice(rep, "[X" + ax(i) + ",Y] = 0", d, commutator(O.X[i], O.Y), zero_op);
      detail::check_on_slice(rep, "[Gamma,K" + ax(i) + "] = 0", d, commutator(O.Gamma, O.K[i]), zero_op);
      detail::check_on_slice(rep, "K" + ax(i) + " = M" + ax(i) + " sigma" + ax(i) + " R" + ax(j) + " R" + ax(k), d,
                             O.K[i], compose(O.M[i], O.sigma[i], compose(O.R[j], O.R[k])));

      // [M_i, M_j] = i (M_k + 2 mu_k (Gamma + 1) X_k) + c mu_i mu_j [X_i, X_j]
      auto mm_rhs = [&](const Rat& c) {
        return linear({{GRat::i(), O.M[k]},
                       {GRat::i() * GRat(Rat(2) * mu[k]), compose(O.GammaPlus1, O.X[k])},
                       {GRat(c * mu[i] * mu[j]), commutator(O.X[i], O.X[j])}});
      };
      std::string mm = "[M" + ax(i) + ",M" + ax(j) + "] = i(M" + ax(k) + " + 2mu" + ax(k) + "(Gamma+1)X" + ax(k) + ")";
      detail::check_on_slice(rep, mm + " + mu" + ax(i) + "mu" + ax(j) + "[X" + ax(i) + ",X" + ax(j) + "]", d,
                             commutator(O.M[i], O.M[j]), mm_rhs(Rat(1)));
      detail::check_on_slice(rep, mm + " + 2mu" + ax(i) + "mu" + ax(j) + "[X" + ax(i) + ",X" + ax(j) + "] (variant)",
                             d, commutator(O.M[i], O.M[j]), mm_rhs(Rat(2)), false);

      // {K_i, K_j} = K_k + 2 mu_k (Gamma + 1) Y + 2 mu_i mu_j
      SpinorOp k_rhs = linear({{GRat(1), O.K[k]},
                               {GRat(Rat(2) * mu[k]), compose(O.GammaPlus1, O.Y)},
                               {GRat(Rat(2) * mu[i] * mu[j]), O.Id}});
      detail::check_on_slice(rep,
                             "{K" + ax(i) + ",K" + ax(j) + "} = K" + ax(k) + " + 2mu" + ax(k) + "(Gamma+1)Y + 2mu" + ax(i) +
                                 "mu" + ax(j),
                             d, anticommutator(O.K[i], O.K[j]), k_rhs);
    }
    // Non-cyclic variant: 2 mu3 (Gamma+1) Y in place of 2 mu2 (Gamma+1) Y.
    SpinorOp variant = linear({{GRat(1), O.K[1]},
                               {GRat(Rat(2) * mu[2]), compose(O.GammaPlus1, O.Y)},
                               {GRat(Rat(2) * mu[2] * mu[0]), O.Id}});
    detail::check_on_slice(rep, "{K3,K1} = K2 + 2mu3(Gamma+1)Y + 2mu3mu1 (variant)", d,
                           anticommutator(O.K[2], O.K[0]), variant, false);

    detail::check_on_slice(rep, "Y = -i X1 X2 X3", d, O.Y, linear({{-GRat::i(), compose(O.X[0], O.X[1], O.X[2])}}));
    detail::check_on_slice(rep, "Y^2 = 1", d, compose(O.Y, O.Y), O.Id);
    detail::check_on_slice(rep, "[Gamma,Y] = 0", d, commutator(O.Gamma, O.Y), zero_op);
    for (int i = 0; i < 3; ++i) {
      detail::check_degree(rep, "M" + ax(i), d, O.M[i]);
      detail::check_degree(rep, "X" + ax(i), d, O.X[i]);
      detail::check_degree(rep, "K" + ax(i), d, O.K[i]);
    }
  }
  return rep;
}

/// sigma_i sigma_j = i eps_ijk sigma_k + delta_ij and {sigma_m, sigma_n} = 2 delta_mn on the fixed matrices.
inline VerificationReport pauli_check() {
  VerificationReport rep("pauli");
  using M2 = std::array<std::array<GRat, 2>, 2>;
  const GRat i = GRat::i();
  const std::array<M2, 3> s{M2{{{GRat(0), GRat(1)}, {GRat(1), GRat(0)}}},
                            M2{{{GRat(0), -i}, {i, GRat(0)}}},
                            M2{{{GRat(1), GRat(0)}, {GRat(0), GRat(-1)}}}};
  auto mul = [](const M2& a, const M2& b) {
    M2 c{};
    for (int r = 0; r < 2; ++r)
      for (int q = 0; q < 2; ++q) c[r][q] = a[r][0] * b[0][q] + a[r][1] * b[1][q];
    return c;
  };
  auto str = [](const M2& m) {
    return "[[" + m[0][0].str() + "," + m[0][1].str() + "],[" + m[1][0].str() + "," + m[1][1].str() + "]]";
  };
  auto eps = [](int a, int b, int c) -> int {
    if (a == b || b == c || a == c) return 0;
    return ((b - a + 3) % 3 == 1) ? 1 : -1;
  };
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      M2 want{};
      for (int r = 0; r < 2; ++r) want[r][r] = GRat(a == b ? 1 : 0);
      for (int c = 0; c < 3; ++c) {
        int e = eps(a, b, c);
        if (e == 0) continue;
        for (int r = 0; r < 2; ++r)
          for (int q = 0; q < 2; ++q) want[r][q] += i * GRat(e) * s[c][r][q];
      }
      M2 ab = mul(s[a], s[b]);
      rep.add_exact("sigma_i sigma_j = i eps_ijk sigma_k + delta_ij", a * 3 + b, str(ab), str(want));
      M2 ba = mul(s[b], s[a]), anti{};
      for (int r = 0; r < 2; ++r)
        for (int q = 0; q < 2; ++q) anti[r][q] = ab[r][q] + ba[r][q];
      M2 two{};
      for (int r = 0; r < 2; ++r) two[r][r] = GRat(a == b ? 2 : 0);
      rep.add_exact("{sigma_m,sigma_n} = 2 delta_mn", a * 3 + b, str(anti), str(two));
    }
  // The matrices above must be the ones `pauli` applies.
  for (int a = 0; a < 3; ++a) {
    SpinorPoly3 up{Poly3::monomial({0, 0, 0}), {}}, down{{}, Poly3::monomial({0, 0, 0})};
    SpinorPoly3 col0 = pauli(a, up), col1 = pauli(a, down);
    auto entry = [](const Poly3& p) {
      auto it = p.terms().find({0, 0, 0});
      return it == p.terms().end() ? GRat() : it->second;
    };
    bool ok = entry(col0.up) == s[a][0][0] && entry(col0.down) == s[a][1][0] && entry(col1.up) == s[a][0][1] &&
              entry(col1.down) == s[a][1][1];
    rep.add_result("spinor action matches sigma matrix", a, ok);
  }
  return rep;
}

}  // namespace bilab
