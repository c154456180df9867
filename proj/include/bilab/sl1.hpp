#pragma once

// sl_{-1}(2) discrete-series modules and the 1D Dunkl realization.
//
// States live in the rescaled basis |n) = rho_1 ... rho_n |n>, where
//   J+ |n) = |n+1),   J- |n) = rho_n^2 |n-1),
// so every matrix element is rational. The rescaling is a similarity
// transform (rho_n > 0 for n >= 1 when mu > -1/2), hence operator identities
// hold in one basis iff they hold in the other, including those odd in rho.

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "bilab/errors.hpp"
#include "bilab/exact.hpp"
#include "bilab/poly.hpp"
#include "bilab/report.hpp"

namespace bilab {

struct ModuleParams {
  int epsilon = 1;
  Rat mu;

  ModuleParams() = default;
  ModuleParams(int eps, Rat m) : epsilon(eps), mu(std::move(m)) {
    if (epsilon != 1 && epsilon != -1) throw InvalidParameters("epsilon must be +1 or -1");
    if (!(mu > Rat(-1, 2))) throw InvalidParameters("mu must exceed -1/2, got " + mu.str());
  }

  std::string str() const { return "(epsilon=" + std::to_string(epsilon) + ", mu=" + mu.str() + ")"; }
};

/// rho_n^2 = n + mu (1 - (-1)^n).
inline Rat rho_squared(const ModuleParams& M, unsigned n) {
  return Rat(static_cast<long>(n)) + (n % 2 == 1 ? Rat(2) * M.mu : Rat(0));
}

/// Finite-support state in the rescaled basis; grows on demand.
class StateVector {
 public:
  StateVector() = default;
  static StateVector basis(unsigned n) {
    StateVector s;
    s.at(n) = Rat(1);
    return s;
  }

  Rat get(unsigned n) const { return n < c_.size() ? c_[n] : Rat(0); }
  Rat& at(unsigned n) {
    if (n >= c_.size()) c_.resize(n + 1);
    return c_[n];
  }
  std::size_t size() const { return c_.size(); }

  StateVector& operator+=(const StateVector& o) {
    for (unsigned n = 0; n < o.c_.size(); ++n) at(n) += o.c_[n];
    return *this;
  }
  StateVector& operator*=(const Rat& s) {
    for (auto& v : c_) v *= s;
    return *this;
  }
  friend StateVector operator+(StateVector a, const StateVector& b) { return a += b; }
  friend StateVector operator-(StateVector a, StateVector b) { return a += (b *= Rat(-1)); }
  friend StateVector operator*(StateVector a, const Rat& s) { return a *= s; }
  friend bool operator==(const StateVector& a, const StateVector& b) {
    std::size_t n = std::max(a.c_.size(), b.c_.size());
    for (unsigned i = 0; i < n; ++i)
      if (!(a.get(i) == b.get(i))) return false;
    return true;
  }

  std::string str() const {
    std::string out;
    for (unsigned n = 0; n < c_.size(); ++n) {
      if (c_[n].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += c_[n].str() + "|" + std::to_string(n) + ")";
    }
    return out.empty() ? "0" : out;
  }

 private:
  std::vector<Rat> c_;
};

/// Module actions of J0, J+, J-, R in the rescaled basis.
class Sl1Module {
 public:
  explicit Sl1Module(ModuleParams M) : M_(std::move(M)) {}
  const ModuleParams& params() const { return M_; }

  Rat j0_value(unsigned n) const { return Rat(static_cast<long>(n)) + M_.mu + Rat(1, 2); }
  Rat r_value(unsigned n) const { return Rat(M_.epsilon) * sign_pow(n); }

  StateVector j0(const StateVector& s) const { return diag(s, [&](unsigned n) { return j0_value(n); }); }
  StateVector r(const StateVector& s) const { return diag(s, [&](unsigned n) { return r_value(n); }); }
  StateVector jplus(const StateVector& s) const {
    StateVector out;
    for (unsigned n = 0; n < s.size(); ++n)
      if (!s.get(n).is_zero()) out.at(n + 1) += s.get(n);
    return out;
  }
  StateVector jminus(const StateVector& s) const {
    StateVector out;
    for (unsigned n = 1; n < s.size(); ++n)
      if (!s.get(n).is_zero()) out.at(n - 1) += s.get(n) * rho_squared(M_, n);
    return out;
  }
  /// Q = J+ J- R - J0 R + R/2.
  StateVector casimir(const StateVector& s) const {
    StateVector rs = r(s);
    return jplus(jminus(rs)) - j0(rs) + rs * Rat(1, 2);
  }

 private:
  template <class F>
  static StateVector diag(const StateVector& s, F value) {
    StateVector out;
    for (unsigned n = 0; n < s.size(); ++n)
      if (!s.get(n).is_zero()) out.at(n) = s.get(n) * value(n);
    return out;
  }

  ModuleParams M_;
};

/// Defining relations, the Casimir value and both forms of [J-, J+] on |n), n <= nmax.
inline VerificationReport module_bilinear_check(const ModuleParams& M, unsigned nmax) {
  VerificationReport rep("sl1_module " + M.str());
  const Sl1Module mod(M);
  auto J0 = [&](const StateVector& s) { return mod.j0(s); };
  auto Jp = [&](const StateVector& s) { return mod.jplus(s); };
  auto Jm = [&](const StateVector& s) { return mod.jminus(s); };
  auto R = [&](const StateVector& s) { return mod.r(s); };
  const Rat q_expected = -Rat(M.epsilon) * M.mu;
  for (unsigned n = 0; n <= nmax; ++n) {
    const StateVector v = StateVector::basis(n);
    auto ex = [&](const char* rel, const StateVector& lhs, const StateVector& rhs) {
      rep.add_exact(rel, n, lhs.str(), rhs.str());
    };
    ex("[J0,J+] = J+", J0(Jp(v)) - Jp(J0(v)), Jp(v));
    ex("[J0,J-] = -J-", J0(Jm(v)) - Jm(J0(v)), Jm(v) * Rat(-1));
    ex("[J0,R] = 0", J0(R(v)) - R(J0(v)), StateVector());
    ex("{J+,R} = 0", Jp(R(v)) + R(Jp(v)), StateVector());
    ex("{J-,R} = 0", Jm(R(v)) + R(Jm(v)), StateVector());
    ex("{J+,J-} = 2J0", Jp(Jm(v)) + Jm(Jp(v)), J0(v) * Rat(2));
    ex("R^2 = 1", R(R(v)), v);
    ex("J+J- = rho_n^2", Jp(Jm(v)), v * rho_squared(M, n));
    ex("J-J+ = rho_(n+1)^2", Jm(Jp(v)), v * rho_squared(M, n + 1));
    StateVector q = mod.casimir(v);
    ex("Q = -epsilon mu", q, v * q_expected);
    StateVector comm = Jm(Jp(v)) - Jp(Jm(v));
    ex("[J-,J+] = 1 + 2 epsilon mu R", comm, v + R(v) * (Rat(2 * M.epsilon) * M.mu));
    ex("[J-,J+] = 1 - 2QR", comm, v - mod.casimir(R(v)) * Rat(2));
  }
  rep.note("casimir", q_expected.str());
  return rep;
}

/// C_osp = (E0 - 1/2)^2 - 4 E+ E- - F+ F- with E0 = J0, E+- = J+-^2/2, F+- = J+-; equals Q^2 = mu^2.
inline VerificationReport osp_casimir_check(const ModuleParams& M, unsigned nmax) {
  VerificationReport rep("osp_casimir " + M.str());
  const Sl1Module mod(M);
  const Rat expected = M.mu * M.mu;
  for (unsigned n = 0; n <= nmax; ++n) {
    const StateVector v = StateVector::basis(n);
    StateVector shifted = mod.j0(v) - v * Rat(1, 2);
    StateVector term1 = mod.j0(shifted) - shifted * Rat(1, 2);
    StateVector em = mod.jminus(mod.jminus(v)) * Rat(1, 2);
    StateVector term2 = mod.jplus(mod.jplus(em)) * Rat(1, 2) * Rat(4);
    StateVector term3 = mod.jplus(mod.jminus(v));
    StateVector c = term1 - term2 - term3;
    rep.add_exact("C_osp = mu^2", n, c.str(), (v * expected).str());
    rep.add_exact("C_osp = Q^2", n, c.str(), mod.casimir(mod.casimir(v)).str());
  }
  rep.note("osp_casimir", expected.str());
  return rep;
}

/// D p = p' + nu (p(x) - p(-x)) / x.
inline Poly dunkl_derivative(const Rat& nu, const Poly& p) {
  std::vector<Rat> d;
  for (std::size_t k = 1; k < p.coeffs().size(); ++k) d.push_back(p.coeffs()[k] * Rat(static_cast<long>(k)));
  return Poly(std::move(d)) + poly_divide_exact(p - poly_reflect(p), Rat(0)) * nu;
}

/// [D, x] = 1 + 2 nu R on monomials, plus the sl_{-1}(2) structure of
/// J+- = (x -+ D)/sqrt(2) with the sqrt(2) factors tracked as scale^2 = 1/2.
inline VerificationReport dunkl_commutator_check(const Rat& nu, unsigned maxdeg) {
  if (!(nu > Rat(-1, 2))) throw InvalidParameters("nu must exceed -1/2, got " + nu.str());
  VerificationReport rep("dunkl nu=" + nu.str());
  const Poly x = Poly::x();
  auto D = [&](const Poly& p) { return dunkl_derivative(nu, p); };
  // Unscaled sqrt(2) J+- .
  auto Up = [&](const Poly& p) { return x * p - D(p); };
  auto Um = [&](const Poly& p) { return x * p + D(p); };
  auto J0 = [&](const Poly& p) { return (Um(Up(p)) + Up(Um(p))) * Rat(1, 4); };
  auto R = [](const Poly& p) { return poly_reflect(p); };
  for (unsigned j = 0; j <= maxdeg; ++j) {
    const Poly p = Poly::monomial(j);
    auto ex = [&](const char* rel, const Poly& lhs, const Poly& rhs) { rep.add_exact(rel, j, lhs.str(), rhs.str()); };
    ex("[D,x] = 1 + 2 nu R", D(x * p) - x * D(p), p + R(p) * (Rat(2) * nu));
    ex("[J-,J+] = 1 + 2 nu R", (Um(Up(p)) - Up(Um(p))) * Rat(1, 2), p + R(p) * (Rat(2) * nu));
    ex("[J0,J+] = J+", J0(Up(p)) - Up(J0(p)), Up(p));
    ex("[J0,J-] = -J-", J0(Um(p)) - Um(J0(p)), -Um(p));
    ex("{J+,R} = 0", Up(R(p)) + R(Up(p)), Poly());
    ex("{J-,R} = 0", Um(R(p)) + R(Um(p)), Poly());
    Poly rp = R(p);
    ex("Q = -nu", Up(Um(rp)) * Rat(1, 2) - J0(rp) + rp * Rat(1, 2), p * (-nu));
    if (j > 0)
      rep.add_result("D lowers degree by 1", j, D(p).degree() == static_cast<int>(j) - 1,
                     D(p).str(), "degree " + std::to_string(j - 1));
  }
  return rep;
}

}  // namespace bilab
