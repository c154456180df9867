#pragma once

// Dense univariate polynomials over Rat, plus the reflection and
// shift-reflection primitives used by the difference-operator realization.

#include <algorithm>
#include <climits>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "bilab/exact.hpp"

namespace bilab {

class Poly {
 public:
  /// Degree reported for the zero polynomial.
  static constexpr int kMinusInfinity = INT_MIN;

  Poly() = default;
  Poly(Rat c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) c_.push_back(std::move(c));
  }
  Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly x() { return Poly({Rat(0), Rat(1)}); }
  static Poly monomial(std::size_t k, Rat c = Rat(1)) {
    std::vector<Rat> v(k + 1);
    v[k] = std::move(c);
    return Poly(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return c_.empty() ? kMinusInfinity : static_cast<int>(c_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
  Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Rat& s) {
    if (s.is_zero()) {
      c_.clear();
      return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
  }
  Poly operator-() const {
    Poly out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
  friend Poly operator*(const Rat& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
  }
  friend bool operator==(const Poly& a, const Poly& b) = default;

  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
      const Rat& c = c_[k];
      if (c.is_zero()) continue;
      std::string mag = (c.sign() < 0 ? -c : c).str();
      if (!out.empty()) out += c.sign() < 0 ? " - " : " + ";
      else if (c.sign() < 0) out += "-";
      bool unit = (mag == "1") && k > 0;
      if (!unit) out += mag;
      if (k > 0) {
        if (!unit) out += "*";
        out += "x";
        if (k > 1) out += "^" + std::to_string(k);
      }
    }
    return out;
  }
  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rat> c_;
};

/// Horner evaluation.
inline Rat poly_eval(const Poly& p, const Rat& x0) {
  Rat acc(0);
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x0 + c[k];
  return acc;
}

/// p(q(x)).
inline Poly poly_compose(const Poly& p, const Poly& q) {
  Poly acc;
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * q + Poly(c[k]);
  return acc;
}

/// R p: x -> -x.
inline Poly poly_reflect(const Poly& p) {
  std::vector<Rat> c = p.coeffs();
  for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
  return Poly(std::move(c));
}

/// T+ R p, i.e. x -> p(-x-1) (reflect first, then shift).
inline Poly poly_shift_reflect(const Poly& p) {
  return poly_compose(p, Poly({Rat(-1), Rat(-1)}));
}

/// Quotient of p by (x - root); throws NotDivisible on a nonzero remainder.
inline Poly poly_divide_exact(const Poly& p, const Rat& root) {
  const auto& c = p.coeffs();
  if (c.empty()) return {};
  std::vector<Rat> q(c.size() - 1);
  Rat carry = c.back();
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    q[k] = carry;
    carry = c[k] + carry * root;
  }
  if (!carry.is_zero())
    throw NotDivisible("remainder " + carry.str() + " dividing by (x - " + root.str() + ")");
  return Poly(std::move(q));
}

/// Rising factorial base (base+1) ... (base+k-1) of a polynomial argument.
inline Poly pochhammer_poly(const Poly& base, unsigned k) {
  Poly out(Rat(1));
  for (unsigned i = 0; i < k; ++i) out = out * (base + Poly(Rat(static_cast<long>(i))));
  return out;
}

/// Scalar rising factorial (c)_k.
inline Rat pochhammer(const Rat& c, unsigned k) {
  Rat out(1);
  for (unsigned i = 0; i < k; ++i) out *= c + Rat(static_cast<long>(i));
  return out;
}

}  // namespace bilab
