#pragma once

// Exact scalars: arbitrary-precision rationals and Gaussian rationals.
//
// Rat keeps GMP's canonical form at all times: positive denominator,
// coprime numerator/denominator, zero stored as 0/1.

#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "bilab/errors.hpp"

namespace bilab {

class Rat {
 public:
  Rat() = default;

  template <std::integral I>
  Rat(I n) : v_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)

  Rat(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw InvalidScalar("zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }

  template <std::integral I, std::integral J>
  Rat(I n, J d) : Rat(mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(d))) {}

  /// Parses "p/q" or an integer literal. Decimal notation is rejected.
  static Rat parse(std::string_view text) {
    std::string s(text);
    auto trim = [](std::string& t) {
      while (!t.empty() && (t.front() == ' ' || t.front() == '\t')) t.erase(t.begin());
      while (!t.empty() && (t.back() == ' ' || t.back() == '\t')) t.pop_back();
    };
    trim(s);
    auto valid_int = [](const std::string& t) {
      if (t.empty()) return false;
      std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
      if (i == t.size()) return false;
      for (; i < t.size(); ++i)
        if (t[i] < '0' || t[i] > '9') return false;
      return true;
    };
    auto to_mpz = [](std::string t) {
      if (!t.empty() && t[0] == '+') t.erase(t.begin());
      return mpz_class(t, 10);
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) {
      if (!valid_int(s)) throw InvalidScalar("not a rational literal: '" + s + "'");
      return Rat(to_mpz(s), mpz_class(1));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    trim(num);
    trim(den);
    if (!valid_int(num) || !valid_int(den)) throw InvalidScalar("not a rational literal: '" + s + "'");
    return Rat(to_mpz(num), to_mpz(den));
  }

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  /// Round-to-nearest conversion; the only route from exact to floating values.
  double to_float() const { return mpq_get_d_nearest(v_); }

  std::string str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  Rat operator-() const { return from_raw(-v_); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw InvalidScalar("division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

  static Rat from_raw(mpq_class q) {
    Rat r;
    r.v_ = std::move(q);
    r.v_.canonicalize();
    return r;
  }

 private:
  // Round-half-even quotient with exactly 53 significant bits.
  static double mpq_get_d_nearest(const mpq_class& q) {
    if (sgn(q) == 0) return 0.0;
    mpz_class n = abs(q.get_num());
    const mpz_class& d = q.get_den();
    long shift = 53 + static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2)) -
                 static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2));
    mpz_class quo, rem;
    const mpz_class lo = mpz_class(1) << 52, hi = mpz_class(1) << 53;
    for (;;) {
      mpz_class scaled = shift >= 0 ? mpz_class(n << static_cast<mp_bitcnt_t>(shift)) : n;
      mpz_class div = shift >= 0 ? d : mpz_class(d << static_cast<mp_bitcnt_t>(-shift));
      mpz_fdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(), div.get_mpz_t());
      if (quo >= hi) {
        --shift;
      } else if (quo < lo) {
        ++shift;
      } else {
        mpz_class twice = rem * 2;
        if (twice > div || (twice == div && mpz_odd_p(quo.get_mpz_t()))) quo += 1;
        break;
      }
    }
    double out = std::ldexp(quo.get_d(), static_cast<int>(-shift));
    return sgn(q) < 0 ? -out : out;
  }

  mpq_class v_{0};
};

/// Canonical rational n/d.
template <std::integral I, std::integral J>
inline Rat rat_make(I n, J d) {
  return Rat(n, d);
}
inline Rat rat_make(const mpz_class& n, const mpz_class& d) { return Rat(n, d); }

inline Rat pow(const Rat& base, unsigned e) {
  Rat out(1);
  for (unsigned i = 0; i < e; ++i) out *= base;
  return out;
}

/// (-1)^n as a rational.
inline Rat sign_pow(long long n) { return (n % 2 == 0) ? Rat(1) : Rat(-1); }

/// Gaussian rational a + b i.
class GRat {
 public:
  GRat() = default;
  GRat(Rat re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  GRat(I n) : re_(n) {}  // NOLINT(google-explicit-constructor)
  GRat(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

  static GRat i() { return GRat(Rat(0), Rat(1)); }

  const Rat& re() const { return re_; }
  const Rat& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  GRat conj() const { return GRat(re_, -im_); }

  GRat operator-() const { return GRat(-re_, -im_); }
  GRat& operator+=(const GRat& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GRat& operator-=(const GRat& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GRat& operator*=(const GRat& o) {
    Rat re = re_ * o.re_ - im_ * o.im_;
    Rat im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  GRat& operator/=(const GRat& o) {
    Rat n2 = o.re_ * o.re_ + o.im_ * o.im_;
    if (n2.is_zero()) throw InvalidScalar("division by zero");
    *this *= o.conj();
    re_ /= n2;
    im_ /= n2;
    return *this;
  }

  friend GRat operator+(GRat a, const GRat& b) { return a += b; }
  friend GRat operator-(GRat a, const GRat& b) { return a -= b; }
  friend GRat operator*(GRat a, const GRat& b) { return a *= b; }
  friend GRat operator/(GRat a, const GRat& b) { return a /= b; }
  friend bool operator==(const GRat& a, const GRat& b) = default;

  std::string str() const {
    if (im_.is_zero()) return re_.str();
    std::string imag = (im_ == Rat(1)) ? "i" : (im_ == Rat(-1)) ? "-i" : im_.str() + "i";
    if (re_.is_zero()) return imag;
    if (im_.sign() > 0) return re_.str() + "+" + imag;
    return re_.str() + imag;
  }

  friend std::ostream& operator<<(std::ostream& os, const GRat& g) { return os << g.str(); }

 private:
  Rat re_;
  Rat im_;
};

inline GRat grat_mul(const GRat& a, const GRat& b) { return a * b; }

}  // namespace bilab
