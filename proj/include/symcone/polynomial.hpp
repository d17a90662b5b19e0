#pragma once

// Small dense polynomial types over an arbitrary coefficient field, plus an
// exact rational type. Used by the rank-1 bidifferential bracket, where the
// intertwining checks run over rationals, and by the bracket/integral
// composition test, which needs the integral operator's polynomial image.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "symcone/linalg.hpp"

namespace symcone {

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Fraction() = default;
  Fraction(std::int64_t n) : num(n), den(1) {}
  Fraction(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::domain_error("Fraction: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  Fraction operator+(const Fraction& o) const {
    return Fraction(num * o.den + o.num * den, den * o.den);
  }
  Fraction operator-(const Fraction& o) const {
    return Fraction(num * o.den - o.num * den, den * o.den);
  }
  Fraction operator*(const Fraction& o) const {
    return Fraction(num * o.num, den * o.den);
  }
  Fraction operator/(const Fraction& o) const {
    if (o.num == 0) throw std::domain_error("Fraction: division by zero");
    return Fraction(num * o.den, den * o.num);
  }
  Fraction operator-() const { return Fraction(-num, den); }
  bool operator==(const Fraction& o) const {
    return num == o.num && den == o.den;
  }
  bool is_zero() const { return num == 0; }
  double to_double() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }
};

namespace poly_detail {
inline bool coeff_is_zero(const Fraction& c) { return c.is_zero(); }
inline bool coeff_is_zero(const cplx& c) { return c == cplx(0.0); }
}  // namespace poly_detail

template <typename T>
class Poly1 {
 public:
  Poly1() = default;
  explicit Poly1(std::vector<T> coeffs) : c_(std::move(coeffs)) {}
  static Poly1 monomial(int degree, T coeff = T(1)) {
    std::vector<T> c(static_cast<std::size_t>(degree) + 1, T(0));
    c.back() = coeff;
    return Poly1(std::move(c));
  }

  std::size_t size() const { return c_.size(); }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  void set(std::size_t i, T v) {
    if (i >= c_.size()) c_.resize(i + 1, T(0));
    c_[i] = v;
  }

  Poly1 operator+(const Poly1& o) const {
    Poly1 r;
    r.c_.assign(std::max(c_.size(), o.c_.size()), T(0));
    for (std::size_t i = 0; i < r.c_.size(); ++i)
      r.c_[i] = coeff(i) + o.coeff(i);
    return r;
  }
  Poly1 operator-(const Poly1& o) const {
    Poly1 r;
    r.c_.assign(std::max(c_.size(), o.c_.size()), T(0));
    for (std::size_t i = 0; i < r.c_.size(); ++i)
      r.c_[i] = coeff(i) - o.coeff(i);
    return r;
  }
  Poly1 scaled(T s) const {
    Poly1 r(*this);
    for (auto& v : r.c_) v = v * s;
    return r;
  }
  Poly1 dz() const {
    if (c_.size() <= 1) return Poly1();
    std::vector<T> r(c_.size() - 1, T(0));
    for (std::size_t i = 1; i < c_.size(); ++i)
      r[i - 1] = c_[i] * T(static_cast<std::int64_t>(i));
    return Poly1(std::move(r));
  }
  Poly1 mul_z() const {
    std::vector<T> r(c_.size() + 1, T(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i + 1] = c_[i];
    return Poly1(std::move(r));
  }
  bool is_zero() const {
    for (const auto& v : c_)
      if (!poly_detail::coeff_is_zero(v)) return false;
    return true;
  }
  T eval(T z) const {
    T acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * z + c_[i];
    return acc;
  }

 private:
  std::vector<T> c_;
};

template <typename T>
class Poly2 {
 public:
  Poly2() = default;
  static Poly2 constant(T v) {
    Poly2 p;
    p.set(0, 0, v);
    return p;
  }
  static Poly2 monomial(int i, int j, T coeff = T(1)) {
    Poly2 p;
    p.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), coeff);
    return p;
  }

  T coeff(std::size_t i, std::size_t j) const {
    if (i >= c_.size() || j >= c_[i].size()) return T(0);
    return c_[i][j];
  }
  void set(std::size_t i, std::size_t j, T v) {
    if (i >= c_.size()) c_.resize(i + 1);
    if (j >= c_[i].size()) c_[i].resize(j + 1, T(0));
    c_[i][j] = v;
  }
  std::size_t deg_x_bound() const { return c_.size(); }
  std::size_t deg_y_bound() const {
    std::size_t m = 0;
    for (const auto& row : c_) m = std::max(m, row.size());
    return m;
  }

  Poly2 operator+(const Poly2& o) const {
    Poly2 r(*this);
    for (std::size_t i = 0; i < o.c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_[i].size(); ++j)
        r.set(i, j, r.coeff(i, j) + o.c_[i][j]);
    return r;
  }
  Poly2 operator-(const Poly2& o) const {
    Poly2 r(*this);
    for (std::size_t i = 0; i < o.c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_[i].size(); ++j)
        r.set(i, j, r.coeff(i, j) - o.c_[i][j]);
    return r;
  }
  Poly2 scaled(T s) const {
    Poly2 r(*this);
    for (auto& row : r.c_)
      for (auto& v : row) v = v * s;
    return r;
  }
  Poly2 operator*(const Poly2& o) const {
    Poly2 r;
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < c_[i].size(); ++j) {
        if (poly_detail::coeff_is_zero(c_[i][j])) continue;
        for (std::size_t p = 0; p < o.c_.size(); ++p)
          for (std::size_t q = 0; q < o.c_[p].size(); ++q)
            r.set(i + p, j + q, r.coeff(i + p, j + q) + c_[i][j] * o.c_[p][q]);
      }
    return r;
  }

  Poly2 dx() const {
    Poly2 r;
    for (std::size_t i = 1; i < c_.size(); ++i)
      for (std::size_t j = 0; j < c_[i].size(); ++j)
        if (!poly_detail::coeff_is_zero(c_[i][j]))
          r.set(i - 1, j, c_[i][j] * T(static_cast<std::int64_t>(i)));
    return r;
  }
  Poly2 dy() const {
    Poly2 r;
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 1; j < c_[i].size(); ++j)
        if (!poly_detail::coeff_is_zero(c_[i][j]))
          r.set(i, j - 1, c_[i][j] * T(static_cast<std::int64_t>(j)));
    return r;
  }
  Poly2 mul_x() const {
    Poly2 r;
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < c_[i].size(); ++j)
        if (!poly_detail::coeff_is_zero(c_[i][j])) r.set(i + 1, j, c_[i][j]);
    return r;
  }
  Poly2 mul_y() const {
    Poly2 r;
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < c_[i].size(); ++j)
        if (!poly_detail::coeff_is_zero(c_[i][j])) r.set(i, j + 1, c_[i][j]);
    return r;
  }

  Poly1<T> restrict_diagonal() const {
    Poly1<T> r;
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < c_[i].size(); ++j)
        if (!poly_detail::coeff_is_zero(c_[i][j]))
          r.set(i + j, r.coeff(i + j) + c_[i][j]);
    return r;
  }

  bool is_zero() const {
    for (const auto& row : c_)
      for (const auto& v : row)
        if (!poly_detail::coeff_is_zero(v)) return false;
    return true;
  }

  T eval(T x, T y) const {
    T acc(0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      T row(0);
      for (std::size_t j = c_[i].size(); j-- > 0;) row = row * y + c_[i][j];
      T xp(1);
      for (std::size_t t = 0; t < i; ++t) xp = xp * x;
      acc = acc + row * xp;
    }
    return acc;
  }

 private:
  std::vector<std::vector<T>> c_;
};

template <typename T>
inline T pochhammer_t(T x, int n) {
  T acc(1);
  for (int t = 0; t < n; ++t) acc = acc * (x + T(t));
  return acc;
}

template <typename T>
inline T factorial_t(int n) {
  T acc(1);
  for (int t = 2; t <= n; ++t) acc = acc * T(t);
  return acc;
}

// The degree-l bidifferential bracket
//   f |-> sum_{j=0}^l (-1)^j (lambda+l-j)_j (mu+j)_{l-j} / (j! (l-j)!)
//            d^l f / dx^{l-j} dy^j  restricted to x = y = z.
template <typename T>
inline Poly1<T> rankin_cohen(T lambda, T mu, int l, const Poly2<T>& f) {
  if (l < 0) throw std::invalid_argument("rankin_cohen: l must be >= 0");
  Poly1<T> out;
  for (int j = 0; j <= l; ++j) {
    T coef = pochhammer_t(lambda + T(l - j), j) * pochhammer_t(mu + T(j), l - j) /
             (factorial_t<T>(j) * factorial_t<T>(l - j));
    if (j % 2 == 1) coef = -coef;
    Poly2<T> der = f;
    for (int t = 0; t < l - j; ++t) der = der.dx();
    for (int t = 0; t < j; ++t) der = der.dy();
    out = out + der.restrict_diagonal().scaled(coef);
  }
  return out;
}

// Infinitesimal weight actions. Derived by differentiating the Moebius
// action of weight lambda along the three one-parameter subgroups; they
// satisfy [E,R] = -2R, [E,L] = 2L, [R,L] = E.
//   raising  R: f |-> f'
//   euler    E: f |-> 2 x f' + lambda f
//   lowering L: f |-> x^2 f' + lambda x f
enum class Sl2Gen { Raising, Euler, Lowering };

template <typename T>
inline Poly2<T> sl2_tensor_action(Sl2Gen g, T lambda, T mu, const Poly2<T>& f) {
  switch (g) {
    case Sl2Gen::Raising:
      return f.dx() + f.dy();
    case Sl2Gen::Euler:
      return f.dx().mul_x().scaled(T(2)) + f.dy().mul_y().scaled(T(2)) +
             f.scaled(lambda + mu);
    case Sl2Gen::Lowering:
      return f.dx().mul_x().mul_x() + f.scaled(lambda).mul_x() +
             f.dy().mul_y().mul_y() + f.scaled(mu).mul_y();
  }
  throw std::logic_error("sl2_tensor_action: unreachable");
}

template <typename T>
inline Poly1<T> sl2_target_action(Sl2Gen g, T nu, const Poly1<T>& f) {
  switch (g) {
    case Sl2Gen::Raising:
      return f.dz();
    case Sl2Gen::Euler:
      return f.dz().mul_z().scaled(T(2)) + f.scaled(nu);
    case Sl2Gen::Lowering:
      return f.dz().mul_z().mul_z() + f.scaled(nu).mul_z();
  }
  throw std::logic_error("sl2_target_action: unreachable");
}

}  // namespace symcone
