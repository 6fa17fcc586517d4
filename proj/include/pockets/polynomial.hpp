#ifndef POCKETS_POLYNOMIAL_HPP
#define POCKETS_POLYNOMIAL_HPP

#include <initializer_list>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pockets/errors.hpp"
#include "pockets/types.hpp"

namespace pockets {

// Dense univariate polynomial, coefficients ascending by degree.
// Invariant: no trailing zero coefficient; the zero polynomial is the empty
// coefficient list and reports degree -1.
template <class Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Scalar& c) {
    if (c != 0) c_.push_back(c);
  }
  Polynomial(int c) : Polynomial(Scalar(c)) {}
  explicit Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) {
    prune();
  }
  Polynomial(std::initializer_list<Scalar> coeffs)
      : c_(coeffs.begin(), coeffs.end()) {
    prune();
  }

  static Polynomial monomial(int deg, const Scalar& coeff = Scalar(1)) {
    if (coeff == 0) return Polynomial();
    std::vector<Scalar> c(deg + 1, Scalar(0));
    c[deg] = coeff;
    return Polynomial(std::move(c));
  }
  static Polynomial x() { return monomial(1); }
  // x - r
  static Polynomial x_minus(const Scalar& r) {
    return Polynomial(std::vector<Scalar>{Scalar(-r), Scalar(1)});
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coeffs() const { return c_; }

  Scalar coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Scalar(0);
    return c_[i];
  }
  const Scalar& leading() const { return c_.back(); }

  bool operator==(const Polynomial& o) const { return c_ == o.c_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& x : r.c_) x = Scalar(-x);
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    prune();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    prune();
    return *this;
  }
  Polynomial& operator*=(const Scalar& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    a += b;
    return a;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    a -= b;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const Scalar& s) {
    a *= s;
    return a;
  }
  friend Polynomial operator*(const Scalar& s, Polynomial a) {
    a *= s;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
  }

  Polynomial pow(unsigned e) const {
    Polynomial r(Scalar(1));
    Polynomial base(*this);
    while (e) {
      if (e & 1u) r = r * base;
      base = base * base;
      e >>= 1u;
    }
    return r;
  }

  // Horner evaluation; T must be constructible from Scalar.
  template <class T>
  T eval(const T& x) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = T(acc * x + T(*it));
    return acc;
  }

  // p(x - s): substitution, exact.
  Polynomial shift(const Scalar& s) const {
    Polynomial acc;
    const Polynomial lin = x_minus(s);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      acc = acc * lin + Polynomial(*it);
    return acc;
  }

  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      Scalar c = coeff(i);
      if (c == 0) continue;
      if (!first) os << (c < 0 ? " - " : " + ");
      if (first && c < 0) os << "-";
      Scalar a = c < 0 ? Scalar(-c) : c;
      if (a != 1 || i == 0) os << to_string(a);
      if (i > 0) {
        if (a != 1) os << "*";
        os << var;
        if (i > 1) os << "^" << i;
      }
      first = false;
    }
    return os.str();
  }

 private:
  void prune() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Scalar> c_;
};

using IntPoly = Polynomial<Int>;
using RatPoly = Polynomial<Rat>;

inline RatPoly to_rat(const IntPoly& p) {
  std::vector<Rat> c(p.coeffs().begin(), p.coeffs().end());
  return RatPoly(std::move(c));
}

// Throws unless every coefficient is an integer.
inline IntPoly to_int_exact(const RatPoly& p) {
  std::vector<Int> c;
  c.reserve(p.coeffs().size());
  for (const Rat& q : p.coeffs()) {
    if (q.get_den() != 1)
      throw internal_error("polynomial is not integral: coefficient " +
                           q.get_str());
    c.push_back(q.get_num());
  }
  return IntPoly(std::move(c));
}

// Quotient and remainder over a field scalar.
template <class Scalar>
std::pair<Polynomial<Scalar>, Polynomial<Scalar>> divmod(
    const Polynomial<Scalar>& a, const Polynomial<Scalar>& b) {
  if (b.is_zero()) throw invalid_parameter("polynomial division by zero");
  std::vector<Scalar> rem(a.coeffs());
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial<Scalar>(), a};
  std::vector<Scalar> quot(a.degree() - db + 1, Scalar(0));
  for (int i = a.degree(); i >= db; --i) {
    Scalar q = rem[i] / b.leading();
    if (q == 0) continue;
    quot[i - db] = q;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeff(j);
  }
  return {Polynomial<Scalar>(std::move(quot)), Polynomial<Scalar>(std::move(rem))};
}

// Exact division of integer polynomials; throws if b does not divide a.
inline IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
  auto [q, r] = divmod(to_rat(a), to_rat(b));
  if (!r.is_zero())
    throw internal_error("inexact polynomial division: remainder " + r.str());
  return to_int_exact(q);
}

// gcd of all coefficients; positive, 0 for the zero polynomial.
inline Int content(const IntPoly& p) {
  Int g = 0;
  for (const Int& c : p.coeffs()) g = int_gcd(g, c);
  return g;
}

inline IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  Int g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<Int> c;
  c.reserve(p.coeffs().size());
  for (const Int& x : p.coeffs()) c.push_back(Int(x / g));
  return IntPoly(std::move(c));
}

// Primitive gcd with positive leading coefficient (Euclid over the
// rationals, result normalized to a primitive integer polynomial).
inline IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  RatPoly x = to_rat(a), y = to_rat(b);
  while (!y.is_zero()) {
    auto [q, r] = divmod(x, y);
    x = y;
    y = r;
  }
  if (x.is_zero()) return IntPoly();
  // Clear denominators, then take the primitive part.
  Int den = 1;
  for (const Rat& c : x.coeffs()) den = int_lcm(den, Int(c.get_den()));
  std::vector<Int> c;
  c.reserve(x.coeffs().size());
  for (const Rat& q : x.coeffs()) c.push_back(Int(Rat(q * den).get_num()));
  return primitive_part(IntPoly(std::move(c)));
}

inline IntPoly poly_lcm(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  return primitive_part(divide_exact(a * b, poly_gcd(a, b)));
}

// Newton divided-difference interpolation through distinct abscissae.
inline RatPoly interpolate(std::span<const std::pair<Rat, Rat>> points) {
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (points[i].first == points[j].first)
        throw invalid_parameter("interpolation abscissae must be distinct");
  if (n == 0) return RatPoly();
  std::vector<Rat> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
  // dd[i] becomes the divided difference f[x_0..x_i].
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      dd[i] = Rat((dd[i] - dd[i - 1]) /
                  (points[i].first - points[i - level].first));
  RatPoly result;
  for (std::size_t i = n; i-- > 0;) {
    result = result * RatPoly::x_minus(points[i].first) + RatPoly(dd[i]);
  }
  return result;
}

inline RatPoly interpolate(const std::vector<std::pair<Rat, Rat>>& points) {
  return interpolate(std::span<const std::pair<Rat, Rat>>(points));
}

}  // namespace pockets

#endif
