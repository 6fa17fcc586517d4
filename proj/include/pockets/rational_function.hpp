#ifndef POCKETS_RATIONAL_FUNCTION_HPP
#define POCKETS_RATIONAL_FUNCTION_HPP

#include <optional>
#include <string>

#include "pockets/polynomial.hpp"

namespace pockets {

// Reduced quotient of integer polynomials.  Canonical form: numerator and
// denominator share no polynomial factor over the rationals and no integer
// content; the denominator has positive leading coefficient.  Denominators
// arising from coronals divide monic characteristic polynomials, so they
// come out primitive.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(IntPoly(1)) {}
  RationalFunction(const IntPoly& num) : num_(num), den_(IntPoly(1)) {}
  RationalFunction(int c) : num_(IntPoly(c)), den_(IntPoly(1)) {}
  RationalFunction(const Int& c) : num_(IntPoly(c)), den_(IntPoly(1)) {}
  RationalFunction(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw invalid_parameter("rational function with zero denominator");
    reduce();
  }
  static RationalFunction from_rat(const Rat& q) {
    return RationalFunction(IntPoly(Int(q.get_num())), IntPoly(Int(q.get_den())));
  }

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0 && den_.coeff(0) == 1; }
  const IntPoly& as_polynomial() const {
    if (!is_polynomial())
      throw internal_error("rational function is not a polynomial: " + str());
    return num_;
  }

  bool operator==(const RationalFunction& o) const {
    // Canonical forms are unique up to integer content placement, so
    // compare by cross multiplication.
    return num_ * o.den_ == o.num_ * den_;
  }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  RationalFunction operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
  }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw invalid_parameter("rational function division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }

  RationalFunction pow(unsigned e) const {
    return RationalFunction(num_.pow(e), den_.pow(e));
  }

  // f(x - s)
  RationalFunction shift(const Int& s) const {
    return RationalFunction(num_.shift(s), den_.shift(s));
  }

  // Defined wherever the denominator does not vanish.
  std::optional<Rat> eval(const Rat& x) const {
    Rat d = den_.eval<Rat>(x);
    if (d == 0) return std::nullopt;
    return Rat(num_.eval<Rat>(x) / d);
  }

  std::string str(const std::string& var = "x") const {
    if (is_polynomial()) return num_.str(var);
    return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
  }

 private:
  void reduce() {
    if (num_.is_zero()) {
      den_ = IntPoly(1);
      return;
    }
    IntPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0 || g.coeff(0) != 1) {
      num_ = divide_exact(num_, g);
      den_ = divide_exact(den_, g);
    }
    Int c = int_gcd(content(num_), content(den_));
    if (den_.leading() < 0) c = -c;
    if (c != 1) {
      num_ = scale_down(num_, c);
      den_ = scale_down(den_, c);
    }
  }

  static IntPoly scale_down(const IntPoly& p, const Int& c) {
    std::vector<Int> v;
    v.reserve(p.coeffs().size());
    for (const Int& x : p.coeffs()) v.push_back(Int(x / c));
    return IntPoly(std::move(v));
  }

  IntPoly num_, den_;
};

}  // namespace pockets

#endif
