#ifndef POCKETS_SPECTRUM_HPP
#define POCKETS_SPECTRUM_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pockets/exact_linalg.hpp"
#include "pockets/types.hpp"

namespace pockets {

// One root of an integer quadratic a x^2 + b x + c, kept symbolic.
// Canonical: a > 0, gcd(a,b,c) = 1, discriminant positive and not a
// perfect square (perfect squares collapse to Rat on construction).
struct QuadraticRoot {
  Int a, b, c;
  bool plus;  // (-b + sqrt(disc)) / 2a when true

  Int discriminant() const { return Int(b * b - 4 * a * c); }
  long double approx() const;
  // Root of p(x - s), i.e. this value plus s.
  QuadraticRoot shifted(const Int& s) const;
  bool operator==(const QuadraticRoot& o) const {
    return a == o.a && b == o.b && c == o.c && plus == o.plus;
  }
  std::string str() const;
};

using SpectrumValue = std::variant<Rat, QuadraticRoot, double>;

long double value_approx(const SpectrumValue& v);
bool value_exact(const SpectrumValue& v);
// Exact equality; false whenever either side is numeric.
bool value_equal_exact(const SpectrumValue& x, const SpectrumValue& y);
SpectrumValue value_shifted(const SpectrumValue& v, const Int& s);
std::string value_str(const SpectrumValue& v);

// Both roots of a x^2 + b x + c (ascending); rational when the
// discriminant is a perfect square.  Throws on negative discriminant.
std::pair<SpectrumValue, SpectrumValue> quadratic_roots(const Int& a, const Int& b,
                                                        const Int& c);
// Roots of (x - u)(x - w) - t = 0.
std::pair<SpectrumValue, SpectrumValue> quadratic_from_product(const Int& u, const Int& w,
                                                               const Int& t);

// Multiset of eigenvalue descriptors, ascending by numeric value; exact
// duplicates merge by multiplicity addition.
class SpectrumMultiset {
 public:
  struct Entry {
    SpectrumValue value;
    int multiplicity;
  };

  void add(const SpectrumValue& v, int mult = 1);
  void add_all(const SpectrumMultiset& o, int times = 1);
  // Removes one copy of an exactly-matching entry; false if absent.
  bool remove_one(const SpectrumValue& v);
  // Removes `copies` of the largest entry (ascending convention: drops the
  // top of the order).
  void drop_largest(int copies = 1);

  int total() const;
  bool empty() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }
  const Entry& largest() const;

  SpectrumMultiset shifted(const Int& s) const;
  SpectrumMultiset scaled(int k) const;  // every multiplicity times k

  std::vector<double> to_doubles() const;  // expanded, ascending
  // Exact sum; requires surd branches to pair up and no numeric entries.
  std::optional<Rat> exact_sum() const;

  std::string str() const;

 private:
  std::vector<Entry> entries_;
};

// Exact-first spectrum of a symmetric integer matrix: integer eigenvalues
// (with multiplicity) by root extraction from the characteristic
// polynomial, a surd pair when the remaining factor is quadratic, numeric
// fallback entries otherwise.
SpectrumMultiset spectrum_of_matrix(const IntMatrix& m);

class Graph;
SpectrumMultiset sigma_adjacency(const Graph& g);
SpectrumMultiset sigma_signless_laplacian(const Graph& g);

}  // namespace pockets

#endif
