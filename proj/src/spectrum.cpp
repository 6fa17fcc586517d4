#include "pockets/spectrum.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <sstream>

#include "pockets/graph.hpp"
#include "pockets/numeric.hpp"

namespace pockets {

long double QuadraticRoot::approx() const {
  const long double sq = sqrtl(static_cast<long double>(discriminant().get_d()));
  const long double bb = static_cast<long double>(b.get_d());
  const long double aa = static_cast<long double>(a.get_d());
  return (-bb + (plus ? sq : -sq)) / (2.0L * aa);
}

QuadraticRoot QuadraticRoot::shifted(const Int& s) const {
  // Substitute x -> x - s; branches keep their order.
  return QuadraticRoot{a, Int(b - 2 * a * s), Int(a * s * s - b * s + c), plus};
}

std::string QuadraticRoot::str() const {
  std::ostringstream os;
  os << "(" << Int(-b).get_str() << (plus ? " + " : " - ") << "sqrt("
     << discriminant().get_str() << ")) / " << Int(2 * a).get_str();
  return os.str();
}

long double value_approx(const SpectrumValue& v) {
  if (std::holds_alternative<Rat>(v)) return to_long_double(std::get<Rat>(v));
  if (std::holds_alternative<QuadraticRoot>(v)) return std::get<QuadraticRoot>(v).approx();
  return static_cast<long double>(std::get<double>(v));
}

bool value_exact(const SpectrumValue& v) { return !std::holds_alternative<double>(v); }

bool value_equal_exact(const SpectrumValue& x, const SpectrumValue& y) {
  if (std::holds_alternative<Rat>(x) && std::holds_alternative<Rat>(y))
    return std::get<Rat>(x) == std::get<Rat>(y);
  if (std::holds_alternative<QuadraticRoot>(x) && std::holds_alternative<QuadraticRoot>(y))
    return std::get<QuadraticRoot>(x) == std::get<QuadraticRoot>(y);
  return false;
}

SpectrumValue value_shifted(const SpectrumValue& v, const Int& s) {
  if (std::holds_alternative<Rat>(v)) return Rat(std::get<Rat>(v) + Rat(s));
  if (std::holds_alternative<QuadraticRoot>(v)) return std::get<QuadraticRoot>(v).shifted(s);
  return std::get<double>(v) + s.get_d();
}

std::string value_str(const SpectrumValue& v) {
  if (std::holds_alternative<Rat>(v)) return std::get<Rat>(v).get_str();
  if (std::holds_alternative<QuadraticRoot>(v)) return std::get<QuadraticRoot>(v).str();
  std::ostringstream os;
  os.precision(17);
  os << std::get<double>(v);
  return os.str();
}

std::pair<SpectrumValue, SpectrumValue> quadratic_roots(const Int& a_in, const Int& b_in,
                                                        const Int& c_in) {
  if (a_in == 0) throw invalid_parameter("quadratic with zero leading coefficient");
  Int a = a_in, b = b_in, c = c_in;
  if (a < 0) {
    a = -a;
    b = -b;
    c = -c;
  }
  Int g = int_gcd(int_gcd(a, b), c);
  if (g > 1) {
    a /= g;
    b /= g;
    c /= g;
  }
  Int disc(b * b - 4 * a * c);
  if (disc < 0)
    throw invalid_parameter("quadratic has negative discriminant: " + disc.get_str());
  Int root;
  if (perfect_square(disc, root)) {
    Rat lo(Rat(Int(-b - root)) / Rat(Int(2 * a)));
    Rat hi(Rat(Int(-b + root)) / Rat(Int(2 * a)));
    lo.canonicalize();
    hi.canonicalize();
    return {SpectrumValue(lo), SpectrumValue(hi)};
  }
  return {SpectrumValue(QuadraticRoot{a, b, c, false}),
          SpectrumValue(QuadraticRoot{a, b, c, true})};
}

std::pair<SpectrumValue, SpectrumValue> quadratic_from_product(const Int& u, const Int& w,
                                                               const Int& t) {
  // (x - u)(x - w) - t
  return quadratic_roots(1, Int(-(u + w)), Int(u * w - t));
}

void SpectrumMultiset::add(const SpectrumValue& v, int mult) {
  if (mult <= 0) throw invalid_parameter("multiplicity must be >= 1");
  if (value_exact(v)) {
    for (auto& e : entries_)
      if (value_equal_exact(e.value, v)) {
        e.multiplicity += mult;
        return;
      }
  }
  const long double key = value_approx(v);
  auto it = entries_.begin();
  while (it != entries_.end() && value_approx(it->value) < key) ++it;
  entries_.insert(it, Entry{v, mult});
}

void SpectrumMultiset::add_all(const SpectrumMultiset& o, int times) {
  for (const auto& e : o.entries_) add(e.value, e.multiplicity * times);
}

bool SpectrumMultiset::remove_one(const SpectrumValue& v) {
  for (auto it = entries_.begin(); it != entries_.end(); ++it)
    if (value_equal_exact(it->value, v)) {
      if (--it->multiplicity == 0) entries_.erase(it);
      return true;
    }
  return false;
}

void SpectrumMultiset::drop_largest(int copies) {
  while (copies > 0) {
    if (entries_.empty()) throw invalid_parameter("drop_largest on empty spectrum");
    auto& top = entries_.back();
    const int take = std::min(copies, top.multiplicity);
    top.multiplicity -= take;
    copies -= take;
    if (top.multiplicity == 0) entries_.pop_back();
  }
}

int SpectrumMultiset::total() const {
  int t = 0;
  for (const auto& e : entries_) t += e.multiplicity;
  return t;
}

const SpectrumMultiset::Entry& SpectrumMultiset::largest() const {
  if (entries_.empty()) throw invalid_parameter("largest of empty spectrum");
  return entries_.back();
}

SpectrumMultiset SpectrumMultiset::shifted(const Int& s) const {
  SpectrumMultiset r;
  for (const auto& e : entries_) r.add(value_shifted(e.value, s), e.multiplicity);
  return r;
}

SpectrumMultiset SpectrumMultiset::scaled(int k) const {
  SpectrumMultiset r;
  for (const auto& e : entries_) r.add(e.value, e.multiplicity * k);
  return r;
}

std::vector<double> SpectrumMultiset::to_doubles() const {
  std::vector<double> out;
  out.reserve(total());
  for (const auto& e : entries_)
    for (int i = 0; i < e.multiplicity; ++i)
      out.push_back(static_cast<double>(value_approx(e.value)));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Rat> SpectrumMultiset::exact_sum() const {
  Rat sum(0);
  // Surd branches must pair with equal multiplicity: each pair sums to -b/a.
  std::map<std::array<std::string, 3>, std::pair<int, int>> surds;
  for (const auto& e : entries_) {
    if (std::holds_alternative<double>(e.value)) return std::nullopt;
    if (std::holds_alternative<Rat>(e.value)) {
      sum += std::get<Rat>(e.value) * e.multiplicity;
    } else {
      const auto& q = std::get<QuadraticRoot>(e.value);
      auto& slot = surds[{q.a.get_str(), q.b.get_str(), q.c.get_str()}];
      (q.plus ? slot.first : slot.second) += e.multiplicity;
      // Each branch contributes -b/2a; the ±sqrt parts cancel once the
      // branch multiplicities are known to match.
      sum += Rat(Int(-q.b)) / Rat(q.a) * e.multiplicity / 2;
    }
  }
  for (const auto& [key, counts] : surds)
    if (counts.first != counts.second) return std::nullopt;
  Rat canon(sum);
  canon.canonicalize();
  return canon;
}

std::string SpectrumMultiset::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& e : entries_) {
    if (!first) os << ", ";
    os << value_str(e.value);
    if (e.multiplicity > 1) os << " x" << e.multiplicity;
    first = false;
  }
  os << "}";
  return os.str();
}

SpectrumMultiset spectrum_of_matrix(const IntMatrix& m) {
  const int n = static_cast<int>(m.rows());
  IntPoly f = charpoly_exact(m);
  SpectrumMultiset spec;

  // Gershgorin bound on eigenvalue magnitude.
  Int bound = 0;
  for (int i = 0; i < n; ++i) {
    Int row = 0;
    for (int j = 0; j < n; ++j) row += int_abs(m(i, j));
    bound = std::max(bound, row);
  }

  int extracted = 0;
  for (Int r(-bound); r <= bound; ++r) {
    while (!f.is_zero() && f.degree() > 0 && f.eval<Int>(r) == 0) {
      auto [q, rem] = divmod(to_rat(f), RatPoly::x_minus(Rat(r)));
      f = to_int_exact(q);
      spec.add(Rat(r), 1);
      ++extracted;
    }
  }

  if (f.degree() == 2) {
    auto [lo, hi] = quadratic_roots(f.coeff(2), f.coeff(1), f.coeff(0));
    spec.add(lo, 1);
    spec.add(hi, 1);
  } else if (f.degree() >= 3) {
    // Irrational part beyond quadratic: fall back to the numeric oracle for
    // the residual eigenvalues.
    Eigen::MatrixXd md(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) md(i, j) = m(i, j).get_d();
    std::vector<double> numeric = eig_sym(md).values;
    // Peel off the values already accounted for exactly.
    std::vector<double> exact_vals;
    for (const auto& e : spec.entries())
      for (int i = 0; i < e.multiplicity; ++i)
        exact_vals.push_back(static_cast<double>(value_approx(e.value)));
    for (double ev : exact_vals) {
      auto best = numeric.end();
      double best_gap = 0;
      for (auto it = numeric.begin(); it != numeric.end(); ++it) {
        double gap = std::abs(*it - ev);
        if (best == numeric.end() || gap < best_gap) {
          best = it;
          best_gap = gap;
        }
      }
      if (best != numeric.end()) numeric.erase(best);
    }
    for (double v : numeric) spec.add(SpectrumValue(v), 1);
  } else if (f.degree() == 1) {
    throw internal_error("monic integer polynomial left a linear factor");
  }

  if (spec.total() != n) throw internal_error("spectrum extraction lost eigenvalues");
  return spec;
}

SpectrumMultiset sigma_adjacency(const Graph& g) {
  return spectrum_of_matrix(adjacency_matrix(g));
}

SpectrumMultiset sigma_signless_laplacian(const Graph& g) {
  return spectrum_of_matrix(signless_laplacian(g));
}

}  // namespace pockets
