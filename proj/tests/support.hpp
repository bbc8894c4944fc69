#pragma once

// Shared helpers for the test suites: deterministic random generators for
// scalars, polynomials and elements, plus independent oracles (brute-force
// tableau counting, schoolbook polynomial products, finite differences) used
// to cross-check the library's closed forms.

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bicomm/bicomm.hpp"

namespace testsupport {

using bicomm::Element;
using bicomm::Integer;
using bicomm::Monomial;
using bicomm::Poly;
using bicomm::Rational;

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  return d(rng);
}

inline Rational random_rational(Rng& rng, bool allow_zero = true) {
  for (;;) {
    int num = uniform_int(rng, -6, 6);
    if (!allow_zero && num == 0) continue;
    int den = uniform_int(rng, 1, 4);
    return Rational(num) / Rational(den);
  }
}

// A random monomial with both y-degree and z-degree positive (inside the
// algebra square), indices bounded by dim, total degree bounded by maxdeg.
inline Monomial random_square_monomial(Rng& rng, int dim, int maxdeg = 5) {
  int ydeg = uniform_int(rng, 1, maxdeg - 1);
  int zdeg = uniform_int(rng, 1, maxdeg - ydeg);
  Monomial m;
  for (int t = 0; t < ydeg; ++t) m = m.with_increment(bicomm::yvar(uniform_int(rng, 1, dim)), 1);
  for (int t = 0; t < zdeg; ++t) m = m.with_increment(bicomm::zvar(uniform_int(rng, 1, dim)), 1);
  return m;
}

inline Poly random_square_poly(Rng& rng, int dim, int terms = 3, int maxdeg = 5) {
  Poly p(dim);
  for (int t = 0; t < terms; ++t) {
    p += Poly::monomial(dim, random_square_monomial(rng, dim, maxdeg),
                        random_rational(rng, /*allow_zero=*/false));
  }
  return p;
}

// A random element mixing a linear part and a square part.
inline Element random_element(Rng& rng, int dim, int linear_terms = 2, int square_terms = 2) {
  Element e(dim);
  for (int t = 0; t < linear_terms; ++t) {
    e += Element::generator(dim, uniform_int(rng, 1, dim)) *
         random_rational(rng, /*allow_zero=*/false);
  }
  if (square_terms > 0) {
    e += Element::from_poly(random_square_poly(rng, dim, square_terms));
  }
  return e;
}

// A random fully bracketed term with the given leaves (any order/shape).
inline bicomm::Term random_bracketing(Rng& rng, const std::vector<int>& leaves) {
  if (leaves.size() == 1) return bicomm::Term::leaf(leaves.front());
  std::size_t cut = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(leaves.size()) - 1));
  std::vector<int> left(leaves.begin(), leaves.begin() + static_cast<std::ptrdiff_t>(cut));
  std::vector<int> right(leaves.begin() + static_cast<std::ptrdiff_t>(cut), leaves.end());
  return bicomm::Term::product(random_bracketing(rng, left), random_bracketing(rng, right));
}

inline bicomm::Term random_term(Rng& rng, int dim, int degree) {
  std::vector<int> leaves;
  for (int t = 0; t < degree; ++t) leaves.push_back(uniform_int(rng, 1, dim));
  return random_bracketing(rng, leaves);
}

// Oracle: number of standard Young tableaux of two-row shape (a, b) by the
// ballot-path recursion (remove the cell holding the largest entry), fully
// independent of hook lengths.
inline long syt_count(int a, int b) {
  if (a < b || b < 0) return 0;
  if (a == 0 && b == 0) return 1;
  long total = 0;
  if (a - 1 >= b) total += syt_count(a - 1, b);
  if (b >= 1) total += syt_count(a, b - 1);
  return total;
}

// Oracle: schoolbook polynomial product as a flat list of (monomial, coeff)
// pairs combined by quadratic scanning — shares no code path with Poly's
// map-based accumulation.
inline std::vector<std::pair<Monomial, Rational>> naive_product(const Poly& a, const Poly& b) {
  std::vector<std::pair<Monomial, Rational>> flat;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      flat.emplace_back(ma.times(mb), ca * cb);
    }
  }
  std::vector<std::pair<Monomial, Rational>> combined;
  for (const auto& [m, c] : flat) {
    bool found = false;
    for (auto& [cm, cc] : combined) {
      if (cm == m) {
        cc += c;
        found = true;
        break;
      }
    }
    if (!found) combined.emplace_back(m, c);
  }
  std::vector<std::pair<Monomial, Rational>> out;
  for (const auto& [m, c] : combined) {
    if (!c.is_zero()) out.emplace_back(m, c);
  }
  return out;
}

inline bool same_terms(const Poly& p, const std::vector<std::pair<Monomial, Rational>>& terms) {
  if (p.terms().size() != terms.size()) return false;
  for (const auto& [m, c] : terms) {
    if (p.coefficient(m) != c) return false;
  }
  return true;
}

// Finite differences: value sequence of a polynomial of degree exactly k has
// constant nonzero k-th differences and vanishing (k+1)-st differences.
inline std::vector<Integer> difference(const std::vector<Integer>& v) {
  std::vector<Integer> out;
  for (std::size_t i = 1; i < v.size(); ++i) out.push_back(v[i] - v[i - 1]);
  return out;
}

inline bool is_polynomial_of_degree(std::vector<Integer> vals, int k) {
  for (int step = 0; step < k; ++step) {
    if (vals.size() < 2) return false;
    vals = difference(vals);
  }
  if (vals.size() < 2) return false;  // need evidence the next difference vanishes
  for (const Integer& v : vals) {
    if (v != vals.front()) return false;
  }
  if (vals.front() == 0) return false;  // degree would be lower
  return true;
}

// Evaluates a polynomial at a concrete point, variables indexed as in Poly
// (y-block then z-block); used to cross-check symbolic against concrete
// evaluation paths.
inline Rational poly_value(const Poly& p, const std::vector<Rational>& ypoint,
                           const std::vector<Rational>& zpoint) {
  Rational total(0);
  for (const auto& [m, c] : p.terms()) {
    Rational v = c;
    for (const auto& [idx, exp] : m.y_exponents()) {
      for (int t = 0; t < exp; ++t) v *= ypoint.at(static_cast<std::size_t>(idx - 1));
    }
    for (const auto& [idx, exp] : m.z_exponents()) {
      for (int t = 0; t < exp; ++t) v *= zpoint.at(static_cast<std::size_t>(idx - 1));
    }
    total += v;
  }
  return total;
}

}  // namespace testsupport
