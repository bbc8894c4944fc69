#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bicomm/matrix.hpp"
#include "bicomm/partition.hpp"

namespace bicomm {

// Coordinates of w in the highest-weight basis {hwv(la, j)} of its shape,
// indexed from hwv_index_min(la); nullopt when w is outside the span. The
// basis vectors have distinct leading monomials, so the small linear system
// below always has at most one solution.
inline std::optional<std::vector<Rational>> hwv_coordinates(const Element& w,
                                                            const Partition2& la) {
  if (w.dim() != 2) throw DomainError("highest-weight coordinates live in two generators");
  int jmin = hwv_index_min(la), jmax = hwv_index_max(la);
  std::vector<Element> basis;
  for (int j = jmin; j <= jmax; ++j) basis.push_back(hwv(HwvSpec(la, j)));

  std::map<Monomial, std::size_t, GrlexLess> row_of;
  auto note = [&](const Poly& p) {
    for (const auto& [m, c] : p.terms()) row_of.try_emplace(m, row_of.size());
  };
  for (const Element& b : basis) note(b.higher());
  note(w.higher());
  if (!w.linear().empty()) return std::nullopt;  // basis vectors all lie in the square

  Matrix a(row_of.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    for (const auto& [m, c] : basis[col].higher().terms()) a.at(row_of.at(m), col) = c;
  }
  std::vector<Rational> b(row_of.size(), Rational(0));
  for (const auto& [m, c] : w.higher().terms()) b[row_of.at(m)] = c;
  return solve_linear(a, b);
}

namespace detail {

// Common core of both row-raising maps. With s = la.l1 - la.l2 and
// D = derivation x1 -> x2:
//   z-side: D(w)*x1 - s*(w*x2)   (right multiplications)
//   y-side: x1*D(w) - s*(x2*w)   (left multiplications)
// Both send combinations of hwv(la, j) to combinations of hwv((l1, l2+1), j).
inline Element raise_core(const Element& w, const Partition2& la, bool left_side) {
  Element dw = derivation_x(w, 1, 2);
  Element g1 = Element::generator(2, 1);
  Element g2 = Element::generator(2, 2);
  Rational s(la.l1 - la.l2);
  if (left_side) return g1 * dw - s * (g2 * w);
  return dw * g1 - s * (w * g2);
}

}  // namespace detail

// One row-raising step on a combination w = sum_{j >= p} xi_j hwv(la, j)
// whose leading index p is positive (every term carries a factor y1^p). The
// output is a combination of hwv((l1, l2+1), j) with coordinates
// xi'_j = -(j+1) xi_{j+1}; in particular the leading index drops to p-1 and
// the result is nonzero whenever xi_p != 0.
inline Element raise_row_step(const Element& w, const Partition2& la, int p) {
  if (la.is_rectangular()) throw DomainError("shape is already rectangular");
  if (p < 1) throw DomainError("leading index must be positive; use the pure-z raising step");
  if (p > hwv_index_max(la)) throw DomainError("leading index out of range");
  auto xi = hwv_coordinates(w, la);
  if (!xi) throw DomainError("input is not a combination of highest weight vectors of this shape");
  int jmin = hwv_index_min(la);
  for (int j = jmin; j < p; ++j) {
    if (!(*xi)[static_cast<std::size_t>(j - jmin)].is_zero()) {
      throw DomainError("component below the stated leading index");
    }
  }
  if ((*xi)[static_cast<std::size_t>(p - jmin)].is_zero()) {
    throw DomainError("vanishing coordinate at the stated leading index");
  }
  return detail::raise_core(w, la, /*left_side=*/false);
}

// One row-raising step on a pure-z highest weight vector w = c * hwv(la, 0)
// (requires l2 >= 1; one-row shapes have no pure-z vector inside the
// square). The output is (l1 - l2) * c * hwv((l1, l2+1), 0).
inline Element raise_row_pure_z_step(const Element& w, const Partition2& la) {
  if (la.l2 < 1) {
    throw DomainError("one-row shapes have no pure-z highest weight vector in the square");
  }
  if (la.is_rectangular()) throw DomainError("shape is already rectangular");
  auto xi = hwv_coordinates(w, la);
  if (!xi) throw DomainError("input is not a combination of highest weight vectors of this shape");
  if ((*xi)[0].is_zero()) throw DomainError("input is not of pure-z form");
  for (std::size_t j = 1; j < xi->size(); ++j) {
    if (!(*xi)[j].is_zero()) throw DomainError("input is not of pure-z form");
  }
  return detail::raise_core(w, la, /*left_side=*/true);
}

struct TraceStep {
  std::string operation;
  Element output;
};

struct ConsequenceTrace {
  Element start;
  std::vector<TraceStep> steps;
  Element end;
};

// Drives any nonzero combination of hwv(la, j) up to the rectangular shape
// (l1, l1) in exactly l1 - l2 steps: while some factor y1 divides every
// term, apply the leading-index step; otherwise apply the y-side step, whose
// coordinate map xi'_j = (l1 - mu2 - j) xi_j keeps the j = 0 component alive
// (the y-side step is used in its generalized form on combinations; the
// strict pure-z entry point above is the special case of a single vector).
// The end is a nonzero multiple of hwv((l1, l1), 0), i.e. of B^l1.
inline ConsequenceTrace saturate_to_rectangular(const Element& w, const Partition2& la) {
  if (w.is_zero()) throw DomainError("input must be nonzero");
  if (!hwv_coordinates(w, la)) {
    throw DomainError("input is not a combination of highest weight vectors of this shape");
  }
  ConsequenceTrace trace{w, {}, w};
  Element cur = w;
  for (int mu2 = la.l2; mu2 < la.l1; ++mu2) {
    Partition2 mu(la.l1, mu2);
    int p = cur.higher().min_exponent(yvar(1));
    Element next = p > 0 ? raise_row_step(cur, mu, p)
                         : detail::raise_core(cur, mu, /*left_side=*/true);
    Partition2 target(la.l1, mu2 + 1);
    trace.steps.push_back({(p > 0 ? "raise-row to " : "raise-row-pure-z to ") + target.str(), next});
    cur = next;
  }
  trace.end = cur;
  return trace;
}

// Iterated collapse to one variable: starting from B^k, substitute u = y1*z1
// (the square of the first generator) for the second generator k times via
// the substitution derivative. The result equals k! (y1*z1)^k (y1 - z1)^k,
// which the tests verify against this computation.
inline ConsequenceTrace one_variable_collapse_trace(int k) {
  if (k < 1) throw DomainError("collapse needs k >= 1");
  if (k > 12) throw DomainError("collapse capped at k = 12");
  Element start = Element::from_poly(skew_invariant().pow(static_cast<unsigned>(k)));
  Element u = Element::from_poly(
      Poly::monomial(2, Monomial::var(yvar(1)).times(Monomial::var(zvar(1)))));
  ConsequenceTrace trace{start, {}, start};
  Element cur = start;
  for (int step = 1; step <= k; ++step) {
    cur = substitute_derivation(cur, 2, u);
    trace.steps.push_back({"collapse substitution " + std::to_string(step), cur});
  }
  trace.end = cur;
  return trace;
}

inline Element one_variable_collapse(int k) { return one_variable_collapse_trace(k).end; }

// Upper bound for the multiplicity of chi_la in the cocharacter of a
// subvariety satisfying an identity of degree k that fails in degree k-1:
// 0 once the second row reaches k, else min(l1 - l2 + 1, 3k).
inline Integer subvariety_multiplicity_cap(int k, const Partition2& la) {
  if (k < 2) throw DomainError("identity degree must be at least 2");
  if (la.l2 >= k) return 0;
  Integer a(la.l1 - la.l2 + 1);
  Integer b(3 * k);
  return a < b ? a : b;
}

// The resulting codimension bound sum_{j=0}^{k-1} 3k * hook_degree((n-j, j)),
// valid once n >= 2k so that every shape in the sum is a partition.
inline Integer subvariety_codim_bound(int k, int n) {
  if (k < 2) throw DomainError("identity degree must be at least 2");
  if (n < 2 * k) throw DomainError("codimension bound needs n >= 2k");
  Integer total = 0;
  for (int j = 0; j < k; ++j) total += Integer(3 * k) * hook_degree(Partition2(n - j, j));
  return total;
}

// Codimension sequence of the variety of right-nilpotent bicommutative
// algebras of class k (all right-normed products of length k vanish):
// multilinear words survive exactly when their right side has at most k-2
// factors, so the count is sum_{q=1}^{k-2} C(n, q). Computed by explicit
// filtering of the multilinear basis; the tests pin the closed form.
inline Integer right_nilpotent_codimension(int k, int n) {
  if (k < 3) throw DomainError("right-nilpotency class must be at least 3");
  if (n < 2) throw DomainError("codimension sequence starts at n = 2");
  Integer count = 0;
  for (const Monomial& m : multilinear_basis(n)) {
    if (m.z_degree() <= k - 2) count += 1;
  }
  return count;
}

}  // namespace bicomm
