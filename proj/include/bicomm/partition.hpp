#pragma once

#include <string>
#include <vector>

#include "bicomm/element.hpp"
#include "bicomm/rational.hpp"

namespace bicomm {

// An integer partition with at most two rows, l1 >= l2 >= 0, l1 >= 1.
struct Partition2 {
  int l1, l2;

  Partition2(int a, int b) : l1(a), l2(b) {
    if (a < 1 || b < 0 || b > a) throw DomainError("not a two-row partition");
  }

  int weight() const { return l1 + l2; }
  bool is_rectangular() const { return l1 == l2; }

  std::string str() const {
    return "(" + std::to_string(l1) + "," + std::to_string(l2) + ")";
  }

  friend bool operator==(const Partition2& a, const Partition2& b) {
    return a.l1 == b.l1 && a.l2 == b.l2;
  }
  friend bool operator!=(const Partition2& a, const Partition2& b) { return !(a == b); }
};

// Number of standard Young tableaux of the two-row shape, computed from the
// hook length of every cell: n! divided by the product of hooks.
//
// Beware the tempting closed form n(n-1)...(n-l2+1)(n-2*l2+1)/l2! sometimes
// quoted for two-row shapes: it is off by one factor. At (n-1,1) it yields
// n(n-1) instead of the correct degree n-1. A correct closed form is
//   C(n, l2) - C(n, l2-1)  =  n! (n - 2*l2 + 1) / ( l2! (n - l2 + 1)! ),
// whose denominator carries one more linear factor (n-l2+1) than the quoted
// version. The cell-by-cell hook lengths are authoritative here and are
// cross-checked against brute-force tableau enumeration in the tests.
inline Integer hook_degree(const Partition2& la) {
  int n = la.weight();
  Integer den = 1;
  for (int j = 1; j <= la.l1; ++j) {
    // Cell (1, j): arm l1 - j, leg 1 if the second row reaches column j.
    den *= Integer((la.l1 - j) + (j <= la.l2 ? 1 : 0) + 1);
  }
  for (int j = 1; j <= la.l2; ++j) {
    // Cell (2, j): arm l2 - j, no leg.
    den *= Integer((la.l2 - j) + 1);
  }
  Integer num = factorial(static_cast<unsigned long>(n));
  Integer out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

// Decomposition of the product of one-row characters chi_(p) * chi_(q):
// one copy of chi_(p+q-k, k) for each k = 0..min(p,q).
inline std::vector<Partition2> young_rule(int p, int q) {
  if (p < 1 || q < 1) throw DomainError("row lengths must be positive");
  std::vector<Partition2> out;
  int m = p < q ? p : q;
  out.reserve(static_cast<std::size_t>(m) + 1);
  for (int k = 0; k <= m; ++k) out.emplace_back(p + q - k, k);
  return out;
}

// Schur polynomial s_la(y_1..y_d) as a sum over semistandard tableaux: row
// entries weakly increase, column entries strictly increase. Desk-scale
// only; the weight is capped to keep enumeration honest and fast.
inline Poly schur_polynomial(const Partition2& la, int d) {
  if (d < 2) throw DomainError("schur polynomial needs at least two variables");
  if (la.weight() > 10) throw DomainError("schur polynomial capped at weight 10");
  Poly out(d);
  std::vector<int> row1(static_cast<std::size_t>(la.l1)), row2(static_cast<std::size_t>(la.l2));
  // Depth-first fill: row 1 left to right, then row 2 left to right.
  auto fill2 = [&](auto&& self, std::size_t col) -> void {
    if (col == row2.size()) {
      Monomial m;
      for (int v : row1) m = m.with_increment(yvar(v), 1);
      for (int v : row2) m = m.with_increment(yvar(v), 1);
      out += Poly::monomial(d, m);
      return;
    }
    int lo = col == 0 ? 1 : row2[col - 1];                   // weakly increasing row
    int strict = row1[col] + 1;                              // strictly below row 1
    if (strict > lo) lo = strict;
    for (int v = lo; v <= d; ++v) {
      row2[col] = v;
      self(self, col + 1);
    }
  };
  auto fill1 = [&](auto&& self, std::size_t col) -> void {
    if (col == row1.size()) {
      fill2(fill2, 0);
      return;
    }
    int lo = col == 0 ? 1 : row1[col - 1];
    for (int v = lo; v <= d; ++v) {
      row1[col] = v;
      self(self, col + 1);
    }
  };
  fill1(fill1, 0);
  return out;
}

// All two-row partitions of n, second row ascending: (n,0), (n-1,1), ...
inline std::vector<Partition2> two_row_partitions(int n) {
  if (n < 1) throw DomainError("weight must be positive");
  std::vector<Partition2> out;
  for (int k = 0; 2 * k <= n; ++k) out.emplace_back(n - k, k);
  return out;
}

// Multiplicity of chi_la in the degree-n cocharacter of the variety of all
// bicommutative algebras: 1 at (1,0), l1 - 1 for one-row shapes of weight
// >= 2, and l1 - l2 + 1 when both rows are nonempty.
inline Integer cocharacter_multiplicity(const Partition2& la) {
  if (la.l2 == 0) return la.l1 == 1 ? Integer(1) : Integer(la.l1 - 1);
  return Integer(la.l1 - la.l2 + 1);
}

struct CocharacterRow {
  Partition2 shape;
  Integer multiplicity;
  Integer degree;  // hook_degree(shape)
};

inline std::vector<CocharacterRow> cocharacter_rows(int n) {
  std::vector<CocharacterRow> rows;
  for (const Partition2& la : two_row_partitions(n)) {
    rows.push_back({la, cocharacter_multiplicity(la), hook_degree(la)});
  }
  return rows;
}

// n-th codimension of the variety of all bicommutative algebras, as the sum
// of multiplicity * degree over two-row shapes. Equals 2^n - 2 for n >= 2
// and 1 at n = 1; both facts are exercised by the tests against the
// multilinear basis itself.
inline Integer codimension(int n) {
  if (n < 1) throw DomainError("codimension needs n >= 1");
  Integer total = 0;
  for (const CocharacterRow& r : cocharacter_rows(n)) total += r.multiplicity * r.degree;
  return total;
}

// Identifies one highest weight vector: for shape (n,0) the vectors
// w^(j) = y1^j z1^(n-j) with 1 <= j <= n-1, and for l2 >= 1 the vectors
// w^(j) = y1^j B^l2 z1^(l1-l2-j) with 0 <= j <= l1-l2, where B = y1z2-y2z1.
struct HwvSpec {
  Partition2 shape;
  int j;

  HwvSpec(Partition2 la, int jj) : shape(la), j(jj) {
    if (la.l2 == 0) {
      if (j < 1 || j > la.l1 - 1) throw DomainError("index out of range for one-row shape");
    } else {
      if (j < 0 || j > la.l1 - la.l2) throw DomainError("index out of range for two-row shape");
    }
  }
};

inline int hwv_index_min(const Partition2& la) { return la.l2 == 0 ? 1 : 0; }
inline int hwv_index_max(const Partition2& la) { return la.l2 == 0 ? la.l1 - 1 : la.l1 - la.l2; }
inline int hwv_count(const Partition2& la) { return hwv_index_max(la) - hwv_index_min(la) + 1; }

// The polynomial B = y1*z2 - y2*z1, the basic skew invariant.
inline Poly skew_invariant(int d = 2) {
  if (d < 2) throw DomainError("skew invariant needs dimension at least 2");
  return Poly::monomial(d, Monomial::var(yvar(1)).times(Monomial::var(zvar(2)))) -
         Poly::monomial(d, Monomial::var(yvar(2)).times(Monomial::var(zvar(1))));
}

inline Element hwv(const HwvSpec& spec) {
  const Partition2& la = spec.shape;
  Poly p = Poly::constant(2, Rational(1));
  if (spec.j > 0) p = p * Poly::monomial(2, Monomial::var(yvar(1), spec.j));
  if (la.l2 > 0) p = p * skew_invariant().pow(static_cast<unsigned>(la.l2));
  int ztail = la.l2 == 0 ? la.l1 - spec.j : la.l1 - la.l2 - spec.j;
  if (ztail > 0) p = p * Poly::monomial(2, Monomial::var(zvar(1), ztail));
  return Element::from_poly(p);
}

// True when e is multihomogeneous and killed by every raising derivation
// x_j -> x_i with i < j. Errors on non-multihomogeneous input.
inline bool is_hwv(const Element& e, int d) {
  if (e.dim() != d) throw DomainError("dimension mismatch");
  if (!e.multidegree()) throw DomainError("highest-weight test needs a multihomogeneous input");
  for (int i = 1; i <= d; ++i) {
    for (int j = i + 1; j <= d; ++j) {
      if (!derivation_x(e, j, i).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace bicomm
