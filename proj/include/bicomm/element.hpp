#pragma once

#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bicomm/poly.hpp"
#include "bicomm/term.hpp"

namespace bicomm {

// An element of the free bicommutative algebra on x_1..x_d, modelled inside
// the commutative polynomial ring K[y_1..y_d, z_1..z_d]:
//
//   - generators x_i span a d-dimensional linear part;
//   - every product lands in the span of the monomials Y^a Z^b with both
//     |a| >= 1 and |b| >= 1 (the "square" of the algebra), where
//         x_i * x_j        = y_i z_j
//         x_i * (Y^a Z^b)  = y_i Y^a Z^b
//         (Y^a Z^b) * x_j  = Y^a Z^b z_j
//         (Y^a Z^b)(Y^c Z^e) = Y^{a+c} Z^{b+e}.
//
// Left multiplications only touch the y-block and right multiplications only
// the z-block, which makes both defining identities
//   (u*v)*w = (u*w)*v   and   u*(v*w) = v*(u*w)
// hold identically; the model is the free object, so every computation here
// is exact, with no rewriting heuristics involved.
class Element {
 public:
  explicit Element(int dim) : dim_(check_dim(dim)), higher_(dim) {}

  static Element generator(int dim, int i) {
    Element e(dim);
    if (i < 1 || i > dim) throw DomainError("generator index out of range");
    e.linear_[i] = Rational(1);
    return e;
  }

  // Wraps a polynomial all of whose monomials lie in the square (y-degree and
  // z-degree both positive).
  static Element from_poly(const Poly& p) {
    for (const auto& [m, c] : p.terms()) {
      if (m.y_degree() < 1 || m.z_degree() < 1) {
        throw DomainError("polynomial term outside the algebra square: " + m.str());
      }
    }
    Element e(p.dim());
    e.higher_ = p;
    return e;
  }

  int dim() const { return dim_; }
  const std::map<int, Rational>& linear() const { return linear_; }
  const Poly& higher() const { return higher_; }
  bool is_zero() const { return linear_.empty() && higher_.is_zero(); }
  bool is_pure_higher() const { return linear_.empty(); }

  Rational linear_coefficient(int i) const {
    auto it = linear_.find(i);
    return it == linear_.end() ? Rational(0) : it->second;
  }

  // Same element viewed in a larger alphabet.
  Element extended(int new_dim) const {
    if (new_dim < dim_) throw DomainError("cannot shrink alphabet dimension");
    Element e(new_dim);
    e.linear_ = linear_;
    for (const auto& [m, c] : higher_.terms()) {
      e.higher_ += Poly::monomial(new_dim, m, c);
    }
    return e;
  }

  Element& operator+=(const Element& o) {
    require_same_dim(o);
    for (const auto& [i, c] : o.linear_) add_linear(i, c);
    higher_ += o.higher_;
    return *this;
  }
  Element& operator-=(const Element& o) {
    require_same_dim(o);
    for (const auto& [i, c] : o.linear_) add_linear(i, -c);
    higher_ -= o.higher_;
    return *this;
  }
  Element& operator*=(const Rational& c) {
    if (c.is_zero()) {
      linear_.clear();
    } else {
      for (auto& [i, v] : linear_) v *= c;
    }
    higher_ *= c;
    return *this;
  }

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Rational& c) { return a *= c; }
  friend Element operator*(const Rational& c, Element a) { return a *= c; }
  friend Element operator-(Element a) { return a *= Rational(-1); }

  // The algebra product, extended bilinearly from the four rules above.
  friend Element operator*(const Element& a, const Element& b) {
    a.require_same_dim(b);
    int d = a.dim_;
    Poly h(d);
    for (const auto& [i, ca] : a.linear_) {
      for (const auto& [j, cb] : b.linear_) {
        h += Poly::monomial(d, Monomial::var(yvar(i)).times(Monomial::var(zvar(j))), ca * cb);
      }
      if (!b.higher_.is_zero()) h += (Poly::var(d, yvar(i)) * b.higher_) * ca;
    }
    for (const auto& [j, cb] : b.linear_) {
      if (!a.higher_.is_zero()) h += (a.higher_ * Poly::var(d, zvar(j))) * cb;
    }
    h += a.higher_ * b.higher_;
    return from_poly(h);
  }

  // Per-pair degrees deg_i = (x_i count) = y_i-degree + z_i-degree, defined
  // when the element is multihomogeneous. Zero counts as multihomogeneous.
  std::optional<std::vector<int>> multidegree() const {
    auto deg = higher_.multidegree();
    if (!deg) return std::nullopt;
    if (linear_.empty()) return deg;
    if (!higher_.is_zero()) return std::nullopt;  // mixes degree 1 with degree >= 2
    std::vector<int> d(static_cast<std::size_t>(dim_), 0);
    auto it = linear_.begin();
    d[static_cast<std::size_t>(it->first - 1)] = 1;
    if (std::next(it) != linear_.end()) return std::nullopt;
    return d;
  }

  friend bool operator==(const Element& a, const Element& b) {
    return a.dim_ == b.dim_ && a.linear_ == b.linear_ && a.higher_ == b.higher_;
  }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [i, c] : linear_) {
      Poly::append_term(out, c, "x" + std::to_string(i));
    }
    for (auto it = higher_.terms().rbegin(); it != higher_.terms().rend(); ++it) {
      Poly::append_term(out, it->second, it->first.str());
    }
    return out;
  }

 private:
  int dim_;
  std::map<int, Rational> linear_;
  Poly higher_;

  static int check_dim(int d) {
    if (d < 1) throw DomainError("alphabet dimension must be positive");
    return d;
  }

  void require_same_dim(const Element& o) const {
    if (dim_ != o.dim_) throw DomainError("mismatched alphabet dimensions");
  }

  void add_linear(int i, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = linear_.try_emplace(i, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) linear_.erase(it);
    }
  }
};

// Evaluates a bracketed term in the model. With dim = 0 the alphabet is
// taken to be exactly the generators occurring in the term.
inline Element psi(const Term& t, int dim = 0) {
  if (dim == 0) dim = t.max_index();
  if (t.max_index() > dim) throw DomainError("generator index exceeds alphabet dimension");
  if (t.is_leaf()) return Element::generator(dim, t.index());
  return psi(t.left(), dim) * psi(t.right(), dim);
}

// A product monomial Y^a Z^b in normal form: the multiset of left factors
// (from the y-block) and right factors (from the z-block), each as a weakly
// increasing index sequence. i holds at least one index, as does j.
struct NormalWord {
  std::vector<int> i;  // y-side indices i_1 <= ... <= i_p, p >= 1
  std::vector<int> j;  // z-side indices j_1 <= ... <= j_q, q >= 1

  friend bool operator==(const NormalWord& a, const NormalWord& b) {
    return a.i == b.i && a.j == b.j;
  }
};

inline NormalWord to_normal_word(const Monomial& m) {
  if (m.y_degree() < 1 || m.z_degree() < 1) {
    throw DomainError("monomial outside the algebra square has no normal word");
  }
  NormalWord w;
  for (const auto& [idx, exp] : m.y_exponents()) w.i.insert(w.i.end(), exp, idx);
  for (const auto& [idx, exp] : m.z_exponents()) w.j.insert(w.j.end(), exp, idx);
  return w;
}

// The canonical bracketing that evaluates to Y^a Z^b: starting from the core
// generator x_{i_p}, right-multiply by x_{j_1},...,x_{j_q} (left-nested), then
// left-multiply by x_{i_{p-1}},...,x_{i_1}, ending with x_{i_1} outermost.
inline Term canonical_term(const NormalWord& w) {
  if (w.i.empty() || w.j.empty()) throw DomainError("normal word needs both sides nonempty");
  Term t = Term::leaf(w.i.back());
  for (int j : w.j) t = Term::product(t, Term::leaf(j));
  for (auto it = std::next(w.i.rbegin()); it != w.i.rend(); ++it) {
    t = Term::product(Term::leaf(*it), t);
  }
  return t;
}

// The derivation of the free algebra determined by x_from -> x_to (and every
// other generator to zero): it replaces one occurrence of x_from by x_to in
// all possible ways. In the model this is y_to*d/dy_from + z_to*d/dz_from on
// the square, and c*x_from -> c*x_to on the linear part. These maps realize
// the raising/lowering operators of the general linear group action by which
// highest weight vectors are recognized.
inline Element derivation_x(const Element& e, int from, int to) {
  int d = e.dim();
  if (from < 1 || from > d || to < 1 || to > d) throw DomainError("generator index out of range");
  if (from == to) throw DomainError("derivation needs two distinct generators");
  Element r(d);
  Rational c = e.linear_coefficient(from);
  if (!c.is_zero()) r += Element::generator(d, to) * c;
  Poly h = e.higher().partial(yvar(from)) * Poly::var(d, yvar(to)) +
           e.higher().partial(zvar(from)) * Poly::var(d, zvar(to));
  r += Element::from_poly(h);
  return r;
}

// Directional derivative substituting u for x_i one occurrence at a time:
// for multihomogeneous f in the square, the result is
// (df/dy_i + df/dz_i) * u. Both f and u must have zero linear part.
inline Element substitute_derivation(const Element& f, int i, const Element& u) {
  if (!f.is_pure_higher() || !u.is_pure_higher()) {
    throw DomainError("substitution derivative needs elements with zero linear part");
  }
  if (f.dim() != u.dim()) throw DomainError("mismatched alphabet dimensions");
  if (i < 1 || i > f.dim()) throw DomainError("generator index out of range");
  if (!f.multidegree()) throw DomainError("substitution derivative needs a multihomogeneous input");
  Poly df = f.higher().partial(yvar(i)) + f.higher().partial(zvar(i));
  return Element::from_poly(df * u.higher());
}

// Partial linearization: replaces one occurrence of x_i by a fresh generator
// x_{d+1} in all possible ways. The input must be multihomogeneous with
// deg_i >= 1; the result lives in the alphabet of dimension d+1 and has
// degree exactly 1 in the new pair.
inline Element linearize(const Element& f, int i) {
  int d = f.dim();
  if (i < 1 || i > d) throw DomainError("generator index out of range");
  auto deg = f.multidegree();
  if (!deg) throw DomainError("linearization needs a multihomogeneous input");
  if (deg->at(static_cast<std::size_t>(i - 1)) < 1) {
    throw DomainError("linearization needs positive degree in the chosen generator");
  }
  // Moving one occurrence of x_i into the fresh pair is exactly the
  // derivation x_i -> x_{d+1} applied in the enlarged alphabet.
  return derivation_x(f.extended(d + 1), i, d + 1);
}

/// All multilinear normal-form monomials of degree n in x_1..x_n: one for
// each proper nonempty subset S of {1..n}, namely prod_{i in S} y_i *
// prod_{j not in S} z_j. There are 2^n - 2 of them, listed by the bitmask of
// S in increasing order (bit i-1 set means i is a left factor).
inline std::vector<Monomial> multilinear_basis(int n) {
  if (n < 2) throw DomainError("multilinear basis needs degree at least 2");
  if (n > 24) throw DomainError("multilinear basis capped at degree 24");
  std::vector<Monomial> basis;
  unsigned long full = (1ul << n) - 1;
  basis.reserve(full - 1);
  for (unsigned long mask = 1; mask < full; ++mask) {
    Monomial m;
    for (int i = 1; i <= n; ++i) {
      m = m.with_increment((mask >> (i - 1)) & 1 ? yvar(i) : zvar(i), 1);
    }
    basis.push_back(m);
  }
  return basis;
}

}  // namespace bicomm
