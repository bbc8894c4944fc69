#pragma once

#include <string>
#include <vector>

#include "bicomm/algebra.hpp"

namespace bicomm {

// The two-parameter family of two-dimensional algebras with basis (r, r^2):
//   r * r   = r^2        r * r^2   = pi * r^2
//   r^2 * r = rho * r^2  r^2 * r^2 = pi * rho * r^2.
// Every member satisfies both defining identities, for all parameter values.
struct TwoDimParams {
  Rational pi, rho;

  friend bool operator==(const TwoDimParams& a, const TwoDimParams& b) {
    return a.pi == b.pi && a.rho == b.rho;
  }

  std::string str() const { return "A(" + pi.str() + "," + rho.str() + ")"; }
};

inline StructureAlgebra make_two_dim(const TwoDimParams& p) {
  std::vector<Rational> table(8, Rational(0));
  auto set = [&](int i, int j, const Rational& v) { table[static_cast<std::size_t>((i * 2 + j) * 2 + 1)] = v; };
  set(0, 0, Rational(1));      // r * r = r^2
  set(0, 1, p.pi);             // r * r^2
  set(1, 0, p.rho);            // r^2 * r
  set(1, 1, p.pi * p.rho);     // r^2 * r^2
  return StructureAlgebra({"r", "r^2"}, std::move(table));
}

// A proposed isomorphism onto a member of the family, determined by the
// image r1 = xi*r + eta*r^2 of the generator (with r1^2 as the second basis
// vector). kind is derived from the coefficients for reporting.
struct IsomorphismWitness {
  Rational xi, eta;

  std::string kind() const {
    if (eta.is_zero()) return xi == Rational(1) ? "identity" : "scale";
    return "affine";
  }
};

struct Classification {
  TwoDimParams canonical;
  IsomorphismWitness witness;
};

// Canonical representative of the isomorphism class, with an explicit
// witness. A generator change r1 = xi*r + eta*r^2 transports A(pi,rho) onto
// A(pi', rho') exactly when
//   pi'  = pi  * (xi + rho*eta),
//   rho' = rho * (xi + pi*eta),
// so the cases are:
//   pi = rho = 0      -> A(0,0), identity
//   pi = rho != 0     -> A(1,1), r1 = r/pi
//   pi = 0, rho != 0  -> A(0,1), r1 = r/rho
//   rho = 0, pi != 0  -> A(1,0), r1 = r/pi
//   pi != rho, both nonzero
//                     -> A(1,-1), the unique solution of
//                        pi*(xi + rho*eta) = 1, rho*(xi + pi*eta) = -1:
//                        xi = 2/(pi-rho), eta = -(pi+rho)/(pi*rho*(pi-rho)).
// Note the reciprocal in the scale cases: r1 = rho*r would rescale the
// parameter by rho^2 instead of clearing it, as the transport equations
// show, so it only lands on the canonical member when rho^2 = 1.
inline Classification classify_two_dim(const TwoDimParams& p) {
  if (p.pi.is_zero() && p.rho.is_zero()) {
    return {{Rational(0), Rational(0)}, {Rational(1), Rational(0)}};
  }
  if (p.pi == p.rho) {
    return {{Rational(1), Rational(1)}, {inverse(p.pi), Rational(0)}};
  }
  if (p.pi.is_zero()) {
    return {{Rational(0), Rational(1)}, {inverse(p.rho), Rational(0)}};
  }
  if (p.rho.is_zero()) {
    return {{Rational(1), Rational(0)}, {inverse(p.pi), Rational(0)}};
  }
  Rational diff = p.pi - p.rho;
  Rational xi = Rational(2) / diff;
  Rational eta = -(p.pi + p.rho) / (p.pi * p.rho * diff);
  return {{Rational(1), Rational(-1)}, {xi, eta}};
}

// Checks that the basis change r1 = xi*e1 + eta*e2, r2 = r1*r1 carries the
// multiplication table of a onto the table of b. Errors when either algebra
// is not two-dimensional or the proposed basis change is not invertible;
// returns false when the change of basis is invertible but the tables
// disagree.
inline bool verify_isomorphism(const StructureAlgebra& a, const StructureAlgebra& b,
                               const IsomorphismWitness& w) {
  if (a.dim() != 2 || b.dim() != 2) throw DomainError("isomorphism check needs two-dimensional algebras");
  std::vector<Rational> r1{w.xi, w.eta};
  std::vector<Rational> r2 = a.mul(r1, r1);
  Rational det = r1[0] * r2[1] - r1[1] * r2[0];
  if (det.is_zero()) throw DomainError("proposed basis change is not invertible");
  std::vector<std::vector<Rational>> f{r1, r2};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      std::vector<Rational> prod = a.mul(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(j)]);
      // Coordinates of prod in the basis (r1, r2) via Cramer's rule.
      Rational u = (prod[0] * r2[1] - prod[1] * r2[0]) / det;
      Rational v = (r1[0] * prod[1] - r1[1] * prod[0]) / det;
      if (u != b.c(i, j, 0) || v != b.c(i, j, 1)) return false;
    }
  }
  return true;
}

// Structural separators used to tell the canonical members apart without
// any basis change: vanishing patterns of length-three products and
// commutativity.

// All products of three basis elements vanish, in both associations.
inline bool is_nilpotent_class3(const StructureAlgebra& a) {
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) {
      std::vector<Rational> ij = a.mul(a.basis_vector(i), a.basis_vector(j));
      for (int k = 0; k < a.dim(); ++k) {
        if (!a.is_zero_vector(a.mul(ij, a.basis_vector(k)))) return false;
        if (!a.is_zero_vector(
                a.mul(a.basis_vector(i), a.mul(a.basis_vector(j), a.basis_vector(k))))) {
          return false;
        }
      }
    }
  }
  return true;
}

// a * (b * c) = 0 for all triples.
inline bool is_left_nilpotent_class3(const StructureAlgebra& a) {
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) {
      for (int k = 0; k < a.dim(); ++k) {
        if (!a.is_zero_vector(
                a.mul(a.basis_vector(i), a.mul(a.basis_vector(j), a.basis_vector(k))))) {
          return false;
        }
      }
    }
  }
  return true;
}

// (a * b) * c = 0 for all triples.
inline bool is_right_nilpotent_class3(const StructureAlgebra& a) {
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) {
      std::vector<Rational> ij = a.mul(a.basis_vector(i), a.basis_vector(j));
      for (int k = 0; k < a.dim(); ++k) {
        if (!a.is_zero_vector(a.mul(ij, a.basis_vector(k)))) return false;
      }
    }
  }
  return true;
}

inline bool is_commutative(const StructureAlgebra& a) {
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = i + 1; j < a.dim(); ++j) {
      if (a.mul(a.basis_vector(i), a.basis_vector(j)) !=
          a.mul(a.basis_vector(j), a.basis_vector(i))) {
        return false;
      }
    }
  }
  return true;
}

inline bool is_associative(const StructureAlgebra& a) {
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) {
      std::vector<Rational> ij = a.mul(a.basis_vector(i), a.basis_vector(j));
      for (int k = 0; k < a.dim(); ++k) {
        if (a.mul(ij, a.basis_vector(k)) !=
            a.mul(a.basis_vector(i), a.mul(a.basis_vector(j), a.basis_vector(k)))) {
          return false;
        }
      }
    }
  }
  return true;
}

// The (nilpotent3, left-nilpotent3, right-nilpotent3, commutative,
// associative) fingerprint; pairwise distinct across the five canonical
// members of the family.
inline std::array<bool, 5> structural_fingerprint(const StructureAlgebra& a) {
  return {is_nilpotent_class3(a), is_left_nilpotent_class3(a), is_right_nilpotent_class3(a),
          is_commutative(a), is_associative(a)};
}

}  // namespace bicomm
