#pragma once

#include <array>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bicomm/consequence.hpp"
#include "bicomm/matrix.hpp"
#include "bicomm/partition.hpp"

namespace bicomm {

inline constexpr int kDefaultCombinatoricsCap = 12;
inline constexpr int kDefaultEvaluationCap = 10;
inline constexpr int kDefaultCollapseCap = 6;

// A finite-dimensional algebra given by structure constants over Q:
// e_i * e_j = sum_k c(i,j,k) e_k, all indices 0-based internally. Immutable;
// whether the two defining identities hold is determined once at
// construction, so evaluation entry points can insist on it cheaply.
class StructureAlgebra {
 public:
  StructureAlgebra(std::vector<std::string> basis, std::vector<Rational> table)
      : dim_(static_cast<int>(basis.size())), basis_(std::move(basis)), c_(std::move(table)) {
    if (dim_ < 1) throw DomainError("algebra dimension must be positive");
    std::size_t want = static_cast<std::size_t>(dim_) * dim_ * dim_;
    if (c_.size() != want) throw DomainError("structure constant table has wrong size");
    violation_ = find_violation();
  }

  int dim() const { return dim_; }
  const std::string& label(int i) const { return basis_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& labels() const { return basis_; }

  const Rational& c(int i, int j, int k) const {
    return c_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
  }

  bool bicommutative() const { return !violation_.has_value(); }

  // A witness (i, j, k, which) with which = 'L' or 'R' naming the failing
  // identity on basis elements, when there is one.
  const std::optional<std::array<int, 4>>& violation() const { return violation_; }

  std::vector<Rational> basis_vector(int i) const {
    std::vector<Rational> v(static_cast<std::size_t>(dim_), Rational(0));
    v.at(static_cast<std::size_t>(i)) = Rational(1);
    return v;
  }

  // Product of two coordinate vectors. T is the coefficient ring: Rational
  // for concrete vectors, Poly for vectors of parameter polynomials.
  template <typename T>
  std::vector<T> mul(const std::vector<T>& a, const std::vector<T>& b) const {
    check_coords(a.size());
    check_coords(b.size());
    std::vector<T> out(a.size(), zero_like(a.front()));
    for (int i = 0; i < dim_; ++i) {
      for (int j = 0; j < dim_; ++j) {
        T prod = a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
        if (is_zero_value(prod)) continue;
        for (int k = 0; k < dim_; ++k) {
          const Rational& ck = c(i, j, k);
          if (!ck.is_zero()) out[static_cast<std::size_t>(k)] += prod * ck;
        }
      }
    }
    return out;
  }

  template <typename T>
  bool is_zero_vector(const std::vector<T>& v) const {
    for (const T& x : v) {
      if (!is_zero_value(x)) return false;
    }
    return true;
  }

 private:
  int dim_;
  std::vector<std::string> basis_;
  std::vector<Rational> c_;
  std::optional<std::array<int, 4>> violation_;

  void check_coords(std::size_t n) const {
    if (n != static_cast<std::size_t>(dim_)) throw DomainError("coordinate vector size mismatch");
  }

  static Rational zero_like(const Rational&) { return Rational(0); }
  static Poly zero_like(const Poly& p) { return Poly::zero(p.dim()); }
  static bool is_zero_value(const Rational& r) { return r.is_zero(); }
  static bool is_zero_value(const Poly& p) { return p.is_zero(); }

  // Both identities are multilinear, so checking all basis triples decides
  // them for the whole algebra.
  std::optional<std::array<int, 4>> find_violation() const {
    for (int i = 0; i < dim_; ++i) {
      std::vector<Rational> ei = basis_vector(i);
      for (int j = 0; j < dim_; ++j) {
        std::vector<Rational> ej = basis_vector(j);
        std::vector<Rational> ij = mul(ei, ej);
        for (int k = 0; k < dim_; ++k) {
          std::vector<Rational> ek = basis_vector(k);
          // right commutativity: (e_i e_j) e_k = (e_i e_k) e_j
          if (mul(ij, ek) != mul(mul(ei, ek), ej)) return std::array<int, 4>{i, j, k, 'R'};
          // left commutativity: e_i (e_j e_k) = e_j (e_i e_k)
          if (mul(ei, mul(ej, ek)) != mul(ej, mul(ei, ek))) return std::array<int, 4>{i, j, k, 'L'};
        }
      }
    }
    return std::nullopt;
  }
};

inline bool is_bicommutative(const StructureAlgebra& a) { return a.bicommutative(); }

// Coordinates of parameter polynomials: a generic element of the algebra
// whose b-th coordinate is the parameter y_{(var-1)*dim + b} of a polynomial
// ring shared by nvars generic elements.
struct ParamElement {
  std::vector<Poly> coords;
};

inline ParamElement generic_element(const StructureAlgebra& a, int var, int nvars) {
  if (var < 1 || var > nvars) throw DomainError("variable index out of range");
  int pdim = nvars * a.dim();
  ParamElement e;
  for (int b = 1; b <= a.dim(); ++b) {
    e.coords.push_back(Poly::var(pdim, yvar((var - 1) * a.dim() + b)));
  }
  return e;
}

// Evaluates a product monomial from the free algebra: substitute assign[v-1]
// for x_v and multiply along the canonical bracketing of the normal word.
// In an algebra satisfying both identities the value does not depend on the
// chosen bracketing, which is why bicommutativity is required up front.
template <typename T>
std::vector<T> evaluate_word(const StructureAlgebra& a, const NormalWord& w,
                             const std::vector<std::vector<T>>& assign) {
  auto at = [&](int v) -> const std::vector<T>& {
    if (v < 1 || v > static_cast<int>(assign.size())) {
      throw DomainError("assignment missing for generator x" + std::to_string(v));
    }
    return assign[static_cast<std::size_t>(v - 1)];
  };
  std::vector<T> cur = at(w.i.back());
  for (int j : w.j) cur = a.mul(cur, at(j));
  for (auto it = std::next(w.i.rbegin()); it != w.i.rend(); ++it) {
    cur = a.mul(at(*it), cur);
  }
  return cur;
}

inline std::vector<Rational> evaluate_monomial(const StructureAlgebra& a, const Monomial& m,
                                               const std::vector<std::vector<Rational>>& assign) {
  if (!a.bicommutative()) throw DomainError("evaluation needs both identities to hold");
  return evaluate_word(a, to_normal_word(m), assign);
}

// Evaluates an arbitrary bracketed term; no identity assumptions here, the
// bracketing is followed literally.
template <typename T>
std::vector<T> evaluate_term(const StructureAlgebra& a, const Term& t,
                             const std::vector<std::vector<T>>& assign) {
  if (t.is_leaf()) {
    int v = t.index();
    if (v < 1 || v > static_cast<int>(assign.size())) {
      throw DomainError("assignment missing for generator x" + std::to_string(v));
    }
    return assign[static_cast<std::size_t>(v - 1)];
  }
  return a.mul(evaluate_term(a, t.left(), assign), evaluate_term(a, t.right(), assign));
}

// n-th codimension of the variety generated by the algebra: the rank of the
// matrix whose rows are the multilinear basis words and whose columns are
// indexed by (basis tuple, output coordinate), with the last variable
// varying fastest across tuples. n = 1 reduces to the span of the identity
// substitution, which has rank 1 for any algebra with a basis.
inline Integer codimension(const StructureAlgebra& a, int n,
                           int cap = kDefaultEvaluationCap) {
  if (!a.bicommutative()) throw DomainError("codimension needs both identities to hold");
  if (n < 1) throw DomainError("codimension needs n >= 1");
  if (n > cap) throw DomainError("degree exceeds the evaluation cap");
  if (n == 1) return 1;
  int m = a.dim();
  std::vector<Monomial> words = multilinear_basis(n);
  std::vector<NormalWord> normal;
  normal.reserve(words.size());
  for (const Monomial& w : words) normal.push_back(to_normal_word(w));

  std::size_t tuples = 1;
  for (int t = 0; t < n; ++t) tuples *= static_cast<std::size_t>(m);
  Matrix mat(words.size(), tuples * static_cast<std::size_t>(m));
  std::vector<std::vector<Rational>> assign(static_cast<std::size_t>(n));
  for (std::size_t tup = 0; tup < tuples; ++tup) {
    std::size_t rest = tup;
    // Digits of tup in base m, last variable fastest.
    for (int v = n; v >= 1; --v) {
      assign[static_cast<std::size_t>(v - 1)] = a.basis_vector(static_cast<int>(rest % m));
      rest /= static_cast<std::size_t>(m);
    }
    for (std::size_t r = 0; r < normal.size(); ++r) {
      std::vector<Rational> val = evaluate_word(a, normal[r], assign);
      for (int k = 0; k < m; ++k) {
        mat.at(r, tup * static_cast<std::size_t>(m) + static_cast<std::size_t>(k)) =
            val[static_cast<std::size_t>(k)];
      }
    }
  }
  return Integer(static_cast<long>(mat.rank()));
}

namespace detail {

// Symbolic evaluations of the shape's highest weight vectors on generic
// elements with polynomial parameters; one coordinate vector per vector.
inline std::vector<std::vector<Poly>> hwv_evaluations(const StructureAlgebra& a,
                                                      const Partition2& la) {
  std::vector<std::vector<Poly>> out;
  std::vector<std::vector<Poly>> assign;
  for (int v = 1; v <= 2; ++v) assign.push_back(generic_element(a, v, 2).coords);
  int pdim = 2 * a.dim();
  for (int j = hwv_index_min(la); j <= hwv_index_max(la); ++j) {
    Element w = hwv(HwvSpec(la, j));
    std::vector<Poly> val(static_cast<std::size_t>(a.dim()), Poly::zero(pdim));
    for (const auto& [mono, coeff] : w.higher().terms()) {
      std::vector<Poly> term = evaluate_word(a, to_normal_word(mono), assign);
      for (std::size_t k = 0; k < val.size(); ++k) val[k] += term[k] * coeff;
    }
    out.push_back(std::move(val));
  }
  return out;
}

// Rank of a family of polynomial coordinate vectors, as the rank of their
// coefficient matrix over all (coordinate, parameter monomial) columns.
inline std::size_t symbolic_rank(const std::vector<std::vector<Poly>>& family) {
  std::map<std::pair<std::size_t, Monomial>, std::size_t,
           decltype([](const auto& a, const auto& b) {
             if (a.first != b.first) return a.first < b.first;
             return a.second.compare(b.second) < 0;
           })>
      col_of;
  for (const auto& vec : family) {
    for (std::size_t k = 0; k < vec.size(); ++k) {
      for (const auto& [m, c] : vec[k].terms()) col_of.try_emplace({k, m}, col_of.size());
    }
  }
  Matrix mat(family.size(), col_of.size());
  for (std::size_t r = 0; r < family.size(); ++r) {
    for (std::size_t k = 0; k < family[r].size(); ++k) {
      for (const auto& [m, c] : family[r][k].terms()) mat.at(r, col_of.at({k, m})) = c;
    }
  }
  return mat.rank();
}

}  // namespace detail

// Multiplicity of chi_la in the degree-n cocharacter of the variety
// generated by the algebra: the highest weight vectors of the shape are
// evaluated symbolically on two generic elements, and the multiplicity is
// the rank of the resulting family of parameter polynomials. The symbolic
// path is complete over an infinite field: a polynomial vanishes on all
// concrete points exactly when its coefficients vanish.
inline Integer cocharacter_multiplicity(const StructureAlgebra& a, const Partition2& la,
                                        int cap = kDefaultEvaluationCap) {
  if (!a.bicommutative()) throw DomainError("multiplicity needs both identities to hold");
  if (la.weight() < 2) throw DomainError("cocharacter multiplicity needs weight >= 2");
  if (la.weight() > cap) throw DomainError("weight exceeds the evaluation cap");
  return Integer(static_cast<long>(detail::symbolic_rank(detail::hwv_evaluations(a, la))));
}

// Documented sampling fallback: evaluates the same family at `samples`
// random rational points (coordinates drawn from a fixed small pool,
// deterministic per seed) and returns the rank of the stacked value matrix.
// This is always a lower bound for the symbolic rank, with equality holding
// with high probability; it is the practical route when the parameter
// polynomials grow past what the symbolic path's cap allows.
inline Integer cocharacter_multiplicity_lower_bound(const StructureAlgebra& a,
                                                    const Partition2& la, unsigned seed,
                                                    int samples = 8) {
  if (!a.bicommutative()) throw DomainError("multiplicity needs both identities to hold");
  if (la.weight() < 2) throw DomainError("cocharacter multiplicity needs weight >= 2");
  if (samples < 1) throw DomainError("need at least one sample");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9);
  int m = a.dim();
  std::vector<Element> vectors;
  for (int j = hwv_index_min(la); j <= hwv_index_max(la); ++j) vectors.push_back(hwv(HwvSpec(la, j)));
  Matrix mat(vectors.size(), static_cast<std::size_t>(samples) * static_cast<std::size_t>(m));
  for (int s = 0; s < samples; ++s) {
    std::vector<std::vector<Rational>> assign;
    for (int v = 0; v < 2; ++v) {
      std::vector<Rational> coords;
      for (int b = 0; b < m; ++b) coords.push_back(Rational(num(rng)) / Rational(1 + (s % 3)));
      assign.push_back(std::move(coords));
    }
    for (std::size_t r = 0; r < vectors.size(); ++r) {
      std::vector<Rational> val(static_cast<std::size_t>(m), Rational(0));
      for (const auto& [mono, coeff] : vectors[r].higher().terms()) {
        std::vector<Rational> term = evaluate_word(a, to_normal_word(mono), assign);
        for (std::size_t k = 0; k < val.size(); ++k) val[k] += term[k] * coeff;
      }
      for (int k = 0; k < m; ++k) {
        mat.at(r, static_cast<std::size_t>(s) * m + static_cast<std::size_t>(k)) =
            val[static_cast<std::size_t>(k)];
      }
    }
  }
  return Integer(static_cast<long>(mat.rank()));
}

// Whether the algebra satisfies no one-variable identity of degree n beyond
// the defining ones: the n-1 words y1^j z1^(n-j) evaluated on a single
// generic element must stay linearly independent.
inline bool one_variable_identity_free(const StructureAlgebra& a, int n,
                                       int cap = kDefaultEvaluationCap) {
  if (!a.bicommutative()) throw DomainError("evaluation needs both identities to hold");
  if (n < 2) throw DomainError("one-variable words need degree >= 2");
  if (n > cap) throw DomainError("degree exceeds the evaluation cap");
  std::vector<std::vector<Poly>> assign{generic_element(a, 1, 1).coords};
  std::vector<std::vector<Poly>> family;
  for (int j = 1; j <= n - 1; ++j) {
    Element w = hwv(HwvSpec(Partition2(n, 0), j));
    const Monomial& mono = w.higher().terms().begin()->first;
    family.push_back(evaluate_word(a, to_normal_word(mono), assign));
  }
  return detail::symbolic_rank(family) == family.size();
}

}  // namespace bicomm
