#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bicomm/monomial.hpp"
#include "bicomm/rational.hpp"

namespace bicomm {

// Element of the polynomial ring K[y_1..y_d, z_1..z_d] with exact rational
// coefficients. The alphabet dimension d travels with the value and all
// binary operations insist on matching dimensions. Terms are kept in a map
// ordered by graded lex, with no zero coefficients stored.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexLess>;

  explicit Poly(int dim) : dim_(check_dim(dim)) {}

  static Poly zero(int dim) { return Poly(dim); }

  static Poly constant(int dim, const Rational& c) {
    Poly p(dim);
    if (!c.is_zero()) p.terms_[Monomial::unit()] = c;
    return p;
  }

  static Poly monomial(int dim, const Monomial& m, const Rational& c = Rational(1)) {
    if (m.max_index() > dim) throw DomainError("monomial index exceeds alphabet dimension");
    Poly p(dim);
    if (!c.is_zero()) p.terms_[m] = c;
    return p;
  }

  static Poly var(int dim, VarRef v) { return monomial(dim, Monomial::var(v)); }

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  int total_degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.total_degree();
  }

  Poly& operator+=(const Poly& o) {
    require_same_dim(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    require_same_dim(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Poly& operator*=(const Rational& c) {
    if (c.is_zero()) {
      terms_.clear();
    } else {
      for (auto& [m, v] : terms_) v *= c;
    }
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Rational& c) {
    Poly r = a;
    return r *= c;
  }
  friend Poly operator*(const Rational& c, const Poly& a) { return a * c; }
  friend Poly operator-(const Poly& a) { return a * Rational(-1); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.require_same_dim(b);
    Poly r(a.dim_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        r.add_term(ma.times(mb), ca * cb);
      }
    }
    return r;
  }

  Poly pow(unsigned e) const {
    Poly r = constant(dim_, Rational(1));
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  // Formal partial derivative with respect to v.
  Poly partial(VarRef v) const {
    if (v.index < 1 || v.index > dim_) throw DomainError("derivative in unknown variable");
    Poly r(dim_);
    for (const auto& [m, c] : terms_) {
      int e = m.exponent(v);
      if (e > 0) r.add_term(m.with_increment(v, -1), c * Rational(e));
    }
    return r;
  }

  // Smallest exponent of v across all terms; 0 for the zero polynomial.
  int min_exponent(VarRef v) const {
    int best = -1;
    for (const auto& [m, c] : terms_) {
      int e = m.exponent(v);
      if (best < 0 || e < best) best = e;
      if (best == 0) break;
    }
    return best < 0 ? 0 : best;
  }

  // The common per-pair degree vector (deg_i = y_i-degree + z_i-degree) if
  // every term has the same one, i.e. the polynomial is multihomogeneous.
  // The zero polynomial counts as multihomogeneous with all-zero degrees.
  std::optional<std::vector<int>> multidegree() const {
    std::vector<int> deg(static_cast<std::size_t>(dim_), 0);
    bool first = true;
    for (const auto& [m, c] : terms_) {
      std::vector<int> d(static_cast<std::size_t>(dim_), 0);
      for (const auto& [i, e] : m.y_exponents()) d[static_cast<std::size_t>(i - 1)] += e;
      for (const auto& [i, e] : m.z_exponents()) d[static_cast<std::size_t>(i - 1)] += e;
      if (first) {
        deg = std::move(d);
        first = false;
      } else if (d != deg) {
        return std::nullopt;
      }
    }
    return deg;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Terms are printed in descending graded-lex order, e.g. "y1*z2 - y2*z1".
  std::string str(const std::function<std::string(VarRef)>& namer = Monomial::default_namer) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      append_term(out, it->second, it->first.is_unit() ? "1" : it->first.str(namer));
    }
    return out;
  }

  // Shared pretty-printing for signed rational-coefficient terms.
  static void append_term(std::string& out, const Rational& c, const std::string& body) {
    Rational a = c;
    if (out.empty()) {
      if (c.sign() < 0) {
        out += "-";
        a = -c;
      }
    } else {
      out += c.sign() < 0 ? " - " : " + ";
      if (c.sign() < 0) a = -c;
    }
    if (a == Rational(1) && body != "1") {
      out += body;
    } else if (body == "1") {
      out += a.str();
    } else {
      out += a.str() + "*" + body;
    }
  }

 private:
  int dim_;
  TermMap terms_;

  static int check_dim(int d) {
    if (d < 1) throw DomainError("alphabet dimension must be positive");
    return d;
  }

  void require_same_dim(const Poly& o) const {
    if (dim_ != o.dim_) throw DomainError("mismatched alphabet dimensions");
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
};

// If a == c*b for a single scalar c, returns c (1 when both are zero).
inline std::optional<Rational> proportional_factor(const Poly& a, const Poly& b) {
  if (a.dim() != b.dim()) return std::nullopt;
  if (b.is_zero()) return a.is_zero() ? std::optional<Rational>(Rational(1)) : std::nullopt;
  if (a.is_zero()) return Rational(0);
  if (a.terms().size() != b.terms().size()) return std::nullopt;
  std::optional<Rational> c;
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  for (; ia != a.terms().end(); ++ia, ++ib) {
    if (ia->first != ib->first) return std::nullopt;
    Rational q = ia->second / ib->second;
    if (!c) {
      c = q;
    } else if (*c != q) {
      return std::nullopt;
    }
  }
  return c;
}

}  // namespace bicomm
