#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "bicomm/errors.hpp"

namespace bicomm {

using Integer = mpz_class;

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Exact rational scalar. Always kept in lowest terms with a positive
// denominator; zero is canonically 0/1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT: implicit by design
  Rational(const Integer& n) : v_(n) {}                  // NOLINT
  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(num) / mpq_class(den);  // mpq_class division canonicalizes
  }

  // Accepts an optionally signed integer or "p/q" with a nonzero q.
  static Rational parse(std::string_view s) {
    std::size_t slash = std::string_view::npos;
    if (s.empty()) throw ParseError("empty rational literal");
    auto check_int = [&](std::string_view part, std::size_t offset) {
      std::size_t i = 0;
      if (i < part.size() && (part[i] == '+' || part[i] == '-')) ++i;
      if (i == part.size()) throw ParseError("malformed rational literal", offset + i);
      for (; i < part.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(part[i]))) {
          throw ParseError("malformed rational literal", offset + i);
        }
      }
    };
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '/') {
        if (slash != std::string_view::npos) throw ParseError("malformed rational literal", i);
        slash = i;
      }
    }
    if (slash == std::string_view::npos) {
      check_int(s, 0);
      Rational r;
      r.v_ = mpq_class(std::string(s), 10);
      r.v_.canonicalize();
      return r;
    }
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    check_int(num, 0);
    check_int(den, slash + 1);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("rational literal with zero denominator", slash + 1);
    Rational r;
    r.v_ = mpq_class(mpz_class(std::string(num), 10)) / mpq_class(d);
    return r;
  }

  Integer numerator() const { return v_.get_num(); }
  Integer denominator() const { return v_.get_den(); }
  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  // "p" when the denominator is 1, otherwise "p/q".
  std::string str() const { return v_.get_str(); }

  Rational operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
  }
  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division of rationals by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  mpq_class v_;
};

inline Rational inverse(const Rational& a) {
  if (a.is_zero()) throw DomainError("inverse of zero");
  return Rational(1) / a;
}

}  // namespace bicomm
