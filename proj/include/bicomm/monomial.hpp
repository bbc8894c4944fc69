#pragma once

#include <algorithm>
#include <climits>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "bicomm/errors.hpp"

namespace bicomm {

// The commutative alphabet comes in two blocks: y_1, y_2, ... and z_1, z_2, ...
enum class VarBlock { y, z };

struct VarRef {
  VarBlock block;
  int index;  // 1-based
};

inline VarRef yvar(int i) { return {VarBlock::y, i}; }
inline VarRef zvar(int i) { return {VarBlock::z, i}; }
inline bool operator==(const VarRef& a, const VarRef& b) {
  return a.block == b.block && a.index == b.index;
}

// A monomial Y^alpha Z^beta, stored sparsely as (index, exponent) pairs per
// block, sorted by index with strictly positive exponents.
class Monomial {
 public:
  using ExpList = std::vector<std::pair<int, int>>;

  Monomial() = default;  // the unit monomial

  static Monomial unit() { return Monomial(); }

  static Monomial var(VarRef v, int exp = 1) { return unit().with_increment(v, exp); }

  int exponent(VarRef v) const {
    const ExpList& l = list(v.block);
    auto it = std::lower_bound(l.begin(), l.end(), v.index,
                               [](const auto& p, int i) { return p.first < i; });
    return (it != l.end() && it->first == v.index) ? it->second : 0;
  }

  // Copy with exponent(v) shifted by delta; negative shifts must not go below zero.
  Monomial with_increment(VarRef v, int delta) const {
    if (v.index < 1) throw DomainError("variable index must be positive");
    Monomial m = *this;
    ExpList& l = m.list(v.block);
    auto it = std::lower_bound(l.begin(), l.end(), v.index,
                               [](const auto& p, int i) { return p.first < i; });
    if (it != l.end() && it->first == v.index) {
      it->second += delta;
      if (it->second < 0) throw DomainError("negative exponent");
      if (it->second == 0) l.erase(it);
    } else {
      if (delta < 0) throw DomainError("negative exponent");
      if (delta > 0) l.insert(it, {v.index, delta});
    }
    return m;
  }

  Monomial times(const Monomial& o) const {
    Monomial m;
    m.y_ = merge(y_, o.y_);
    m.z_ = merge(z_, o.z_);
    return m;
  }

  int y_degree() const { return degree(y_); }
  int z_degree() const { return degree(z_); }
  int total_degree() const { return y_degree() + z_degree(); }
  int pair_degree(int i) const { return exponent(yvar(i)) + exponent(zvar(i)); }
  bool is_unit() const { return y_.empty() && z_.empty(); }

  int max_index() const {
    int m = 0;
    if (!y_.empty()) m = std::max(m, y_.back().first);
    if (!z_.empty()) m = std::max(m, z_.back().first);
    return m;
  }

  const ExpList& y_exponents() const { return y_; }
  const ExpList& z_exponents() const { return z_; }

  // Graded lexicographic order: total degree first, then exponent vectors
  // compared along y_1 < y_2 < ... < z_1 < z_2 < ...; within equal degree the
  // monomial with the larger exponent at the earliest differing variable is
  // the larger one. Returns <0, 0, >0.
  int compare(const Monomial& o) const {
    int da = total_degree(), db = o.total_degree();
    if (da != db) return da < db ? -1 : 1;
    if (int c = lex(y_, o.y_)) return c;
    return lex(z_, o.z_);
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.y_ == b.y_ && a.z_ == b.z_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  std::string str(const std::function<std::string(VarRef)>& namer = default_namer) const {
    if (is_unit()) return "1";
    std::string out;
    auto emit = [&](VarBlock blk, const ExpList& l) {
      for (const auto& [idx, exp] : l) {
        if (!out.empty()) out += "*";
        out += namer({blk, idx});
        if (exp > 1) out += "^" + std::to_string(exp);
      }
    };
    emit(VarBlock::y, y_);
    emit(VarBlock::z, z_);
    return out;
  }

  static std::string default_namer(VarRef v) {
    return (v.block == VarBlock::y ? "y" : "z") + std::to_string(v.index);
  }

 private:
  ExpList y_, z_;

  ExpList& list(VarBlock b) { return b == VarBlock::y ? y_ : z_; }
  const ExpList& list(VarBlock b) const { return b == VarBlock::y ? y_ : z_; }

  static int degree(const ExpList& l) {
    int d = 0;
    for (const auto& p : l) d += p.second;
    return d;
  }

  static ExpList merge(const ExpList& a, const ExpList& b) {
    ExpList r;
    r.reserve(a.size() + b.size());
    auto ia = a.begin(), ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
      if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
        r.push_back(*ia++);
      } else if (ia == a.end() || ib->first < ia->first) {
        r.push_back(*ib++);
      } else {
        r.emplace_back(ia->first, ia->second + ib->second);
        ++ia;
        ++ib;
      }
    }
    return r;
  }

  static int lex(const ExpList& a, const ExpList& b) {
    auto ia = a.begin(), ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
      int va = ia != a.end() ? ia->first : INT_MAX;
      int vb = ib != b.end() ? ib->first : INT_MAX;
      if (va < vb) return 1;   // a has a positive exponent at an earlier variable
      if (vb < va) return -1;
      if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
      ++ia;
      ++ib;
    }
    return 0;
  }
};

struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return a.compare(b) < 0; }
};

}  // namespace bicomm
