#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "hilbgw/rat.hpp"

namespace hilbgw {

// Ring customization points used by the generic polynomial code.
inline Rat ring_gcd(const Rat& a, const Rat& b) { return Rat::content_gcd(a, b); }
inline Rat ring_exact_div(const Rat& a, const Rat& b) { return a / b; }
inline bool ring_is_zero(const Rat& a) { return a.is_zero(); }
inline bool ring_is_negative(const Rat& a) { return a.sign() < 0; }
inline Rat ring_mul_long(const Rat& a, long k) { return a * Rat(k); }

// Fallback n*a by binary doubling, for rings without a long constructor.
template <class C>
C ring_mul_long(const C& a, long k) {
  if (k == 0) return C();
  bool neg = k < 0;
  unsigned long u = neg ? -static_cast<unsigned long>(k) : k;
  C acc{}, base = a;
  while (u) {
    if (u & 1) acc = acc + base;
    u >>= 1;
    if (u) base = base + base;
  }
  return neg ? C() - acc : acc;
}

// Dense univariate polynomial over a commutative ring C.
// Trailing zeros are stripped; the zero polynomial has empty coefficient list.
template <class C>
class UPoly {
public:
  UPoly() = default;
  explicit UPoly(C c) {
    if (!ring_is_zero(c)) c_.push_back(std::move(c));
  }
  explicit UPoly(std::vector<C> cs) : c_(std::move(cs)) { trim(); }

  static UPoly monomial(C c, int k) {
    UPoly p;
    if (ring_is_zero(c)) return p;
    p.c_.assign(k + 1, C());
    p.c_[k] = std::move(c);
    return p;
  }

  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const C& lc() const {
    if (is_zero()) throw std::domain_error("UPoly: lc of zero");
    return c_.back();
  }
  const C& operator[](int i) const {
    static const C kZero{};
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : kZero;
  }
  const std::vector<C>& coeffs() const { return c_; }

  void set(int i, C v) {
    if (i >= static_cast<int>(c_.size())) c_.resize(i + 1, C());
    c_[i] = std::move(v);
    trim();
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<C> r(std::max(a.c_.size(), b.c_.size()), C());
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
    return UPoly(std::move(r));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<C> r(std::max(a.c_.size(), b.c_.size()), C());
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] - b.c_[i];
    return UPoly(std::move(r));
  }
  UPoly operator-() const {
    std::vector<C> r(c_.size(), C());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = C() - c_[i];
    return UPoly(std::move(r));
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<C> r(a.c_.size() + b.c_.size() - 1, C());
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (ring_is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j)
        r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
  }
  friend bool operator==(const UPoly& a, const UPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
      if (!ring_is_zero(a.c_[i] - b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  UPoly scaled(const C& s) const {
    std::vector<C> r(c_.size(), C());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
    return UPoly(std::move(r));
  }

  UPoly shifted(int k) const {  // multiply by x^k
    if (is_zero()) return UPoly();
    std::vector<C> r(c_.size() + k, C());
    for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return UPoly(std::move(r));
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<C> r(c_.size() - 1, C());
    for (size_t i = 1; i < c_.size(); ++i)
      r[i - 1] = ring_mul_long(c_[i], static_cast<long>(i));
    return UPoly(std::move(r));
  }

  template <class V>
  V eval(const V& x) const {  // Horner; V must absorb C via V * and +
    V acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + V(*it);
    return acc;
  }

  C content() const {
    C g{};
    for (const auto& c : c_) g = ring_gcd(g, c);
    return g;
  }

  UPoly primitive_part() const {
    if (is_zero()) return UPoly();
    C g = content();
    std::vector<C> r(c_.size(), C());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = ring_exact_div(c_[i], g);
    return UPoly(std::move(r));
  }

  // Exact division; throws if not divisible.
  friend UPoly exact_div(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::domain_error("UPoly: division by zero");
    if (a.is_zero()) return UPoly();
    if (a.deg() < b.deg()) throw std::domain_error("UPoly: inexact division");
    std::vector<C> rem = a.c_;
    int dr = a.deg(), db = b.deg();
    std::vector<C> quot(dr - db + 1, C());
    while (dr >= db) {
      C q = ring_exact_div(rem[dr], b.lc());
      quot[dr - db] = q;
      for (int i = 0; i <= db; ++i) rem[dr - db + i] = rem[dr - db + i] - q * b.c_[i];
      if (!ring_is_zero(rem[dr])) throw std::domain_error("UPoly: inexact division");
      --dr;
      while (dr >= 0 && ring_is_zero(rem[dr])) --dr;
      if (dr < db) break;
    }
    for (int i = 0; i <= dr; ++i)
      if (!ring_is_zero(rem[i])) throw std::domain_error("UPoly: inexact division");
    return UPoly(std::move(quot));
  }

  // Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + prem.
  friend UPoly prem(UPoly a, const UPoly& b) {
    int db = b.deg();
    while (!a.is_zero() && a.deg() >= db) {
      int k = a.deg() - db;
      UPoly t = b.shifted(k).scaled(a.lc());
      a = a.scaled(b.lc()) - t;
    }
    return a;
  }

private:
  std::vector<C> c_;

  void trim() {
    while (!c_.empty() && ring_is_zero(c_.back())) c_.pop_back();
  }
};

// Primitive PRS gcd. Result is primitive except for the content factor.
template <class C>
UPoly<C> upoly_gcd(UPoly<C> a, UPoly<C> b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  C cont = ring_gcd(a.content(), b.content());
  a = a.primitive_part();
  b = b.primitive_part();
  if (a.deg() < b.deg()) std::swap(a, b);
  while (!b.is_zero()) {
    UPoly<C> r = prem(a, b);
    a = std::move(b);
    b = r.is_zero() ? UPoly<C>() : r.primitive_part();
  }
  a = a.primitive_part();
  if (ring_is_negative(a.lc())) a = -a;
  return a.scaled(cont);
}

template <class C>
UPoly<C> ring_gcd(const UPoly<C>& a, const UPoly<C>& b) {
  return upoly_gcd(a, b);
}

template <class C>
bool ring_is_zero(const UPoly<C>& a) {
  return a.is_zero();
}
template <class C>
UPoly<C> ring_exact_div(const UPoly<C>& a, const UPoly<C>& b) {
  return exact_div(a, b);
}
template <class C>
bool ring_is_negative(const UPoly<C>& a) {
  return !a.is_zero() && ring_is_negative(a.lc());
}

}  // namespace hilbgw
