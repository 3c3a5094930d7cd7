#pragma once

#include <map>
#include <string>
#include <utility>

#include "hilbgw/upoly.hpp"

namespace hilbgw {

// Monomial t1^a t2^b, compared in degree-lex order (used for leading terms
// and for the frozen rendering order).
struct TMono {
  int a = 0, b = 0;
  friend bool operator<(const TMono& x, const TMono& y) {
    if (x.a + x.b != y.a + y.b) return x.a + x.b < y.a + y.b;
    return x.a < y.a;
  }
  friend bool operator==(const TMono& x, const TMono& y) { return x.a == y.a && x.b == y.b; }
};

// Sparse polynomial in t1, t2 over Rat. No zero coefficients are stored.
class TPoly {
public:
  TPoly() = default;
  TPoly(long n) { add_term(0, 0, Rat(n)); }
  explicit TPoly(const Rat& c) { add_term(0, 0, c); }

  static TPoly t1() {
    TPoly p;
    p.add_term(1, 0, Rat(1));
    return p;
  }
  static TPoly t2() {
    TPoly p;
    p.add_term(0, 1, Rat(1));
    return p;
  }
  static TPoly monomial(const Rat& c, int a, int b) {
    TPoly p;
    p.add_term(a, b, c);
    return p;
  }

  void add_term(int a, int b, const Rat& c) {
    if (c.is_zero()) return;
    if (a < 0 || b < 0) throw std::domain_error("TPoly: negative exponent");
    TMono m{a, b};
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  const std::map<TMono, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == TMono{0, 0});
  }
  Rat constant_term() const {
    auto it = terms_.find(TMono{0, 0});
    return it == terms_.end() ? Rat(0) : it->second;
  }
  int total_deg() const {
    int d = -1;
    for (auto& [m, c] : terms_) d = std::max(d, m.a + m.b);
    return d;
  }

  const std::pair<const TMono, Rat>& lt() const {  // leading term, deglex
    if (is_zero()) throw std::domain_error("TPoly: lt of zero");
    return *terms_.rbegin();
  }

  friend TPoly operator+(const TPoly& x, const TPoly& y) {
    TPoly r = x;
    for (auto& [m, c] : y.terms_) r.add_term(m.a, m.b, c);
    return r;
  }
  friend TPoly operator-(const TPoly& x, const TPoly& y) {
    TPoly r = x;
    for (auto& [m, c] : y.terms_) r.add_term(m.a, m.b, -c);
    return r;
  }
  TPoly operator-() const {
    TPoly r;
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  friend TPoly operator*(const TPoly& x, const TPoly& y) {
    TPoly r;
    for (auto& [mx, cx] : x.terms_)
      for (auto& [my, cy] : y.terms_) r.add_term(mx.a + my.a, mx.b + my.b, cx * cy);
    return r;
  }
  friend bool operator==(const TPoly& x, const TPoly& y) { return x.terms_ == y.terms_; }
  friend bool operator!=(const TPoly& x, const TPoly& y) { return !(x == y); }

  TPoly scaled(const Rat& s) const {
    TPoly r;
    if (s.is_zero()) return r;
    for (auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
    return r;
  }

  TPoly pow(int e) const {
    TPoly r(1);
    TPoly base = *this;
    while (e) {
      if (e & 1) r = r * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return r;
  }

  TPoly swap_t() const {  // t1 <-> t2
    TPoly r;
    for (auto& [m, c] : terms_) r.add_term(m.b, m.a, c);
    return r;
  }

  TPoly derivative(int var) const {  // var: 0 -> d/dt1, 1 -> d/dt2
    TPoly r;
    for (auto& [m, c] : terms_) {
      if (var == 0 && m.a > 0) r.add_term(m.a - 1, m.b, c * Rat(m.a));
      if (var == 1 && m.b > 0) r.add_term(m.a, m.b - 1, c * Rat(m.b));
    }
    return r;
  }

  Rat eval(const Rat& v1, const Rat& v2) const {
    Rat r(0);
    for (auto& [m, c] : terms_) r += c * v1.pow(m.a) * v2.pow(m.b);
    return r;
  }

  Rat content() const {
    Rat g(0);
    for (auto& [m, c] : terms_) g = Rat::content_gcd(g, c);
    return g;
  }

  // Exact division under deglex order; throws on inexact input.
  friend TPoly exact_div(const TPoly& x, const TPoly& y);
  friend TPoly gcd(const TPoly& x, const TPoly& y);

  std::string str(const char* v1 = "t1", const char* v2 = "t2") const;

private:
  std::map<TMono, Rat> terms_;
};

inline bool ring_is_zero(const TPoly& p) { return p.is_zero(); }
inline TPoly ring_gcd(const TPoly& a, const TPoly& b) { return gcd(a, b); }
inline TPoly ring_exact_div(const TPoly& a, const TPoly& b) { return exact_div(a, b); }
inline bool ring_is_negative(const TPoly& p) { return !p.is_zero() && p.lt().second.sign() < 0; }
inline TPoly ring_mul_long(const TPoly& a, long k) { return a.scaled(Rat(k)); }

// Element of Q(t1,t2). Canonical form: gcd-reduced, denominator with positive
// deglex-leading coefficient.
class TFrac {
public:
  TFrac() : num_(), den_(1) {}
  TFrac(long n) : num_(n), den_(1) {}
  explicit TFrac(const Rat& r) : num_(r), den_(1) {}
  explicit TFrac(TPoly n) : num_(std::move(n)), den_(1) {}
  TFrac(TPoly n, TPoly d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

  static TFrac t1() { return TFrac(TPoly::t1()); }
  static TFrac t2() { return TFrac(TPoly::t2()); }

  const TPoly& num() const { return num_; }
  const TPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }

  friend TFrac operator+(const TFrac& x, const TFrac& y) {
    return TFrac(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
  }
  friend TFrac operator-(const TFrac& x, const TFrac& y) {
    return TFrac(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
  }
  TFrac operator-() const {
    TFrac r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  friend TFrac operator*(const TFrac& x, const TFrac& y) {
    return TFrac(x.num_ * y.num_, x.den_ * y.den_);
  }
  friend TFrac operator/(const TFrac& x, const TFrac& y) {
    if (y.is_zero()) throw std::domain_error("TFrac: division by zero");
    return TFrac(x.num_ * y.den_, x.den_ * y.num_);
  }
  friend bool operator==(const TFrac& x, const TFrac& y) {
    return x.num_ * y.den_ == y.num_ * x.den_;
  }
  friend bool operator!=(const TFrac& x, const TFrac& y) { return !(x == y); }

  TFrac inv() const {
    if (is_zero()) throw std::domain_error("TFrac: inverse of zero");
    return TFrac(den_, num_);
  }

  TFrac swap_t() const {
    TFrac r;
    r.num_ = num_.swap_t();
    r.den_ = den_.swap_t();
    r.normalize_sign();
    return r;
  }

  Rat eval(const Rat& v1, const Rat& v2) const {
    Rat d = den_.eval(v1, v2);
    if (d.is_zero()) throw std::domain_error("TFrac: evaluation at denominator zero");
    return num_.eval(v1, v2) / d;
  }

  std::string str() const;

private:
  TPoly num_, den_;

  void reduce();
  void normalize_sign();
};

inline bool ring_is_zero(const TFrac& x) { return x.is_zero(); }
inline TFrac ring_mul_long(const TFrac& a, long k) { return a * TFrac(k); }
inline TFrac ring_exact_div(const TFrac& a, const TFrac& b) { return a / b; }
// content over a field is trivial; q-polynomial gcds over TFrac are only
// used as helpers, canonical reduction goes through the TPoly lift
inline TFrac ring_gcd(const TFrac& a, const TFrac& b) {
  return (a.is_zero() && b.is_zero()) ? TFrac(0) : TFrac(1);
}
inline bool ring_is_negative(const TFrac& x) {
  return !x.is_zero() && x.num().lt().second.sign() < 0;
}

}  // namespace hilbgw
