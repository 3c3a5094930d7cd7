#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hilbgw {

// Exact rational number, GMP-backed. Always canonical: gcd(|num|,den)=1, den>0.
class Rat {
public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}
  Rat(long n, long d) : v_(n, d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    v_.canonicalize();
  }
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  explicit Rat(const mpz_class& n) : v_(n) {}
  explicit Rat(const std::string& s) : v_(s) {
    if (v_.get_den() == 0) throw std::domain_error("Rat: zero denominator");
    v_.canonicalize();
  }

  static Rat from_mpz(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    Rat r;
    r.v_ = mpq_class(n, d);
    r.v_.canonicalize();
    return r;
  }

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }

  Rat inv() const {
    if (is_zero()) throw std::domain_error("Rat: inverse of zero");
    return Rat(mpq_class(1 / v_));
  }

  Rat pow(long e) const;
  Rat abs() const { return sign() < 0 ? -*this : *this; }

  // Content gcd: g > 0 such that a/g and b/g are coprime integers.
  // gcd(0,0) = 0. Used to make polynomial coefficients integrally primitive.
  static Rat content_gcd(const Rat& a, const Rat& b);

  // Exact integer square root test; returns true and sets r if v is a square.
  bool sqrt_exact(Rat& r) const;

  double to_double() const { return v_.get_d(); }
  std::string str() const;

private:
  mpq_class v_;
};

inline Rat abs(const Rat& a) { return a.abs(); }

}  // namespace hilbgw
