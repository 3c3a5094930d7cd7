#pragma once

#include "hilbgw/tpoly.hpp"

namespace hilbgw {

inline Rat field_from_rat(const Rat&, const Rat& r) { return r; }
inline TFrac field_from_rat(const TFrac&, const Rat& r) { return TFrac(r); }

template <class F>
F field_from_rat(const Rat& r) {
  return field_from_rat(F{}, r);
}

inline bool field_is_zero(const Rat& x) { return x.is_zero(); }
inline bool field_is_zero(const TFrac& x) { return x.is_zero(); }

inline Rat field_inv(const Rat& x) { return x.inv(); }
inline TFrac field_inv(const TFrac& x) { return x.inv(); }

// Truncated polynomial ring F[m]/(m^2); a field only where a0 is a unit,
// which is all the degree-0 identity check ever divides by.
template <class F>
struct MJet {
  F a0{}, a1{};

  MJet() = default;
  MJet(long n) : a0(n) {}
  explicit MJet(F c) : a0(std::move(c)) {}
  MJet(F c0, F c1) : a0(std::move(c0)), a1(std::move(c1)) {}

  friend MJet operator+(const MJet& x, const MJet& y) { return {x.a0 + y.a0, x.a1 + y.a1}; }
  friend MJet operator-(const MJet& x, const MJet& y) { return {x.a0 - y.a0, x.a1 - y.a1}; }
  MJet operator-() const { return {-a0, -a1}; }
  friend MJet operator*(const MJet& x, const MJet& y) {
    return {x.a0 * y.a0, x.a0 * y.a1 + x.a1 * y.a0};
  }
  friend MJet operator/(const MJet& x, const MJet& y) {
    F inv0 = field_inv(y.a0);
    F q0 = x.a0 * inv0;
    return {q0, (x.a1 - q0 * y.a1) * inv0};
  }
  friend bool operator==(const MJet& x, const MJet& y) { return x.a0 == y.a0 && x.a1 == y.a1; }
  friend bool operator!=(const MJet& x, const MJet& y) { return !(x == y); }
};

template <class F>
bool field_is_zero(const MJet<F>& x) {
  return field_is_zero(x.a0) && field_is_zero(x.a1);
}
template <class F>
MJet<F> field_from_rat(const MJet<F>&, const Rat& r) {
  return MJet<F>(field_from_rat<F>(r));
}
template <class F>
MJet<F> field_inv(const MJet<F>& x) {
  return MJet<F>(1) / x;
}

}  // namespace hilbgw
