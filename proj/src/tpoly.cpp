#include "hilbgw/tpoly.hpp"

#include <sstream>

namespace hilbgw {

TPoly exact_div(const TPoly& x, const TPoly& y) {
  if (y.is_zero()) throw std::domain_error("TPoly: division by zero");
  TPoly rem = x, quot;
  const auto& [ym, yc] = y.lt();
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.lt();
    if (rm.a < ym.a || rm.b < ym.b) throw std::domain_error("TPoly: inexact division");
    TPoly t = TPoly::monomial(rc / yc, rm.a - ym.a, rm.b - ym.b);
    quot = quot + t;
    rem = rem - t * y;
  }
  return quot;
}

namespace {

// TPoly as polynomial in t1 whose coefficients are UPoly<Rat> in t2.
UPoly<UPoly<Rat>> to_recursive(const TPoly& p) {
  std::vector<UPoly<Rat>> outer;
  for (auto& [m, c] : p.terms()) {
    if (m.a >= static_cast<int>(outer.size())) outer.resize(m.a + 1);
    UPoly<Rat> inner = outer[m.a] + UPoly<Rat>::monomial(c, m.b);
    outer[m.a] = inner;
  }
  return UPoly<UPoly<Rat>>(std::move(outer));
}

TPoly from_recursive(const UPoly<UPoly<Rat>>& u) {
  TPoly p;
  for (int a = 0; a <= u.deg(); ++a)
    for (int b = 0; b <= u[a].deg(); ++b) p.add_term(a, b, u[a][b]);
  return p;
}

}  // namespace

TPoly gcd(const TPoly& x, const TPoly& y) {
  if (x.is_zero()) return ring_is_negative(y) ? -y : y;
  if (y.is_zero()) return ring_is_negative(x) ? -x : x;
  TPoly g = from_recursive(upoly_gcd(to_recursive(x), to_recursive(y)));
  if (ring_is_negative(g)) g = -g;
  return g;
}

std::string TPoly::str(const char* v1, const char* v2) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rat a = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    bool unit = a.is_one() && (m.a > 0 || m.b > 0);
    if (!unit) os << a.str();
    bool need_star = !unit;
    if (m.a > 0) {
      if (need_star) os << "*";
      os << v1;
      if (m.a > 1) os << "^" << m.a;
      need_star = true;
    }
    if (m.b > 0) {
      if (need_star) os << "*";
      os << v2;
      if (m.b > 1) os << "^" << m.b;
    }
  }
  return os.str();
}

void TFrac::reduce() {
  if (den_.is_zero()) throw std::domain_error("TFrac: zero denominator");
  if (num_.is_zero()) {
    den_ = TPoly(1);
    return;
  }
  if (den_.is_constant()) {
    Rat c = den_.constant_term();
    if (!c.is_one()) num_ = num_.scaled(c.inv());
    den_ = TPoly(1);
    return;
  }
  if (num_.is_constant()) {
    Rat c = Rat::content_gcd(num_.content(), den_.content());
    if (!c.is_one()) {
      num_ = num_.scaled(c.inv());
      den_ = den_.scaled(c.inv());
    }
    normalize_sign();
    return;
  }
  TPoly g = gcd(num_, den_);
  if (!(g == TPoly(1))) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
  // make coefficients integrally primitive, then fix the denominator sign
  Rat c = Rat::content_gcd(num_.content(), den_.content());
  if (!c.is_one()) {
    num_ = num_.scaled(c.inv());
    den_ = den_.scaled(c.inv());
  }
  normalize_sign();
}

void TFrac::normalize_sign() {
  if (ring_is_negative(den_)) {
    num_ = -num_;
    den_ = -den_;
  }
}

std::string TFrac::str() const {
  if (den_ == TPoly(1)) return num_.str();
  std::string n = num_.str(), d = den_.str();
  if (num_.terms().size() > 1) n = "(" + n + ")";
  if (den_.terms().size() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace hilbgw
