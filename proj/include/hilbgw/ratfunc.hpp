#pragma once

#include "hilbgw/series.hpp"
#include "hilbgw/upoly.hpp"

namespace hilbgw {

namespace detail {

inline void reduce_fraction(UPoly<Rat>& num, UPoly<Rat>& den) {
  UPoly<Rat> g = upoly_gcd(num, den);
  if (g.deg() > 0) {
    num = exact_div(num, g);
    den = exact_div(den, g);
  }
  Rat c = Rat::content_gcd(num.content(), den.content());
  if (!c.is_zero() && !c.is_one()) {
    c = c.inv();
    num = num.scaled(c);
    den = den.scaled(c);
  }
  if (den.lc().sign() < 0) {
    num = -num;
    den = -den;
  }
}

inline bool tpoly_upoly_is_tfree(const UPoly<TPoly>& p) {
  for (const auto& c : p.coeffs())
    if (!c.is_constant()) return false;
  return true;
}

// q-polynomials over Q obtained by slicing at each t1^a t2^b monomial
inline std::map<TMono, UPoly<Rat>> tpoly_upoly_slices(const UPoly<TPoly>& p) {
  std::map<TMono, std::vector<Rat>> acc;
  for (int i = 0; i <= p.deg(); ++i)
    for (const auto& [m, c] : p[i].terms()) {
      auto& v = acc[m];
      if (static_cast<int>(v.size()) <= i) v.resize(i + 1, Rat(0));
      v[i] = c;
    }
  std::map<TMono, UPoly<Rat>> out;
  for (auto& [m, v] : acc) out.emplace(m, UPoly<Rat>(std::move(v)));
  return out;
}

inline UPoly<TPoly> tpoly_upoly_div_qpoly(const UPoly<TPoly>& p, const UPoly<Rat>& g) {
  // divide slice-wise; exact by construction of g
  auto slices = tpoly_upoly_slices(p);
  std::vector<TPoly> cs;
  for (auto& [m, s] : slices) {
    UPoly<Rat> q = exact_div(s, g);
    if (q.deg() + 1 > static_cast<int>(cs.size())) cs.resize(q.deg() + 1);
    for (int i = 0; i <= q.deg(); ++i) cs[i].add_term(m.a, m.b, q[i]);
  }
  return UPoly<TPoly>(std::move(cs));
}

inline void reduce_fraction(UPoly<TFrac>& num, UPoly<TFrac>& den) {
  // clear coefficient denominators to land in Q[t1,t2][q]
  TPoly L(1);
  auto absorb = [&L](const UPoly<TFrac>& p) {
    for (const auto& c : p.coeffs()) {
      if (c.is_zero()) continue;
      TPoly g = gcd(L, c.den());
      L = L * exact_div(c.den(), g);
    }
  };
  absorb(num);
  absorb(den);
  auto lift = [&L](const UPoly<TFrac>& p) {
    std::vector<TPoly> cs(p.deg() + 1);
    for (int i = 0; i <= p.deg(); ++i)
      cs[i] = p[i].is_zero() ? TPoly() : p[i].num() * exact_div(L, p[i].den());
    return UPoly<TPoly>(std::move(cs));
  };
  UPoly<TPoly> a = lift(num), b = lift(den);
  auto divide_all = [](UPoly<TPoly>& p, const TPoly& c) {
    std::vector<TPoly> cs(p.deg() + 1);
    for (int i = 0; i <= p.deg(); ++i) cs[i] = exact_div(p[i], c);
    p = UPoly<TPoly>(std::move(cs));
  };
  // joint rational content (cheap)
  Rat rc(0);
  for (int i = 0; i <= a.deg(); ++i) rc = Rat::content_gcd(rc, a[i].content());
  for (int i = 0; i <= b.deg(); ++i) rc = Rat::content_gcd(rc, b[i].content());
  if (!rc.is_zero() && !rc.is_one()) {
    TPoly rcp(rc);
    divide_all(a, rcp);
    divide_all(b, rcp);
  }
  if (tpoly_upoly_is_tfree(a) || tpoly_upoly_is_tfree(b)) {
    // any common divisor is t-free: a univariate gcd over all t-slices
    UPoly<Rat> g;
    bool first = true;
    for (const auto* side : {&a, &b}) {
      for (auto& [m, s] : tpoly_upoly_slices(*side)) {
        g = first ? s : upoly_gcd(g, s);
        first = false;
        if (g.deg() == 0) break;
      }
      if (!first && g.deg() == 0) break;
    }
    if (g.deg() > 0) {
      a = tpoly_upoly_div_qpoly(a, g);
      b = tpoly_upoly_div_qpoly(b, g);
    }
  } else {
    TPoly cont = gcd(a.content(), b.content());
    if (!(cont == TPoly(1))) {
      divide_all(a, cont);
      divide_all(b, cont);
    }
    UPoly<TPoly> g = upoly_gcd(a, b);
    if (g.deg() > 0 || !(g == UPoly<TPoly>(TPoly(1)))) {
      a = exact_div(a, g);
      b = exact_div(b, g);
    }
  }
  if (ring_is_negative(b.lc())) {
    a = -a;
    b = -b;
  }
  auto back = [](const UPoly<TPoly>& p) {
    std::vector<TFrac> cs(p.deg() + 1);
    for (int i = 0; i <= p.deg(); ++i) cs[i] = TFrac(p[i]);
    return UPoly<TFrac>(std::move(cs));
  };
  num = back(a);
  den = back(b);
}

}  // namespace detail

// Rational function in q over the coefficient field F (Rat or TFrac).
// Kept reduced: common q-power and gcd removed, denominator sign-normalized.
// Equality testing never relies on normalization (cross-multiplication).
template <class F>
class RatFunc {
public:
  RatFunc() : num_(), den_(F(1)) {}
  RatFunc(long n) : num_(F(n)), den_(F(1)) {}
  explicit RatFunc(F c) : num_(std::move(c)), den_(F(1)) {}
  RatFunc(UPoly<F> num, UPoly<F> den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    reduce();
  }
  explicit RatFunc(UPoly<F> num) : num_(std::move(num)), den_(F(1)) {}

  static RatFunc q() { return RatFunc(UPoly<F>::monomial(F(1), 1)); }

  // c_r(q) = ((-q)^r + 1) / ((-q)^r - 1)
  static RatFunc cot_basis(int r) {
    if (r <= 0) throw std::domain_error("cot_basis: r must be positive");
    F sgn((r % 2 == 0) ? 1 : -1);
    UPoly<F> n = UPoly<F>::monomial(sgn, r) + UPoly<F>(F(1));
    UPoly<F> d = UPoly<F>::monomial(sgn, r) - UPoly<F>(F(1));
    return RatFunc(std::move(n), std::move(d));
  }

  const UPoly<F>& num() const { return num_; }
  const UPoly<F>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }

  RatFunc scaled(const F& s) const {
    RatFunc r = *this;
    r.num_ = r.num_.scaled(s);
    r.reduce();
    return r;
  }

  RatFunc pow(int e) const {
    if (e < 0) return inv().pow(-e);
    RatFunc r(1);
    RatFunc base = *this;
    while (e) {
      if (e & 1) r = r * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return r;
  }

  RatFunc inv() const {
    if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
    return RatFunc(den_, num_);
  }

  // Exact equality of rational functions by cross-multiplication.
  friend bool ratfunc_eq(const RatFunc& a, const RatFunc& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return ratfunc_eq(a, b); }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !ratfunc_eq(a, b); }

  F eval_q(const F& x) const {
    F d = den_.eval(x);
    if (field_is_zero(d)) throw std::domain_error("RatFunc: evaluation at pole");
    return num_.eval(x) / d;
  }

  F at_zero() const {
    if (field_is_zero(den_[0])) throw std::domain_error("RatFunc: pole at q = 0");
    return num_[0] / den_[0];
  }

  Series<F> q_expand(Var v, int order) const {
    if (field_is_zero(den_[0])) throw std::domain_error("RatFunc: pole at q = 0");
    Series<F> n(v, order), d(v, order);
    for (int i = 0; i <= std::min(order, num_.deg()); ++i) n.set_coeff(i, num_[i]);
    for (int i = 0; i <= std::min(order, den_.deg()); ++i) d.set_coeff(i, den_[i]);
    return n * d.inverse();
  }

  std::string str(const char* var = "q") const {
    std::string n = poly_str(num_, var), d = poly_str(den_, var);
    if (den_.deg() == 0 && field_is_zero(den_[0] - F(1))) return n;
    return "(" + n + ") / (" + d + ")";
  }

private:
  UPoly<F> num_, den_;

  void reduce() {
    if (num_.is_zero()) {
      den_ = UPoly<F>(F(1));
      return;
    }
    // strip common q-power
    int vn = 0, vd = 0;
    while (field_is_zero(num_[vn])) ++vn;
    while (field_is_zero(den_[vd])) ++vd;
    int v = std::min(vn, vd);
    if (v > 0) {
      num_ = strip(num_, v);
      den_ = strip(den_, v);
    }
    if (den_.deg() > 0) detail::reduce_fraction(num_, den_);
    if (den_.deg() == 0 && !field_is_zero(den_[0] - F(1))) {
      F s = field_inv(den_[0]);
      num_ = num_.scaled(s);
      den_ = UPoly<F>(F(1));
    }
  }

  static UPoly<F> strip(const UPoly<F>& p, int v) {
    std::vector<F> cs(p.deg() - v + 1);
    for (int i = v; i <= p.deg(); ++i) cs[i - v] = p[i];
    return UPoly<F>(std::move(cs));
  }

  static std::string coeff_str(const Rat& r) { return r.str(); }
  static std::string coeff_str(const TFrac& f) { return f.str(); }

  static std::string poly_str(const UPoly<F>& p, const char* var) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (int i = 0; i <= p.deg(); ++i) {
      if (field_is_zero(p[i])) continue;
      if (!first) s += " + ";
      s += "(" + coeff_str(p[i]) + ")";
      if (i >= 1) {
        s += "*";
        s += var;
        if (i > 1) s += "^" + std::to_string(i);
      }
      first = false;
    }
    return s;
  }
};

template <class F>
bool field_is_zero(const RatFunc<F>& x) {
  return x.is_zero();
}
template <class F>
RatFunc<F> ring_mul_long(const RatFunc<F>& a, long k) {
  return a.scaled(F(k));
}

using RatFuncQ = RatFunc<Rat>;
using RatFuncT = RatFunc<TFrac>;

// Lift a t-free rational function into the symbolic field.
inline RatFuncT lift_to_tfrac(const RatFuncQ& f) {
  auto conv = [](const UPoly<Rat>& p) {
    std::vector<TFrac> cs(p.deg() + 1);
    for (int i = 0; i <= p.deg(); ++i) cs[i] = TFrac(p[i]);
    return UPoly<TFrac>(std::move(cs));
  };
  return RatFuncT(conv(f.num()), conv(f.den()));
}

// Specialize t1, t2 to rationals (coefficient-wise evaluation).
inline RatFuncQ specialize(const RatFuncT& f, const Rat& v1, const Rat& v2) {
  auto conv = [&](const UPoly<TFrac>& p) {
    std::vector<Rat> cs(p.deg() + 1);
    for (int i = 0; i <= p.deg(); ++i) cs[i] = p[i].eval(v1, v2);
    return UPoly<Rat>(std::move(cs));
  };
  return RatFuncQ(conv(f.num()), conv(f.den()));
}

}  // namespace hilbgw
