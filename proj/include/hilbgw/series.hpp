#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "hilbgw/field.hpp"

namespace hilbgw {

enum class Var { Q, q };

inline const char* var_name(Var v) { return v == Var::Q ? "Q" : "q"; }

// Power series over F truncated at an explicit order N: coefficients 0..N are
// exact, everything past N is unknown (never assumed zero). Binary operations
// truncate to the smaller order and require matching variable tags.
template <class F>
class Series {
public:
  Series() : var_(Var::Q), c_(1, F{}) {}
  Series(Var v, int order) : var_(v), c_(order + 1, F{}) {
    if (order < 0) throw std::domain_error("Series: negative order");
  }
  static Series constant(Var v, int order, F c) {
    Series s(v, order);
    s.c_[0] = std::move(c);
    return s;
  }

  Var var() const { return var_; }
  int order() const { return static_cast<int>(c_.size()) - 1; }
  const F& coeff(int i) const {
    if (i < 0 || i > order()) throw std::out_of_range("Series: coefficient beyond order");
    return c_[i];
  }
  void set_coeff(int i, F v) {
    if (i < 0 || i > order()) throw std::out_of_range("Series: coefficient beyond order");
    c_[i] = std::move(v);
  }

  bool is_zero() const {
    for (const auto& c : c_)
      if (!field_is_zero(c)) return false;
    return true;
  }

  // Index of first nonzero coefficient; order()+1 when zero to this order.
  int valuation() const {
    for (int i = 0; i <= order(); ++i)
      if (!field_is_zero(c_[i])) return i;
    return order() + 1;
  }

  Series truncated(int new_order) const {
    if (new_order >= order()) return *this;
    Series r(var_, new_order);
    for (int i = 0; i <= new_order; ++i) r.c_[i] = c_[i];
    return r;
  }

  friend Series operator+(const Series& a, const Series& b) {
    a.check(b);
    Series r(a.var_, std::min(a.order(), b.order()));
    for (int i = 0; i <= r.order(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
  }
  friend Series operator-(const Series& a, const Series& b) {
    a.check(b);
    Series r(a.var_, std::min(a.order(), b.order()));
    for (int i = 0; i <= r.order(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
  }
  Series operator-() const {
    Series r(var_, order());
    for (int i = 0; i <= order(); ++i) r.c_[i] = -c_[i];
    return r;
  }
  friend Series operator*(const Series& a, const Series& b) {
    a.check(b);
    Series r(a.var_, std::min(a.order(), b.order()));
    for (int i = 0; i <= r.order(); ++i) {
      if (field_is_zero(a.c_[i])) continue;
      for (int j = 0; i + j <= r.order(); ++j) {
        if (field_is_zero(b.c_[j])) continue;
        r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
      }
    }
    return r;
  }
  friend bool operator==(const Series& a, const Series& b) {
    a.check(b);
    int n = std::min(a.order(), b.order());
    for (int i = 0; i <= n; ++i)
      if (!field_is_zero(a.c_[i] - b.c_[i])) return false;
    return true;
  }

  Series scaled(const F& s) const {
    Series r(var_, order());
    for (int i = 0; i <= order(); ++i) r.c_[i] = c_[i] * s;
    return r;
  }

  Series shift_up(int k) const {  // multiply by var^k; order grows by k
    Series r(var_, order() + k);
    for (int i = 0; i <= order(); ++i) r.c_[i + k] = c_[i];
    return r;
  }

  Series shift_down(int k) const {  // exact divide by var^k; order shrinks by k
    if (order() < k) throw std::domain_error("Series: shift_down past order");
    for (int i = 0; i < k; ++i)
      if (!field_is_zero(c_[i])) throw std::domain_error("Series: shift_down of nonzero tail");
    Series r(var_, order() - k);
    for (int i = 0; i + k <= order(); ++i) r.c_[i] = c_[i + k];
    return r;
  }

  // (var d/dvar): sum m a_m var^m. Exact, preserves order.
  Series var_ddvar() const {
    Series r(var_, order());
    for (int i = 1; i <= order(); ++i) r.c_[i] = ring_mul_long(c_[i], i);
    return r;
  }

  Series inverse() const {
    if (field_is_zero(c_[0])) throw std::domain_error("Series: inverse needs unit constant term");
    Series r(var_, order());
    F inv0 = field_inv(c_[0]);
    r.c_[0] = inv0;
    for (int n = 1; n <= order(); ++n) {
      F acc{};
      for (int k = 1; k <= n; ++k) acc = acc + c_[k] * r.c_[n - k];
      r.c_[n] = -(acc * inv0);
    }
    return r;
  }

  // Division with valuation handling: result has order min(Na,Nb) - val(b).
  friend Series divide(const Series& a, const Series& b) {
    a.check(b);
    int v = b.valuation();
    if (v > b.order()) throw std::domain_error("Series: division by (truncation-)zero");
    if (a.valuation() < v) throw std::domain_error("Series: division valuation mismatch");
    int n = std::min(a.order(), b.order());
    Series an = a.truncated(n).shift_down(std::min(v, a.valuation()));
    Series bn = b.truncated(n).shift_down(v);
    an = an.truncated(n - v);
    return an * bn.inverse();
  }

  friend Series series_log(const Series& s) {
    if (!field_is_zero(s.c_[0] - field_from_rat<F>(Rat(1))))
      throw std::domain_error("series_log: constant term must be 1");
    int n = s.order();
    Series r(s.var_, n);
    for (int m = 1; m <= n; ++m) {
      F acc = ring_mul_long(s.c_[m], m);
      for (int k = 1; k < m; ++k) acc = acc - ring_mul_long(r.c_[k], k) * s.c_[m - k];
      r.c_[m] = acc * field_from_rat<F>(Rat(1, m));
    }
    return r;
  }

  friend Series series_exp(const Series& u) {
    if (!field_is_zero(u.c_[0]))
      throw std::domain_error("series_exp: constant term must be 0");
    int n = u.order();
    Series r(u.var_, n);
    r.c_[0] = field_from_rat<F>(Rat(1));
    for (int m = 1; m <= n; ++m) {
      F acc{};
      for (int k = 1; k <= m; ++k) acc = acc + ring_mul_long(u.c_[k], k) * r.c_[m - k];
      r.c_[m] = acc * field_from_rat<F>(Rat(1, m));
    }
    return r;
  }

  // base^alpha = exp(alpha log base); alpha is any field element.
  friend Series series_pow(const Series& base, const F& alpha) {
    return series_exp(series_log(base).scaled(alpha));
  }

  std::string str(int max_terms = 16) const {
    std::ostringstream os;
    bool any = false;
    int shown = 0;
    for (int i = 0; i <= order() && shown < max_terms; ++i) {
      if (field_is_zero(c_[i])) continue;
      if (any) os << " + ";
      os << "(" << coeff_str(c_[i]) << ")";
      if (i > 0) os << "*" << var_name(var_) << "^" << i;
      any = true;
      ++shown;
    }
    if (!any) os << "0";
    os << " + O(" << var_name(var_) << "^" << order() + 1 << ")";
    return os.str();
  }

private:
  Var var_;
  std::vector<F> c_;

  void check(const Series& o) const {
    if (var_ != o.var_) throw std::invalid_argument("Series: variable tag mismatch");
  }
  static std::string coeff_str(const Rat& r) { return r.str(); }
  static std::string coeff_str(const TFrac& f) { return f.str(); }
  template <class G>
  static std::string coeff_str(const MJet<G>& j) {
    return coeff_str(j.a0) + " + m*(" + coeff_str(j.a1) + ")";
  }
};

template <class F>
bool field_is_zero(const Series<F>& s) {
  return s.is_zero();
}

// Truncated Laurent series in u whose coefficients are Series in Q.
// The lowest exponent is bounded below by -3 (the u^{2g-3} grading).
template <class F>
class ULaurent {
public:
  ULaurent(int lo, int hi, Var qvar, int q_order) : lo_(lo) {
    if (lo < -3) throw std::domain_error("ULaurent: lowest exponent below -3");
    if (hi < lo) throw std::domain_error("ULaurent: empty exponent range");
    c_.assign(hi - lo + 1, Series<F>(qvar, q_order));
  }

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(c_.size()) - 1; }

  const Series<F>& coeff(int uexp) const {
    if (uexp < lo() || uexp > hi()) throw std::out_of_range("ULaurent: exponent out of range");
    return c_[uexp - lo_];
  }
  Series<F>& coeff(int uexp) {
    if (uexp < lo() || uexp > hi()) throw std::out_of_range("ULaurent: exponent out of range");
    return c_[uexp - lo_];
  }

  friend ULaurent operator+(const ULaurent& a, const ULaurent& b) {
    int lo = std::min(a.lo(), b.lo()), hi = std::min(a.hi(), b.hi());
    int qo = std::min(a.c_[0].order(), b.c_[0].order());
    ULaurent r(lo, hi, a.c_[0].var(), qo);
    for (int e = lo; e <= hi; ++e) {
      Series<F> s(a.c_[0].var(), qo);
      if (e >= a.lo() && e <= a.hi()) s = s + a.coeff(e);
      if (e >= b.lo() && e <= b.hi()) s = s + b.coeff(e);
      r.coeff(e) = s;
    }
    return r;
  }
  friend ULaurent operator-(const ULaurent& a, const ULaurent& b) { return a + (-b); }
  ULaurent operator-() const {
    ULaurent r = *this;
    for (auto& s : r.c_) s = -s;
    return r;
  }

  ULaurent scaled(const F& s) const {
    ULaurent r = *this;
    for (auto& cs : r.c_) cs = cs.scaled(s);
    return r;
  }

  // multiply every u-coefficient by a series in Q
  ULaurent mul_qseries(const Series<F>& s) const {
    ULaurent r = *this;
    for (auto& cs : r.c_) cs = cs * s;
    return r;
  }

  bool is_zero() const {
    for (const auto& s : c_)
      if (!s.is_zero()) return false;
    return true;
  }

private:
  int lo_;
  std::vector<Series<F>> c_;
};

}  // namespace hilbgw
