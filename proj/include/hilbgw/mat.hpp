#pragma once

#include <vector>

#include "hilbgw/upoly.hpp"

namespace hilbgw {

template <class T>
class Mat {
public:
  Mat() : n_(0), m_(0) {}
  Mat(int rows, int cols, T fill = T{}) : n_(rows), m_(cols), a_(size_t(rows) * cols, fill) {}

  static Mat identity(int n, const T& one) {
    Mat r(n, n);
    for (int i = 0; i < n; ++i) r(i, i) = one;
    return r;
  }

  int rows() const { return n_; }
  int cols() const { return m_; }
  T& operator()(int i, int j) { return a_[size_t(i) * m_ + j]; }
  const T& operator()(int i, int j) const { return a_[size_t(i) * m_ + j]; }

  friend Mat operator+(const Mat& x, const Mat& y) {
    Mat r(x.n_, x.m_);
    for (size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = x.a_[k] + y.a_[k];
    return r;
  }
  friend Mat operator-(const Mat& x, const Mat& y) {
    Mat r(x.n_, x.m_);
    for (size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = x.a_[k] - y.a_[k];
    return r;
  }
  friend Mat operator*(const Mat& x, const Mat& y) {
    Mat r(x.n_, y.m_);
    for (int i = 0; i < x.n_; ++i)
      for (int k = 0; k < x.m_; ++k) {
        const T& xik = x(i, k);
        if (field_is_zero_generic(xik)) continue;
        for (int j = 0; j < y.m_; ++j) r(i, j) = r(i, j) + xik * y(k, j);
      }
    return r;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    std::vector<T> r(n_, T{});
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < m_; ++j) r[i] = r[i] + (*this)(i, j) * v[j];
    return r;
  }

  Mat transposed() const {
    Mat r(m_, n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < m_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  T trace() const {
    T s{};
    for (int i = 0; i < n_; ++i) s = s + (*this)(i, i);
    return s;
  }

private:
  int n_, m_;
  std::vector<T> a_;

  template <class U>
  static bool field_is_zero_generic(const U& u) {
    return field_is_zero(u);
  }
};

// Berkowitz characteristic polynomial: division-free, works over any
// commutative ring. Returns coefficients c[0..n] with
// charpoly(x) = sum c[k] x^(n-k), c[0] = one. det(A) = (-1)^n c[n].
template <class T>
std::vector<T> berkowitz_charpoly(const Mat<T>& A, const T& one) {
  int n = A.rows();
  std::vector<T> C{one};
  if (n == 0) return C;
  C = {one, T{} - A(0, 0)};
  for (int i = 1; i < n; ++i) {
    // s[j] = r . (leading i x i block)^j . c
    std::vector<T> v(i), s(i);
    for (int k = 0; k < i; ++k) v[k] = A(k, i);
    for (int j = 0; j < i; ++j) {
      T dot{};
      for (int k = 0; k < i; ++k) dot = dot + A(i, k) * v[k];
      s[j] = dot;
      if (j + 1 < i) {
        std::vector<T> w(i, T{});
        for (int r = 0; r < i; ++r)
          for (int k = 0; k < i; ++k) w[r] = w[r] + A(r, k) * v[k];
        v = std::move(w);
      }
    }
    std::vector<T> tvec(i + 2, T{});
    tvec[0] = one;
    tvec[1] = T{} - A(i, i);
    for (int j = 0; j < i; ++j) tvec[2 + j] = T{} - s[j];
    std::vector<T> newC(i + 2, T{});
    for (int k = 0; k < i + 2; ++k)
      for (int t = 0; t <= k && t < i + 2; ++t) {
        int idx = k - t;
        if (idx < static_cast<int>(C.size())) newC[k] = newC[k] + tvec[t] * C[idx];
      }
    C = std::move(newC);
  }
  return C;
}

template <class T>
T berkowitz_det(const Mat<T>& A, const T& one) {
  auto C = berkowitz_charpoly(A, one);
  T d = C.back();
  if (A.rows() % 2 == 1) d = T{} - d;
  return d;
}

// Fraction-free (Bareiss) determinant over an integral domain with exact
// division. Entries of the input matrix are consumed.
template <class P>
P bareiss_det(Mat<P> M) {
  int n = M.rows();
  if (n == 0) return P();
  bool neg = false;
  P prev;
  bool have_prev = false;
  for (int k = 0; k + 1 < n; ++k) {
    int piv = -1;
    for (int r = k; r < n; ++r)
      if (!ring_is_zero(M(r, k))) {
        piv = r;
        break;
      }
    if (piv < 0) return P();  // singular
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(M(piv, j), M(k, j));
      neg = !neg;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        P t = M(k, k) * M(i, j) - M(i, k) * M(k, j);
        M(i, j) = have_prev ? ring_exact_div(t, prev) : std::move(t);
      }
      M(i, k) = P();
    }
    prev = M(k, k);
    have_prev = true;
  }
  P d = M(n - 1, n - 1);
  return neg ? P() - d : d;
}

}  // namespace hilbgw

#include "hilbgw/ratfunc.hpp"

namespace hilbgw {

// Solve A x = b where entries live in F[q], by fraction-free forward
// elimination (Bareiss) followed by a small field back-substitution.
// Throws when A is singular.
template <class F>
std::vector<RatFunc<F>> bareiss_solve(Mat<UPoly<F>> M, std::vector<UPoly<F>> b) {
  int n = M.rows();
  UPoly<F> prev;
  bool have_prev = false;
  for (int k = 0; k + 1 < n; ++k) {
    int piv = -1;
    for (int r = k; r < n; ++r)
      if (!M(r, k).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::domain_error("bareiss_solve: singular matrix");
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(M(piv, j), M(k, j));
      std::swap(b[piv], b[k]);
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        UPoly<F> t = M(k, k) * M(i, j) - M(i, k) * M(k, j);
        M(i, j) = have_prev ? exact_div(t, prev) : std::move(t);
      }
      UPoly<F> tb = M(k, k) * b[i] - M(i, k) * b[k];
      b[i] = have_prev ? exact_div(tb, prev) : std::move(tb);
      M(i, k) = UPoly<F>();
    }
    prev = M(k, k);
    have_prev = true;
  }
  if (M(n - 1, n - 1).is_zero()) throw std::domain_error("bareiss_solve: singular matrix");
  std::vector<RatFunc<F>> x(n);
  for (int i = n - 1; i >= 0; --i) {
    RatFunc<F> acc(b[i]);
    for (int j = i + 1; j < n; ++j) acc = acc - RatFunc<F>(M(i, j)) * x[j];
    x[i] = acc / RatFunc<F>(M(i, i));
  }
  return x;
}

}  // namespace hilbgw
