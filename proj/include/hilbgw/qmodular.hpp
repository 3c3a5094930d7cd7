#pragma once

#include <map>
#include <optional>

#include "hilbgw/combinatorics.hpp"
#include "hilbgw/ratfunc.hpp"
#include "hilbgw/series.hpp"

namespace hilbgw {

// Finite linear combination  const + sum_r coeff_r * c_r(q)  of the basis
// functions c_r(q) = ((-q)^r + 1)/((-q)^r - 1). Every q-rational quantity
// that crosses the -q = e^{iu} change of variable factors through this basis,
// so the substitution never needs complex arithmetic.
class CotBasisExpr {
public:
  CotBasisExpr() = default;

  void add_constant(const Rat& c) { const_ += c; }
  void add(int r, const Rat& coeff);

  const Rat& constant() const { return const_; }
  const std::map<int, Rat>& coeffs() const { return coeffs_; }

  RatFuncQ to_ratfunc() const;

private:
  Rat const_;
  std::map<int, Rat> coeffs_;
};

// u-Laurent expansion of (-i r/2) c_r(q) under -q = e^{iu}:
//   -1/u + sum_{h>=0} |B_{2h}| r^{2h}/(2h)! u^{2h-1}.
// The h = 0 term cancels the -1/u, so the stored u^{-1} coefficient is 0.
// Coefficients are Q-independent; the returned ULaurent carries order-0
// Q-series.
ULaurent<Rat> cot_expansion(int r, int u_order);

// B(u,Q) = sum_{g>=1} sum_{m>=1} |B_{2g-2}|/(2g-2)! (sigma_{2g-1}(m) - sigma_1(m)) Q^m u^{2g-3}
ULaurent<Rat> bseries(int u_order, int q_order);

// CotBasisExpr for Tr_n (no constant term). Representability of Tr_n in the
// c_r basis is certified by comparing to_ratfunc() with the direct formula.
CotBasisExpr trace_cot_basis(int n);

// (-i) Tr_n(q) expanded in u (Q-order 0 coefficients).
ULaurent<Rat> trace_u_expansion(int n, int u_order);

struct LemmaTraceReport {
  bool pass = true;
  int fail_u = 0, fail_q = 0;  // first failing coefficient pair when !pass
  Rat lhs, rhs;
};

// Checks (-i) sum_{m<=n_max} Tr_m(q) Q^m = P(Q) B(u,Q) coefficient-wise for
// u-exponents <= u_order and Q-exponents <= n_max.
LemmaTraceReport lemma_trace_check(int n_max, int u_order, int q_order);

}  // namespace hilbgw
