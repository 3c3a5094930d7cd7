#include "hilbgw/qmodular.hpp"

namespace hilbgw {

void CotBasisExpr::add(int r, const Rat& coeff) {
  if (r <= 0) throw std::domain_error("CotBasisExpr: r must be positive");
  auto it = coeffs_.find(r);
  if (it == coeffs_.end()) {
    if (!coeff.is_zero()) coeffs_.emplace(r, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

RatFuncQ CotBasisExpr::to_ratfunc() const {
  RatFuncQ f(const_);
  for (auto& [r, c] : coeffs_) f = f + RatFuncQ::cot_basis(r).scaled(c);
  return f;
}

ULaurent<Rat> cot_expansion(int r, int u_order) {
  if (r <= 0) throw std::domain_error("cot_expansion: r must be positive");
  ULaurent<Rat> out(-1, u_order, Var::Q, 0);
  // u^{-1}: |B_0| r^0 / 0! against the -1/u term; cancels exactly.
  for (int e = 1; e <= u_order; e += 2) {
    int h = (e + 1) / 2;
    Rat c = bernoulli_abs(2 * h) * Rat(r).pow(2 * h) / factorial(2 * h);
    out.coeff(e).set_coeff(0, c);
  }
  return out;
}

ULaurent<Rat> bseries(int u_order, int q_order) {
  ULaurent<Rat> out(-1, u_order, Var::Q, q_order);
  for (int e = -1; e <= u_order; e += 2) {
    int g = (e + 3) / 2;
    Rat pref = bernoulli_abs(2 * g - 2) / factorial(2 * g - 2);
    for (int m = 1; m <= q_order; ++m)
      out.coeff(e).set_coeff(m, pref * (sigma(2 * g - 1, m) - sigma(1, m)));
  }
  return out;
}

CotBasisExpr trace_cot_basis(int n) {
  if (n < 1) throw std::domain_error("trace_cot_basis: n must be positive");
  CotBasisExpr e;
  const auto& ps = partitions(n);
  // Tr_n = sum_r (r^2/2) N_r c_r - (n p(n)/2) c_1, N_r = total multiplicity
  // of the part r over all partitions of n.
  std::map<int, long> nr;
  for (const auto& mu : ps)
    for (int p : mu) nr[p] += 1;
  for (auto& [r, cnt] : nr) e.add(r, Rat(r) * Rat(r) * Rat(cnt) / Rat(2));
  e.add(1, -Rat(n) * Rat(static_cast<long>(ps.size())) / Rat(2));
  return e;
}

ULaurent<Rat> trace_u_expansion(int n, int u_order) {
  CotBasisExpr e = trace_cot_basis(n);
  ULaurent<Rat> out(-1, u_order, Var::Q, 0);
  if (!e.constant().is_zero())
    throw std::domain_error("trace_u_expansion: unexpected constant term");
  for (auto& [r, c] : e.coeffs()) {
    // (-i) c_r = (2/r) * [(-i r/2) c_r]
    ULaurent<Rat> k = cot_expansion(r, u_order).scaled(Rat(2, 1) / Rat(r) * c);
    out = out + k;
  }
  return out;
}

LemmaTraceReport lemma_trace_check(int n_max, int u_order, int q_order) {
  if (n_max < 1) throw std::domain_error("lemma_trace_check: n_max must be positive");
  int qo = std::max(n_max, q_order);
  ULaurent<Rat> lhs(-1, u_order, Var::Q, qo);
  for (int m = 1; m <= n_max; ++m) {
    ULaurent<Rat> tm = trace_u_expansion(m, u_order);
    for (int e = -1; e <= u_order; ++e)
      lhs.coeff(e).set_coeff(m, tm.coeff(e).coeff(0));
  }
  ULaurent<Rat> rhs = bseries(u_order, qo).mul_qseries(partition_series(qo));
  LemmaTraceReport rep;
  for (int e = -1; e <= u_order; ++e)
    for (int m = 0; m <= n_max; ++m) {
      Rat l = lhs.coeff(e).coeff(m), r = rhs.coeff(e).coeff(m);
      if (l != r) {
        rep.pass = false;
        rep.fail_u = e;
        rep.fail_q = m;
        rep.lhs = l;
        rep.rhs = r;
        return rep;
      }
    }
  return rep;
}

}  // namespace hilbgw
