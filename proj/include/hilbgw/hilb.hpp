#pragma once

#include <map>
#include <vector>

#include "hilbgw/combinatorics.hpp"
#include "hilbgw/mat.hpp"

namespace hilbgw {

// Coefficient field values for the equivariant parameters: symbolic
// (F = TFrac, t1/t2 generators) or specialized (F = Rat, fixed rationals).
template <class F>
struct TParams {
  F t1, t2;
};

inline TParams<TFrac> symbolic_t() { return {TFrac::t1(), TFrac::t2()}; }
inline TParams<Rat> specialized_t(const Rat& a, const Rat& b) { return {a, b}; }

// Element of the degree-n Fock slice, coefficients over the Nakajima basis.
template <class F>
struct FockVector {
  int n = 0;
  std::map<Partition, RatFunc<F>> coeffs;  // zero coefficients pruned
};

template <class F>
struct OperatorMatrix {
  int n = 0;
  Mat<RatFunc<F>> m;  // |Part(n)| x |Part(n)|, canonical partition order
};

// Normalized trace Tr_n of quantum multiplication by D; a rational function
// of q alone:
//   Tr_n = sum_{mu |- n} sum_i [ (mu_i^2/2) c_{mu_i}(q) - (mu_i/2) c_1(q) ],
//   c_r(q) = ((-q)^r + 1)/((-q)^r - 1).
RatFuncQ trn(int n);

// Diagonal Gram entry of the equivariant Poincare pairing:
//   G_mu = (-1)^{|mu|-l(mu)} / ( (t1 t2)^{l(mu)} |Aut(mu)| prod mu_i ).
template <class F>
RatFunc<F> gram_diag(const Partition& mu, const TParams<F>& t);

// Matrix of quantum multiplication by D = -|2,1^{n-2}> in the Nakajima basis.
// Diagonal from the c_r(q) weights; off-diagonal part-splitting terms carry
// t1 t2, part-joining terms are q-free integers. Conventions are pinned by
// the trace identity, selfadjoint_check and the unit column D * |1^n>.
template <class F>
OperatorMatrix<F> build_md(int n, const TParams<F>& t);

template <class F>
bool selfadjoint_check(int n, const TParams<F>& t);

// Shared state for D-power computations on a fixed Hilb^n model: the
// operator, its powers, and the D-power coordinate matrix.
template <class F>
class HilbModel {
public:
  HilbModel(int n, TParams<F> t);

  int n() const { return n_; }
  int dim() const { return dim_; }
  const TParams<F>& params() const { return t_; }
  const Mat<RatFunc<F>>& md() const { return md_; }

  // D^{*k} |1^n> for k = 0..dim-1 as coordinate vectors.
  const std::vector<std::vector<RatFunc<F>>>& dpower_vectors();

  // Solves sum_k c_k D^{*k} = |mu>; throws if the D-power basis degenerates.
  std::vector<RatFunc<F>> dpower_coords(const Partition& mu);

  // M_{|mu>} = sum_k c_k (M_D)^k.
  Mat<RatFunc<F>> mult_operator(const Partition& mu);

  // Tr_n^mu = trace(M_{|mu>}).
  RatFunc<F> trmu(const Partition& mu);

  const Mat<RatFunc<F>>& md_power(int k);

private:
  int n_, dim_;
  TParams<F> t_;
  Mat<RatFunc<F>> md_;
  std::vector<Mat<RatFunc<F>>> pow_;
  std::vector<std::vector<RatFunc<F>>> dvecs_;
  std::map<Partition, std::vector<RatFunc<F>>> coord_cache_;

  void ensure_dvecs();
};

// Spec-level wrappers.
template <class F>
std::vector<FockVector<F>> dpower_basis(int n, const TParams<F>& t);

template <class F>
OperatorMatrix<F> mult_operator(const Partition& mu, const TParams<F>& t);

template <class F>
RatFunc<F> trmu(const Partition& mu, const TParams<F>& t);

// q-dependence of diagonal entries lives entirely in c_r factors whose
// denominators are products of ((-q)^r - 1); exposed for tests.
UPoly<Rat> cyclotomic_product(int n);

}  // namespace hilbgw

#include "hilbgw/hilb_impl.hpp"
