#pragma once

namespace hilbgw {

template <class F>
RatFunc<F> gram_diag(const Partition& mu, const TParams<F>& t) {
  int n = 0;
  for (int p : mu) n += p;
  int l = static_cast<int>(mu.size());
  F sign((n - l) % 2 == 0 ? 1 : -1);
  F denom = F(1);
  for (int i = 0; i < l; ++i) denom = denom * (t.t1 * t.t2);
  denom = denom * field_from_rat<F>(zsym(mu));
  return RatFunc<F>(sign) / RatFunc<F>(denom);
}

template <class F>
OperatorMatrix<F> build_md(int n, const TParams<F>& t) {
  if (n < 0) throw std::domain_error("build_md: n must be nonnegative");
  const auto& ps = partitions(n);
  int dim = static_cast<int>(ps.size());
  OperatorMatrix<F> out;
  out.n = n;
  out.m = Mat<RatFunc<F>>(dim, dim);
  RatFunc<F> tsum = RatFunc<F>(t.t1 + t.t2);
  RatFunc<F> tprod = RatFunc<F>(t.t1 * t.t2);
  RatFunc<F> c1 = RatFunc<F>::cot_basis(1);
  for (int j = 0; j < dim; ++j) {
    const Partition& mu = ps[j];
    // diagonal: (t1+t2) sum_i [ (mu_i^2/2) c_{mu_i} - (mu_i/2) c_1 ]
    RatFunc<F> diag;
    for (int r : mu) {
      diag = diag + RatFunc<F>::cot_basis(r).scaled(field_from_rat<F>(Rat(r) * Rat(r) / Rat(2)));
      diag = diag - c1.scaled(field_from_rat<F>(Rat(r) / Rat(2)));
    }
    out.m(j, j) = out.m(j, j) + tsum * diag;
    // splitting: replace one part a by (k, a-k); coefficient
    //   t1 t2 * k l m_k(nu) m_l(nu)        for k != l
    //   t1 t2 * (1/2) k^2 m_k(nu)(m_k(nu)-1)  for k == l
    for (size_t ip = 0; ip < mu.size(); ++ip) {
      int a = mu[ip];
      if (ip > 0 && mu[ip - 1] == a) continue;  // distinct part values once
      for (int k = 1; 2 * k <= a; ++k) {
        int l = a - k;
        Partition nu;
        bool removed = false;
        for (int p : mu) {
          if (!removed && p == a) {
            removed = true;
            continue;
          }
          nu.push_back(p);
        }
        nu.push_back(k);
        nu.push_back(l);
        std::sort(nu.rbegin(), nu.rend());
        int mk = mult_of_part(nu, k);
        Rat w = (k != l) ? Rat(k) * Rat(l) * Rat(mk) * Rat(mult_of_part(nu, l))
                         : Rat(k) * Rat(k) * Rat(mk) * Rat(mk - 1) / Rat(2);
        int i = partition_index(n, nu);
        out.m(i, j) = out.m(i, j) + tprod.scaled(field_from_rat<F>(w));
      }
    }
    // joining: replace parts (k, l) by k+l; coefficient
    //   -(k+l) m_{k+l}(nu)       for k != l
    //   -(1/2)(k+l) m_{k+l}(nu)  for k == l
    std::vector<int> distinct;
    for (size_t i = 0; i < mu.size(); ++i)
      if (i == 0 || mu[i] != mu[i - 1]) distinct.push_back(mu[i]);
    for (size_t ik = 0; ik < distinct.size(); ++ik) {
      for (size_t il = ik; il < distinct.size(); ++il) {
        int k = distinct[ik], l = distinct[il];
        if (k == l && mult_of_part(mu, k) < 2) continue;
        Partition nu;
        int removed_k = 0, removed_l = 0;
        for (int p : mu) {
          if (p == k && removed_k == 0) {
            ++removed_k;
            continue;
          }
          if (p == l && removed_l == 0) {
            ++removed_l;
            continue;
          }
          nu.push_back(p);
        }
        nu.push_back(k + l);
        std::sort(nu.rbegin(), nu.rend());
        Rat w = -Rat(k + l) * Rat(mult_of_part(nu, k + l));
        if (k == l) w = w / Rat(2);
        int i = partition_index(n, nu);
        out.m(i, j) = out.m(i, j) + RatFunc<F>(field_from_rat<F>(w));
      }
    }
  }
  return out;
}

template <class F>
bool selfadjoint_check(int n, const TParams<F>& t) {
  OperatorMatrix<F> M = build_md(n, t);
  const auto& ps = partitions(n);
  int dim = static_cast<int>(ps.size());
  std::vector<RatFunc<F>> G(dim);
  for (int i = 0; i < dim; ++i) G[i] = gram_diag(ps[i], t);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (!ratfunc_eq(M.m(j, i) * G[j], G[i] * M.m(i, j))) return false;
  return true;
}

template <class F>
HilbModel<F>::HilbModel(int n, TParams<F> t)
    : n_(n), dim_(static_cast<int>(partitions(n).size())), t_(std::move(t)) {
  md_ = build_md(n, t_).m;
  pow_.push_back(Mat<RatFunc<F>>::identity(dim_, RatFunc<F>(1)));
}

template <class F>
const Mat<RatFunc<F>>& HilbModel<F>::md_power(int k) {
  while (static_cast<int>(pow_.size()) <= k) pow_.push_back(md_ * pow_.back());
  return pow_[k];
}

template <class F>
void HilbModel<F>::ensure_dvecs() {
  if (!dvecs_.empty()) return;
  std::vector<RatFunc<F>> v(dim_);
  v[partition_index(n_, Partition(n_, 1))] = RatFunc<F>(1);
  dvecs_.push_back(v);
  for (int k = 1; k < dim_; ++k) dvecs_.push_back(md_.apply(dvecs_.back()));
}

template <class F>
const std::vector<std::vector<RatFunc<F>>>& HilbModel<F>::dpower_vectors() {
  ensure_dvecs();
  return dvecs_;
}

template <class F>
std::vector<RatFunc<F>> HilbModel<F>::dpower_coords(const Partition& mu) {
  auto it = coord_cache_.find(mu);
  if (it != coord_cache_.end()) return it->second;
  ensure_dvecs();
  // clear denominators column-wise: column k entries have denominators
  // dividing cyclo^k with cyclo = prod_{r<=n} ((-q)^r - 1)
  UPoly<Rat> cyclo = cyclotomic_product(n_);
  auto lift_poly = [](const UPoly<Rat>& p) {
    std::vector<F> cs(p.deg() + 1);
    for (int i = 0; i <= p.deg(); ++i) cs[i] = field_from_rat<F>(p[i]);
    return UPoly<F>(std::move(cs));
  };
  UPoly<F> cycloF = lift_poly(cyclo);
  Mat<UPoly<F>> V(dim_, dim_);
  std::vector<RatFunc<F>> colscale(dim_, RatFunc<F>(1));
  UPoly<F> cpow(F(1));
  for (int k = 0; k < dim_; ++k) {
    if (k > 0) cpow = cpow * cycloF;
    colscale[k] = RatFunc<F>(cpow);
    for (int i = 0; i < dim_; ++i) {
      const RatFunc<F>& e = dvecs_[k][i];
      if (e.is_zero()) continue;
      V(i, k) = e.num() * exact_div(cpow, e.den());
    }
  }
  std::vector<UPoly<F>> b(dim_);
  b[partition_index(n_, mu)] = UPoly<F>(F(1));
  std::vector<RatFunc<F>> c;
  try {
    c = bareiss_solve(std::move(V), std::move(b));
  } catch (const std::domain_error&) {
    throw std::domain_error("dpower basis degenerate for n = " + std::to_string(n_));
  }
  for (int k = 0; k < dim_; ++k) c[k] = c[k] * colscale[k];
  coord_cache_.emplace(mu, c);
  return c;
}

template <class F>
Mat<RatFunc<F>> HilbModel<F>::mult_operator(const Partition& mu) {
  int m = 0;
  for (int p : mu) m += p;
  if (m != n_) throw std::invalid_argument("mult_operator: |mu| != n");
  std::vector<RatFunc<F>> c = dpower_coords(mu);
  Mat<RatFunc<F>> out(dim_, dim_);
  for (int k = 0; k < dim_; ++k) {
    if (c[k].is_zero()) continue;
    const Mat<RatFunc<F>>& P = md_power(k);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) out(i, j) = out(i, j) + P(i, j) * c[k];
  }
  return out;
}

template <class F>
RatFunc<F> HilbModel<F>::trmu(const Partition& mu) {
  // trace(sum_k c_k M^k) = sum_k c_k trace(M^k); avoids building the matrix
  std::vector<RatFunc<F>> c = dpower_coords(mu);
  RatFunc<F> s;
  for (int k = 0; k < dim_; ++k) {
    if (c[k].is_zero()) continue;
    s = s + md_power(k).trace() * c[k];
  }
  return s;
}

template <class F>
std::vector<FockVector<F>> dpower_basis(int n, const TParams<F>& t) {
  if (n < 1) throw std::domain_error("dpower_basis: n must be positive");
  HilbModel<F> model(n, t);
  const auto& ps = partitions(n);
  // independence certificate: the coordinate solve must succeed
  model.dpower_coords(Partition(n, 1));
  std::vector<FockVector<F>> out;
  for (const auto& vec : model.dpower_vectors()) {
    FockVector<F> f;
    f.n = n;
    for (size_t i = 0; i < ps.size(); ++i)
      if (!vec[i].is_zero()) f.coeffs.emplace(ps[i], vec[i]);
    out.push_back(std::move(f));
  }
  return out;
}

template <class F>
OperatorMatrix<F> mult_operator(const Partition& mu, const TParams<F>& t) {
  int n = 0;
  for (int p : mu) n += p;
  HilbModel<F> model(n, t);
  OperatorMatrix<F> out;
  out.n = n;
  out.m = model.mult_operator(mu);
  return out;
}

template <class F>
RatFunc<F> trmu(const Partition& mu, const TParams<F>& t) {
  int n = 0;
  for (int p : mu) n += p;
  if (n < 1) throw std::domain_error("trmu: |mu| must be positive");
  HilbModel<F> model(n, t);
  return model.trmu(mu);
}

}  // namespace hilbgw
