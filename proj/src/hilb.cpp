#include "hilbgw/hilb.hpp"

namespace hilbgw {

RatFuncQ trn(int n) {
  if (n < 1) throw std::domain_error("trn: n must be positive");
  RatFuncQ c1 = RatFuncQ::cot_basis(1);
  RatFuncQ s;
  for (const auto& mu : partitions(n))
    for (int r : mu) {
      s = s + RatFuncQ::cot_basis(r).scaled(Rat(r) * Rat(r) / Rat(2));
      s = s - c1.scaled(Rat(r) / Rat(2));
    }
  return s;
}

UPoly<Rat> cyclotomic_product(int n) {
  // prod_{r=1..n} ((-q)^r - 1)
  UPoly<Rat> p(Rat(1));
  for (int r = 1; r <= n; ++r) {
    UPoly<Rat> f = UPoly<Rat>::monomial(Rat(r % 2 == 0 ? 1 : -1), r) - UPoly<Rat>(Rat(1));
    p = p * f;
  }
  return p;
}

}  // namespace hilbgw
