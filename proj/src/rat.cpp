#include "hilbgw/rat.hpp"

namespace hilbgw {

Rat Rat::pow(long e) const {
  if (e == 0) return Rat(1);
  if (e < 0) return inv().pow(-e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
  return from_mpz(n, d);
}

Rat Rat::content_gcd(const Rat& a, const Rat& b) {
  if (a.is_zero()) return b.abs();
  if (b.is_zero()) return a.abs();
  mpz_class g, l;
  mpz_gcd(g.get_mpz_t(), a.num().get_mpz_t(), b.num().get_mpz_t());
  mpz_lcm(l.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
  return from_mpz(g, l);
}

bool Rat::sqrt_exact(Rat& r) const {
  if (sign() < 0) return false;
  mpz_class sn, sd;
  if (mpz_perfect_square_p(num().get_mpz_t()) == 0) return false;
  if (mpz_perfect_square_p(den().get_mpz_t()) == 0) return false;
  mpz_sqrt(sn.get_mpz_t(), num().get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den().get_mpz_t());
  r = from_mpz(sn, sd);
  return true;
}

std::string Rat::str() const {
  std::string s = v_.get_num().get_str();
  if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
  return s;
}

}  // namespace hilbgw
