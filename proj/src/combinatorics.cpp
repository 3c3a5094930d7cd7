#include "hilbgw/combinatorics.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace hilbgw {

namespace {

std::mutex g_mutex;

void gen_partitions(int rem, int maxp, Partition& cur, std::vector<Partition>& out) {
  if (rem == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(rem, maxp); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(rem - p, p, cur, out);
    cur.pop_back();
  }
}

long count_partitions(int rem, int maxp) {
  if (rem == 0) return 1;
  long c = 0;
  for (int p = std::min(rem, maxp); p >= 1; --p) c += count_partitions(rem - p, p);
  return c;
}

}  // namespace

const std::vector<Partition>& partitions(int n) {
  if (n < 0) throw std::domain_error("partitions: n must be nonnegative");
  static std::map<int, std::vector<Partition>> cache;
  std::lock_guard<std::mutex> lock(g_mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Partition> out;
  Partition cur;
  gen_partitions(n, n, cur, out);
  return cache.emplace(n, std::move(out)).first->second;
}

long partition_count(int n) { return count_partitions(n, n); }

long partition_count_pentagonal(int n) {
  // p(n) = sum_{k>=1} (-1)^{k+1} [ p(n - k(3k-1)/2) + p(n - k(3k+1)/2) ]
  static std::vector<long> p{1};
  std::lock_guard<std::mutex> lock(g_mutex);
  while (static_cast<int>(p.size()) <= n) {
    int m = static_cast<int>(p.size());
    long s = 0;
    for (int k = 1;; ++k) {
      long g1 = static_cast<long>(k) * (3 * k - 1) / 2;
      long g2 = static_cast<long>(k) * (3 * k + 1) / 2;
      if (g1 > m && g2 > m) break;
      long term = 0;
      if (g1 <= m) term += p[m - g1];
      if (g2 <= m) term += p[m - g2];
      s += (k % 2 == 1) ? term : -term;
    }
    p.push_back(s);
  }
  return p[n];
}

int partition_index(int n, const Partition& mu) {
  const auto& ps = partitions(n);
  for (size_t i = 0; i < ps.size(); ++i)
    if (ps[i] == mu) return static_cast<int>(i);
  throw std::invalid_argument("partition_index: not a partition of n: " + partition_str(mu));
}

long aut_order(const Partition& mu) {
  long a = 1;
  int run = 1;
  for (size_t i = 1; i <= mu.size(); ++i) {
    if (i < mu.size() && mu[i] == mu[i - 1]) {
      ++run;
    } else {
      for (int k = 2; k <= run; ++k) a *= k;
      run = 1;
    }
  }
  return a;
}

Rat zsym(const Partition& mu) {
  Rat z(aut_order(mu));
  for (int p : mu) z *= Rat(p);
  return z;
}

int mult_of_part(const Partition& mu, int r) {
  int m = 0;
  for (int p : mu) m += (p == r);
  return m;
}

std::string partition_str(const Partition& mu) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < mu.size(); ++i) {
    if (i) os << ",";
    os << mu[i];
  }
  os << ")";
  return os.str();
}

Partition parse_partition(const std::string& s) {
  Partition mu;
  std::string t;
  for (char c : s) {
    if (c == '(' || c == ')' || c == ' ') continue;
    t += c;
  }
  std::istringstream is(t);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) continue;
    int v = std::stoi(tok);
    if (v <= 0) throw std::invalid_argument("parse_partition: parts must be positive");
    mu.push_back(v);
  }
  for (size_t i = 1; i < mu.size(); ++i)
    if (mu[i] > mu[i - 1]) throw std::invalid_argument("parse_partition: parts must be weakly decreasing");
  return mu;
}

Rat sigma(int r, int n) {
  if (n <= 0) throw std::domain_error("sigma: n must be positive");
  Rat s(0);
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) s += Rat(d).pow(r);
  return s;
}

Rat bernoulli(int m) {
  if (m < 0) throw std::domain_error("bernoulli: m must be nonnegative");
  if (m > 1 && m % 2 == 1) return Rat(0);
  static std::vector<Rat> cache{Rat(1)};
  std::lock_guard<std::mutex> lock(g_mutex);
  while (static_cast<int>(cache.size()) <= m) {
    int k = static_cast<int>(cache.size());
    // sum_{j=0}^{k} C(k+1, j) B_j = 0
    Rat s(0);
    for (int j = 0; j < k; ++j) s += binomial(k + 1, j) * cache[j];
    cache.push_back(-s / binomial(k + 1, k));
  }
  return cache[m];
}

Rat bernoulli_abs(int m) { return bernoulli(m).abs(); }

Rat binomial(int n, int k) {
  if (k < 0 || k > n) return Rat(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rat(b);
}

Rat factorial(int n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rat(f);
}

Rat double_factorial_odd(int k) {
  Rat r(1);
  for (int v = 2 * k + 1; v >= 1; v -= 2) r *= Rat(v);
  return r;
}

Series<Rat> eisenstein(int g, int order) {
  if (g < 1) throw std::domain_error("eisenstein: g must be positive");
  Series<Rat> e(Var::Q, order);
  e.set_coeff(0, Rat(1));
  Rat pref = -Rat(4 * g) / bernoulli(2 * g);
  for (int n = 1; n <= order; ++n) e.set_coeff(n, pref * sigma(2 * g - 1, n));
  return e;
}

Series<Rat> partition_series(int order) {
  // prod_{l>=1} (1-Q^l)^{-1}: multiply the truncated geometric factors
  Series<Rat> p = Series<Rat>::constant(Var::Q, order, Rat(1));
  for (int l = 1; l <= order; ++l) {
    Series<Rat> geo(Var::Q, order);
    for (int k = 0; l * k <= order; ++k) geo.set_coeff(l * k, Rat(1));
    p = p * geo;
  }
  return p;
}

Series<Rat> log_partition_series(int order) {
  Series<Rat> s(Var::Q, order);
  for (int k = 1; k <= order; ++k) s.set_coeff(k, sigma(-1, k));
  return s;
}

Series<Rat> ptilde_series(int order) { return partition_series(order) * log_partition_series(order); }

Rat hur(int l, int k) {
  if (l < 1 || k < 1) throw std::domain_error("hur: l, k must be positive");
  // coeff of x^l y^k in exp(y log P(x)) is [x^l] (log P)^k / k!
  Series<Rat> lp = series_log(partition_series(l));
  Series<Rat> pw = Series<Rat>::constant(Var::Q, l, Rat(1));
  for (int i = 0; i < k; ++i) pw = pw * lp;
  return pw.coeff(l) / factorial(k);
}

Series<Rat> ecal2(int order) {
  Series<Rat> s(Var::Q, order);
  for (int k = 1; k <= order; ++k)
    for (int j = k; j <= order; j += k) s.set_coeff(j, s.coeff(j) + Rat(k));
  return s;
}

Series<Rat> ecal3(int order) {
  Series<Rat> s(Var::Q, order);
  for (int k = 1; k <= order; ++k)
    for (int j = k; j <= order; j += k) s.set_coeff(j, s.coeff(j) + Rat(k) * Rat(k));
  return s;
}

Rat partition_power_sum(int n, int k) {
  Rat s(0);
  for (const auto& mu : partitions(n))
    for (int p : mu) s += Rat(p).pow(k);
  return s;
}

}  // namespace hilbgw
