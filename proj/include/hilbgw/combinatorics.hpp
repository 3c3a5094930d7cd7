#pragma once

#include <string>
#include <vector>

#include "hilbgw/series.hpp"

namespace hilbgw {

// Partition: weakly decreasing list of positive parts.
using Partition = std::vector<int>;

// All partitions of n in the frozen canonical order: part lists are
// generated largest-first and compared lexicographically descending,
// e.g. n=4 -> (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
// This order indexes OperatorMatrix rows/columns and all emitted tables.
const std::vector<Partition>& partitions(int n);

long partition_count(int n);              // |Part(n)| by direct enumeration
long partition_count_pentagonal(int n);   // independent route (Euler recurrence)

int partition_index(int n, const Partition& mu);  // index in partitions(n)
long aut_order(const Partition& mu);              // prod_r m_r!
Rat zsym(const Partition& mu);                    // aut * prod parts
int mult_of_part(const Partition& mu, int r);
std::string partition_str(const Partition& mu);
Partition parse_partition(const std::string& s);  // "(2,1,1)" or "2,1,1"

// sigma_r(n) = sum over divisors d|n of d^r; exact for negative r.
Rat sigma(int r, int n);

// Bernoulli number B_m (B_1 = -1/2); odd m > 1 gives 0.
Rat bernoulli(int m);
Rat bernoulli_abs(int m);

Rat binomial(int n, int k);
Rat factorial(int n);
Rat double_factorial_odd(int k);  // (2k+1)!!

// Eisenstein series E_{2g}(Q) = 1 - (4g/B_{2g}) sum sigma_{2g-1}(n) Q^n.
Series<Rat> eisenstein(int g, int order);

// Partition generating functions.
Series<Rat> partition_series(int order);        // P(Q) = prod (1-Q^l)^{-1}
Series<Rat> log_partition_series(int order);    // log P = sum sigma_{-1}(k) Q^k
Series<Rat> ptilde_series(int order);           // P log P
Rat hur(int l, int k);  // coeff of x^l y^k in exp(y log P(x))

// E_2(Q) = sum k Q^k/(1-Q^k),  E_3(Q) = sum k^2 Q^k/(1-Q^k).
Series<Rat> ecal2(int order);
Series<Rat> ecal3(int order);

// sum over mu |- n of sum_i mu_i^k  (brute force; test oracle for the
// P * ecal identities and for the trace expansion).
Rat partition_power_sum(int n, int k);

}  // namespace hilbgw
