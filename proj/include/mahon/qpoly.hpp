#pragma once

#include <map>
#include <tuple>
#include <utility>

#include "mahon/laurent.hpp"
#include "mahon/omp.hpp"

namespace mahon {

// Standard q-analogs: [n] = 1 + q + ... + q^{n-1}, [n]! and the q-binomial
// and q-multinomial coefficients, computed by exact division of factorials.
Laurent q_int(int n);
Laurent q_fact(int n);
Laurent q_binom(int n, int k);  // zero when k < 0 or k > n
Laurent q_multinom(int n, const std::vector<int>& parts);

// Distribution of a statistic over osp(alpha, k), by enumeration.
Laurent distribution(Stat s, const Composition& alpha, int k);
// inv, maj and dinv distributions from a single enumeration pass.
std::tuple<Laurent, Laurent, Laurent> distribution_inv_maj_dinv(
    const Composition& alpha, int k);

// The common distribution of inv/maj/dinv on osp(alpha, k), computed by the
// trinomial recursion with initial condition chi(k = a_1).
Laurent mahonian_rec(const Composition& alpha, int k);
// Same quantity in the product-of-binomials form of the recursion.
Laurent mahonian_rec_binomial_form(const Composition& alpha, int k);

// Generalized q-Stirling polynomials: base case chi(k = a) at n = 1, then
//   S(n,k) = sum_i q^C(a-k+i,2) [i choose a-k+i] ([a]!/[k-i]!) S(n-1,i),
// skipping i whenever a-k+i lies outside [0,i] or k-i outside [0,a].
Laurent gen_q_stirling(int n, int k, int a);

// Both sides of the two-variable identity:
//   sum_sigma q^maj prod_{i=1..des} (1 + z/q^i)
//     = sum_sigma q^inv prod_{j in Des} (1 + z/q^{inv_to(j)+1}).
std::pair<Laurent, Laurent> main_result_sides(const Composition& alpha);

// Cache of distribution polynomials keyed by (alpha, k, stat). Every stored
// polynomial is validated: nonnegative coefficients summing to |osp(alpha,k)|.
class DistributionTable {
 public:
  const Laurent& get(const Composition& alpha, int k, Stat s);

 private:
  std::map<std::tuple<std::vector<int>, int, int>, Laurent> cache_;
};

}  // namespace mahon
