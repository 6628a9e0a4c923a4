#include "mahon/qpoly.hpp"

#include <stdexcept>

namespace mahon {

namespace {

Laurent q_power(long long e) {
  return Laurent::monomial(Int(1), {{"q", static_cast<int>(e)}});
}

Laurent poly_from_counts(const std::vector<long long>& counts) {
  Laurent::TermMap terms;
  for (std::size_t d = 0; d < counts.size(); ++d)
    if (counts[d] != 0) terms[{static_cast<int>(d)}] = Int(counts[d]);
  return Laurent::from_terms({"q"}, std::move(terms));
}

void bump(std::vector<long long>& counts, long long value) {
  if (value < 0) throw std::logic_error("negative statistic value");
  if (static_cast<std::size_t>(value) >= counts.size())
    counts.resize(static_cast<std::size_t>(value) + 1, 0);
  ++counts[static_cast<std::size_t>(value)];
}

long long binom2(long long m) { return m * (m - 1) / 2; }

}  // namespace

Laurent q_int(int n) {
  if (n < 0) throw std::invalid_argument("q_int: n must be >= 0");
  Laurent::TermMap terms;
  for (int i = 0; i < n; ++i) terms[{i}] = 1;
  return Laurent::from_terms({"q"}, std::move(terms));
}

Laurent q_fact(int n) {
  if (n < 0) throw std::invalid_argument("q_fact: n must be >= 0");
  Laurent r(1);
  for (int i = 1; i <= n; ++i) r *= q_int(i);
  return r;
}

Laurent q_binom(int n, int k) {
  if (k < 0 || k > n) return Laurent();
  return q_fact(n).divided_exactly(q_fact(k) * q_fact(n - k));
}

Laurent q_multinom(int n, const std::vector<int>& parts) {
  int sum = 0;
  Laurent denom(1);
  for (int p : parts) {
    if (p < 0) return Laurent();
    sum += p;
    denom *= q_fact(p);
  }
  if (sum != n) throw std::invalid_argument("q_multinom: parts must sum to n");
  return q_fact(n).divided_exactly(denom);
}

Laurent distribution(Stat s, const Composition& alpha, int k) {
  std::vector<long long> counts;
  if (s == Stat::Inv || s == Stat::Maj) {
    // closed forms on the starred representation avoid rebuilding blocks
    for_each_starred(alpha, k, [&](const StarredPermutation& sp) {
      long long v;
      if (s == Stat::Maj) {
        v = maj_omp_alt(sp);
      } else {
        v = inv(sp.word);
        for (int i : sp.stars) v -= inv_to(sp.word, i) + 1;
      }
      bump(counts, v);
    });
  } else {
    for_each_osp(alpha, k, [&](const Omp& p) { bump(counts, omp_stat(s, p)); });
  }
  return poly_from_counts(counts);
}

std::tuple<Laurent, Laurent, Laurent> distribution_inv_maj_dinv(
    const Composition& alpha, int k) {
  std::vector<long long> ci, cm, cd;
  for_each_starred(alpha, k, [&](const StarredPermutation& sp) {
    long long vi = inv(sp.word);
    for (int i : sp.stars) vi -= inv_to(sp.word, i) + 1;
    bump(ci, vi);
    bump(cm, maj_omp_alt(sp));
    bump(cd, dinv_omp(from_starred(sp)));
  });
  return {poly_from_counts(ci), poly_from_counts(cm), poly_from_counts(cd)};
}

namespace {

Laurent mahonian_rec_impl(
    const std::vector<int>& parts, int k, bool binomial_form,
    std::map<std::pair<std::vector<int>, int>, Laurent>& memo) {
  if (parts.size() == 1)
    return k == parts[0] ? Laurent(1) : Laurent();
  auto key = std::make_pair(parts, k);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  const int an = parts.back();
  std::vector<int> head(parts.begin(), parts.end() - 1);
  Laurent total;
  for (int ell = 1; ell <= k; ++ell) {
    const int a = an - k + ell;  // copies of n joining an existing block
    if (a < 0 || a > ell || k - an < 0) continue;
    Laurent coeff = binomial_form
                        ? q_binom(ell, a) * q_binom(k, ell)
                        : q_multinom(k, {a, k - an, k - ell});
    if (coeff.is_zero()) continue;
    Laurent sub = mahonian_rec_impl(head, ell, binomial_form, memo);
    if (sub.is_zero()) continue;
    total += q_power(binom2(a)) * coeff * sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

Laurent mahonian_rec(const Composition& alpha, int k) {
  std::map<std::pair<std::vector<int>, int>, Laurent> memo;
  return mahonian_rec_impl(alpha.parts, k, false, memo);
}

Laurent mahonian_rec_binomial_form(const Composition& alpha, int k) {
  std::map<std::pair<std::vector<int>, int>, Laurent> memo;
  return mahonian_rec_impl(alpha.parts, k, true, memo);
}

namespace {

Laurent stirling_impl(int n, int k, int a,
                      std::map<std::pair<int, int>, Laurent>& memo) {
  if (n == 1) return k == a ? Laurent(1) : Laurent();
  auto key = std::make_pair(n, k);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  Laurent total;
  for (int i = 1; i <= k; ++i) {
    const int top = a - k + i;
    if (top < 0 || top > i) continue;
    if (k - i < 0 || k - i > a) continue;
    Laurent quotient = q_fact(a).divided_exactly(q_fact(k - i));
    Laurent sub = stirling_impl(n - 1, i, a, memo);
    if (sub.is_zero()) continue;
    total += q_power(binom2(top)) * q_binom(i, top) * quotient * sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

Laurent gen_q_stirling(int n, int k, int a) {
  if (n < 1 || k < 1 || a < 1)
    throw std::invalid_argument("gen_q_stirling: arguments must be >= 1");
  std::map<std::pair<int, int>, Laurent> memo;
  return stirling_impl(n, k, a, memo);
}

std::pair<Laurent, Laurent> main_result_sides(const Composition& alpha) {
  Laurent::TermMap lhs, rhs;
  std::vector<std::string> vars{"q", "z"};
  auto add = [](Laurent::TermMap& m, int qe, int ze, long long c) {
    std::vector<int> key{qe, ze};
    auto [it, inserted] = m.emplace(std::move(key), Int(c));
    if (!inserted) it->second += c;
  };
  for_each_word(alpha, [&](const Word& w) {
    std::vector<int> des = descent_set(w);
    const int d = static_cast<int>(des.size());
    const long long wmaj = maj(w);
    const long long winv = inv(w);
    // subsets of the descent factors
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      long long lq = wmaj, rq = winv;
      int ze = 0;
      for (int i = 0; i < d; ++i) {
        if (!(mask & (1u << i))) continue;
        ++ze;
        lq -= i + 1;
        rq -= inv_to(w, des[static_cast<std::size_t>(i)]) + 1;
      }
      add(lhs, static_cast<int>(lq), ze, 1);
      add(rhs, static_cast<int>(rq), ze, 1);
    }
  });
  return {Laurent::from_terms(vars, std::move(lhs)),
          Laurent::from_terms(vars, std::move(rhs))};
}

const Laurent& DistributionTable::get(const Composition& alpha, int k,
                                      Stat s) {
  auto key = std::make_tuple(alpha.parts, k, static_cast<int>(s));
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  Laurent poly = distribution(s, alpha, k);
  if (!poly.all_coefficients_nonnegative())
    throw std::logic_error("distribution with a negative coefficient");
  if (poly.sum_of_coefficients() != Int(count_osp(alpha, k)))
    throw std::logic_error("distribution does not sum to the element count");
  return cache_.emplace(std::move(key), std::move(poly)).first->second;
}

}  // namespace mahon
