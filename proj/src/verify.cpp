#include "mahon/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "mahon/insertion.hpp"
#include "mahon/macdonald.hpp"
#include "mahon/omp.hpp"
#include "mahon/qpoly.hpp"

namespace mahon {

namespace {

int bound(const VerifyOptions& opts, int fallback) {
  return opts.max_weight > 0 ? opts.max_weight : fallback;
}

std::string spot(const Composition& alpha, int k) {
  return "alpha=" + alpha.str() + " k=" + std::to_string(k);
}

void fail(CheckResult& r, const std::string& detail) {
  if (!r.ok) return;
  r.ok = false;
  r.detail = detail;
}

template <class F>
void for_each_alpha_k(int max_weight, int max_parts, F&& f) {
  for (const Composition& alpha : compositions_up_to(max_weight, max_parts))
    for (int k = alpha.max_part(); k <= alpha.weight(); ++k) f(alpha, k);
}

long long sum_of(const std::set<int>& s) {
  long long t = 0;
  for (int x : s) t += x;
  return t;
}

long long sum_of(const std::vector<int>& s) {
  long long t = 0;
  for (int x : s) t += x;
  return t;
}

}  // namespace

std::vector<Composition> compositions_up_to(int max_weight, int max_parts) {
  std::vector<Composition> out;
  std::vector<int> cur;
  for (int w = 1; w <= max_weight; ++w) {
    std::function<void(int)> rec2 = [&](int rest) {
      if (rest == 0) {
        out.push_back(Composition(cur));
        return;
      }
      if (max_parts >= 0 && static_cast<int>(cur.size()) >= max_parts) return;
      for (int p = 1; p <= rest; ++p) {
        cur.push_back(p);
        rec2(rest - p);
        cur.pop_back();
      }
    };
    rec2(w);
  }
  return out;
}

CheckResult verify_equidistribution(const VerifyOptions& opts) {
  CheckResult r;
  const int W = bound(opts, 8);
  for_each_alpha_k(W, 4, [&](const Composition& alpha, int k) {
    if (!r.ok) return;
    auto [di, dm, dd] = distribution_inv_maj_dinv(alpha, k);
    if (di != dm || di != dd)
      fail(r, spot(alpha, k) + ": inv/maj/dinv distributions differ");
    ++r.checked;
  });
  return r;
}

CheckResult verify_insertion_laws(const VerifyOptions& opts) {
  CheckResult r;
  const int W = bound(opts, 6);
  for (const Composition& alpha : compositions_up_to(W)) {
    if (!r.ok) break;
    if (alpha.length() < 2) continue;
    const int n = alpha.length();
    const int an = alpha.parts.back();
    const Composition head = alpha.minus_last();
    for (int ell = head.max_part(); ell <= head.weight(); ++ell) {
      for_each_osp(head, ell, [&](const Omp& base) {
        if (!r.ok) return;
        for (int bsize = 0; bsize <= an; ++bsize) {
          const int usize = an - bsize;
          if (usize > ell) continue;
          // subsets U of [0, ell-1] of size usize
          std::vector<int> u_idx(static_cast<std::size_t>(usize));
          for (int i = 0; i < usize; ++i) u_idx[static_cast<std::size_t>(i)] = i;
          bool u_more = true;
          while (u_more) {
            std::set<int> U(u_idx.begin(), u_idx.end());
            // multisets B over [0, ell] of size bsize (weakly increasing)
            std::vector<int> B(static_cast<std::size_t>(bsize), 0);
            bool b_more = true;
            while (b_more) {
              const long long add = sum_of(U) + sum_of(B);
              Omp via_inv = phi_inv(base, U, B, n);
              if (inv_omp(via_inv) != inv_omp(base) + add)
                fail(r, spot(alpha, ell + bsize) + ": inv insertion law");
              PeeledArgs back = phi_inv_inverse(via_inv, n);
              if (back.base != base || back.U != U || back.B != B ||
                  back.ell != ell)
                fail(r, spot(alpha, ell + bsize) + ": inv inverse mismatch");

              Omp via_dinv = phi_dinv(base, U, B, n);
              if (dinv_omp(via_dinv) != dinv_omp(base) + add)
                fail(r, spot(alpha, ell + bsize) + ": dinv insertion law");
              back = phi_dinv_inverse(via_dinv, n);
              if (back.base != base || back.U != U || back.B != B)
                fail(r, spot(alpha, ell + bsize) + ": dinv inverse mismatch");

              StarredPermutation sbase = to_starred(base);
              StarredPermutation via_maj = phi_maj(sbase, U, B, n);
              if (maj_omp_alt(via_maj) != maj_omp_alt(sbase) + add)
                fail(r, spot(alpha, ell + bsize) + ": maj insertion law");
              PeeledArgsStarred sback = phi_maj_inverse(via_maj, n);
              if (!(sback.base == sbase) || sback.U != U || sback.B != B)
                fail(r, spot(alpha, ell + bsize) + ": maj inverse mismatch");

              ++r.checked;
              if (!r.ok) return;
              // next multiset
              b_more = false;
              for (int i = bsize - 1; i >= 0; --i) {
                if (B[static_cast<std::size_t>(i)] < ell) {
                  int v = ++B[static_cast<std::size_t>(i)];
                  for (int j = i + 1; j < bsize; ++j)
                    B[static_cast<std::size_t>(j)] = v;
                  b_more = true;
                  break;
                }
              }
              if (bsize == 0) b_more = false;
            }
            // next subset
            u_more = false;
            for (int i = usize - 1; i >= 0; --i) {
              if (u_idx[static_cast<std::size_t>(i)] < ell - usize + i) {
                ++u_idx[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < usize; ++j)
                  u_idx[static_cast<std::size_t>(j)] =
                      u_idx[static_cast<std::size_t>(j - 1)] + 1;
                u_more = true;
                break;
              }
            }
            if (usize == 0) u_more = false;
          }
        }
      });
      if (!r.ok) break;
    }
  }
  return r;
}

CheckResult verify_psi_bijection(const VerifyOptions& opts) {
  CheckResult r;
  const int W = bound(opts, 7);
  for_each_alpha_k(W, -1, [&](const Composition& alpha, int k) {
    if (!r.ok) return;
    std::set<Omp> images;
    long long count = 0;
    for_each_osp(alpha, k, [&](const Omp& rho) {
      if (!r.ok) return;
      ++count;
      Omp img = psi(alpha, k, rho, Stat::Inv, Stat::Maj);
      if (maj_omp(img) != inv_omp(rho))
        fail(r, spot(alpha, k) + ": maj(psi(rho)) != inv(rho) at " + rho.str());
      images.insert(img);
      Omp img_d = psi(alpha, k, rho, Stat::Inv, Stat::Dinv);
      if (dinv_omp(img_d) != inv_omp(rho))
        fail(r, spot(alpha, k) + ": dinv transport failed at " + rho.str());
      Omp img_dm = psi(alpha, k, rho, Stat::Dinv, Stat::Maj);
      if (maj_omp(img_dm) != dinv_omp(rho))
        fail(r, spot(alpha, k) + ": dinv->maj transport failed at " + rho.str());
      if (alpha.weight() <= 6) {
        if (psi(alpha, k, img, Stat::Maj, Stat::Inv) != rho)
          fail(r, spot(alpha, k) + ": psi maj->inv does not invert at " +
                      rho.str());
        if (psi(alpha, k, rho, Stat::Inv, Stat::Inv) != rho)
          fail(r, spot(alpha, k) + ": psi inv->inv is not the identity at " +
                      rho.str());
      }
    });
    if (r.ok && static_cast<long long>(images.size()) != count)
      fail(r, spot(alpha, k) + ": psi is not injective");
    r.checked += count;
  });
  return r;
}

CheckResult verify_rl_minima(const VerifyOptions& opts) {
  CheckResult r;
  const int W = bound(opts, 7);
  for_each_alpha_k(W, -1, [&](const Composition& alpha, int k) {
    if (!r.ok) return;
    RlMinimaReport rep = check_rl_minima(alpha, k);
    if (!rep.ok)
      fail(r, spot(alpha, k) + ": right-to-left minima changed: " +
                  rep.counterexample);
    r.checked += rep.checked;
  });
  return r;
}

CheckResult verify_recursions(const VerifyOptions& opts) {
  CheckResult r;
  const int W = bound(opts, 8);
  for_each_alpha_k(W, -1, [&](const Composition& alpha, int k) {
    if (!r.ok) return;
    Laurent rec = mahonian_rec(alpha, k);
    if (rec != mahonian_rec_binomial_form(alpha, k))
      fail(r, spot(alpha, k) + ": the two recursion forms differ");
    if (rec != distribution(Stat::Inv, alpha, k))
      fail(r, spot(alpha, k) + ": recursion does not match enumeration");
    if (k == alpha.weight() && rec != q_multinom(alpha.weight(), alpha.parts))
      fail(r, spot(alpha, k) + ": k = |alpha| is not the q-multinomial");
    ++r.checked;
  });
  return r;
}

CheckResult verify_stirling(const VerifyOptions& opts) {
  CheckResult r;
  const int NMAX = 3, AMAX = 3;
  for (int a = 1; a <= AMAX && r.ok; ++a) {
    for (int n = 1; n <= NMAX && r.ok; ++n) {
      Composition alpha(std::vector<int>(static_cast<std::size_t>(n), a));
      Laurent afact_pow = q_fact(a).pow(static_cast<unsigned>(n));
      for (int k = a; k <= a * n && r.ok; ++k) {
        Laurent lhs = distribution(Stat::Inv, alpha, k);
        Laurent rhs_num = q_fact(k) * gen_q_stirling(n, k, a);
        Laurent rhs = rhs_num.divided_exactly(afact_pow);
        if (lhs != rhs) fail(r, spot(alpha, k) + ": q-Stirling identity");
        ++r.checked;
      }
    }
  }
  const int W = bound(opts, 7);
  for (int n = 1; n <= W && r.ok; ++n) {
    Composition alpha(std::vector<int>(static_cast<std::size_t>(n), 1));
    for (int k = 1; k <= n && r.ok; ++k) {
      Laurent lhs = distribution(Stat::Inv, alpha, k);
      if (lhs != q_fact(k) * gen_q_stirling(n, k, 1))
        fail(r, spot(alpha, k) + ": a=1 reduction");
      ++r.checked;
    }
  }
  return r;
}

CheckResult verify_main_result(const VerifyOptions& opts) {
  CheckResult r;
  const int W = bound(opts, 7);
  for (const Composition& alpha : compositions_up_to(W)) {
    if (!r.ok) break;
    auto [lhs, rhs] = main_result_sides(alpha);
    if (lhs != rhs) {
      fail(r, "alpha=" + alpha.str() + ": the two sides differ");
      break;
    }
    for (int k = alpha.max_part(); k <= alpha.weight(); ++k) {
      Laurent zslice = lhs.coeff_of("z", alpha.weight() - k);
      if (zslice != distribution(Stat::Maj, alpha, k)) {
        fail(r, spot(alpha, k) + ": z-coefficient is not the maj distribution");
        break;
      }
    }
    ++r.checked;
  }
  return r;
}

CheckResult verify_minimaj_conjecture(const VerifyOptions& opts) {
  CheckResult r;
  const int W = bound(opts, 8);
  for_each_alpha_k(W, -1, [&](const Composition& alpha, int k) {
    if (!r.ok) return;
    if (distribution(Stat::Minimaj, alpha, k) !=
        distribution(Stat::Inv, alpha, k))
      fail(r, spot(alpha, k) + ": minimaj distribution differs");
    ++r.checked;
  });
  if (!r.ok) return r;
  const int NS = std::min(W, 7);
  for (int n = 1; n <= NS && r.ok; ++n) {
    Composition alpha(std::vector<int>(static_cast<std::size_t>(n), 1));
    for (int k = 1; k <= n && r.ok; ++k) {
      std::map<std::vector<int>, std::pair<std::map<long long, long long>,
                                           std::map<long long, long long>>>
          by_shape;
      for_each_osp(alpha, k, [&](const Omp& p) {
        auto& entry = by_shape[shape(p).parts];
        ++entry.first[inv_omp(p)];
        ++entry.second[minimaj_omp(p)];
      });
      for (const auto& [sh, pair] : by_shape) {
        if (pair.first != pair.second) {
          Composition b(sh);
          fail(r, "n=" + std::to_string(n) + " shape=" + b.str() +
                      ": shape-refined identity fails");
          break;
        }
        ++r.checked;
      }
    }
  }
  return r;
}

CheckResult verify_macdonald_symmetry(const VerifyOptions& opts) {
  CheckResult r;
  const int W = bound(opts, 6);
  for (int n = 1; n <= W && r.ok; ++n) {
    for (int m = 0; m < n && r.ok; ++m) {
      Laurent f = hmac_monomial(n, m, n, opts.workers);
      for (int x = 1; x < n; ++x) {
        std::string a = "x" + std::to_string(x), b = "x" + std::to_string(x + 1);
        if (f.with_swapped(a, b) != f) {
          fail(r, "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                      ": not symmetric under " + a + "<->" + b);
          break;
        }
        ++r.checked;
      }
    }
  }
  return r;
}

CheckResult verify_macdonald_schur(const VerifyOptions& opts) {
  CheckResult r;
  const int W = bound(opts, 6);
  for (int n = 1; n <= W && r.ok; ++n) {
    for (int m = 0; m < n && r.ok; ++m) {
      Laurent f = hmac_monomial(n, m, n, opts.workers);
      std::vector<std::pair<Partition, Laurent>> coeffs;
      try {
        coeffs = schur_extract(f, n);
      } catch (const std::exception& e) {
        fail(r, "n=" + std::to_string(n) + " m=" + std::to_string(m) + ": " +
                    e.what());
        break;
      }
      for (const auto& [lam, c] : coeffs) {
        if (c != schur_coeff_theorem(lam, m)) {
          fail(r, "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                      " lambda=" + lam.str() +
                      ": extracted coefficient differs from the tableau formula");
          break;
        }
        Laurent plain = c.at_value("u", 0).at_value("v", 0);
        if (plain.has_negative_exponent() ||
            !plain.all_coefficients_nonnegative()) {
          fail(r, "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                      " lambda=" + lam.str() + ": u=v=0 coefficient not positive");
          break;
        }
        ++r.checked;
      }
    }
  }
  return r;
}

CheckResult verify_hook_swap(const VerifyOptions& opts) {
  CheckResult r;
  const int W = bound(opts, 6);
  for (int n = 1; n <= W && r.ok; ++n) {
    for (int m = 0; m < n && r.ok; ++m) {
      for (const Partition& lam : partitions_of(n)) {
        Laurent lhs = schur_coeff_theorem(lam, m);
        Laurent rhs = schur_coeff_theorem(lam, n - 1 - m)
                          .renamed({{"q", "t"}, {"t", "q"}, {"u", "v"}, {"v", "u"}});
        if (lhs != rhs) {
          fail(r, "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                      " lambda=" + lam.str() + ": hook swap identity fails");
          break;
        }
        ++r.checked;
      }
    }
  }
  return r;
}

CheckResult verify_roundtrips(const VerifyOptions& opts) {
  CheckResult r;
  const int W = bound(opts, 6);
  for_each_alpha_k(W, -1, [&](const Composition& alpha, int k) {
    if (!r.ok || alpha.length() < 2) return;
    const int n = alpha.length();
    for_each_osp(alpha, k, [&](const Omp& rho) {
      if (!r.ok) return;
      PeeledArgs a = phi_inv_inverse(rho, n);
      if (phi_inv(a.base, a.U, a.B, n) != rho)
        fail(r, spot(alpha, k) + ": inv insertion does not restore " + rho.str());
      PeeledArgs d = phi_dinv_inverse(rho, n);
      if (phi_dinv(d.base, d.U, d.B, n) != rho)
        fail(r, spot(alpha, k) + ": dinv insertion does not restore " + rho.str());
      StarredPermutation srho = to_starred(rho);
      PeeledArgsStarred s = phi_maj_inverse(srho, n);
      if (!(phi_maj(s.base, s.U, s.B, n) == srho))
        fail(r, spot(alpha, k) + ": maj insertion does not restore " + rho.str());
      ++r.checked;
    });
  });
  if (!r.ok) return r;
  const int WS = opts.max_weight > 0 ? opts.max_weight : 7;
  for_each_alpha_k(WS, -1, [&](const Composition& alpha, int k) {
    if (!r.ok) return;
    for_each_osp(alpha, k, [&](const Omp& rho) {
      if (!r.ok) return;
      if (from_starred(to_starred(rho)) != rho)
        fail(r, spot(alpha, k) + ": starred round trip fails at " + rho.str());
      ++r.checked;
    });
  });
  return r;
}

std::vector<std::string> verify_suite_names() {
  return {"equidistribution", "insertion-laws",     "psi-bijection",
          "rl-minima",        "recursions",         "stirling",
          "main-result",      "minimaj-conjecture", "macdonald-symmetry",
          "macdonald-schur",  "hook-swap"};
}

CheckResult run_verify_suite(const std::string& name,
                             const VerifyOptions& opts) {
  if (name == "equidistribution") return verify_equidistribution(opts);
  if (name == "insertion-laws") return verify_insertion_laws(opts);
  if (name == "psi-bijection") return verify_psi_bijection(opts);
  if (name == "rl-minima") return verify_rl_minima(opts);
  if (name == "recursions") return verify_recursions(opts);
  if (name == "stirling") return verify_stirling(opts);
  if (name == "main-result") return verify_main_result(opts);
  if (name == "minimaj-conjecture") return verify_minimaj_conjecture(opts);
  if (name == "macdonald-symmetry") return verify_macdonald_symmetry(opts);
  if (name == "macdonald-schur") return verify_macdonald_schur(opts);
  if (name == "hook-swap") return verify_hook_swap(opts);
  throw std::invalid_argument("unknown verify suite: " + name);
}

}  // namespace mahon
