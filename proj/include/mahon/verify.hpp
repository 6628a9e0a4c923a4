#pragma once

#include <string>
#include <vector>

#include "mahon/words.hpp"

namespace mahon {

struct CheckResult {
  bool ok = true;
  long long checked = 0;
  std::string detail;  // first counterexample when not ok
};

struct VerifyOptions {
  int max_weight = -1;  // -1 selects the suite default
  int workers = 1;
};

// All compositions of weight 1..max_weight; max_parts < 0 means unbounded.
std::vector<Composition> compositions_up_to(int max_weight, int max_parts = -1);

// inv, maj and dinv are equidistributed over osp(alpha, k); weight <= 8 with
// at most 4 parts by default.
CheckResult verify_equidistribution(const VerifyOptions& opts = {});
// The three insertion maps raise their statistic by sum(U) + sum(B) and
// invert exactly on the argument side; weight <= 6.
CheckResult verify_insertion_laws(const VerifyOptions& opts = {});
// psi is a bijection transporting inv to maj (and the dinv variants
// transport likewise); weight <= 7.
CheckResult verify_psi_bijection(const VerifyOptions& opts = {});
// psi preserves right-to-left minima letter sequences; weight <= 7.
CheckResult verify_rl_minima(const VerifyOptions& opts = {});
// Both recursion forms agree with each other and with enumeration, and the
// k = |alpha| case equals the q-multinomial; weight <= 8.
CheckResult verify_recursions(const VerifyOptions& opts = {});
// The generalized q-Stirling identity at alpha = a^n (a <= 3, n <= 3) and its
// a = 1 reduction (n <= 7).
CheckResult verify_stirling(const VerifyOptions& opts = {});
// The two-variable maj/inv identity and its z-coefficients; weight <= 7.
CheckResult verify_main_result(const VerifyOptions& opts = {});
// minimaj matches the common distribution (weight <= 8) and the
// shape-refined identity over ordered set partitions (n <= 7).
CheckResult verify_minimaj_conjecture(const VerifyOptions& opts = {});
// The hook polynomial is symmetric in the x variables; n <= 6.
CheckResult verify_macdonald_symmetry(const VerifyOptions& opts = {});
// Schur extraction of the hook polynomial matches the tableau formula and is
// positive at u = v = 0; n <= 6.
CheckResult verify_macdonald_schur(const VerifyOptions& opts = {});
// Schur coefficients swap under (q,t,u,v) -> (t,q,v,u) together with the
// conjugate hook parameter; n <= 6.
CheckResult verify_hook_swap(const VerifyOptions& opts = {});

// phi inverses invert their insertions on every element (weight <= 6) and
// the starred representation round-trips (weight <= 7).
CheckResult verify_roundtrips(const VerifyOptions& opts = {});

// The CLI-facing registry: the eleven named suites.
std::vector<std::string> verify_suite_names();
CheckResult run_verify_suite(const std::string& name,
                             const VerifyOptions& opts = {});

}  // namespace mahon
