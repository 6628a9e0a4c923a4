#pragma once

#include <set>
#include <string>
#include <vector>

#include "mahon/omp.hpp"

namespace mahon {

// Labels assigned to the gaps of a word (gap g sits between letters g and
// g+1; gap 0 is the front, gap N the right end). A value of -1 marks a gap
// with no label (a starred gap, or one past the labeling cap).
struct LabelReport {
  std::vector<int> label_of_gap;

  int gap_with_label(int label) const;  // -1 when absent
  std::string render(const Word& w) const;
};

// Major-index insertion labels: right end -> 0, unstarred descents right to
// left, front, then remaining unstarred gaps left to right. Labels stop after
// `cap` when given.
LabelReport maj_labels_starred(const StarredPermutation& sp, int cap = -1);
LabelReport maj_labels_word(const Word& w, int cap = -1);

// Insert copies of the letter n (strictly larger than every letter of w) at
// the labeled gaps given by the multiset B, largest first, relabeling capped
// at the label just used; maj grows by the sum of B.
Word insert_maj_word(const Word& w, std::vector<int> B, int n);

// Inserting all copies of a new largest letter n into a smaller structure.
// U gives the increases obtained by joining an existing block, B the
// increases obtained by creating a new singleton block {n}.
struct PeeledArgs {
  int ell = 0;  // block count of the base
  Omp base;
  std::set<int> U;
  std::vector<int> B;  // multiset, kept sorted increasing
};

struct PeeledArgsStarred {
  int ell = 0;
  StarredPermutation base;
  std::set<int> U;
  std::vector<int> B;
};

// inv insertion: blocks labeled right to left 0..ell-1; u in U puts n into
// the block labeled u; b in B creates a singleton {n} with exactly b labeled
// blocks to its right (b = ell is the far left). inv grows by sum(U)+sum(B).
Omp phi_inv(const Omp& base, const std::set<int>& U, const std::vector<int>& B,
            int n);
PeeledArgs phi_inv_inverse(const Omp& rho, int n);

// maj insertion on the starred form; maj grows by sum(U)+sum(B).
StarredPermutation phi_maj(const StarredPermutation& base,
                           const std::set<int>& U, const std::vector<int>& B,
                           int n);
PeeledArgsStarred phi_maj_inverse(const StarredPermutation& rho, int n);

// dinv insertion: gap labels 0..ell right to left; block labels assigned in
// order of decreasing block size, ties left to right. dinv grows by
// sum(U)+sum(B).
Omp phi_dinv(const Omp& base, const std::set<int>& U,
             const std::vector<int>& B, int n);
PeeledArgs phi_dinv_inverse(const Omp& rho, int n);

// Block labels used by the dinv insertion, reported in block order.
std::vector<int> dinv_block_labels(const Omp& p);
std::string render_block_labels(const Omp& p);

// Statistic-transporting bijection on osp(alpha, k): peel the largest letter
// with the inverse insertion map of `from`, recurse, reinsert with the map of
// `to`. Satisfies stat_to(psi(rho)) = stat_from(rho).
struct PsiTraceRow {
  int n = 0;
  int ell = 0;
  std::set<int> U;
  std::vector<int> B;
  std::string peeled;  // intermediate partition after peeling n
};

Omp psi(const Composition& alpha, int k, const Omp& rho, Stat from, Stat to,
        std::vector<PsiTraceRow>* trace = nullptr);

struct RlMinimaReport {
  bool ok = true;
  long long checked = 0;
  std::string counterexample;
};

// For every element of osp(alpha, k), the starred words of rho and of
// psi(rho) (inv -> maj) must have identical right-to-left-minima letter
// sequences.
RlMinimaReport check_rl_minima(const Composition& alpha, int k);

}  // namespace mahon
