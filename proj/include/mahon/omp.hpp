#pragma once

#include <string>
#include <vector>

#include "mahon/words.hpp"

namespace mahon {

// Ordered multiset partition: an ordered list of nonempty finite sets of
// positive integers. Blocks are stored sorted increasing; the display form
// writes each block increasing with "|" between blocks ("24|134|2").
struct OrderedMultisetPartition {
  std::vector<std::vector<int>> blocks;

  OrderedMultisetPartition() = default;
  explicit OrderedMultisetPartition(std::vector<std::vector<int>> b);

  int block_count() const { return static_cast<int>(blocks.size()); }
  int weight() const;

  static OrderedMultisetPartition parse(const std::string& text);
  std::string str() const;

  // Letter multiplicities 1..max letter.
  std::vector<int> content() const;

  bool operator==(const OrderedMultisetPartition& o) const {
    return blocks == o.blocks;
  }
  bool operator!=(const OrderedMultisetPartition& o) const {
    return blocks != o.blocks;
  }
  bool operator<(const OrderedMultisetPartition& o) const {
    return blocks < o.blocks;
  }
};

using Omp = OrderedMultisetPartition;

// Descent-starred permutation: a word together with a subset of its descent
// positions. A maximal starred run is a strictly decreasing run of the word
// and corresponds to one block ("4*2 4*3*1 2" <-> "24|134|2").
struct StarredPermutation {
  Word word;
  std::vector<int> stars;  // sorted positions, subset of descent_set(word)

  static StarredPermutation parse(const std::string& text);
  std::string str() const;

  int block_count() const {
    return word.size() - static_cast<int>(stars.size());
  }

  bool operator==(const StarredPermutation& o) const {
    return word == o.word && stars == o.stars;
  }
  bool operator<(const StarredPermutation& o) const {
    if (word != o.word) return word < o.word;
    return stars < o.stars;
  }
};

StarredPermutation to_starred(const Omp& p);
// Throws std::invalid_argument when stars are not a subset of the descents.
Omp from_starred(const StarredPermutation& sp);

enum class Stat { Inv, Maj, Dinv, Minimaj };
Stat stat_from_name(const std::string& name);
std::string stat_name(Stat s);

// inv: pairs a > b with a in a strictly earlier block than b and b minimal in
// its block, counted with multiplicity across blocks.
long long inv_omp(const Omp& p);

// dinv: primary triples (h,i,j), i<j, p_i^h > p_j^h plus secondary triples
// (h,i,j), i<j, p_i^h < p_j^{h+1}, where p_i^h is the h-th smallest element of
// block i and a triple counts only when both referenced heights exist.
long long dinv_omp(const Omp& p);

// maj, word-weight implementation: sigma = blocks written in decreasing order,
// w_0 = 0, w_i = w_{i-1} + [sigma_i minimal in its block]; the value is the
// sum of w_i over descents i of sigma.
long long maj_omp(const Omp& p);
// maj, alternate implementation on the starred form:
// maj(sigma) - sum_{i in S} |Des(sigma) with positions >= i|.
long long maj_omp_alt(const StarredPermutation& sp);

// minimaj: major index of the canonical block reading word, built right to
// left (last block increasing; each earlier block cyclically rotated so that
// the largest element <= the recorded leftmost letter of the next block sits
// rightmost, or increasing when there is none).
Word minimaj_word(const Omp& p);
long long minimaj_omp(const Omp& p);

long long omp_stat(Stat s, const Omp& p);
Composition shape(const Omp& p);

// All of osp(alpha, k) in canonical order (lexicographic on the starred form:
// word first, then star set). Yields nothing when k is out of range.
template <class F>
void for_each_starred(const Composition& alpha, int k, F&& f) {
  const int n = alpha.weight();
  if (k < alpha.max_part() || k > n) return;
  const int s = n - k;
  for_each_word(alpha, [&](const Word& w) {
    std::vector<int> des = descent_set(w);
    const int d = static_cast<int>(des.size());
    if (d < s) return;
    StarredPermutation sp;
    sp.word = w;
    std::vector<int> idx(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
      sp.stars.clear();
      for (int i : idx) sp.stars.push_back(des[static_cast<std::size_t>(i)]);
      f(static_cast<const StarredPermutation&>(sp));
      // next size-s combination of [0, d) in lexicographic order
      int i = s - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == d - s + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < s; ++j)
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  });
}

template <class F>
void for_each_osp(const Composition& alpha, int k, F&& f) {
  for_each_starred(alpha, k, [&](const StarredPermutation& sp) {
    f(from_starred(sp));
  });
}

std::vector<Omp> all_osp(const Composition& alpha, int k);
long long count_osp(const Composition& alpha, int k);

}  // namespace mahon
