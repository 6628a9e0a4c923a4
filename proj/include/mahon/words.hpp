#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "mahon/laurent.hpp"

namespace mahon {

// Composition alpha = (a_1, ..., a_n), every part >= 1. The letter i appears
// a_i times in the words of the associated multiset.
struct Composition {
  std::vector<int> parts;

  Composition() = default;
  explicit Composition(std::vector<int> p);

  int length() const { return static_cast<int>(parts.size()); }
  int weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  int max_part() const { return *std::max_element(parts.begin(), parts.end()); }
  Composition minus_last() const;

  static Composition parse(const std::string& text);  // "1,2,1,3"
  std::string str() const;

  bool operator==(const Composition& o) const { return parts == o.parts; }
  bool operator!=(const Composition& o) const { return parts != o.parts; }
};

// A word is a finite sequence of positive integers in one-line notation.
// All positions in this API are 1-based.
struct Word {
  std::vector<int> letters;

  Word() = default;
  explicit Word(std::vector<int> l) : letters(std::move(l)) {}

  int size() const { return static_cast<int>(letters.size()); }
  int at(int pos) const { return letters[static_cast<std::size_t>(pos - 1)]; }

  // "52143" when all letters are single digits, "11,3,2" otherwise.
  static Word parse(const std::string& text);
  std::string str() const;

  bool operator==(const Word& o) const { return letters == o.letters; }
  bool operator!=(const Word& o) const { return letters != o.letters; }
  bool operator<(const Word& o) const { return letters < o.letters; }
};

// Descents {i : w_i > w_{i+1}} and ascents {i : w_i < w_{i+1}}; equal
// neighbours belong to neither set.
std::vector<int> descent_set(const Word& w);
std::vector<int> ascent_set(const Word& w);

long long inv(const Word& w);
long long inv_from(const Word& w, int i);  // inversions (i, j), j > i
long long inv_to(const Word& w, int j);    // inversions (i, j), i < j
long long maj(const Word& w);
long long rlmaj(const Word& w);

enum class WordStat { Inv, Maj, Rlmaj, Des, Asc };
long long word_stat(WordStat s, const Word& w);

Word subword(const Word& w, int a, int b);  // inclusive 1-based range
// stat applied to w_a ... w_b with positions renumbered from 1.
long long restricted_stat(WordStat s, const Word& w, int a, int b);

// Right-to-left minima: positions i with w_i < w_j for all j > i. The last
// position always qualifies.
std::vector<int> rl_minima(const Word& w);
std::vector<int> rl_minima_letters(const Word& w);

// Letter multiplicities 1..max; entries may be zero for general words.
std::vector<int> content_of(const Word& w);
bool has_content(const Word& w, const Composition& alpha);

// Every permutation of the multiset {i^{a_i}} exactly once, lexicographically.
template <class F>
void for_each_word(const Composition& alpha, F&& f) {
  std::vector<int> letters;
  for (int i = 0; i < alpha.length(); ++i)
    letters.insert(letters.end(), static_cast<std::size_t>(alpha.parts[i]),
                   i + 1);
  Word w(std::move(letters));
  do {
    f(static_cast<const Word&>(w));
  } while (std::next_permutation(w.letters.begin(), w.letters.end()));
}

std::vector<Word> all_words(const Composition& alpha);
Int count_words(const Composition& alpha);  // |alpha|! / prod a_i!

}  // namespace mahon
