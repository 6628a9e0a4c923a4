#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mahon/laurent.hpp"
#include "mahon/words.hpp"

namespace mahon {

struct Partition {
  std::vector<int> parts;  // weakly decreasing, every part >= 1

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int weight() const;
  int length() const { return static_cast<int>(parts.size()); }
  std::string str() const;  // "[3,1,1]"

  bool operator==(const Partition& o) const { return parts == o.parts; }
  bool operator<(const Partition& o) const { return parts < o.parts; }
};

// All partitions of n in decreasing lexicographic order (a linear extension
// of dominance, largest first).
std::vector<Partition> partitions_of(int n);

// Young tableau in French convention: rows[0] is the bottom (longest) row,
// rows weakly increase rightward, columns strictly increase upward.
struct Tableau {
  std::vector<std::vector<int>> rows;

  Partition shape() const;
  int size() const;
};

std::vector<Tableau> enumerate_syt(const Partition& shape);

// Descents of a standard tableau: i such that i+1 sits in a strictly higher
// row than i.
std::vector<int> tableau_descents(const Tableau& t);
long long tableau_maj(const Tableau& t);
long long tableau_rlmaj(const Tableau& t);
// Restricted forms summing only over descents in [1,m] resp. [m+1,n].
long long tableau_maj_column(const Tableau& t, int m);
long long tableau_rlmaj_row(const Tableau& t, int m);

// Number of semistandard tableaux of the given shape and content.
long long kostka(const Partition& shape, const std::vector<int>& content);

// Schur polynomial s_shape(x_1..x_N).
Laurent schur_polynomial(const Partition& shape, int N);

// Weight of one word in the four-parameter hook sum (without the x-part):
// with row statistics on the subword sigma_{m+1}..sigma_n and column
// descents the full-word descents at positions <= m,
//   q^{inv(row)} t^{sum of column descents}
//   * prod over row descents (1 + u q^{-(inv_to(row, i) + 1)})
//   * prod_{j=1..#column descents} (1 + v t^{-j}).
Laurent hook_word_weight(const Word& w, int m);

// The four-parameter hook polynomial in N variables: the sum of
// x^sigma * hook_word_weight(sigma, m) over all words sigma in [1,N]^n.
Laurent hmac_monomial(int n, int m, int N, int workers = 1);

// Schur coefficient of the hook polynomial by the tableau formula:
//   sum over SYT(shape) of q^{rlmaj restricted to (m, n]} t^{maj restricted
//   to [1, m]} * prod_{i=1..#row descents} (1 + u q^{-i})
//   * prod_{j=1..#column descents} (1 + v t^{-j}).
Laurent schur_coeff_theorem(const Partition& shape, int m);

// Expand a symmetric polynomial of homogeneous x-degree n into Schur
// coefficients by triangular elimination against Kostka numbers; verifies
// symmetry first and that the expansion reconstructs the input exactly.
std::vector<std::pair<Partition, Laurent>> schur_extract(const Laurent& f,
                                                         int N);

// Descent-set-preserving swap of the multiplicities of r and r+1: pair
// adjacent (r+1, r) occurrences within the subsequence of letters {r, r+1},
// iterate to fixpoint, then replace each unpaired r by r+1 and vice versa.
Word r_pairing(const Word& w, int r);

}  // namespace mahon
