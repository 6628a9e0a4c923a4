#include "mahon/insertion.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mahon {

namespace {

int max_letter(const Word& w) {
  int m = 0;
  for (int x : w.letters) m = std::max(m, x);
  return m;
}

int max_letter(const Omp& p) {
  int m = 0;
  for (const auto& b : p.blocks) m = std::max(m, b.back());
  return m;
}

void check_new_letter(int base_max, int n) {
  if (n <= base_max)
    throw std::invalid_argument(
        "inserted letter must exceed every existing letter");
}

void check_arg_sets(const std::set<int>& U, const std::vector<int>& B,
                    int ell) {
  for (int u : U)
    if (u < 0 || u > ell - 1)
      throw std::invalid_argument("U element out of [0, ell-1]");
  for (int b : B)
    if (b < 0 || b > ell)
      throw std::invalid_argument("B element out of [0, ell]");
}

// (value, from_U) items in processing order.
std::vector<std::pair<int, bool>> insertion_order(const std::set<int>& U,
                                                  const std::vector<int>& B,
                                                  bool u_first_on_tie,
                                                  bool bump_u) {
  std::vector<std::pair<int, bool>> items;
  for (int u : U) items.emplace_back(bump_u ? u + 1 : u, true);
  for (int b : B) items.emplace_back(b, false);
  std::stable_sort(items.begin(), items.end(),
                   [&](const auto& a, const auto& b2) {
                     if (a.first != b2.first) return a.first > b2.first;
                     if (a.second != b2.second)
                       return a.second == u_first_on_tie;
                     return false;
                   });
  return items;
}

}  // namespace

int LabelReport::gap_with_label(int label) const {
  for (std::size_t g = 0; g < label_of_gap.size(); ++g)
    if (label_of_gap[g] == label) return static_cast<int>(g);
  return -1;
}

std::string LabelReport::render(const Word& w) const {
  std::ostringstream os;
  for (int g = 0; g <= w.size(); ++g) {
    int lab = label_of_gap[static_cast<std::size_t>(g)];
    if (lab >= 0) os << "_" << lab;
    if (g < w.size()) {
      if (lab >= 0) os << " ";
      os << w.at(g + 1);
      os << " ";
    }
  }
  std::string s = os.str();
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

LabelReport maj_labels_starred(const StarredPermutation& sp, int cap) {
  const int n = sp.word.size();
  LabelReport rep;
  rep.label_of_gap.assign(static_cast<std::size_t>(n) + 1, -1);
  if (cap < 0) cap = n + 1;
  std::vector<int> des = descent_set(sp.word);
  auto starred = [&](int g) {
    return std::binary_search(sp.stars.begin(), sp.stars.end(), g);
  };
  int next = 0;
  auto assign = [&](int gap) {
    if (next > cap) return false;
    rep.label_of_gap[static_cast<std::size_t>(gap)] = next++;
    return true;
  };
  if (!assign(n)) return rep;
  for (auto it = des.rbegin(); it != des.rend(); ++it)
    if (!starred(*it) && !assign(*it)) return rep;
  if (!assign(0)) return rep;
  for (int g = 1; g < n; ++g) {
    bool is_des = std::binary_search(des.begin(), des.end(), g);
    if (!is_des && !starred(g) && !assign(g)) return rep;
  }
  return rep;
}

LabelReport maj_labels_word(const Word& w, int cap) {
  StarredPermutation sp;
  sp.word = w;
  return maj_labels_starred(sp, cap);
}

Word insert_maj_word(const Word& w, std::vector<int> B, int n) {
  check_new_letter(max_letter(w), n);
  std::sort(B.rbegin(), B.rend());
  Word cur = w;
  int cap = -1;  // unbounded for the first insertion
  for (int b : B) {
    LabelReport labels = maj_labels_word(cur, cap);
    int gap = labels.gap_with_label(b);
    if (gap < 0)
      throw std::invalid_argument("insertion label exceeds the allowed cap");
    cur.letters.insert(cur.letters.begin() + gap, n);
    cap = b;
  }
  return cur;
}

// ---------------------------------------------------------------------------
// inv insertion

Omp phi_inv(const Omp& base, const std::set<int>& U, const std::vector<int>& B,
            int n) {
  const int ell = base.block_count();
  check_new_letter(max_letter(base), n);
  check_arg_sets(U, B, ell);
  // working blocks tagged with the original right-to-left label, -1 for new
  std::vector<std::pair<std::vector<int>, int>> cur;
  for (int i = 0; i < ell; ++i)
    cur.emplace_back(base.blocks[static_cast<std::size_t>(i)], ell - 1 - i);
  auto find_label = [&](int lab) {
    for (std::size_t i = 0; i < cur.size(); ++i)
      if (cur[i].second == lab) return static_cast<int>(i);
    throw std::logic_error("labeled block not found");
  };
  for (auto [val, from_u] : insertion_order(U, B, /*u_first_on_tie=*/true,
                                            /*bump_u=*/false)) {
    if (from_u) {
      cur[static_cast<std::size_t>(find_label(val))].first.push_back(n);
    } else if (val == ell) {
      cur.insert(cur.begin(), {std::vector<int>{n}, -1});
    } else {
      int at = find_label(val);
      cur.insert(cur.begin() + at + 1, {std::vector<int>{n}, -1});
    }
  }
  std::vector<std::vector<int>> blocks;
  for (auto& [blk, lab] : cur) blocks.push_back(std::move(blk));
  return Omp(std::move(blocks));
}

PeeledArgs phi_inv_inverse(const Omp& rho, int n) {
  PeeledArgs out;
  std::vector<std::vector<int>> base_blocks;
  // originals = blocks that are not the singleton {n}
  std::vector<bool> original;
  for (const auto& blk : rho.blocks)
    original.push_back(!(blk.size() == 1 && blk[0] == n));
  int originals_right = 0;
  for (int i = rho.block_count() - 1; i >= 0; --i) {
    const auto& blk = rho.blocks[static_cast<std::size_t>(i)];
    if (!original[static_cast<std::size_t>(i)]) {
      out.B.push_back(originals_right);
      continue;
    }
    if (blk.back() == n) {
      if (!out.U.insert(originals_right).second)
        throw std::invalid_argument("two joined n blocks share a label");
      std::vector<int> stripped(blk.begin(), blk.end() - 1);
      if (stripped.empty())
        throw std::invalid_argument("unexpected singleton");
      base_blocks.push_back(std::move(stripped));
    } else {
      base_blocks.push_back(blk);
    }
    ++originals_right;
  }
  std::reverse(base_blocks.begin(), base_blocks.end());
  std::sort(out.B.begin(), out.B.end());
  out.base = Omp(std::move(base_blocks));
  out.ell = out.base.block_count();
  return out;
}

// ---------------------------------------------------------------------------
// maj insertion

namespace {

// Move each star strictly right of position p one descent to the left.
void shift_stars_left(StarredPermutation& sp, int p) {
  std::vector<int> des = descent_set(sp.word);
  for (int& s : sp.stars) {
    if (s <= p) continue;
    auto it = std::lower_bound(des.begin(), des.end(), s);
    if (it == des.begin())
      throw std::invalid_argument("no descent available left of a star");
    s = *(it - 1);
  }
  std::sort(sp.stars.begin(), sp.stars.end());
  if (std::adjacent_find(sp.stars.begin(), sp.stars.end()) != sp.stars.end())
    throw std::invalid_argument("star collision while shifting left");
}

// Move each star weakly right of position p one descent to the right.
void shift_stars_right(StarredPermutation& sp, int p) {
  std::vector<int> des = descent_set(sp.word);
  for (int& s : sp.stars) {
    if (s < p) continue;
    auto it = std::upper_bound(des.begin(), des.end(), s);
    if (it == des.end())
      throw std::invalid_argument("no descent available right of a star");
    s = *it;
  }
  std::sort(sp.stars.begin(), sp.stars.end());
  if (std::adjacent_find(sp.stars.begin(), sp.stars.end()) != sp.stars.end())
    throw std::invalid_argument("star collision while shifting right");
}

}  // namespace

StarredPermutation phi_maj(const StarredPermutation& base,
                           const std::set<int>& U, const std::vector<int>& B,
                           int n) {
  const int ell = base.block_count();
  check_new_letter(max_letter(base.word), n);
  check_arg_sets(U, B, ell);
  StarredPermutation cur = base;
  int cap = -1;
  for (auto [val, from_u] : insertion_order(U, B, /*u_first_on_tie=*/false,
                                            /*bump_u=*/true)) {
    LabelReport labels = maj_labels_starred(cur, cap);
    int gap = labels.gap_with_label(val);
    if (gap < 0)
      throw std::invalid_argument("insertion label exceeds the allowed cap");
    cur.word.letters.insert(cur.word.letters.begin() + gap, n);
    const int p = gap + 1;  // position of the new n
    for (int& s : cur.stars)
      if (s >= p) ++s;
    shift_stars_left(cur, p);
    if (from_u) {
      std::vector<int> des = descent_set(cur.word);
      if (des.empty())
        throw std::invalid_argument("no rightmost descent to star");
      int d = des.back();
      if (std::binary_search(cur.stars.begin(), cur.stars.end(), d))
        throw std::invalid_argument("rightmost descent already starred");
      cur.stars.insert(
          std::upper_bound(cur.stars.begin(), cur.stars.end(), d), d);
    }
    cap = from_u ? val - 1 : val;
  }
  return cur;
}

PeeledArgsStarred phi_maj_inverse(const StarredPermutation& rho, int n) {
  PeeledArgsStarred out;
  StarredPermutation cur = rho;
  while (std::find(cur.word.letters.begin(), cur.word.letters.end(), n) !=
         cur.word.letters.end()) {
    const long long before = maj_omp_alt(cur);
    std::vector<int> des = descent_set(cur.word);
    bool from_u = false;
    if (!des.empty() && !cur.stars.empty() && cur.stars.back() == des.back()) {
      cur.stars.pop_back();
      from_u = true;
    }
    // rightmost n at the right end, or with left neighbour > right neighbour;
    // otherwise the leftmost n
    int p = -1;
    for (int i = cur.word.size(); i >= 1; --i) {
      if (cur.word.at(i) != n) continue;
      if (i == cur.word.size() ||
          (i > 1 && cur.word.at(i - 1) > cur.word.at(i + 1))) {
        p = i;
        break;
      }
    }
    if (p < 0) {
      for (int i = 1; i <= cur.word.size(); ++i)
        if (cur.word.at(i) == n) {
          p = i;
          break;
        }
    }
    shift_stars_right(cur, p);
    cur.word.letters.erase(cur.word.letters.begin() + (p - 1));
    for (int& s : cur.stars)
      if (s > p) --s;
    const long long delta = before - maj_omp_alt(cur);
    if (delta < 0) throw std::invalid_argument("negative label while peeling");
    if (from_u) {
      if (!out.U.insert(static_cast<int>(delta)).second)
        throw std::invalid_argument("repeated U label while peeling");
    } else {
      out.B.push_back(static_cast<int>(delta));
    }
  }
  std::sort(out.B.begin(), out.B.end());
  out.base = cur;
  out.ell = cur.block_count();
  check_arg_sets(out.U, out.B, out.ell);
  return out;
}

// ---------------------------------------------------------------------------
// dinv insertion

std::vector<int> dinv_block_labels(const Omp& p) {
  const int k = p.block_count();
  std::vector<int> order(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) order[static_cast<std::size_t>(i)] = i;
  // decreasing block size, ties left to right
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return p.blocks[static_cast<std::size_t>(a)].size() >
           p.blocks[static_cast<std::size_t>(b)].size();
  });
  std::vector<int> labels(static_cast<std::size_t>(k));
  for (int lab = 0; lab < k; ++lab)
    labels[static_cast<std::size_t>(order[static_cast<std::size_t>(lab)])] = lab;
  return labels;
}

std::string render_block_labels(const Omp& p) {
  std::vector<int> labels = dinv_block_labels(p);
  std::string s;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) s += "|";
    s += std::to_string(labels[i]);
  }
  return s;
}

Omp phi_dinv(const Omp& base, const std::set<int>& U,
             const std::vector<int>& B, int n) {
  const int ell = base.block_count();
  check_new_letter(max_letter(base), n);
  check_arg_sets(U, B, ell);
  std::vector<int> labels = dinv_block_labels(base);
  std::vector<std::vector<int>> joined = base.blocks;
  for (int u : U) {
    auto it = std::find(labels.begin(), labels.end(), u);
    joined[static_cast<std::size_t>(it - labels.begin())].push_back(n);
  }
  // gap label b has exactly b original blocks to its right
  std::vector<std::vector<int>> blocks;
  std::vector<int> singles = B;
  std::sort(singles.rbegin(), singles.rend());
  std::size_t si = 0;
  for (int pos = 0; pos <= ell; ++pos) {
    const int gap_label = ell - pos;
    while (si < singles.size() && singles[si] == gap_label) {
      blocks.push_back({n});
      ++si;
    }
    if (pos < ell) blocks.push_back(joined[static_cast<std::size_t>(pos)]);
  }
  return Omp(std::move(blocks));
}

PeeledArgs phi_dinv_inverse(const Omp& rho, int n) {
  PeeledArgs out;
  std::vector<std::vector<int>> base_blocks;
  std::vector<int> joined_positions;  // base block indices that held an n
  int originals_right = 0;
  std::vector<bool> original;
  for (const auto& blk : rho.blocks)
    original.push_back(!(blk.size() == 1 && blk[0] == n));
  for (int i = rho.block_count() - 1; i >= 0; --i) {
    const auto& blk = rho.blocks[static_cast<std::size_t>(i)];
    if (!original[static_cast<std::size_t>(i)]) {
      out.B.push_back(originals_right);
      continue;
    }
    if (blk.back() == n) {
      std::vector<int> stripped(blk.begin(), blk.end() - 1);
      if (stripped.empty())
        throw std::invalid_argument("unexpected singleton");
      base_blocks.push_back(std::move(stripped));
      joined_positions.push_back(originals_right);
    } else {
      base_blocks.push_back(blk);
    }
    ++originals_right;
  }
  std::reverse(base_blocks.begin(), base_blocks.end());
  std::sort(out.B.begin(), out.B.end());
  out.base = Omp(std::move(base_blocks));
  out.ell = out.base.block_count();
  std::vector<int> labels = dinv_block_labels(out.base);
  for (int pos_from_right : joined_positions) {
    int idx = out.ell - 1 - pos_from_right;
    if (!out.U.insert(labels[static_cast<std::size_t>(idx)]).second)
      throw std::invalid_argument("repeated U label while peeling");
  }
  return out;
}

// ---------------------------------------------------------------------------
// the bijection

namespace {

PeeledArgs peel(Stat from, const Omp& rho, int n) {
  switch (from) {
    case Stat::Inv:
      return phi_inv_inverse(rho, n);
    case Stat::Dinv:
      return phi_dinv_inverse(rho, n);
    case Stat::Maj: {
      PeeledArgsStarred st = phi_maj_inverse(to_starred(rho), n);
      PeeledArgs out;
      out.ell = st.ell;
      out.base = from_starred(st.base);
      out.U = std::move(st.U);
      out.B = std::move(st.B);
      return out;
    }
    default:
      throw std::invalid_argument("no insertion map for this statistic");
  }
}

Omp reinsert(Stat to, const Omp& base, const std::set<int>& U,
             const std::vector<int>& B, int n) {
  switch (to) {
    case Stat::Inv:
      return phi_inv(base, U, B, n);
    case Stat::Dinv:
      return phi_dinv(base, U, B, n);
    case Stat::Maj:
      return from_starred(phi_maj(to_starred(base), U, B, n));
    default:
      throw std::invalid_argument("no insertion map for this statistic");
  }
}

}  // namespace

Omp psi(const Composition& alpha, int k, const Omp& rho, Stat from, Stat to,
        std::vector<PsiTraceRow>* trace) {
  if (from == Stat::Minimaj || to == Stat::Minimaj)
    throw std::invalid_argument("no insertion map exists for minimaj");
  if (rho.content() != alpha.parts)
    throw std::invalid_argument("partition content does not match alpha");
  if (rho.block_count() != k)
    throw std::invalid_argument("partition block count does not match k");
  if (alpha.length() == 1) return rho;
  const int n = alpha.length();
  PeeledArgs args = peel(from, rho, n);
  if (trace) {
    PsiTraceRow row;
    row.n = n;
    row.ell = args.ell;
    row.U = args.U;
    row.B = args.B;
    row.peeled = args.base.str();
    trace->push_back(row);
  }
  Omp inner = psi(alpha.minus_last(), args.ell, args.base, from, to, trace);
  return reinsert(to, inner, args.U, args.B, n);
}

RlMinimaReport check_rl_minima(const Composition& alpha, int k) {
  RlMinimaReport rep;
  for_each_osp(alpha, k, [&](const Omp& rho) {
    if (!rep.ok) return;
    Omp image = psi(alpha, k, rho, Stat::Inv, Stat::Maj);
    Word a = to_starred(rho).word;
    Word b = to_starred(image).word;
    if (rl_minima_letters(a) != rl_minima_letters(b)) {
      rep.ok = false;
      rep.counterexample = rho.str() + " -> " + image.str();
      return;
    }
    ++rep.checked;
  });
  return rep;
}

}  // namespace mahon
