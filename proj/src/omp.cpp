#include "mahon/omp.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mahon {

OrderedMultisetPartition::OrderedMultisetPartition(
    std::vector<std::vector<int>> b)
    : blocks(std::move(b)) {
  for (auto& blk : blocks) {
    if (blk.empty()) throw std::invalid_argument("empty block");
    std::sort(blk.begin(), blk.end());
    for (std::size_t i = 0; i + 1 < blk.size(); ++i)
      if (blk[i] == blk[i + 1])
        throw std::invalid_argument("block contains a repeated letter");
    if (blk.front() < 1)
      throw std::invalid_argument("letters must be positive");
  }
}

int OrderedMultisetPartition::weight() const {
  int w = 0;
  for (const auto& b : blocks) w += static_cast<int>(b.size());
  return w;
}

OrderedMultisetPartition OrderedMultisetPartition::parse(
    const std::string& text) {
  std::vector<std::vector<int>> blocks;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, '|')) {
    if (tok.empty()) throw std::invalid_argument("bad partition: " + text);
    std::vector<int> blk;
    if (tok.find(',') != std::string::npos) {
      std::stringstream bs(tok);
      std::string x;
      while (std::getline(bs, x, ',')) blk.push_back(std::stoi(x));
    } else {
      for (char c : tok) {
        if (c < '1' || c > '9')
          throw std::invalid_argument("bad partition: " + text);
        blk.push_back(c - '0');
      }
    }
    blocks.push_back(std::move(blk));
  }
  return OrderedMultisetPartition(std::move(blocks));
}

std::string OrderedMultisetPartition::str() const {
  bool digits = true;
  for (const auto& b : blocks)
    for (int x : b)
      if (x > 9) digits = false;
  std::string s;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) s += "|";
    for (std::size_t j = 0; j < blocks[i].size(); ++j) {
      if (!digits && j) s += ",";
      s += std::to_string(blocks[i][j]);
    }
  }
  return s;
}

std::vector<int> OrderedMultisetPartition::content() const {
  int mx = 0;
  for (const auto& b : blocks)
    for (int x : b) mx = std::max(mx, x);
  std::vector<int> c(static_cast<std::size_t>(mx), 0);
  for (const auto& b : blocks)
    for (int x : b) ++c[static_cast<std::size_t>(x - 1)];
  return c;
}

StarredPermutation StarredPermutation::parse(const std::string& text) {
  StarredPermutation sp;
  std::stringstream ss(text);
  std::string group;
  while (ss >> group) {
    std::stringstream gs(group);
    std::string x;
    bool first_in_group = true;
    while (std::getline(gs, x, '*')) {
      if (x.empty()) throw std::invalid_argument("bad starred form: " + text);
      if (!first_in_group)
        sp.stars.push_back(static_cast<int>(sp.word.letters.size()));
      Word part = Word::parse(x);
      sp.word.letters.insert(sp.word.letters.end(), part.letters.begin(),
                             part.letters.end());
      first_in_group = false;
    }
  }
  std::vector<int> des = descent_set(sp.word);
  for (int s : sp.stars)
    if (!std::binary_search(des.begin(), des.end(), s))
      throw std::invalid_argument("star not at a descent: " + text);
  return sp;
}

std::string StarredPermutation::str() const {
  std::string s;
  for (int i = 1; i <= word.size(); ++i) {
    s += std::to_string(word.at(i));
    if (i < word.size()) {
      bool starred = std::binary_search(stars.begin(), stars.end(), i);
      s += starred ? "*" : " ";
    }
  }
  return s;
}

StarredPermutation to_starred(const Omp& p) {
  StarredPermutation sp;
  for (const auto& blk : p.blocks) {
    int base = static_cast<int>(sp.word.letters.size());
    for (auto it = blk.rbegin(); it != blk.rend(); ++it)
      sp.word.letters.push_back(*it);
    for (std::size_t j = 1; j < blk.size(); ++j)
      sp.stars.push_back(base + static_cast<int>(j));
  }
  return sp;
}

Omp from_starred(const StarredPermutation& sp) {
  std::vector<int> des = descent_set(sp.word);
  for (int s : sp.stars)
    if (!std::binary_search(des.begin(), des.end(), s))
      throw std::invalid_argument("stars must be a subset of the descents");
  std::vector<std::vector<int>> blocks;
  std::vector<int> cur;
  for (int i = 1; i <= sp.word.size(); ++i) {
    cur.push_back(sp.word.at(i));
    bool starred = std::binary_search(sp.stars.begin(), sp.stars.end(), i);
    if (!starred) {
      blocks.push_back(cur);
      cur.clear();
    }
  }
  return Omp(std::move(blocks));
}

Stat stat_from_name(const std::string& name) {
  if (name == "inv") return Stat::Inv;
  if (name == "maj") return Stat::Maj;
  if (name == "dinv") return Stat::Dinv;
  if (name == "minimaj") return Stat::Minimaj;
  throw std::invalid_argument("unknown statistic: " + name);
}

std::string stat_name(Stat s) {
  switch (s) {
    case Stat::Inv: return "inv";
    case Stat::Maj: return "maj";
    case Stat::Dinv: return "dinv";
    case Stat::Minimaj: return "minimaj";
  }
  throw std::logic_error("unknown statistic");
}

long long inv_omp(const Omp& p) {
  long long c = 0;
  const int k = p.block_count();
  for (int j = 1; j < k; ++j) {
    int b = p.blocks[static_cast<std::size_t>(j)].front();  // block minimum
    for (int i = 0; i < j; ++i)
      for (int a : p.blocks[static_cast<std::size_t>(i)])
        if (a > b) ++c;
  }
  return c;
}

long long dinv_omp(const Omp& p) {
  long long c = 0;
  const int k = p.block_count();
  for (int i = 0; i < k; ++i) {
    const auto& bi = p.blocks[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      const auto& bj = p.blocks[static_cast<std::size_t>(j)];
      for (std::size_t h = 0; h < bi.size(); ++h) {
        if (h < bj.size() && bi[h] > bj[h]) ++c;           // primary
        if (h + 1 < bj.size() && bi[h] < bj[h + 1]) ++c;   // secondary
      }
    }
  }
  return c;
}

long long maj_omp(const Omp& p) {
  std::vector<int> sigma;
  std::vector<char> is_min;
  for (const auto& blk : p.blocks) {
    for (auto it = blk.rbegin(); it != blk.rend(); ++it) {
      sigma.push_back(*it);
      is_min.push_back(*it == blk.front() ? 1 : 0);
    }
  }
  const int n = static_cast<int>(sigma.size());
  std::vector<long long> w(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i)
    w[static_cast<std::size_t>(i)] =
        w[static_cast<std::size_t>(i - 1)] + is_min[static_cast<std::size_t>(i - 1)];
  long long s = 0;
  for (int i = 1; i < n; ++i)
    if (sigma[static_cast<std::size_t>(i - 1)] > sigma[static_cast<std::size_t>(i)])
      s += w[static_cast<std::size_t>(i)];
  return s;
}

long long maj_omp_alt(const StarredPermutation& sp) {
  std::vector<int> des = descent_set(sp.word);
  long long s = 0;
  for (int i : des) s += i;
  for (int star : sp.stars) {
    auto it = std::lower_bound(des.begin(), des.end(), star);
    s -= static_cast<long long>(des.end() - it);
  }
  return s;
}

Word minimaj_word(const Omp& p) {
  const int k = p.block_count();
  std::vector<std::vector<int>> written(static_cast<std::size_t>(k));
  for (int i = k - 1; i >= 0; --i) {
    const auto& blk = p.blocks[static_cast<std::size_t>(i)];
    std::vector<int> order(blk);  // increasing
    if (i < k - 1) {
      int next_leftmost = written[static_cast<std::size_t>(i + 1)].front();
      // largest element <= the recorded leftmost letter of the next block
      int r = 0;
      bool found = false;
      for (int x : blk)
        if (x <= next_leftmost) {
          r = x;
          found = true;
        }
      if (found) {
        auto pos = std::find(order.begin(), order.end(), r);
        std::rotate(order.begin(), pos + 1, order.end());
      }
    }
    written[static_cast<std::size_t>(i)] = std::move(order);
  }
  std::vector<int> letters;
  for (const auto& part : written)
    letters.insert(letters.end(), part.begin(), part.end());
  return Word(std::move(letters));
}

long long minimaj_omp(const Omp& p) { return maj(minimaj_word(p)); }

long long omp_stat(Stat s, const Omp& p) {
  switch (s) {
    case Stat::Inv: return inv_omp(p);
    case Stat::Maj: return maj_omp(p);
    case Stat::Dinv: return dinv_omp(p);
    case Stat::Minimaj: return minimaj_omp(p);
  }
  throw std::logic_error("unknown statistic");
}

Composition shape(const Omp& p) {
  std::vector<int> parts;
  for (const auto& b : p.blocks) parts.push_back(static_cast<int>(b.size()));
  return Composition(std::move(parts));
}

std::vector<Omp> all_osp(const Composition& alpha, int k) {
  std::vector<Omp> out;
  for_each_osp(alpha, k, [&](const Omp& p) { out.push_back(p); });
  return out;
}

long long count_osp(const Composition& alpha, int k) {
  long long c = 0;
  for_each_starred(alpha, k, [&](const StarredPermutation&) { ++c; });
  return c;
}

}  // namespace mahon
