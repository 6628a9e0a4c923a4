#include "mahon/macdonald.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <thread>

namespace mahon {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw std::invalid_argument("partition parts must be >= 1");
    if (i && parts[i] > parts[i - 1])
      throw std::invalid_argument("partition parts must weakly decrease");
  }
}

int Partition::weight() const {
  int w = 0;
  for (int p : parts) w += p;
  return w;
}

std::string Partition::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + "]";
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Partition Tableau::shape() const {
  std::vector<int> parts;
  for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
  return Partition(std::move(parts));
}

int Tableau::size() const {
  int n = 0;
  for (const auto& r : rows) n += static_cast<int>(r.size());
  return n;
}

std::vector<Tableau> enumerate_syt(const Partition& shape) {
  const int n = shape.weight();
  const int nrows = shape.length();
  std::vector<Tableau> out;
  Tableau t;
  t.rows.assign(static_cast<std::size_t>(nrows), {});
  std::function<void(int)> rec = [&](int value) {
    if (value > n) {
      out.push_back(t);
      return;
    }
    for (int r = 0; r < nrows; ++r) {
      auto& row = t.rows[static_cast<std::size_t>(r)];
      const std::size_t c = row.size();
      if (static_cast<int>(c) >= shape.parts[static_cast<std::size_t>(r)])
        continue;
      if (r > 0 && t.rows[static_cast<std::size_t>(r - 1)].size() <= c)
        continue;  // the cell below must already be filled
      row.push_back(value);
      rec(value + 1);
      row.pop_back();
    }
  };
  rec(1);
  return out;
}

std::vector<int> tableau_descents(const Tableau& t) {
  const int n = t.size();
  std::vector<int> row_of(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    for (int v : t.rows[r]) row_of[static_cast<std::size_t>(v)] = static_cast<int>(r);
  std::vector<int> des;
  for (int i = 1; i < n; ++i)
    if (row_of[static_cast<std::size_t>(i + 1)] > row_of[static_cast<std::size_t>(i)])
      des.push_back(i);
  return des;
}

long long tableau_maj(const Tableau& t) {
  long long s = 0;
  for (int i : tableau_descents(t)) s += i;
  return s;
}

long long tableau_rlmaj(const Tableau& t) {
  long long s = 0;
  const int n = t.size();
  for (int i : tableau_descents(t)) s += n - i;
  return s;
}

long long tableau_maj_column(const Tableau& t, int m) {
  long long s = 0;
  for (int i : tableau_descents(t))
    if (i <= m) s += i;
  return s;
}

long long tableau_rlmaj_row(const Tableau& t, int m) {
  long long s = 0;
  const int n = t.size();
  for (int i : tableau_descents(t))
    if (i > m) s += n - i;
  return s;
}

namespace {

// Enumerate semistandard fillings of `shape` with entries <= max_entry;
// `target` restricts the content when nonempty. Calls f(content).
template <class F>
void for_each_ssyt(const Partition& shape, int max_entry,
                   const std::vector<int>& target, F&& f) {
  const int nrows = shape.length();
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(nrows));
  std::vector<int> content(static_cast<std::size_t>(max_entry), 0);
  std::function<void(int, int)> rec = [&](int r, int c) {
    if (r == nrows) {
      f(content);
      return;
    }
    int nr = r, nc = c + 1;
    if (nc >= shape.parts[static_cast<std::size_t>(r)]) {
      nr = r + 1;
      nc = 0;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
    if (r > 0) lo = std::max(lo, rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
    for (int v = lo; v <= max_entry; ++v) {
      if (!target.empty() &&
          content[static_cast<std::size_t>(v - 1)] + 1 >
              target[static_cast<std::size_t>(v - 1)])
        continue;
      rows[static_cast<std::size_t>(r)].push_back(v);
      ++content[static_cast<std::size_t>(v - 1)];
      rec(nr, nc);
      --content[static_cast<std::size_t>(v - 1)];
      rows[static_cast<std::size_t>(r)].pop_back();
    }
  };
  rec(0, 0);
}

}  // namespace

long long kostka(const Partition& shape, const std::vector<int>& content) {
  int total = 0;
  for (int c : content) {
    if (c < 0) throw std::invalid_argument("kostka: negative content entry");
    total += c;
  }
  if (total != shape.weight())
    throw std::invalid_argument("kostka: content weight mismatch");
  long long count = 0;
  for_each_ssyt(shape, static_cast<int>(content.size()), content,
                [&](const std::vector<int>&) { ++count; });
  return count;
}

Laurent schur_polynomial(const Partition& shape, int N) {
  if (shape.length() > N) return Laurent();
  std::vector<std::string> vars;
  for (int i = 1; i <= N; ++i) vars.push_back("x" + std::to_string(i));
  Laurent::TermMap terms;
  for_each_ssyt(shape, N, {}, [&](const std::vector<int>& content) {
    auto [it, inserted] = terms.emplace(content, Int(1));
    if (!inserted) ++it->second;
  });
  return Laurent::from_terms(std::move(vars), std::move(terms));
}

namespace {

struct HookWeight {
  long long qexp = 0;
  long long texp = 0;
  std::vector<long long> u_exps;  // q-shifts, one per row descent
  int col_des = 0;
};

// Row statistics live on the subword sigma_{m+1}..sigma_n; column descents
// are the full-word descents at positions <= m (so a descent at position m
// itself belongs to the column factor).
HookWeight hook_weight_parts(const std::vector<int>& w, int m) {
  const int n = static_cast<int>(w.size());
  HookWeight hw;
  for (int i = 1; i <= m && i < n; ++i)
    if (w[static_cast<std::size_t>(i - 1)] > w[static_cast<std::size_t>(i)]) {
      ++hw.col_des;
      hw.texp += i;
    }
  for (int i = m + 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (w[static_cast<std::size_t>(i - 1)] > w[static_cast<std::size_t>(j - 1)])
        ++hw.qexp;
  for (int i = m + 1; i < n; ++i) {
    if (w[static_cast<std::size_t>(i - 1)] <= w[static_cast<std::size_t>(i)]) continue;
    long long to = 0;
    for (int h = m + 1; h < i; ++h)
      if (w[static_cast<std::size_t>(h - 1)] > w[static_cast<std::size_t>(i - 1)]) ++to;
    hw.u_exps.push_back(-(to + 1));
  }
  return hw;
}

}  // namespace

Laurent hook_word_weight(const Word& w, int m) {
  if (m < 0 || m >= w.size())
    throw std::invalid_argument("hook_word_weight: need 0 <= m < n");
  HookWeight hw = hook_weight_parts(w.letters, m);
  Laurent r = Laurent::monomial(
      Int(1), {{"q", static_cast<int>(hw.qexp)}, {"t", static_cast<int>(hw.texp)}});
  for (long long e : hw.u_exps)
    r *= Laurent(1) + Laurent::monomial(Int(1), {{"u", 1}, {"q", static_cast<int>(e)}});
  for (int j = 1; j <= hw.col_des; ++j)
    r *= Laurent(1) + Laurent::monomial(Int(1), {{"v", 1}, {"t", -j}});
  return r;
}

Laurent hmac_monomial(int n, int m, int N, int workers) {
  if (n < 1 || m < 0 || m >= n || N < 1)
    throw std::invalid_argument("hmac_monomial: need n >= 1, 0 <= m < n, N >= 1");
  std::vector<std::string> vars{"q", "t", "u", "v"};
  for (int i = 1; i <= N; ++i) vars.push_back("x" + std::to_string(i));

  long long total = 1;
  for (int i = 0; i < n; ++i) total *= N;
  workers = std::max(1, std::min<long long>(workers, total));

  auto run_range = [&](long long lo, long long hi, Laurent::TermMap& out) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (long long idx = lo; idx < hi; ++idx) {
      long long rem = idx;
      for (int i = n - 1; i >= 0; --i) {
        w[static_cast<std::size_t>(i)] = static_cast<int>(rem % N) + 1;
        rem /= N;
      }
      HookWeight hw = hook_weight_parts(w, m);
      std::vector<int> base(vars.size(), 0);
      base[0] = static_cast<int>(hw.qexp);
      base[1] = static_cast<int>(hw.texp);
      for (int x : w) ++base[static_cast<std::size_t>(3 + x)];
      const int ud = static_cast<int>(hw.u_exps.size());
      for (unsigned umask = 0; umask < (1u << ud); ++umask) {
        std::vector<int> e1 = base;
        for (int i = 0; i < ud; ++i)
          if (umask & (1u << i)) {
            ++e1[2];
            e1[0] += static_cast<int>(hw.u_exps[static_cast<std::size_t>(i)]);
          }
        for (unsigned vmask = 0; vmask < (1u << hw.col_des); ++vmask) {
          std::vector<int> e2 = e1;
          for (int j = 0; j < hw.col_des; ++j)
            if (vmask & (1u << j)) {
              ++e2[3];
              e2[1] -= j + 1;
            }
          auto [it, inserted] = out.emplace(std::move(e2), Int(1));
          if (!inserted) ++it->second;
        }
      }
    }
  };

  if (workers == 1) {
    Laurent::TermMap terms;
    run_range(0, total, terms);
    return Laurent::from_terms(std::move(vars), std::move(terms));
  }
  std::vector<Laurent::TermMap> parts(static_cast<std::size_t>(workers));
  std::vector<std::thread> threads;
  for (int wk = 0; wk < workers; ++wk) {
    long long lo = total * wk / workers;
    long long hi = total * (wk + 1) / workers;
    threads.emplace_back([&, wk, lo, hi] {
      run_range(lo, hi, parts[static_cast<std::size_t>(wk)]);
    });
  }
  for (auto& th : threads) th.join();
  Laurent::TermMap merged = std::move(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i) {
    for (auto& [e, c] : parts[i]) {
      auto [it, inserted] = merged.emplace(e, c);
      if (!inserted) it->second += c;
    }
  }
  return Laurent::from_terms(std::move(vars), std::move(merged));
}

Laurent schur_coeff_theorem(const Partition& shape, int m) {
  const int n = shape.weight();
  if (m < 0 || m >= n)
    throw std::invalid_argument("schur_coeff_theorem: need 0 <= m < n");
  Laurent total;
  for (const Tableau& t : enumerate_syt(shape)) {
    std::vector<int> des = tableau_descents(t);
    int row_des = 0, col_des = 0;
    long long qexp = 0, texp = 0;
    for (int i : des) {
      if (i <= m) {
        ++col_des;
        texp += i;
      } else {
        ++row_des;
        qexp += n - i;
      }
    }
    Laurent term = Laurent::monomial(
        Int(1),
        {{"q", static_cast<int>(qexp)}, {"t", static_cast<int>(texp)}});
    for (int i = 1; i <= row_des; ++i)
      term *= Laurent(1) + Laurent::monomial(Int(1), {{"u", 1}, {"q", -i}});
    for (int j = 1; j <= col_des; ++j)
      term *= Laurent(1) + Laurent::monomial(Int(1), {{"v", 1}, {"t", -j}});
    total += term;
  }
  return total;
}

std::vector<std::pair<Partition, Laurent>> schur_extract(const Laurent& f,
                                                         int N) {
  if (f.is_zero()) return {};
  // homogeneous x-degree
  std::vector<std::size_t> xidx;
  std::vector<std::string> xnames;
  for (std::size_t i = 0; i < f.vars().size(); ++i)
    if (f.vars()[i].size() >= 2 && f.vars()[i][0] == 'x') {
      xidx.push_back(i);
      xnames.push_back(f.vars()[i]);
    }
  long long degree = -1;
  for (const auto& [e, c] : f.terms()) {
    long long d = 0;
    for (std::size_t i : xidx) d += e[i];
    if (degree < 0) degree = d;
    if (d != degree)
      throw std::invalid_argument("schur_extract: input is not x-homogeneous");
  }
  const int n = static_cast<int>(degree);
  if (n > N)
    throw std::invalid_argument("schur_extract: fewer variables than degree");
  for (int r = 1; r < N; ++r) {
    std::string a = "x" + std::to_string(r), b = "x" + std::to_string(r + 1);
    if (f.with_swapped(a, b) != f)
      throw std::invalid_argument("schur_extract: input is not symmetric in " +
                                  a + "," + b);
  }

  std::vector<std::pair<Partition, Laurent>> out;
  for (const Partition& lam : partitions_of(n)) {
    Laurent c = f;
    for (int i = 1; i <= N; ++i) {
      int e = i <= lam.length() ? lam.parts[static_cast<std::size_t>(i - 1)] : 0;
      c = c.coeff_of("x" + std::to_string(i), e);
    }
    std::vector<int> content(static_cast<std::size_t>(lam.length()), 0);
    for (int i = 0; i < lam.length(); ++i)
      content[static_cast<std::size_t>(i)] = lam.parts[static_cast<std::size_t>(i)];
    for (const auto& [kappa, ck] : out) {
      long long K = kostka(kappa, content);
      if (K != 0) c -= ck * Laurent(K);
    }
    out.emplace_back(lam, std::move(c));
  }
  // exact reconstruction
  Laurent rebuilt;
  for (const auto& [lam, c] : out)
    if (!c.is_zero()) rebuilt += c * schur_polynomial(lam, N);
  if (rebuilt != f)
    throw std::logic_error("schur_extract: reconstruction residue is nonzero");
  return out;
}

Word r_pairing(const Word& w, int r) {
  std::vector<int> pos;
  for (int i = 1; i <= w.size(); ++i)
    if (w.at(i) == r || w.at(i) == r + 1) pos.push_back(i);
  // Iterated pairing of adjacent (r+1, r) within the restricted subsequence;
  // nearest-unpaired matching computes the same fixpoint.
  std::vector<bool> paired(pos.size(), false);
  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (w.at(pos[i]) == r + 1) {
      open.push_back(i);
    } else if (!open.empty()) {
      paired[open.back()] = true;
      paired[i] = true;
      open.pop_back();
    }
  }
  Word out = w;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (paired[i]) continue;
    int& letter = out.letters[static_cast<std::size_t>(pos[i] - 1)];
    letter = letter == r ? r + 1 : r;
  }
  return out;
}

}  // namespace mahon
