#include "mahon/words.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace mahon {

Composition::Composition(std::vector<int> p) : parts(std::move(p)) {
  if (parts.empty()) throw std::invalid_argument("composition must be nonempty");
  for (int x : parts)
    if (x < 1) throw std::invalid_argument("composition parts must be >= 1");
}

Composition Composition::minus_last() const {
  if (parts.size() < 2)
    throw std::invalid_argument("composition has no removable last part");
  return Composition(std::vector<int>(parts.begin(), parts.end() - 1));
}

Composition Composition::parse(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("bad composition: " + text);
    parts.push_back(std::stoi(tok));
  }
  return Composition(std::move(parts));
}

std::string Composition::str() const {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s;
}

Word Word::parse(const std::string& text) {
  std::vector<int> letters;
  if (text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) letters.push_back(std::stoi(tok));
  } else {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0')
        throw std::invalid_argument("bad word: " + text);
      letters.push_back(c - '0');
    }
  }
  for (int x : letters)
    if (x < 1) throw std::invalid_argument("word letters must be >= 1");
  return Word(std::move(letters));
}

std::string Word::str() const {
  bool digits = std::all_of(letters.begin(), letters.end(),
                            [](int x) { return x <= 9; });
  std::string s;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (!digits && i) s += ",";
    s += std::to_string(letters[i]);
  }
  return s;
}

std::vector<int> descent_set(const Word& w) {
  std::vector<int> d;
  for (int i = 1; i < w.size(); ++i)
    if (w.at(i) > w.at(i + 1)) d.push_back(i);
  return d;
}

std::vector<int> ascent_set(const Word& w) {
  std::vector<int> a;
  for (int i = 1; i < w.size(); ++i)
    if (w.at(i) < w.at(i + 1)) a.push_back(i);
  return a;
}

long long inv(const Word& w) {
  long long c = 0;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j)
      if (w.at(i) > w.at(j)) ++c;
  return c;
}

long long inv_from(const Word& w, int i) {
  if (i < 1 || i > w.size()) throw std::out_of_range("inv_from: bad position");
  long long c = 0;
  for (int j = i + 1; j <= w.size(); ++j)
    if (w.at(i) > w.at(j)) ++c;
  return c;
}

long long inv_to(const Word& w, int j) {
  if (j < 1 || j > w.size()) throw std::out_of_range("inv_to: bad position");
  long long c = 0;
  for (int i = 1; i < j; ++i)
    if (w.at(i) > w.at(j)) ++c;
  return c;
}

long long maj(const Word& w) {
  long long s = 0;
  for (int i : descent_set(w)) s += i;
  return s;
}

long long rlmaj(const Word& w) {
  long long s = 0;
  for (int i : descent_set(w)) s += w.size() - i;
  return s;
}

long long word_stat(WordStat s, const Word& w) {
  switch (s) {
    case WordStat::Inv:
      return inv(w);
    case WordStat::Maj:
      return maj(w);
    case WordStat::Rlmaj:
      return rlmaj(w);
    case WordStat::Des:
      return static_cast<long long>(descent_set(w).size());
    case WordStat::Asc:
      return static_cast<long long>(ascent_set(w).size());
  }
  throw std::logic_error("unknown word statistic");
}

Word subword(const Word& w, int a, int b) {
  if (a < 1 || b > w.size() || a > b)
    throw std::out_of_range("subword: invalid range");
  return Word(std::vector<int>(w.letters.begin() + (a - 1),
                               w.letters.begin() + b));
}

long long restricted_stat(WordStat s, const Word& w, int a, int b) {
  return word_stat(s, subword(w, a, b));
}

std::vector<int> rl_minima(const Word& w) {
  std::vector<int> out;
  int best = 0;
  for (int i = w.size(); i >= 1; --i) {
    if (out.empty() || w.at(i) < best) {
      out.push_back(i);
      best = w.at(i);
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<int> rl_minima_letters(const Word& w) {
  std::vector<int> out;
  for (int i : rl_minima(w)) out.push_back(w.at(i));
  return out;
}

std::vector<int> content_of(const Word& w) {
  int mx = 0;
  for (int x : w.letters) mx = std::max(mx, x);
  std::vector<int> c(static_cast<std::size_t>(mx), 0);
  for (int x : w.letters) ++c[static_cast<std::size_t>(x - 1)];
  return c;
}

bool has_content(const Word& w, const Composition& alpha) {
  return content_of(w) == alpha.parts;
}

std::vector<Word> all_words(const Composition& alpha) {
  std::vector<Word> out;
  for_each_word(alpha, [&](const Word& w) { out.push_back(w); });
  return out;
}

Int count_words(const Composition& alpha) {
  Int num = 1;
  for (int i = 2; i <= alpha.weight(); ++i) num *= i;
  for (int p : alpha.parts)
    for (int i = 2; i <= p; ++i) num /= i;
  return num;
}

}  // namespace mahon
