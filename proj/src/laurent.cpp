#include "mahon/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace mahon {

namespace {

long long var_rank(const std::string& v) {
  if (v == "q") return 0;
  if (v == "t") return 1;
  if (v == "u") return 2;
  if (v == "v") return 3;
  if (v == "z") return 4;
  if (v.size() >= 2 && v[0] == 'x' &&
      std::all_of(v.begin() + 1, v.end(),
                  [](unsigned char c) { return std::isdigit(c); })) {
    return 100 + std::stoll(v.substr(1));
  }
  return 1'000'000'000;
}

}  // namespace

bool var_order_less(const std::string& a, const std::string& b) {
  long long ra = var_rank(a), rb = var_rank(b);
  if (ra != rb) return ra < rb;
  return a < b;
}

Laurent::Laurent(long long c) {
  if (c != 0) terms_[{}] = Int(c);
}

Laurent::Laurent(Int c) {
  if (c != 0) terms_[{}] = std::move(c);
}

Laurent Laurent::variable(const std::string& name, int exp) {
  Laurent p;
  p.vars_ = {name};
  p.terms_[{exp}] = 1;
  p.prune();
  return p;
}

Laurent Laurent::monomial(Int coeff,
                          std::vector<std::pair<std::string, int>> factors) {
  Laurent p(std::move(coeff));
  for (auto& [v, e] : factors) p *= variable(v, e);
  return p;
}

Laurent Laurent::from_terms(std::vector<std::string> vars, TermMap terms) {
  Laurent p;
  p.vars_ = std::move(vars);
  p.terms_ = std::move(terms);
  for (auto it = p.terms_.begin(); it != p.terms_.end();) {
    if (it->first.size() != p.vars_.size())
      throw std::invalid_argument("from_terms: exponent tuple size mismatch");
    if (it->second == 0)
      it = p.terms_.erase(it);
    else
      ++it;
  }
  p.prune();
  return p;
}

void Laurent::prune() {
  if (terms_.empty()) {
    vars_.clear();
    return;
  }
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) used[i] = true;
  if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
  std::vector<std::string> nv;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (used[i]) nv.push_back(vars_[i]);
  TermMap nt;
  for (const auto& [e, c] : terms_) {
    std::vector<int> ne;
    ne.reserve(nv.size());
    for (std::size_t i = 0; i < e.size(); ++i)
      if (used[i]) ne.push_back(e[i]);
    nt[std::move(ne)] = c;
  }
  vars_ = std::move(nv);
  terms_ = std::move(nt);
}

Laurent Laurent::remapped_to(const std::vector<std::string>& new_vars) const {
  std::vector<int> where(vars_.size(), -1);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(new_vars.begin(), new_vars.end(), vars_[i]);
    if (it == new_vars.end())
      throw std::logic_error("remapped_to: missing variable");
    where[i] = static_cast<int>(it - new_vars.begin());
  }
  Laurent out;
  out.vars_ = new_vars;
  for (const auto& [e, c] : terms_) {
    std::vector<int> ne(new_vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) ne[where[i]] = e[i];
    out.terms_[std::move(ne)] = c;
  }
  return out;
}

void Laurent::unify(Laurent& a, Laurent& b) {
  if (a.vars_ == b.vars_) return;
  std::vector<std::string> all = a.vars_;
  all.insert(all.end(), b.vars_.begin(), b.vars_.end());
  std::sort(all.begin(), all.end(), var_order_less);
  all.erase(std::unique(all.begin(), all.end()), all.end());
  a = a.remapped_to(all);
  b = b.remapped_to(all);
}

Laurent& Laurent::operator+=(const Laurent& o) {
  Laurent rhs = o;
  unify(*this, rhs);
  for (const auto& [e, c] : rhs.terms_) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  prune();
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent Laurent::operator-() const {
  Laurent p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

Laurent& Laurent::operator*=(const Laurent& o) {
  Laurent rhs = o;
  unify(*this, rhs);
  TermMap out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto [it, inserted] = out.emplace(std::move(e), ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  terms_ = std::move(out);
  prune();
  return *this;
}

Laurent Laurent::pow(unsigned e) const {
  Laurent r(1);
  Laurent base = *this;
  while (e) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

Laurent Laurent::divided_exactly(const Laurent& divisor) const {
  if (divisor.is_zero())
    throw std::domain_error("division by zero polynomial");
  if (is_zero()) return Laurent();
  Laurent f = *this, g = divisor;
  unify(f, g);
  const std::size_t nv = f.vars_.size();

  // Shift both operands so every variable has minimum exponent 0; per-variable
  // valuations are additive, so an exact Laurent quotient becomes an exact
  // polynomial quotient after the shift.
  auto min_exps = [nv](const Laurent& p) {
    std::vector<int> m(nv, 0);
    bool first = true;
    for (const auto& [e, c] : p.terms_) {
      for (std::size_t i = 0; i < nv; ++i)
        m[i] = first ? e[i] : std::min(m[i], e[i]);
      first = false;
    }
    return m;
  };
  std::vector<int> fs = min_exps(f), gs = min_exps(g);
  auto shifted = [nv](const Laurent& p, const std::vector<int>& s) {
    TermMap out;
    for (const auto& [e, c] : p.terms()) {
      std::vector<int> ne(nv);
      for (std::size_t i = 0; i < nv; ++i) ne[i] = e[i] - s[i];
      out[std::move(ne)] = c;
    }
    return out;
  };
  TermMap rem = shifted(f, fs);
  TermMap gsh = shifted(g, gs);

  const auto& glead = *gsh.rbegin();
  TermMap quot;
  while (!rem.empty()) {
    const auto& flead = *rem.rbegin();
    std::vector<int> de(nv);
    for (std::size_t i = 0; i < nv; ++i) {
      de[i] = flead.first[i] - glead.first[i];
      if (de[i] < 0) throw std::domain_error("inexact polynomial division");
    }
    Int qc, rc;
    boost::multiprecision::divide_qr(flead.second, glead.second, qc, rc);
    if (rc != 0) throw std::domain_error("inexact polynomial division");
    quot[de] = qc;
    for (const auto& [e, c] : gsh) {
      std::vector<int> ne(nv);
      for (std::size_t i = 0; i < nv; ++i) ne[i] = e[i] + de[i];
      auto [it, inserted] = rem.emplace(std::move(ne), -qc * c);
      if (!inserted) {
        it->second -= qc * c;
        if (it->second == 0) rem.erase(it);
      }
    }
  }
  // Undo the shifts on the quotient.
  TermMap out;
  for (const auto& [e, c] : quot) {
    std::vector<int> ne(nv);
    for (std::size_t i = 0; i < nv; ++i) ne[i] = e[i] + fs[i] - gs[i];
    out[std::move(ne)] = c;
  }
  return from_terms(f.vars_, std::move(out));
}

Laurent Laurent::coeff_of(const std::string& var, int exp) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) {
    if (exp == 0) return *this;
    return Laurent();
  }
  std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
  Laurent out;
  out.vars_ = vars_;
  out.vars_.erase(out.vars_.begin() + idx);
  for (const auto& [e, c] : terms_) {
    if (e[idx] != exp) continue;
    std::vector<int> ne = e;
    ne.erase(ne.begin() + idx);
    out.terms_[std::move(ne)] = c;
  }
  out.prune();
  return out;
}

Int Laurent::coefficient(std::vector<std::pair<std::string, int>> mono) const {
  std::vector<int> want(vars_.size(), 0);
  for (const auto& [v, e] : mono) {
    auto it = std::find(vars_.begin(), vars_.end(), v);
    if (it == vars_.end()) {
      if (e != 0) return 0;
      continue;
    }
    want[static_cast<std::size_t>(it - vars_.begin())] = e;
  }
  auto it = terms_.find(want);
  return it == terms_.end() ? Int(0) : it->second;
}

Laurent Laurent::at_value(const std::string& var, long long value) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return *this;
  std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
  Laurent out;
  out.vars_ = vars_;
  out.vars_.erase(out.vars_.begin() + idx);
  for (const auto& [e, c] : terms_) {
    int ex = e[idx];
    Int factor;
    if (ex >= 0) {
      factor = boost::multiprecision::pow(Int(value), static_cast<unsigned>(ex));
    } else if (value == 1) {
      factor = 1;
    } else if (value == -1) {
      factor = (ex % 2 == 0) ? 1 : -1;
    } else {
      throw std::domain_error("at_value: negative exponent needs value +-1");
    }
    if (factor == 0) continue;
    std::vector<int> ne = e;
    ne.erase(ne.begin() + idx);
    auto [jt, inserted] = out.terms_.emplace(std::move(ne), c * factor);
    if (!inserted) {
      jt->second += c * factor;
      if (jt->second == 0) out.terms_.erase(jt);
    }
  }
  out.prune();
  return out;
}

Laurent Laurent::renamed(
    const std::vector<std::pair<std::string, std::string>>& renames) const {
  std::vector<std::string> nv = vars_;
  for (auto& name : nv) {
    for (const auto& [from, to] : renames) {
      if (name == from) {
        name = to;
        break;
      }
    }
  }
  std::vector<std::size_t> order(nv.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return var_order_less(nv[a], nv[b]);
  });
  std::vector<std::string> sorted;
  for (std::size_t i : order) sorted.push_back(nv[i]);
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("renamed: name collision");
  Laurent out;
  out.vars_ = sorted;
  for (const auto& [e, c] : terms_) {
    std::vector<int> ne(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) ne[i] = e[order[i]];
    out.terms_[std::move(ne)] = c;
  }
  out.prune();
  return out;
}

Laurent Laurent::with_swapped(const std::string& a,
                              const std::string& b) const {
  return renamed({{a, b}, {b, a}});
}

Int Laurent::sum_of_coefficients() const {
  Int s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

bool Laurent::all_coefficients_nonnegative() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return false;
  return true;
}

bool Laurent::has_negative_exponent() const {
  for (const auto& [e, c] : terms_)
    for (int x : e)
      if (x < 0) return true;
  return false;
}

int Laurent::min_exponent(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || terms_.empty()) return 0;
  std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
  int m = terms_.begin()->first[idx];
  for (const auto& [e, c] : terms_) m = std::min(m, e[idx]);
  return m;
}

int Laurent::max_exponent(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || terms_.empty()) return 0;
  std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
  int m = terms_.begin()->first[idx];
  for (const auto& [e, c] : terms_) m = std::max(m, e[idx]);
  return m;
}

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Int a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      os << a.str();
    } else if (a == 1) {
      os << mono;
    } else {
      os << a.str() << "*" << mono;
    }
  }
  return os.str();
}

std::string Laurent::json() const {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << ",";
    first = false;
    os << "{\"coeff\":\"" << c.str() << "\",\"exp\":{";
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (i) os << ",";
      os << "\"" << vars_[i] << "\":" << e[i];
    }
    os << "}}";
  }
  os << "]";
  return os.str();
}

}  // namespace mahon
