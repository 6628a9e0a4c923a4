#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mahon {

using Int = boost::multiprecision::cpp_int;

// Graded-lexicographic order on dense exponent tuples: total degree first,
// then lexicographic. This is the canonical term order used for storage and
// serialization.
struct GradedLexLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    long long da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da < db;
    return a < b;
  }
};

// Canonical variable order: q, t, u, v, z, then x1 < x2 < ... < x10 < ...,
// then any other name alphabetically.
bool var_order_less(const std::string& a, const std::string& b);

// Multivariate Laurent polynomial with exact integer coefficients.
//
// Terms map dense exponent tuples (over the declared variable list, which may
// contain negative entries) to nonzero big-integer coefficients. The variable
// list is kept minimal: a variable whose exponent is zero in every term is
// dropped, so equal polynomials always compare equal regardless of how they
// were built.
class Laurent {
 public:
  using TermMap = std::map<std::vector<int>, Int, GradedLexLess>;

  Laurent() = default;
  explicit Laurent(long long c);
  explicit Laurent(Int c);

  static Laurent variable(const std::string& name, int exp = 1);
  static Laurent monomial(Int coeff,
                          std::vector<std::pair<std::string, int>> factors);
  // Takes ownership of a fully built term map over `vars` (exact sizes,
  // no zero coefficients are required; zeros are pruned).
  static Laurent from_terms(std::vector<std::string> vars, TermMap terms);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  Laurent operator-() const;

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(Laurent a, const Laurent& b) { return a *= b; }

  bool operator==(const Laurent& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
  }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  Laurent pow(unsigned e) const;

  // Exact division; throws std::domain_error when the division leaves a
  // remainder (which the callers treat as an arithmetic bug).
  Laurent divided_exactly(const Laurent& divisor) const;

  // Coefficient of var^exp, as a polynomial in the remaining variables.
  Laurent coeff_of(const std::string& var, int exp) const;
  // Integer coefficient of one full monomial (variables not mentioned must
  // have exponent zero).
  Int coefficient(std::vector<std::pair<std::string, int>> mono) const;

  // Substitute an integer value for one variable. Negative exponents require
  // value 1 or -1.
  Laurent at_value(const std::string& var, long long value) const;

  // Simultaneous variable renaming, e.g. {q->t, t->q, u->v, v->u}.
  Laurent renamed(
      const std::vector<std::pair<std::string, std::string>>& renames) const;
  Laurent with_swapped(const std::string& a, const std::string& b) const;

  Int sum_of_coefficients() const;  // value at all variables = 1
  bool all_coefficients_nonnegative() const;
  bool has_negative_exponent() const;
  int min_exponent(const std::string& var) const;  // 0 when var absent
  int max_exponent(const std::string& var) const;

  // Human-readable form, e.g. "1 + q + 2*q^2".
  std::string str() const;
  // Canonical JSON: [{"coeff":"1","exp":{"q":0}},...] in graded-lex order,
  // exponents listed for every declared variable.
  std::string json() const;

 private:
  std::vector<std::string> vars_;
  TermMap terms_;

  void prune();
  static void unify(Laurent& a, Laurent& b);
  Laurent remapped_to(const std::vector<std::string>& new_vars) const;
};

}  // namespace mahon
