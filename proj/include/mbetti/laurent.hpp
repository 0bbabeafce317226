#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mbetti/exponent.hpp"

namespace mbetti {

using Rational = mpq_class;
using Integer = mpz_class;

struct Term {
  Exponent exp;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse multivariate Laurent polynomial over Q in variables t1..tn.
///
/// Terms are kept strictly decreasing in lex order (t1 > t2 > ... > tn) with
/// no zero coefficients, so two equal polynomials have identical term lists
/// and iteration order is reproducible. Values are immutable once built and
/// may be shared read-only between threads.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t nvars);

  static LaurentPoly constant(std::size_t nvars, const Rational& c);
  static LaurentPoly monomial(const Exponent& exp, const Rational& c = 1);
  /// The variable t_{var+1} (0-based index).
  static LaurentPoly variable(std::size_t nvars, std::size_t var);
  /// Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
  static LaurentPoly from_terms(std::size_t nvars, std::vector<Term> terms);
  /// Trusted constructor: terms must already be sorted, distinct and nonzero.
  static LaurentPoly from_sorted_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }

  /// Lex-leading term. Throws std::domain_error on zero.
  const Term& leading() const;
  /// Lex-smallest term. Throws std::domain_error on zero.
  const Term& trailing() const;

  bool is_constant() const;
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }

  /// Total degree when homogeneous and nonzero.
  std::optional<int> total_degree() const;
  int max_degree(std::size_t var) const;
  int min_degree(std::size_t var) const;
  /// Componentwise minimum / maximum exponent over the support.
  Exponent min_exponent() const;
  Exponent max_exponent() const;

  Rational coefficient(const Exponent& exp) const;
  /// Value at t = (1, ..., 1).
  Rational coefficient_sum() const;
  Rational evaluate(std::span<const Rational> point) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly scaled(const Rational& c) const;
  /// Multiplication by the monomial t^shift.
  LaurentPoly shifted(const Exponent& shift) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

 private:
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

/// Nonzero constant times a Laurent monomial; the invertible elements.
struct Unit {
  Rational coeff;
  Exponent exp;

  LaurentPoly poly() const { return LaurentPoly::monomial(exp, coeff); }
  Unit inverse() const { return {1 / coeff, -exp}; }
};

/// The unit f when f is a single term.
std::optional<Unit> as_unit(const LaurentPoly& f);

/// f / g in the Laurent ring, or nullopt when g does not divide f.
/// Throws std::domain_error when g is zero.
std::optional<LaurentPoly> exact_div(const LaurentPoly& f, const LaurentPoly& g);

/// gcd in the Laurent ring, in canonical form: no monomial factor (every
/// variable has minimum exponent 0), integer coefficients with content 1,
/// positive lex-leading coefficient. gcd(0, g) is the canonical form of g.
/// Throws std::domain_error when both are zero.
LaurentPoly gcd(const LaurentPoly& f, const LaurentPoly& g);
/// Same result as gcd without the heuristic first pass.
LaurentPoly gcd_prs(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly gcd(std::span<const LaurentPoly> polys);

/// Canonical representative of f modulo units (same normalization as gcd).
LaurentPoly canonical_associate(const LaurentPoly& f);
/// f scaled by a positive-or-negative rational so that its coefficients are
/// coprime integers and the leading coefficient is positive.
LaurentPoly integer_primitive(const LaurentPoly& f);

/// Substitution t_i -> t_i^r. Throws std::invalid_argument for r < 1.
LaurentPoly frobenius(const LaurentPoly& f, int r);
/// Substitution t_{var+1} := 1; the result lives in nvars-1 variables.
LaurentPoly set_var_one(const LaurentPoly& f, std::size_t var);
/// Coefficient of t_{var+1}^power, as a polynomial in the other variables.
LaurentPoly coefficient_of_power(const LaurentPoly& f, std::size_t var, int power);
/// Inverse of dropping a variable: inserts t_{var+1} with exponent `power`.
LaurentPoly embed(const LaurentPoly& f, std::size_t var, int power = 0);

/// Coefficient polynomial (in t2..tn) of the highest power of t1.
LaurentPoly overline(const LaurentPoly& f);
/// Coefficient polynomial (in t2..tn) of the lowest power of t1.
LaurentPoly underline(const LaurentPoly& f);

std::pair<Exponent, Rational> lex_leading(const LaurentPoly& f);

bool is_symmetric(const LaurentPoly& f);
bool is_homogeneous(const LaurentPoly& f);
/// Swaps t_{var+1} and t_{var+2}.
LaurentPoly swap_variables(const LaurentPoly& f, std::size_t var);

bool same_up_to_unit(const LaurentPoly& f, const LaurentPoly& g);

}  // namespace mbetti
