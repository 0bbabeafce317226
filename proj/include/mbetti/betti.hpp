#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mbetti/laurent.hpp"
#include "mbetti/schur.hpp"

namespace mbetti {

/// (n+1)-tuple (B_0, ..., B_n) of Laurent polynomials in n variables.
class BettiTuple {
 public:
  BettiTuple() = default;
  /// Throws std::invalid_argument unless there are nvars+1 components of a
  /// common variable count nvars >= 1.
  explicit BettiTuple(std::vector<LaurentPoly> components);
  static BettiTuple zero(std::size_t nvars);

  std::size_t nvars() const { return nvars_; }
  std::size_t size() const { return comps_.size(); }
  const LaurentPoly& operator[](std::size_t i) const { return comps_[i]; }
  const std::vector<LaurentPoly>& components() const { return comps_; }

  bool is_zero() const;
  /// Every component homogeneous (zero components allowed).
  bool is_homogeneous() const;
  /// Total degree of each component; nullopt for zero or inhomogeneous ones.
  std::vector<std::optional<int>> degrees() const;
  /// (-1)^i-weighted sum of the components.
  LaurentPoly alternating_sum() const;

  BettiTuple operator-() const;
  friend BettiTuple operator+(const BettiTuple& a, const BettiTuple& b);
  friend BettiTuple operator-(const BettiTuple& a, const BettiTuple& b);
  friend BettiTuple operator*(const LaurentPoly& p, const BettiTuple& b);
  BettiTuple shifted(const Exponent& shift) const;
  BettiTuple scaled(const Rational& c) const;

  friend bool operator==(const BettiTuple&, const BettiTuple&) = default;

 private:
  std::size_t nvars_ = 0;
  std::vector<LaurentPoly> comps_;
};

/// Multiplicities beta_{i,a} for homological index i in 0..n and multidegree
/// a in Z^n. Multiplicities are rational so that elements of the linear space
/// and actual Betti diagrams share one type.
class BettiDiagram {
 public:
  struct Entry {
    std::size_t i;
    Exponent deg;
    Rational mult;
  };

  BettiDiagram() = default;
  explicit BettiDiagram(std::size_t nvars);
  static BettiDiagram from_tuple(const BettiTuple& b);

  std::size_t nvars() const { return nvars_; }
  Rational mult(std::size_t i, const Exponent& deg) const;
  void set(std::size_t i, const Exponent& deg, const Rational& m);
  void add(std::size_t i, const Exponent& deg, const Rational& m);

  /// Betti polynomial B_i.
  const LaurentPoly& slice(std::size_t i) const;
  /// Entries ordered by homological index, then by multidegree in
  /// decreasing lex order.
  std::vector<Entry> entries() const;
  /// Betti polynomials without any purity check.
  BettiTuple polynomials() const;

  bool is_zero() const;
  bool is_integral() const;
  bool is_nonnegative() const;
  /// sum_a beta_{i,a}.
  Rational rank(std::size_t i) const;

  friend bool operator==(const BettiDiagram&, const BettiDiagram&) = default;

 private:
  void check(std::size_t i, const Exponent& deg) const;
  std::size_t nvars_ = 0;
  std::vector<LaurentPoly> slices_;
};

struct PurityProfile {
  bool pure = false;
  /// Total degrees d_0 < ... < d_n when pure.
  std::vector<int> degrees;
  /// e = (d_1 - d_0, ..., d_n - d_{n-1}) when pure.
  std::vector<int> differences;
  /// Offending homological index and the total degrees found there.
  std::optional<std::size_t> witness_index;
  std::vector<int> witness_degrees;
  std::string reason;
};

/// Whether the diagram becomes pure after taking total degrees. An all-zero
/// homological slot counts as a failure.
PurityProfile purity_profile(const BettiDiagram& diag);
PurityProfile purity_profile(const BettiTuple& b);

class NotPureError : public std::runtime_error {
 public:
  explicit NotPureError(PurityProfile profile);
  const PurityProfile& profile() const { return profile_; }

 private:
  PurityProfile profile_;
};

/// Betti polynomials of the diagram. Each nonzero slot must have a single
/// total degree and those degrees must increase with i; zero slots are
/// allowed (the empty diagram maps to the zero tuple). Throws NotPureError.
BettiTuple betti_tuple(const BettiDiagram& diag);

/// beta(-t): entries move from a to a + t.
BettiDiagram twist(const BettiDiagram& diag, const Exponent& t);
/// Multidegrees scaled by r. Throws std::invalid_argument for r < 1.
BettiDiagram frobenius_diagram(const BettiDiagram& diag, int r);
/// (i, total degree) -> sum of multiplicities.
std::map<std::pair<std::size_t, int>, Rational> collapse_total(const BettiDiagram& diag);

struct HkReport {
  bool pass = true;
  /// First variable index (0-based) whose substitution t_k = 1 leaves a
  /// nonzero residual.
  std::optional<std::size_t> failing_var;
  /// sum (-1)^i B_i with t_k = 1, in the remaining variables.
  LaurentPoly residual;
};

/// Multigraded Herzog-Kuehl equations: sum_i (-1)^i B_i vanishes at t_k = 1
/// for every k.
HkReport check_hk(const BettiTuple& b);
HkReport check_hk(const BettiDiagram& diag);

/// h with sum_i (-1)^i B_i = h * prod_k (1 - t_k); nullopt when the
/// equations fail.
std::optional<LaurentPoly> hilbert_numerator(const BettiTuple& b);

/// Betti polynomials of E(e) as maximal minors of the n x (n+1) matrix
/// [t_i^{e_n + ... + e_{n-j+1}}]_{i, j=0..n} divided by the Vandermonde D.
BettiTuple equivariant_by_minors(const DifferenceVector& e);
/// (s_{alpha(e,0)}, ..., s_{alpha(e,n)}).
BettiTuple equivariant_by_schur(const DifferenceVector& e);
/// The multigraded Betti diagram of E(e); both constructions are computed
/// and must agree. Throws std::logic_error otherwise.
BettiDiagram equivariant(const DifferenceVector& e);

}  // namespace mbetti
