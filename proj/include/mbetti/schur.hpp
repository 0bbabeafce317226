#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mbetti/laurent.hpp"

namespace mbetti {

/// Weakly decreasing tuple of nonnegative integers.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless weakly decreasing and nonnegative.
  explicit Partition(std::vector<int> parts);

  /// rho = (n-1, n-2, ..., 1, 0).
  static Partition staircase(std::size_t n);

  std::size_t size() const { return parts_.size(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  std::span<const int> parts() const { return parts_; }

  int weight() const;
  /// Number of nonzero parts.
  std::size_t length() const;

  /// Exactly n parts: pads with zeros or drops trailing zeros.
  /// Throws std::invalid_argument if more than n parts are nonzero.
  Partition padded(std::size_t n) const;

  /// (l2, ..., ln).
  Partition overline() const;
  /// (l1 - ln, ..., l_{n-1} - ln).
  Partition underline() const;
  Partition scaled(int r) const;
  Partition operator+(const Partition& o) const;
  /// Componentwise difference when it is again a partition.
  std::optional<Partition> minus(const Partition& o) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  std::string to_string() const;

 private:
  std::vector<int> parts_;
};

/// Gaps e = (d1 - d0, ..., dn - d_{n-1}) of a strictly increasing degree
/// sequence. All entries are >= 1.
class DifferenceVector {
 public:
  /// Throws std::invalid_argument on empty input or entries < 1.
  explicit DifferenceVector(std::vector<int> entries);

  std::size_t size() const { return e_.size(); }
  int operator[](std::size_t i) const { return e_[i]; }
  std::span<const int> entries() const { return e_; }

  /// r = gcd(e1, ..., en).
  int gcd() const { return r_; }
  /// e' with e = r * e'.
  DifferenceVector reduced() const;
  /// (e_{from+1}, ..., e_n) for 0 <= from < n.
  DifferenceVector tail(std::size_t from) const;

  friend bool operator==(const DifferenceVector&, const DifferenceVector&) = default;
  std::string to_string() const;

 private:
  std::vector<int> e_;
  int r_ = 1;
};

/// Determinant of a square matrix of Laurent polynomials: cofactor expansion
/// up to 4x4, fraction-free Bareiss elimination above that.
LaurentPoly determinant(const std::vector<std::vector<LaurentPoly>>& m);

/// D = prod_{i<j} (t_j - t_i) in n variables.
LaurentPoly vandermonde(std::size_t n);

/// Schur polynomial as the ratio |t_i^{l_j + n - j}| / |t_i^{n - j}|.
/// Zero when lambda has more than n nonzero parts.
LaurentPoly schur_bialternant(const Partition& lambda, std::size_t nvars);

/// Schur polynomial as the content generating function of semistandard Young
/// tableaux of shape lambda with entries in 1..n.
LaurentPoly schur_ssyt(const Partition& lambda, std::size_t nvars);

/// alpha(e, i) = (l1+e1, ..., li+ei, l_{i+1}, ..., ln), l_k = sum_{j>k}(e_j - 1).
/// Throws std::out_of_range unless 0 <= i <= n.
Partition alpha_partition(const DifferenceVector& e, std::size_t i);

struct SchurFamilyGcd {
  int r = 1;
  /// s_{r*rho - rho}.
  LaurentPoly gcd_poly;
  /// frobenius(s_{alpha(e', i)}, r) for i = 0..n.
  std::vector<LaurentPoly> cofactors;
};

/// Factorization s_{alpha(e,i)} = s_{r*rho-rho} * s_{alpha(e',i)}^(r), checked
/// by exact multiplication before returning.
SchurFamilyGcd schur_gcd_family(const DifferenceVector& e);

/// xi_a(t1, t2) = t1^{a-1} + t1^{a-2} t2 + ... + t2^{a-1}.
LaurentPoly xi(int a);

}  // namespace mbetti
