#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>

namespace mbetti {

/// Multidegree of a Laurent monomial t1^a1 * ... * tn^an. Entries may be
/// negative. Storage is inline; at most kMaxVars variables are supported.
class Exponent {
 public:
  static constexpr std::size_t kMaxVars = 12;

  Exponent() = default;
  explicit Exponent(std::size_t nvars);
  Exponent(std::initializer_list<int> entries);
  explicit Exponent(std::span<const int> entries);

  std::size_t size() const { return n_; }
  int operator[](std::size_t i) const { return a_[i]; }
  int& operator[](std::size_t i) { return a_[i]; }

  const int* begin() const { return a_.data(); }
  const int* end() const { return a_.data() + n_; }

  /// Sum of the entries.
  int total() const;
  bool is_zero() const;

  Exponent& operator+=(const Exponent& o);
  Exponent& operator-=(const Exponent& o);
  friend Exponent operator+(Exponent a, const Exponent& b) { return a += b; }
  friend Exponent operator-(Exponent a, const Exponent& b) { return a -= b; }
  Exponent operator-() const;

  Exponent scaled(int r) const;
  /// Copy with coordinate `var` removed.
  Exponent without(std::size_t var) const;
  /// Copy with `value` inserted at position `var`.
  Exponent with_inserted(std::size_t var, int value) const;

  friend bool operator==(const Exponent& a, const Exponent& b) {
    return a.n_ == b.n_ && a.a_ == b.a_;
  }
  /// Lexicographic order, t1 most significant.
  friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b);

  std::string to_string() const;

 private:
  std::array<std::int32_t, kMaxVars> a_{};
  std::uint8_t n_ = 0;
};

}  // namespace mbetti
