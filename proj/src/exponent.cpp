#include "mbetti/exponent.hpp"

#include <stdexcept>

namespace mbetti {

namespace {
void check_size(std::size_t n) {
  if (n > Exponent::kMaxVars) {
    throw std::invalid_argument("too many variables: " + std::to_string(n) + " (max " +
                                std::to_string(Exponent::kMaxVars) + ")");
  }
}
}  // namespace

Exponent::Exponent(std::size_t nvars) {
  check_size(nvars);
  n_ = static_cast<std::uint8_t>(nvars);
}

Exponent::Exponent(std::initializer_list<int> entries) {
  check_size(entries.size());
  n_ = static_cast<std::uint8_t>(entries.size());
  std::size_t i = 0;
  for (int v : entries) a_[i++] = v;
}

Exponent::Exponent(std::span<const int> entries) {
  check_size(entries.size());
  n_ = static_cast<std::uint8_t>(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) a_[i] = entries[i];
}

int Exponent::total() const {
  int s = 0;
  for (std::size_t i = 0; i < n_; ++i) s += a_[i];
  return s;
}

bool Exponent::is_zero() const {
  for (std::size_t i = 0; i < n_; ++i)
    if (a_[i] != 0) return false;
  return true;
}

Exponent& Exponent::operator+=(const Exponent& o) {
  if (o.n_ != n_) throw std::invalid_argument("exponent length mismatch");
  for (std::size_t i = 0; i < n_; ++i) a_[i] += o.a_[i];
  return *this;
}

Exponent& Exponent::operator-=(const Exponent& o) {
  if (o.n_ != n_) throw std::invalid_argument("exponent length mismatch");
  for (std::size_t i = 0; i < n_; ++i) a_[i] -= o.a_[i];
  return *this;
}

Exponent Exponent::operator-() const {
  Exponent r = *this;
  for (std::size_t i = 0; i < n_; ++i) r.a_[i] = -r.a_[i];
  return r;
}

Exponent Exponent::scaled(int r) const {
  Exponent out = *this;
  for (std::size_t i = 0; i < n_; ++i) out.a_[i] *= r;
  return out;
}

Exponent Exponent::without(std::size_t var) const {
  if (var >= n_) throw std::out_of_range("variable index out of range");
  Exponent out(static_cast<std::size_t>(n_ - 1));
  for (std::size_t i = 0, j = 0; i < n_; ++i)
    if (i != var) out.a_[j++] = a_[i];
  return out;
}

Exponent Exponent::with_inserted(std::size_t var, int value) const {
  if (var > n_) throw std::out_of_range("variable index out of range");
  Exponent out(static_cast<std::size_t>(n_ + 1));
  for (std::size_t i = 0, j = 0; i <= n_; ++i) out.a_[i] = (i == var) ? value : a_[j++];
  return out;
}

std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
  if (a.n_ != b.n_) return a.n_ <=> b.n_;
  for (std::size_t i = 0; i < a.n_; ++i) {
    if (a.a_[i] != b.a_[i]) return a.a_[i] <=> b.a_[i];
  }
  return std::strong_ordering::equal;
}

std::string Exponent::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) s += ',';
    s += std::to_string(a_[i]);
  }
  return s + ")";
}

}  // namespace mbetti
