#include "mbetti/schur.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace mbetti {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition parts must be nonnegative");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition Partition::staircase(std::size_t n) {
  std::vector<int> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>(n - 1 - i);
  return Partition(std::move(p));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::size_t Partition::length() const {
  std::size_t k = 0;
  for (int p : parts_)
    if (p > 0) ++k;
  return k;
}

Partition Partition::padded(std::size_t n) const {
  if (length() > n) {
    throw std::invalid_argument("partition " + to_string() + " has more than " +
                                std::to_string(n) + " nonzero parts");
  }
  std::vector<int> p(parts_.begin(), parts_.begin() + static_cast<long>(std::min(n, parts_.size())));
  p.resize(n, 0);
  return Partition(std::move(p));
}

Partition Partition::overline() const {
  if (parts_.empty()) throw std::invalid_argument("overline of empty partition");
  return Partition(std::vector<int>(parts_.begin() + 1, parts_.end()));
}

Partition Partition::underline() const {
  if (parts_.empty()) throw std::invalid_argument("underline of empty partition");
  std::vector<int> p(parts_.begin(), parts_.end() - 1);
  for (int& x : p) x -= parts_.back();
  return Partition(std::move(p));
}

Partition Partition::scaled(int r) const {
  if (r < 0) throw std::invalid_argument("negative partition scale");
  std::vector<int> p = parts_;
  for (int& x : p) x *= r;
  return Partition(std::move(p));
}

Partition Partition::operator+(const Partition& o) const {
  if (o.size() != size()) throw std::invalid_argument("partition length mismatch");
  std::vector<int> p = parts_;
  for (std::size_t i = 0; i < p.size(); ++i) p[i] += o.parts_[i];
  return Partition(std::move(p));
}

std::optional<Partition> Partition::minus(const Partition& o) const {
  if (o.size() != size()) throw std::invalid_argument("partition length mismatch");
  std::vector<int> p = parts_;
  for (std::size_t i = 0; i < p.size(); ++i) {
    p[i] -= o.parts_[i];
    if (p[i] < 0 || (i > 0 && p[i] > p[i - 1])) return std::nullopt;
  }
  return Partition(std::move(p));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

DifferenceVector::DifferenceVector(std::vector<int> entries) : e_(std::move(entries)) {
  if (e_.empty()) throw std::invalid_argument("difference vector must be nonempty");
  if (e_.size() > Exponent::kMaxVars) throw std::invalid_argument("difference vector too long");
  int g = 0;
  for (int x : e_) {
    if (x < 1) throw std::invalid_argument("difference vector entries must be >= 1");
    g = std::gcd(g, x);
  }
  r_ = g;
}

DifferenceVector DifferenceVector::reduced() const {
  std::vector<int> p = e_;
  for (int& x : p) x /= r_;
  return DifferenceVector(std::move(p));
}

DifferenceVector DifferenceVector::tail(std::size_t from) const {
  if (from >= e_.size()) throw std::out_of_range("difference vector tail out of range");
  return DifferenceVector(std::vector<int>(e_.begin() + static_cast<long>(from), e_.end()));
}

std::string DifferenceVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(e_[i]);
  }
  return s + ")";
}

namespace {

using Matrix = std::vector<std::vector<LaurentPoly>>;

LaurentPoly cofactor_det(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  LaurentPoly det(m[0][0].nvars());
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    Matrix minor(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      minor[i - 1].reserve(n - 1);
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) minor[i - 1].push_back(m[i][k]);
    }
    LaurentPoly term = m[0][j] * cofactor_det(minor);
    if (j % 2 == 0) det += term; else det -= term;
  }
  return det;
}

LaurentPoly bareiss_det(Matrix m) {
  const std::size_t n = m.size();
  const std::size_t nv = m[0][0].nvars();
  LaurentPoly prev = LaurentPoly::constant(nv, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return LaurentPoly(nv);
      std::swap(m[k], m[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        auto q = exact_div(num, prev);
        if (!q) throw std::logic_error("Bareiss step is not exact");
        m[i][j] = std::move(*q);
      }
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace

LaurentPoly determinant(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("determinant of empty matrix");
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("determinant of non-square matrix");
    for (const auto& x : row)
      if (x.nvars() != m[0][0].nvars()) throw std::invalid_argument("variable count mismatch");
  }
  return n <= 4 ? cofactor_det(m) : bareiss_det(m);
}

LaurentPoly vandermonde(std::size_t n) {
  LaurentPoly d = LaurentPoly::constant(n, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      d *= LaurentPoly::variable(n, j) - LaurentPoly::variable(n, i);
  return d;
}

LaurentPoly schur_bialternant(const Partition& lambda, std::size_t nvars) {
  if (nvars == 0) throw std::invalid_argument("schur polynomial needs at least one variable");
  if (lambda.length() > nvars) return LaurentPoly(nvars);
  const Partition l = lambda.padded(nvars);
  const std::size_t n = nvars;

  Matrix num(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Exponent e(n);
      e[i] = l[j] + static_cast<int>(n - 1 - j);
      num[i][j] = LaurentPoly::monomial(e);
    }
  }
  auto q = exact_div(determinant(num), vandermonde(n));
  if (!q) throw std::logic_error("bialternant numerator not divisible by Vandermonde");
  // |t_i^{n-j}| = (-1)^{n(n-1)/2} * prod_{i<j}(t_j - t_i).
  LaurentPoly s = ((n * (n - 1) / 2) % 2 == 1) ? -*q : *q;
  for (const auto& t : s.terms()) {
    if (sgn(t.coeff) <= 0 || t.coeff.get_den() != 1)
      throw std::logic_error("Schur polynomial " + lambda.to_string() +
                             " has a non-positive-integer coefficient");
  }
  return s;
}

LaurentPoly schur_ssyt(const Partition& lambda, std::size_t nvars) {
  if (nvars == 0) throw std::invalid_argument("schur polynomial needs at least one variable");
  const std::size_t n = nvars;
  if (lambda.length() > n) return LaurentPoly(n);
  const Partition l = lambda.padded(n);

  std::vector<int> rows;
  for (std::size_t r = 0; r < n; ++r)
    if (l[r] > 0) rows.push_back(l[r]);
  std::vector<int> col_height(rows.empty() ? 0 : static_cast<std::size_t>(rows[0]), 0);
  for (int len : rows)
    for (int c = 0; c < len; ++c) ++col_height[static_cast<std::size_t>(c)];

  std::vector<std::vector<int>> tab(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) tab[r].assign(static_cast<std::size_t>(rows[r]), 0);

  std::map<Exponent, long> counts;
  Exponent content(n);

  // Fill row-major; entries weakly increase along rows, strictly down columns.
  auto fill = [&](auto&& self, std::size_t r, std::size_t c) -> void {
    if (r == rows.size()) {
      ++counts[content];
      return;
    }
    if (c == tab[r].size()) {
      self(self, r + 1, 0);
      return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, tab[r][c - 1]);
    if (r > 0) lo = std::max(lo, tab[r - 1][c] + 1);
    const int below = col_height[c] - 1 - static_cast<int>(r);
    const int hi = static_cast<int>(n) - below;
    for (int v = lo; v <= hi; ++v) {
      tab[r][c] = v;
      ++content[static_cast<std::size_t>(v - 1)];
      self(self, r, c + 1);
      --content[static_cast<std::size_t>(v - 1)];
    }
  };
  fill(fill, 0, 0);

  std::vector<Term> terms;
  terms.reserve(counts.size());
  for (auto it = counts.rbegin(); it != counts.rend(); ++it) terms.push_back({it->first, it->second});
  return LaurentPoly::from_sorted_terms(n, std::move(terms));
}

Partition alpha_partition(const DifferenceVector& e, std::size_t i) {
  const std::size_t n = e.size();
  if (i > n) throw std::out_of_range("alpha_partition index out of range");
  std::vector<int> lam(n, 0);
  for (std::size_t k = n - 1; k-- > 0;) lam[k] = lam[k + 1] + e[k + 1] - 1;
  for (std::size_t k = 0; k < i; ++k) lam[k] += e[k];
  return Partition(std::move(lam));
}

SchurFamilyGcd schur_gcd_family(const DifferenceVector& e) {
  const std::size_t n = e.size();
  const int r = e.gcd();
  const DifferenceVector reduced = e.reduced();

  SchurFamilyGcd out;
  out.r = r;
  out.gcd_poly = schur_bialternant(Partition::staircase(n).scaled(r - 1), n);
  for (std::size_t i = 0; i <= n; ++i) {
    LaurentPoly cof = frobenius(schur_bialternant(alpha_partition(reduced, i), n), r);
    if (out.gcd_poly * cof != schur_bialternant(alpha_partition(e, i), n)) {
      throw std::logic_error("Schur family factorization failed for e = " + e.to_string());
    }
    out.cofactors.push_back(std::move(cof));
  }
  return out;
}

LaurentPoly xi(int a) {
  if (a < 1) throw std::invalid_argument("xi index must be >= 1");
  std::vector<Term> terms;
  for (int k = a - 1; k >= 0; --k) terms.push_back({Exponent{k, a - 1 - k}, 1});
  return LaurentPoly::from_sorted_terms(2, std::move(terms));
}

}  // namespace mbetti
