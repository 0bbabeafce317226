#include "mbetti/laurent.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace mbetti {

namespace {

void require_same_nvars(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars() != b.nvars()) {
    throw std::invalid_argument("variable count mismatch: " + std::to_string(a.nvars()) +
                                " vs " + std::to_string(b.nvars()));
  }
}

// Merges two descending term lists; `sign` = -1 subtracts b.
std::vector<Term> merge_terms(std::span<const Term> a, std::span<const Term> b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto c = a[i].exp <=> b[j].exp;
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].exp, sign > 0 ? b[j].coeff : Rational(-b[j].coeff)});
      ++j;
    } else {
      Rational s = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (sgn(s) != 0) out.push_back({a[i].exp, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].exp, sign > 0 ? b[j].coeff : Rational(-b[j].coeff)});
  return out;
}

// Heap merge of the |a| sorted streams a_i * b. Each stream is descending
// because monomial multiplication preserves lex order.
std::vector<Term> heap_product(std::span<const Term> a, std::span<const Term> b) {
  if (a.size() > b.size()) std::swap(a, b);
  struct Node {
    Exponent exp;
    std::size_t i, j;
  };
  auto less = [](const Node& x, const Node& y) { return x.exp < y.exp; };
  std::priority_queue<Node, std::vector<Node>, decltype(less)> heap(less);
  for (std::size_t i = 0; i < a.size(); ++i) heap.push({a[i].exp + b[0].exp, i, 0});

  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  Rational prod;
  while (!heap.empty()) {
    Node top = heap.top();
    heap.pop();
    mpq_mul(prod.get_mpq_t(), a[top.i].coeff.get_mpq_t(), b[top.j].coeff.get_mpq_t());
    if (!out.empty() && out.back().exp == top.exp) {
      out.back().coeff += prod;
    } else {
      if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
      out.push_back({top.exp, prod});
    }
    if (top.j + 1 < b.size()) heap.push({a[top.i].exp + b[top.j + 1].exp, top.i, top.j + 1});
  }
  if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
  return out;
}

}  // namespace

LaurentPoly::LaurentPoly(std::size_t nvars) : nvars_(nvars) {
  if (nvars > Exponent::kMaxVars) throw std::invalid_argument("too many variables");
}

LaurentPoly LaurentPoly::constant(std::size_t nvars, const Rational& c) {
  LaurentPoly p(nvars);
  if (sgn(c) != 0) p.terms_.push_back({Exponent(nvars), c});
  return p;
}

LaurentPoly LaurentPoly::monomial(const Exponent& exp, const Rational& c) {
  LaurentPoly p(exp.size());
  if (sgn(c) != 0) p.terms_.push_back({exp, c});
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t nvars, std::size_t var) {
  if (var >= nvars) throw std::out_of_range("variable index out of range");
  Exponent e(nvars);
  e[var] = 1;
  return monomial(e);
}

LaurentPoly LaurentPoly::from_terms(std::size_t nvars, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.exp.size() != nvars) throw std::invalid_argument("exponent length does not match nvars");
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return x.exp > y.exp; });
  LaurentPoly p(nvars);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
  return p;
}

LaurentPoly LaurentPoly::from_sorted_terms(std::size_t nvars, std::vector<Term> terms) {
  LaurentPoly p(nvars);
  p.terms_ = std::move(terms);
  return p;
}

const Term& LaurentPoly::leading() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return terms_.front();
}

const Term& LaurentPoly::trailing() const {
  if (terms_.empty()) throw std::domain_error("trailing term of zero polynomial");
  return terms_.back();
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exp.is_zero());
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].exp.is_zero() && terms_[0].coeff == 1;
}

std::optional<int> LaurentPoly::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = terms_[0].exp.total();
  for (const auto& t : terms_)
    if (t.exp.total() != d) return std::nullopt;
  return d;
}

int LaurentPoly::max_degree(std::size_t var) const {
  if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
  if (var >= nvars_) throw std::out_of_range("variable index out of range");
  int m = terms_[0].exp[var];
  for (const auto& t : terms_) m = std::max(m, t.exp[var]);
  return m;
}

int LaurentPoly::min_degree(std::size_t var) const {
  if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
  if (var >= nvars_) throw std::out_of_range("variable index out of range");
  int m = terms_[0].exp[var];
  for (const auto& t : terms_) m = std::min(m, t.exp[var]);
  return m;
}

Exponent LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::domain_error("exponent bounds of zero polynomial");
  Exponent e = terms_[0].exp;
  for (const auto& t : terms_)
    for (std::size_t v = 0; v < nvars_; ++v) e[v] = std::min(e[v], t.exp[v]);
  return e;
}

Exponent LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::domain_error("exponent bounds of zero polynomial");
  Exponent e = terms_[0].exp;
  for (const auto& t : terms_)
    for (std::size_t v = 0; v < nvars_; ++v) e[v] = std::max(e[v], t.exp[v]);
  return e;
}

Rational LaurentPoly::coefficient(const Exponent& exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, const Exponent& e) { return t.exp > e; });
  if (it != terms_.end() && it->exp == exp) return it->coeff;
  return 0;
}

Rational LaurentPoly::coefficient_sum() const {
  Rational s = 0;
  for (const auto& t : terms_) s += t.coeff;
  return s;
}

Rational LaurentPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw std::invalid_argument("evaluation point has wrong length");
  Rational s = 0;
  for (const auto& t : terms_) {
    Rational m = t.coeff;
    for (std::size_t v = 0; v < nvars_; ++v) {
      int k = t.exp[v];
      if (k == 0) continue;
      if (sgn(point[v]) == 0) {
        if (k < 0) throw std::domain_error("negative power of zero");
        m = 0;
        break;
      }
      Rational base = k > 0 ? point[v] : Rational(1 / point[v]);
      Rational pw;
      mpz_pow_ui(pw.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(std::abs(k)));
      mpz_pow_ui(pw.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(std::abs(k)));
      pw.canonicalize();
      m *= pw;
    }
    s += m;
  }
  return s;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  require_same_nvars(*this, o);
  terms_ = merge_terms(terms_, o.terms_, +1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  require_same_nvars(*this, o);
  terms_ = merge_terms(terms_, o.terms_, -1);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  r += b;
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  r -= b;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_nvars(a, b);
  LaurentPoly r(a.nvars());
  if (a.is_zero() || b.is_zero()) return r;
  if (a.size() == 1) return b.shifted(a.terms_[0].exp).scaled(a.terms_[0].coeff);
  if (b.size() == 1) return a.shifted(b.terms_[0].exp).scaled(b.terms_[0].coeff);
  r.terms_ = heap_product(a.terms_, b.terms_);
  return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  if (sgn(c) == 0) return LaurentPoly(nvars_);
  LaurentPoly p = *this;
  if (c == 1) return p;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

LaurentPoly LaurentPoly::shifted(const Exponent& shift) const {
  if (shift.size() != nvars_) throw std::invalid_argument("shift length does not match nvars");
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.exp += shift;
  return p;
}

std::optional<Unit> as_unit(const LaurentPoly& f) {
  if (!f.is_monomial()) return std::nullopt;
  return Unit{f.terms()[0].coeff, f.terms()[0].exp};
}

LaurentPoly frobenius(const LaurentPoly& f, int r) {
  if (r < 1) throw std::invalid_argument("frobenius power must be >= 1");
  std::vector<Term> terms(f.terms().begin(), f.terms().end());
  for (auto& t : terms) t.exp = t.exp.scaled(r);
  return LaurentPoly::from_sorted_terms(f.nvars(), std::move(terms));
}

LaurentPoly set_var_one(const LaurentPoly& f, std::size_t var) {
  if (var >= f.nvars()) throw std::out_of_range("variable index out of range");
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back({t.exp.without(var), t.coeff});
  return LaurentPoly::from_terms(f.nvars() - 1, std::move(terms));
}

LaurentPoly coefficient_of_power(const LaurentPoly& f, std::size_t var, int power) {
  if (var >= f.nvars()) throw std::out_of_range("variable index out of range");
  std::vector<Term> terms;
  for (const auto& t : f.terms())
    if (t.exp[var] == power) terms.push_back({t.exp.without(var), t.coeff});
  if (var == 0) return LaurentPoly::from_sorted_terms(f.nvars() - 1, std::move(terms));
  return LaurentPoly::from_terms(f.nvars() - 1, std::move(terms));
}

LaurentPoly embed(const LaurentPoly& f, std::size_t var, int power) {
  if (var > f.nvars()) throw std::out_of_range("variable index out of range");
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back({t.exp.with_inserted(var, power), t.coeff});
  if (var == 0) return LaurentPoly::from_sorted_terms(f.nvars() + 1, std::move(terms));
  return LaurentPoly::from_terms(f.nvars() + 1, std::move(terms));
}

LaurentPoly overline(const LaurentPoly& f) {
  if (f.is_zero()) throw std::domain_error("overline of zero polynomial");
  if (f.nvars() == 0) throw std::invalid_argument("overline needs at least one variable");
  return coefficient_of_power(f, 0, f.leading().exp[0]);
}

LaurentPoly underline(const LaurentPoly& f) {
  if (f.is_zero()) throw std::domain_error("underline of zero polynomial");
  if (f.nvars() == 0) throw std::invalid_argument("underline needs at least one variable");
  return coefficient_of_power(f, 0, f.trailing().exp[0]);
}

std::pair<Exponent, Rational> lex_leading(const LaurentPoly& f) {
  const Term& t = f.leading();
  return {t.exp, t.coeff};
}

LaurentPoly swap_variables(const LaurentPoly& f, std::size_t var) {
  if (var + 1 >= f.nvars()) throw std::out_of_range("variable index out of range");
  std::vector<Term> terms(f.terms().begin(), f.terms().end());
  for (auto& t : terms) std::swap(t.exp[var], t.exp[var + 1]);
  return LaurentPoly::from_terms(f.nvars(), std::move(terms));
}

bool is_symmetric(const LaurentPoly& f) {
  for (std::size_t v = 0; v + 1 < f.nvars(); ++v)
    if (swap_variables(f, v) != f) return false;
  return true;
}

bool is_homogeneous(const LaurentPoly& f) {
  return f.is_zero() || f.total_degree().has_value();
}

bool same_up_to_unit(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.nvars() != g.nvars()) return false;
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  if (f.size() != g.size()) return false;
  auto q = exact_div(f, g);
  return q && q->is_monomial();
}

}  // namespace mbetti
