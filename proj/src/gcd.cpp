// Multivariate gcd over Q.
//
// Laurent inputs are first shifted by a unit into ordinary polynomials without
// monomial factors. A heuristic gcd (evaluate a variable at a large integer,
// recurse, rebuild from the balanced digits, verify by division) is tried
// first. When it gives up, the recursion works in Q[x_v, ..., x_{n-1}], viewing
// a polynomial as univariate in x_v with coefficients in the later variables,
// and runs a primitive pseudo-remainder sequence in x_v.

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "mbetti/laurent.hpp"

namespace mbetti {

namespace {

// Coefficients indexed by degree in the main variable. Coefficients keep the
// full variable count with exponent 0 in the main variable.
using Upoly = std::vector<LaurentPoly>;

Upoly to_univariate(const LaurentPoly& f, std::size_t v) {
  const int deg = f.max_degree(v);
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(deg) + 1);
  // Variables before v are absent, so fixing e_v keeps the remaining terms sorted.
  for (const auto& t : f.terms()) {
    Term c = t;
    c.exp[v] = 0;
    buckets[static_cast<std::size_t>(t.exp[v])].push_back(std::move(c));
  }
  Upoly u;
  u.reserve(buckets.size());
  for (auto& b : buckets) u.push_back(LaurentPoly::from_sorted_terms(f.nvars(), std::move(b)));
  return u;
}

LaurentPoly from_univariate(const Upoly& u, std::size_t v, std::size_t nvars) {
  std::vector<Term> terms;
  for (std::size_t d = u.size(); d-- > 0;) {
    for (const auto& t : u[d].terms()) {
      Term c = t;
      c.exp[v] = static_cast<int>(d);
      terms.push_back(std::move(c));
    }
  }
  return LaurentPoly::from_sorted_terms(nvars, std::move(terms));
}

void trim(Upoly& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

// Scales u by a rational so that all coefficients are coprime integers with
// a positive leading coefficient.
void integer_normalize(Upoly& u) {
  Integer den_lcm = 1;
  Integer num_gcd = 0;
  for (const auto& c : u) {
    for (const auto& t : c.terms()) {
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
    }
  }
  if (num_gcd == 0) return;
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (sgn(u.back().leading().coeff) < 0) scale = -scale;
  if (scale == 1) return;
  for (auto& c : u) c = c.scaled(scale);
}

LaurentPoly gcd_rec(const LaurentPoly& a, const LaurentPoly& b, std::size_t v);

LaurentPoly content(const Upoly& u, std::size_t v) {
  LaurentPoly g;
  bool first = true;
  for (std::size_t d = u.size(); d-- > 0;) {
    if (u[d].is_zero()) continue;
    if (first) {
      g = integer_primitive(u[d]);
      first = false;
    } else {
      g = gcd_rec(g, u[d], v + 1);
    }
    if (g.is_one()) break;
  }
  return g;
}

void divide_out(Upoly& u, const LaurentPoly& c) {
  if (c.is_one()) return;
  for (auto& coeff : u) {
    if (coeff.is_zero()) continue;
    auto q = exact_div(coeff, c);
    if (!q) throw std::logic_error("gcd: content does not divide coefficient");
    coeff = std::move(*q);
  }
}

// Pseudo-remainder of a by b in the main variable; deg a >= deg b >= 1.
Upoly prem(Upoly r, const Upoly& b) {
  const LaurentPoly& lb = b.back();
  while (r.size() >= b.size()) {
    const std::size_t k = r.size() - b.size();
    const LaurentPoly lr = r.back();
    for (auto& c : r) c = c * lb;
    for (std::size_t j = 0; j < b.size(); ++j) r[j + k] -= lr * b[j];
    trim(r);
  }
  return r;
}

LaurentPoly one_like(const LaurentPoly& a) { return LaurentPoly::constant(a.nvars(), 1); }

// Divisibility among ordinary polynomials; Laurent division alone would also
// accept quotients with negative exponents.
bool poly_divides(const LaurentPoly& b, const LaurentPoly& a) {
  const auto q = exact_div(a, b);
  if (!q) return false;
  for (int x : q->min_exponent())
    if (x < 0) return false;
  return true;
}

// Heuristic gcd over Z of polynomials with integer coefficients and no
// variables before v. Returns nullopt when it gives up.
std::optional<LaurentPoly> heuristic_gcd(const LaurentPoly& a, const LaurentPoly& b, std::size_t v);

Integer int_content(const LaurentPoly& f) {
  Integer g = 0;
  for (const auto& t : f.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
  return g;
}

Integer max_norm(const LaurentPoly& f) {
  Integer m = 0;
  for (const auto& t : f.terms()) m = std::max<Integer>(m, abs(t.coeff.get_num()));
  return m;
}

LaurentPoly evaluate_at(const LaurentPoly& f, std::size_t w, const Integer& xi) {
  std::vector<Term> ts;
  ts.reserve(f.size());
  for (const auto& t : f.terms()) {
    Integer p;
    mpz_pow_ui(p.get_mpz_t(), xi.get_mpz_t(), static_cast<unsigned long>(t.exp[w]));
    Term c{t.exp, t.coeff * Rational(p)};
    c.exp[w] = 0;
    ts.push_back(std::move(c));
  }
  return LaurentPoly::from_terms(f.nvars(), std::move(ts));
}

// Inverse of evaluate_at through balanced base-xi digits.
std::optional<LaurentPoly> rebuild(LaurentPoly gamma, std::size_t w, const Integer& xi, int max_deg) {
  const Integer half = xi / 2;
  std::vector<Term> out;
  for (int k = 0; !gamma.is_zero(); ++k) {
    if (k > max_deg) return std::nullopt;
    std::vector<Term> digit;
    for (const auto& t : gamma.terms()) {
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), t.coeff.get_num_mpz_t(), xi.get_mpz_t());
      if (r > half) r -= xi;
      if (r != 0) digit.push_back({t.exp, Rational(r)});
    }
    const LaurentPoly d = LaurentPoly::from_sorted_terms(gamma.nvars(), digit);
    gamma = (gamma - d).scaled(Rational(1) / Rational(xi));
    for (auto& t : digit) {
      t.exp[w] = k;
      out.push_back(std::move(t));
    }
  }
  return LaurentPoly::from_terms(gamma.nvars(), std::move(out));
}

std::optional<LaurentPoly> heuristic_gcd(const LaurentPoly& a, const LaurentPoly& b, std::size_t v) {
  const std::size_t n = a.nvars();
  const Integer ca = int_content(a);
  const Integer cb = int_content(b);
  Integer c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  std::size_t w = v;
  while (w < n && a.max_degree(w) == 0 && b.max_degree(w) == 0) ++w;
  if (w == n || a.is_constant() || b.is_constant()) return LaurentPoly::constant(n, Rational(c));
  const LaurentPoly pa = a.scaled(Rational(1) / Rational(ca));
  const LaurentPoly pb = b.scaled(Rational(1) / Rational(cb));
  const int deg = std::max(pa.max_degree(w), pb.max_degree(w));
  Integer xi = 2 * std::min(max_norm(pa), max_norm(pb)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) * static_cast<std::size_t>(deg + 1) > 200000) return std::nullopt;
    const auto gamma = heuristic_gcd(evaluate_at(pa, w, xi), evaluate_at(pb, w, xi), w + 1);
    if (!gamma) return std::nullopt;
    if (auto g = rebuild(*gamma, w, xi, deg); g && !g->is_zero()) {
      const LaurentPoly h = integer_primitive(*g);
      if (poly_divides(h, pa) && poly_divides(h, pb)) return h.scaled(Rational(c));
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

// a, b nonzero ordinary polynomials free of variables before v.
LaurentPoly gcd_rec(const LaurentPoly& a, const LaurentPoly& b, std::size_t v) {
  const std::size_t n = a.nvars();
  if (a.is_constant() || b.is_constant()) return one_like(a);
  if (v >= n) return one_like(a);
  const int da = a.max_degree(v);
  const int db = b.max_degree(v);
  if (da == 0 && db == 0) return gcd_rec(a, b, v + 1);
  if (da == 0) return gcd_rec(a, content(to_univariate(b, v), v), v + 1);
  if (db == 0) return gcd_rec(content(to_univariate(a, v), v), b, v + 1);

  Upoly ua = to_univariate(a, v);
  Upoly ub = to_univariate(b, v);
  const LaurentPoly ca = content(ua, v);
  const LaurentPoly cb = content(ub, v);
  const LaurentPoly c = gcd_rec(ca, cb, v + 1);
  divide_out(ua, ca);
  divide_out(ub, cb);
  integer_normalize(ua);
  integer_normalize(ub);
  if (ua.size() < ub.size()) std::swap(ua, ub);

  Upoly g;
  if (poly_divides(from_univariate(ub, v, n), from_univariate(ua, v, n))) {
    g = std::move(ub);
  } else {
    while (true) {
      Upoly r = prem(ua, ub);
      if (r.empty()) {
        g = std::move(ub);
        break;
      }
      if (r.size() == 1) {
        g = {one_like(a)};
        break;
      }
      divide_out(r, content(r, v));
      integer_normalize(r);
      ua = std::move(ub);
      ub = std::move(r);
    }
  }
  return integer_primitive(from_univariate(g, v, n) * c);
}

LaurentPoly gcd_impl(const LaurentPoly& f, const LaurentPoly& g, bool heuristic) {
  if (f.nvars() != g.nvars()) throw std::invalid_argument("variable count mismatch in gcd");
  if (f.is_zero() && g.is_zero()) throw std::domain_error("gcd of two zero polynomials");
  if (f.is_zero()) return canonical_associate(g);
  if (g.is_zero()) return canonical_associate(f);
  const LaurentPoly a = canonical_associate(f);
  const LaurentPoly b = canonical_associate(g);
  if (a.is_one() || b.is_one()) return LaurentPoly::constant(f.nvars(), 1);
  if (a == b) return a;
  if (heuristic) {
    if (auto h = heuristic_gcd(a, b, 0)) return canonical_associate(*h);
  }
  return canonical_associate(gcd_rec(a, b, 0));
}

}  // namespace

LaurentPoly gcd(const LaurentPoly& f, const LaurentPoly& g) { return gcd_impl(f, g, true); }

LaurentPoly gcd_prs(const LaurentPoly& f, const LaurentPoly& g) { return gcd_impl(f, g, false); }

LaurentPoly gcd(std::span<const LaurentPoly> polys) {
  LaurentPoly g;
  bool seen = false;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    if (seen && p.nvars() != g.nvars()) throw std::invalid_argument("variable count mismatch in gcd");
    g = seen ? gcd(g, p) : canonical_associate(p);
    seen = true;
    if (g.is_one()) break;
  }
  if (!seen) throw std::domain_error("gcd of zero polynomials");
  return g;
}

}  // namespace mbetti
