#include <functional>
#include <map>
#include <stdexcept>

#include "mbetti/laurent.hpp"

namespace mbetti {

namespace {

// Division of ordinary polynomials where neither f nor g has a monomial
// factor. Any Laurent quotient is then an ordinary polynomial whose degree in
// each variable is exactly deg(f) - deg(g), which bounds the loop.
std::optional<LaurentPoly> divide_polynomials(const LaurentPoly& f, const LaurentPoly& g) {
  const std::size_t n = f.nvars();
  const Exponent fmax = f.max_exponent();
  const Exponent gmax = g.max_exponent();
  Exponent qmax(n);
  for (std::size_t v = 0; v < n; ++v) {
    qmax[v] = fmax[v] - gmax[v];
    if (qmax[v] < 0) return std::nullopt;
  }

  std::map<Exponent, Rational, std::greater<>> rem;
  for (const auto& t : f.terms()) rem.emplace(t.exp, t.coeff);

  const Term& lead = g.leading();
  const Rational lead_inv = 1 / lead.coeff;
  std::vector<Term> quotient;
  Rational prod;
  while (!rem.empty()) {
    auto top = rem.begin();
    Exponent qexp = top->first - lead.exp;
    for (std::size_t v = 0; v < n; ++v)
      if (qexp[v] < 0 || qexp[v] > qmax[v]) return std::nullopt;
    Rational qc = top->second * lead_inv;
    for (const auto& t : g.terms()) {
      Exponent e = t.exp + qexp;
      mpq_mul(prod.get_mpq_t(), t.coeff.get_mpq_t(), qc.get_mpq_t());
      auto [it, inserted] = rem.try_emplace(e);
      it->second -= prod;
      if (sgn(it->second) == 0) rem.erase(it);
    }
    quotient.push_back({qexp, std::move(qc)});
  }
  return LaurentPoly::from_sorted_terms(n, std::move(quotient));
}

}  // namespace

std::optional<LaurentPoly> exact_div(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.nvars() != g.nvars()) throw std::invalid_argument("variable count mismatch in exact_div");
  if (g.is_zero()) throw std::domain_error("division by zero polynomial");
  if (f.is_zero()) return LaurentPoly(f.nvars());
  if (g.is_monomial()) {
    const Term& t = g.terms()[0];
    return f.shifted(-t.exp).scaled(1 / t.coeff);
  }
  const Exponent fmin = f.min_exponent();
  const Exponent gmin = g.min_exponent();
  auto q = divide_polynomials(f.shifted(-fmin), g.shifted(-gmin));
  if (!q) return std::nullopt;
  return q->shifted(fmin - gmin);
}

LaurentPoly integer_primitive(const LaurentPoly& f) {
  if (f.is_zero()) return f;
  Integer den_lcm = 1;
  Integer num_gcd = 0;
  for (const auto& t : f.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (sgn(f.leading().coeff) < 0) scale = -scale;
  return f.scaled(scale);
}

LaurentPoly canonical_associate(const LaurentPoly& f) {
  if (f.is_zero()) return f;
  return integer_primitive(f.shifted(-f.min_exponent()));
}

}  // namespace mbetti
