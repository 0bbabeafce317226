#include "mbetti/lspace.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mbetti {

Valuation valuation(const LaurentPoly& b0) {
  if (b0.is_zero()) throw std::domain_error("valuation of the zero polynomial");
  const std::size_t n = b0.nvars();
  const auto terms = b0.terms();
  const Exponent& c = terms[0].exp;
  Valuation v(n);
  // Terms agreeing with c on a prefix form an initial block of the lex order.
  std::size_t block = terms.size();
  for (std::size_t i = 0; i < n; ++i) {
    int b = c[i];
    std::size_t next = 0;
    for (std::size_t k = 0; k < block; ++k) {
      b = std::min(b, terms[k].exp[i]);
      if (terms[k].exp[i] == c[i]) next = k + 1;
    }
    v[i] = c[i] - b;
    block = next;
  }
  return v;
}

Valuation valuation(const BettiTuple& b) {
  if (b.size() == 0) throw std::domain_error("valuation of an empty tuple");
  if (b[0].is_zero()) {
    throw std::domain_error(b.is_zero() ? "valuation of the zero tuple"
                                        : "B_0 is zero but the tuple is not, so it lies in no L'(e)");
  }
  return valuation(b[0]);
}

Exponent normalizing_shift(const BettiTuple& b) {
  const Valuation v = valuation(b);
  return v - b[0].leading().exp;
}

namespace {

void check_pair(const BettiTuple& a, const BettiTuple& b, const DifferenceVector& e) {
  if (a.size() != b.size() || a.nvars() != b.nvars())
    throw std::invalid_argument("reduction inputs have different shapes");
  if (e.size() != a.nvars())
    throw std::invalid_argument("difference vector length does not match the variable count");
  if (a[0].is_zero() || b[0].is_zero())
    throw std::invalid_argument("reduction inputs must have nonzero B_0");
}

// Coefficients of t1^top in components 1..n, as a tuple in t2..tn.
BettiTuple top_part(const BettiTuple& x, int top) {
  std::vector<LaurentPoly> comps;
  comps.reserve(x.size() - 1);
  for (std::size_t j = 1; j < x.size(); ++j) comps.push_back(coefficient_of_power(x[j], 0, top));
  if (comps[0].is_zero()) {
    throw std::invalid_argument("B_1 has no term in t1-degree " + std::to_string(top) +
                                "; the tuple is not in L'(e)");
  }
  return BettiTuple(std::move(comps));
}

// Content of all components as one rational, so that cur/content is integral
// and primitive.
Rational tuple_content(const BettiTuple& t) {
  Integer den_lcm = 1;
  Integer num_gcd = 0;
  for (const auto& c : t.components()) {
    for (const auto& term : c.terms()) {
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), term.coeff.get_den_mpz_t());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), term.coeff.get_num_mpz_t());
    }
  }
  if (num_gcd == 0) return 1;
  Rational r(num_gcd, den_lcm);
  r.canonicalize();
  return r;
}

Reduction finish(LaurentPoly p, LaurentPoly q, const BettiTuple& a, const BettiTuple& b) {
  if (!p.is_monomial() || !q.is_monomial()) {
    const LaurentPoly g = gcd(p, q);
    if (!g.is_one()) {
      p = *exact_div(p, g);
      q = *exact_div(q, g);
    }
  }
  BettiTuple c = q * b - p * a;
  return {std::move(p), std::move(q), std::move(c)};
}

// Assumes valuation(a) <= valuation(b).
Reduction descend_ordered(const BettiTuple& a, const BettiTuple& b, const DifferenceVector& e,
                          std::vector<Valuation>* chain) {
  const std::size_t n = a.nvars();
  const Valuation va = valuation(a);
  LaurentPoly big_p(n);
  LaurentPoly big_q = LaurentPoly::constant(n, 1);
  BettiTuple cur = b;
  while (!cur[0].is_zero()) {
    const Valuation vc = valuation(cur);
    if (chain) chain->push_back(vc);
    if (vc < va) break;
    Reduction r = reduce_pair(a, cur, e);
    if (!r.c[0].is_zero() && !(valuation(r.c) < vc)) {
      throw std::logic_error("descent did not decrease the valuation: " + vc.to_string() +
                             " -> " + valuation(r.c).to_string());
    }
    big_q = r.q * big_q;
    big_p = r.q * big_p + r.p;
    cur = std::move(r.c);
    const Rational k = tuple_content(cur);
    if (k != 1) {
      const Rational inv = 1 / k;
      cur = cur.scaled(inv);
      big_q = big_q.scaled(inv);
      big_p = big_p.scaled(inv);
    }
  }
  return {std::move(big_p), std::move(big_q), std::move(cur)};
}

}  // namespace

Reduction reduce_pair(const BettiTuple& a, const BettiTuple& b, const DifferenceVector& e) {
  check_pair(a, b, e);
  const std::size_t n = a.nvars();

  if (n == 1) {
    // Homogeneous in one variable: B_0 is a single term.
    if (auto u = as_unit(a[0])) return finish(b[0] * u->inverse().poly(), LaurentPoly::constant(1, 1), a, b);
    return finish(b[0], a[0], a, b);
  }

  const Exponent sa = normalizing_shift(a);
  const Exponent sb = normalizing_shift(b);
  const BettiTuple an = a.shifted(sa);
  const BettiTuple bn = b.shifted(sb);
  const int a1 = an[0].max_degree(0) + e[0];
  const int b1 = bn[0].max_degree(0) + e[0];

  const bool swap = a1 > b1;
  const BettiTuple& x = swap ? bn : an;
  const BettiTuple& y = swap ? an : bn;
  const int x1 = swap ? b1 : a1;
  const int y1 = swap ? a1 : b1;

  // qY' - pX' drops below both inner valuations; lifting gives qY - t1^{y1-x1} pX.
  const Reduction inner = descend(top_part(x, x1), top_part(y, y1), e.tail(1));
  Exponent lift(n);
  lift[0] = y1 - x1;
  const LaurentPoly q = embed(inner.q, 0);
  const LaurentPoly p = embed(inner.p, 0).shifted(lift);

  const LaurentPoly ua = LaurentPoly::monomial(sa);
  const LaurentPoly ub = LaurentPoly::monomial(sb);
  // C = q*(ub*B) - p*(ua*A), or with the roles of A and B exchanged.
  if (!swap) return finish(p * ua, q * ub, a, b);
  return finish(q * ua, p * ub, a, b);
}

Reduction descend(const BettiTuple& a, const BettiTuple& b, const DifferenceVector& e,
                  std::vector<Valuation>* chain) {
  check_pair(a, b, e);
  if (chain) chain->clear();
  if (valuation(a) <= valuation(b)) return descend_ordered(a, b, e, chain);
  // Q*A - P*B = (-P)*B - (-Q)*A.
  Reduction r = descend_ordered(b, a, e, chain);
  return {-r.q, -r.p, std::move(r.c)};
}

namespace {

BettiTuple primitive_tuple(const BettiTuple& t) {
  const LaurentPoly g = gcd(std::span<const LaurentPoly>(t.components()));
  std::vector<LaurentPoly> comps;
  comps.reserve(t.size());
  for (const auto& c : t.components()) {
    auto q = exact_div(c, g);
    if (!q) throw std::logic_error("component gcd does not divide a component");
    comps.push_back(std::move(*q));
  }
  BettiTuple out(std::move(comps));
  const Term& lead = out[0].leading();
  return out.shifted(-out[0].min_exponent()).scaled(1 / lead.coeff);
}

}  // namespace

BettiTuple find_generator(std::span<const BettiTuple> inputs, GeneratorStats* stats) {
  if (inputs.empty()) throw std::invalid_argument("find_generator needs at least one input");
  const std::size_t n = inputs[0].nvars();
  std::vector<int> diffs;
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    const BettiTuple& b = inputs[k];
    const std::string where = "input " + std::to_string(k) + ": ";
    if (b.nvars() != n) throw std::invalid_argument(where + "variable count mismatch");
    if (b.is_zero()) throw std::invalid_argument(where + "zero tuple");
    if (!check_hk(b).pass) throw std::invalid_argument(where + "HK equations fail");
    PurityProfile prof = purity_profile(b);
    if (!prof.pure) throw std::invalid_argument(where + "not pure: " + prof.reason);
    if (k == 0) {
      diffs = prof.differences;
    } else if (prof.differences != diffs) {
      throw std::invalid_argument(where + "difference vector differs from input 0");
    }
  }
  const DifferenceVector e(diffs);

  std::vector<Valuation> vals;
  vals.reserve(inputs.size());
  for (const auto& b : inputs) vals.push_back(valuation(b));
  std::vector<std::size_t> order(inputs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return vals[i] < vals[j]; });

  GeneratorStats local;
  GeneratorStats& st = stats ? *stats : local;
  st = {};

  BettiTuple g = primitive_tuple(inputs[order[0]]);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t idx : order) {
      std::vector<Valuation> chain;
      Reduction r = descend(g, inputs[idx], e, &chain);
      ++st.descend_calls;
      st.reduce_steps += r.c.is_zero() ? chain.size() : chain.size() - 1;
      st.chains.push_back(std::move(chain));
      if (!r.c.is_zero()) {
        if (r.c[0].is_zero()) throw std::logic_error("reduction left L'(e): B_0 vanished");
        g = primitive_tuple(r.c);
        ++st.restarts;
        changed = true;
        break;
      }
    }
  }
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    if (!decompose(inputs[k], g))
      throw std::logic_error("generator does not divide input " + std::to_string(k));
  }
  return g;
}

BettiTuple canonical_generator(const DifferenceVector& e) {
  return betti_tuple(frobenius_diagram(equivariant(e.reduced()), e.gcd()));
}

std::optional<LaurentPoly> decompose(const BettiTuple& b, const BettiTuple& s) {
  if (b.size() != s.size() || b.nvars() != s.nvars())
    throw std::invalid_argument("decompose: tuples have different shapes");
  if (s[0].is_zero()) throw std::invalid_argument("decompose: generator has zero B_0");
  auto p = exact_div(b[0], s[0]);
  if (!p) return std::nullopt;
  for (std::size_t i = 1; i < b.size(); ++i)
    if (*p * s[i] != b[i]) return std::nullopt;
  return p;
}

bool integral_by_peeling(const LaurentPoly& p, const LaurentPoly& s0) {
  const Term& lead = s0.leading();
  if (lead.coeff != 1) throw std::invalid_argument("peeling needs a lex-leading coefficient of 1");
  LaurentPoly rest = p * s0;
  while (!rest.is_zero()) {
    const Term& t = rest.leading();
    if (t.coeff.get_den() != 1) return false;
    rest -= LaurentPoly::monomial(t.exp - lead.exp, t.coeff) * s0;
  }
  return true;
}

MembershipReport membership(const BettiTuple& b, const DifferenceVector& e) {
  MembershipReport rep;
  if (b.nvars() != e.size()) {
    rep.reasons.push_back("tuple has " + std::to_string(b.nvars()) +
                          " variables but e has length " + std::to_string(e.size()));
    return rep;
  }
  const BettiTuple s = canonical_generator(e);
  rep.generator = s;
  if (b.is_zero()) {
    rep.in_space = true;
    rep.integral = true;
    rep.cofactor = LaurentPoly(b.nvars());
    return rep;
  }

  const PurityProfile prof = purity_profile(b);
  if (!prof.pure) {
    rep.reasons.push_back("not pure: " + prof.reason);
  } else if (prof.differences != std::vector<int>(e.entries().begin(), e.entries().end())) {
    rep.reasons.push_back("difference vector " + DifferenceVector(prof.differences).to_string() +
                          " does not match e = " + e.to_string());
  }
  const HkReport hk = check_hk(b);
  if (!hk.pass) {
    rep.reasons.push_back("HK equations fail at t" + std::to_string(*hk.failing_var + 1) + " = 1");
  }
  if (!rep.reasons.empty()) return rep;

  auto p = decompose(b, s);
  if (!p) {
    rep.reasons.push_back("not a Laurent multiple of the canonical generator");
    return rep;
  }
  bool by_denominators = true;
  for (const auto& t : p->terms())
    if (t.coeff.get_den() != 1) by_denominators = false;
  const bool by_peeling = integral_by_peeling(*p, s[0]);
  if (by_denominators != by_peeling)
    throw std::logic_error("integrality tests disagree");
  rep.in_space = true;
  rep.integral = by_denominators;
  rep.cofactor = std::move(*p);
  return rep;
}

}  // namespace mbetti
