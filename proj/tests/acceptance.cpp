// Acceptance run: one PASS/FAIL line per criterion, exact arithmetic only.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "mbetti/betti.hpp"
#include "mbetti/io.hpp"
#include "mbetti/lspace.hpp"
#include "mbetti/schur.hpp"
#include "support.hpp"

using namespace mbetti;
using mbetti::io::parse_poly;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::size_t checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::string str(const DifferenceVector& e) { return e.to_string(); }

LaurentPoly P(const char* s, std::size_t n) { return parse_poly(s, n); }

std::vector<DifferenceVector> small_range() {
  std::vector<DifferenceVector> out;
  for (std::size_t n = 1; n <= 3; ++n)
    for (auto& e : testing::all_difference_vectors(n, 4)) out.push_back(e);
  return out;
}

bool unit_multiple(const BettiTuple& a, const BettiTuple& b) {
  const auto p = decompose(a, b);
  return p && p->is_monomial();
}

BettiDiagram diagram_of(std::size_t n, const std::vector<std::pair<std::size_t, Exponent>>& gens) {
  BettiDiagram d(n);
  for (const auto& [i, deg] : gens) d.add(i, deg, 1);
  return d;
}

// (2,3) equivariant resolution and the two-variable monomial resolution of
// the same type, transcribed from their generator bidegrees.
BettiDiagram beta1() {
  return diagram_of(2, {{0, {2, 0}}, {0, {1, 1}}, {0, {0, 2}}, {1, {4, 0}}, {1, {3, 1}}, {1, {2, 2}},
                        {1, {1, 3}}, {1, {0, 4}}, {2, {4, 3}}, {2, {3, 4}}});
}

BettiDiagram beta2() {
  return diagram_of(2, {{0, {4, 0}}, {0, {2, 2}}, {0, {0, 4}}, {1, {6, 0}}, {1, {4, 2}}, {1, {3, 3}},
                        {1, {2, 4}}, {1, {0, 6}}, {2, {6, 3}}, {2, {3, 6}}});
}

Outcome c1_equivariant() {
  Outcome o;
  const auto d = equivariant(DifferenceVector({2, 3}));
  o.expect(d == beta1(), "equivariant(2,3) differs from the listed bidegrees");
  for (const auto& en : d.entries()) o.expect(en.mult == 1, "multiplicity other than 1");
  const auto c = collapse_total(d);
  const std::map<std::pair<std::size_t, int>, Rational> want = {{{0, 2}, 3}, {{1, 4}, 5}, {{2, 7}, 2}};
  o.expect(c == want, "collapsed ranks are not (3,5,2) at (2,4,7)");
  return o;
}

Outcome c2_bs_comparison() {
  Outcome o;
  const DifferenceVector e({2, 3});
  const auto s = canonical_generator(e);
  const auto b2 = betti_tuple(beta2());
  const auto b1 = betti_tuple(beta1());
  const auto rep = membership(b2, e);
  o.expect(rep.in_space, "beta2 not recognised as a member");
  o.expect(rep.cofactor && *rep.cofactor == P("t1^2 - t1*t2 + t2^2", 2), "cofactor is not t1^2 - t1*t2 + t2^2");
  o.expect(rep.integral, "cofactor reported non-integral");
  o.expect(decompose(b2, s) == P("t1^2 - t1*t2 + t2^2", 2), "decompose against the canonical generator");
  o.expect(!decompose(b1, b2).has_value(), "beta1 decomposes against beta2");
  const auto sum = twist(beta1(), {2, 0}).polynomials() - twist(beta1(), {1, 1}).polynomials() +
                   twist(beta1(), {0, 2}).polynomials();
  o.expect(BettiDiagram::from_tuple(sum) == beta2(), "beta2 = b1(2,0) - b1(1,1) + b1(0,2) fails entrywise");
  return o;
}

Outcome c3_schur_oracle() {
  Outcome o;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int w = 0; w <= 12; ++w) {
      for (const auto& lam : testing::partitions_of(w, std::max<std::size_t>(w, 1))) {
        const bool same = schur_bialternant(lam, n) == schur_ssyt(lam, n);
        o.expect(same, "bialternant != ssyt for " + lam.to_string() + " in " + std::to_string(n) + " variables");
      }
    }
  }
  const Partition l421({4, 2, 1});
  const auto s = schur_bialternant(l421, 3);
  o.expect(s.coefficient_sum() == 15, "s421(1,1,1) != 15");
  o.expect(lex_leading(s) == std::pair<Exponent, Rational>{Exponent{4, 2, 1}, Rational(1)},
           "lex-leading term of s421 is not t1^4*t2^2*t3");
  o.expect(overline(s) == schur_ssyt(Partition({2, 1}), 2), "overline(s421) != s21");
  o.expect(overline(s) == P("t1^2*t2 + t1*t2^2", 2), "overline(s421) != t2^2 t3 + t3^2 t2");
  o.expect(underline(s) == P("t1*t2", 2) * schur_ssyt(Partition({3, 1}), 2), "underline(s421) != t2 t3 s31");
  return o;
}

Outcome c4_gcd() {
  Outcome o;
  for (const auto& e : small_range()) {
    const std::size_t n = e.size();
    std::vector<LaurentPoly> family;
    for (std::size_t i = 0; i <= n; ++i) family.push_back(schur_bialternant(alpha_partition(e, i), n));
    const auto g = gcd(family);
    const int r = e.gcd();
    const auto expect = schur_ssyt(*Partition::staircase(n).scaled(r).minus(Partition::staircase(n)), n);
    o.expect(same_up_to_unit(g, expect), "gcd != s_{r rho - rho} for e = " + str(e));
    const auto ep = e.reduced();
    for (std::size_t i = 0; i <= n; ++i) {
      const auto rhs = expect * frobenius(schur_ssyt(alpha_partition(ep, i), n), r);
      o.expect(family[i] == rhs, "factorization fails for e = " + str(e) + ", i = " + std::to_string(i));
    }
    const auto fam = schur_gcd_family(e);
    o.expect(fam.gcd_poly == expect && fam.r == r, "schur_gcd_family disagrees for e = " + str(e));
  }
  const DifferenceVector e22({2, 2});
  std::vector<LaurentPoly> f22;
  for (std::size_t i = 0; i <= 2; ++i) f22.push_back(schur_bialternant(alpha_partition(e22, i), 2));
  o.expect(gcd(f22) == P("t1 + t2", 2), "gcd for e = (2,2) is not t1 + t2");
  return o;
}

Outcome c5_hk(std::mt19937_64& rng) {
  Outcome o;
  for (const auto& e : small_range()) {
    const std::size_t n = e.size();
    const auto d = equivariant(e);
    o.expect(check_hk(d).pass, "HK fails for equivariant" + str(e));
    for (int k = 0; k < 50; ++k) {
      const int r = 1 + static_cast<int>(rng() % 3);
      const auto t = testing::random_exponent(rng, n, -5, 5);
      const auto v = twist(frobenius_diagram(d, r), t);
      o.expect(check_hk(v).pass, "HK fails on a twist/scaling of equivariant" + str(e));
    }
    for (const auto& en : d.entries()) {
      for (int delta : {-1, 1}) {
        BettiDiagram p = d;
        p.add(en.i, en.deg, delta);
        o.expect(!check_hk(p).pass, "a +-1 perturbation of equivariant" + str(e) + " passes HK");
      }
    }
  }
  return o;
}

Outcome c6_valuation(std::mt19937_64& rng) {
  Outcome o;
  const auto s421 = schur_bialternant(Partition({4, 2, 1}), 3);
  const BettiTuple t({s421, LaurentPoly(3), LaurentPoly(3), LaurentPoly(3)});
  o.expect(valuation(t) == Exponent{3, 1, 0}, "valuation of s421 is not (3,1,0)");
  o.expect(testing::valuation_oracle(s421) == Exponent{3, 1, 0}, "valuation oracle disagrees on s421");
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 1 + k % 4;
    const auto f = testing::random_poly(rng, n, 1 + k % 9, -4, 4, k % 2 == 0);
    if (f.is_zero()) continue;
    const auto u = testing::random_unit(rng, n);
    o.expect(valuation(u * f) == valuation(f), "valuation changes under a unit");
    o.expect(valuation(f) == testing::valuation_oracle(f), "valuation differs from its definition");
  }
  return o;
}

Outcome c7_generator(std::mt19937_64& rng) {
  Outcome o;
  for (const auto& e : small_range()) {
    const std::size_t n = e.size();
    const auto s = canonical_generator(e);
    std::vector<BettiTuple> inputs;
    std::vector<int> a(n, -1);
    for (;;) {
      inputs.push_back(s.shifted(Exponent(std::span<const int>(a))));
      std::size_t k = 0;
      while (k < n && a[k] == 1) a[k++] = -1;
      if (k == n) break;
      ++a[k];
    }
    for (int k = 0; k < 5; ++k) {
      LaurentPoly p;
      do {
        p = testing::random_homogeneous(rng, n, 1 + rng() % 4, static_cast<int>(rng() % 5) - 2, 2);
      } while (p.is_zero());
      inputs.push_back(p * s);
    }
    std::shuffle(inputs.begin(), inputs.end(), rng);
    GeneratorStats stats;
    const auto g = find_generator(inputs, &stats);
    o.expect(unit_multiple(g, s) && unit_multiple(s, g), "generator is not a unit multiple for e = " + str(e));
    for (const auto& chain : stats.chains) {
      bool dec = true;
      for (std::size_t k = 1; k < chain.size(); ++k) dec = dec && chain[k] < chain[k - 1];
      o.expect(dec, "a descend chain is not strictly decreasing for e = " + str(e));
    }
  }
  return o;
}

Outcome c8_collapse(std::mt19937_64& rng) {
  Outcome o;
  const auto range = small_range();
  for (int k = 0; k < 20; ++k) {
    const auto& e = range[(k * 37 + 5) % range.size()];
    const std::size_t n = e.size();
    const auto s = canonical_generator(e);
    LaurentPoly p;
    do {
      p = testing::random_homogeneous(rng, n, 1 + rng() % 5, static_cast<int>(rng() % 7) - 3, 3);
    } while (p.is_zero() || p.coefficient_sum() == 0);
    const auto member = BettiDiagram::from_tuple(p * s);
    const auto rep = membership(member.polynomials(), e);
    o.expect(rep.in_space && rep.integral && rep.cofactor == p, "membership does not recover p for e = " + str(e));
    const int deg = *p.total_degree();
    const Rational mult = p.coefficient_sum();
    o.expect(mult.get_den() == 1, "multiplier is not an integer");
    std::map<std::pair<std::size_t, int>, Rational> want;
    for (const auto& [key, m] : collapse_total(BettiDiagram::from_tuple(s)))
      want[{key.first, key.second + deg}] = mult * m;
    o.expect(collapse_total(member) == want, "collapse is not a multiple of the collapsed generator, e = " + str(e));
  }
  return o;
}

Outcome c9_hilbert() {
  Outcome o;
  for (const auto& e : small_range()) {
    const auto b = equivariant(e).polynomials();
    const auto h = hilbert_numerator(b);
    o.expect(h.has_value(), "no Hilbert numerator for equivariant" + str(e));
    if (h) {
      for (const auto& t : h->terms()) {
        o.expect(t.coeff > 0 && t.coeff.get_den() == 1, "numerator coefficient not a positive integer");
        for (int x : t.exp) o.expect(x >= 0, "numerator has a negative exponent");
      }
      o.expect(h->coefficient_sum() == testing::pure_length(e, b[0].coefficient_sum().get_num()),
               "numerator length differs from the pure-resolution length");
    }
    const auto d = BettiDiagram::from_tuple(b);
    for (const auto& en : d.entries()) {
      BettiDiagram p = d;
      p.add(en.i, en.deg, 1);
      const auto pt = p.polynomials();
      o.expect(hilbert_numerator(pt).has_value() == check_hk(pt).pass,
               "divisibility and HK disagree on a perturbation of " + str(e));
    }
  }
  return o;
}

}  // namespace

int main() {
  std::mt19937_64 rng(20240501);
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 equivariant (2,3) diagram and collapsed ranks", c1_equivariant},
      {"2 comparison with the monomial (2,3) resolution", c2_bs_comparison},
      {"3 bialternant = SSYT, |lambda| <= 12, n <= 4", c3_schur_oracle},
      {"4 gcd of the Schur family and its factorization", c4_gcd},
      {"5 HK equations and perturbations", [&] { return c5_hk(rng); }},
      {"6 valuation of s421 and unit invariance", [&] { return c6_valuation(rng); }},
      {"7 generator recovery from twist windows", [&] { return c7_generator(rng); }},
      {"8 collapse of integral members", [&] { return c8_collapse(rng); }},
      {"9 Hilbert numerators", c9_hilbert},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& ex) {
      o.pass = false;
      o.detail = std::string("exception: ") + ex.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %s (%zu checks, %.2fs)%s%s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.checks, secs,
                o.pass ? "" : ": ", o.detail.c_str());
    if (!o.pass) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
