#include "support.hpp"

#include <algorithm>
#include <functional>

namespace mbetti::testing {

LaurentPoly product_oracle(const LaurentPoly& a, const LaurentPoly& b) {
  std::map<Exponent, Rational> acc;
  for (const auto& x : a.terms())
    for (const auto& y : b.terms()) acc[x.exp + y.exp] += x.coeff * y.coeff;
  std::vector<Term> terms;
  for (auto& [e, c] : acc)
    if (sgn(c) != 0) terms.push_back({e, c});
  return LaurentPoly::from_terms(a.nvars(), std::move(terms));
}

Integer hook_content(const Partition& lambda, std::size_t n) {
  const std::vector<int> l(lambda.parts().begin(), lambda.parts().end());
  Rational value = 1;
  for (std::size_t i = 0; i < l.size(); ++i) {
    for (int j = 0; j < l[i]; ++j) {
      int below = 0;
      for (std::size_t k = i + 1; k < l.size(); ++k)
        if (l[k] > j) ++below;
      const int hook = (l[i] - j - 1) + below + 1;
      const int content = j - static_cast<int>(i);
      value *= Rational(static_cast<long>(n) + content, hook);
    }
  }
  value.canonicalize();
  return value.get_num();
}

namespace {

LaurentPoly complete_homogeneous(int k, std::size_t n) {
  if (k < 0) return LaurentPoly(n);
  std::vector<Term> terms;
  Exponent e(n);
  std::function<void(std::size_t, int)> rec = [&](std::size_t var, int left) {
    if (var + 1 == n) {
      e[var] = left;
      terms.push_back({e, 1});
      return;
    }
    for (int x = 0; x <= left; ++x) {
      e[var] = x;
      rec(var + 1, left - x);
    }
  };
  rec(0, k);
  return LaurentPoly::from_terms(n, std::move(terms));
}

LaurentPoly laplace(const std::vector<std::vector<LaurentPoly>>& m, std::size_t nvars) {
  const std::size_t k = m.size();
  if (k == 0) return LaurentPoly::constant(nvars, 1);
  LaurentPoly det(nvars);
  for (std::size_t j = 0; j < k; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<LaurentPoly>> minor;
    for (std::size_t i = 1; i < k; ++i) {
      std::vector<LaurentPoly> row;
      for (std::size_t c = 0; c < k; ++c)
        if (c != j) row.push_back(m[i][c]);
      minor.push_back(std::move(row));
    }
    const LaurentPoly term = product_oracle(m[0][j], laplace(minor, nvars));
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

}  // namespace

LaurentPoly jacobi_trudi(const Partition& lambda, std::size_t n) {
  if (lambda.length() > n) return LaurentPoly(n);
  std::vector<int> l;
  for (int x : lambda.parts())
    if (x > 0) l.push_back(x);
  const std::size_t k = l.size();
  std::vector<std::vector<LaurentPoly>> m(k, std::vector<LaurentPoly>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      m[i][j] = complete_homogeneous(l[i] - static_cast<int>(i) + static_cast<int>(j), n);
  return laplace(m, n);
}

std::vector<Partition> partitions_of(int w, std::size_t k) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      std::vector<int> p = cur;
      p.resize(k, 0);
      out.emplace_back(std::move(p));
      return;
    }
    if (cur.size() == k) return;
    for (int x = std::min(left, maxpart); x >= 1; --x) {
      cur.push_back(x);
      rec(left - x, x);
      cur.pop_back();
    }
  };
  rec(w, w);
  return out;
}

namespace {

void utrim(UPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

}  // namespace

UPoly upoly_gcd(UPoly a, UPoly b) {
  utrim(a);
  utrim(b);
  while (!b.empty()) {
    // a mod b
    while (a.size() >= b.size()) {
      const Rational f = a.back() / b.back();
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
      utrim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

UPoly specialize(const LaurentPoly& f, std::size_t keep, const std::vector<Rational>& values) {
  if (f.is_zero()) return {};
  const int lo = f.min_degree(keep);
  UPoly out(static_cast<std::size_t>(f.max_degree(keep) - lo) + 1);
  for (const auto& t : f.terms()) {
    Rational c = t.coeff;
    for (std::size_t j = 0; j < t.exp.size(); ++j) {
      if (j == keep) continue;
      const int e = t.exp[j];
      for (int r = 0; r < std::abs(e); ++r) {
        if (e > 0) c *= values[j];
        else c /= values[j];
      }
    }
    out[static_cast<std::size_t>(t.exp[keep] - lo)] += c;
  }
  utrim(out);
  return out;
}

int specialized_gcd_degree(const LaurentPoly& f, const LaurentPoly& g, std::size_t keep,
                           std::mt19937_64& rng, int samples) {
  std::uniform_int_distribution<int> dist(2, 97);
  int best = -1;
  for (int s = 0; s < samples; ++s) {
    std::vector<Rational> values(f.nvars());
    for (auto& v : values) v = dist(rng);
    UPoly a = specialize(f, keep, values);
    UPoly b = specialize(g, keep, values);
    UPoly h = upoly_gcd(a, b);
    std::size_t zeros = 0;
    while (zeros < h.size() && sgn(h[zeros]) == 0) ++zeros;
    const int deg = static_cast<int>(h.size()) - 1 - static_cast<int>(zeros);
    best = best < 0 ? deg : std::min(best, deg);
  }
  return best;
}

bool hk_fiberwise(const BettiDiagram& d) {
  for (std::size_t k = 0; k < d.nvars(); ++k) {
    std::map<Exponent, Rational> fiber;
    for (const auto& e : d.entries()) {
      const Rational signed_mult = (e.i % 2 == 0) ? e.mult : Rational(-e.mult);
      fiber[e.deg.without(k)] += signed_mult;
    }
    for (const auto& [key, sum] : fiber)
      if (sgn(sum) != 0) return false;
  }
  return true;
}

Valuation valuation_oracle(const LaurentPoly& b0) {
  const std::size_t n = b0.nvars();
  Exponent c = b0.terms()[0].exp;
  for (const auto& t : b0.terms()) {
    if (std::lexicographical_compare(c.begin(), c.end(), t.exp.begin(), t.exp.end())) c = t.exp;
  }
  Valuation v(n);
  for (std::size_t i = 0; i < n; ++i) {
    int b = c[i];
    for (const auto& t : b0.terms()) {
      if (std::equal(c.begin(), c.begin() + static_cast<long>(i), t.exp.begin()))
        b = std::min(b, t.exp[i]);
    }
    v[i] = c[i] - b;
  }
  return v;
}

Rational pure_length(const DifferenceVector& e, const Integer& beta0) {
  Rational len(beta0);
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    d += e[i];
    len *= d;
    len /= static_cast<long>(i + 1);
  }
  return len;
}

std::vector<DifferenceVector> all_difference_vectors(std::size_t n, int max_entry) {
  std::vector<DifferenceVector> out;
  std::vector<int> cur(n, 1);
  while (true) {
    out.emplace_back(cur);
    std::size_t k = n;
    while (k > 0 && cur[k - 1] == max_entry) cur[--k] = 1;
    if (k == 0) break;
    ++cur[k - 1];
  }
  return out;
}

Exponent random_exponent(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Exponent e(n);
  for (std::size_t k = 0; k < n; ++k) e[k] = dist(rng);
  return e;
}

Rational random_rational(std::mt19937_64& rng, int range, bool integral) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, 4);
  int x = 0;
  while (x == 0) x = num(rng);
  Rational q(x, integral ? 1 : den(rng));
  q.canonicalize();
  return q;
}

LaurentPoly random_poly(std::mt19937_64& rng, std::size_t n, std::size_t terms, int lo, int hi,
                        bool integral) {
  while (true) {
    std::vector<Term> ts;
    for (std::size_t k = 0; k < terms; ++k)
      ts.push_back({random_exponent(rng, n, lo, hi), random_rational(rng, 9, integral)});
    LaurentPoly f = LaurentPoly::from_terms(n, std::move(ts));
    if (!f.is_zero()) return f;
  }
}

LaurentPoly random_homogeneous(std::mt19937_64& rng, std::size_t n, std::size_t terms, int deg,
                               int spread, bool integral) {
  while (true) {
    std::vector<Term> ts;
    for (std::size_t k = 0; k < terms; ++k) {
      Exponent e = random_exponent(rng, n, -spread, spread);
      int rest = deg;
      for (std::size_t j = 0; j + 1 < n; ++j) rest -= e[j];
      e[n - 1] = rest;
      ts.push_back({e, random_rational(rng, 9, integral)});
    }
    LaurentPoly f = LaurentPoly::from_terms(n, std::move(ts));
    if (!f.is_zero()) return f;
  }
}

LaurentPoly random_unit(std::mt19937_64& rng, std::size_t n) {
  return LaurentPoly::monomial(random_exponent(rng, n, -3, 3), random_rational(rng, 5, false));
}

}  // namespace mbetti::testing
