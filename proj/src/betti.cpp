#include "mbetti/betti.hpp"

#include <set>

namespace mbetti {

BettiTuple::BettiTuple(std::vector<LaurentPoly> components) : comps_(std::move(components)) {
  if (comps_.size() < 2) throw std::invalid_argument("Betti tuple needs at least two components");
  nvars_ = comps_.size() - 1;
  for (const auto& c : comps_) {
    if (c.nvars() != nvars_) {
      throw std::invalid_argument("Betti tuple of length " + std::to_string(comps_.size()) +
                                  " needs components in " + std::to_string(nvars_) + " variables");
    }
  }
}

BettiTuple BettiTuple::zero(std::size_t nvars) {
  if (nvars == 0) throw std::invalid_argument("Betti tuple needs at least one variable");
  return BettiTuple(std::vector<LaurentPoly>(nvars + 1, LaurentPoly(nvars)));
}

bool BettiTuple::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

bool BettiTuple::is_homogeneous() const {
  for (const auto& c : comps_)
    if (!mbetti::is_homogeneous(c)) return false;
  return true;
}

std::vector<std::optional<int>> BettiTuple::degrees() const {
  std::vector<std::optional<int>> d;
  d.reserve(comps_.size());
  for (const auto& c : comps_) d.push_back(c.total_degree());
  return d;
}

LaurentPoly BettiTuple::alternating_sum() const {
  LaurentPoly s(nvars_);
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (i % 2 == 0) s += comps_[i]; else s -= comps_[i];
  }
  return s;
}

BettiTuple BettiTuple::operator-() const {
  BettiTuple r = *this;
  for (auto& c : r.comps_) c = -c;
  return r;
}

BettiTuple operator+(const BettiTuple& a, const BettiTuple& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Betti tuple length mismatch");
  BettiTuple r = a;
  for (std::size_t i = 0; i < r.comps_.size(); ++i) r.comps_[i] += b.comps_[i];
  return r;
}

BettiTuple operator-(const BettiTuple& a, const BettiTuple& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Betti tuple length mismatch");
  BettiTuple r = a;
  for (std::size_t i = 0; i < r.comps_.size(); ++i) r.comps_[i] -= b.comps_[i];
  return r;
}

BettiTuple operator*(const LaurentPoly& p, const BettiTuple& b) {
  BettiTuple r = b;
  for (auto& c : r.comps_) c = p * c;
  return r;
}

BettiTuple BettiTuple::shifted(const Exponent& shift) const {
  BettiTuple r = *this;
  for (auto& c : r.comps_) c = c.shifted(shift);
  return r;
}

BettiTuple BettiTuple::scaled(const Rational& c) const {
  BettiTuple r = *this;
  for (auto& x : r.comps_) x = x.scaled(c);
  return r;
}

BettiDiagram::BettiDiagram(std::size_t nvars)
    : nvars_(nvars), slices_(nvars + 1, LaurentPoly(nvars)) {
  if (nvars == 0) throw std::invalid_argument("Betti diagram needs at least one variable");
}

BettiDiagram BettiDiagram::from_tuple(const BettiTuple& b) {
  BettiDiagram d(b.nvars());
  d.slices_ = b.components();
  return d;
}

void BettiDiagram::check(std::size_t i, const Exponent& deg) const {
  if (i > nvars_) throw std::out_of_range("homological index " + std::to_string(i) + " out of range");
  if (deg.size() != nvars_) throw std::invalid_argument("multidegree has wrong length");
}

Rational BettiDiagram::mult(std::size_t i, const Exponent& deg) const {
  check(i, deg);
  return slices_[i].coefficient(deg);
}

void BettiDiagram::set(std::size_t i, const Exponent& deg, const Rational& m) {
  add(i, deg, m - mult(i, deg));
}

void BettiDiagram::add(std::size_t i, const Exponent& deg, const Rational& m) {
  check(i, deg);
  slices_[i] += LaurentPoly::monomial(deg, m);
}

const LaurentPoly& BettiDiagram::slice(std::size_t i) const {
  if (i > nvars_) throw std::out_of_range("homological index out of range");
  return slices_[i];
}

std::vector<BettiDiagram::Entry> BettiDiagram::entries() const {
  std::vector<Entry> out;
  for (std::size_t i = 0; i < slices_.size(); ++i)
    for (const auto& t : slices_[i].terms()) out.push_back({i, t.exp, t.coeff});
  return out;
}

BettiTuple BettiDiagram::polynomials() const { return BettiTuple(slices_); }

bool BettiDiagram::is_zero() const {
  for (const auto& s : slices_)
    if (!s.is_zero()) return false;
  return true;
}

bool BettiDiagram::is_integral() const {
  for (const auto& s : slices_)
    for (const auto& t : s.terms())
      if (t.coeff.get_den() != 1) return false;
  return true;
}

bool BettiDiagram::is_nonnegative() const {
  for (const auto& s : slices_)
    for (const auto& t : s.terms())
      if (sgn(t.coeff) < 0) return false;
  return true;
}

Rational BettiDiagram::rank(std::size_t i) const { return slice(i).coefficient_sum(); }

NotPureError::NotPureError(PurityProfile profile)
    : std::runtime_error("diagram is not pure: " + profile.reason), profile_(std::move(profile)) {}

namespace {

std::vector<int> slot_degrees(const LaurentPoly& p) {
  std::set<int> ds;
  for (const auto& t : p.terms()) ds.insert(t.exp.total());
  return {ds.begin(), ds.end()};
}

}  // namespace

PurityProfile purity_profile(const BettiTuple& b) {
  PurityProfile prof;
  for (std::size_t i = 0; i < b.size(); ++i) {
    std::vector<int> ds = slot_degrees(b[i]);
    if (ds.empty()) {
      prof.witness_index = i;
      prof.reason = "homological slot " + std::to_string(i) + " is zero";
      return prof;
    }
    if (ds.size() > 1) {
      prof.witness_index = i;
      prof.witness_degrees = ds;
      prof.reason = "homological slot " + std::to_string(i) + " has several total degrees";
      return prof;
    }
    if (!prof.degrees.empty() && ds[0] <= prof.degrees.back()) {
      prof.witness_index = i;
      prof.witness_degrees = {prof.degrees.back(), ds[0]};
      prof.reason = "total degree does not increase at homological slot " + std::to_string(i);
      return prof;
    }
    prof.degrees.push_back(ds[0]);
  }
  for (std::size_t i = 1; i < prof.degrees.size(); ++i)
    prof.differences.push_back(prof.degrees[i] - prof.degrees[i - 1]);
  prof.pure = true;
  return prof;
}

PurityProfile purity_profile(const BettiDiagram& diag) { return purity_profile(diag.polynomials()); }

BettiTuple betti_tuple(const BettiDiagram& diag) {
  BettiTuple b = diag.polynomials();
  std::optional<int> last;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i].is_zero()) continue;
    std::vector<int> ds = slot_degrees(b[i]);
    PurityProfile prof;
    prof.witness_index = i;
    if (ds.size() > 1) {
      prof.witness_degrees = ds;
      prof.reason = "homological slot " + std::to_string(i) + " has several total degrees";
      throw NotPureError(std::move(prof));
    }
    if (last && ds[0] <= *last) {
      prof.witness_degrees = {*last, ds[0]};
      prof.reason = "total degree does not increase at homological slot " + std::to_string(i);
      throw NotPureError(std::move(prof));
    }
    last = ds[0];
  }
  return b;
}

BettiDiagram twist(const BettiDiagram& diag, const Exponent& t) {
  return BettiDiagram::from_tuple(diag.polynomials().shifted(t));
}

BettiDiagram frobenius_diagram(const BettiDiagram& diag, int r) {
  if (r < 1) throw std::invalid_argument("frobenius power must be >= 1");
  std::vector<LaurentPoly> slices;
  for (std::size_t i = 0; i <= diag.nvars(); ++i) slices.push_back(frobenius(diag.slice(i), r));
  return BettiDiagram::from_tuple(BettiTuple(std::move(slices)));
}

std::map<std::pair<std::size_t, int>, Rational> collapse_total(const BettiDiagram& diag) {
  std::map<std::pair<std::size_t, int>, Rational> out;
  for (const auto& e : diag.entries()) out[{e.i, e.deg.total()}] += e.mult;
  std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

HkReport check_hk(const BettiTuple& b) {
  const LaurentPoly alt = b.alternating_sum();
  HkReport rep;
  rep.residual = LaurentPoly(b.nvars() - 1);
  for (std::size_t k = 0; k < b.nvars(); ++k) {
    LaurentPoly r = set_var_one(alt, k);
    if (!r.is_zero()) {
      rep.pass = false;
      rep.failing_var = k;
      rep.residual = std::move(r);
      return rep;
    }
  }
  return rep;
}

HkReport check_hk(const BettiDiagram& diag) { return check_hk(diag.polynomials()); }

std::optional<LaurentPoly> hilbert_numerator(const BettiTuple& b) {
  const std::size_t n = b.nvars();
  LaurentPoly denom = LaurentPoly::constant(n, 1);
  for (std::size_t k = 0; k < n; ++k)
    denom *= LaurentPoly::constant(n, 1) - LaurentPoly::variable(n, k);
  return exact_div(b.alternating_sum(), denom);
}

namespace {

void require_positive_integral(const LaurentPoly& p, const char* what) {
  for (const auto& t : p.terms()) {
    if (sgn(t.coeff) <= 0 || t.coeff.get_den() != 1)
      throw std::logic_error(std::string(what) + " has a non-positive-integer multiplicity");
  }
}

}  // namespace

BettiTuple equivariant_by_minors(const DifferenceVector& e) {
  const std::size_t n = e.size();
  std::vector<int> col_exp(n + 1, 0);
  for (std::size_t j = 1; j <= n; ++j) col_exp[j] = col_exp[j - 1] + e[n - j];

  const LaurentPoly d = vandermonde(n);
  std::vector<LaurentPoly> comps;
  for (std::size_t i = 0; i <= n; ++i) {
    const std::size_t skip = n - i;
    std::vector<std::vector<LaurentPoly>> minor(n);
    for (std::size_t row = 0; row < n; ++row) {
      for (std::size_t j = 0; j <= n; ++j) {
        if (j == skip) continue;
        Exponent ex(n);
        ex[row] = col_exp[j];
        minor[row].push_back(LaurentPoly::monomial(ex));
      }
    }
    auto q = exact_div(determinant(minor), d);
    if (!q) throw std::logic_error("maximal minor not divisible by the Vandermonde determinant");
    if (sgn(q->leading().coeff) < 0) *q = -*q;
    require_positive_integral(*q, "equivariant minor");
    comps.push_back(std::move(*q));
  }
  return BettiTuple(std::move(comps));
}

BettiTuple equivariant_by_schur(const DifferenceVector& e) {
  std::vector<LaurentPoly> comps;
  for (std::size_t i = 0; i <= e.size(); ++i)
    comps.push_back(schur_bialternant(alpha_partition(e, i), e.size()));
  return BettiTuple(std::move(comps));
}

BettiDiagram equivariant(const DifferenceVector& e) {
  BettiTuple by_minors = equivariant_by_minors(e);
  BettiTuple by_schur = equivariant_by_schur(e);
  if (by_minors != by_schur) {
    throw std::logic_error("equivariant diagram: minor and Schur constructions disagree for e = " +
                           e.to_string());
  }
  return BettiDiagram::from_tuple(by_schur);
}

}  // namespace mbetti
