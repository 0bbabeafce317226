#include "mbetti/parallel.hpp"

#include <exception>
#include <functional>
#include <map>

#include <omp.h>

namespace mbetti::par {

namespace {

// Runs body(i) for i in [0, n) across threads and rethrows the first exception.
template <class F>
void parallel_for(std::size_t n, F&& body) {
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(mbetti_par_error)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

constexpr std::size_t kSerialCutoff = 4096;

}  // namespace

int max_threads() { return omp_get_max_threads(); }

LaurentPoly multiply_serial(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

LaurentPoly multiply_naive(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("variable count mismatch");
  std::map<Exponent, Rational, std::greater<>> acc;
  for (const auto& x : a.terms())
    for (const auto& y : b.terms()) acc[x.exp + y.exp] += x.coeff * y.coeff;
  std::vector<Term> terms;
  for (auto& [e, c] : acc)
    if (sgn(c) != 0) terms.push_back({e, c});
  return LaurentPoly::from_sorted_terms(a.nvars(), std::move(terms));
}

LaurentPoly multiply(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("variable count mismatch");
  const LaurentPoly& big = a.size() >= b.size() ? a : b;
  const LaurentPoly& small = a.size() >= b.size() ? b : a;
  const std::size_t threads = static_cast<std::size_t>(max_threads());
  if (threads < 2 || big.size() * small.size() < kSerialCutoff || big.size() < 2 * threads)
    return a * b;

  const std::size_t chunks = threads;
  const auto terms = big.terms();
  std::vector<LaurentPoly> partial(chunks);
  parallel_for(chunks, [&](std::size_t c) {
    const std::size_t lo = terms.size() * c / chunks;
    const std::size_t hi = terms.size() * (c + 1) / chunks;
    LaurentPoly piece = LaurentPoly::from_sorted_terms(
        big.nvars(), std::vector<Term>(terms.begin() + static_cast<long>(lo),
                                       terms.begin() + static_cast<long>(hi)));
    partial[c] = piece * small;
  });
  // Pairwise tree reduction of the partial products.
  for (std::size_t stride = 1; stride < chunks; stride *= 2) {
    const std::size_t pairs = (chunks + 2 * stride - 1) / (2 * stride);
    parallel_for(pairs, [&](std::size_t k) {
      const std::size_t i = 2 * stride * k;
      if (i + stride < chunks) partial[i] += partial[i + stride];
    });
  }
  return std::move(partial[0]);
}

std::vector<LaurentPoly> schur_family(std::span<const Partition> lambdas, std::size_t nvars) {
  std::vector<LaurentPoly> out(lambdas.size());
  parallel_for(lambdas.size(), [&](std::size_t i) { out[i] = schur_bialternant(lambdas[i], nvars); });
  return out;
}

std::vector<LaurentPoly> schur_family_serial(std::span<const Partition> lambdas, std::size_t nvars) {
  std::vector<LaurentPoly> out;
  out.reserve(lambdas.size());
  for (const auto& l : lambdas) out.push_back(schur_bialternant(l, nvars));
  return out;
}

std::vector<HkReport> check_hk_batch(std::span<const BettiTuple> tuples) {
  std::vector<HkReport> out(tuples.size());
  parallel_for(tuples.size(), [&](std::size_t i) { out[i] = check_hk(tuples[i]); });
  return out;
}

std::vector<HkReport> check_hk_batch_serial(std::span<const BettiTuple> tuples) {
  std::vector<HkReport> out;
  out.reserve(tuples.size());
  for (const auto& t : tuples) out.push_back(check_hk(t));
  return out;
}

std::vector<MembershipReport> membership_batch(std::span<const BettiTuple> tuples,
                                               const DifferenceVector& e) {
  std::vector<MembershipReport> out(tuples.size());
  parallel_for(tuples.size(), [&](std::size_t i) { out[i] = membership(tuples[i], e); });
  return out;
}

std::vector<MembershipReport> membership_batch_serial(std::span<const BettiTuple> tuples,
                                                      const DifferenceVector& e) {
  std::vector<MembershipReport> out;
  out.reserve(tuples.size());
  for (const auto& t : tuples) out.push_back(membership(t, e));
  return out;
}

}  // namespace mbetti::par
