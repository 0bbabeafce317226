#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mbetti/betti.hpp"
#include "mbetti/laurent.hpp"
#include "mbetti/lspace.hpp"
#include "mbetti/schur.hpp"

// OpenMP kernels. Each has a *_serial counterpart computing the same value in
// one thread; tests compare the two and the benchmark times them.
namespace mbetti::par {

/// Number of threads the kernels use (omp_get_max_threads).
int max_threads();

/// Product by splitting the terms of the longer factor into per-thread
/// chunks and summing the partial products.
LaurentPoly multiply(const LaurentPoly& a, const LaurentPoly& b);
/// The library's heap-merge product.
LaurentPoly multiply_serial(const LaurentPoly& a, const LaurentPoly& b);
/// Term-by-term accumulation into an ordered map; slow reference.
LaurentPoly multiply_naive(const LaurentPoly& a, const LaurentPoly& b);

std::vector<LaurentPoly> schur_family(std::span<const Partition> lambdas, std::size_t nvars);
std::vector<LaurentPoly> schur_family_serial(std::span<const Partition> lambdas, std::size_t nvars);

std::vector<HkReport> check_hk_batch(std::span<const BettiTuple> tuples);
std::vector<HkReport> check_hk_batch_serial(std::span<const BettiTuple> tuples);

std::vector<MembershipReport> membership_batch(std::span<const BettiTuple> tuples,
                                               const DifferenceVector& e);
std::vector<MembershipReport> membership_batch_serial(std::span<const BettiTuple> tuples,
                                                      const DifferenceVector& e);

}  // namespace mbetti::par
