#pragma once

// Independent reference computations and random inputs for the tests.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "mbetti/betti.hpp"
#include "mbetti/laurent.hpp"
#include "mbetti/lspace.hpp"
#include "mbetti/schur.hpp"

namespace mbetti::testing {

/// Dense map product, no heap merging.
LaurentPoly product_oracle(const LaurentPoly& a, const LaurentPoly& b);

/// s_lambda(1, ..., 1) in n variables by the hook-content formula.
Integer hook_content(const Partition& lambda, std::size_t n);

/// s_lambda by the Jacobi-Trudi determinant det(h_{lambda_i - i + j}), with
/// complete homogeneous polynomials built by direct enumeration.
LaurentPoly jacobi_trudi(const Partition& lambda, std::size_t n);

/// All partitions of weight w with at most k parts, each padded to k parts.
std::vector<Partition> partitions_of(int w, std::size_t k);

/// Univariate polynomials over Q, dense, low degree first.
using UPoly = std::vector<Rational>;
UPoly upoly_gcd(UPoly a, UPoly b);
/// f with every variable except `keep` replaced by the given values.
UPoly specialize(const LaurentPoly& f, std::size_t keep, const std::vector<Rational>& values);
/// Degree in t_{keep+1} of gcd(f, g) predicted from specializations; the
/// minimum over several random points.
int specialized_gcd_degree(const LaurentPoly& f, const LaurentPoly& g, std::size_t keep,
                           std::mt19937_64& rng, int samples = 4);

/// HK equations checked fiber by fiber: for each k and each multidegree with
/// coordinate k forgotten, sum_i (-1)^i of the multiplicities vanishes.
bool hk_fiberwise(const BettiDiagram& d);

/// Valuation straight from the definition, scanning all terms for each i.
Valuation valuation_oracle(const LaurentPoly& b0);

/// Length of the module of a pure resolution: beta_0 * prod_{i>=1}(d_i - d_0) / n!.
Rational pure_length(const DifferenceVector& e, const Integer& beta0);

/// Every e with n entries in 1..max_entry.
std::vector<DifferenceVector> all_difference_vectors(std::size_t n, int max_entry);

// Random inputs.
Exponent random_exponent(std::mt19937_64& rng, std::size_t n, int lo, int hi);
Rational random_rational(std::mt19937_64& rng, int range, bool integral);
LaurentPoly random_poly(std::mt19937_64& rng, std::size_t n, std::size_t terms, int lo, int hi,
                        bool integral = true);
/// Homogeneous Laurent polynomial of total degree `deg`.
LaurentPoly random_homogeneous(std::mt19937_64& rng, std::size_t n, std::size_t terms, int deg,
                               int spread, bool integral = true);
LaurentPoly random_unit(std::mt19937_64& rng, std::size_t n);

}  // namespace mbetti::testing
