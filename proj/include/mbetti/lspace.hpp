#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mbetti/betti.hpp"
#include "mbetti/laurent.hpp"
#include "mbetti/schur.hpp"

namespace mbetti {

/// (c_1 - b_1, ..., c_n - b_n), compared lexicographically.
using Valuation = Exponent;

/// Valuation of a nonzero Laurent polynomial: c is the lex-leading exponent and
/// b_i is the smallest exponent of t_i among terms that agree with c before i.
/// Throws std::domain_error on zero.
Valuation valuation(const LaurentPoly& b0);
/// Valuation of B_0. Throws std::domain_error when B_0 = 0.
Valuation valuation(const BettiTuple& b);

/// t^{-b}: the monomial that moves the lex-leading exponent of B_0 onto the
/// valuation.
Exponent normalizing_shift(const BettiTuple& b);

/// C = q*B - p*A.
struct Reduction {
  LaurentPoly p;
  LaurentPoly q;
  BettiTuple c;
};

/// One reduction step for A, B in L'(e): C is zero or
/// valuation(C) < max(valuation(A), valuation(B)).
/// Throws std::invalid_argument when the inputs are zero, have different
/// shapes, or lack the top-t1 structure of members of L'(e).
Reduction reduce_pair(const BettiTuple& a, const BettiTuple& b, const DifferenceVector& e);

/// Iterated reduction: C is zero or valuation(C) < min(valuation(A), valuation(B)).
/// Each step must decrease the valuation strictly; a violation throws
/// std::logic_error. `chain` receives the valuation of the tuple being reduced
/// before each step, followed by that of the final remainder when nonzero.
Reduction descend(const BettiTuple& a, const BettiTuple& b, const DifferenceVector& e,
                  std::vector<Valuation>* chain = nullptr);

struct GeneratorStats {
  std::size_t descend_calls = 0;
  std::size_t reduce_steps = 0;
  /// Times a nonzero remainder replaced the current candidate.
  std::size_t restarts = 0;
  /// Valuation chain of every descend call, in call order.
  std::vector<std::vector<Valuation>> chains;
};

/// A tuple g with component gcd 1 such that every input is a Laurent multiple
/// of g. Inputs must be nonzero, satisfy the HK equations and be pure with one
/// common difference vector; std::invalid_argument otherwise. For inputs that
/// lie in one L'(e) the result generates L'(e); for other inputs only the
/// divisibility is guaranteed. Throws std::logic_error if the final
/// divisibility check fails.
BettiTuple find_generator(std::span<const BettiTuple> inputs, GeneratorStats* stats = nullptr);

/// (frobenius(s_{alpha(e',0)}, r), ..., frobenius(s_{alpha(e',n)}, r)), e = r*e'.
BettiTuple canonical_generator(const DifferenceVector& e);

/// p with B = p*s, or nullopt. Throws std::invalid_argument when s_0 = 0 or
/// the shapes differ.
std::optional<LaurentPoly> decompose(const BettiTuple& b, const BettiTuple& s);

/// Whether p has integer coefficients, decided by peeling lex-leading terms of
/// p*s_0 against s_0 (whose lex-leading coefficient is 1).
bool integral_by_peeling(const LaurentPoly& p, const LaurentPoly& s0);

struct MembershipReport {
  bool in_space = false;
  std::optional<LaurentPoly> cofactor;
  bool integral = false;
  std::vector<std::string> reasons;
  /// The canonical generator the cofactor refers to.
  std::optional<BettiTuple> generator;
};

/// Decides B in L'(e) and writes B = p*s against canonical_generator(e). The
/// zero tuple is a member with cofactor 0.
MembershipReport membership(const BettiTuple& b, const DifferenceVector& e);

}  // namespace mbetti
