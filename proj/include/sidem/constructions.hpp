#pragma once

/**
 * @file constructions.hpp
 * @brief Explicit S-idempotent constructions at order 2p, p Mersenne.
 *
 * The basic S-idempotent for an odd generator l is the doubling-orbit sum
 * alpha = g^(2l) + g^(4l) + ... + g^(2^k l) in Z2[C_2p]; its witness beta
 * rides on the halved exponents t_i. The m = (p-1)/k basic pairs have
 * pairwise disjoint supports, their subset sums and the complements of
 * those sums exhaust every nontrivial idempotent, and the nontrivial count
 * is 2(2^m - 1).
 */

#include "sidem/gf2_ring.hpp"
#include "sidem/s_classify.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sidem {

/// Parameters of a basic pair: p = 2^k - 1 prime, l the canonical odd
/// generator, m = (p-1)/k, x holds x_2..x_k (the reduced doubled exponents)
/// and t holds t_1..t_k (the witness exponents, t_1 = l).
struct BasicSpec {
  std::uint64_t p = 0;
  std::uint32_t k = 0;
  std::uint32_t l = 0;
  std::uint32_t m = 0;
  std::vector<std::uint32_t> x;
  std::vector<std::uint32_t> t;
};

struct BasicPair {
  Gf2Element alpha;
  Gf2Element beta;
  BasicSpec spec;
};

/// Builds the basic pair for (p, l): alpha the doubling-orbit sum, beta on
/// exponents t_i with t_i = x_i / 2 when that is odd and x_i / 2 + p
/// otherwise. Both identities beta^2 = alpha and alpha * beta = beta are
/// verified before returning.
BasicPair basic_pair(std::uint64_t p, std::uint32_t l);

/// One basic pair per canonical odd-generator class; exactly m of them,
/// with disjoint alpha supports covering {2, 4, ..., 2p - 2}.
std::vector<BasicPair> enumerate_basic_pairs(std::uint64_t p);

struct SumPair {
  Gf2Element alpha;
  Gf2Element beta;
};

/// Sum of distinct basic pairs: (sum alpha_i, sum beta_i). Verifies the two
/// witness identities and the cross-term cancellation
/// alpha_i * beta_j + alpha_j * beta_i = 0 for i != j.
SumPair sum_pair(const std::vector<BasicPair>& pairs);

/// The order-2q pair for an odd prime q: alpha = every even exponent,
/// beta = every odd exponent except q. Verified before returning.
/// (q need not be Mersenne.)
SumPair theorem13_pair(std::uint64_t q);

/// 2(2^m - 1) with m = (p-1)/k; cross-checked against the binomial subset
/// count before returning.
std::uint64_t s_count_formula(std::uint64_t p);

struct CensusReport {
  std::uint64_t p = 0;
  std::uint32_t k = 0;
  std::uint32_t m = 0;
  std::uint64_t expected_nontrivial = 0;
  std::uint64_t enumerated_nontrivial = 0;
  bool count_ok = false;
  bool family_matches = false;  // enumerated set == subset sums + complements
  bool witnesses_ok = false;    // every member carries a verified witness
  std::string detail;

  bool all_ok() const { return count_ok && family_matches && witnesses_ok; }
};

/// Exhaustive check that the constructed family accounts for every
/// nontrivial idempotent of Z2[C_2p], with verified witnesses throughout.
CensusReport verify_census(std::uint64_t p);

}  // namespace sidem
