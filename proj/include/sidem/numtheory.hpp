#pragma once

/**
 * @file numtheory.hpp
 * @brief Primality, Mersenne certification, multiplicative orders and
 *        2-cyclotomic cosets.
 */

#include <cstdint>
#include <optional>
#include <vector>

namespace sidem {

/// Deterministic for every 64-bit input.
bool is_prime(std::uint64_t u);

/// True iff 2^k - 1 is prime. Accepts 2 <= k <= 63; agrees with
/// is_prime(2^k - 1) for every k in range.
bool lucas_lehmer(std::uint32_t k);

/// A certified Mersenne prime p = 2^k - 1 with k prime.
struct MersenneWitness {
  std::uint32_t k;
  std::uint64_t p;
};

/// Witness for p, or nullopt when p is not a Mersenne prime.
std::optional<MersenneWitness> mersenne_exponent(std::uint64_t p);

/// For prime k, checks 2^k = 2 (mod k) and returns true. Rejects composite k.
bool fermat_divisibility(std::uint64_t k);

/// Least d >= 1 with a^d = 1 (mod m); requires gcd(a, m) = 1.
std::uint64_t mult_order(std::uint64_t a, std::uint64_t m);

/// b^e mod m with 128-bit intermediates.
std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t m);

/// One block of the doubling structure mod `modulus`.
///
/// Default mode: the blocks of the partition of [0, m) generated by the map
/// x -> 2x; for odd m these are exactly the orbits {leader * 2^j mod m}.
///
/// odd-generator mode: members are the odd residues l in (0, m) sharing the
/// forward orbit {2^j * l mod m : j >= 1}; residues whose orbit collapses to
/// {0} (multiples of the odd part of m) are excluded. This keys the distinct
/// doubling-orbit sums of even order m by their smallest odd generator.
struct CycCoset {
  std::uint32_t modulus;
  std::uint32_t leader;  // smallest member
  std::vector<std::uint32_t> members;
};

std::vector<CycCoset> cyclotomic_cosets(std::uint32_t m, bool odd_only = false);

}  // namespace sidem
