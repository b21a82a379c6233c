#pragma once

/**
 * @file idem_enum.hpp
 * @brief Enumeration of all idempotents of Z2[Cn].
 *
 * Three routes: a 2^n brute-force scan (the oracle, n <= 20), the coset
 * structure for odd n (idempotent <=> support is a union of doubling
 * orbits), and lifting odd-order idempotents to even order along the ring
 * embedding that sends the generator to g^(2^a).
 */

#include "sidem/gf2_ring.hpp"

#include <cstdint>
#include <vector>

namespace sidem {

/// All idempotents of Z2[Cn] by scanning every element; ascending
/// bit-pattern order. Capped at n <= 20.
std::vector<Gf2Element> brute_force_idempotents(std::uint32_t n);

/// All idempotents for odd n: one per subset of the cyclotomic cosets.
/// Sorted canonically (weight, then exponents).
std::vector<Gf2Element> coset_idempotents(std::uint32_t n);

/// Image of an idempotent of Z2[Cm] (m the odd part of n) under the
/// embedding scaling exponents by n / m; the result is idempotent.
Gf2Element lift_to_even(const Gf2Element& e, std::uint32_t n);

/// Same lift computed by repeatedly squaring a naive preimage until it
/// stabilizes; agrees with lift_to_even and cross-checks it.
Gf2Element hensel_lift(const Gf2Element& e, std::uint32_t n);

/// All idempotents of Z2[Cn], canonical order. Cardinality is 2^c with c
/// the coset count of the odd part of n; errors out beyond 2^20.
std::vector<Gf2Element> enumerate_idempotents(std::uint32_t n);

std::uint32_t odd_part(std::uint32_t n);

}  // namespace sidem
