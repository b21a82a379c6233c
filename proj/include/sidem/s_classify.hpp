#pragma once

/**
 * @file s_classify.hpp
 * @brief Deciding S-idempotency in Z2[Cn].
 *
 * An S-idempotent is a nonzero idempotent x with a witness a outside
 * {0, 1, x} satisfying a^2 = x together with one absorption law: x*a = a or
 * x*a = x (the ring is commutative, so the one-sided variants coincide).
 * Witness search runs over the affine solution set of the squaring map,
 * obtained by elimination over GF(2); at order 2p with p a Mersenne prime
 * witnesses come from the explicit constructions instead.
 */

#include "sidem/gf2_ring.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace sidem {

enum class AbsorptionLaw {
  AbsorbWitness,    // x * a = a
  AbsorbIdempotent  // x * a = x
};

enum class WitnessMethod { Constructed, Searched };

const char* to_string(AbsorptionLaw law);
const char* to_string(WitnessMethod method);

struct SWitness {
  Gf2Element beta;
  AbsorptionLaw law;
  WitnessMethod method;
};

/// Affine description of {a : a^2 = x}: a particular root plus the span of
/// a kernel basis of the doubling map.
struct SquareRootSet {
  bool solvable = false;
  Gf2Element particular;
  std::vector<Gf2Element> kernel_basis;

  std::size_t kernel_dimension() const { return kernel_basis.size(); }
  /// All roots in canonical order. Throws when the kernel dimension
  /// exceeds cap_log2.
  std::vector<Gf2Element> enumerate(std::size_t cap_log2 = 20) const;
};

/// Solves v -> v^2 = x over GF(2) for a fixed modulus. Column i of the
/// system matrix has its one in row 2i mod n.
class DoublingSolver {
 public:
  explicit DoublingSolver(std::uint32_t n);
  SquareRootSet solve(const Gf2Element& x) const;
  std::size_t kernel_dimension() const { return kernel_basis_.size(); }
  std::uint32_t modulus() const { return n_; }

 private:
  std::uint32_t n_;
  std::vector<std::vector<std::uint64_t>> reduced_rows_;  // RREF of the doubling matrix
  std::vector<std::int64_t> pivot_of_row_;                // pivot column per reduced row
  std::vector<Gf2Element> kernel_basis_;
};

SquareRootSet square_roots(const Gf2Element& x);

/// Validates a candidate witness for the idempotent x. Returns the witness
/// record iff a is outside {0, 1, x}, a^2 = x, and one absorption law
/// holds (x*a = a preferred when both do). Requires x idempotent, x != 0.
std::optional<SWitness> check_witness(const Gf2Element& x, const Gf2Element& a,
                                      WitnessMethod method = WitnessMethod::Searched);

/// Search was cut off before it could prove or refute; distinct from a
/// proven "no witness exists".
class InconclusiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finds a witness for the idempotent x, or proves none exists.
///
/// Construction first: at order 2p with p a Mersenne prime the witness of a
/// doubling-orbit sum (or of its complement) is assembled from basic pairs.
/// Otherwise every square root of x is enumerated in canonical order when
/// the kernel dimension is at most kernel_cap; nullopt then means a proven
/// non-S verdict. Throws InconclusiveError when the search space is too big
/// and no construction applies.
std::optional<SWitness> find_witness(const Gf2Element& x, std::size_t kernel_cap = 20);

/// Witness for 1 + x derived from a witness for x: beta -> 1 + beta, with
/// the absorption law flipped. Involutive. Requires x != 1.
SWitness transfer_complement(const Gf2Element& x, const SWitness& w);

enum class SStatus { S, NotS, Inconclusive };

const char* to_string(SStatus status);

struct SEntry {
  Gf2Element idempotent;
  SStatus status;
  std::optional<SWitness> witness;  // present iff status == S

  bool is_s() const { return status == SStatus::S; }
};

/// Full classification of the nontrivial idempotents of Z2[Cn].
struct SReport {
  std::uint32_t modulus = 0;
  std::vector<SEntry> entries;  // canonical order; 0 and 1 excluded
  std::size_t total = 0;        // all idempotents, trivial included
  std::size_t nontrivial = 0;
  std::size_t s_count = 0;
  std::size_t non_s_count = 0;
  std::size_t inconclusive_count = 0;
};

SReport classify(std::uint32_t n, std::size_t kernel_cap = 20);

}  // namespace sidem
