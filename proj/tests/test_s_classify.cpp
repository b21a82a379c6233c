#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sidem/gf2_ring.hpp"
#include "sidem/idem_enum.hpp"
#include "sidem/s_classify.hpp"

#include <algorithm>
#include <random>
#include <vector>

using namespace sidem;

namespace {

// Oracle: all square roots of x by scanning every element of Z2[Cn], n <= 20.
std::vector<Gf2Element> scan_square_roots(const Gf2Element& x) {
  const std::uint32_t n = x.modulus();
  std::vector<Gf2Element> out;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    std::vector<std::int64_t> exps;
    for (std::uint32_t e = 0; e < n; ++e) {
      if ((v >> e) & 1) exps.push_back(e);
    }
    const Gf2Element a = Gf2Element::make(n, exps);
    if (a.square() == x) out.push_back(a);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace

TEST_CASE("square root sets match the exhaustive scan") {
  const Gf2Element x6 = Gf2Element::make(6, {2, 4});
  const SquareRootSet s6 = square_roots(x6);
  REQUIRE(s6.solvable);
  CHECK(s6.kernel_dimension() == 3);
  const auto roots6 = s6.enumerate();
  CHECK(roots6.size() == 8);
  CHECK(std::find(roots6.begin(), roots6.end(), Gf2Element::make(6, {1, 5})) != roots6.end());
  CHECK(roots6 == scan_square_roots(x6));

  const SquareRootSet s7 = square_roots(Gf2Element::one(7));
  REQUIRE(s7.solvable);
  CHECK(s7.kernel_dimension() == 0);
  CHECK(s7.enumerate() == std::vector<Gf2Element>{Gf2Element::one(7)});

  const SquareRootSet s4 = square_roots(Gf2Element::make(4, {1}));
  CHECK_FALSE(s4.solvable);
  CHECK(scan_square_roots(Gf2Element::make(4, {1})).empty());
}

TEST_CASE("kernel dimension is 0 at odd order and n/2 at even order") {
  for (std::uint32_t n = 1; n <= 16; ++n) {
    const DoublingSolver solver(n);
    CHECK(solver.kernel_dimension() == (n % 2 == 0 ? n / 2 : 0));
  }
  // every root the solver reports actually squares to x, on random targets
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<std::uint32_t> pick_n(1, 12);
    const std::uint32_t n = pick_n(rng);
    std::vector<std::int64_t> exps;
    for (std::uint32_t e = 0; e < n; ++e) {
      if (rng() & 1) exps.push_back(e);
    }
    const Gf2Element x = Gf2Element::make(n, exps);
    const SquareRootSet roots = square_roots(x);
    CHECK(roots.enumerate() == scan_square_roots(x));
    if (roots.solvable) {
      for (const auto& r : roots.enumerate()) CHECK(r.square() == x);
    }
  }
}

TEST_CASE("check_witness validates the definition") {
  const Gf2Element alpha = Gf2Element::make(62, {2, 4, 8, 16, 32});
  const Gf2Element beta = Gf2Element::make(62, {1, 33, 35, 39, 47});
  const auto w = check_witness(alpha, beta);
  REQUIRE(w.has_value());
  CHECK(w->law == AbsorptionLaw::AbsorbWitness);

  // a = x is excluded outright
  const Gf2Element x6 = Gf2Element::make(6, {2, 4});
  CHECK_FALSE(check_witness(x6, x6).has_value());

  // complement side satisfies the other law
  const auto w2 = check_witness(Gf2Element::make(6, {0, 2, 4}), Gf2Element::make(6, {0, 1, 5}));
  REQUIRE(w2.has_value());
  CHECK(w2->law == AbsorptionLaw::AbsorbIdempotent);

  CHECK_THROWS_AS(check_witness(Gf2Element::make(4, {1}), Gf2Element::make(4, {1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_witness(Gf2Element::zero(4), Gf2Element::one(4)), std::invalid_argument);
}

TEST_CASE("find_witness: proven non-S, constructed, and searched routes") {
  // odd order: squaring is injective, so the only root of x is x itself
  CHECK_FALSE(find_witness(Gf2Element::make(7, {1, 2, 4})).has_value());

  const auto w6 = find_witness(Gf2Element::make(6, {2, 4}));
  REQUIRE(w6.has_value());
  CHECK(w6->beta == Gf2Element::make(6, {1, 5}));
  CHECK(w6->method == WitnessMethod::Constructed);

  const auto w14 = find_witness(Gf2Element::make(14, {2, 4, 6, 8, 10, 12}));
  REQUIRE(w14.has_value());
  CHECK(w14->beta == Gf2Element::make(14, {1, 3, 5, 9, 11, 13}));
  CHECK(w14->method == WitnessMethod::Constructed);

  // order 18 = 2 * 9: no construction, kernel dimension 9; a small cap
  // must be reported as inconclusive rather than non-S
  const Gf2Element x18 = lift_to_even(Gf2Element::make(9, {3, 6}), 18);
  CHECK_THROWS_AS(find_witness(x18, 4), InconclusiveError);
  const auto w18 = find_witness(x18, 9);  // searched, not constructed
  REQUIRE(w18.has_value());
  CHECK(w18->method == WitnessMethod::Searched);
  CHECK(check_witness(x18, w18->beta).has_value());

  CHECK_THROWS_AS(find_witness(Gf2Element::zero(6)), std::invalid_argument);
}

TEST_CASE("transfer_complement flips the law and is involutive") {
  const Gf2Element x = Gf2Element::make(6, {2, 4});
  const SWitness w = *check_witness(x, Gf2Element::make(6, {1, 5}));
  const SWitness wc = transfer_complement(x, w);
  CHECK(wc.beta == Gf2Element::make(6, {0, 1, 5}));
  CHECK(wc.law == AbsorptionLaw::AbsorbIdempotent);

  const Gf2Element x14 = Gf2Element::make(14, {2, 4, 8});
  const SWitness w14 = *check_witness(x14, Gf2Element::make(14, {1, 9, 11}));
  CHECK(transfer_complement(x14, w14).beta == Gf2Element::make(14, {0, 1, 9, 11}));

  const SWitness back = transfer_complement(x.complement_one(), wc);
  CHECK(back.beta == w.beta);
  CHECK(back.law == w.law);

  SWitness bogus{Gf2Element::make(6, {1}), AbsorptionLaw::AbsorbWitness,
                 WitnessMethod::Searched};
  CHECK_THROWS_AS(transfer_complement(x, bogus), std::invalid_argument);
}

TEST_CASE("classification censuses") {
  const SReport r7 = classify(7);
  CHECK(r7.nontrivial == 6);
  CHECK(r7.s_count == 0);
  CHECK(r7.non_s_count == 6);
  CHECK(r7.inconclusive_count == 0);

  const SReport r14 = classify(14);
  CHECK(r14.nontrivial == 6);
  CHECK(r14.s_count == 6);

  const SReport r62 = classify(62);
  CHECK(r62.nontrivial == 126);
  CHECK(r62.s_count == 126);
  for (const SEntry& e : r62.entries) {
    REQUIRE(e.witness.has_value());
    CHECK(e.witness->method == WitnessMethod::Constructed);
  }

  // kernel cap too small and no construction: inconclusive, not non-S
  const SReport r18 = classify(18, 4);
  CHECK(r18.inconclusive_count == r18.nontrivial - r18.s_count - r18.non_s_count);
  CHECK(r18.inconclusive_count > 0);
}

TEST_CASE("every emitted witness re-verifies by direct convolution") {
  for (std::uint32_t n : {6u, 10u, 14u, 18u, 62u}) {
    const SReport r = classify(n);
    for (const SEntry& e : r.entries) {
      if (!e.is_s()) continue;
      const SWitness& w = *e.witness;
      CHECK(w.beta.square() == e.idempotent);
      const Gf2Element prod = e.idempotent.mul(w.beta);
      if (w.law == AbsorptionLaw::AbsorbWitness) {
        CHECK(prod == w.beta);
      } else {
        CHECK(prod == e.idempotent);
      }
      CHECK_FALSE(w.beta.is_zero());
      CHECK_FALSE(w.beta.is_one());
      CHECK_FALSE(w.beta == e.idempotent);
    }
  }
}

TEST_CASE("x is S iff its complement is S") {
  for (std::uint32_t n : {6u, 7u, 9u, 14u, 15u, 62u}) {
    const SReport r = classify(n);
    auto status_of = [&](const Gf2Element& x) {
      for (const SEntry& e : r.entries) {
        if (e.idempotent == x) return e.status;
      }
      FAIL("complement not present in census");
      return SStatus::Inconclusive;
    };
    for (const SEntry& e : r.entries) {
      CHECK(e.status == status_of(e.idempotent.complement_one()));
      if (e.is_s()) {
        const SWitness moved = transfer_complement(e.idempotent, *e.witness);
        CHECK(check_witness(e.idempotent.complement_one(), moved.beta).has_value());
      }
    }
  }
}

TEST_CASE("odd order: unique square roots") {
  std::mt19937_64 rng(2024);
  for (std::uint32_t n : {3u, 15u, 45u, 101u}) {
    const DoublingSolver solver(n);
    CHECK(solver.kernel_dimension() == 0);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<std::int64_t> exps;
      for (std::uint32_t e = 0; e < n; ++e) {
        if (rng() & 1) exps.push_back(e);
      }
      const Gf2Element x = Gf2Element::make(n, exps);
      const SquareRootSet roots = solver.solve(x);
      REQUIRE(roots.solvable);
      CHECK(roots.enumerate().size() == 1);
      CHECK(roots.particular.square() == x);
    }
  }
}
