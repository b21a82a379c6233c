#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sidem/constructions.hpp"
#include "sidem/idem_enum.hpp"
#include "sidem/numtheory.hpp"
#include "sidem/s_classify.hpp"

#include <algorithm>
#include <set>
#include <vector>

using namespace sidem;

TEST_CASE("basic pair fixtures") {
  const BasicPair bp31 = basic_pair(31, 1);
  CHECK(bp31.alpha == Gf2Element::make(62, {2, 4, 8, 16, 32}));
  CHECK(bp31.beta == Gf2Element::make(62, {1, 33, 35, 39, 47}));
  CHECK(bp31.spec.k == 5);
  CHECK(bp31.spec.m == 6);
  CHECK(bp31.spec.x == std::vector<std::uint32_t>{4, 8, 16, 32});
  CHECK(bp31.spec.t == std::vector<std::uint32_t>{1, 33, 35, 39, 47});

  const BasicPair bp3 = basic_pair(3, 1);
  CHECK(bp3.alpha == Gf2Element::make(6, {2, 4}));
  CHECK(bp3.beta == Gf2Element::make(6, {1, 5}));  // x_2 = 4, half even -> t_2 = 2 + 3

  const BasicPair bp73 = basic_pair(7, 3);
  CHECK(bp73.alpha == Gf2Element::make(14, {6, 10, 12}));
  CHECK(bp73.beta == Gf2Element::make(14, {3, 5, 13}));  // t_2 = 13, t_3 = 5
  CHECK(bp73.spec.t == std::vector<std::uint32_t>{3, 13, 5});

  CHECK_THROWS_AS(basic_pair(5, 1), std::invalid_argument);   // not Mersenne
  CHECK_THROWS_AS(basic_pair(7, 2), std::invalid_argument);   // even l
  CHECK_THROWS_AS(basic_pair(7, 9), std::invalid_argument);   // out of range
  CHECK_THROWS_AS(basic_pair(2047, 1), std::invalid_argument);  // 2^11 - 1 composite
}

TEST_CASE("basic pairs verify as witnesses with the absorbing law") {
  for (std::uint64_t p : {3ull, 7ull, 31ull, 127ull}) {
    for (const BasicPair& bp : enumerate_basic_pairs(p)) {
      const auto w = check_witness(bp.alpha, bp.beta);
      REQUIRE(w.has_value());
      CHECK(w->law == AbsorptionLaw::AbsorbWitness);
      // all-even alpha support, all-odd beta support
      for (std::uint32_t e : bp.alpha.support()) CHECK(e % 2 == 0);
      for (std::uint32_t e : bp.beta.support()) CHECK(e % 2 == 1);
    }
  }
}

TEST_CASE("doubling orbits behind the pairs are clean") {
  // 2^(k+1) l wraps to 2l mod 2p, and the k orbit members are distinct.
  for (std::uint64_t p : {3ull, 7ull, 31ull, 127ull}) {
    const auto w = mersenne_exponent(p);
    REQUIRE(w.has_value());
    const std::uint64_t n = 2 * p;
    for (const CycCoset& cls : cyclotomic_cosets(static_cast<std::uint32_t>(n), true)) {
      const std::uint64_t l = cls.leader;
      std::set<std::uint64_t> orbit;
      std::uint64_t x = l;
      for (std::uint32_t j = 1; j <= w->k; ++j) {
        x = (2 * x) % n;
        orbit.insert(x);
      }
      CHECK(orbit.size() == w->k);
      CHECK((2 * x) % n == (2 * l) % n);
    }
  }
}

TEST_CASE("enumerate_basic_pairs tiles the even residues") {
  const auto pairs7 = enumerate_basic_pairs(7);
  REQUIRE(pairs7.size() == 2);
  CHECK(pairs7[0].alpha == Gf2Element::make(14, {2, 4, 8}));
  CHECK(pairs7[0].beta == Gf2Element::make(14, {1, 9, 11}));
  CHECK(pairs7[1].alpha == Gf2Element::make(14, {6, 10, 12}));
  CHECK(pairs7[1].beta == Gf2Element::make(14, {3, 5, 13}));

  CHECK(enumerate_basic_pairs(3).size() == 1);

  const auto pairs31 = enumerate_basic_pairs(31);
  REQUIRE(pairs31.size() == 6);
  Gf2Element cover = Gf2Element::zero(62);
  Gf2Element beta_cover = Gf2Element::zero(62);
  std::size_t alpha_total = 0, beta_total = 0;
  for (const auto& bp : pairs31) {
    CHECK(bp.alpha.weight() == 5);
    cover = cover.add(bp.alpha);
    beta_cover = beta_cover.add(bp.beta);
    alpha_total += bp.alpha.weight();
    beta_total += bp.beta.weight();
  }
  // disjoint supports on both sides
  CHECK(cover.weight() == alpha_total);
  CHECK(beta_cover.weight() == beta_total);
  CHECK(cover == Gf2Element::make(62, {2, 4, 6, 8, 10, 12, 14, 16, 18, 20, 22, 24, 26, 28, 30,
                                       32, 34, 36, 38, 40, 42, 44, 46, 48, 50, 52, 54, 56, 58,
                                       60}));
}

TEST_CASE("sums of basic pairs") {
  const auto pairs7 = enumerate_basic_pairs(7);
  const SumPair both = sum_pair(pairs7);
  CHECK(both.alpha == Gf2Element::make(14, {2, 4, 6, 8, 10, 12}));
  CHECK(both.beta == Gf2Element::make(14, {1, 3, 5, 9, 11, 13}));

  const SumPair single = sum_pair({pairs7[0]});
  CHECK(single.alpha == pairs7[0].alpha);
  CHECK(single.beta == pairs7[0].beta);

  const auto pairs31 = enumerate_basic_pairs(31);
  for (std::size_t i = 0; i < pairs31.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs31.size(); ++j) {
      const Gf2Element cross =
          pairs31[i].alpha.mul(pairs31[j].beta).add(pairs31[j].alpha.mul(pairs31[i].beta));
      CHECK(cross.is_zero());
      CHECK(check_witness(sum_pair({pairs31[i], pairs31[j]}).alpha,
                          sum_pair({pairs31[i], pairs31[j]}).beta)
                .has_value());
    }
  }

  CHECK_THROWS_AS(sum_pair({}), std::invalid_argument);
  CHECK_THROWS_AS(sum_pair({pairs7[0], pairs7[0]}), std::invalid_argument);
}

TEST_CASE("order-2q pair for odd primes") {
  const SumPair q5 = theorem13_pair(5);
  CHECK(q5.alpha == Gf2Element::make(10, {2, 4, 6, 8}));
  CHECK(q5.beta == Gf2Element::make(10, {1, 3, 7, 9}));

  const SumPair q3 = theorem13_pair(3);
  CHECK(q3.alpha == basic_pair(3, 1).alpha);
  CHECK(q3.beta == basic_pair(3, 1).beta);

  // for Mersenne q the pair coincides with the sum of every basic pair
  const SumPair q7 = theorem13_pair(7);
  const SumPair all7 = sum_pair(enumerate_basic_pairs(7));
  CHECK(q7.alpha == all7.alpha);
  CHECK(q7.beta == all7.beta);

  // q = 11 is not Mersenne yet the construction still verifies
  const SumPair q11 = theorem13_pair(11);
  CHECK(check_witness(q11.alpha, q11.beta).has_value());

  CHECK_THROWS_AS(theorem13_pair(9), std::invalid_argument);
  CHECK_THROWS_AS(theorem13_pair(2), std::invalid_argument);
}

TEST_CASE("nontrivial S-idempotent count") {
  CHECK(s_count_formula(3) == 2);
  CHECK(s_count_formula(7) == 6);
  CHECK(s_count_formula(31) == 126);
  CHECK(s_count_formula(127) == 2 * ((1u << 18) - 1));
  CHECK_THROWS_AS(s_count_formula(15), std::invalid_argument);
}

// Stretch check, ~10 s: run explicitly with `test_constructions -ts=stretch -ns`.
TEST_CASE("stretch census at p = 127" * doctest::skip() * doctest::test_suite("stretch")) {
  const CensusReport r = verify_census(127);
  CHECK(r.expected_nontrivial == 524286);
  CHECK(r.all_ok());
}

TEST_CASE("census: constructed family is everything") {
  for (std::uint64_t p : {3ull, 7ull, 31ull}) {
    const CensusReport r = verify_census(p);
    CHECK(r.count_ok);
    CHECK(r.family_matches);
    CHECK(r.witnesses_ok);
    CHECK(r.all_ok());
    CHECK(r.detail.empty());
  }

  // independent confirmation at p = 3 and p = 7: brute-force enumeration
  // and exhaustive square-root search
  for (std::uint64_t p : {3ull, 7ull}) {
    const std::uint32_t n = static_cast<std::uint32_t>(2 * p);
    std::size_t s_found = 0, nontrivial = 0;
    for (const Gf2Element& x : brute_force_idempotents(n)) {
      if (x.is_zero() || x.is_one()) continue;
      ++nontrivial;
      bool has_witness = false;
      for (const Gf2Element& a : square_roots(x).enumerate()) {
        if (check_witness(x, a).has_value()) {
          has_witness = true;
          break;
        }
      }
      if (has_witness) ++s_found;
    }
    CHECK(nontrivial == s_count_formula(p));
    CHECK(s_found == nontrivial);
  }
}
