#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sidem/gf2_ring.hpp"
#include "sidem/idem_enum.hpp"
#include "sidem/numtheory.hpp"

#include <algorithm>
#include <vector>

using namespace sidem;

namespace {

std::vector<Gf2Element> sorted(std::vector<Gf2Element> v) {
  std::sort(v.begin(), v.end(), canonical_less);
  return v;
}

bool contains(const std::vector<Gf2Element>& v, const Gf2Element& e) {
  return std::find(v.begin(), v.end(), e) != v.end();
}

}  // namespace

TEST_CASE("brute force scan") {
  auto i6 = brute_force_idempotents(6);
  REQUIRE(i6.size() == 4);
  CHECK(contains(i6, Gf2Element::zero(6)));
  CHECK(contains(i6, Gf2Element::one(6)));
  CHECK(contains(i6, Gf2Element::make(6, {2, 4})));
  CHECK(contains(i6, Gf2Element::make(6, {0, 2, 4})));

  auto i2 = brute_force_idempotents(2);
  REQUIRE(i2.size() == 2);  // local ring: only 0 and 1

  auto i7 = brute_force_idempotents(7);
  CHECK(i7.size() == 8);
  CHECK(contains(i7, Gf2Element::make(7, {1, 2, 4})));
  CHECK(contains(i7, Gf2Element::make(7, {0, 1, 2, 4})));

  // ascending bit-pattern order: 0 first, 1 = g^0 second
  CHECK(i7[0].is_zero());
  CHECK(i7[1].is_one());

  CHECK_THROWS_AS(brute_force_idempotents(21), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_idempotents(0), std::invalid_argument);
}

TEST_CASE("coset idempotents at odd order") {
  auto i7 = coset_idempotents(7);
  CHECK(i7.size() == 8);
  CHECK(sorted(i7) == sorted(brute_force_idempotents(7)));

  auto i1 = coset_idempotents(1);
  REQUIRE(i1.size() == 2);
  CHECK(i1[0].is_zero());
  CHECK(i1[1].is_one());

  auto i3 = coset_idempotents(3);
  REQUIRE(i3.size() == 4);
  CHECK(contains(i3, Gf2Element::make(3, {1, 2})));
  CHECK(contains(i3, Gf2Element::make(3, {0, 1, 2})));

  CHECK_THROWS_AS(coset_idempotents(6), std::invalid_argument);
}

TEST_CASE("lift to even order by exponent scaling") {
  CHECK(lift_to_even(Gf2Element::make(7, {1, 2, 4}), 14) == Gf2Element::make(14, {2, 4, 8}));
  CHECK(lift_to_even(Gf2Element::make(7, {1, 2, 4}), 14).is_idempotent());
  CHECK(lift_to_even(Gf2Element::one(5), 20) == Gf2Element::one(20));
  CHECK(lift_to_even(Gf2Element::make(3, {1, 2}), 12) == Gf2Element::make(12, {4, 8}));
  CHECK(contains(brute_force_idempotents(12), Gf2Element::make(12, {4, 8})));

  CHECK_THROWS_AS(lift_to_even(Gf2Element::make(3, {1}), 12), std::invalid_argument);
  CHECK_THROWS_AS(lift_to_even(Gf2Element::make(5, {0}), 12), std::invalid_argument);
}

TEST_CASE("hensel lift agrees with scaling") {
  for (std::uint32_t n : {2u, 4u, 6u, 8u, 10u, 12u, 14u, 16u, 24u, 56u}) {
    for (const Gf2Element& e : coset_idempotents(odd_part(n))) {
      CHECK(hensel_lift(e, n) == lift_to_even(e, n));
    }
  }
}

TEST_CASE("enumerate matches brute force everywhere it can") {
  for (std::uint32_t n = 1; n <= 16; ++n) {
    CHECK(sorted(enumerate_idempotents(n)) == sorted(brute_force_idempotents(n)));
  }
}

TEST_CASE("census sizes and closure") {
  CHECK(enumerate_idempotents(14).size() == 8);
  CHECK(enumerate_idempotents(62).size() == 128);
  auto i4 = enumerate_idempotents(4);
  REQUIRE(i4.size() == 2);  // odd part 1
  CHECK(i4[0].is_zero());
  CHECK(i4[1].is_one());

  for (std::uint32_t n : {6u, 7u, 14u, 15u, 62u}) {
    auto idems = enumerate_idempotents(n);
    // cardinality 2^(cosets of the odd part)
    const std::size_t c = cyclotomic_cosets(odd_part(n)).size();
    CHECK(idems.size() == (std::size_t{1} << c));
    for (const auto& e : idems) {
      CHECK(e.is_idempotent());
      CHECK(contains(idems, e.complement_one()));
    }
    // closed under products
    for (const auto& a : idems) {
      for (const auto& b : idems) CHECK(contains(idems, a.mul(b)));
    }
  }
}

TEST_CASE("projection of a lift recovers the base idempotent") {
  for (std::uint32_t n : {6u, 12u, 14u, 40u}) {
    const std::uint32_t m = odd_part(n);
    for (const Gf2Element& e : coset_idempotents(m)) {
      const Gf2Element lifted = lift_to_even(e, n);
      std::vector<std::int64_t> projected;
      for (std::uint32_t u : lifted.support()) projected.push_back(u % m);
      CHECK(Gf2Element::make(m, projected) == e);
    }
  }
}
