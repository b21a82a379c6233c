#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sidem/cyclotomic.hpp"
#include "sidem/exact_algebra.hpp"
#include "sidem/rational.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <vector>

using namespace sidem;

namespace {

CycloElement rational_element(const AbGroup& g, const std::vector<Rational>& coeffs) {
  CycloElement out(g);
  const std::uint32_t N = g.exponent();
  for (std::uint32_t i = 0; i < coeffs.size(); ++i) {
    out.set(i, CycloNumber::from_rational(N, coeffs[i]));
  }
  return out;
}

CycloNumber random_cyclo(std::uint32_t order, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> pick(-4, 4);
  std::uniform_int_distribution<long> den(1, 5);
  CycloNumber out = CycloNumber::zero(order);
  const std::size_t deg = out.coeffs().size();
  for (std::size_t i = 0; i < deg; ++i) {
    out = out + CycloNumber::zeta_pow(order, static_cast<std::int64_t>(i)) *
                    CycloNumber::from_rational(order, Rational(pick(rng), den(rng)));
  }
  return out;
}

}  // namespace

TEST_CASE("rationals are exact and reduced") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK((Rational(2, 3) * Rational(3, 2)).is_one());
  CHECK(Rational(-1, -3) == Rational(1, 3));
  CHECK(Rational(1, 2).to_string() == "1/2");
  CHECK(Rational(-6, 4).to_string() == "-3/2");
  CHECK(Rational(5).to_string() == "5");
  CHECK(Rational::from_string("-3/9") == Rational(-1, 3));
  CHECK(Rational::from_string("7") == Rational(7));
  CHECK(Rational(1, 7).inverse() == Rational(7));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long long>{-1, 1});
  CHECK(cyclotomic_polynomial(2) == std::vector<long long>{1, 1});
  CHECK(cyclotomic_polynomial(3) == std::vector<long long>{1, 1, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<long long>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long long>{1, 0, -1, 0, 1});

  // product over divisors rebuilds x^n - 1
  for (std::uint32_t n = 1; n <= 20; ++n) {
    std::vector<long long> prod{1};
    for (std::uint32_t d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      const auto phi = cyclotomic_polynomial(d);
      std::vector<long long> next(prod.size() + phi.size() - 1, 0);
      for (std::size_t i = 0; i < prod.size(); ++i) {
        for (std::size_t j = 0; j < phi.size(); ++j) next[i + j] += prod[i] * phi[j];
      }
      prod = std::move(next);
    }
    std::vector<long long> expect(n + 1, 0);
    expect[0] = -1;
    expect[n] = 1;
    CHECK(prod == expect);
  }
}

TEST_CASE("cyclotomic field arithmetic") {
  const CycloNumber z3 = CycloNumber::zeta(3);
  CHECK(z3 * z3 * z3 == CycloNumber::one(3));
  CHECK(z3.inverse() == z3 * z3);
  CHECK(CycloNumber::one(5).inverse().is_one());
  // 1 + z + z^2 = 0 in Q(zeta_3)
  CHECK((CycloNumber::one(3) + z3 + z3 * z3).is_zero());
  const CycloNumber one_plus_z3 = CycloNumber::one(3) + z3;
  CHECK((one_plus_z3 * one_plus_z3.inverse()).is_one());
  CHECK_THROWS_AS(CycloNumber::zero(3).inverse(), std::domain_error);

  std::mt19937_64 rng(7);
  for (std::uint32_t order : {1u, 2u, 3u, 4u, 6u, 12u}) {
    for (int trial = 0; trial < 30; ++trial) {
      const CycloNumber a = random_cyclo(order, rng);
      const CycloNumber b = random_cyclo(order, rng);
      const CycloNumber c = random_cyclo(order, rng);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
  }
}

TEST_CASE("primitive idempotents: orthogonal, complete, idempotent") {
  std::vector<AbGroup> groups;
  for (std::uint32_t n = 1; n <= 12; ++n) groups.push_back(AbGroup::cyclic(n));
  groups.push_back(AbGroup::product(2, 2));
  groups.push_back(AbGroup::product(2, 4));
  groups.push_back(AbGroup::product(3, 4));
  groups.push_back(AbGroup::product(2, 6));
  for (const AbGroup& g : groups) {
    const auto prim = primitive_idempotents(g);
    REQUIRE(prim.size() == g.size());
    CycloElement sum(g);
    for (std::size_t i = 0; i < prim.size(); ++i) {
      CHECK(prim[i].is_idempotent());
      sum = sum.add(prim[i]);
      for (std::size_t j = i + 1; j < prim.size(); ++j) {
        CHECK(prim[i].mul(prim[j]).is_zero());
      }
    }
    CHECK(sum.is_one());
  }
}

TEST_CASE("order-3 fixtures") {
  const AbGroup c3 = AbGroup::cyclic(3);
  const auto prim = primitive_idempotents(c3);
  CHECK(prim[0] == rational_element(c3, {Rational(1, 3), Rational(1, 3), Rational(1, 3)}));

  const CycloElement alpha1 = idempotent_from_mask(c3, 0b110);
  CHECK(alpha1 == rational_element(c3, {Rational(2, 3), Rational(-1, 3), Rational(-1, 3)}));

  // 2^3 masks, 6 nontrivial idempotents
  std::size_t nontrivial = 0;
  for (std::uint64_t mask = 0; mask < 8; ++mask) {
    const CycloElement e = idempotent_from_mask(c3, mask);
    CHECK(e.is_idempotent());
    if (!e.is_zero() && !e.is_one()) ++nontrivial;
  }
  CHECK(nontrivial == 6);

  CHECK(idempotent_from_mask(c3, 0).is_zero());
  CHECK(idempotent_from_mask(c3, 0b111).is_one());
}

TEST_CASE("negation witnesses in characteristic zero") {
  const AbGroup c3 = AbGroup::cyclic(3);
  const CycloElement alpha1 = idempotent_from_mask(c3, 0b110);
  const auto w = negation_witness(alpha1);
  CHECK(w.beta == rational_element(c3, {Rational(-2, 3), Rational(1, 3), Rational(1, 3)}));
  CHECK(w.law == AbsorptionLaw::AbsorbWitness);

  // all nontrivial idempotents of small cyclic groups and both product
  // groups admit the negation witness
  std::vector<AbGroup> groups;
  for (std::uint32_t n = 1; n <= 5; ++n) groups.push_back(AbGroup::cyclic(n));
  groups.push_back(AbGroup::product(2, 2));
  groups.push_back(AbGroup::product(2, 4));
  for (const AbGroup& g : groups) {
    std::size_t checked = 0;
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << g.size()); ++mask) {
      const CycloElement alpha = idempotent_from_mask(g, mask);
      const auto witness = negation_witness(alpha);
      CHECK(witness.beta.mul(witness.beta) == alpha);
      CHECK(alpha.mul(witness.beta) == witness.beta);
      ++checked;
    }
    CHECK(checked == (std::uint64_t{1} << g.size()) - 2);
  }

  CHECK_THROWS_AS(negation_witness(CycloElement(c3)), std::invalid_argument);
  CHECK_THROWS_AS(negation_witness(idempotent_from_mask(c3, 0b111)), std::invalid_argument);
}

TEST_CASE("Klein group: coefficients are quarters") {
  const AbGroup klein = AbGroup::product(2, 2);
  for (const CycloElement& e : primitive_idempotents(klein)) {
    for (const auto& [idx, c] : e.coeffs()) {
      REQUIRE(c.is_rational());
      const Rational r = c.as_rational();
      CHECK((r == Rational(1, 4) || r == Rational(-1, 4)));
    }
  }
}

TEST_CASE("co-idempotents are the sign choices on the mask") {
  const AbGroup c3 = AbGroup::cyclic(3);
  const CycloElement alpha1 = idempotent_from_mask(c3, 0b110);
  const auto cos = co_idempotents(alpha1);
  CHECK(cos.size() == 3);
  const CycloElement beta11 =
      rational_element(c3, {Rational(-2, 3), Rational(1, 3), Rational(1, 3)});
  CHECK(std::find(cos.begin(), cos.end(), beta11) != cos.end());
  for (const CycloElement& beta : cos) {
    CHECK(beta.mul(beta) == alpha1);
    CHECK(alpha1.mul(beta) == beta);
    CHECK(beta != alpha1);
  }

  // single-character idempotent: the only co-idempotent is the negation
  const auto prim = primitive_idempotents(c3);
  const auto cos_e1 = co_idempotents(prim[1]);
  REQUIRE(cos_e1.size() == 1);
  CHECK(cos_e1[0] == prim[1].negate());

  // alpha = 1 over cyclic(2): mask size 2, three co-idempotents
  const AbGroup c2 = AbGroup::cyclic(2);
  const auto cos_one = co_idempotents(idempotent_from_mask(c2, 0b11));
  CHECK(cos_one.size() == 3);

  // the count is 2^|mask| - 1 across every idempotent of cyclic(4)
  const AbGroup c4 = AbGroup::cyclic(4);
  for (std::uint64_t mask = 1; mask < 16; ++mask) {
    const CycloElement alpha = idempotent_from_mask(c4, mask);
    CHECK(co_idempotents(alpha).size() ==
          (std::uint64_t{1} << std::popcount(mask)) - 1);
  }

  CHECK_THROWS_AS(co_idempotents(CycloElement(c3)), std::invalid_argument);
  CHECK_THROWS_AS(co_idempotents(rational_element(c3, {Rational(1, 2)})),
                  std::invalid_argument);
}

TEST_CASE("character coordinates round-trip") {
  std::mt19937_64 rng(31);
  for (const AbGroup& g : {AbGroup::cyclic(5), AbGroup::cyclic(6), AbGroup::product(2, 3),
                           AbGroup::product(2, 4)}) {
    for (int trial = 0; trial < 10; ++trial) {
      CycloElement a(g);
      for (std::uint32_t i = 0; i < g.size(); ++i) a.set(i, random_cyclo(g.exponent(), rng));
      CHECK(from_character_coordinates(g, character_coordinates(a)) == a);
    }
  }
}

TEST_CASE("subgroup-average pairs over prime fields") {
  // case 1 in F5: 2^4 = 1, alpha = 3(1 + g^2), beta = 2(1 + g^2)
  const auto case1 = subgroup_idempotent_pair_mod(5, 4, 2, 1);
  CHECK(case1.report.valid());
  {
    AlgElement<PrimeFieldElem> expect_alpha{AbGroup::cyclic(4)};
    expect_alpha.set(0, PrimeFieldElem(5, 3));
    expect_alpha.set(2, PrimeFieldElem(5, 3));
    CHECK(case1.alpha == expect_alpha);
    AlgElement<PrimeFieldElem> expect_beta{AbGroup::cyclic(4)};
    expect_beta.set(0, PrimeFieldElem(5, 2));
    expect_beta.set(2, PrimeFieldElem(5, 2));
    CHECK(case1.beta == expect_beta);
  }

  // case 2 in F3: 2^2 = 1, alpha = 2(1 + g^2), beta = 1 + g^2
  const auto case2 = subgroup_idempotent_pair_mod(3, 4, 2, 2);
  CHECK(case2.report.valid());
  {
    AlgElement<PrimeFieldElem> expect_alpha{AbGroup::cyclic(4)};
    expect_alpha.set(0, PrimeFieldElem(3, 2));
    expect_alpha.set(2, PrimeFieldElem(3, 2));
    CHECK(case2.alpha == expect_alpha);
    AlgElement<PrimeFieldElem> expect_beta{AbGroup::cyclic(4)};
    expect_beta.set(0, PrimeFieldElem(3, 1));
    expect_beta.set(2, PrimeFieldElem(3, 1));
    CHECK(case2.beta == expect_beta);
  }

  // hypothesis violations throw
  CHECK_THROWS_AS(subgroup_idempotent_pair_mod(7, 4, 2, 1), std::invalid_argument);  // 2^4 != 1
  CHECK_THROWS_AS(subgroup_idempotent_pair_mod(5, 4, 3, 1), std::invalid_argument);  // 3 | 4 fails
  CHECK_THROWS_AS(subgroup_idempotent_pair_mod(2, 4, 2, 3), std::invalid_argument);  // p = q
  CHECK_THROWS_AS(subgroup_idempotent_pair_mod(5, 4, 2, 4), std::invalid_argument);  // bad case
}

TEST_CASE("subgroup-average pair case 3 over Q collapses") {
  const auto case3 = subgroup_idempotent_pair_rational(4, 2, 3);
  CHECK(case3.report.alpha_nontrivial_idempotent);
  CHECK(case3.report.beta_squares_to_alpha);
  CHECK(case3.report.absorption_holds);
  CHECK_FALSE(case3.report.beta_excluded);  // beta = (1+g^2) - alpha = alpha identically
  CHECK_FALSE(case3.report.valid());
  CHECK(case3.beta == case3.alpha);
  CHECK(case3.report.failed_requirements() == "beta is not outside {0, 1, alpha}");
}
