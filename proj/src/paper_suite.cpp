#include "sidem/paper_suite.hpp"

#include "sidem/constructions.hpp"
#include "sidem/exact_algebra.hpp"
#include "sidem/idem_enum.hpp"
#include "sidem/numtheory.hpp"
#include "sidem/s_classify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

namespace sidem {

namespace {

// Accumulates named sub-checks; the first failure is kept as the detail.
class Checker {
 public:
  void require(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && detail_.empty()) detail_ = what;
    pass_ = pass_ && ok;
  }
  bool pass() const { return pass_; }
  std::string summary(const std::string& on_pass) const {
    if (pass_) return on_pass + " (" + std::to_string(checks_) + " checks)";
    return detail_;
  }

 private:
  bool pass_ = true;
  std::size_t checks_ = 0;
  std::string detail_;
};

std::string supp_str(const Gf2Element& e) { return e.to_string(); }

bool witness_reverifies(const Gf2Element& x, const SWitness& w) {
  if (w.beta.square() != x) return false;
  const Gf2Element prod = x.mul(w.beta);
  const Gf2Element expect = (w.law == AbsorptionLaw::AbsorbWitness) ? w.beta : x;
  return prod == expect && !w.beta.is_zero() && !w.beta.is_one() && w.beta != x;
}

void criterion_census_p3(Checker& c) {
  const SReport r = classify(6);
  c.require(r.nontrivial == 2, "expected 2 nontrivial idempotents at order 6");
  c.require(r.s_count == 2, "expected both order-6 idempotents to be S");
  c.require(s_count_formula(3) == 2, "count formula at p = 3");
  c.require(r.s_count == s_count_formula(3), "census disagrees with the count formula");
}

void criterion_census_p7(Checker& c) {
  const SReport r = classify(14);
  c.require(r.nontrivial == 6, "expected 6 nontrivial idempotents at order 14");
  c.require(r.s_count == 6, "expected all 6 to be S");
  c.require(r.s_count == 2 * ((1u << 2) - 1), "2(2^2 - 1) = 6");
  const DoublingSolver solver(14);
  c.require(solver.kernel_dimension() == 7, "kernel dimension at order 14 should be 7");
  for (const SEntry& e : r.entries) {
    c.require(e.witness.has_value() && witness_reverifies(e.idempotent, *e.witness),
              "direct convolution re-verification failed for " + supp_str(e.idempotent));
    // independent confirmation: exhaustive scan over all 2^7 square roots
    bool found = false;
    for (const Gf2Element& a : solver.solve(e.idempotent).enumerate()) {
      if (check_witness(e.idempotent, a)) {
        found = true;
        break;
      }
    }
    c.require(found == e.is_s(),
              "exhaustive search disagrees with census for " + supp_str(e.idempotent));
  }
}

void criterion_census_p31(Checker& c) {
  const SReport r = classify(62);
  c.require(r.nontrivial == 126, "expected 126 nontrivial idempotents at order 62");
  c.require(r.s_count == 126, "expected all 126 to be S");
  c.require(r.s_count == s_count_formula(31), "census disagrees with 2(2^6 - 1)");
  for (const SEntry& e : r.entries) {
    c.require(e.witness.has_value() && e.witness->method == WitnessMethod::Constructed,
              "witness for " + supp_str(e.idempotent) + " was not constructed");
  }
  const CensusReport census = verify_census(31);
  c.require(census.count_ok, "census count mismatch at p = 31");
  c.require(census.family_matches,
            "enumerated idempotents differ from subset sums and their complements");
  c.require(census.witnesses_ok, "constructed witnesses failed at p = 31");
}

void criterion_order62_fixture(Checker& c) {
  const BasicPair bp = basic_pair(31, 1);
  c.require(bp.alpha == Gf2Element::make(62, {2, 4, 8, 16, 32}),
            "alpha differs from g^2 + g^4 + g^8 + g^16 + g^32");
  c.require(bp.beta == Gf2Element::make(62, {1, 33, 35, 39, 47}),
            "beta differs from g + g^33 + g^35 + g^39 + g^47");
  c.require(bp.beta.square() == bp.alpha, "beta^2 != alpha");
  c.require(bp.alpha.mul(bp.beta) == bp.beta, "alpha * beta != beta");
}

void criterion_odd_orders(Checker& c, std::uint64_t seed) {
  for (std::uint32_t n = 3; n <= 15; n += 2) {
    const SReport r = classify(n);
    c.require(r.nontrivial >= 2,
              "order " + std::to_string(n) + " should have at least 2 nontrivial idempotents");
    c.require(r.inconclusive_count == 0,
              "order " + std::to_string(n) + " search should be exhaustive");
    c.require(r.s_count == 0,
              "order " + std::to_string(n) + " should have no S-idempotents");
  }
  // unique square roots at odd order: 1000 random elements across n <= 101
  std::mt19937_64 rng(seed);
  std::size_t trials = 0;
  for (std::uint32_t n = 3; n <= 101; n += 2) {
    const DoublingSolver solver(n);
    c.require(solver.kernel_dimension() == 0,
              "kernel at odd order " + std::to_string(n) + " is nontrivial");
    for (int i = 0; i < 20; ++i) {
      std::vector<std::int64_t> exps;
      for (std::uint32_t e = 0; e < n; ++e) {
        if (rng() & 1) exps.push_back(e);
      }
      const Gf2Element x = Gf2Element::make(n, exps);
      const SquareRootSet roots = solver.solve(x);
      c.require(roots.solvable && roots.kernel_dimension() == 0 &&
                    roots.particular.square() == x,
                "square root at odd order " + std::to_string(n) + " is not unique");
      ++trials;
    }
  }
  c.require(trials == 1000, "expected exactly 1000 random trials");
}

void criterion_oracle_equivalence(Checker& c) {
  for (std::uint32_t n = 1; n <= 16; ++n) {
    std::vector<Gf2Element> a = enumerate_idempotents(n);
    std::vector<Gf2Element> b = brute_force_idempotents(n);
    std::sort(a.begin(), a.end(), canonical_less);
    std::sort(b.begin(), b.end(), canonical_less);
    c.require(a == b, "enumeration differs from brute force at n = " + std::to_string(n));
    if (n % 2 == 0) {
      for (const Gf2Element& e : coset_idempotents(odd_part(n))) {
        c.require(hensel_lift(e, n) == lift_to_even(e, n),
                  "lift disagreement at n = " + std::to_string(n));
      }
    }
  }
}

void criterion_even_order_pairs(Checker& c) {
  for (std::uint64_t q = 3; q <= 101; q += 2) {
    if (!is_prime(q)) continue;
    const SumPair pair = theorem13_pair(q);
    c.require(pair.beta.square() == pair.alpha,
              "beta^2 != alpha at q = " + std::to_string(q));
    c.require(pair.alpha.mul(pair.beta) == pair.beta,
              "alpha * beta != beta at q = " + std::to_string(q));
    const auto w = check_witness(pair.alpha, pair.beta);
    c.require(w.has_value() && w->law == AbsorptionLaw::AbsorbWitness,
              "witness record failed at q = " + std::to_string(q));
  }
}

void criterion_subset_sums(Checker& c) {
  for (std::uint64_t p : {3ull, 7ull, 31ull}) {
    const std::vector<BasicPair> pairs = enumerate_basic_pairs(p);
    const std::uint32_t m = static_cast<std::uint32_t>(pairs.size());
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
      std::vector<BasicPair> chosen;
      for (std::uint32_t i = 0; i < m; ++i) {
        if ((mask >> i) & 1) chosen.push_back(pairs[i]);
      }
      // sum_pair verifies both identities and the cross-term cancellation
      try {
        const SumPair sp = sum_pair(chosen);
        const auto w = check_witness(sp.alpha, sp.beta, WitnessMethod::Constructed);
        c.require(w.has_value(), "subset sum is not witnessed at p = " + std::to_string(p));
        if (!w) continue;
        const SWitness flipped = transfer_complement(sp.alpha, *w);
        c.require(witness_reverifies(sp.alpha.complement_one(), flipped),
                  "complement witness failed at p = " + std::to_string(p));
      } catch (const std::exception& ex) {
        c.require(false, std::string("sum failed: ") + ex.what());
      }
    }
  }
}

void criterion_cyclic3_char0(Checker& c) {
  const AbGroup c3 = AbGroup::cyclic(3);
  std::size_t nontrivial = 0;
  for (std::uint64_t mask = 1; mask < 7; ++mask) {
    const CycloElement alpha = idempotent_from_mask(c3, mask);
    if (alpha.is_zero() || alpha.is_one()) continue;
    ++nontrivial;
    const auto w = negation_witness(alpha);
    c.require(w.beta.mul(w.beta) == alpha && alpha.mul(w.beta) == w.beta,
              "negation witness failed for mask " + std::to_string(mask));
  }
  c.require(nontrivial == 6, "cyclic(3) should have 2^3 - 2 = 6 nontrivial idempotents");

  const CycloElement alpha1 = idempotent_from_mask(c3, 0b110);
  CycloElement expect(c3);
  expect.set(0, CycloNumber::from_rational(3, Rational(2, 3)));
  expect.set(1, CycloNumber::from_rational(3, Rational(-1, 3)));
  expect.set(2, CycloNumber::from_rational(3, Rational(-1, 3)));
  c.require(alpha1 == expect, "mask {1,2} is not 2/3 - g/3 - g^2/3");

  const auto cos = co_idempotents(alpha1);
  c.require(cos.size() == 3, "mask {1,2} should have exactly 3 co-idempotents");
  c.require(std::find(cos.begin(), cos.end(), alpha1.negate()) != cos.end(),
            "-alpha_1 missing from the co-idempotents");
  for (const CycloElement& beta : cos) {
    c.require(beta.mul(beta) == alpha1 && alpha1.mul(beta) == beta,
              "a co-idempotent failed its identities");
  }
}

void criterion_klein_group(Checker& c) {
  const AbGroup klein = AbGroup::product(2, 2);
  std::size_t nontrivial = 0;
  for (std::uint64_t mask = 1; mask < 15; ++mask) {
    const CycloElement alpha = idempotent_from_mask(klein, mask);
    if (alpha.is_zero() || alpha.is_one()) continue;
    ++nontrivial;
    const auto w = negation_witness(alpha);
    c.require(w.beta.mul(w.beta) == alpha && alpha.mul(w.beta) == w.beta,
              "negation witness failed for mask " + std::to_string(mask));
  }
  c.require(nontrivial == 14, "Z2 x Z2 should have 2^4 - 2 = 14 nontrivial idempotents");
}

void criterion_subgroup_pairs(Checker& c) {
  const auto case1 = subgroup_idempotent_pair_mod(5, 4, 2, 1);
  c.require(case1.report.valid(), "case 1 over F5 should meet all four requirements");
  const auto case2 = subgroup_idempotent_pair_mod(3, 4, 2, 2);
  c.require(case2.report.valid(), "case 2 over F3 should meet all four requirements");
  const auto case3 = subgroup_idempotent_pair_rational(4, 2, 3);
  c.require(!case3.report.valid(), "case 3 over Q must be reported invalid");
  c.require(case3.report.alpha_nontrivial_idempotent && case3.report.beta_squares_to_alpha &&
                case3.report.absorption_holds && !case3.report.beta_excluded,
            "case 3 over Q must fail exactly the requirement beta outside {0, 1, alpha}");
  c.require(case3.report.failed_requirements() == "beta is not outside {0, 1, alpha}",
            "case 3 failure message should name the excluded-witness requirement");
}

void criterion_numtheory(Checker& c) {
  for (std::uint32_t k = 2; k <= 31; ++k) {
    const std::uint64_t m = (std::uint64_t{1} << k) - 1;
    bool prime = m >= 2;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
      if (m % d == 0) {
        prime = false;
        break;
      }
    }
    c.require(lucas_lehmer(k) == prime,
              "lucas_lehmer disagrees with trial division at k = " + std::to_string(k));
  }
  for (std::uint64_t k = 2; k <= 97; ++k) {
    if (!is_prime(k)) continue;
    c.require(fermat_divisibility(k), "2^k = 2 (mod k) failed at k = " + std::to_string(k));
  }
}

}  // namespace

std::vector<CriterionResult> run_paper_suite(std::uint64_t seed) {
  struct Spec {
    int id;
    const char* name;
    double budget;
    void (*fn)(Checker&, std::uint64_t);
  };
  const Spec specs[] = {
      {1, "order 6: both nontrivial idempotents are S, count 2(2^1 - 1)", 1.0,
       [](Checker& c, std::uint64_t) { criterion_census_p3(c); }},
      {2, "order 14: all 6 are S; search over 2^7 roots confirms", 1.0,
       [](Checker& c, std::uint64_t) { criterion_census_p7(c); }},
      {3, "order 62: 126 nontrivial, all S via the constructed family", 10.0,
       [](Checker& c, std::uint64_t) { criterion_census_p31(c); }},
      {4, "order 62 basic pair reproduces the fixture exactly", 1.0,
       [](Checker& c, std::uint64_t) { criterion_order62_fixture(c); }},
      {5, "odd orders: no S-idempotents; square roots unique", 30.0,
       [](Checker& c, std::uint64_t s) { criterion_odd_orders(c, s); }},
      {6, "enumeration equals brute force; both lifts agree", 60.0,
       [](Checker& c, std::uint64_t) { criterion_oracle_equivalence(c); }},
      {7, "order-2q pairs verify for every odd prime q <= 101", 10.0,
       [](Checker& c, std::uint64_t) { criterion_even_order_pairs(c); }},
      {8, "subset sums and their complements stay S (p = 3, 7, 31)", 10.0,
       [](Checker& c, std::uint64_t) { criterion_subset_sums(c); }},
      {9, "cyclic(3) over Q(zeta_3): masks, co-idempotents, negations", 1.0,
       [](Checker& c, std::uint64_t) { criterion_cyclic3_char0(c); }},
      {10, "Z2 x Z2: all 14 nontrivial idempotents carry negation witnesses", 1.0,
       [](Checker& c, std::uint64_t) { criterion_klein_group(c); }},
      {11, "subgroup pairs: F5 case 1 and F3 case 2 valid, Q case 3 invalid", 1.0,
       [](Checker& c, std::uint64_t) { criterion_subgroup_pairs(c); }},
      {12, "lucas-lehmer vs trial division (k <= 31); 2^k = 2 mod k (k <= 97)", 5.0,
       [](Checker& c, std::uint64_t) { criterion_numtheory(c); }},
  };

  std::vector<CriterionResult> results;
  for (const Spec& spec : specs) {
    CriterionResult r;
    r.id = spec.id;
    r.name = spec.name;
    r.budget_seconds = spec.budget;
    Checker checker;
    const auto start = std::chrono::steady_clock::now();
    try {
      spec.fn(checker, seed);
    } catch (const std::exception& ex) {
      checker.require(false, std::string("exception: ") + ex.what());
    }
    const auto stop = std::chrono::steady_clock::now();
    r.seconds = std::chrono::duration<double>(stop - start).count();
    const bool in_budget = r.seconds < spec.budget;
    r.pass = checker.pass() && in_budget;
    r.detail = checker.summary("exact");
    if (!in_budget) {
      r.detail = "exceeded the " + std::to_string(spec.budget) + " s budget";
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace sidem
