#include "sidem/constructions.hpp"

#include "sidem/idem_enum.hpp"
#include "sidem/numtheory.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace sidem {

namespace {

MersenneWitness require_mersenne(std::uint64_t p) {
  const auto w = mersenne_exponent(p);
  if (!w) throw std::invalid_argument("p = " + std::to_string(p) + " is not a Mersenne prime");
  if (p >= (std::uint64_t{1} << 24)) {
    throw std::invalid_argument("p = " + std::to_string(p) +
                                " is beyond the supported order cap 2p < 2^25");
  }
  return *w;
}

}  // namespace

BasicPair basic_pair(std::uint64_t p, std::uint32_t l) {
  const MersenneWitness w = require_mersenne(p);
  if (l % 2 == 0 || l == 0 || l >= p) {
    throw std::invalid_argument("l must be odd with 0 < l < p");
  }
  const std::uint64_t n = 2 * p;
  BasicSpec spec;
  spec.p = p;
  spec.k = w.k;
  spec.l = l;
  spec.m = static_cast<std::uint32_t>((p - 1) / w.k);

  // alpha's exponents: 2^i * l mod 2p for i = 1..k, all distinct.
  std::vector<std::int64_t> alpha_exps;
  std::uint64_t x = l;
  for (std::uint32_t i = 1; i <= w.k; ++i) {
    x = (2 * x) % n;
    alpha_exps.push_back(static_cast<std::int64_t>(x));
    if (i >= 2) spec.x.push_back(static_cast<std::uint32_t>(x));
  }

  // beta's exponents: t_1 = l; t_i = x_i/2 when odd, x_i/2 + p when even.
  spec.t.push_back(l);
  for (std::uint32_t xi : spec.x) {
    const std::uint32_t half = xi / 2;
    spec.t.push_back(half % 2 == 1 ? half : half + static_cast<std::uint32_t>(p));
  }
  std::vector<std::int64_t> beta_exps(spec.t.begin(), spec.t.end());

  BasicPair out{Gf2Element::make(static_cast<std::uint32_t>(n), alpha_exps),
                Gf2Element::make(static_cast<std::uint32_t>(n), beta_exps), std::move(spec)};

  if (out.alpha.weight() != w.k || out.beta.weight() != w.k) {
    throw std::logic_error("basic_pair: exponents collided; orbit is degenerate");
  }
  if (out.beta.square() != out.alpha || out.alpha.mul(out.beta) != out.beta) {
    throw std::logic_error("basic_pair: witness identities failed verification");
  }
  return out;
}

std::vector<BasicPair> enumerate_basic_pairs(std::uint64_t p) {
  const MersenneWitness w = require_mersenne(p);
  const std::uint32_t n = static_cast<std::uint32_t>(2 * p);
  std::vector<BasicPair> out;
  for (const CycCoset& cls : cyclotomic_cosets(n, /*odd_only=*/true)) {
    out.push_back(basic_pair(p, cls.leader));
  }
  const std::uint64_t m = (p - 1) / w.k;
  if (out.size() != m) {
    throw std::logic_error("enumerate_basic_pairs: expected " + std::to_string(m) +
                           " generator classes, found " + std::to_string(out.size()));
  }
  // Disjoint alpha supports covering every nonzero even residue.
  Gf2Element cover = Gf2Element::zero(n);
  std::size_t total = 0;
  for (const BasicPair& bp : out) {
    cover = cover.add(bp.alpha);
    total += bp.alpha.weight();
  }
  if (total != p - 1 || cover.weight() != p - 1 || cover.test(0)) {
    throw std::logic_error("enumerate_basic_pairs: orbit sums do not tile the even residues");
  }
  return out;
}

SumPair sum_pair(const std::vector<BasicPair>& pairs) {
  if (pairs.empty()) throw std::invalid_argument("sum_pair: need at least one pair");
  const std::uint32_t n = pairs.front().alpha.modulus();
  std::set<std::uint32_t> leaders;
  for (const BasicPair& bp : pairs) {
    if (bp.alpha.modulus() != n) throw std::invalid_argument("sum_pair: mixed moduli");
    if (!leaders.insert(bp.spec.l).second) {
      throw std::invalid_argument("sum_pair: duplicate basic pair l = " +
                                  std::to_string(bp.spec.l));
    }
  }
  SumPair out{Gf2Element::zero(n), Gf2Element::zero(n)};
  for (const BasicPair& bp : pairs) {
    out.alpha = out.alpha.add(bp.alpha);
    out.beta = out.beta.add(bp.beta);
  }
  if (out.beta.square() != out.alpha) {
    throw std::logic_error("sum_pair: beta^2 != alpha");
  }
  if (out.alpha.mul(out.beta) != out.beta) {
    throw std::logic_error("sum_pair: alpha * beta != beta");
  }
  // The cross terms cancel pairwise, which is what makes the sum work.
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      const Gf2Element cross =
          pairs[i].alpha.mul(pairs[j].beta).add(pairs[j].alpha.mul(pairs[i].beta));
      if (!cross.is_zero()) {
        throw std::logic_error("sum_pair: cross terms for l = " + std::to_string(pairs[i].spec.l) +
                               ", " + std::to_string(pairs[j].spec.l) + " do not cancel");
      }
    }
  }
  return out;
}

SumPair theorem13_pair(std::uint64_t q) {
  if (q < 3 || q % 2 == 0 || !is_prime(q)) {
    throw std::invalid_argument("theorem13_pair: q must be an odd prime");
  }
  if (q >= (std::uint64_t{1} << 24)) {
    throw std::invalid_argument("theorem13_pair: q is beyond the supported order cap");
  }
  const std::uint32_t n = static_cast<std::uint32_t>(2 * q);
  std::vector<std::int64_t> alpha_exps, beta_exps;
  for (std::uint32_t e = 2; e < n; e += 2) alpha_exps.push_back(e);
  for (std::uint32_t e = 1; e < n; e += 2) {
    if (e != q) beta_exps.push_back(e);
  }
  SumPair out{Gf2Element::make(n, alpha_exps), Gf2Element::make(n, beta_exps)};
  if (out.beta.square() != out.alpha || out.alpha.mul(out.beta) != out.beta) {
    throw std::logic_error("theorem13_pair: witness identities failed verification");
  }
  return out;
}

std::uint64_t s_count_formula(std::uint64_t p) {
  const MersenneWitness w = require_mersenne(p);
  const std::uint64_t m = (p - 1) / w.k;
  if (m >= 63) throw std::invalid_argument("s_count_formula: count exceeds 64-bit range");
  // Two routes: closed form, and the subset count it abbreviates.
  const std::uint64_t closed = 2 * ((std::uint64_t{1} << m) - 1);
  std::uint64_t binomial_sum = 0;
  std::uint64_t choose = 1;  // C(m, 0)
  for (std::uint64_t j = 1; j <= m; ++j) {
    choose = choose * (m - j + 1) / j;
    binomial_sum += choose;
  }
  if (closed != 2 * binomial_sum) {
    throw std::logic_error("s_count_formula: closed form disagrees with subset count");
  }
  return closed;
}

CensusReport verify_census(std::uint64_t p) {
  const MersenneWitness w = require_mersenne(p);
  CensusReport report;
  report.p = p;
  report.k = w.k;
  report.m = static_cast<std::uint32_t>((p - 1) / w.k);
  if (report.m + 1 > 20) {
    throw std::invalid_argument("verify_census: 2^" + std::to_string(report.m + 1) +
                                " idempotents exceed the census cap 2^20");
  }
  const std::uint32_t n = static_cast<std::uint32_t>(2 * p);
  report.expected_nontrivial = s_count_formula(p);

  std::vector<Gf2Element> nontrivial;
  for (const Gf2Element& e : enumerate_idempotents(n)) {
    if (!e.is_zero() && !e.is_one()) nontrivial.push_back(e);
  }
  report.enumerated_nontrivial = nontrivial.size();
  report.count_ok = report.enumerated_nontrivial == report.expected_nontrivial;

  const std::vector<BasicPair> pairs = enumerate_basic_pairs(p);
  std::unordered_set<Gf2Element, Gf2ElementHash> family;
  bool witnesses_ok = true;
  std::ostringstream detail;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << report.m); ++mask) {
    std::vector<BasicPair> chosen;
    for (std::uint32_t i = 0; i < report.m; ++i) {
      if ((mask >> i) & 1) chosen.push_back(pairs[i]);
    }
    const SumPair sp = sum_pair(chosen);
    const auto witness = check_witness(sp.alpha, sp.beta, WitnessMethod::Constructed);
    if (!witness) {
      witnesses_ok = false;
      detail << "subset mask " << mask << ": witness failed; ";
      continue;
    }
    family.insert(sp.alpha);
    // Complement side: 1 + alpha with witness 1 + beta.
    const SWitness flipped = transfer_complement(sp.alpha, *witness);
    const Gf2Element complement = sp.alpha.complement_one();
    if (!check_witness(complement, flipped.beta, WitnessMethod::Constructed)) {
      witnesses_ok = false;
      detail << "complement of mask " << mask << ": witness failed; ";
      continue;
    }
    family.insert(complement);
  }
  report.witnesses_ok = witnesses_ok;

  bool family_matches = family.size() == nontrivial.size();
  if (family_matches) {
    for (const Gf2Element& e : nontrivial) {
      if (!family.contains(e)) {
        family_matches = false;
        detail << e.to_string() << " is outside the constructed family; ";
        break;
      }
    }
  } else {
    detail << "constructed family has " << family.size() << " members, census has "
           << nontrivial.size() << "; ";
  }
  report.family_matches = family_matches;
  report.detail = detail.str();
  return report;
}

}  // namespace sidem
