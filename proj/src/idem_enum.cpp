#include "sidem/idem_enum.hpp"

#include "sidem/numtheory.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sidem {

std::uint32_t odd_part(std::uint32_t n) {
  while (n != 0 && n % 2 == 0) n /= 2;
  return n;
}

std::vector<Gf2Element> brute_force_idempotents(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("brute_force_idempotents: modulus must be positive");
  if (n > 20) {
    throw std::invalid_argument(
        "brute_force_idempotents: n = " + std::to_string(n) + " exceeds the cap n <= 20");
  }
  std::vector<std::uint32_t> dbl(n);
  for (std::uint32_t e = 0; e < n; ++e) dbl[e] = static_cast<std::uint32_t>((2ull * e) % n);
  std::vector<Gf2Element> out;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    std::uint64_t sq = 0;
    for (std::uint32_t e = 0; e < n; ++e) {
      if ((v >> e) & 1) sq ^= std::uint64_t{1} << dbl[e];
    }
    if (sq != v) continue;
    std::vector<std::int64_t> exps;
    for (std::uint32_t e = 0; e < n; ++e) {
      if ((v >> e) & 1) exps.push_back(e);
    }
    out.push_back(Gf2Element::make(n, exps));
  }
  return out;
}

std::vector<Gf2Element> coset_idempotents(std::uint32_t n) {
  if (n % 2 == 0) throw std::invalid_argument("coset_idempotents: modulus must be odd");
  const std::vector<CycCoset> cosets = cyclotomic_cosets(n);
  const std::size_t c = cosets.size();
  if (c > 20) {
    throw std::invalid_argument("coset_idempotents: 2^" + std::to_string(c) +
                                " idempotents exceed the census cap 2^20");
  }
  std::vector<Gf2Element> out;
  out.reserve(std::size_t{1} << c);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c); ++mask) {
    std::vector<std::int64_t> exps;
    for (std::size_t i = 0; i < c; ++i) {
      if ((mask >> i) & 1) {
        for (std::uint32_t e : cosets[i].members) exps.push_back(e);
      }
    }
    out.push_back(Gf2Element::make(n, exps));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

Gf2Element lift_to_even(const Gf2Element& e, std::uint32_t n) {
  const std::uint32_t m = odd_part(n);
  if (e.modulus() != m) {
    throw std::invalid_argument("lift_to_even: element modulus is not the odd part of n");
  }
  if (!e.is_idempotent()) throw std::invalid_argument("lift_to_even: element is not idempotent");
  const std::uint64_t scale = n / m;  // 2^a
  std::vector<std::int64_t> exps;
  for (std::uint32_t u : e.support()) {
    exps.push_back(static_cast<std::int64_t>((scale * u) % n));
  }
  return Gf2Element::make(n, exps);
}

Gf2Element hensel_lift(const Gf2Element& e, std::uint32_t n) {
  const std::uint32_t m = odd_part(n);
  if (e.modulus() != m) {
    throw std::invalid_argument("hensel_lift: element modulus is not the odd part of n");
  }
  if (!e.is_idempotent()) throw std::invalid_argument("hensel_lift: element is not idempotent");
  // Any preimage of e under the projection g -> h works; take the support
  // verbatim and square until fixed.
  std::vector<std::int64_t> exps;
  for (std::uint32_t u : e.support()) exps.push_back(u);
  Gf2Element z = Gf2Element::make(n, exps);
  for (std::uint32_t guard = 0; !z.is_idempotent(); ++guard) {
    if (guard > 64) throw std::logic_error("hensel_lift: squaring did not stabilize");
    z = z.square();
  }
  return z;
}

std::vector<Gf2Element> enumerate_idempotents(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("enumerate_idempotents: modulus must be positive");
  const std::uint32_t m = odd_part(n);
  std::vector<Gf2Element> base = coset_idempotents(m);
  if (n == m) return base;
  std::vector<Gf2Element> out;
  out.reserve(base.size());
  for (const Gf2Element& e : base) out.push_back(lift_to_even(e, n));
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace sidem
