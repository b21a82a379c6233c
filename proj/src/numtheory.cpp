#include "sidem/numtheory.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace sidem {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

}  // namespace

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("mod_pow: zero modulus");
  std::uint64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

bool is_prime(std::uint64_t u) {
  if (u < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
                          31ull, 37ull}) {
    if (u % p == 0) return u == p;
  }
  // Miller-Rabin with a base set deterministic for all 64-bit inputs.
  std::uint64_t d = u - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
                          31ull, 37ull}) {
    std::uint64_t x = mod_pow(a, d, u);
    if (x == 1 || x == u - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mul_mod(x, x, u);
      if (x == u - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool lucas_lehmer(std::uint32_t k) {
  if (k < 2 || k > 63) throw std::invalid_argument("lucas_lehmer: k must be in [2, 63]");
  if (k == 2) return true;  // 2^2 - 1 = 3
  if (!is_prime(k)) return false;  // composite k forces 2^k - 1 composite
  const std::uint64_t m = (std::uint64_t{1} << k) - 1;
  std::uint64_t s = 4 % m;
  for (std::uint32_t i = 0; i + 2 < k; ++i) {
    s = (mul_mod(s, s, m) + m - 2) % m;
  }
  return s == 0;
}

std::optional<MersenneWitness> mersenne_exponent(std::uint64_t p) {
  if (p < 3 || p == UINT64_MAX) return std::nullopt;
  const std::uint64_t q = p + 1;
  if ((q & (q - 1)) != 0) return std::nullopt;  // p + 1 must be a power of two
  std::uint32_t k = 0;
  for (std::uint64_t t = q; t > 1; t >>= 1) ++k;
  if (!is_prime(k) || !is_prime(p)) return std::nullopt;
  return MersenneWitness{k, p};
}

bool fermat_divisibility(std::uint64_t k) {
  if (!is_prime(k)) throw std::invalid_argument("fermat_divisibility: k must be prime");
  return mod_pow(2, k, k) == 2 % k;
}

std::uint64_t mult_order(std::uint64_t a, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("mult_order: zero modulus");
  if (std::gcd(a % m, m) != 1) throw std::invalid_argument("mult_order: arguments not coprime");
  if (m == 1) return 1;
  std::uint64_t d = 1;
  std::uint64_t x = a % m;
  while (x != 1) {
    x = mul_mod(x, a % m, m);
    ++d;
  }
  return d;
}

namespace {

std::vector<CycCoset> doubling_components(std::uint32_t m) {
  // Union-find over the edges x -> 2x mod m; for odd m the components are
  // exactly the doubling orbits.
  std::vector<std::uint32_t> parent(m);
  for (std::uint32_t i = 0; i < m; ++i) parent[i] = i;
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (std::uint32_t i = 0; i < m; ++i) {
    const std::uint32_t j = static_cast<std::uint32_t>((2ull * i) % m);
    const std::uint32_t a = find(i), b = find(j);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<std::uint32_t, std::vector<std::uint32_t>> blocks;
  for (std::uint32_t i = 0; i < m; ++i) blocks[find(i)].push_back(i);
  std::vector<CycCoset> out;
  out.reserve(blocks.size());
  for (auto& [leader, members] : blocks) {
    out.push_back(CycCoset{m, leader, std::move(members)});
  }
  return out;
}

std::vector<CycCoset> odd_generator_classes(std::uint32_t m) {
  std::uint32_t odd_part = m;
  while (odd_part % 2 == 0) odd_part /= 2;
  // Key each odd l by its forward orbit {2^j l mod m, j >= 1}; generators of
  // the zero orbit are dropped.
  std::map<std::vector<std::uint32_t>, std::vector<std::uint32_t>> classes;
  for (std::uint32_t l = 1; l < m; l += 2) {
    if (l % odd_part == 0) continue;
    std::set<std::uint32_t> seen;
    std::uint64_t v = (2ull * l) % m;
    while (seen.insert(static_cast<std::uint32_t>(v)).second) v = (2 * v) % m;
    std::vector<std::uint32_t> orbit(seen.begin(), seen.end());
    classes[orbit].push_back(l);
  }
  std::vector<CycCoset> out;
  out.reserve(classes.size());
  for (auto& [orbit, generators] : classes) {
    out.push_back(CycCoset{m, generators.front(), generators});
  }
  std::sort(out.begin(), out.end(),
            [](const CycCoset& a, const CycCoset& b) { return a.leader < b.leader; });
  return out;
}

}  // namespace

std::vector<CycCoset> cyclotomic_cosets(std::uint32_t m, bool odd_only) {
  if (m == 0) throw std::invalid_argument("cyclotomic_cosets: modulus must be positive");
  return odd_only ? odd_generator_classes(m) : doubling_components(m);
}

}  // namespace sidem
