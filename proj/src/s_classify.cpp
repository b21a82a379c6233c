#include "sidem/s_classify.hpp"

#include "sidem/constructions.hpp"
#include "sidem/idem_enum.hpp"
#include "sidem/numtheory.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace sidem {

const char* to_string(AbsorptionLaw law) {
  return law == AbsorptionLaw::AbsorbWitness ? "absorb_witness" : "absorb_idempotent";
}

const char* to_string(WitnessMethod method) {
  return method == WitnessMethod::Constructed ? "constructed" : "searched";
}

const char* to_string(SStatus status) {
  switch (status) {
    case SStatus::S: return "s";
    case SStatus::NotS: return "non_s";
    default: return "inconclusive";
  }
}

std::vector<Gf2Element> SquareRootSet::enumerate(std::size_t cap_log2) const {
  if (!solvable) return {};
  if (kernel_basis.size() > cap_log2) {
    throw InconclusiveError("square root space has kernel dimension " +
                            std::to_string(kernel_basis.size()) + ", above the cap " +
                            std::to_string(cap_log2));
  }
  std::vector<Gf2Element> out;
  out.reserve(std::size_t{1} << kernel_basis.size());
  out.push_back(particular);
  // Gray-code walk: flip one basis vector per step.
  Gf2Element cur = particular;
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << kernel_basis.size()); ++i) {
    const unsigned bit = std::countr_zero(i);
    cur = cur.add(kernel_basis[bit]);
    out.push_back(cur);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

DoublingSolver::DoublingSolver(std::uint32_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("DoublingSolver: modulus must be positive");
  const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
  // Row e of the system: sum over {i : 2i = e (mod n)} of v_i equals x_e.
  std::vector<std::vector<std::uint64_t>> rows(n, std::vector<std::uint64_t>(words, 0));
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint32_t e = static_cast<std::uint32_t>((2ull * i) % n);
    rows[e][i / 64] ^= std::uint64_t{1} << (i % 64);
  }
  // Gauss-Jordan over GF(2), recording pivots.
  std::vector<bool> is_pivot_col(n, false);
  std::size_t rank = 0;
  for (std::uint32_t col = 0; col < n && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && ((rows[pivot][col / 64] >> (col % 64)) & 1) == 0) ++pivot;
    if (pivot == n) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == rank) continue;
      if ((rows[r][col / 64] >> (col % 64)) & 1) {
        for (std::size_t w = 0; w < words; ++w) rows[r][w] ^= rows[rank][w];
      }
    }
    pivot_of_row_.push_back(col);
    is_pivot_col[col] = true;
    ++rank;
  }
  rows.resize(rank);
  reduced_rows_ = std::move(rows);
  // Kernel basis: one vector per free column.
  for (std::uint32_t col = 0; col < n; ++col) {
    if (is_pivot_col[col]) continue;
    std::vector<std::int64_t> exps{col};
    for (std::size_t r = 0; r < reduced_rows_.size(); ++r) {
      if ((reduced_rows_[r][col / 64] >> (col % 64)) & 1) exps.push_back(pivot_of_row_[r]);
    }
    kernel_basis_.push_back(Gf2Element::make(n, exps));
  }
}

SquareRootSet DoublingSolver::solve(const Gf2Element& x) const {
  if (x.modulus() != n_) throw std::invalid_argument("DoublingSolver: modulus mismatch");
  // Eliminate the augmented system [A | x] with the same pivot order the
  // constructor used, tracking only the right-hand side.
  const std::size_t words = (static_cast<std::size_t>(n_) + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(n_, std::vector<std::uint64_t>(words, 0));
  std::vector<char> rhs(n_, 0);
  for (std::uint32_t i = 0; i < n_; ++i) {
    const std::uint32_t e = static_cast<std::uint32_t>((2ull * i) % n_);
    rows[e][i / 64] ^= std::uint64_t{1} << (i % 64);
  }
  for (std::uint32_t e = 0; e < n_; ++e) rhs[e] = x.test(e) ? 1 : 0;

  std::size_t rank = 0;
  std::vector<std::int64_t> pivot_cols;
  for (std::uint32_t col = 0; col < n_ && rank < n_; ++col) {
    std::size_t pivot = rank;
    while (pivot < n_ && ((rows[pivot][col / 64] >> (col % 64)) & 1) == 0) ++pivot;
    if (pivot == n_) continue;
    std::swap(rows[rank], rows[pivot]);
    std::swap(rhs[rank], rhs[pivot]);
    for (std::size_t r = 0; r < n_; ++r) {
      if (r == rank) continue;
      if ((rows[r][col / 64] >> (col % 64)) & 1) {
        for (std::size_t w = 0; w < words; ++w) rows[r][w] ^= rows[rank][w];
        rhs[r] ^= rhs[rank];
      }
    }
    pivot_cols.push_back(col);
    ++rank;
  }
  SquareRootSet out{false, Gf2Element::zero(n_), kernel_basis_};
  for (std::size_t r = rank; r < n_; ++r) {
    if (rhs[r]) return out;  // inconsistent: x is outside the image
  }
  std::vector<std::int64_t> exps;
  for (std::size_t r = 0; r < rank; ++r) {
    if (rhs[r]) exps.push_back(pivot_cols[r]);
  }
  out.solvable = true;
  out.particular = Gf2Element::make(n_, exps);
  return out;
}

SquareRootSet square_roots(const Gf2Element& x) {
  return DoublingSolver(x.modulus()).solve(x);
}

std::optional<SWitness> check_witness(const Gf2Element& x, const Gf2Element& a,
                                      WitnessMethod method) {
  if (!x.is_idempotent()) throw std::invalid_argument("check_witness: x is not idempotent");
  if (x.is_zero()) throw std::invalid_argument("check_witness: x must be nonzero");
  if (a.modulus() != x.modulus()) throw std::invalid_argument("check_witness: modulus mismatch");
  if (a.is_zero() || a.is_one() || a == x) return std::nullopt;
  if (a.square() != x) return std::nullopt;
  const Gf2Element xa = x.mul(a);
  if (xa == a) return SWitness{a, AbsorptionLaw::AbsorbWitness, method};
  if (xa == x) return SWitness{a, AbsorptionLaw::AbsorbIdempotent, method};
  return std::nullopt;
}

namespace {

// Decomposes x into a union of basic alpha supports and returns the summed
// witness, if x is such a union.
std::optional<SWitness> decompose_as_orbit_sum(const Gf2Element& x,
                                               const std::vector<BasicPair>& pairs) {
  std::vector<BasicPair> chosen;
  std::size_t covered = 0;
  for (const BasicPair& bp : pairs) {
    const Gf2Element meet_probe = x.add(bp.alpha);
    // alpha's support is either inside x's support or disjoint from it;
    // inside <=> adding alpha strictly shrinks the weight.
    if (meet_probe.weight() == x.weight() - bp.alpha.weight()) {
      chosen.push_back(bp);
      covered += bp.alpha.weight();
    } else if (meet_probe.weight() != x.weight() + bp.alpha.weight()) {
      return std::nullopt;  // partial overlap: not a union of orbits
    }
  }
  if (chosen.empty() || covered != x.weight()) return std::nullopt;
  const SumPair sp = sum_pair(chosen);
  if (sp.alpha != x) return std::nullopt;
  return check_witness(x, sp.beta, WitnessMethod::Constructed);
}

std::optional<SWitness> constructed_witness(const Gf2Element& x) {
  const std::uint32_t n = x.modulus();
  if (n % 2 != 0) return std::nullopt;
  const auto w = mersenne_exponent(n / 2);
  if (!w) return std::nullopt;
  const std::vector<BasicPair> pairs = enumerate_basic_pairs(w->p);
  if (auto direct = decompose_as_orbit_sum(x, pairs)) return direct;
  if (x.test(0) && !x.is_one()) {
    const Gf2Element y = x.complement_one();
    if (auto wy = decompose_as_orbit_sum(y, pairs)) return transfer_complement(y, *wy);
  }
  return std::nullopt;
}

}  // namespace

std::optional<SWitness> find_witness(const Gf2Element& x, std::size_t kernel_cap) {
  if (!x.is_idempotent()) throw std::invalid_argument("find_witness: x is not idempotent");
  if (x.is_zero()) throw std::invalid_argument("find_witness: x must be nonzero");

  if (auto cw = constructed_witness(x)) return cw;

  const SquareRootSet roots = square_roots(x);
  if (!roots.solvable) return std::nullopt;
  if (roots.kernel_dimension() > kernel_cap) {
    throw InconclusiveError("find_witness: kernel dimension " +
                            std::to_string(roots.kernel_dimension()) + " exceeds the cap " +
                            std::to_string(kernel_cap) + " and no construction applies");
  }
  for (const Gf2Element& a : roots.enumerate(kernel_cap)) {
    if (auto w = check_witness(x, a)) return w;
  }
  return std::nullopt;
}

SWitness transfer_complement(const Gf2Element& x, const SWitness& w) {
  if (x.is_one()) {
    throw std::invalid_argument("transfer_complement: 1 + x = 0 admits no witness");
  }
  // Re-validate the input before deriving anything from it.
  const auto checked = check_witness(x, w.beta, w.method);
  if (!checked || checked->law != w.law) {
    throw std::invalid_argument("transfer_complement: witness does not verify against x");
  }
  const Gf2Element cx = x.complement_one();
  const Gf2Element cb = w.beta.complement_one();
  // (1+x)(1+b) = 1 + x + b + xb collapses to the opposite law in char 2.
  const auto out = check_witness(cx, cb, w.method);
  if (!out) throw std::logic_error("transfer_complement: derived witness failed verification");
  return *out;
}

SReport classify(std::uint32_t n, std::size_t kernel_cap) {
  SReport report;
  report.modulus = n;
  const std::vector<Gf2Element> idems = enumerate_idempotents(n);
  report.total = idems.size();
  for (const Gf2Element& x : idems) {
    if (x.is_zero() || x.is_one()) continue;
    SEntry entry{x, SStatus::NotS, std::nullopt};
    try {
      if (auto w = find_witness(x, kernel_cap)) {
        entry.status = SStatus::S;
        entry.witness = w;
      }
    } catch (const InconclusiveError&) {
      entry.status = SStatus::Inconclusive;
    }
    report.entries.push_back(std::move(entry));
  }
  report.nontrivial = report.entries.size();
  for (const SEntry& e : report.entries) {
    switch (e.status) {
      case SStatus::S: ++report.s_count; break;
      case SStatus::NotS: ++report.non_s_count; break;
      case SStatus::Inconclusive: ++report.inconclusive_count; break;
    }
  }
  return report;
}

}  // namespace sidem
