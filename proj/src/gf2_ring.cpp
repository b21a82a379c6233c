#include "sidem/gf2_ring.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstddef>
#include <sstream>
#include <stdexcept>

namespace sidem {

namespace {

std::size_t word_count(std::uint32_t n) { return (static_cast<std::size_t>(n) + 63) / 64; }

// XORs src shifted left by k bits into dst. dst must be long enough.
void xor_shifted(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src,
                 std::uint32_t k) {
  const std::size_t ws = k / 64;
  const unsigned bs = k % 64;
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (src[i] == 0) continue;
    dst[i + ws] ^= src[i] << bs;
    if (bs != 0) dst[i + ws + 1] ^= src[i] >> (64 - bs);
  }
}

}  // namespace

Gf2Element::Gf2Element(std::uint32_t n) : n_(n), words_(word_count(n), 0) {}

Gf2Element Gf2Element::zero(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("Gf2Element: modulus must be positive");
  return Gf2Element(n);
}

Gf2Element Gf2Element::one(std::uint32_t n) {
  Gf2Element e = zero(n);
  e.toggle(0);
  return e;
}

Gf2Element Gf2Element::make(std::uint32_t n, const std::vector<std::int64_t>& exponents) {
  Gf2Element e = zero(n);
  const std::int64_t m = static_cast<std::int64_t>(n);
  for (std::int64_t x : exponents) {
    std::int64_t r = x % m;
    if (r < 0) r += m;
    e.toggle(static_cast<std::uint32_t>(r));
  }
  return e;
}

void Gf2Element::toggle(std::uint32_t exponent) {
  words_[exponent / 64] ^= (std::uint64_t{1} << (exponent % 64));
}

bool Gf2Element::test(std::uint32_t exponent) const {
  if (exponent >= n_) return false;
  return (words_[exponent / 64] >> (exponent % 64)) & 1;
}

std::vector<std::uint32_t> Gf2Element::support() const {
  std::vector<std::uint32_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      const unsigned b = std::countr_zero(bits);
      out.push_back(static_cast<std::uint32_t>(w * 64 + b));
      bits &= bits - 1;
    }
  }
  return out;
}

std::size_t Gf2Element::weight() const {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += std::popcount(w);
  return c;
}

bool Gf2Element::is_zero() const {
  for (std::uint64_t w : words_) {
    if (w != 0) return false;
  }
  return true;
}

bool Gf2Element::is_one() const { return weight() == 1 && test(0); }

Gf2Element Gf2Element::add(const Gf2Element& rhs) const {
  if (n_ != rhs.n_) throw std::invalid_argument("Gf2Element::add: modulus mismatch");
  Gf2Element out = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] ^= rhs.words_[i];
  return out;
}

Gf2Element Gf2Element::mul(const Gf2Element& rhs) const {
  if (n_ != rhs.n_) throw std::invalid_argument("Gf2Element::mul: modulus mismatch");
  // Convolve by XORing shifted copies of the heavier operand into a 2n-bit
  // buffer, one per exponent of the lighter operand, then wrap once.
  const Gf2Element& light = (weight() <= rhs.weight()) ? *this : rhs;
  const Gf2Element& heavy = (&light == this) ? rhs : *this;
  std::vector<std::uint64_t> buf(2 * words_.size() + 1, 0);
  for (std::uint32_t u : light.support()) xor_shifted(buf, heavy.words_, u);

  Gf2Element out = zero(n_);
  for (std::size_t i = 0; i < out.words_.size(); ++i) out.words_[i] = buf[i];
  // Fold bits [n, 2n) back onto [0, n): g^(n+j) = g^j.
  const std::size_t ws = n_ / 64;
  const unsigned bs = n_ % 64;
  for (std::size_t i = 0; i < out.words_.size(); ++i) {
    std::uint64_t hi = buf[i + ws] >> bs;
    if (bs != 0 && i + ws + 1 < buf.size()) hi |= buf[i + ws + 1] << (64 - bs);
    out.words_[i] ^= hi;
  }
  // Clear anything at or above bit n in the top word.
  if (bs != 0) out.words_.back() &= (std::uint64_t{1} << bs) - 1;
  return out;
}

Gf2Element Gf2Element::square() const {
  Gf2Element out = zero(n_);
  for (std::uint32_t e : support()) {
    out.toggle(static_cast<std::uint32_t>((2 * static_cast<std::uint64_t>(e)) % n_));
  }
  return out;
}

bool Gf2Element::is_idempotent() const { return square() == *this; }

Gf2Element Gf2Element::complement_one() const {
  Gf2Element out = *this;
  out.toggle(0);
  return out;
}

bool Gf2Element::operator==(const Gf2Element& rhs) const {
  return n_ == rhs.n_ && words_ == rhs.words_;
}

std::string Gf2Element::to_string() const {
  const std::vector<std::uint32_t> supp = support();
  if (supp.empty()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < supp.size(); ++i) {
    if (i != 0) out << " + ";
    if (supp[i] == 0) {
      out << "1";
    } else if (supp[i] == 1) {
      out << "g";
    } else {
      out << "g^" << supp[i];
    }
  }
  return out.str();
}

Gf2Element Gf2Element::parse(std::uint32_t n, const std::string& text) {
  std::vector<std::int64_t> exps;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos < text.size() && text[pos] == '0') {
    ++pos;
    skip_ws();
    if (pos == text.size()) return zero(n);
    throw std::invalid_argument("Gf2Element::parse: trailing input after \"0\"");
  }
  bool expect_term = true;
  while (pos < text.size()) {
    if (!expect_term) {
      if (text[pos] != '+') throw std::invalid_argument("Gf2Element::parse: expected '+'");
      ++pos;
      skip_ws();
      expect_term = true;
      continue;
    }
    if (text[pos] == '1') {
      exps.push_back(0);
      ++pos;
    } else if (text[pos] == 'g') {
      ++pos;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("Gf2Element::parse: missing exponent");
        exps.push_back(std::stoll(text.substr(start, pos - start)));
      } else {
        exps.push_back(1);
      }
    } else {
      throw std::invalid_argument("Gf2Element::parse: unexpected character");
    }
    skip_ws();
    expect_term = false;
  }
  if (expect_term) throw std::invalid_argument("Gf2Element::parse: dangling '+'");
  return make(n, exps);
}

bool canonical_less(const Gf2Element& a, const Gf2Element& b) {
  if (a.modulus() != b.modulus()) return a.modulus() < b.modulus();
  const std::size_t wa = a.weight(), wb = b.weight();
  if (wa != wb) return wa < wb;
  // Equal weight: the element owning the lowest differing exponent comes
  // first in the lexicographic order on ascending exponent lists.
  const auto& aw = a.words();
  const auto& bw = b.words();
  for (std::size_t i = 0; i < aw.size(); ++i) {
    const std::uint64_t d = aw[i] ^ bw[i];
    if (d != 0) {
      const std::uint64_t low = d & (~d + 1);
      return (aw[i] & low) != 0;
    }
  }
  return false;
}

std::size_t Gf2ElementHash::operator()(const Gf2Element& e) const {
  std::size_t h = std::hash<std::uint32_t>{}(e.modulus());
  for (std::uint64_t w : e.words()) {
    h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace sidem
