#pragma once

// Subsets of a 1-based universe [n] = {1,...,n}, packed into a single
// 64-bit word. Bit i of the mask holds element i+1; the universe is capped
// at 64 elements so every set operation is one machine instruction.
// External labels are 1-based everywhere, bit positions 0-based internally.

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace scfam {

inline constexpr int kMaxUniverse = 64;

inline constexpr std::uint64_t universe_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

inline void check_universe(int n) {
  if (n < 1 || n > kMaxUniverse)
    throw std::invalid_argument("universe size must be in [1,64], got " +
                                std::to_string(n));
}

class ElementSet {
 public:
  ElementSet() : bits_(0), n_(1) {}

  ElementSet(int universe_size, std::uint64_t mask) : bits_(mask), n_(universe_size) {
    check_universe(n_);
    if (mask & ~universe_mask(n_))
      throw std::invalid_argument("set mask has bits outside the universe");
  }

  static ElementSet empty(int universe_size) { return ElementSet(universe_size, 0); }

  static ElementSet full(int universe_size) {
    return ElementSet(universe_size, universe_mask(universe_size));
  }

  // Elements are 1-based labels in [1, n].
  static ElementSet of(int universe_size, std::initializer_list<int> elems) {
    return of(universe_size, std::vector<int>(elems));
  }

  static ElementSet of(int universe_size, const std::vector<int>& elems) {
    check_universe(universe_size);
    std::uint64_t m = 0;
    for (int e : elems) {
      if (e < 1 || e > universe_size)
        throw std::invalid_argument("element " + std::to_string(e) +
                                    " outside universe [1," +
                                    std::to_string(universe_size) + "]");
      m |= std::uint64_t{1} << (e - 1);
    }
    return ElementSet(universe_size, m);
  }

  [[nodiscard]] std::uint64_t mask() const { return bits_; }
  [[nodiscard]] int universe_size() const { return n_; }
  [[nodiscard]] int size() const { return std::popcount(bits_); }
  [[nodiscard]] bool is_empty() const { return bits_ == 0; }

  [[nodiscard]] bool contains(int element) const {
    return element >= 1 && element <= n_ && (bits_ >> (element - 1)) & 1;
  }

  [[nodiscard]] ElementSet with(int element) const {
    ElementSet r = *this;
    if (element < 1 || element > n_) throw std::invalid_argument("element outside universe");
    r.bits_ |= std::uint64_t{1} << (element - 1);
    return r;
  }

  [[nodiscard]] ElementSet without(int element) const {
    ElementSet r = *this;
    if (element < 1 || element > n_) throw std::invalid_argument("element outside universe");
    r.bits_ &= ~(std::uint64_t{1} << (element - 1));
    return r;
  }

  [[nodiscard]] std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    std::uint64_t m = bits_;
    while (m) {
      out.push_back(std::countr_zero(m) + 1);
      m &= m - 1;
    }
    return out;
  }

  [[nodiscard]] ElementSet intersect(const ElementSet& o) const {
    return ElementSet(n_, bits_ & o.bits_);
  }
  [[nodiscard]] ElementSet unite(const ElementSet& o) const {
    return ElementSet(n_, bits_ | o.bits_);
  }
  [[nodiscard]] ElementSet difference(const ElementSet& o) const {
    return ElementSet(n_, bits_ & ~o.bits_);
  }
  [[nodiscard]] ElementSet complement() const {
    return ElementSet(n_, ~bits_ & universe_mask(n_));
  }
  [[nodiscard]] bool subset_of(const ElementSet& o) const {
    return (bits_ & ~o.bits_) == 0;
  }
  [[nodiscard]] bool intersects(const ElementSet& o) const {
    return (bits_ & o.bits_) != 0;
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

  // On equal-size sets, ascending mask value is exactly colexicographic
  // order, so this doubles as the canonical order of the library.
  friend bool operator<(const ElementSet& a, const ElementSet& b) {
    return a.bits_ < b.bits_;
  }

  [[nodiscard]] std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int e : elements()) {
      if (!first) s += ",";
      s += std::to_string(e);
      first = false;
    }
    return s + "}";
  }

 private:
  std::uint64_t bits_;
  int n_;
};

}  // namespace scfam
