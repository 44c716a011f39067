#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "smpkit/instance.hpp"

namespace smpkit {

// Packed vector over GF(2).
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}
  static BitVector from_bits(const std::vector<std::uint8_t>& bits);

  std::size_t size() const noexcept { return size_; }
  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i, bool v) {
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (v)
      words_[i / 64] |= mask;
    else
      words_[i / 64] &= ~mask;
  }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  BitVector& operator^=(const BitVector& o);
  bool none() const noexcept;
  // Lowest set index, or size() when zero.
  std::size_t lowest() const noexcept;
  bool operator==(const BitVector& o) const = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct Z2Result {
  bool member = false;
  // 0-based indices; a multiset (a zero target without allow_empty uses {0, 0}).
  std::vector<std::size_t> combination;
};

// Is target the sum of a sub-multiset of `vectors`? The empty sum is allowed
// only with allow_empty. Pivots are taken at the lowest index.
Z2Result z2_membership(const std::vector<BitVector>& vectors, const BitVector& target,
                       bool allow_empty);

// Element indices of the builtin T(2): constant maps and the two permutations.
namespace t2 {
inline constexpr Elem kZero = 0;  // 11
inline constexpr Elem kId = 1;    // 12
inline constexpr Elem kFlip = 2;  // 21
inline constexpr Elem kOne = 3;   // 22
inline bool is_constant(Elem x) { return x == kZero || x == kOne; }
}  // namespace t2

struct T2Result {
  bool member = false;
  std::optional<Witness> witness;
  std::size_t depth = 0;  // recursive calls made; never exceeds n
};

// Polynomial SMP over the builtin T(2). Throws PreconditionError for any other
// semigroup.
T2Result t2_smp(const SmpInstance& inst);

}  // namespace smpkit
