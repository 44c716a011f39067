#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "smpkit/instance.hpp"

namespace smpkit {

// b = a_1^l_1 ... a_k^l_k, with a zero exponent meaning the factor is absent.
struct ExponentWitness {
  std::vector<std::uint32_t> exponents;
  std::uint32_t r = 1;
};

// Number of distinct powers of the tuple listing every element of S; every
// power of every tuple equals one of its first r powers.
std::uint32_t exponent_bound(const Semigroup& s);

// Throws InputError for an all-zero vector, a wrong length or an entry above r.
bool verify_exponent_witness(const SmpInstance& inst, const ExponentWitness& w);

struct CommutativeResult {
  bool member = false;
  std::optional<ExponentWitness> witness;
  std::size_t nodes = 0;  // search nodes visited
};

// Exact backtracking search over {0..r}^k with reachability pruning and
// memoised dead states. Exponential in k in the worst case.
CommutativeResult commutative_smp(const SmpInstance& inst);

}  // namespace smpkit
