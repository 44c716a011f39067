#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "smpkit/instance.hpp"

namespace smpkit {

// Builtin names used across the randomized checks.
const std::vector<std::string>& catalog_names();
// Ideal extensions of a Clifford semigroup by a nilpotent one that are not
// themselves Clifford.
const std::vector<std::string>& extension_catalog_names();

Tup random_tuple(const Semigroup& s, std::size_t n, std::mt19937& rng);

// Random generators; the target is a random product of generators or a
// uniformly random tuple with equal probability.
SmpInstance random_instance(SemigroupPtr s, std::size_t n, std::size_t k, std::mt19937& rng);

// Large instances for the timing checks. The Clifford one lives over
// direct_product(semilattice_chain(2),cyclic_group(2)) and its target is a
// product of a random subset of the generators.
SmpInstance perf_clifford_instance(std::size_t n, std::size_t k, std::uint32_t seed);
// Over T(2): sparse constant coordinates so the recursion goes deep.
SmpInstance perf_t2_instance(std::size_t n, std::size_t k, std::uint32_t seed);

}  // namespace smpkit
