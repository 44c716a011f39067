#pragma once

#include "smpkit/instance.hpp"
#include "smpkit/structure.hpp"

namespace smpkit {

// Diagnostics of one Clifford reduction run.
struct CliffordTrace {
  std::size_t kept_generators = 0;     // after preorder filtering
  bool coordinate_check_passed = false;
  std::size_t group_coordinates = 0;   // n * |I|
  std::size_t representatives = 0;
};

// SMP over a Clifford semigroup: filter generators by the natural preorder,
// check the idempotent power of the target coordinatewise, then decide one
// group instance through gamma.
bool clifford_smp(const SmpInstance& inst, const CliffordDecomposition& dec,
                  CliffordTrace* trace = nullptr);

// Generators surviving the preorder filter (indices into inst.generators).
std::vector<std::size_t> clifford_filter(const SmpInstance& inst,
                                         const CliffordDecomposition& dec);

}  // namespace smpkit
