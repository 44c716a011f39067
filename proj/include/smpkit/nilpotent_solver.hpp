#pragma once

#include <functional>
#include <optional>

#include "smpkit/instance.hpp"
#include "smpkit/structure.hpp"

namespace smpkit {

struct ExtensionTrace {
  bool short_branch = false;     // target outside C^n
  std::size_t short_length = 0;  // length of the matching product, if found
  std::size_t b_size = 0;        // |B| handed to the inner solver
};

// Decides SMP over the ideal C for instances whose tuples all lie in C^n.
using InnerSolver = std::function<bool(const SmpInstance&)>;

// levels[j-1] holds the distinct products of exactly j generators.
std::vector<std::vector<Tup>> products_by_length(const SmpInstance& inst,
                                                 std::size_t max_length);

// All products of fewer than 2d generators that land in C^n, deduplicated.
std::vector<Tup> extension_generators(const SmpInstance& inst, const ElemSet& ideal,
                                      std::size_t d);

// SMP over an ideal extension of C by a d-nilpotent quotient, reduced to one
// SMP instance over C. Throws PreconditionError if C is not an ideal or the
// quotient is not d-nilpotent.
bool ideal_extension_smp(const SmpInstance& inst, const ElemSet& ideal, std::size_t d,
                         const InnerSolver& inner, ExtensionTrace* trace = nullptr);

// The pipeline for semigroups satisfying the Clifford-by-nilpotent
// conditions: C is the ideal generated by the idempotents and the inner
// solver is the Clifford reduction on C.
class NilpotentExtensionSolver {
 public:
  explicit NilpotentExtensionSolver(SemigroupPtr s);

  bool solve(const SmpInstance& inst, ExtensionTrace* trace = nullptr) const;

  const ElemSet& ideal() const noexcept { return ideal_; }
  std::size_t degree() const noexcept { return degree_; }

 private:
  SemigroupPtr s_;
  ElemSet ideal_;
  std::size_t degree_ = 1;
  Restriction restriction_;
  std::optional<CliffordDecomposition> inner_dec_;
};

}  // namespace smpkit
