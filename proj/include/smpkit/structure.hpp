#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "smpkit/semigroup.hpp"

namespace smpkit {

// Element subsets are kept as sorted vectors of 0-based elements.
using ElemSet = std::vector<Elem>;

ElemSet idempotents(const Semigroup& s);
bool idempotents_central(const Semigroup& s);
bool is_group(const Semigroup& s);

// Every element of `subset` (default: all of S) lies in a subgroup.
bool is_completely_regular(const Semigroup& s);
bool is_completely_regular(const Semigroup& s, const ElemSet& subset);
// Completely regular with idempotents central, evaluated inside `subset`.
bool is_clifford(const Semigroup& s);
bool is_clifford(const Semigroup& s, const ElemSet& subset);

// Smallest d such that all products of d elements coincide, searched up to
// |S| + 1.
std::optional<std::size_t> nilpotency_degree(const Semigroup& s);

// E u SE u ES u SES for E the idempotents.
ElemSet ideal_of_idempotents(const Semigroup& s);

// Returns a pair (x, y) with x in S and y in the subset (or vice versa) whose
// product escapes the subset; nullopt if `subset` is a two-sided ideal.
std::optional<std::pair<Elem, Elem>> ideal_violation(const Semigroup& s,
                                                     const ElemSet& subset);

class NotIdealError : public PreconditionError {
 public:
  NotIdealError(Elem x, Elem y, Elem product);
  Elem x, y, product;
};

struct ReesQuotient {
  SemigroupPtr quotient;
  // Element of S -> element of S/I.
  std::vector<Elem> class_of;
  Elem zero = 0;
};

// S/I with the ideal collapsed to a zero placed first. Throws NotIdealError.
ReesQuotient rees_quotient(const Semigroup& s, const ElemSet& ideal);

// The subsemigroup on `subset` as a standalone semigroup. Throws if the subset
// is not closed.
struct Restriction {
  SemigroupPtr semigroup;
  std::vector<Elem> to_parent;  // sub element -> parent element
  std::vector<int> from_parent; // parent element -> sub element, -1 outside
};
Restriction restrict_to(const Semigroup& s, const ElemSet& subset);

// Strong semilattice of groups view of a Clifford semigroup.
class CliffordDecomposition {
 public:
  // Throws PreconditionError naming the violated condition.
  explicit CliffordDecomposition(SemigroupPtr s);

  const Semigroup& semigroup() const noexcept { return *s_; }
  const ElemSet& semilattice() const noexcept { return idempotents_; }
  std::size_t idempotent_count() const noexcept { return idempotents_.size(); }

  // Idempotent e with x in G_e.
  Elem group_of(Elem x) const noexcept { return group_of_[x]; }
  // Position of idempotent e in semilattice().
  std::size_t slot_of(Elem e) const { return slot_.at(e); }
  const ElemSet& group(Elem e) const { return groups_.at(slot_of(e)); }

  Elem meet(Elem e, Elem f) const noexcept { return s_->mul(e, f); }
  bool leq(Elem e, Elem f) const noexcept { return s_->mul(e, f) == e; }

  // phi_{i,j}(x) = x j for x in G_i and j <= i.
  Elem phi(Elem i, Elem j, Elem x) const;

  // Inverse of x in its maximal subgroup.
  Elem inverse(Elem x) const noexcept { return inverse_[x]; }

 private:
  SemigroupPtr s_;
  ElemSet idempotents_;
  std::vector<Elem> group_of_;
  std::vector<std::size_t> slot_;
  std::vector<ElemSet> groups_;
  std::vector<Elem> inverse_;
};

CliffordDecomposition clifford_decompose(SemigroupPtr s);

// x <= y iff group_of(x) <= group_of(y) in the semilattice.
bool natural_preorder(const CliffordDecomposition& dec, Elem x, Elem y);

// Tuple indexed by semilattice(): x at its own idempotent, identities elsewhere.
std::vector<Elem> gamma(const CliffordDecomposition& dec, Elem x);

// Product recomposed from (I, G_i, phi): phi_{i,i^j}(x) phi_{j,i^j}(y).
Elem strong_semilattice_product(const CliffordDecomposition& dec, Elem x, Elem y);

class EmbeddingError : public PreconditionError {
 public:
  EmbeddingError(const std::string& what, std::optional<std::pair<Elem, Elem>> pair);
  // (e, a) with e idempotent, ea = a and <a> not a group, when that is the cause.
  std::optional<std::pair<Elem, Elem>> violating_pair;
};

struct EmbeddingWitness {
  std::size_t k = 1;          // x^k idempotent for all x, least such
  std::vector<Elem> alpha;    // x -> x^(k+1)
  ElemSet clifford_part;      // C = alpha(S)
  ReesQuotient quotient;      // N = S/C

  std::pair<Elem, Elem> beta(Elem x) const { return {alpha[x], quotient.class_of[x]}; }
};

// Builds alpha, C, N and verifies every embedding invariant; throws
// EmbeddingError when the construction or a verification step fails.
EmbeddingWitness build_embedding(const Semigroup& s);

// First (e, a), in index order, with e idempotent, ea = a and <a> not a group.
std::optional<std::pair<Elem, Elem>> find_group_condition_violation(const Semigroup& s);

enum class Dichotomy { p, np_complete, not_applicable };
const char* to_string(Dichotomy d);

struct ClassificationReport {
  bool is_commutative = false;
  bool is_group = false;
  ElemSet idempotents;
  bool idempotents_central = false;
  bool is_completely_regular = false;
  bool is_clifford = false;
  std::optional<std::size_t> nilpotency_degree;
  ElemSet ideal_of_idempotents;
  bool cond1 = false;  // ideal extension of a Clifford semigroup by a nilpotent one
  bool cond2 = false;  // ideal generated by idempotents is Clifford
  bool cond3 = false;  // idempotents central, and ea = a implies <a> a group
  bool cond4 = false;  // embeds into Clifford x nilpotent
  Dichotomy dichotomy = Dichotomy::not_applicable;
};

ClassificationReport classify(const Semigroup& s);

// Whether S is an ideal extension of the Clifford semigroup `ideal` by a
// nilpotent quotient.
bool is_clifford_by_nilpotent_extension(const Semigroup& s, const ElemSet& ideal);

}  // namespace smpkit
