#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "smpkit/instance.hpp"

namespace smpkit {

// Kozen's composition problem: is f a composition of f_1..f_m (identity
// allowed)? Maps are 0-based image vectors on [n].
struct CompositionInstance {
  std::size_t n = 1;
  std::vector<int> f;
  std::vector<std::vector<int>> fs;

  std::size_t m() const noexcept { return fs.size(); }
  void validate() const;
};

// Named elements of T(3) on the points 0, 1, inf (stored as 1, 2, 3).
namespace t3 {
Elem zero();  // 0->0 1->0
Elem one();   // 0->1 1->1
Elem id();
Elem ztoz();  // 0->0 1->inf
Elem ztoo();  // 0->1 1->inf
Elem otoz();  // 0->inf 1->0
}  // namespace t3

// Mapping tuple m_g on n^2 + mn coordinates.
Tup kozen_mapping_tuple(const CompositionInstance& c, const std::vector<int>& g);

// Generators, in order: m_1, c_1..c_m, then a_ijk lexicographically in
// (i, j, k). Target m_f.
SmpInstance encode_kozen_to_t3(const CompositionInstance& c);

// Index of a_ijk (0-based i, j, k) in the encoded generator list.
std::size_t kozen_application_index(const CompositionInstance& c, std::size_t i,
                                    std::size_t j, std::size_t k);

// The word m_1 (c_i a_{i,1,1^g} ... a_{i,n,n^g})... composing f_{steps[0]},
// f_{steps[1]}, ... in turn. It evaluates to m_g for g the composite.
Witness kozen_forward_word(const CompositionInstance& c, const std::vector<std::size_t>& steps);

// BFS over the monoid generated by f_1..f_m together with the identity.
bool composition_oracle(const CompositionInstance& c);

// Deterministic automaton with total transition function delta[state][symbol].
struct Dfa {
  std::vector<std::string> states;
  std::vector<std::string> alphabet;
  std::size_t initial = 0;
  std::vector<bool> accepting;
  std::vector<std::vector<std::size_t>> delta;

  void validate() const;
  bool accepts(const std::vector<std::size_t>& word) const;
};

// 3n automata; automaton 3i + j tracks the image of point j (0, 1, inf) at
// coordinate i. Symbols are the generators a1..ak. The matching intersection
// query must use min_length 1.
std::vector<Dfa> encode_t3_to_automata(const SmpInstance& inst);

struct IntersectionResult {
  bool nonempty = false;
  std::optional<std::vector<std::size_t>> word;  // shortest, symbol indices
};

// BFS over the product automaton. min_length is 0 or 1; with 1 the empty word
// does not count.
IntersectionResult dfa_intersection_nonempty(const std::vector<Dfa>& dfas,
                                             std::size_t min_length);

// Sets are 0-based subsets of [n].
struct ExactCoverInstance {
  std::size_t n = 1;
  std::vector<std::vector<std::size_t>> sets;

  void validate() const;
};

// Characteristic tuples c_j (a on C_j, e elsewhere) and target (a, ..., a).
// Throws PreconditionError naming the violated hypothesis on (e, a).
SmpInstance encode_exact_cover(const ExactCoverInstance& ec, SemigroupPtr s, Elem e, Elem a);

// Indices of a disjoint subfamily covering [n], if any.
std::optional<std::vector<std::size_t>> find_exact_cover(const ExactCoverInstance& ec);
bool exact_cover_bruteforce(const ExactCoverInstance& ec);

// (e, a) with e idempotent, ea = ae = a and <a> not a group, provided the
// idempotents of S are central.
std::optional<std::pair<Elem, Elem>> find_np_witness_pair(const Semigroup& s);

}  // namespace smpkit
