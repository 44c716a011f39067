#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "smpkit/semigroup.hpp"

namespace smpkit {

// Generators a_1..a_k and target b in S^n.
struct SmpInstance {
  SemigroupPtr semigroup;
  std::size_t n = 0;
  std::vector<Tup> generators;
  Tup target;

  const Semigroup& sg() const { return *semigroup; }
  std::size_t k() const noexcept { return generators.size(); }

  // Throws InputError if lengths or entries are inconsistent.
  void validate() const;
};

// A nonempty generator word, 0-based generator indices; evaluated left to right.
struct Witness {
  std::vector<std::size_t> word;
};

Tup eval_word(const SmpInstance& inst, const Witness& w);

enum class Verdict { member, non_member, cap_exceeded };

const char* to_string(Verdict v);

struct OracleOptions {
  std::size_t cap = 5'000'000;
  // Stop as soon as the target is discovered.
  bool stop_on_target = true;
};

struct OracleResult {
  Verdict verdict = Verdict::non_member;
  std::optional<Witness> witness;
  // |<A>| when fully_explored; otherwise the number of states discovered.
  std::size_t closure_size = 0;
  bool fully_explored = false;

  bool member() const noexcept { return verdict == Verdict::member; }
};

// Breadth-first closure of <A> under right multiplication by generators,
// ordered by (word length, generator index). Witnesses are shortest words.
OracleResult closure_oracle(const SmpInstance& inst, const OracleOptions& opts = {});

// All elements of <A>, in discovery order. Throws Error past `cap`.
std::vector<Tup> enumerate_closure(const SmpInstance& inst,
                                   std::size_t cap = 5'000'000);

// Subsemigroup of S generated by `gens` (single-coordinate closure), as a
// membership mask over S.
std::vector<bool> generated_subsemigroup(const Semigroup& s, const std::vector<Elem>& gens);

}  // namespace smpkit
