#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "smpkit/instance.hpp"
#include "smpkit/semigroup.hpp"

namespace smpkit {

// Straight-line program over generator indices. Words of stabilizer-chain
// representatives are shared sub-expressions and only expanded on request.
class WordProgram {
 public:
  using Id = std::uint32_t;

  Id leaf(std::size_t generator);
  Id concat(Id a, Id b);
  Id power(Id a, std::uint64_t exponent);  // exponent >= 1

  // Saturates at UINT64_MAX.
  std::uint64_t length(Id id) const { return nodes_.at(id).length; }

  // nullopt when the expansion would exceed max_length.
  std::optional<std::vector<std::size_t>> expand(Id id, std::uint64_t max_length) const;

 private:
  enum class Kind : std::uint8_t { leaf, concat, power };
  struct Node {
    Kind kind;
    Id a = 0, b = 0;
    std::uint64_t exponent = 0;  // generator index for leaves
    std::uint64_t length = 0;
  };
  std::vector<Node> nodes_;
};

// Subgroup of a product of maximal subgroups of S: coordinate c of every tuple
// lies in the group whose identity is identity_at[c]. Built by sifting
// coordinate by coordinate; a representative at coordinate c is the identity
// on all earlier coordinates.
class StabilizerChain {
 public:
  struct Representative {
    Tup value;
    Tup inverse;
    std::size_t coordinate;
    std::uint64_t order;  // 0 if it overflowed
    WordProgram::Id word;
    WordProgram::Id inverse_word;
    bool has_words;       // false once an order overflowed along the way
  };

  StabilizerChain(const Semigroup& s, std::vector<Elem> identity_at,
                  const std::vector<Tup>& generators, bool track_words);

  bool contains(const Tup& t) const;

  // Word over the original generators evaluating to t; requires track_words.
  std::optional<Witness> witness_for(const Tup& t,
                                     std::uint64_t max_length = 1U << 22) const;

  const std::vector<Representative>& representatives() const noexcept { return reps_; }
  std::size_t level_count() const noexcept { return levels_.size(); }
  std::size_t width() const noexcept { return identity_at_.size(); }
  bool abelian() const noexcept { return abelian_; }
  const WordProgram& words() const noexcept { return words_; }

 private:
  struct Level {
    std::size_t coordinate;
    std::vector<std::int32_t> rep_for_value;
    std::vector<std::uint32_t> reps;
  };
  struct SiftResult {
    bool reached_identity;
    std::size_t coordinate;  // first non-identity coordinate on failure
  };

  SiftResult sift(Tup& x, std::vector<std::uint32_t>* used) const;
  void install(Tup x, std::size_t coordinate, WordProgram::Id word, WordProgram::Id inverse_word,
               bool has_words);
  std::uint64_t tuple_order(const Tup& t) const;
  void saturate();

  const Semigroup* s_;
  std::vector<Elem> identity_at_;
  std::vector<Elem> inverse_;
  std::vector<std::uint32_t> elem_order_;
  bool track_words_;
  bool abelian_ = true;
  std::size_t generator_count_ = 0;
  std::uint64_t first_generator_order_ = 0;

  std::vector<Representative> reps_;
  std::vector<std::int32_t> level_of_coord_;
  std::vector<Level> levels_;
  std::deque<std::pair<std::uint32_t, std::uint32_t>> pending_;
  WordProgram words_;
};

struct GroupSmpResult {
  bool member = false;
  std::optional<Witness> witness;
  std::size_t representatives = 0;
};

// SMP over a finite group. Throws PreconditionError if S is not a group.
GroupSmpResult group_smp(const SmpInstance& inst, bool want_witness = true);

// SMP inside a product of maximal subgroups of S (see StabilizerChain).
GroupSmpResult group_smp(const Semigroup& s, std::vector<Elem> identity_at,
                         const std::vector<Tup>& generators, const Tup& target,
                         bool want_witness);

}  // namespace smpkit
