#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace smpkit {

// Elements are stored 0-based; every file format and report is 1-based.
using Elem = std::uint16_t;

// A tuple in S^n.
using Tup = std::vector<Elem>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent user input (bad table, bad file, wrong lengths).
class InputError : public Error {
 public:
  using Error::Error;
};

// A structural precondition of an algorithm does not hold for the input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotAssociativeError : public InputError {
 public:
  NotAssociativeError(Elem x, Elem y, Elem z);
  Elem x, y, z;
};

// A finite semigroup given by its Cayley table. Immutable after construction.
class Semigroup {
 public:
  // `table` is row-major, order*order entries, 0-based. Validates range and
  // associativity (full triple check).
  Semigroup(std::size_t order, std::vector<Elem> table,
            std::vector<std::string> names = {}, std::string builtin_tag = {});

  std::size_t order() const noexcept { return order_; }

  Elem mul(Elem x, Elem y) const noexcept {
    return table_[static_cast<std::size_t>(x) * order_ + y];
  }

  std::span<const Elem> row(Elem x) const noexcept {
    return {table_.data() + static_cast<std::size_t>(x) * order_, order_};
  }

  std::span<const Elem> table() const noexcept { return table_; }

  const std::string& name(Elem x) const { return names_.at(x); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  bool has_custom_names() const noexcept { return custom_names_; }

  // Parses an element token: a display name, or a 1-based index.
  std::optional<Elem> find(std::string_view token) const;

  // Canonical builtin name ("T(2)", "Z2_1", ...) or empty for tables.
  const std::string& builtin_tag() const noexcept { return builtin_; }

  bool is_idempotent(Elem x) const noexcept { return mul(x, x) == x; }

  // The unique idempotent among x, x^2, x^3, ...
  Elem idempotent_power(Elem x) const noexcept { return idem_power_[x]; }

  // x^p for p >= 1.
  Elem power(Elem x, std::uint64_t p) const;

  // True iff the monogenic subsemigroup <x> is a group, i.e. x^t = x for
  // some t >= 2.
  bool generates_group(Elem x) const noexcept { return in_group_[x]; }

  bool is_commutative() const noexcept;

  // Identity element, if S is a monoid.
  std::optional<Elem> identity() const noexcept;

 private:
  std::size_t order_;
  std::vector<Elem> table_;
  std::vector<std::string> names_;
  bool custom_names_ = false;
  std::string builtin_;
  std::vector<Elem> idem_power_;
  std::vector<bool> in_group_;
};

using SemigroupPtr = std::shared_ptr<const Semigroup>;

// Builds a semigroup from a 1-based m x m table.
SemigroupPtr make_semigroup(const std::vector<std::vector<int>>& table,
                            std::vector<std::string> names = {});

// Named constructions: "T(m)" (m <= 4), "Z2_1", "null(q)", "cyclic_group(q)",
// "semilattice_chain(q)", "symmetric_group(q)" (q <= 4) and
// "direct_product(A,B)" over any two of these.
SemigroupPtr builtin(std::string_view name);

// Index of the map x -> images[x] (0-based images) in the builtin T(m).
Elem transformation_index(std::span<const int> images);
// Images (0-based) of element x of T(m).
std::vector<int> transformation_images(Elem x, int m);

// Coordinatewise product.
Tup tup_mul(const Semigroup& s, const Tup& u, const Tup& v);
// In-place u := u * v.
void tup_mul_into(const Semigroup& s, Tup& u, const Tup& v);
// u^p for p >= 1.
Tup tup_power(const Semigroup& s, const Tup& u, std::uint64_t p);
Tup tup_idempotent_power(const Semigroup& s, const Tup& u);

std::string format_tup(const Semigroup& s, const Tup& t);

}  // namespace smpkit
