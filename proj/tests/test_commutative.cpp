#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "smpkit/commutative_solver.hpp"
#include "support.hpp"

using namespace smpkit;
using smptest::inst_of;

TEST_CASE("exponent bound") {
  CHECK(exponent_bound(*builtin("Z2_1")) == 2);
  CHECK(exponent_bound(*builtin("cyclic_group(1)")) == 1);
  CHECK(exponent_bound(*builtin("cyclic_group(3)")) == 3);
  CHECK(exponent_bound(*builtin("cyclic_group(6)")) == 6);
  CHECK(exponent_bound(*builtin("null(4)")) == 2);
  CHECK(exponent_bound(*builtin("semilattice_chain(3)")) == 1);
}

TEST_CASE("every power of every tuple is among its first r powers") {
  for (const auto& name : catalog_names()) {
    auto s = builtin(name);
    if (!s->is_commutative()) continue;
    const std::uint32_t r = exponent_bound(*s);
    std::mt19937 rng(2);
    for (int rep = 0; rep < 50; ++rep) {
      const Tup x = random_tuple(*s, 3, rng);
      std::set<Tup> first;
      for (std::uint32_t l = 1; l <= r; ++l) first.insert(tup_power(*s, x, l));
      for (std::uint32_t l = 1; l <= 3 * r + 2; ++l) CHECK(first.count(tup_power(*s, x, l)));
    }
  }
}

TEST_CASE("verifying exponent vectors") {
  auto inst = inst_of("Z2_1", {{"a", "1"}, {"1", "a"}}, {"a", "a"});
  CHECK(verify_exponent_witness(inst, {{1, 1}, 2}));
  CHECK_FALSE(verify_exponent_witness(inst, {{2, 1}, 2}));
  CHECK_FALSE(verify_exponent_witness(inst, {{1, 0}, 2}));
  CHECK_THROWS_AS(verify_exponent_witness(inst, {{0, 0}, 2}), InputError);
  CHECK_THROWS_AS(verify_exponent_witness(inst, {{1}, 2}), InputError);
  CHECK_THROWS_AS(verify_exponent_witness(inst, {{3, 1}, 2}), InputError);

  auto single = inst_of("Z2_1", {{"a", "a"}}, {"a", "0"});
  CHECK_FALSE(verify_exponent_witness(single, {{1}, 2}));
  CHECK_FALSE(verify_exponent_witness(single, {{2}, 2}));
  CHECK_FALSE(commutative_smp(single).member);
}

TEST_CASE("search refuses non-commutative semigroups") {
  auto inst = inst_of("T(2)", {{"ID"}}, {"ID"});
  CHECK_THROWS_AS(commutative_smp(inst), PreconditionError);
}

TEST_CASE("commutative search agrees with the oracle") {
  std::mt19937 rng(4242);
  std::vector<std::string> names;
  for (const auto& name : catalog_names())
    if (builtin(name)->is_commutative()) names.push_back(name);
  for (const auto& name : extension_catalog_names()) names.push_back(name);
  std::size_t members = 0;
  for (int rep = 0; rep < 1000; ++rep) {
    auto s = builtin(names[rep % names.size()]);
    const std::size_t n = 1 + rng() % 4, k = 1 + rng() % 4;
    SmpInstance inst = random_instance(s, n, k, rng);
    const CommutativeResult r = commutative_smp(inst);
    REQUIRE(r.member == smptest::oracle_member(inst));
    if (r.member) {
      ++members;
      REQUIRE(r.witness);
      CHECK(r.witness->r == exponent_bound(*s));
      CHECK(verify_exponent_witness(inst, *r.witness));
    }
  }
  CHECK(members > 200);
}

TEST_CASE("witnesses survive permuting the generators") {
  std::mt19937 rng(6);
  auto s = builtin("Z2_1");
  for (int rep = 0; rep < 200; ++rep) {
    SmpInstance inst = random_instance(s, 4, 4, rng);
    const CommutativeResult r = commutative_smp(inst);
    if (!r.member) continue;
    std::vector<std::size_t> perm(inst.k());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    SmpInstance permuted = inst;
    ExponentWitness w{std::vector<std::uint32_t>(inst.k()), r.witness->r};
    for (std::size_t i = 0; i < inst.k(); ++i) {
      permuted.generators[i] = inst.generators[perm[i]];
      w.exponents[i] = r.witness->exponents[perm[i]];
    }
    CHECK(verify_exponent_witness(permuted, w));
  }
}

TEST_CASE("wider Z2_1 instances stay exact") {
  std::mt19937 rng(10);
  auto s = builtin("Z2_1");
  for (int rep = 0; rep < 30; ++rep) {
    SmpInstance inst = random_instance(s, 8, 7, rng);
    CHECK(commutative_smp(inst).member == smptest::oracle_member(inst));
  }
}
