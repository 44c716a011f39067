#include <doctest.h>

#include "smpkit/clifford_solver.hpp"
#include "support.hpp"

using namespace smpkit;
using smptest::inst_of;

namespace {

const std::vector<std::string>& clifford_catalog() {
  static const std::vector<std::string> names{
      "semilattice_chain(1)", "semilattice_chain(2)", "semilattice_chain(3)",
      "cyclic_group(2)",      "cyclic_group(3)",      "cyclic_group(4)",
      "symmetric_group(3)",   "direct_product(semilattice_chain(2),cyclic_group(2))",
      "direct_product(semilattice_chain(3),cyclic_group(3))"};
  return names;
}

}  // namespace

TEST_CASE("chain of two, product reaches the bottom") {
  auto inst = inst_of("semilattice_chain(2)", {{"1", "0"}, {"0", "1"}}, {"0", "0"});
  CliffordDecomposition dec(inst.semigroup);
  CliffordTrace trace;
  CHECK(clifford_smp(inst, dec, &trace));
  CHECK(trace.kept_generators == 2);
  CHECK(trace.coordinate_check_passed);
  CHECK(trace.group_coordinates == 4);
}

TEST_CASE("chain of two, top is unreachable") {
  auto inst = inst_of("semilattice_chain(2)", {{"1", "0"}, {"0", "1"}}, {"1", "1"});
  CliffordDecomposition dec(inst.semigroup);
  CliffordTrace trace;
  CHECK_FALSE(clifford_smp(inst, dec, &trace));
  CHECK(trace.kept_generators == 0);
  CHECK(clifford_filter(inst, dec).empty());
}

TEST_CASE("a generator equal to the target") {
  auto inst = inst_of("direct_product(semilattice_chain(2),cyclic_group(2))",
                      {{"(0,1)", "(1,0)"}, {"(1,1)", "(0,1)"}}, {"(1,1)", "(0,1)"});
  CliffordDecomposition dec(inst.semigroup);
  CHECK(clifford_smp(inst, dec));
}

TEST_CASE("decomposition must match the instance") {
  auto inst = inst_of("semilattice_chain(2)", {{"1"}}, {"1"});
  CliffordDecomposition other(builtin("cyclic_group(3)"));
  CHECK_THROWS_AS(clifford_smp(inst, other), PreconditionError);
}

TEST_CASE("Clifford solver agrees with the oracle") {
  std::mt19937 rng(2024);
  for (const auto& name : clifford_catalog()) {
    CAPTURE(name);
    auto s = builtin(name);
    CliffordDecomposition dec(s);
    std::size_t members = 0;
    for (int rep = 0; rep < 1000; ++rep) {
      const std::size_t n = 1 + rng() % 4, k = 1 + rng() % 4;
      SmpInstance inst = random_instance(s, n, k, rng);
      const bool expected = smptest::oracle_member(inst);
      REQUIRE(clifford_smp(inst, dec) == expected);
      members += expected;
    }
    CHECK(members > 0);
  }
}

TEST_CASE("filtering and the idempotent step are sound") {
  std::mt19937 rng(77);
  for (const auto& name : clifford_catalog()) {
    auto s = builtin(name);
    CliffordDecomposition dec(s);
    for (int rep = 0; rep < 200; ++rep) {
      SmpInstance inst = random_instance(s, 1 + rng() % 3, 1 + rng() % 4, rng);
      SmpInstance filtered{s, inst.n, {}, inst.target};
      for (std::size_t g : clifford_filter(inst, dec)) filtered.generators.push_back(inst.generators[g]);
      CHECK(smptest::oracle_member(inst) == smptest::oracle_member(filtered));

      CliffordTrace trace;
      clifford_smp(filtered, dec, &trace);
      if (trace.coordinate_check_passed) {
        SmpInstance idem = filtered;
        idem.target = tup_idempotent_power(*s, inst.target);
        CHECK(smptest::oracle_member(idem));
      }
    }
  }
}

TEST_CASE("Clifford solver on wide instances") {
  auto s = builtin("direct_product(semilattice_chain(2),cyclic_group(2))");
  CliffordDecomposition dec(s);
  for (std::uint32_t seed = 1; seed <= 5; ++seed) {
    SmpInstance inst = perf_clifford_instance(2000, 30, seed);
    CHECK(clifford_smp(inst, dec));

    // With the Z2 part of coordinate 17 trivial in every generator, no
    // product has a nontrivial Z2 part there.
    for (Tup& g : inst.generators) g[17] &= Elem{2};
    inst.target = tup_mul(*s, inst.generators[0], inst.generators[1]);
    CHECK(clifford_smp(inst, dec));
    inst.target[17] |= Elem{1};
    CHECK_FALSE(clifford_smp(inst, dec));
  }
}
