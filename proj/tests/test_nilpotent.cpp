#include <doctest.h>

#include "smpkit/clifford_solver.hpp"
#include "smpkit/nilpotent_solver.hpp"
#include "support.hpp"

using namespace smpkit;
using smptest::inst_of;

namespace {

bool in_ideal_power(const Tup& t, const ElemSet& ideal) {
  for (Elem x : t)
    if (!std::binary_search(ideal.begin(), ideal.end(), x)) return false;
  return true;
}

// Oracle-backed inner solver, so the reduction is tested on its own.
bool oracle_inner(const SmpInstance& inst) { return smptest::oracle_member(inst); }

}  // namespace

TEST_CASE("target outside the ideal found at length one") {
  auto inst = inst_of("null(3)", {{"a", "b"}, {"b", "b"}}, {"a", "b"});
  ExtensionTrace trace;
  CHECK(ideal_extension_smp(inst, ElemSet{0}, 2, oracle_inner, &trace));
  CHECK(trace.short_branch);
  CHECK(trace.short_length == 1);
}

TEST_CASE("null(3): nonzero targets must be generators") {
  auto s = builtin("null(3)");
  std::mt19937 rng(4);
  for (int rep = 0; rep < 200; ++rep) {
    SmpInstance inst = random_instance(s, 1 + rng() % 3, 1 + rng() % 3, rng);
    const bool all_zero = std::all_of(inst.target.begin(), inst.target.end(), [](Elem x) { return x == 0; });
    const bool is_gen = std::find(inst.generators.begin(), inst.generators.end(), inst.target) !=
                        inst.generators.end();
    CHECK(ideal_extension_smp(inst, ElemSet{0}, 2, oracle_inner) == (is_gen || all_zero));
  }
}

TEST_CASE("preconditions are validated") {
  auto inst = inst_of("null(3)", {{"a"}}, {"a"});
  CHECK_THROWS_AS(ideal_extension_smp(inst, ElemSet{1}, 2, oracle_inner), NotIdealError);
  auto z = inst_of("Z2_1", {{"a"}}, {"a"});
  // Z2_1 / {0, a} is {0, 1} with 1 idempotent: not nilpotent.
  CHECK_THROWS_AS(ideal_extension_smp(z, ElemSet{0, 1}, 3, oracle_inner), PreconditionError);
  auto chain = inst_of("null(4)", {{"a"}}, {"a"});
  CHECK_THROWS_AS(ideal_extension_smp(chain, ElemSet{0}, 0, oracle_inner), PreconditionError);
  CHECK_THROWS_AS(NilpotentExtensionSolver(builtin("Z2_1")), PreconditionError);
}

TEST_CASE("products by length") {
  auto inst = inst_of("cyclic_group(3)", {{"1"}}, {"0"});
  const auto levels = products_by_length(inst, 4);
  REQUIRE(levels.size() == 4);
  CHECK(levels[0] == std::vector<Tup>{{1}});
  CHECK(levels[1] == std::vector<Tup>{{2}});
  CHECK(levels[2] == std::vector<Tup>{{0}});
  CHECK(levels[3] == std::vector<Tup>{{1}});
}

TEST_CASE("B lies in C^n, has bounded size, and preserves the answer") {
  std::mt19937 rng(31);
  for (const auto& name : extension_catalog_names()) {
    CAPTURE(name);
    auto s = builtin(name);
    const ElemSet ideal = ideal_of_idempotents(*s);
    const std::size_t d = *nilpotency_degree(*rees_quotient(*s, ideal).quotient);
    std::size_t checked = 0;
    for (int rep = 0; rep < 5000 && checked < 200; ++rep) {
      const std::size_t n = 1 + rng() % 3, k = 1 + rng() % 3;
      SmpInstance inst = random_instance(s, n, k, rng);
      if (!in_ideal_power(inst.target, ideal)) continue;
      ++checked;
      const auto b = extension_generators(inst, ideal, d);
      std::size_t bound = 0, power = 1;
      for (std::size_t j = 1; j < 2 * d; ++j) bound += (power *= k);
      CHECK(b.size() <= bound);
      for (const Tup& t : b) CHECK(in_ideal_power(t, ideal));
      SmpInstance reduced{s, n, b, inst.target};
      CHECK(smptest::oracle_member(inst) == smptest::oracle_member(reduced));
    }
    CHECK(checked == 200);
  }
}

TEST_CASE("extension pipeline agrees with the oracle") {
  std::mt19937 rng(8080);
  for (const auto& name : extension_catalog_names()) {
    CAPTURE(name);
    auto s = builtin(name);
    NilpotentExtensionSolver solver(s);
    CHECK(solver.degree() <= 3);
    std::size_t members = 0;
    for (int rep = 0; rep < 500; ++rep) {
      const std::size_t n = 1 + rng() % 3, k = 1 + rng() % 3;
      SmpInstance inst = random_instance(s, n, k, rng);
      const bool expected = smptest::oracle_member(inst);
      REQUIRE(solver.solve(inst) == expected);
      members += expected;
    }
    CHECK(members > 0);
  }
}

TEST_CASE("extension pipeline with a nontrivial Clifford ideal") {
  // cyclic_group(2) x null(2): C = Z2 x {0}, quotient 2-nilpotent.
  auto s = builtin("direct_product(cyclic_group(2),null(2))");
  NilpotentExtensionSolver solver(s);
  CHECK(solver.ideal().size() == 2);
  CHECK(solver.degree() == 2);
  // (1,a)^j = (j mod 2, 0) for j >= 2, the same at both coordinates.
  auto inst = inst_of(s, {{"(1,a)", "(1,a)"}}, {"(0,0)", "(0,0)"});
  ExtensionTrace trace;
  CHECK(solver.solve(inst, &trace));
  CHECK_FALSE(trace.short_branch);
  CHECK(trace.b_size >= 1);
  inst.target = smptest::tup_of(*s, {"(1,0)", "(0,0)"});
  CHECK_FALSE(solver.solve(inst));
}
