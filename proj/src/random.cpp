#include "smpkit/random.hpp"

#include "smpkit/t2_solver.hpp"

namespace smpkit {

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{
      "Z2_1",
      "null(2)",
      "null(3)",
      "semilattice_chain(1)",
      "semilattice_chain(2)",
      "semilattice_chain(3)",
      "cyclic_group(2)",
      "cyclic_group(3)",
      "cyclic_group(4)",
      "symmetric_group(3)",
      "T(2)",
      "T(3)",
      "direct_product(semilattice_chain(2),cyclic_group(2))",
  };
  return names;
}

const std::vector<std::string>& extension_catalog_names() {
  static const std::vector<std::string> names{
      "null(2)",
      "null(3)",
      "direct_product(cyclic_group(2),null(2))",
      "direct_product(semilattice_chain(2),null(3))",
  };
  return names;
}

Tup random_tuple(const Semigroup& s, std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(s.order()) - 1);
  Tup t(n);
  for (auto& x : t) x = static_cast<Elem>(pick(rng));
  return t;
}

SmpInstance random_instance(SemigroupPtr s, std::size_t n, std::size_t k, std::mt19937& rng) {
  SmpInstance inst{std::move(s), n, {}, {}};
  for (std::size_t i = 0; i < k; ++i) inst.generators.push_back(random_tuple(inst.sg(), n, rng));
  if (k > 0 && std::bernoulli_distribution(0.5)(rng)) {
    std::uniform_int_distribution<std::size_t> len(1, 2 * k), gen(0, k - 1);
    inst.target = inst.generators[gen(rng)];
    for (std::size_t l = len(rng); l > 1; --l) tup_mul_into(inst.sg(), inst.target, inst.generators[gen(rng)]);
  } else {
    inst.target = random_tuple(inst.sg(), n, rng);
  }
  return inst;
}

SmpInstance perf_clifford_instance(std::size_t n, std::size_t k, std::uint32_t seed) {
  std::mt19937 rng(seed);
  SmpInstance inst{builtin("direct_product(semilattice_chain(2),cyclic_group(2))"), n, {}, {}};
  for (std::size_t i = 0; i < k; ++i) inst.generators.push_back(random_tuple(inst.sg(), n, rng));
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < k; ++i) {
    if (!coin(rng) && !inst.target.empty()) continue;
    if (inst.target.empty())
      inst.target = inst.generators[i];
    else
      tup_mul_into(inst.sg(), inst.target, inst.generators[i]);
  }
  return inst;
}

SmpInstance perf_t2_instance(std::size_t n, std::size_t k, std::uint32_t seed) {
  std::mt19937 rng(seed);
  SmpInstance inst{builtin("T(2)"), n, {}, {}};
  // Roughly n/k constant coordinates per generator.
  std::bernoulli_distribution constant(1.0 / static_cast<double>(k)), coin(0.5);
  for (std::size_t i = 0; i < k; ++i) {
    Tup a(n);
    for (auto& x : a)
      x = constant(rng) ? (coin(rng) ? t2::kZero : t2::kOne) : (coin(rng) ? t2::kId : t2::kFlip);
    inst.generators.push_back(std::move(a));
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!coin(rng) && !inst.target.empty()) continue;
    if (inst.target.empty())
      inst.target = inst.generators[i];
    else
      tup_mul_into(inst.sg(), inst.target, inst.generators[i]);
  }
  return inst;
}

}  // namespace smpkit
