#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "smpkit/commutative_solver.hpp"
#include "smpkit/instance.hpp"
#include "smpkit/nilpotent_solver.hpp"
#include "smpkit/structure.hpp"

namespace smpkit {

enum class Method { oracle, group, clifford, nilpotent_extension, commutative_search, t2 };

const char* to_string(Method m);
// Accepts the report names and the CLI short forms "nilpotent" and "commutative".
std::optional<Method> parse_method(std::string_view s);
// Methods that run in polynomial time.
bool is_polynomial(Method m);

// A requested method does not apply to the semigroup.
class MethodNotApplicableError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// The chosen solver and the oracle disagree.
class DisagreementError : public Error {
 public:
  using Error::Error;
};

struct PhaseTiming {
  std::string phase;
  double milliseconds = 0;
};

using AnyWitness = std::variant<std::monostate, Witness, ExponentWitness>;

struct SolveReport {
  bool answer = false;
  Method method = Method::oracle;
  AnyWitness witness;
  ClassificationReport classification;
  std::vector<PhaseTiming> timings;
  bool cross_checked = false;
  // Oracle verdict when the cross-check ran (cap_exceeded leaves it inconclusive).
  std::optional<Verdict> oracle_verdict;
};

struct SolveOptions {
  std::optional<Method> method;      // nullopt: automatic selection
  std::optional<bool> cross_check;   // nullopt: on iff |S|^n <= 10^6
  bool want_witness = true;
  std::size_t oracle_cap = 5'000'000;
};

// Per-semigroup state: classification plus the decompositions the P-time
// solvers need, built once and reused across instances.
class Solver {
 public:
  explicit Solver(SemigroupPtr s);

  const Semigroup& semigroup() const noexcept { return *s_; }
  const ClassificationReport& classification() const noexcept { return report_; }

  bool applicable(Method m) const;
  // group, Clifford, ideal extension, T(2), commutative, oracle; first match.
  Method auto_method() const;

  SolveReport solve(const SmpInstance& inst, const SolveOptions& opts = {}) const;

 private:
  SemigroupPtr s_;
  ClassificationReport report_;
  double classify_ms_ = 0;
  std::optional<CliffordDecomposition> clifford_;
  std::optional<NilpotentExtensionSolver> extension_;
};

SolveReport solve_auto(const SmpInstance& inst, const SolveOptions& opts = {});

// |S|^n <= 10^6.
bool default_cross_check(const SmpInstance& inst);

}  // namespace smpkit
