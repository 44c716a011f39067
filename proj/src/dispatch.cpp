#include "smpkit/dispatch.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "smpkit/clifford_solver.hpp"
#include "smpkit/group_solver.hpp"
#include "smpkit/t2_solver.hpp"

namespace smpkit {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

const char* to_string(Method m) {
  switch (m) {
    case Method::oracle: return "oracle";
    case Method::group: return "group";
    case Method::clifford: return "clifford";
    case Method::nilpotent_extension: return "nilpotent-extension";
    case Method::commutative_search: return "commutative-search";
    case Method::t2: return "t2";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view s) {
  if (s == "oracle") return Method::oracle;
  if (s == "group") return Method::group;
  if (s == "clifford") return Method::clifford;
  if (s == "nilpotent" || s == "nilpotent-extension") return Method::nilpotent_extension;
  if (s == "commutative" || s == "commutative-search") return Method::commutative_search;
  if (s == "t2") return Method::t2;
  return std::nullopt;
}

bool is_polynomial(Method m) {
  return m == Method::group || m == Method::clifford || m == Method::nilpotent_extension ||
         m == Method::t2;
}

bool default_cross_check(const SmpInstance& inst) {
  const double log_size = static_cast<double>(inst.n) * std::log10(static_cast<double>(inst.sg().order()));
  return log_size <= 6.0 + 1e-9;
}

Solver::Solver(SemigroupPtr s) : s_(std::move(s)) {
  const auto start = Clock::now();
  report_ = classify(*s_);
  if (report_.is_clifford)
    clifford_.emplace(s_);
  else if (report_.cond1)
    extension_.emplace(s_);
  classify_ms_ = ms_since(start);
}

bool Solver::applicable(Method m) const {
  switch (m) {
    case Method::oracle: return true;
    case Method::group: return report_.is_group;
    case Method::clifford: return report_.is_clifford;
    case Method::nilpotent_extension: return report_.cond1;
    case Method::commutative_search: return report_.is_commutative;
    case Method::t2: return s_->builtin_tag() == "T(2)";
  }
  return false;
}

Method Solver::auto_method() const {
  for (Method m : {Method::group, Method::clifford, Method::nilpotent_extension, Method::t2,
                   Method::commutative_search})
    if (applicable(m)) return m;
  return Method::oracle;
}

SolveReport Solver::solve(const SmpInstance& inst, const SolveOptions& opts) const {
  inst.validate();
  if (inst.semigroup != s_ && !std::ranges::equal(inst.sg().table(), s_->table()))
    throw InputError("instance is over a different semigroup");
  SolveReport rep;
  rep.classification = report_;
  rep.timings.push_back({"classify", classify_ms_});
  rep.method = opts.method ? *opts.method : auto_method();
  if (!applicable(rep.method))
    throw MethodNotApplicableError(std::string("method ") + to_string(rep.method) +
                                   " does not apply to this semigroup");

  auto start = Clock::now();
  switch (rep.method) {
    case Method::group: {
      GroupSmpResult r = group_smp(inst, opts.want_witness);
      rep.answer = r.member;
      if (r.witness) rep.witness = std::move(*r.witness);
      break;
    }
    case Method::clifford: {
      // A Clifford semigroup that reached here through an override still
      // needs its decomposition.
      if (clifford_)
        rep.answer = clifford_smp(inst, *clifford_);
      else
        rep.answer = clifford_smp(inst, CliffordDecomposition(s_));
      break;
    }
    case Method::nilpotent_extension: {
      if (extension_)
        rep.answer = extension_->solve(inst);
      else
        rep.answer = NilpotentExtensionSolver(s_).solve(inst);
      break;
    }
    case Method::t2: {
      T2Result r = t2_smp(inst);
      rep.answer = r.member;
      if (r.witness && opts.want_witness) rep.witness = std::move(*r.witness);
      break;
    }
    case Method::commutative_search: {
      CommutativeResult r = commutative_smp(inst);
      rep.answer = r.member;
      if (r.witness && opts.want_witness) rep.witness = std::move(*r.witness);
      break;
    }
    case Method::oracle: {
      OracleResult r = closure_oracle(inst, {opts.oracle_cap, true});
      if (r.verdict == Verdict::cap_exceeded)
        throw Error("closure oracle exceeded its cap of " + std::to_string(opts.oracle_cap) +
                    " tuples");
      rep.answer = r.member();
      rep.oracle_verdict = r.verdict;
      if (r.witness && opts.want_witness) rep.witness = std::move(*r.witness);
      break;
    }
  }
  rep.timings.push_back({"solve", ms_since(start)});

  if (const auto* w = std::get_if<Witness>(&rep.witness)) {
    if (w->word.empty() || eval_word(inst, *w) != inst.target)
      throw std::logic_error(std::string(to_string(rep.method)) + " returned a bad witness");
  } else if (const auto* ew = std::get_if<ExponentWitness>(&rep.witness)) {
    if (!verify_exponent_witness(inst, *ew))
      throw std::logic_error("commutative search returned a bad witness");
  }

  const bool check = opts.cross_check.value_or(default_cross_check(inst));
  if (check && rep.method != Method::oracle) {
    start = Clock::now();
    OracleResult r = closure_oracle(inst, {opts.oracle_cap, true});
    rep.oracle_verdict = r.verdict;
    rep.cross_checked = r.verdict != Verdict::cap_exceeded;
    if (rep.cross_checked && r.member() != rep.answer)
      throw DisagreementError(std::string(to_string(rep.method)) + " answered " +
                              (rep.answer ? "member" : "non-member") +
                              " but the closure oracle disagrees");
    // Group words can be too long to expand; the oracle's is shortest.
    if (rep.answer && opts.want_witness && r.witness &&
        std::holds_alternative<std::monostate>(rep.witness))
      rep.witness = std::move(*r.witness);
    rep.timings.push_back({"cross_check", ms_since(start)});
  }
  return rep;
}

SolveReport solve_auto(const SmpInstance& inst, const SolveOptions& opts) {
  return Solver(inst.semigroup).solve(inst, opts);
}

}  // namespace smpkit
