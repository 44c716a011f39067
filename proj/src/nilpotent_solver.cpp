#include "smpkit/nilpotent_solver.hpp"

#include <set>

#include "smpkit/clifford_solver.hpp"

namespace smpkit {

std::vector<std::vector<Tup>> products_by_length(const SmpInstance& inst,
                                                 std::size_t max_length) {
  const Semigroup& s = inst.sg();
  std::vector<std::vector<Tup>> levels;
  if (max_length == 0 || inst.k() == 0) return levels;
  // Equal prefixes have equal extensions, so each length is kept as a set.
  std::set<Tup> first(inst.generators.begin(), inst.generators.end());
  levels.emplace_back(first.begin(), first.end());
  for (std::size_t len = 2; len <= max_length; ++len) {
    std::set<Tup> next;
    for (const Tup& p : levels.back())
      for (const Tup& a : inst.generators) next.insert(tup_mul(s, p, a));
    levels.emplace_back(next.begin(), next.end());
  }
  return levels;
}

std::vector<Tup> extension_generators(const SmpInstance& inst, const ElemSet& ideal,
                                      std::size_t d) {
  std::vector<bool> in(inst.sg().order(), false);
  for (Elem x : ideal) in.at(x) = true;
  std::set<Tup> b;
  for (const auto& level : products_by_length(inst, 2 * d - 1))
    for (const Tup& t : level) {
      bool inside = true;
      for (Elem x : t) inside = inside && in[x];
      if (inside) b.insert(t);
    }
  return {b.begin(), b.end()};
}

bool ideal_extension_smp(const SmpInstance& inst, const ElemSet& ideal, std::size_t d,
                         const InnerSolver& inner, ExtensionTrace* trace) {
  inst.validate();
  const Semigroup& s = inst.sg();
  if (d == 0) throw PreconditionError("nilpotency degree must be positive");
  ReesQuotient q = rees_quotient(s, ideal);
  const auto degree = nilpotency_degree(*q.quotient);
  if (!degree || *degree > d)
    throw PreconditionError("S/C is not " + std::to_string(d) + "-nilpotent");

  ExtensionTrace local;
  ExtensionTrace& t = trace ? *trace : local;
  std::vector<bool> in(s.order(), false);
  for (Elem x : ideal) in[x] = true;
  bool target_inside = true;
  for (Elem x : inst.target) target_inside = target_inside && in[x];

  if (!target_inside) {
    t.short_branch = true;
    if (d < 2) return false;
    const auto levels = products_by_length(inst, d - 1);
    for (std::size_t len = 1; len <= levels.size(); ++len)
      for (const Tup& p : levels[len - 1])
        if (p == inst.target) {
          t.short_length = len;
          return true;
        }
    return false;
  }

  SmpInstance reduced{inst.semigroup, inst.n, extension_generators(inst, ideal, d),
                      inst.target};
  t.b_size = reduced.k();
  if (reduced.generators.empty()) return false;
  return inner(reduced);
}

NilpotentExtensionSolver::NilpotentExtensionSolver(SemigroupPtr s) : s_(std::move(s)) {
  ideal_ = ideal_of_idempotents(*s_);
  if (!is_clifford(*s_, ideal_))
    throw PreconditionError("ideal generated by the idempotents is not Clifford");
  const auto d = nilpotency_degree(*rees_quotient(*s_, ideal_).quotient);
  if (!d) throw PreconditionError("quotient by the idempotent ideal is not nilpotent");
  degree_ = *d;
  restriction_ = restrict_to(*s_, ideal_);
  inner_dec_.emplace(restriction_.semigroup);
}

bool NilpotentExtensionSolver::solve(const SmpInstance& inst, ExtensionTrace* trace) const {
  auto inner = [this](const SmpInstance& over_parent) {
    SmpInstance sub{restriction_.semigroup, over_parent.n, {}, {}};
    auto map_tup = [this](const Tup& t) {
      Tup out(t.size());
      for (std::size_t i = 0; i < t.size(); ++i)
        out[i] = static_cast<Elem>(restriction_.from_parent.at(t[i]));
      return out;
    };
    for (const Tup& g : over_parent.generators) sub.generators.push_back(map_tup(g));
    sub.target = map_tup(over_parent.target);
    return clifford_smp(sub, *inner_dec_);
  };
  return ideal_extension_smp(inst, ideal_, degree_, inner, trace);
}

}  // namespace smpkit
