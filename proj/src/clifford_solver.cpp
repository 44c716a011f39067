#include "smpkit/clifford_solver.hpp"

#include <map>

#include "smpkit/group_solver.hpp"

namespace smpkit {

std::vector<std::size_t> clifford_filter(const SmpInstance& inst,
                                         const CliffordDecomposition& dec) {
  std::vector<std::size_t> kept;
  for (std::size_t g = 0; g < inst.k(); ++g) {
    const Tup& a = inst.generators[g];
    bool ok = true;
    for (std::size_t i = 0; i < inst.n && ok; ++i)
      ok = natural_preorder(dec, inst.target[i], a[i]);
    if (ok) kept.push_back(g);
  }
  return kept;
}

bool clifford_smp(const SmpInstance& inst, const CliffordDecomposition& dec,
                  CliffordTrace* trace) {
  inst.validate();
  const Semigroup& s = inst.sg();
  if (dec.semigroup().order() != s.order())
    throw PreconditionError("decomposition belongs to a different semigroup");
  CliffordTrace local;
  CliffordTrace& t = trace ? *trace : local;

  const std::vector<std::size_t> kept = clifford_filter(inst, dec);
  t.kept_generators = kept.size();
  if (kept.empty()) return false;

  const Tup e = tup_idempotent_power(s, inst.target);

  // e(i) in <a_1(i), ..., a_k(i)>, memoised per distinct column.
  std::map<std::vector<Elem>, std::vector<bool>> column_cache;
  std::vector<Elem> column(kept.size());
  for (std::size_t i = 0; i < inst.n; ++i) {
    for (std::size_t j = 0; j < kept.size(); ++j) column[j] = inst.generators[kept[j]][i];
    auto it = column_cache.find(column);
    if (it == column_cache.end())
      it = column_cache.emplace(column, generated_subsemigroup(s, column)).first;
    if (!it->second[e[i]]) return false;
  }
  t.coordinate_check_passed = true;

  // gamma, coordinatewise: coordinate (i, l) lives in G_l.
  const std::size_t width_per = dec.idempotent_count();
  const ElemSet& ids = dec.semilattice();
  std::vector<Elem> identity_at;
  identity_at.reserve(inst.n * width_per);
  for (std::size_t i = 0; i < inst.n; ++i) identity_at.insert(identity_at.end(), ids.begin(), ids.end());
  t.group_coordinates = identity_at.size();

  auto lift = [&](const Tup& x) {
    Tup out = identity_at;
    for (std::size_t i = 0; i < inst.n; ++i)
      out[i * width_per + dec.slot_of(dec.group_of(x[i]))] = x[i];
    return out;
  };

  std::vector<Tup> group_gens;
  group_gens.reserve(kept.size());
  for (std::size_t g : kept) group_gens.push_back(lift(tup_mul(s, inst.generators[g], e)));
  const GroupSmpResult r =
      group_smp(s, std::move(identity_at), group_gens, lift(inst.target), false);
  t.representatives = r.representatives;
  return r.member;
}

}  // namespace smpkit
