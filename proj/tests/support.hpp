#pragma once

// Shared helpers for the test binaries: instance literals, an independent
// fixpoint closure, and enumeration of small Cayley tables.

#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "smpkit/instance.hpp"
#include "smpkit/random.hpp"
#include "smpkit/semigroup.hpp"

namespace smptest {

using namespace smpkit;

inline Tup tup_of(const Semigroup& s, const std::vector<std::string>& names) {
  Tup t;
  for (const auto& n : names) {
    auto e = s.find(n);
    if (!e) throw std::runtime_error("bad element " + n);
    t.push_back(*e);
  }
  return t;
}

inline SmpInstance inst_of(SemigroupPtr s, const std::vector<std::vector<std::string>>& gens,
                           const std::vector<std::string>& target) {
  SmpInstance inst{s, target.size(), {}, tup_of(*s, target)};
  for (const auto& g : gens) inst.generators.push_back(tup_of(*s, g));
  return inst;
}

inline SmpInstance inst_of(const std::string& builtin_name,
                           const std::vector<std::vector<std::string>>& gens,
                           const std::vector<std::string>& target) {
  return inst_of(builtin(builtin_name), gens, target);
}

// <A> by saturating x*y over all pairs, no BFS, no word tracking.
inline std::set<Tup> fixpoint_closure(const SmpInstance& inst) {
  std::set<Tup> c(inst.generators.begin(), inst.generators.end());
  while (true) {
    std::set<Tup> next = c;
    for (const Tup& x : c)
      for (const Tup& y : c) next.insert(tup_mul(inst.sg(), x, y));
    if (next.size() == c.size()) return c;
    c = std::move(next);
  }
}

inline bool oracle_member(const SmpInstance& inst) {
  const OracleResult r = closure_oracle(inst);
  if (r.verdict == Verdict::cap_exceeded) throw std::runtime_error("oracle cap exceeded");
  return r.member();
}

// Calls f on every associative 0-based table of order m.
inline void for_each_table(std::size_t m, const std::function<void(const std::vector<Elem>&)>& f) {
  std::vector<Elem> t(m * m, 0);
  auto assoc = [&] {
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y)
        for (std::size_t z = 0; z < m; ++z)
          if (t[t[x * m + y] * m + z] != t[x * m + t[y * m + z]]) return false;
    return true;
  };
  while (true) {
    if (assoc()) f(t);
    std::size_t i = 0;
    while (i < t.size() && ++t[i] == m) t[i++] = 0;
    if (i == t.size()) return;
  }
}

inline std::vector<SemigroupPtr> all_semigroups_upto(std::size_t max_order) {
  std::vector<SemigroupPtr> out;
  for (std::size_t m = 1; m <= max_order; ++m)
    for_each_table(m, [&](const std::vector<Elem>& t) {
      out.push_back(std::make_shared<const Semigroup>(m, t));
    });
  return out;
}

}  // namespace smptest
