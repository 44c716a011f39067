// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "smpkit/clifford_solver.hpp"
#include "smpkit/dispatch.hpp"
#include "smpkit/random.hpp"
#include "smpkit/reductions.hpp"
#include "smpkit/t2_solver.hpp"

using namespace smpkit;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Runs one criterion; `body` returns an empty string on success and a
// failure description otherwise.
void criterion(int id, const char* title, double limit_s, const std::function<std::string()>& body) {
  const auto t0 = Clock::now();
  std::string problem;
  try {
    problem = body();
  } catch (const std::exception& e) {
    problem = std::string("exception: ") + e.what();
  }
  const double s = seconds_since(t0);
  if (problem.empty() && s > limit_s) problem = "took " + std::to_string(s) + " s";
  if (!problem.empty()) ++failures;
  std::printf("%s criterion %d (%s) %.2f s%s%s\n", problem.empty() ? "PASS" : "FAIL", id, title, s,
              problem.empty() ? "" : ": ", problem.c_str());
  std::fflush(stdout);
}

bool oracle(const SmpInstance& inst) {
  const OracleResult r = closure_oracle(inst);
  if (r.verdict == Verdict::cap_exceeded) throw std::runtime_error("oracle cap exceeded");
  return r.member();
}

std::string mismatch(std::size_t bad, std::size_t total) {
  if (bad == 0) return {};
  return std::to_string(bad) + " of " + std::to_string(total) + " disagree";
}

std::string c1_oracle_agreement() {
  std::mt19937 rng(1);
  std::size_t bad = 0, total = 0;
  SolveOptions opts;
  opts.cross_check = false;
  for (const auto& name : catalog_names()) {
    auto s = builtin(name);
    Solver solver(s);
    for (int rep = 0; rep < 500; ++rep, ++total) {
      const SmpInstance inst = random_instance(s, 1 + rng() % 4, 1 + rng() % 4, rng);
      bad += solver.solve(inst, opts).answer != oracle(inst);
    }
  }
  return mismatch(bad, total);
}

std::string c2_t2() {
  auto s = builtin("T(2)");
  std::size_t bad = 0, total = 0;
  auto run = [&](const SmpInstance& inst) {
    const T2Result r = t2_smp(inst);
    if (r.depth > inst.n) throw std::runtime_error("recursion deeper than n");
    if (r.member && eval_word(inst, *r.witness) != inst.target) throw std::runtime_error("bad witness");
    bad += r.member != oracle(inst);
    ++total;
  };
  for (std::size_t n = 1; n <= 2; ++n)
    for (std::size_t k = 1; k <= 2; ++k) {
      std::size_t count = 1;
      for (std::size_t i = 0; i < n * (k + 1); ++i) count *= 4;
      for (std::size_t code = 0; code < count; ++code) {
        SmpInstance inst{s, n, std::vector<Tup>(k, Tup(n)), Tup(n)};
        std::size_t c = code;
        for (auto& g : inst.generators)
          for (auto& x : g) x = static_cast<Elem>(c % 4), c /= 4;
        for (auto& x : inst.target) x = static_cast<Elem>(c % 4), c /= 4;
        run(inst);
      }
    }
  if (total != 4432) return "enumerated " + std::to_string(total) + " instances";
  std::mt19937 rng(2);
  for (int rep = 0; rep < 10000; ++rep) run(random_instance(s, 1 + rng() % 6, 1 + rng() % 5, rng));
  return mismatch(bad, total);
}

std::vector<int> random_map(std::size_t n, std::mt19937& rng) {
  std::vector<int> g(n);
  for (auto& x : g) x = static_cast<int>(rng() % n);
  return g;
}

std::string c3_kozen() {
  std::size_t bad = 0, total = 0;
  std::vector<std::vector<int>> maps;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) maps.push_back({a, b});
  for (const auto& f : maps)
    for (const auto& f1 : maps) {
      const CompositionInstance c{2, f, {f1}};
      bad += oracle(encode_kozen_to_t3(c)) != composition_oracle(c);
      ++total;
    }
  if (total != 16) return "enumerated " + std::to_string(total);
  std::mt19937 rng(3);
  for (int rep = 0; rep < 200; ++rep, ++total) {
    const std::size_t n = 1 + rng() % 3, m = 1 + rng() % 3;
    CompositionInstance c{n, {}, {}};
    for (std::size_t i = 0; i < m; ++i) c.fs.push_back(random_map(n, rng));
    std::vector<std::size_t> steps(rng() % 6);
    for (auto& st : steps) st = rng() % m;
    std::vector<int> g(n);
    for (std::size_t x = 0; x < n; ++x) g[x] = static_cast<int>(x);
    for (std::size_t i : steps)
      for (auto& x : g) x = c.fs[i][static_cast<std::size_t>(x)];
    c.f = g;
    const SmpInstance inst = encode_kozen_to_t3(c);
    bad += eval_word(inst, kozen_forward_word(c, steps)) != inst.target;
  }
  return mismatch(bad, total);
}

std::string c4_exact_cover() {
  auto z = builtin("Z2_1");
  const auto pair = find_np_witness_pair(*z);
  if (!pair) return "no (e, a) pair in Z2_1";
  std::size_t bad = 0, total = 0;
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t k = 0; k <= 4; ++k) {
      const std::size_t subsets = std::size_t{1} << n;
      std::size_t count = 1;
      for (std::size_t j = 0; j < k; ++j) count *= subsets;
      for (std::size_t code = 0; code < count; ++code, ++total) {
        ExactCoverInstance ec{n, {}};
        std::size_t c = code;
        for (std::size_t j = 0; j < k; ++j, c /= subsets) {
          std::vector<std::size_t> set;
          for (std::size_t x = 0; x < n; ++x)
            if ((c % subsets) >> x & 1) set.push_back(x);
          ec.sets.push_back(std::move(set));
        }
        bad += exact_cover_bruteforce(ec) != oracle(encode_exact_cover(ec, z, pair->first, pair->second));
      }
    }
  return mismatch(bad, total);
}

std::string c5_automata() {
  std::mt19937 rng(5);
  auto s = builtin("T(3)");
  std::size_t bad = 0;
  for (int rep = 0; rep < 200; ++rep) {
    const SmpInstance inst = random_instance(s, 1 + rng() % 3, 1 + rng() % 3, rng);
    const IntersectionResult r = dfa_intersection_nonempty(encode_t3_to_automata(inst), 1);
    bad += r.nonempty != oracle(inst);
    if (r.nonempty && eval_word(inst, Witness{*r.word}) != inst.target) ++bad;
  }
  return mismatch(bad, 200);
}

std::string c6_conditions() {
  std::size_t semigroups = 0, bad = 0;
  for (std::size_t m = 1; m <= 3; ++m) {
    std::vector<Elem> t(m * m, 0);
    while (true) {
      bool assoc = true;
      for (std::size_t x = 0; x < m && assoc; ++x)
        for (std::size_t y = 0; y < m && assoc; ++y)
          for (std::size_t z = 0; z < m && assoc; ++z)
            assoc = t[t[x * m + y] * m + z] == t[x * m + t[y * m + z]];
      if (assoc) {
        ++semigroups;
        const ClassificationReport r = classify(Semigroup(m, t));
        bad += !(r.cond1 == r.cond2 && r.cond2 == r.cond3 && r.cond3 == r.cond4);
      }
      std::size_t i = 0;
      while (i < t.size() && ++t[i] == m) t[i++] = 0;
      if (i == t.size()) break;
    }
  }
  if (semigroups != 1 + 8 + 113) return "found " + std::to_string(semigroups) + " semigroups";
  return mismatch(bad, semigroups);
}

std::string c7_facts() {
  if (classify(*builtin("Z2_1")).dichotomy != Dichotomy::np_complete) return "Z2_1 not NP-complete";
  for (const auto& name : catalog_names()) {
    auto s = builtin(name);
    const ClassificationReport r = classify(*s);
    if (!r.is_clifford && !r.nilpotency_degree) continue;
    if (r.is_commutative) {
      if (r.dichotomy != Dichotomy::p) return name + " not in P";
    } else if (!r.cond1 || !is_polynomial(Solver(s).auto_method())) {
      return name + " has no polynomial method";
    }
  }
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t m = 0; m <= 3; ++m) {
      const CompositionInstance c{n, std::vector<int>(n, 0),
                                  std::vector<std::vector<int>>(m, std::vector<int>(n, 0))};
      if (encode_kozen_to_t3(c).n != n * n + m * n) return "Kozen coordinate count";
    }
  return {};
}

std::string c8_extension_generators() {
  std::mt19937 rng(8);
  std::size_t bad = 0, total = 0;
  for (const auto& name : extension_catalog_names()) {
    auto s = builtin(name);
    const ElemSet ideal = ideal_of_idempotents(*s);
    const std::size_t d = *nilpotency_degree(*rees_quotient(*s, ideal).quotient);
    auto in_c = [&](Elem x) { return std::binary_search(ideal.begin(), ideal.end(), x); };
    for (int rep = 0; rep < 200; ++rep, ++total) {
      SmpInstance inst = random_instance(s, 1 + rng() % 3, 1 + rng() % 3, rng);
      if (!std::all_of(inst.target.begin(), inst.target.end(), in_c))
        for (auto& x : inst.target) x = ideal[rng() % ideal.size()];
      const SmpInstance reduced{s, inst.n, extension_generators(inst, ideal, d), inst.target};
      bad += oracle(inst) != oracle(reduced);
    }
  }
  return mismatch(bad, total);
}

double best_of(int reps, const std::function<void()>& f) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = Clock::now();
    f();
    best = std::min(best, seconds_since(t0));
  }
  return best;
}

std::string c9_performance() {
  const CliffordDecomposition dec(builtin("direct_product(semilattice_chain(2),cyclic_group(2))"));
  std::string out;
  auto scaling = [&](const char* what, double half, double full) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s %.4f s -> %.4f s; ", what, half, full);
    std::printf("  %s\n", buf);
    if (full >= 10.0) out += std::string(what) + " over 10 s; ";
    if (full >= 4 * half) out += std::string(what) + " scales badly; ";
  };
  double t[2];
  for (int i = 0; i < 2; ++i) {
    const SmpInstance inst = perf_clifford_instance(5000 << i, 100, 9);
    t[i] = best_of(3, [&] {
      if (!clifford_smp(inst, dec)) throw std::runtime_error("clifford benchmark answered false");
    });
  }
  scaling("clifford n=5000/10000", t[0], t[1]);
  for (int i = 0; i < 2; ++i) {
    const SmpInstance inst = perf_t2_instance(500 << i, 100, 9);
    t[i] = best_of(5, [&] {
      if (!t2_smp(inst).member) throw std::runtime_error("t2 benchmark answered false");
    });
  }
  scaling("t2 n=500/1000", t[0], t[1]);
  return out;
}

}  // namespace

int main() {
  criterion(1, "solve_auto agrees with the closure oracle on the catalog", 120, c1_oracle_agreement);
  criterion(2, "T(2) solver exhaustive and random", 60, c2_t2);
  criterion(3, "composition encoding into T(3)", 300, c3_kozen);
  criterion(4, "exact cover encoding over Z2_1", 120, c4_exact_cover);
  criterion(5, "product automaton agrees with the oracle", 60, c5_automata);
  criterion(6, "four conditions agree on all semigroups of order <= 3", 60, c6_conditions);
  criterion(7, "classification facts and encoding size", 60, c7_facts);
  criterion(8, "extension generators preserve membership", 120, c8_extension_generators);
  criterion(9, "performance smoke", 60, c9_performance);
  return failures == 0 ? 0 : 1;
}
