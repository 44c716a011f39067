#include "smpkit/reductions.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "smpkit/structure.hpp"

namespace smpkit {

namespace {

void check_map(const std::vector<int>& g, std::size_t n, const char* what) {
  if (g.size() != n)
    throw InputError(std::string(what) + " has " + std::to_string(g.size()) +
                     " images, expected " + std::to_string(n));
  for (int x : g)
    if (x < 0 || static_cast<std::size_t>(x) >= n)
      throw InputError(std::string(what) + " maps outside [n]");
}

Elem t3_elem(int a, int b) {
  const std::array<int, 3> images{a, b, 2};
  return transformation_index(images);
}

SemigroupPtr t3_semigroup() {
  static const SemigroupPtr s = builtin("T(3)");
  return s;
}

}  // namespace

void CompositionInstance::validate() const {
  if (n == 0) throw InputError("composition instance needs n >= 1");
  check_map(f, n, "f");
  for (const auto& g : fs) check_map(g, n, "f_i");
}

namespace t3 {
Elem zero() { return t3_elem(0, 0); }
Elem one() { return t3_elem(1, 1); }
Elem id() { return t3_elem(0, 1); }
Elem ztoz() { return t3_elem(0, 2); }
Elem ztoo() { return t3_elem(1, 2); }
Elem otoz() { return t3_elem(2, 0); }
}  // namespace t3

Tup kozen_mapping_tuple(const CompositionInstance& c, const std::vector<int>& g) {
  check_map(g, c.n, "g");
  const std::size_t n = c.n;
  Tup t(n * n + c.m() * n, t3::zero());
  for (std::size_t j = 0; j < n; ++j) t[j * n + static_cast<std::size_t>(g[j])] = t3::one();
  return t;
}

std::size_t kozen_application_index(const CompositionInstance& c, std::size_t i,
                                    std::size_t j, std::size_t k) {
  return 1 + c.m() + (i * c.n + j) * c.n + k;
}

SmpInstance encode_kozen_to_t3(const CompositionInstance& c) {
  c.validate();
  const std::size_t n = c.n, m = c.m();
  const std::size_t width = n * n + m * n;
  SmpInstance inst{t3_semigroup(), width, {}, {}};

  std::vector<int> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  inst.generators.push_back(kozen_mapping_tuple(c, identity));

  for (std::size_t i = 0; i < m; ++i) {
    Tup ci(width, t3::ztoz());
    std::fill_n(ci.begin(), n * n, t3::id());
    std::fill_n(ci.begin() + static_cast<std::ptrdiff_t>(n * n + i * n), n, t3::ztoo());
    inst.generators.push_back(std::move(ci));
  }

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const auto image = static_cast<std::size_t>(c.fs[i][k]);
        Tup a(width, t3::id());
        a[n * n + i * n + j] = t3::otoz();
        if (k != image) {
          a[j * n + k] = t3::otoz();
          a[j * n + image] = t3::ztoo();
        }
        inst.generators.push_back(std::move(a));
      }

  inst.target = kozen_mapping_tuple(c, c.f);
  return inst;
}

Witness kozen_forward_word(const CompositionInstance& c, const std::vector<std::size_t>& steps) {
  c.validate();
  Witness w;
  w.word.push_back(0);
  std::vector<int> g(c.n);
  std::iota(g.begin(), g.end(), 0);
  for (std::size_t i : steps) {
    if (i >= c.m()) throw InputError("composition step out of range");
    w.word.push_back(1 + i);
    for (std::size_t j = 0; j < c.n; ++j)
      w.word.push_back(kozen_application_index(c, i, j, static_cast<std::size_t>(g[j])));
    for (auto& x : g) x = c.fs[i][static_cast<std::size_t>(x)];
  }
  return w;
}

bool composition_oracle(const CompositionInstance& c) {
  c.validate();
  std::vector<int> identity(c.n);
  std::iota(identity.begin(), identity.end(), 0);
  std::set<std::vector<int>> seen{identity};
  std::deque<std::vector<int>> queue{identity};
  while (!queue.empty()) {
    const std::vector<int> g = std::move(queue.front());
    queue.pop_front();
    if (g == c.f) return true;
    for (const auto& h : c.fs) {
      std::vector<int> gh(c.n);
      for (std::size_t x = 0; x < c.n; ++x) gh[x] = h[static_cast<std::size_t>(g[x])];
      if (seen.insert(gh).second) queue.push_back(std::move(gh));
    }
  }
  return false;
}

void Dfa::validate() const {
  if (states.empty()) throw InputError("automaton has no states");
  if (initial >= states.size()) throw InputError("initial state out of range");
  if (accepting.size() != states.size())
    throw InputError("accepting flags do not match the state count");
  if (delta.size() != states.size()) throw InputError("transition table is not total");
  for (const auto& row : delta) {
    if (row.size() != alphabet.size()) throw InputError("transition table is not total");
    for (std::size_t q : row)
      if (q >= states.size()) throw InputError("transition to an unknown state");
  }
}

bool Dfa::accepts(const std::vector<std::size_t>& word) const {
  std::size_t q = initial;
  for (std::size_t a : word) q = delta.at(q).at(a);
  return accepting[q];
}

std::vector<Dfa> encode_t3_to_automata(const SmpInstance& inst) {
  inst.validate();
  if (inst.sg().builtin_tag() != "T(3)")
    throw PreconditionError("the automata encoding applies only to the builtin T(3)");
  std::vector<std::string> alphabet;
  for (std::size_t l = 0; l < inst.k(); ++l) alphabet.push_back("a" + std::to_string(l + 1));

  std::vector<std::vector<int>> images(27);
  for (std::size_t x = 0; x < 27; ++x) images[x] = transformation_images(static_cast<Elem>(x), 3);

  std::vector<Dfa> out;
  for (std::size_t i = 0; i < inst.n; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Dfa d;
      d.states = {"0", "1", "inf"};
      d.alphabet = alphabet;
      d.initial = j;
      d.accepting.assign(3, false);
      d.accepting[static_cast<std::size_t>(images[inst.target[i]][j])] = true;
      d.delta.assign(3, std::vector<std::size_t>(inst.k()));
      for (std::size_t q = 0; q < 3; ++q)
        for (std::size_t l = 0; l < inst.k(); ++l)
          d.delta[q][l] = static_cast<std::size_t>(images[inst.generators[l][i]][q]);
      out.push_back(std::move(d));
    }
  return out;
}

IntersectionResult dfa_intersection_nonempty(const std::vector<Dfa>& dfas,
                                             std::size_t min_length) {
  if (min_length > 1) throw InputError("min_length must be 0 or 1");
  for (const Dfa& d : dfas) {
    d.validate();
    if (d.alphabet != dfas.front().alphabet)
      throw InputError("automata do not share an alphabet");
  }
  const std::size_t sigma = dfas.empty() ? 0 : dfas.front().alphabet.size();
  using State = std::vector<std::size_t>;
  auto accepted = [&](const State& st) {
    for (std::size_t i = 0; i < dfas.size(); ++i)
      if (!dfas[i].accepting[st[i]]) return false;
    return true;
  };
  auto step = [&](const State& st, std::size_t a) {
    State next(st.size());
    for (std::size_t i = 0; i < dfas.size(); ++i) next[i] = dfas[i].delta[st[i]][a];
    return next;
  };

  State start(dfas.size());
  for (std::size_t i = 0; i < dfas.size(); ++i) start[i] = dfas[i].initial;

  IntersectionResult res;
  if (min_length == 0 && accepted(start)) {
    res.nonempty = true;
    res.word = std::vector<std::size_t>{};
    return res;
  }

  // Parent state and symbol. The start state is not marked, so it is
  // explored again if a nonempty word returns to it.
  std::map<State, std::pair<State, std::size_t>> parent;
  std::deque<State> queue;
  auto visit = [&](const State& from, State to, std::size_t a) {
    if (parent.count(to)) return;
    parent.emplace(to, std::pair{from, a});
    queue.push_back(std::move(to));
  };
  for (std::size_t a = 0; a < sigma; ++a) visit(start, step(start, a), a);

  while (!queue.empty()) {
    State st = std::move(queue.front());
    queue.pop_front();
    if (accepted(st)) {
      // Every successor of the start state was seeded from the empty word,
      // so the walk back stops at the first edge leaving the start state.
      std::vector<std::size_t> word;
      State cur = st;
      while (true) {
        const auto& [prev, a] = parent.at(cur);
        word.push_back(a);
        if (prev == start) break;
        cur = prev;
      }
      std::reverse(word.begin(), word.end());
      res.nonempty = true;
      res.word = std::move(word);
      return res;
    }
    for (std::size_t a = 0; a < sigma; ++a) visit(st, step(st, a), a);
  }
  return res;
}

void ExactCoverInstance::validate() const {
  if (n == 0) throw InputError("exact cover instance needs n >= 1");
  for (const auto& c : sets)
    for (std::size_t x : c)
      if (x >= n) throw InputError("set element outside [n]");
}

SmpInstance encode_exact_cover(const ExactCoverInstance& ec, SemigroupPtr s, Elem e, Elem a) {
  ec.validate();
  const Semigroup& sg = *s;
  if (e >= sg.order() || a >= sg.order()) throw InputError("element out of range");
  if (!sg.is_idempotent(e))
    throw PreconditionError("e = " + sg.name(e) + " is not idempotent");
  if (sg.mul(e, a) != a || sg.mul(a, e) != a)
    throw PreconditionError("ea = ae = a fails for e = " + sg.name(e) + ", a = " + sg.name(a));
  if (sg.generates_group(a))
    throw PreconditionError("<" + sg.name(a) + "> is a group");
  SmpInstance inst{std::move(s), ec.n, {}, Tup(ec.n, a)};
  for (const auto& c : ec.sets) {
    Tup t(ec.n, e);
    for (std::size_t x : c) t[x] = a;
    inst.generators.push_back(std::move(t));
  }
  return inst;
}

std::optional<std::vector<std::size_t>> find_exact_cover(const ExactCoverInstance& ec) {
  ec.validate();
  std::vector<std::vector<bool>> member(ec.sets.size(), std::vector<bool>(ec.n, false));
  for (std::size_t j = 0; j < ec.sets.size(); ++j)
    for (std::size_t x : ec.sets[j]) member[j][x] = true;

  std::vector<bool> covered(ec.n, false);
  std::vector<std::size_t> chosen;
  // Branch on the lowest uncovered point; some chosen set must contain it.
  auto search = [&](auto&& self) -> bool {
    const auto it = std::find(covered.begin(), covered.end(), false);
    if (it == covered.end()) return true;
    const auto point = static_cast<std::size_t>(it - covered.begin());
    for (std::size_t j = 0; j < ec.sets.size(); ++j) {
      if (!member[j][point]) continue;
      bool disjoint = true;
      for (std::size_t x = 0; x < ec.n && disjoint; ++x) disjoint = !(member[j][x] && covered[x]);
      if (!disjoint) continue;
      for (std::size_t x = 0; x < ec.n; ++x)
        if (member[j][x]) covered[x] = true;
      chosen.push_back(j);
      if (self(self)) return true;
      chosen.pop_back();
      for (std::size_t x = 0; x < ec.n; ++x)
        if (member[j][x]) covered[x] = false;
    }
    return false;
  };
  if (!search(search)) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

bool exact_cover_bruteforce(const ExactCoverInstance& ec) {
  return find_exact_cover(ec).has_value();
}

std::optional<std::pair<Elem, Elem>> find_np_witness_pair(const Semigroup& s) {
  if (!idempotents_central(s)) return std::nullopt;
  for (Elem e : idempotents(s))
    for (std::size_t x = 0; x < s.order(); ++x) {
      const auto a = static_cast<Elem>(x);
      if (s.mul(e, a) == a && s.mul(a, e) == a && !s.generates_group(a)) return std::pair{e, a};
    }
  return std::nullopt;
}

}  // namespace smpkit
