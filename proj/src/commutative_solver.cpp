#include "smpkit/commutative_solver.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>

namespace smpkit {

std::uint32_t exponent_bound(const Semigroup& s) {
  Tup x(s.order());
  std::iota(x.begin(), x.end(), Elem{0});
  std::set<Tup> powers;
  Tup p = x;
  while (powers.insert(p).second) p = tup_mul(s, p, x);
  return static_cast<std::uint32_t>(powers.size());
}

bool verify_exponent_witness(const SmpInstance& inst, const ExponentWitness& w) {
  inst.validate();
  if (w.exponents.size() != inst.k())
    throw InputError("exponent vector has length " + std::to_string(w.exponents.size()) +
                     ", expected " + std::to_string(inst.k()));
  if (std::all_of(w.exponents.begin(), w.exponents.end(), [](auto e) { return e == 0; }))
    throw InputError("exponent vector is all zero (empty product)");
  for (auto e : w.exponents)
    if (e > w.r) throw InputError("exponent " + std::to_string(e) + " exceeds bound r");
  std::optional<Tup> acc;
  for (std::size_t i = 0; i < inst.k(); ++i) {
    if (w.exponents[i] == 0) continue;
    Tup p = tup_power(inst.sg(), inst.generators[i], w.exponents[i]);
    if (acc)
      tup_mul_into(inst.sg(), *acc, p);
    else
      acc = std::move(p);
  }
  return *acc == inst.target;
}

namespace {

class ExponentSearch {
 public:
  ExponentSearch(const SmpInstance& inst, std::uint32_t r) : inst_(inst), s_(inst.sg()), r_(r) {
    const std::size_t m = s_.order();
    const Tup& b = inst.target;

    // A generator whose coordinate cannot divide b there never occurs.
    for (std::size_t g = 0; g < inst.k(); ++g) {
      const Tup& a = inst.generators[g];
      bool usable = true;
      for (std::size_t j = 0; j < inst.n && usable; ++j) {
        if (a[j] == b[j]) continue;
        auto row = s_.row(a[j]);
        usable = std::find(row.begin(), row.end(), b[j]) != row.end();
      }
      if (usable) order_.push_back(g);
    }
    // Most coordinates moved first.
    std::vector<std::size_t> moved(inst.k(), 0);
    for (std::size_t g : order_)
      for (std::size_t j = 0; j < inst.n; ++j)
        moved[g] += s_.mul(b[j], inst.generators[g][j]) != b[j];
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t x, std::size_t y) { return moved[x] > moved[y]; });

    const std::size_t depth = order_.size();
    powers_.resize(depth);
    for (std::size_t t = 0; t < depth; ++t) {
      const Tup& a = inst.generators[order_[t]];
      powers_[t].push_back(a);
      for (std::uint32_t l = 2; l <= r_; ++l) powers_[t].push_back(tup_mul(s_, powers_[t].back(), a));
    }

    // good_[t][j][v]: partial value v at coordinate j can still reach b(j)
    // using factors t.. (or none). start_ok_[t][j]: b(j) is generated by them.
    good_.assign((depth + 1) * inst.n * m, false);
    start_ok_.assign((depth + 1) * inst.n, false);
    for (std::size_t j = 0; j < inst.n; ++j) {
      // Subsemigroup generated by the remaining factors' values at j.
      std::vector<bool> reach(m, false);
      std::vector<Elem> values;
      for (std::size_t t = depth + 1; t-- > 0;) {
        if (t < depth) {
          const Elem a = inst.generators[order_[t]][j];
          if (std::find(values.begin(), values.end(), a) == values.end()) {
            values.push_back(a);
            reach = generated_subsemigroup(s_, values);
          }
        }
        start_ok_[t * inst.n + j] = reach[b[j]];
        for (std::size_t v = 0; v < m; ++v) {
          bool ok = v == b[j];
          for (std::size_t x = 0; x < m && !ok; ++x)
            ok = reach[x] && s_.mul(static_cast<Elem>(v), static_cast<Elem>(x)) == b[j];
          good_[(t * inst.n + j) * m + v] = ok;
        }
      }
    }
  }

  std::optional<ExponentWitness> run() {
    chosen_.assign(order_.size(), 0);
    if (!dfs(0, nullptr)) return std::nullopt;
    ExponentWitness w;
    w.r = r_;
    w.exponents.assign(inst_.k(), 0);
    for (std::size_t t = 0; t < order_.size(); ++t) w.exponents[order_[t]] = chosen_[t];
    return w;
  }

  std::size_t nodes() const { return nodes_; }

 private:
  bool viable(std::size_t t, const Tup* partial) const {
    const std::size_t m = s_.order();
    for (std::size_t j = 0; j < inst_.n; ++j) {
      const bool ok = partial ? good_[(t * inst_.n + j) * m + (*partial)[j]]
                              : start_ok_[t * inst_.n + j];
      if (!ok) return false;
    }
    return true;
  }

  std::string key(std::size_t t, const Tup* partial) const {
    std::string k(sizeof(std::size_t), '\0');
    std::copy_n(reinterpret_cast<const char*>(&t), sizeof t, k.begin());
    if (partial)
      k.append(reinterpret_cast<const char*>(partial->data()), partial->size() * sizeof(Elem));
    else
      k.push_back('E');
    return k;
  }

  bool dfs(std::size_t t, const Tup* partial) {
    ++nodes_;
    if (t == order_.size()) return partial && *partial == inst_.target;
    if (!viable(t, partial)) return false;
    std::string k = key(t, partial);
    if (dead_.count(k)) return false;
    for (std::uint32_t l = 0; l <= r_; ++l) {
      chosen_[t] = l;
      if (l == 0) {
        if (dfs(t + 1, partial)) return true;
        continue;
      }
      Tup next = partial ? tup_mul(s_, *partial, powers_[t][l - 1]) : powers_[t][l - 1];
      if (dfs(t + 1, &next)) return true;
    }
    chosen_[t] = 0;
    dead_.insert(std::move(k));
    return false;
  }

  const SmpInstance& inst_;
  const Semigroup& s_;
  std::uint32_t r_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<Tup>> powers_;
  std::vector<bool> good_;
  std::vector<bool> start_ok_;
  std::vector<std::uint32_t> chosen_;
  std::unordered_set<std::string> dead_;
  std::size_t nodes_ = 0;
};

}  // namespace

CommutativeResult commutative_smp(const SmpInstance& inst) {
  inst.validate();
  if (!inst.sg().is_commutative())
    throw PreconditionError("commutative search requires a commutative semigroup");
  ExponentSearch search(inst, exponent_bound(inst.sg()));
  CommutativeResult res;
  res.witness = search.run();
  res.member = res.witness.has_value();
  res.nodes = search.nodes();
  return res;
}

}  // namespace smpkit
