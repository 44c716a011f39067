#include "smpkit/structure.hpp"

#include <algorithm>
#include <set>

namespace smpkit {

namespace {

std::string el(const Semigroup& s, Elem x) { return s.name(x); }

std::vector<bool> mask_of(std::size_t order, const ElemSet& subset) {
  std::vector<bool> m(order, false);
  for (Elem x : subset) m.at(x) = true;
  return m;
}

ElemSet all_elements(const Semigroup& s) {
  ElemSet all(s.order());
  for (std::size_t i = 0; i < s.order(); ++i) all[i] = static_cast<Elem>(i);
  return all;
}

}  // namespace

ElemSet idempotents(const Semigroup& s) {
  ElemSet e;
  for (std::size_t x = 0; x < s.order(); ++x)
    if (s.is_idempotent(static_cast<Elem>(x))) e.push_back(static_cast<Elem>(x));
  return e;
}

bool idempotents_central(const Semigroup& s) {
  for (Elem e : idempotents(s))
    for (std::size_t x = 0; x < s.order(); ++x)
      if (s.mul(e, static_cast<Elem>(x)) != s.mul(static_cast<Elem>(x), e)) return false;
  return true;
}

bool is_group(const Semigroup& s) {
  auto id = s.identity();
  if (!id) return false;
  for (std::size_t x = 0; x < s.order(); ++x) {
    auto row = s.row(static_cast<Elem>(x));
    if (std::find(row.begin(), row.end(), *id) == row.end()) return false;
  }
  return true;
}

bool is_completely_regular(const Semigroup& s) { return is_completely_regular(s, all_elements(s)); }

bool is_completely_regular(const Semigroup& s, const ElemSet& subset) {
  return std::all_of(subset.begin(), subset.end(),
                     [&](Elem x) { return s.generates_group(x); });
}

bool is_clifford(const Semigroup& s) { return is_clifford(s, all_elements(s)); }

bool is_clifford(const Semigroup& s, const ElemSet& subset) {
  if (!is_completely_regular(s, subset)) return false;
  for (Elem e : subset) {
    if (!s.is_idempotent(e)) continue;
    for (Elem x : subset)
      if (s.mul(e, x) != s.mul(x, e)) return false;
  }
  return true;
}

std::optional<std::size_t> nilpotency_degree(const Semigroup& s) {
  // P_{d+1} = P_d S is contained in P_d, so the chain stabilises.
  std::vector<bool> current(s.order(), true);
  std::size_t size = s.order();
  for (std::size_t d = 1; d <= s.order() + 1; ++d) {
    if (size == 1) return d;
    std::vector<bool> next(s.order(), false);
    std::size_t next_size = 0;
    for (std::size_t p = 0; p < s.order(); ++p) {
      if (!current[p]) continue;
      for (Elem y : s.row(static_cast<Elem>(p)))
        if (!next[y]) {
          next[y] = true;
          ++next_size;
        }
    }
    if (next_size == size) return std::nullopt;
    current = std::move(next);
    size = next_size;
  }
  return std::nullopt;
}

ElemSet ideal_of_idempotents(const Semigroup& s) {
  std::vector<bool> in(s.order(), false);
  std::vector<Elem> queue = idempotents(s);
  for (Elem e : queue) in[e] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Elem x = queue[head];
    for (std::size_t y = 0; y < s.order(); ++y) {
      for (Elem p : {s.mul(x, static_cast<Elem>(y)), s.mul(static_cast<Elem>(y), x)})
        if (!in[p]) {
          in[p] = true;
          queue.push_back(p);
        }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::optional<std::pair<Elem, Elem>> ideal_violation(const Semigroup& s,
                                                     const ElemSet& subset) {
  const auto in = mask_of(s.order(), subset);
  for (Elem x : subset)
    for (std::size_t y = 0; y < s.order(); ++y) {
      const Elem ye = static_cast<Elem>(y);
      if (!in[s.mul(x, ye)]) return std::pair{x, ye};
      if (!in[s.mul(ye, x)]) return std::pair{ye, x};
    }
  return std::nullopt;
}

NotIdealError::NotIdealError(Elem x_, Elem y_, Elem product_)
    : PreconditionError("subset is not an ideal: product of elements " +
                        std::to_string(x_ + 1) + " and " + std::to_string(y_ + 1) +
                        " is " + std::to_string(product_ + 1) + ", outside the subset"),
      x(x_),
      y(y_),
      product(product_) {}

ReesQuotient rees_quotient(const Semigroup& s, const ElemSet& ideal) {
  if (ideal.empty()) throw PreconditionError("ideal must be nonempty");
  for (Elem x : ideal)
    if (x >= s.order()) throw InputError("ideal element out of range");
  if (auto v = ideal_violation(s, ideal))
    throw NotIdealError(v->first, v->second, s.mul(v->first, v->second));
  const auto in = mask_of(s.order(), ideal);

  ReesQuotient r;
  r.zero = 0;
  r.class_of.assign(s.order(), 0);
  std::vector<Elem> reps{ideal.front()};
  for (std::size_t x = 0; x < s.order(); ++x)
    if (!in[x]) {
      r.class_of[x] = static_cast<Elem>(reps.size());
      reps.push_back(static_cast<Elem>(x));
    }
  const std::size_t q = reps.size();
  std::vector<Elem> table(q * q, 0);
  for (std::size_t a = 1; a < q; ++a)
    for (std::size_t b = 1; b < q; ++b)
      table[a * q + b] = r.class_of[s.mul(reps[a], reps[b])];
  std::vector<std::string> names;
  bool zero_name_taken = false;
  for (std::size_t a = 1; a < q; ++a) zero_name_taken |= s.name(reps[a]) == "0";
  names.push_back(zero_name_taken ? "[I]" : "0");
  for (std::size_t a = 1; a < q; ++a) names.push_back(s.name(reps[a]));
  r.quotient = std::make_shared<const Semigroup>(q, std::move(table), std::move(names));
  return r;
}

Restriction restrict_to(const Semigroup& s, const ElemSet& subset) {
  if (subset.empty()) throw PreconditionError("cannot restrict to an empty subset");
  Restriction r;
  r.from_parent.assign(s.order(), -1);
  for (Elem x : subset) {
    if (r.from_parent.at(x) >= 0) continue;
    r.from_parent[x] = static_cast<int>(r.to_parent.size());
    r.to_parent.push_back(x);
  }
  const std::size_t m = r.to_parent.size();
  std::vector<Elem> table(m * m);
  std::vector<std::string> names;
  for (std::size_t a = 0; a < m; ++a) {
    names.push_back(s.name(r.to_parent[a]));
    for (std::size_t b = 0; b < m; ++b) {
      const int p = r.from_parent[s.mul(r.to_parent[a], r.to_parent[b])];
      if (p < 0) throw PreconditionError("subset is not closed under multiplication");
      table[a * m + b] = static_cast<Elem>(p);
    }
  }
  r.semigroup = std::make_shared<const Semigroup>(m, std::move(table), std::move(names));
  return r;
}

CliffordDecomposition::CliffordDecomposition(SemigroupPtr s) : s_(std::move(s)) {
  const Semigroup& sg = *s_;
  for (std::size_t x = 0; x < sg.order(); ++x)
    if (!sg.generates_group(static_cast<Elem>(x)))
      throw PreconditionError("not a Clifford semigroup: not completely regular (" +
                              el(sg, static_cast<Elem>(x)) + " lies in no subgroup)");
  idempotents_ = idempotents(sg);
  for (Elem e : idempotents_)
    for (std::size_t x = 0; x < sg.order(); ++x)
      if (sg.mul(e, static_cast<Elem>(x)) != sg.mul(static_cast<Elem>(x), e))
        throw PreconditionError("not a Clifford semigroup: idempotent " + el(sg, e) +
                                " is not central (fails to commute with " +
                                el(sg, static_cast<Elem>(x)) + ")");
  slot_.assign(sg.order(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < idempotents_.size(); ++i) slot_[idempotents_[i]] = i;
  groups_.resize(idempotents_.size());
  group_of_.resize(sg.order());
  inverse_.resize(sg.order());
  for (std::size_t x = 0; x < sg.order(); ++x) {
    const Elem e = sg.idempotent_power(static_cast<Elem>(x));
    group_of_[x] = e;
    groups_[slot_[e]].push_back(static_cast<Elem>(x));
  }
  for (const auto& g : groups_)
    for (Elem x : g)
      for (Elem y : g)
        if (sg.mul(x, y) == group_of_[x]) {
          inverse_[x] = y;
          break;
        }
}

Elem CliffordDecomposition::phi(Elem i, Elem j, Elem x) const {
  if (group_of_.at(x) != i) throw InputError("phi: element is not in G_i");
  if (!s_->is_idempotent(j) || !leq(j, i)) throw InputError("phi: requires j <= i");
  return s_->mul(x, j);
}

CliffordDecomposition clifford_decompose(SemigroupPtr s) {
  return CliffordDecomposition(std::move(s));
}

bool natural_preorder(const CliffordDecomposition& dec, Elem x, Elem y) {
  return dec.leq(dec.group_of(x), dec.group_of(y));
}

std::vector<Elem> gamma(const CliffordDecomposition& dec, Elem x) {
  std::vector<Elem> out = dec.semilattice();
  out[dec.slot_of(dec.group_of(x))] = x;
  return out;
}

Elem strong_semilattice_product(const CliffordDecomposition& dec, Elem x, Elem y) {
  const Elem i = dec.group_of(x);
  const Elem j = dec.group_of(y);
  const Elem m = dec.meet(i, j);
  return dec.semigroup().mul(dec.phi(i, m, x), dec.phi(j, m, y));
}

EmbeddingError::EmbeddingError(const std::string& what,
                               std::optional<std::pair<Elem, Elem>> pair)
    : PreconditionError(what), violating_pair(pair) {}

std::optional<std::pair<Elem, Elem>> find_group_condition_violation(const Semigroup& s) {
  for (Elem e : idempotents(s))
    for (std::size_t a = 0; a < s.order(); ++a) {
      const Elem ae = static_cast<Elem>(a);
      if (s.mul(e, ae) == ae && !s.generates_group(ae)) return std::pair{e, ae};
    }
  return std::nullopt;
}

EmbeddingWitness build_embedding(const Semigroup& s) {
  if (auto v = find_group_condition_violation(s))
    throw EmbeddingError("element " + el(s, v->second) + " satisfies " +
                             el(s, v->first) + "*" + el(s, v->second) + " = " +
                             el(s, v->second) + " but does not generate a group",
                         v);
  const std::size_t m = s.order();
  EmbeddingWitness w;
  for (w.k = 1;; ++w.k) {
    bool all = true;
    for (std::size_t x = 0; x < m && all; ++x)
      all = s.is_idempotent(s.power(static_cast<Elem>(x), w.k));
    if (all) break;
  }
  w.alpha.resize(m);
  for (std::size_t x = 0; x < m; ++x) w.alpha[x] = s.power(static_cast<Elem>(x), w.k + 1);

  for (std::size_t x = 0; x < m; ++x) {
    if (w.alpha[w.alpha[x]] != w.alpha[x])
      throw EmbeddingError("alpha is not idempotent at " + el(s, static_cast<Elem>(x)),
                           std::nullopt);
    for (std::size_t y = 0; y < m; ++y)
      if (w.alpha[s.mul(static_cast<Elem>(x), static_cast<Elem>(y))] !=
          s.mul(w.alpha[x], w.alpha[y]))
        throw EmbeddingError("alpha is not a homomorphism at (" +
                                 el(s, static_cast<Elem>(x)) + "," +
                                 el(s, static_cast<Elem>(y)) + ")",
                             std::nullopt);
  }

  std::set<Elem> image(w.alpha.begin(), w.alpha.end());
  w.clifford_part.assign(image.begin(), image.end());
  if (ideal_violation(s, w.clifford_part))
    throw EmbeddingError("alpha(S) is not an ideal", std::nullopt);
  if (!is_clifford(s, w.clifford_part))
    throw EmbeddingError("alpha(S) is not a Clifford semigroup", std::nullopt);
  w.quotient = rees_quotient(s, w.clifford_part);
  const Semigroup& nq = *w.quotient.quotient;
  auto d = nilpotency_degree(nq);
  if (!d || *d > nq.order())
    throw EmbeddingError("S/alpha(S) is not |N|-nilpotent", std::nullopt);

  std::set<std::pair<Elem, Elem>> seen;
  for (std::size_t x = 0; x < m; ++x) {
    const auto bx = w.beta(static_cast<Elem>(x));
    if (!seen.insert(bx).second)
      throw EmbeddingError("beta is not injective", std::nullopt);
    for (std::size_t y = 0; y < m; ++y) {
      const auto by = w.beta(static_cast<Elem>(y));
      const auto bxy = w.beta(s.mul(static_cast<Elem>(x), static_cast<Elem>(y)));
      if (bxy.first != s.mul(bx.first, by.first) || bxy.second != nq.mul(bx.second, by.second))
        throw EmbeddingError("beta is not a homomorphism", std::nullopt);
    }
  }
  return w;
}

const char* to_string(Dichotomy d) {
  switch (d) {
    case Dichotomy::p:
      return "P";
    case Dichotomy::np_complete:
      return "NP-complete";
    case Dichotomy::not_applicable:
      return "not-applicable";
  }
  return "?";
}

bool is_clifford_by_nilpotent_extension(const Semigroup& s, const ElemSet& ideal) {
  if (ideal.empty() || ideal_violation(s, ideal)) return false;
  if (!is_clifford(s, ideal)) return false;
  return nilpotency_degree(*rees_quotient(s, ideal).quotient).has_value();
}

ClassificationReport classify(const Semigroup& s) {
  ClassificationReport r;
  r.is_commutative = s.is_commutative();
  r.is_group = is_group(s);
  r.idempotents = idempotents(s);
  r.idempotents_central = idempotents_central(s);
  r.is_completely_regular = is_completely_regular(s);
  r.is_clifford = r.is_completely_regular && r.idempotents_central;
  r.nilpotency_degree = nilpotency_degree(s);
  r.ideal_of_idempotents = ideal_of_idempotents(s);

  r.cond1 = is_clifford_by_nilpotent_extension(s, r.ideal_of_idempotents);
  r.cond2 = is_clifford(s, r.ideal_of_idempotents);
  r.cond3 = r.idempotents_central && !find_group_condition_violation(s);
  try {
    build_embedding(s);
    r.cond4 = true;
  } catch (const EmbeddingError&) {
    r.cond4 = false;
  }
  if (r.is_commutative)
    r.dichotomy = r.cond1 ? Dichotomy::p : Dichotomy::np_complete;
  return r;
}

}  // namespace smpkit
