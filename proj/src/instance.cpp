#include "smpkit/instance.hpp"

#include <algorithm>
#include <memory>
#include <unordered_set>

namespace smpkit {

void SmpInstance::validate() const {
  if (!semigroup) throw InputError("instance has no semigroup");
  if (n == 0) throw InputError("tuple length n must be positive");
  const std::size_t m = semigroup->order();
  auto check = [&](const Tup& t, const std::string& what) {
    if (t.size() != n)
      throw InputError(what + " has length " + std::to_string(t.size()) +
                       ", expected " + std::to_string(n));
    for (Elem e : t)
      if (e >= m) throw InputError(what + " has an element out of range");
  };
  for (std::size_t i = 0; i < generators.size(); ++i)
    check(generators[i], "generator " + std::to_string(i + 1));
  check(target, "target");
}

Tup eval_word(const SmpInstance& inst, const Witness& w) {
  if (w.word.empty()) throw InputError("witness word is empty");
  for (std::size_t g : w.word)
    if (g >= inst.k())
      throw InputError("witness index " + std::to_string(g + 1) + " out of range [1," +
                       std::to_string(inst.k()) + "]");
  Tup acc = inst.generators[w.word.front()];
  for (std::size_t i = 1; i < w.word.size(); ++i)
    tup_mul_into(inst.sg(), acc, inst.generators[w.word[i]]);
  return acc;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::member:
      return "member";
    case Verdict::non_member:
      return "non-member";
    case Verdict::cap_exceeded:
      return "cap-exceeded";
  }
  return "?";
}

namespace {

// States live contiguously in a heap arena; the hash set stores state ids.
class TupleStore {
 public:
  explicit TupleStore(std::size_t n)
      : arena_(std::make_unique<Arena>(Arena{n, {}})),
        set_(64, Hash{arena_.get()}, Eq{arena_.get()}) {}

  // Returns (id, inserted).
  std::pair<std::uint32_t, bool> insert(const Elem* data) {
    const auto id = static_cast<std::uint32_t>(size());
    auto& v = arena_->data;
    v.insert(v.end(), data, data + arena_->n);
    auto [it, inserted] = set_.insert(id);
    if (!inserted) v.resize(v.size() - arena_->n);
    return {*it, inserted};
  }

  const Elem* at(std::uint32_t id) const { return arena_->at(id); }
  std::size_t size() const {
    return arena_->n == 0 ? 0 : arena_->data.size() / arena_->n;
  }

 private:
  struct Arena {
    std::size_t n;
    std::vector<Elem> data;
    const Elem* at(std::uint32_t id) const { return data.data() + std::size_t{id} * n; }
  };
  struct Hash {
    const Arena* arena;
    std::size_t operator()(std::uint32_t id) const {
      const Elem* p = arena->at(id);
      std::uint64_t h = 0xcbf29ce484222325ULL;
      for (std::size_t i = 0; i < arena->n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
      }
      return static_cast<std::size_t>(h ^ (h >> 29));
    }
  };
  struct Eq {
    const Arena* arena;
    bool operator()(std::uint32_t a, std::uint32_t b) const {
      const Elem* pa = arena->at(a);
      return std::equal(pa, pa + arena->n, arena->at(b));
    }
  };

  std::unique_ptr<Arena> arena_;
  std::unordered_set<std::uint32_t, Hash, Eq> set_;
};

struct Closure {
  TupleStore store;
  std::vector<std::uint32_t> parent;   // UINT32_MAX for generators
  std::vector<std::uint32_t> last_gen;
  std::optional<std::uint32_t> target_id;
  bool capped = false;
  bool complete = false;
};

constexpr std::uint32_t kRoot = 0xFFFFFFFFU;

Closure run_closure(const SmpInstance& inst, std::size_t cap, bool stop_on_target) {
  inst.validate();
  const Semigroup& s = inst.sg();
  const std::size_t n = inst.n;
  Closure c{TupleStore(n), {}, {}, std::nullopt, false, false};

  auto add = [&](const Elem* data, std::uint32_t parent, std::uint32_t gen) -> bool {
    auto [id, inserted] = c.store.insert(data);
    if (!inserted) return true;
    c.parent.push_back(parent);
    c.last_gen.push_back(gen);
    if (!c.target_id && std::equal(data, data + n, inst.target.begin())) {
      c.target_id = id;
      if (stop_on_target) return false;
    }
    if (c.store.size() > cap) {
      c.capped = true;
      return false;
    }
    return true;
  };

  for (std::size_t g = 0; g < inst.k(); ++g)
    if (!add(inst.generators[g].data(), kRoot, static_cast<std::uint32_t>(g))) return c;

  Tup scratch(n);
  for (std::uint32_t head = 0; head < c.store.size(); ++head) {
    for (std::size_t g = 0; g < inst.k(); ++g) {
      const Elem* src = c.store.at(head);
      const Tup& gen = inst.generators[g];
      for (std::size_t i = 0; i < n; ++i) scratch[i] = s.mul(src[i], gen[i]);
      if (!add(scratch.data(), head, static_cast<std::uint32_t>(g))) return c;
    }
  }
  c.complete = true;
  return c;
}

}  // namespace

OracleResult closure_oracle(const SmpInstance& inst, const OracleOptions& opts) {
  Closure c = run_closure(inst, opts.cap, opts.stop_on_target);
  OracleResult r;
  r.closure_size = c.store.size();
  r.fully_explored = c.complete;
  if (c.target_id) {
    r.verdict = Verdict::member;
    Witness w;
    for (std::uint32_t id = *c.target_id; id != kRoot; id = c.parent[id])
      w.word.push_back(c.last_gen[id]);
    std::reverse(w.word.begin(), w.word.end());
    r.witness = std::move(w);
  } else if (c.capped) {
    r.verdict = Verdict::cap_exceeded;
  } else {
    r.verdict = Verdict::non_member;
  }
  return r;
}

std::vector<Tup> enumerate_closure(const SmpInstance& inst, std::size_t cap) {
  Closure c = run_closure(inst, cap, false);
  if (c.capped) throw Error("closure exceeds cap of " + std::to_string(cap) + " states");
  std::vector<Tup> out;
  out.reserve(c.store.size());
  for (std::uint32_t id = 0; id < c.store.size(); ++id)
    out.emplace_back(c.store.at(id), c.store.at(id) + inst.n);
  return out;
}

std::vector<bool> generated_subsemigroup(const Semigroup& s, const std::vector<Elem>& gens) {
  std::vector<bool> in(s.order(), false);
  std::vector<Elem> queue;
  for (Elem g : gens)
    if (!in[g]) {
      in[g] = true;
      queue.push_back(g);
    }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Elem x = queue[head];
    for (Elem g : gens) {
      const Elem y = s.mul(x, g);
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  }
  return in;
}

}  // namespace smpkit
