#include "smpkit/t2_solver.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace smpkit {

BitVector BitVector::from_bits(const std::vector<std::uint8_t>& bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) v.set(i, bits[i] != 0);
  return v;
}

BitVector& BitVector::operator^=(const BitVector& o) {
  if (o.size_ != size_) throw InputError("GF(2) vector length mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

bool BitVector::none() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t BitVector::lowest() const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
  return size_;
}

Z2Result z2_membership(const std::vector<BitVector>& vectors, const BitVector& target,
                       bool allow_empty) {
  for (const auto& v : vectors)
    if (v.size() != target.size()) throw InputError("GF(2) vector length mismatch");

  struct Row {
    BitVector value;
    BitVector combo;
    std::size_t pivot;
  };
  std::vector<Row> basis;  // reduced so that no row has another row's pivot set
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    Row r{vectors[i], BitVector(vectors.size()), 0};
    r.combo.set(i, true);
    for (const Row& b : basis)
      if (r.value.get(b.pivot)) {
        r.value ^= b.value;
        r.combo ^= b.combo;
      }
    if (r.value.none()) continue;
    r.pivot = r.value.lowest();
    for (Row& b : basis)
      if (b.value.get(r.pivot)) {
        b.value ^= r.value;
        b.combo ^= r.combo;
      }
    basis.push_back(std::move(r));
  }

  BitVector rest = target;
  BitVector combo(vectors.size());
  for (const Row& b : basis)
    if (rest.get(b.pivot)) {
      rest ^= b.value;
      combo ^= b.combo;
    }
  Z2Result res;
  if (!rest.none()) return res;
  for (std::size_t i = 0; i < vectors.size(); ++i)
    if (combo.get(i)) res.combination.push_back(i);
  if (res.combination.empty() && !allow_empty) {
    if (vectors.empty()) return res;
    res.combination = {0, 0};
  }
  res.member = true;
  return res;
}

T2Result t2_smp(const SmpInstance& inst) {
  inst.validate();
  if (inst.sg().builtin_tag() != "T(2)")
    throw PreconditionError("the T(2) solver applies only to the builtin T(2)");
  const Semigroup& s = inst.sg();
  const auto& gens = inst.generators;
  T2Result result;
  if (gens.empty()) return result;

  std::vector<std::size_t> coords(inst.n);
  for (std::size_t i = 0; i < inst.n; ++i) coords[i] = i;
  Tup c = inst.target;
  // Word fragments appended after the recursive prefix, innermost last.
  std::vector<std::vector<std::size_t>> suffixes;

  auto finish = [&](std::vector<std::size_t> prefix) {
    result.member = true;
    for (auto it = suffixes.rbegin(); it != suffixes.rend(); ++it)
      prefix.insert(prefix.end(), it->begin(), it->end());
    result.witness = Witness{std::move(prefix)};
    return result;
  };

  while (true) {
    if (coords.empty()) return finish({0});

    // Drop generators constant somewhere c is not.
    std::vector<std::size_t> empty_cp, nonempty_cp;
    bool target_has_cp = false;
    for (std::size_t p : coords) target_has_cp |= t2::is_constant(c[p]);
    for (std::size_t g = 0; g < gens.size(); ++g) {
      bool ok = true, has_cp = false;
      for (std::size_t p : coords) {
        if (!t2::is_constant(gens[g][p])) continue;
        has_cp = true;
        if (!t2::is_constant(c[p])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      (has_cp ? nonempty_cp : empty_cp).push_back(g);
    }

    auto encode = [&](const Tup& t, const std::vector<std::size_t>& on) {
      BitVector v(on.size());
      for (std::size_t q = 0; q < on.size(); ++q) v.set(q, t[on[q]] == t2::kFlip);
      return v;
    };

    if (!target_has_cp) {
      std::vector<BitVector> vecs;
      for (std::size_t g : empty_cp) vecs.push_back(encode(gens[g], coords));
      const Z2Result z = z2_membership(vecs, encode(c, coords), false);
      if (!z.member) return result;
      std::vector<std::size_t> word;
      for (std::size_t q : z.combination) word.push_back(empty_cp[q]);
      return finish(std::move(word));
    }

    bool advanced = false;
    for (std::size_t i : nonempty_cp) {
      std::vector<std::size_t> cp, ncp;
      for (std::size_t p : coords) (t2::is_constant(gens[i][p]) ? cp : ncp).push_back(p);
      std::vector<BitVector> vecs;
      for (std::size_t g : empty_cp) vecs.push_back(encode(gens[g], cp));
      BitVector target(cp.size());
      for (std::size_t q = 0; q < cp.size(); ++q) target.set(q, gens[i][cp[q]] != c[cp[q]]);
      const Z2Result z = z2_membership(vecs, target, true);
      if (!z.member) continue;

      std::vector<std::size_t> suffix{i, i};
      for (std::size_t q : z.combination) {
        const std::size_t g = empty_cp[q];
        suffix.push_back(g);
        for (std::size_t p : ncp) c[p] = s.mul(c[p], gens[g][p]);
      }
      suffixes.push_back(std::move(suffix));
      coords = std::move(ncp);
      ++result.depth;
      if (result.depth > inst.n) throw std::logic_error("T(2) recursion deeper than n");
      advanced = true;
      break;
    }
    if (!advanced) return result;
  }
}

}  // namespace smpkit
