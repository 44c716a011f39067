#include "smpkit/group_solver.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "smpkit/structure.hpp"

namespace smpkit {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSaturated / b ? kSaturated : a * b;
}

}  // namespace

WordProgram::Id WordProgram::leaf(std::size_t generator) {
  nodes_.push_back({Kind::leaf, 0, 0, generator, 1});
  return static_cast<Id>(nodes_.size() - 1);
}

WordProgram::Id WordProgram::concat(Id a, Id b) {
  nodes_.push_back({Kind::concat, a, b, 0, sat_add(length(a), length(b))});
  return static_cast<Id>(nodes_.size() - 1);
}

WordProgram::Id WordProgram::power(Id a, std::uint64_t exponent) {
  if (exponent == 1) return a;
  nodes_.push_back({Kind::power, a, 0, exponent, sat_mul(length(a), exponent)});
  return static_cast<Id>(nodes_.size() - 1);
}

std::optional<std::vector<std::size_t>> WordProgram::expand(Id id,
                                                           std::uint64_t max_length) const {
  if (length(id) > max_length) return std::nullopt;
  std::vector<std::size_t> out;
  out.reserve(length(id));
  // (node, remaining repetitions)
  std::vector<std::pair<Id, std::uint64_t>> stack{{id, 1}};
  while (!stack.empty()) {
    auto& [node_id, reps] = stack.back();
    if (reps == 0) {
      stack.pop_back();
      continue;
    }
    --reps;
    const Node& node = nodes_[node_id];
    switch (node.kind) {
      case Kind::leaf:
        out.push_back(node.exponent);
        break;
      case Kind::concat: {
        const Id a = node.a, b = node.b;
        stack.emplace_back(b, 1);
        stack.emplace_back(a, 1);
        break;
      }
      case Kind::power:
        stack.emplace_back(node.a, node.exponent);
        break;
    }
  }
  return out;
}

StabilizerChain::StabilizerChain(const Semigroup& s, std::vector<Elem> identity_at,
                                 const std::vector<Tup>& generators, bool track_words)
    : s_(&s),
      identity_at_(std::move(identity_at)),
      track_words_(track_words),
      generator_count_(generators.size()) {
  const std::size_t m = s.order();
  inverse_.assign(m, 0);
  elem_order_.assign(m, 0);
  std::vector<bool> is_group_elem(m, false);
  for (std::size_t x = 0; x < m; ++x) {
    const Elem xe = static_cast<Elem>(x);
    if (!s.generates_group(xe)) continue;
    is_group_elem[x] = true;
    const Elem e = s.idempotent_power(xe);
    Elem p = xe;
    std::uint32_t ord = 1;
    while (p != e) {
      p = s.mul(p, xe);
      ++ord;
    }
    elem_order_[x] = ord;
    inverse_[x] = ord == 1 ? e : s.power(xe, ord - 1);
  }

  std::vector<bool> seen_identity(m, false);
  for (Elem e : identity_at_) {
    if (e >= m || !s.is_idempotent(e))
      throw PreconditionError("coordinate identity is not an idempotent");
    if (seen_identity[e]) continue;
    seen_identity[e] = true;
    std::vector<Elem> group;
    for (std::size_t x = 0; x < m; ++x)
      if (is_group_elem[x] && s.idempotent_power(static_cast<Elem>(x)) == e)
        group.push_back(static_cast<Elem>(x));
    for (Elem x : group)
      for (Elem y : group)
        if (s.mul(x, y) != s.mul(y, x)) abelian_ = false;
  }

  const std::size_t width = identity_at_.size();
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const Tup& t = generators[g];
    if (t.size() != width) throw InputError("generator length mismatch");
    for (std::size_t c = 0; c < width; ++c)
      if (t[c] >= m || !is_group_elem[t[c]] || s.idempotent_power(t[c]) != identity_at_[c])
        throw PreconditionError("generator " + std::to_string(g + 1) + " coordinate " +
                                std::to_string(c + 1) + " is outside its group");
  }
  level_of_coord_.assign(width, -1);
  if (!generators.empty()) first_generator_order_ = tuple_order(generators.front());

  std::vector<std::uint32_t> used;
  for (std::size_t g = 0; g < generators.size(); ++g) {
    Tup x = generators[g];
    used.clear();
    const SiftResult r = sift(x, track_words_ ? &used : nullptr);
    if (r.reached_identity) continue;
    // x = g u_1^-1 ... u_r^-1, so x^-1 = u_r ... u_1 g^(ord g - 1).
    WordProgram::Id w = 0, inv = 0;
    bool ok = false;
    if (track_words_) {
      const std::uint64_t ord = tuple_order(generators[g]);
      ok = ord > 1;
      w = words_.leaf(g);
      inv = ok ? words_.power(w, ord - 1) : w;
      for (std::uint32_t u : used) {
        ok = ok && reps_[u].has_words;
        w = words_.concat(w, reps_[u].inverse_word);
        inv = words_.concat(reps_[u].word, inv);
      }
    }
    install(std::move(x), r.coordinate, w, inv, ok);
    saturate();
  }
}

std::uint64_t StabilizerChain::tuple_order(const Tup& t) const {
  std::uint64_t ord = 1;
  std::vector<bool> seen(s_->order() + 1, false);
  for (Elem x : t) {
    const std::uint32_t o = elem_order_[x];
    if (seen[o]) continue;
    seen[o] = true;
    const std::uint64_t g = std::gcd(ord, std::uint64_t{o});
    if (ord / g > (std::uint64_t{1} << 62) / o) return 0;
    ord = ord / g * o;
  }
  return ord;
}

StabilizerChain::SiftResult StabilizerChain::sift(Tup& x,
                                                   std::vector<std::uint32_t>* used) const {
  const std::size_t width = x.size();
  std::size_t c = 0;
  while (true) {
    while (c < width && x[c] == identity_at_[c]) ++c;
    if (c == width) return {true, width};
    const std::int32_t lv = level_of_coord_[c];
    const std::int32_t r = lv >= 0 ? levels_[lv].rep_for_value[x[c]] : -1;
    if (r < 0) return {false, c};
    const Tup& inv = reps_[r].inverse;
    for (std::size_t j = c; j < width; ++j) x[j] = s_->mul(x[j], inv[j]);
    if (used) used->push_back(static_cast<std::uint32_t>(r));
    ++c;
  }
}

void StabilizerChain::install(Tup x, std::size_t coordinate, WordProgram::Id word,
                              WordProgram::Id inverse_word, bool has_words) {
  std::int32_t lv = level_of_coord_[coordinate];
  if (lv < 0) {
    lv = static_cast<std::int32_t>(levels_.size());
    level_of_coord_[coordinate] = lv;
    levels_.push_back({coordinate, std::vector<std::int32_t>(s_->order(), -1), {}});
  }
  const auto id = static_cast<std::uint32_t>(reps_.size());
  Representative rep;
  rep.inverse.resize(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) rep.inverse[j] = inverse_[x[j]];
  rep.order = track_words_ ? tuple_order(x) : 0;
  rep.coordinate = coordinate;
  rep.word = word;
  rep.inverse_word = inverse_word;
  rep.has_words = track_words_ && has_words;
  rep.value = std::move(x);
  levels_[lv].rep_for_value[rep.value[coordinate]] = static_cast<std::int32_t>(id);
  reps_.push_back(std::move(rep));

  // Products (deeper rep) * (shallower rep) always sift: the shallower one
  // divides itself out. Same-level products must be checked; across levels
  // only shallower * deeper, and only when conjugation is nontrivial.
  for (std::uint32_t other : levels_[lv].reps) {
    pending_.emplace_back(id, other);
    pending_.emplace_back(other, id);
  }
  pending_.emplace_back(id, id);
  levels_[lv].reps.push_back(id);
  if (!abelian_) {
    for (std::uint32_t other = 0; other < id; ++other) {
      if (reps_[other].coordinate > coordinate) pending_.emplace_back(id, other);
      if (reps_[other].coordinate < coordinate) pending_.emplace_back(other, id);
    }
  }
}

void StabilizerChain::saturate() {
  std::vector<std::uint32_t> used;
  while (!pending_.empty()) {
    // FIFO keeps the dependency depth between words, and so their length, low.
    const auto [p, q] = pending_.front();
    pending_.pop_front();
    const Representative& rp = reps_[p];
    const Representative& rq = reps_[q];
    // Both are the identity below min(coordinate); start there.
    const std::size_t start = std::min(rp.coordinate, rq.coordinate);
    Tup x(rp.value.size());
    for (std::size_t j = 0; j < start; ++j) x[j] = identity_at_[j];
    for (std::size_t j = start; j < x.size(); ++j) x[j] = s_->mul(rp.value[j], rq.value[j]);
    used.clear();
    const SiftResult r = sift(x, track_words_ ? &used : nullptr);
    if (r.reached_identity) continue;
    WordProgram::Id w = 0, inv = 0;
    bool ok = false;
    if (track_words_) {
      ok = reps_[p].has_words && reps_[q].has_words;
      w = words_.concat(reps_[p].word, reps_[q].word);
      inv = words_.concat(reps_[q].inverse_word, reps_[p].inverse_word);
      for (std::uint32_t u : used) {
        ok = ok && reps_[u].has_words;
        w = words_.concat(w, reps_[u].inverse_word);
        inv = words_.concat(reps_[u].word, inv);
      }
    }
    install(std::move(x), r.coordinate, w, inv, ok);
  }
}

bool StabilizerChain::contains(const Tup& t) const {
  if (generator_count_ == 0) return false;
  if (t.size() != width()) throw InputError("target length mismatch");
  Tup x = t;
  return sift(x, nullptr).reached_identity;
}

std::optional<Witness> StabilizerChain::witness_for(const Tup& t,
                                                    std::uint64_t max_length) const {
  if (!track_words_) throw Error("stabilizer chain was built without words");
  if (generator_count_ == 0) return std::nullopt;
  Tup x = t;
  std::vector<std::uint32_t> used;
  if (!sift(x, &used).reached_identity) return std::nullopt;
  for (std::uint32_t u : used)
    if (!reps_[u].has_words) return std::nullopt;
  std::vector<std::size_t> word;
  if (used.empty()) {
    // Identity tuple: a_1^ord(a_1).
    if (first_generator_order_ == 0 || first_generator_order_ > max_length) return std::nullopt;
    word.assign(first_generator_order_, 0);
    return Witness{std::move(word)};
  }
  // t = r_L ... r_1 r_0 for the representatives divided out in order r_0, r_1, ...
  std::uint64_t total = 0;
  for (std::uint32_t u : used) total = sat_add(total, words_.length(reps_[u].word));
  if (total > max_length) return std::nullopt;
  for (auto it = used.rbegin(); it != used.rend(); ++it) {
    auto part = words_.expand(reps_[*it].word, max_length);
    if (!part) return std::nullopt;
    word.insert(word.end(), part->begin(), part->end());
  }
  return Witness{std::move(word)};
}

GroupSmpResult group_smp(const Semigroup& s, std::vector<Elem> identity_at,
                         const std::vector<Tup>& generators, const Tup& target,
                         bool want_witness) {
  StabilizerChain chain(s, std::move(identity_at), generators, want_witness);
  GroupSmpResult r;
  r.representatives = chain.representatives().size();
  r.member = chain.contains(target);
  if (r.member && want_witness) r.witness = chain.witness_for(target);
  return r;
}

GroupSmpResult group_smp(const SmpInstance& inst, bool want_witness) {
  inst.validate();
  const Semigroup& s = inst.sg();
  if (!is_group(s)) throw PreconditionError("group solver requires a group");
  const Elem one = *s.identity();
  return group_smp(s, std::vector<Elem>(inst.n, one), inst.generators, inst.target,
                   want_witness);
}

}  // namespace smpkit
