#include "smpkit/semigroup.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace smpkit {

NotAssociativeError::NotAssociativeError(Elem x_, Elem y_, Elem z_)
    : InputError("table is not associative: (" + std::to_string(x_ + 1) + "," +
                 std::to_string(y_ + 1) + "," + std::to_string(z_ + 1) +
                 ") violates (xy)z = x(yz)"),
      x(x_),
      y(y_),
      z(z_) {}

Semigroup::Semigroup(std::size_t order, std::vector<Elem> table,
                     std::vector<std::string> names, std::string builtin_tag)
    : order_(order),
      table_(std::move(table)),
      names_(std::move(names)),
      builtin_(std::move(builtin_tag)) {
  if (order_ == 0) throw InputError("semigroup must have at least one element");
  if (order_ > 0xFFFF) throw InputError("semigroup order too large");
  if (table_.size() != order_ * order_)
    throw InputError("table has " + std::to_string(table_.size()) +
                     " entries, expected " + std::to_string(order_ * order_));
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] >= order_)
      throw InputError("table entry at row " + std::to_string(i / order_ + 1) +
                       ", column " + std::to_string(i % order_ + 1) +
                       " out of range");
  }
  for (std::size_t x = 0; x < order_; ++x) {
    for (std::size_t y = 0; y < order_; ++y) {
      const Elem xy = table_[x * order_ + y];
      const Elem* yrow = table_.data() + y * order_;
      const Elem* xyrow = table_.data() + static_cast<std::size_t>(xy) * order_;
      const Elem* xrow = table_.data() + x * order_;
      for (std::size_t z = 0; z < order_; ++z) {
        if (xyrow[z] != xrow[yrow[z]])
          throw NotAssociativeError(static_cast<Elem>(x), static_cast<Elem>(y),
                                    static_cast<Elem>(z));
      }
    }
  }

  if (names_.empty()) {
    for (std::size_t i = 0; i < order_; ++i) names_.push_back(std::to_string(i + 1));
  } else {
    if (names_.size() != order_)
      throw InputError("expected " + std::to_string(order_) + " names, got " +
                       std::to_string(names_.size()));
    custom_names_ = true;
    std::vector<std::string> sorted = names_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InputError("element names must be distinct");
  }

  idem_power_.resize(order_);
  in_group_.resize(order_);
  for (std::size_t x = 0; x < order_; ++x) {
    Elem p = static_cast<Elem>(x);
    while (!is_idempotent(p)) p = mul(p, static_cast<Elem>(x));
    idem_power_[x] = p;
    // x^2, ..., x^(order+1) covers a full index+period cycle.
    Elem q = static_cast<Elem>(x);
    bool found = false;
    for (std::size_t t = 2; t <= order_ + 1 && !found; ++t) {
      q = mul(q, static_cast<Elem>(x));
      found = q == x;
    }
    in_group_[x] = found;
  }
}

std::optional<Elem> Semigroup::find(std::string_view token) const {
  for (std::size_t i = 0; i < order_; ++i)
    if (names_[i] == token) return static_cast<Elem>(i);
  if (builtin_.size() > 2 && builtin_.rfind("T(", 0) == 0) {
    const int m = std::stoi(builtin_.substr(2));
    if (static_cast<int>(token.size()) == m) {
      std::vector<int> images;
      for (char c : token) {
        if (c < '1' || c > '0' + m) {
          images.clear();
          break;
        }
        images.push_back(c - '1');
      }
      if (static_cast<int>(images.size()) == m) return transformation_index(images);
    }
  }
  unsigned long v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec == std::errc() && ptr == token.data() + token.size() && v >= 1 &&
      v <= order_)
    return static_cast<Elem>(v - 1);
  return std::nullopt;
}

Elem Semigroup::power(Elem x, std::uint64_t p) const {
  if (p == 0) throw InputError("power exponent must be positive");
  Elem result = x;
  Elem base = x;
  --p;
  while (p > 0) {
    if (p & 1U) result = mul(result, base);
    base = mul(base, base);
    p >>= 1U;
  }
  return result;
}

bool Semigroup::is_commutative() const noexcept {
  for (std::size_t x = 0; x < order_; ++x)
    for (std::size_t y = x + 1; y < order_; ++y)
      if (table_[x * order_ + y] != table_[y * order_ + x]) return false;
  return true;
}

std::optional<Elem> Semigroup::identity() const noexcept {
  for (std::size_t e = 0; e < order_; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < order_ && ok; ++x)
      ok = table_[e * order_ + x] == x && table_[x * order_ + e] == x;
    if (ok) return static_cast<Elem>(e);
  }
  return std::nullopt;
}

SemigroupPtr make_semigroup(const std::vector<std::vector<int>>& table,
                            std::vector<std::string> names) {
  const std::size_t m = table.size();
  std::vector<Elem> flat;
  flat.reserve(m * m);
  for (std::size_t r = 0; r < m; ++r) {
    if (table[r].size() != m)
      throw InputError("row " + std::to_string(r + 1) + " has " +
                       std::to_string(table[r].size()) + " entries, expected " +
                       std::to_string(m));
    for (int v : table[r]) {
      if (v < 1 || static_cast<std::size_t>(v) > m)
        throw InputError("table entry " + std::to_string(v) + " in row " +
                         std::to_string(r + 1) + " out of range [1," +
                         std::to_string(m) + "]");
      flat.push_back(static_cast<Elem>(v - 1));
    }
  }
  return std::make_shared<const Semigroup>(m, std::move(flat), std::move(names));
}

Elem transformation_index(std::span<const int> images) {
  const int m = static_cast<int>(images.size());
  std::size_t idx = 0;
  for (int img : images) idx = idx * m + static_cast<std::size_t>(img);
  return static_cast<Elem>(idx);
}

std::vector<int> transformation_images(Elem x, int m) {
  std::vector<int> images(m);
  std::size_t v = x;
  for (int i = m - 1; i >= 0; --i) {
    images[i] = static_cast<int>(v % m);
    v /= m;
  }
  return images;
}

namespace {

std::string image_word(std::span<const int> images) {
  std::string w;
  for (int i : images) w.push_back(static_cast<char>('1' + i));
  return w;
}

SemigroupPtr full_transformation(int m) {
  if (m < 1 || m > 4) throw InputError("T(m) requires 1 <= m <= 4");
  std::size_t order = 1;
  for (int i = 0; i < m; ++i) order *= m;
  std::vector<std::vector<int>> maps(order);
  for (std::size_t x = 0; x < order; ++x)
    maps[x] = transformation_images(static_cast<Elem>(x), m);
  std::vector<Elem> table(order * order);
  std::vector<int> comp(m);
  // Maps act on the right: x^(gh) = (x^g)^h.
  for (std::size_t g = 0; g < order; ++g)
    for (std::size_t h = 0; h < order; ++h) {
      for (int i = 0; i < m; ++i) comp[i] = maps[h][maps[g][i]];
      table[g * order + h] = transformation_index(comp);
    }
  std::vector<std::string> names;
  for (std::size_t x = 0; x < order; ++x) names.push_back(image_word(maps[x]));
  if (m == 2) names = {"ZERO", "ID", "FLIP", "ONE"};
  return std::make_shared<const Semigroup>(order, std::move(table), std::move(names),
                                           "T(" + std::to_string(m) + ")");
}

SemigroupPtr symmetric_group(int q) {
  if (q < 1 || q > 4) throw InputError("symmetric_group(q) requires 1 <= q <= 4");
  std::vector<int> perm(q);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> perms;
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  const std::size_t order = perms.size();
  std::vector<Elem> table(order * order);
  std::vector<int> comp(q);
  for (std::size_t g = 0; g < order; ++g)
    for (std::size_t h = 0; h < order; ++h) {
      for (int i = 0; i < q; ++i) comp[i] = perms[h][perms[g][i]];
      table[g * order + h] = static_cast<Elem>(
          std::find(perms.begin(), perms.end(), comp) - perms.begin());
    }
  std::vector<std::string> names;
  for (auto& p : perms) names.push_back(image_word(p));
  return std::make_shared<const Semigroup>(order, std::move(table), std::move(names),
                                           "symmetric_group(" + std::to_string(q) + ")");
}

constexpr int kMaxParam = 64;

void check_param(std::string_view what, int q) {
  if (q < 1 || q > kMaxParam)
    throw InputError(std::string(what) + " parameter must be in [1," +
                     std::to_string(kMaxParam) + "]");
}

SemigroupPtr null_semigroup(int q) {
  check_param("null", q);
  std::vector<Elem> table(static_cast<std::size_t>(q) * q, 0);
  std::vector<std::string> names{"0"};
  for (int i = 1; i < q; ++i)
    names.push_back(q <= 27 ? std::string(1, static_cast<char>('a' + i - 1))
                            : "a" + std::to_string(i));
  return std::make_shared<const Semigroup>(q, std::move(table), std::move(names),
                                           "null(" + std::to_string(q) + ")");
}

SemigroupPtr cyclic_group(int q) {
  check_param("cyclic_group", q);
  std::vector<Elem> table(static_cast<std::size_t>(q) * q);
  std::vector<std::string> names;
  for (int x = 0; x < q; ++x) {
    names.push_back(std::to_string(x));
    for (int y = 0; y < q; ++y) table[x * q + y] = static_cast<Elem>((x + y) % q);
  }
  return std::make_shared<const Semigroup>(q, std::move(table), std::move(names),
                                           "cyclic_group(" + std::to_string(q) + ")");
}

SemigroupPtr semilattice_chain(int q) {
  check_param("semilattice_chain", q);
  std::vector<Elem> table(static_cast<std::size_t>(q) * q);
  std::vector<std::string> names;
  for (int x = 0; x < q; ++x) {
    names.push_back(std::to_string(x));
    for (int y = 0; y < q; ++y) table[x * q + y] = static_cast<Elem>(std::min(x, y));
  }
  return std::make_shared<const Semigroup>(q, std::move(table), std::move(names),
                                           "semilattice_chain(" + std::to_string(q) + ")");
}

SemigroupPtr z2_1() {
  // Elements (0, a, 1): the 2-element null semigroup with an identity adjoined.
  std::vector<Elem> table{0, 0, 0,  //
                          0, 0, 1,  //
                          0, 1, 2};
  return std::make_shared<const Semigroup>(3, std::move(table),
                                           std::vector<std::string>{"0", "a", "1"},
                                           "Z2_1");
}

SemigroupPtr direct_product(const Semigroup& a, const Semigroup& b) {
  const std::size_t order = a.order() * b.order();
  if (order > 512) throw InputError("direct_product order exceeds 512");
  std::vector<Elem> table(order * order);
  std::vector<std::string> names(order);
  for (std::size_t x1 = 0; x1 < a.order(); ++x1)
    for (std::size_t x2 = 0; x2 < b.order(); ++x2) {
      const std::size_t x = x1 * b.order() + x2;
      names[x] = "(" + a.name(static_cast<Elem>(x1)) + "," +
                 b.name(static_cast<Elem>(x2)) + ")";
      for (std::size_t y1 = 0; y1 < a.order(); ++y1)
        for (std::size_t y2 = 0; y2 < b.order(); ++y2) {
          const std::size_t y = y1 * b.order() + y2;
          table[x * order + y] = static_cast<Elem>(
              a.mul(static_cast<Elem>(x1), static_cast<Elem>(y1)) * b.order() +
              b.mul(static_cast<Elem>(x2), static_cast<Elem>(y2)));
        }
    }
  return std::make_shared<const Semigroup>(
      order, std::move(table), std::move(names),
      "direct_product(" + a.builtin_tag() + "," + b.builtin_tag() + ")");
}

class BuiltinParser {
 public:
  explicit BuiltinParser(std::string_view text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
  }

  SemigroupPtr parse_all() {
    auto s = parse();
    if (pos_ != text_.size()) fail("trailing characters");
    return s;
  }

 private:
  SemigroupPtr parse() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    const std::string ident = text_.substr(start, pos_ - start);
    if (ident == "Z2_1") return z2_1();
    if (ident == "direct_product") {
      expect('(');
      auto a = parse();
      expect(',');
      auto b = parse();
      expect(')');
      return direct_product(*a, *b);
    }
    expect('(');
    const int q = parse_int();
    expect(')');
    if (ident == "T") return full_transformation(q);
    if (ident == "null") return null_semigroup(q);
    if (ident == "cyclic_group") return cyclic_group(q);
    if (ident == "semilattice_chain") return semilattice_chain(q);
    if (ident == "symmetric_group") return symmetric_group(q);
    fail("unknown builtin '" + ident + "'");
  }

  int parse_int() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_) fail("expected an integer parameter");
    if (pos_ - start > 6) fail("parameter out of range");
    return std::stoi(text_.substr(start, pos_ - start));
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("bad builtin name '" + text_ + "': " + what + " at offset " +
                     std::to_string(pos_));
  }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

SemigroupPtr builtin(std::string_view name) { return BuiltinParser(name).parse_all(); }

Tup tup_mul(const Semigroup& s, const Tup& u, const Tup& v) {
  Tup r = u;
  tup_mul_into(s, r, v);
  return r;
}

void tup_mul_into(const Semigroup& s, Tup& u, const Tup& v) {
  if (u.size() != v.size())
    throw InputError("tuple length mismatch: " + std::to_string(u.size()) + " vs " +
                     std::to_string(v.size()));
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = s.mul(u[i], v[i]);
}

Tup tup_power(const Semigroup& s, const Tup& u, std::uint64_t p) {
  Tup r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = s.power(u[i], p);
  return r;
}

Tup tup_idempotent_power(const Semigroup& s, const Tup& u) {
  Tup r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = s.idempotent_power(u[i]);
  return r;
}

std::string format_tup(const Semigroup& s, const Tup& t) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) os << ',';
    os << s.name(t[i]);
  }
  os << ')';
  return os.str();
}

}  // namespace smpkit
