#include "smpkit/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace smpkit {

namespace {

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

std::ifstream open_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return in;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t positive(const json& v, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 1)
    throw InputError(std::string(what) + " must be a positive integer");
  return v.get<std::size_t>();
}

std::vector<int> parse_map(const json& v, std::size_t n, const char* what) {
  if (!v.is_array() || v.size() != n)
    throw InputError(std::string(what) + " must list " + std::to_string(n) + " images");
  std::vector<int> g;
  for (const auto& x : v) {
    if (!x.is_number_integer()) throw InputError(std::string(what) + " images must be integers");
    const long long i = x.get<long long>();
    if (i < 1 || i > static_cast<long long>(n))
      throw InputError(std::string(what) + " maps outside [n]");
    g.push_back(static_cast<int>(i - 1));
  }
  return g;
}

}  // namespace

SemigroupPtr parse_sgp(std::istream& in) {
  std::vector<std::string> tokens;
  std::vector<std::string> names;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(strip_comment(line));
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "names") {
      while (ls >> tok) names.push_back(tok);
      continue;
    }
    tokens.push_back(tok);
    while (ls >> tok) tokens.push_back(tok);
  }
  if (tokens.size() < 2 || tokens[0] != "semigroup")
    throw InputError("expected 'semigroup m' header");
  std::size_t m = 0;
  try {
    m = std::stoul(tokens[1]);
  } catch (const std::exception&) {
    throw InputError("bad order '" + tokens[1] + "'");
  }
  if (m == 0) throw InputError("semigroup order must be positive");
  if (tokens.size() != 2 + m * m)
    throw InputError("expected " + std::to_string(m * m) + " table entries, found " +
                     std::to_string(tokens.size() - 2));
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (std::size_t i = 0; i < m * m; ++i) {
    try {
      std::size_t used = 0;
      table[i / m][i % m] = std::stoi(tokens[2 + i], &used);
      if (used != tokens[2 + i].size()) throw InputError("");
    } catch (const std::exception&) {
      throw InputError("bad table entry '" + tokens[2 + i] + "'");
    }
  }
  if (!names.empty() && names.size() != m)
    throw InputError("names line lists " + std::to_string(names.size()) + " names, expected " +
                     std::to_string(m));
  return make_semigroup(table, std::move(names));
}

SemigroupPtr read_sgp_file(const std::filesystem::path& path) {
  auto in = open_file(path);
  return parse_sgp(in);
}

SemigroupPtr load_semigroup(const std::string& ref, const std::filesystem::path& base_dir) {
  constexpr std::string_view prefix = "builtin:";
  if (ref.rfind(prefix, 0) == 0) return builtin(std::string_view(ref).substr(prefix.size()));
  std::filesystem::path p(ref);
  if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
  return read_sgp_file(p);
}

Elem parse_element(const Semigroup& s, const json& v) {
  if (v.is_number_integer()) {
    const long long i = v.get<long long>();
    if (i < 1 || i > static_cast<long long>(s.order()))
      throw InputError("element index " + std::to_string(i) + " out of range 1.." +
                       std::to_string(s.order()));
    return static_cast<Elem>(i - 1);
  }
  if (v.is_string()) {
    if (auto e = s.find(v.get<std::string>())) return *e;
    throw InputError("unknown element '" + v.get<std::string>() + "'");
  }
  throw InputError("element must be an integer or a string");
}

Tup parse_tuple(const Semigroup& s, const json& v, std::size_t n) {
  if (!v.is_array()) throw InputError("tuple must be an array");
  if (v.size() != n)
    throw InputError("tuple has length " + std::to_string(v.size()) + ", expected " +
                     std::to_string(n));
  Tup t;
  for (const auto& x : v) t.push_back(parse_element(s, x));
  return t;
}

SmpInstance parse_instance(const json& j, const std::filesystem::path& base_dir) {
  const json& sref = field(j, "semigroup");
  if (!sref.is_string()) throw InputError("'semigroup' must be a string");
  SmpInstance inst;
  inst.semigroup = load_semigroup(sref.get<std::string>(), base_dir);
  inst.n = positive(field(j, "n"), "n");
  const json& gens = field(j, "generators");
  if (!gens.is_array()) throw InputError("'generators' must be an array");
  for (const auto& g : gens) inst.generators.push_back(parse_tuple(inst.sg(), g, inst.n));
  inst.target = parse_tuple(inst.sg(), field(j, "target"), inst.n);
  inst.validate();
  return inst;
}

SmpInstance read_instance_file(const std::filesystem::path& path) {
  return parse_instance(read_json_file(path), path.parent_path());
}

json instance_to_json(const SmpInstance& inst, const std::string& semigroup_ref) {
  json gens = json::array();
  for (const Tup& g : inst.generators) gens.push_back(tuple_to_json(inst.sg(), g));
  return {{"semigroup", semigroup_ref},
          {"n", inst.n},
          {"generators", gens},
          {"target", tuple_to_json(inst.sg(), inst.target)}};
}

CompositionInstance parse_composition(const json& j) {
  CompositionInstance c;
  c.n = positive(field(j, "n"), "n");
  c.f = parse_map(field(j, "f"), c.n, "f");
  if (j.contains("fs")) {
    if (!j.at("fs").is_array()) throw InputError("'fs' must be an array");
    for (const auto& g : j.at("fs")) c.fs.push_back(parse_map(g, c.n, "f_i"));
  }
  return c;
}

json composition_to_json(const CompositionInstance& c) {
  auto one_based = [](const std::vector<int>& g) {
    json a = json::array();
    for (int x : g) a.push_back(x + 1);
    return a;
  };
  json fs = json::array();
  for (const auto& g : c.fs) fs.push_back(one_based(g));
  return {{"n", c.n}, {"f", one_based(c.f)}, {"fs", fs}};
}

ExactCoverInstance parse_exact_cover(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    line = strip_comment(line);
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      // Blank lines are allowed only before the header; after it they are
      // empty sets.
      if (lines.empty()) continue;
    }
    lines.push_back(line);
  }
  if (lines.empty()) throw InputError("exact cover input is empty");
  std::istringstream head(lines[0]);
  long long n = 0, k = 0;
  std::string extra;
  if (!(head >> n >> k) || (head >> extra) || n < 1 || k < 0)
    throw InputError("expected header 'n k'");
  // Trailing blank lines beyond k are ignored.
  while (lines.size() > static_cast<std::size_t>(k) + 1 &&
         lines.back().find_first_not_of(" \t\r") == std::string::npos)
    lines.pop_back();
  if (lines.size() != static_cast<std::size_t>(k) + 1)
    throw InputError("expected " + std::to_string(k) + " set lines, found " +
                     std::to_string(lines.size() - 1));
  ExactCoverInstance ec;
  ec.n = static_cast<std::size_t>(n);
  for (std::size_t j = 1; j < lines.size(); ++j) {
    std::istringstream ls(lines[j]);
    std::vector<std::size_t> set;
    std::string tok;
    while (ls >> tok) {
      long long x = 0;
      try {
        std::size_t used = 0;
        x = std::stoll(tok, &used);
        if (used != tok.size()) throw InputError("");
      } catch (const std::exception&) {
        throw InputError("bad set element '" + tok + "'");
      }
      if (x < 1 || x > n) throw InputError("set element " + tok + " outside [n]");
      set.push_back(static_cast<std::size_t>(x - 1));
    }
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    ec.sets.push_back(std::move(set));
  }
  return ec;
}

json dfa_to_json(const Dfa& d) {
  json accepting = json::array();
  json transitions = json::object();
  for (std::size_t q = 0; q < d.states.size(); ++q) {
    if (d.accepting[q]) accepting.push_back(d.states[q]);
    json row = json::object();
    for (std::size_t a = 0; a < d.alphabet.size(); ++a) row[d.alphabet[a]] = d.states[d.delta[q][a]];
    transitions[d.states[q]] = row;
  }
  return {{"states", d.states},
          {"alphabet", d.alphabet},
          {"initial", d.states[d.initial]},
          {"accepting", accepting},
          {"transitions", transitions}};
}

Dfa dfa_from_json(const json& j) {
  Dfa d;
  auto strings = [](const json& v, const char* what) {
    if (!v.is_array()) throw InputError(std::string(what) + " must be an array");
    std::vector<std::string> out;
    for (const auto& x : v) {
      if (!x.is_string()) throw InputError(std::string(what) + " entries must be strings");
      out.push_back(x.get<std::string>());
    }
    return out;
  };
  d.states = strings(field(j, "states"), "states");
  d.alphabet = strings(field(j, "alphabet"), "alphabet");
  auto state_index = [&](const std::string& name) {
    const auto it = std::find(d.states.begin(), d.states.end(), name);
    if (it == d.states.end()) throw InputError("unknown state '" + name + "'");
    return static_cast<std::size_t>(it - d.states.begin());
  };
  const json& init = field(j, "initial");
  if (!init.is_string()) throw InputError("'initial' must be a state name");
  d.initial = state_index(init.get<std::string>());
  d.accepting.assign(d.states.size(), false);
  for (const auto& q : strings(field(j, "accepting"), "accepting")) d.accepting[state_index(q)] = true;
  const json& tr = field(j, "transitions");
  d.delta.assign(d.states.size(), std::vector<std::size_t>(d.alphabet.size()));
  for (std::size_t q = 0; q < d.states.size(); ++q) {
    if (!tr.contains(d.states[q])) throw InputError("no transitions for state '" + d.states[q] + "'");
    const json& row = tr.at(d.states[q]);
    for (std::size_t a = 0; a < d.alphabet.size(); ++a) {
      if (!row.contains(d.alphabet[a]) || !row.at(d.alphabet[a]).is_string())
        throw InputError("transition function is not total at state '" + d.states[q] + "'");
      d.delta[q][a] = state_index(row.at(d.alphabet[a]).get<std::string>());
    }
  }
  d.validate();
  return d;
}

json elem_set_to_json(const Semigroup& s, const ElemSet& set) {
  json a = json::array();
  for (Elem x : set) a.push_back(s.name(x));
  return a;
}

json classification_to_json(const Semigroup& s, const ClassificationReport& r) {
  return {{"order", s.order()},
          {"is_commutative", r.is_commutative},
          {"is_group", r.is_group},
          {"idempotents", elem_set_to_json(s, r.idempotents)},
          {"idempotents_central", r.idempotents_central},
          {"is_completely_regular", r.is_completely_regular},
          {"is_clifford", r.is_clifford},
          {"nilpotency_degree", r.nilpotency_degree ? json(*r.nilpotency_degree) : json(nullptr)},
          {"ideal_of_idempotents", elem_set_to_json(s, r.ideal_of_idempotents)},
          {"cond1", r.cond1},
          {"cond2", r.cond2},
          {"cond3", r.cond3},
          {"cond4", r.cond4},
          {"dichotomy", to_string(r.dichotomy)}};
}

json tuple_to_json(const Semigroup& s, const Tup& t) {
  json a = json::array();
  for (Elem x : t) a.push_back(s.name(x));
  return a;
}

json witness_to_json(const AnyWitness& w) {
  if (const auto* word = std::get_if<Witness>(&w)) {
    json a = json::array();
    for (std::size_t g : word->word) a.push_back(g + 1);
    return {{"kind", "word"}, {"word", a}};
  }
  if (const auto* e = std::get_if<ExponentWitness>(&w))
    return {{"kind", "exponents"}, {"exponents", e->exponents}, {"r", e->r}};
  return nullptr;
}

json report_to_json(const Semigroup& s, const SolveReport& r) {
  json timings = json::object();
  for (const auto& t : r.timings) timings[t.phase] = t.milliseconds;
  json j{{"answer", r.answer},
         {"method", to_string(r.method)},
         {"witness", witness_to_json(r.witness)},
         {"classification", classification_to_json(s, r.classification)},
         {"timings_ms", timings},
         {"cross_checked", r.cross_checked}};
  if (r.oracle_verdict) j["oracle_verdict"] = to_string(*r.oracle_verdict);
  return j;
}

json oracle_to_json(const OracleResult& r) {
  json j{{"verdict", to_string(r.verdict)},
         {"answer", r.verdict == Verdict::cap_exceeded ? json(nullptr) : json(r.member())},
         {"closure_size", r.closure_size},
         {"fully_explored", r.fully_explored}};
  if (r.witness) j["witness"] = witness_to_json(AnyWitness{*r.witness});
  return j;
}

json read_json_file(const std::filesystem::path& path) {
  auto in = open_file(path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

}  // namespace smpkit
