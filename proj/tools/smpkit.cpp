// Command-line driver. Every command prints one JSON document to stdout.
// Exit status: 0 decided (a non-member answer is still 0), 2 bad input or an
// inapplicable method, 1 anything else (oracle cap hit, internal failure).

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>

#include "smpkit/clifford_solver.hpp"
#include "smpkit/dispatch.hpp"
#include "smpkit/io.hpp"
#include "smpkit/random.hpp"
#include "smpkit/reductions.hpp"
#include "smpkit/t2_solver.hpp"

using namespace smpkit;

namespace {

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_classify(const std::string& ref) {
  SemigroupPtr s = load_semigroup(ref);
  json j = classification_to_json(*s, classify(*s));
  j["semigroup"] = ref;
  emit(j);
  return 0;
}

int cmd_solve(const std::string& path, const std::string& method, bool cross_check,
              bool witness) {
  const SmpInstance inst = read_instance_file(path);
  SolveOptions opts;
  if (method != "auto") {
    opts.method = parse_method(method);
    if (!opts.method) throw InputError("unknown method '" + method + "'");
  }
  if (cross_check) opts.cross_check = true;
  opts.want_witness = witness;
  const SolveReport rep = Solver(inst.semigroup).solve(inst, opts);
  json j = report_to_json(inst.sg(), rep);
  if (!witness) j.erase("witness");
  emit(j);
  return 0;
}

int cmd_oracle(const std::string& path, std::size_t cap) {
  const SmpInstance inst = read_instance_file(path);
  const OracleResult r = closure_oracle(inst, {cap, true});
  emit(oracle_to_json(r));
  return r.verdict == Verdict::cap_exceeded ? 1 : 0;
}

int cmd_reduce_kozen(const std::string& path) {
  const CompositionInstance c = parse_composition(read_json_file(path));
  const SmpInstance inst = encode_kozen_to_t3(c);
  emit({{"reduction", "kozen"},
        {"coordinates", inst.n},
        {"generator_count", inst.k()},
        {"instance", instance_to_json(inst, "builtin:T(3)")}});
  return 0;
}

int cmd_reduce_exact_cover(const std::string& path, const std::string& semigroup,
                           const std::string& e_tok, const std::string& a_tok) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  const ExactCoverInstance ec = parse_exact_cover(in);
  SemigroupPtr s = load_semigroup(semigroup);
  Elem e = 0, a = 0;
  if (e_tok.empty() != a_tok.empty()) throw InputError("--e and --a go together");
  if (e_tok.empty()) {
    const auto pair = find_np_witness_pair(*s);
    if (!pair)
      throw PreconditionError("semigroup has no idempotent e and a with ea = ae = a and <a> "
                              "not a group");
    std::tie(e, a) = *pair;
  } else {
    e = parse_element(*s, json(e_tok));
    a = parse_element(*s, json(a_tok));
  }
  const SmpInstance inst = encode_exact_cover(ec, s, e, a);
  emit({{"reduction", "exact-cover"},
        {"e", s->name(e)},
        {"a", s->name(a)},
        {"instance", instance_to_json(inst, semigroup)}});
  return 0;
}

int cmd_reduce_automata(const std::string& path) {
  const SmpInstance inst = read_instance_file(path);
  json automata = json::array();
  for (const Dfa& d : encode_t3_to_automata(inst)) automata.push_back(dfa_to_json(d));
  emit({{"reduction", "automata"}, {"min_length", 1}, {"automata", automata}});
  return 0;
}

int cmd_bench(const std::string& suite) {
  using Clock = std::chrono::steady_clock;
  json rows = json::array();
  auto time = [&](const char* name, std::size_t n, std::size_t k, auto&& run) {
    const auto start = Clock::now();
    const bool answer = run();
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    rows.push_back({{"solver", name}, {"n", n}, {"k", k}, {"answer", answer}, {"ms", ms}});
  };
  const bool all = suite == "all";
  if (!all && suite != "clifford" && suite != "t2")
    throw InputError("unknown bench suite '" + suite + "' (clifford, t2, all)");
  if (all || suite == "clifford") {
    const CliffordDecomposition dec(builtin("direct_product(semilattice_chain(2),cyclic_group(2))"));
    for (std::size_t n : {2500, 5000, 10000}) {
      const SmpInstance inst = perf_clifford_instance(n, 100, 1);
      time("clifford", n, 100, [&] { return clifford_smp(inst, dec); });
    }
  }
  if (all || suite == "t2") {
    for (std::size_t n : {250, 500, 1000}) {
      const SmpInstance inst = perf_t2_instance(n, 100, 1);
      time("t2", n, 100, [&] { return t2_smp(inst).member; });
    }
  }
  emit({{"suite", suite}, {"results", rows}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subpower membership for finite semigroups"};
  app.require_subcommand(1);

  std::string ref, path, method = "auto", suite, semigroup, e_tok, a_tok;
  bool cross_check = false, witness = false;
  std::size_t cap = 5'000'000;

  auto* classify_cmd = app.add_subcommand("classify", "Structural classification of a semigroup");
  classify_cmd->add_option("semigroup", ref, "file.sgp or builtin:NAME")->required();

  auto* solve_cmd = app.add_subcommand("solve", "Decide an SMP instance");
  solve_cmd->add_option("instance", path, "instance JSON")->required();
  solve_cmd->add_option("--method", method, "auto|oracle|group|clifford|nilpotent|commutative|t2")
      ->check(CLI::IsMember({"auto", "oracle", "group", "clifford", "nilpotent", "commutative", "t2"}));
  solve_cmd->add_flag("--cross-check", cross_check, "Also run the closure oracle and compare");
  solve_cmd->add_flag("--witness", witness, "Report a witness when one is available");

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force closure");
  oracle_cmd->add_option("instance", path, "instance JSON")->required();
  oracle_cmd->add_option("--cap", cap, "Maximum number of tuples to enumerate");

  auto* reduce_cmd = app.add_subcommand("reduce", "Hardness encoders");
  reduce_cmd->require_subcommand(1);
  auto* kozen_cmd = reduce_cmd->add_subcommand("kozen", "Composition problem to SMP over T(3)");
  kozen_cmd->add_option("composition", path, "composition JSON")->required();
  auto* ec_cmd = reduce_cmd->add_subcommand("exact-cover", "Exact Cover to SMP");
  ec_cmd->add_option("input", path, "exact cover text file")->required();
  ec_cmd->add_option("--semigroup", semigroup, "file.sgp or builtin:NAME")->required();
  ec_cmd->add_option("--e", e_tok, "Idempotent e (default: first valid pair)");
  ec_cmd->add_option("--a", a_tok, "Element a");
  auto* automata_cmd = reduce_cmd->add_subcommand("automata", "SMP over T(3) to DFA intersection");
  automata_cmd->add_option("instance", path, "instance JSON")->required();

  auto* bench_cmd = app.add_subcommand("bench", "Timing runs of the polynomial solvers");
  bench_cmd->add_option("suite", suite, "clifford | t2 | all")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*classify_cmd) return cmd_classify(ref);
    if (*solve_cmd) return cmd_solve(path, method, cross_check, witness);
    if (*oracle_cmd) return cmd_oracle(path, cap);
    if (*kozen_cmd) return cmd_reduce_kozen(path);
    if (*ec_cmd) return cmd_reduce_exact_cover(path, semigroup, e_tok, a_tok);
    if (*automata_cmd) return cmd_reduce_automata(path);
    if (*bench_cmd) return cmd_bench(suite);
  } catch (const InputError& e) {
    emit({{"error", "input"}, {"message", e.what()}});
    return 2;
  } catch (const PreconditionError& e) {
    emit({{"error", "precondition"}, {"message", e.what()}});
    return 2;
  } catch (const std::exception& e) {
    emit({{"error", "internal"}, {"message", e.what()}});
    return 1;
  }
  return 2;
}
