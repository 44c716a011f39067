#pragma once

#include <filesystem>
#include <istream>
#include <string>

#include <json.hpp>

#include "smpkit/dispatch.hpp"
#include "smpkit/instance.hpp"
#include "smpkit/reductions.hpp"
#include "smpkit/structure.hpp"

namespace smpkit {

using json = nlohmann::json;

// Text table format:
//   semigroup m
//   m rows of m 1-based entries
//   names x1 ... xm        (optional)
// '#' starts a comment.
SemigroupPtr parse_sgp(std::istream& in);
SemigroupPtr read_sgp_file(const std::filesystem::path& path);

// "builtin:NAME" or a path to an .sgp file, relative paths resolved
// against base_dir.
SemigroupPtr load_semigroup(const std::string& ref, const std::filesystem::path& base_dir = {});

// Element written as a 1-based integer, a display name or a T(m) image word.
Elem parse_element(const Semigroup& s, const json& v);
Tup parse_tuple(const Semigroup& s, const json& v, std::size_t n);

// {semigroup, n, generators, target}
SmpInstance parse_instance(const json& j, const std::filesystem::path& base_dir = {});
SmpInstance read_instance_file(const std::filesystem::path& path);
json instance_to_json(const SmpInstance& inst, const std::string& semigroup_ref);

// {n, f, fs} with 1-based images.
CompositionInstance parse_composition(const json& j);
json composition_to_json(const CompositionInstance& c);

// Line 1 "n k", then k lines listing the 1-based members of each set.
ExactCoverInstance parse_exact_cover(std::istream& in);

json dfa_to_json(const Dfa& d);
Dfa dfa_from_json(const json& j);

json elem_set_to_json(const Semigroup& s, const ElemSet& set);
json classification_to_json(const Semigroup& s, const ClassificationReport& r);
json tuple_to_json(const Semigroup& s, const Tup& t);
// Words are reported 1-based.
json witness_to_json(const AnyWitness& w);
json report_to_json(const Semigroup& s, const SolveReport& r);
json oracle_to_json(const OracleResult& r);

json read_json_file(const std::filesystem::path& path);

}  // namespace smpkit
