// munnlab - representation types of Munn algebras and Rees matrix semigroups
//
// Problem descriptions for the command-line tool. A problem is one Rees
// matrix semigroup (group + sandwich), a union of them (parts), or a raw
// triple set, together with the characteristic policy.
//
// Sandwich entries are strings: "0" is the zero of G^0, "#i" is the group
// element with index i, anything else is an element label ("e" for the
// identity of every built-in group).

#ifndef MUNNLAB_TOOLS_PROBLEM_SPEC_HPP_
#define MUNNLAB_TOOLS_PROBLEM_SPEC_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "munnlab/group.hpp"
#include "munnlab/munn.hpp"

namespace munnlab::cli {

  enum class CharMode { Explicit, Auto, Split };

  struct FieldSpec {
    CharMode                     mode = CharMode::Auto;
    std::optional<std::uint64_t> characteristic;  // Explicit only
  };

  struct GroupSpec {
    std::optional<std::string>            builtin;
    std::vector<std::vector<std::size_t>> table;
    std::vector<std::string>              labels;
  };

  struct PartSpec {
    GroupSpec group;
    //! Empty for a bare group, which only `decompose` accepts.
    std::vector<std::vector<std::string>> sandwich;
  };

  struct ProblemSpec {
    FieldSpec             field;
    std::vector<PartSpec> parts;  // one part: a single Rees semigroup
    bool                  is_union = false;
    std::optional<std::vector<Triple>> raw_triples;
  };

  //! Raises InvalidInput with the offending key on malformed input.
  ProblemSpec parse_json(nlohmann::json const& doc);
  ProblemSpec parse_toml(std::string const& text);
  //! Dispatches on the extension: ".toml" or ".json".
  ProblemSpec load_problem(std::string const& path);

  //! Canonical form: fixed key order, defaults written out.
  nlohmann::json to_json(ProblemSpec const& spec);

  //! "(1,1,1),(2,1,0)" with optional braces and whitespace.
  std::vector<Triple> parse_triple_list(std::string const& text);

  FiniteGroup   build_group(GroupSpec const& spec);
  ReesSemigroup build_semigroup(PartSpec const& part);

  std::string to_string(CharMode mode);

}  // namespace munnlab::cli

#endif  // MUNNLAB_TOOLS_PROBLEM_SPEC_HPP_
