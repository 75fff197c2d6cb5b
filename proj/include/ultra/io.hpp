#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ultra/constructions.hpp"
#include "ultra/core.hpp"
#include "ultra/greedoid.hpp"
#include "ultra/greedy.hpp"

namespace ultra::io {

/// Malformed input: bad JSON, wrong shapes, unparseable rationals, bad
/// tree lines.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An instance file. `full` is set when the file carries "selfdist".
struct Instance {
  UltraTriple triple;
  std::optional<FullUltraTriple> full;
};

std::string read_text(const std::filesystem::path& path);

/// {"points": [...], "weights": [...], "distances": [[...], ...],
///  "selfdist": [...]?} with rationals as strings. Row i of "distances"
/// has i entries. The ultrametric inequality is not checked here.
Instance parse_instance(std::string_view text);
Instance read_instance(const std::filesystem::path& path);

nlohmann::json to_json(const UltraTriple& triple);
nlohmann::json to_json(const FullUltraTriple& triple);

/// {"ground": n, "sets": [[indices], ...]}
SetSystem parse_set_system(std::string_view text);
nlohmann::json to_json(const SetSystem& system);

/// {"points": [labels], "increments": [...], "prefix_perimeters": [...]}
nlohmann::json to_json(const GreedyTrace& trace, const UltraTriple& triple);

/// One edge "u v weight" per line, a "root r" line and an optional
/// "leaves a,b,c" line. Vertices are named by arbitrary tokens and indexed
/// in order of first appearance. '#' starts a comment.
WeightedTree parse_tree(std::string_view text);

Rational parse_rational(const nlohmann::json& value);

}  // namespace ultra::io
