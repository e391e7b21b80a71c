#pragma once

// JSON and text serialisation shared by the CLI and the Python module.
//
// Space files look like {"points": ["a", "b"], "opens": [[0], [0, 1]]}. The
// open family may be any generating family; loading closes it.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "topolab/classify.hpp"
#include "topolab/fintop.hpp"
#include "topolab/lattice.hpp"
#include "topolab/symdual.hpp"

namespace topolab::io {

using Json = nlohmann::ordered_json;

struct LoadedSpace {
  FinSpace space;
  std::vector<std::string> labels;
  std::vector<PointSet> added;  // opens produced by the closure that the file did not list
  bool closure_added() const { return !added.empty(); }
};

// Throws ParseError on malformed JSON or a wrong shape, InvalidGenerator on an
// index outside the point list, InvalidSet on repeated labels, TooLarge past
// the point cap.
LoadedSpace parse_space(std::string_view text);
LoadedSpace load_space(const std::string& path);

// Labels default to the point indices.
Json space_to_json(const FinSpace& x, const std::vector<std::string>& labels = {});
std::string space_to_line(const FinSpace& x);  // compact single-line JSON

Json labelled_set(PointSet s, const std::vector<std::string>& labels);

// Separation flags, δX, Cantor–Bendixson data, the α-topology delta and d(X).
Json classification_report(const FinSpace& x, const std::vector<std::string>& labels = {});

Json lattice_to_json(const FiniteLattice& l);

Json symset_to_json(const SymSet& s);
// Throws ParseError on a wrong shape and InvalidSet on bad residues.
SymSet symset_from_json(const Json& j);

}  // namespace topolab::io
