#pragma once

// JSON file formats.
//
//   complex:     {"facets": [["1","2"], ["2","3","4"]]}
//   ideal:       {"variables": ["x","y"], "generators": ["x*y^2", "y"]}
//   certificate: {"steps": [{"free": [...], "coface": [...]}, ...],
//                 "terminal": [[...], ...]}

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>

#include "scarftree/collapse.hpp"
#include "scarftree/complex.hpp"
#include "scarftree/monomial.hpp"

namespace scarftree::io {

using nlohmann::json;

// Throws IOError if unreadable, ParseError (byte position) if not JSON.
json read_json_file(const std::filesystem::path& path);
json parse_json(const std::string& text);
void write_json_file(const std::filesystem::path& path, const json& value);

// Rejects duplicate facets and repeated vertices inside a facet.
SimplicialComplex complex_from_json(const json& value);
json complex_to_json(const SimplicialComplex& complex);
json face_to_json(const Face& face);

MonomialIdeal ideal_from_json(const json& value);
json ideal_to_json(const MonomialIdeal& ideal);

CollapseSequence certificate_from_json(const json& value);
json certificate_to_json(const CollapseSequence& sequence);

}  // namespace scarftree::io
