#include "scarftree/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "scarftree/error.hpp"

namespace scarftree::io {
namespace {

[[noreturn]] void structure_error(const std::string& where, const std::string& what) {
  throw ParseError(what + " (at " + where + ")", 0);
}

std::vector<Vertex> names_from_json(const json& value, const std::string& where) {
  if (!value.is_array()) structure_error(where, "expected an array of vertex names");
  std::vector<Vertex> names;
  std::set<Vertex> seen;
  for (std::size_t i = 0; i < value.size(); ++i) {
    const std::string here = where + "[" + std::to_string(i) + "]";
    if (!value[i].is_string()) structure_error(here, "vertex names must be strings");
    const std::string name = value[i].get<std::string>();
    if (name.empty()) structure_error(here, "vertex names must be nonempty");
    if (!seen.insert(name).second) structure_error(here, "duplicate vertex '" + name + "'");
    names.push_back(name);
  }
  return names;
}

std::vector<Face> faces_from_json(const json& value, const std::string& where) {
  if (!value.is_array()) structure_error(where, "expected an array of faces");
  std::vector<Face> out;
  std::set<Face> seen;
  for (std::size_t i = 0; i < value.size(); ++i) {
    const std::string here = where + "[" + std::to_string(i) + "]";
    Face f(names_from_json(value[i], here));
    if (!seen.insert(f).second) structure_error(here, "duplicate facet " + f.to_string());
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IOError, "cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

void write_json_file(const std::filesystem::path& path, const json& value) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IOError, "cannot write '" + path.string() + "'");
  out << value.dump(2) << '\n';
  if (!out) throw Error(ErrorCode::IOError, "failed writing '" + path.string() + "'");
}

SimplicialComplex complex_from_json(const json& value) {
  if (!value.is_object() || !value.contains("facets")) structure_error("$", "expected an object with \"facets\"");
  return new_complex(faces_from_json(value.at("facets"), "facets"));
}

json face_to_json(const Face& face) { return json(face.vertices()); }

json complex_to_json(const SimplicialComplex& complex) {
  json facets = json::array();
  for (const Face& f : complex.facets()) facets.push_back(face_to_json(f));
  return json{{"facets", facets}};
}

MonomialIdeal ideal_from_json(const json& value) {
  if (!value.is_object() || !value.contains("generators")) {
    structure_error("$", "expected an object with \"generators\"");
  }
  const json& gens = value.at("generators");
  if (!gens.is_array()) structure_error("generators", "expected an array of monomials");
  std::vector<Monomial> generators;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string here = "generators[" + std::to_string(i) + "]";
    if (!gens[i].is_string()) structure_error(here, "monomials must be strings");
    try {
      generators.push_back(parse_monomial(gens[i].get<std::string>()));
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()) + " (in " + here + ")", e.position());
    }
  }
  if (!value.contains("variables")) return MonomialIdeal(std::move(generators));
  const json& vars = value.at("variables");
  if (!vars.is_array()) structure_error("variables", "expected an array of names");
  std::vector<std::string> variables;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!vars[i].is_string()) structure_error("variables[" + std::to_string(i) + "]", "names must be strings");
    variables.push_back(vars[i].get<std::string>());
  }
  return MonomialIdeal(std::move(variables), std::move(generators));
}

json ideal_to_json(const MonomialIdeal& ideal) {
  json gens = json::array();
  for (const Monomial& g : ideal.generators()) gens.push_back(format_monomial(g, ideal.variables()));
  return json{{"variables", ideal.variables()}, {"generators", gens}};
}

CollapseSequence certificate_from_json(const json& value) {
  if (!value.is_object() || !value.contains("steps") || !value.contains("terminal")) {
    structure_error("$", "expected an object with \"steps\" and \"terminal\"");
  }
  const json& steps = value.at("steps");
  if (!steps.is_array()) structure_error("steps", "expected an array");
  CollapseSequence out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::string here = "steps[" + std::to_string(i) + "]";
    if (!steps[i].is_object() || !steps[i].contains("free") || !steps[i].contains("coface")) {
      structure_error(here, "expected {\"free\": [...], \"coface\": [...]}");
    }
    out.steps.push_back({Face(names_from_json(steps[i].at("free"), here + ".free")),
                         Face(names_from_json(steps[i].at("coface"), here + ".coface"))});
  }
  const std::vector<Face> terminal = faces_from_json(value.at("terminal"), "terminal");
  if (!terminal.empty()) out.terminal = new_complex(terminal);
  return out;
}

json certificate_to_json(const CollapseSequence& sequence) {
  json steps = json::array();
  for (const CollapseStep& s : sequence.steps) {
    steps.push_back(json{{"free", face_to_json(s.free_face)}, {"coface", face_to_json(s.coface)}});
  }
  return json{{"steps", steps}, {"terminal", complex_to_json(sequence.terminal).at("facets")}};
}

}  // namespace scarftree::io
