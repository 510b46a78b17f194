#pragma once

// Command implementations behind the scarftree executable. Each command takes
// already-parsed JSON documents and returns a Report; file handling and
// argument parsing live in run().

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "scarftree/complex.hpp"
#include "scarftree/homology.hpp"

namespace scarftree::cli {

using nlohmann::json;

struct Report {
  std::string command;
  json inputs;
  json result;
  std::vector<std::string> diagnostics;

  // Keys come out sorted, so dumps are deterministic.
  json to_json() const;
};

Report cmd_check(const json& complex);
Report cmd_fvector(const json& complex);
// `vertex_order` lists the vertex labeled by each generator; empty means the
// complex's own vertex order.
Report cmd_supports(const json& complex, const json& ideal, FieldSpec field,
                    const std::vector<Vertex>& vertex_order, bool verify);
Report cmd_scarf(const json& ideal, FieldSpec field);
Report cmd_build_scarf(const json& complex, const std::string& variant, std::uint64_t seed);
Report cmd_betti(const json& ideal, FieldSpec field);
// With a certificate, checks it; otherwise produces one.
Report cmd_collapse(const json& complex, const std::optional<json>& certificate);

FieldSpec parse_field(const std::string& text);

// Full command line entry point. Returns the process exit code: 0 when the
// command computed a result, 1 for a rejected input, 2 for usage, parse or
// I/O problems.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace scarftree::cli
