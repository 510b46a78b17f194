#include "commands.hpp"

#include <CLI11.hpp>

#include <sstream>

#include "scarftree/collapse.hpp"
#include "scarftree/error.hpp"
#include "scarftree/io.hpp"
#include "scarftree/resolution.hpp"
#include "scarftree/scarf_ideals.hpp"

namespace scarftree::cli {
namespace {

json facets_json(const SimplicialComplex& complex) { return io::complex_to_json(complex).at("facets"); }

json faces_json(const std::vector<Face>& faces) {
  json out = json::array();
  for (const Face& f : faces) out.push_back(io::face_to_json(f));
  return out;
}

json field_json(FieldSpec field) { return field.characteristic; }

std::vector<Vertex> split_list(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

json Report::to_json() const {
  return json{{"command", command}, {"inputs", inputs}, {"result", result}, {"diagnostics", diagnostics}};
}

FieldSpec parse_field(const std::string& text) {
  std::uint64_t p = 0;
  std::size_t used = 0;
  try {
    p = std::stoull(text, &used);
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidField, "field must be 0 or a prime, got '" + text + "'");
  }
  if (used != text.size()) throw Error(ErrorCode::InvalidField, "field must be 0 or a prime, got '" + text + "'");
  return p == 0 ? FieldSpec::rationals() : FieldSpec::prime(p);
}

Report cmd_check(const json& complex_doc) {
  const SimplicialComplex complex = io::complex_from_json(complex_doc);
  Report report{"check", io::complex_to_json(complex), json::object(), {}};
  const bool connected = is_connected(complex);
  const ForestCheck forest = is_forest(complex);
  const bool tree = connected && forest.is_forest;
  report.result["connected"] = connected;
  report.result["forest"] = forest.is_forest;
  report.result["tree"] = tree;
  report.result["components"] = connected_components(complex);
  report.result["witness"] = forest.witness ? faces_json(*forest.witness) : json(nullptr);
  report.result["f_vector"] = f_vector(complex);
  if (tree) {
    const CollapseSequence cert = tree_collapse_certificate(complex);
    const VerifyResult check = verify_sequence(complex, cert);
    report.result["certificate"] = json{{"steps", cert.steps.size()},
                                        {"terminal", facets_json(cert.terminal)},
                                        {"verified", check.ok}};
  } else {
    report.result["certificate"] = nullptr;
    if (!forest.is_forest) report.diagnostics.push_back("witness is a smallest subcollection without a leaf");
    if (!connected) report.diagnostics.push_back("complex is disconnected");
  }
  return report;
}

Report cmd_fvector(const json& complex_doc) {
  const SimplicialComplex complex = io::complex_from_json(complex_doc);
  Report report{"fvector", io::complex_to_json(complex), json::object(), {}};
  report.result["f_vector"] = f_vector(complex);
  return report;
}

Report cmd_supports(const json& complex_doc, const json& ideal_doc, FieldSpec field,
                    const std::vector<Vertex>& vertex_order, bool verify) {
  const SimplicialComplex complex = io::complex_from_json(complex_doc);
  const MonomialIdeal ideal = io::ideal_from_json(ideal_doc);
  if (ideal.size() != complex.vertex_count()) {
    throw Error(ErrorCode::ArityMismatch, std::to_string(ideal.size()) + " generators for " +
                                              std::to_string(complex.vertex_count()) + " vertices");
  }
  const std::vector<Vertex> order = vertex_order.empty() ? complex.vertices() : vertex_order;
  const LabeledComplex labeled = make_labeled(complex, ideal, order);
  const auto& vars = labeled.ideal.variables();

  Report report{"supports", json::object(), json::object(), {}};
  report.inputs["complex"] = io::complex_to_json(complex);
  report.inputs["ideal"] = io::ideal_to_json(ideal);
  report.inputs["labels"] = order;
  report.inputs["field"] = field_json(field);

  SupportCheck support;
  if (is_forest(complex).is_forest) {
    support = supports_resolution_tree(labeled);
    report.result["criterion"] = "connectivity";
    if (verify) {
      const SupportCheck general = supports_resolution(labeled, field);
      const bool agree = general.supports == support.supports && general.failing_degree == support.failing_degree;
      report.result["cross_check"] = agree;
      if (!agree) report.diagnostics.push_back("connectivity and acyclicity criteria disagree");
    }
  } else {
    support = supports_resolution(labeled, field);
    report.result["criterion"] = "acyclicity";
  }
  report.result["supports"] = support.supports;
  report.result["failing_degree"] =
      support.failing_degree ? json(format_monomial(*support.failing_degree, vars)) : json(nullptr);

  const MinimalityCheck minimal = is_minimal(labeled);
  report.result["minimal"] = minimal.minimal;
  if (minimal.violation) {
    report.result["minimality_violation"] =
        json{{"face", io::face_to_json(minimal.violation->first)}, {"subface", io::face_to_json(minimal.violation->second)}};
  }
  report.result["betti"] = betti_table(labeled.ideal, field).vector;
  report.result["f_vector"] = f_vector(complex);
  if (support.supports) {
    const BettiComparison cmp = compare_betti_f(labeled, field);
    report.result["betti_bounded"] = cmp.all_bounded;
    report.result["betti_equals_f"] = cmp.equal;
  }
  return report;
}

Report cmd_scarf(const json& ideal_doc, FieldSpec field) {
  const MonomialIdeal ideal = io::ideal_from_json(ideal_doc);
  Report report{"scarf", io::ideal_to_json(ideal), json::object(), {}};
  report.inputs["field"] = field_json(field);
  const LabeledComplex scarf = scarf_complex(ideal);
  const SupportCheck support = supports_resolution(scarf, field);
  report.result["facets"] = facets_json(scarf.complex);
  report.result["f_vector"] = f_vector(scarf.complex);
  report.result["supports"] = support.supports;
  report.result["failing_degree"] = support.failing_degree
                                        ? json(format_monomial(*support.failing_degree, ideal.variables()))
                                        : json(nullptr);
  report.result["minimal"] = is_minimal(scarf).minimal;
  report.result["betti"] = betti_table(ideal, field).vector;
  return report;
}

Report cmd_build_scarf(const json& complex_doc, const std::string& variant, std::uint64_t seed) {
  const SimplicialComplex complex = io::complex_from_json(complex_doc);
  Report report{"build-scarf", json::object(), json::object(), {}};
  report.inputs["complex"] = io::complex_to_json(complex);
  report.inputs["variant"] = variant;
  report.inputs["seed"] = seed;

  MonomialIdeal ideal;
  if (variant == "J") {
    ideal = build_J(complex);
  } else if (variant == "Jprime") {
    ideal = build_Jprime(complex);
  } else if (variant == "intermediate") {
    const auto h = sample_h(complex, seed);
    ideal = build_intermediate(complex, h);
    json hj = json::object();
    for (const auto& [v, m] : h) hj[v] = format_monomial(m, ideal.variables());
    report.result["h"] = hj;
  } else {
    throw Error(ErrorCode::ParseError, "unknown variant '" + variant + "' (expected J, Jprime or intermediate)");
  }
  const ScarfVerification check = verify_scarf(complex, ideal);
  const json ideal_json = io::ideal_to_json(ideal);
  report.result["variant"] = variant;
  report.result["variables"] = ideal_json.at("variables");
  report.result["generators"] = ideal_json.at("generators");
  report.result["verification"] = std::string(to_string(check.relation));
  report.result["scarf_facets"] = facets_json(check.scarf.complex);
  if (check.relation == ScarfRelation::Neither) {
    report.diagnostics.push_back("Scarf complex neither equals nor contains the input complex");
  }
  return report;
}

Report cmd_betti(const json& ideal_doc, FieldSpec field) {
  const MonomialIdeal ideal = io::ideal_from_json(ideal_doc);
  Report report{"betti", io::ideal_to_json(ideal), json::object(), {}};
  report.inputs["field"] = field_json(field);
  const BettiTable table = betti_table(ideal, field);
  json graded = json::array();
  for (const BettiEntry& e : table.by_degree) {
    graded.push_back(json{{"degree", format_monomial(e.degree, ideal.variables())}, {"ranks", e.ranks}});
  }
  report.result["betti"] = table.vector;
  report.result["graded"] = graded;
  return report;
}

Report cmd_collapse(const json& complex_doc, const std::optional<json>& certificate) {
  const SimplicialComplex complex = io::complex_from_json(complex_doc);
  Report report{"collapse", io::complex_to_json(complex), json::object(), {}};
  if (certificate) {
    const CollapseSequence seq = io::certificate_from_json(*certificate);
    const VerifyResult check = verify_sequence(complex, seq);
    report.result["valid"] = check.ok;
    report.result["failing_step"] = check.failing_step ? json(*check.failing_step) : json(nullptr);
    report.result["terminal_is_point"] = is_single_point(seq.terminal);
    if (!check.ok) report.diagnostics.push_back(check.reason);
    return report;
  }
  if (is_tree(complex)) {
    const CollapseSequence cert = tree_collapse_certificate(complex);
    report.result["method"] = "tree";
    report.result["collapsible"] = true;
    report.result["certificate"] = io::certificate_to_json(cert);
  } else {
    const GreedyCollapse greedy = greedy_collapse(complex);
    const bool point = is_single_point(greedy.residual);
    report.result["method"] = "greedy";
    report.result["collapsible"] = point ? json(true) : json(nullptr);
    report.result["certificate"] = io::certificate_to_json(greedy.sequence);
    if (!point) report.diagnostics.push_back("greedy collapsing got stuck; this does not show the complex is not collapsible");
  }
  return report;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simplicial trees, Scarf complexes and monomial resolutions"};
  app.require_subcommand(1);

  std::string complex_path, ideal_path, certificate_path, out_path, labels, variant = "J", field_text = "0";
  std::uint64_t seed = 0;
  bool verify = false;

  auto add_field = [&](CLI::App* sub) { sub->add_option("--field", field_text, "0 for Q, or a prime p"); };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", out_path, "also write the output JSON to FILE"); };

  auto* check = app.add_subcommand("check", "tree/forest/connectivity report with collapse certificate summary");
  check->add_option("complex", complex_path, "complex JSON file")->required();
  add_out(check);

  auto* fvector = app.add_subcommand("fvector", "face counts by dimension");
  fvector->add_option("complex", complex_path, "complex JSON file")->required();
  add_out(fvector);

  auto* supports = app.add_subcommand("supports", "does the labeled complex support a (minimal) free resolution");
  supports->add_option("complex", complex_path, "complex JSON file")->required();
  supports->add_option("ideal", ideal_path, "ideal JSON file")->required();
  supports->add_option("--labels", labels, "comma-separated vertex receiving each generator, in generator order");
  supports->add_flag("--verify", verify, "cross-check the tree criterion against the acyclicity criterion");
  add_field(supports);
  add_out(supports);

  auto* scarf = app.add_subcommand("scarf", "Scarf complex of an ideal");
  scarf->add_option("ideal", ideal_path, "ideal JSON file")->required();
  add_field(scarf);
  add_out(scarf);

  auto* build = app.add_subcommand("build-scarf", "Scarf ideal of a complex (J, Jprime or intermediate)");
  build->add_option("complex", complex_path, "complex JSON file")->required();
  build->add_option("--variant", variant, "J | Jprime | intermediate")
      ->check(CLI::IsMember({"J", "Jprime", "intermediate"}));
  build->add_option("--seed", seed, "seed for sampling h in the intermediate variant");
  add_out(build);

  auto* betti = app.add_subcommand("betti", "multigraded Betti numbers of S/I");
  betti->add_option("ideal", ideal_path, "ideal JSON file")->required();
  add_field(betti);
  add_out(betti);

  auto* collapse = app.add_subcommand("collapse", "produce or check a collapse certificate");
  collapse->add_option("complex", complex_path, "complex JSON file")->required();
  collapse->add_option("--certificate", certificate_path, "certificate JSON file to verify");
  add_out(collapse);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const FieldSpec field = parse_field(field_text);
    Report report;
    json written;  // what --out receives, when it differs from the report
    if (check->parsed()) {
      report = cmd_check(io::read_json_file(complex_path));
    } else if (fvector->parsed()) {
      report = cmd_fvector(io::read_json_file(complex_path));
    } else if (supports->parsed()) {
      report = cmd_supports(io::read_json_file(complex_path), io::read_json_file(ideal_path), field,
                            split_list(labels), verify);
    } else if (scarf->parsed()) {
      report = cmd_scarf(io::read_json_file(ideal_path), field);
    } else if (build->parsed()) {
      report = cmd_build_scarf(io::read_json_file(complex_path), variant, seed);
      written = report.result;
    } else if (betti->parsed()) {
      report = cmd_betti(io::read_json_file(ideal_path), field);
    } else if (collapse->parsed()) {
      std::optional<json> cert;
      if (!certificate_path.empty()) cert = io::read_json_file(certificate_path);
      report = cmd_collapse(io::read_json_file(complex_path), cert);
      if (!cert) written = report.result.at("certificate");
    }
    const json doc = report.to_json();
    out << doc.dump(2) << '\n';
    if (!out_path.empty()) io::write_json_file(out_path, written.is_null() ? doc : written);
    return 0;
  } catch (const Error& e) {
    err << json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}}.dump() << '\n';
    const bool operational = e.code() == ErrorCode::ParseError || e.code() == ErrorCode::IOError;
    return operational ? 2 : 1;
  }
}

}  // namespace scarftree::cli
