#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json_convert.hpp"
#include "monoflow/enumerate.hpp"
#include "monoflow/errors.hpp"
#include "monoflow/flow.hpp"
#include "monoflow/graph.hpp"
#include "monoflow/index.hpp"
#include "monoflow/io.hpp"
#include "monoflow/orientation.hpp"
#include "monoflow/planar.hpp"
#include "monoflow/suites.hpp"

namespace monoflow::cli {

SearchBudget CommandConfig::budget() const {
  SearchBudget b;
  b.max_p = max_p;
  b.node_limit = node_limit;
  b.time_limit_seconds = time_limit;
  return b;
}

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw PreconditionError(message);
}

SignedGraph load_graph(const std::string& path) { return parse_signed_graph(read_text_file(path)); }

std::string verdict_word(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found:
      return "found";
    case SearchStatus::NotFound:
      return "none";
    case SearchStatus::Unknown:
      return "unknown";
  }
  return "?";
}

int status_exit(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found:
      return kSuccess;
    case SearchStatus::NotFound:
      return kNegative;
    case SearchStatus::Unknown:
      return kBudget;
  }
  return kUsage;
}

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + std::to_string(xs[i]);
  return out;
}

std::string format_tight_cut(const TightCutReport& t) {
  std::ostringstream out;
  out << "# tight cut\n";
  out << "x " << join(t.cut.vertices()) << '\n';
  out << "counts " << t.s1 << ' ' << t.s2 << ' ' << t.t1 << ' ' << t.t2 << '\n';
  out << "index " << to_string(t.implied_r) << '\n';
  return out.str();
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// ---- index ----------------------------------------------------------------------

int cmd_index(const CommandConfig& c, std::ostream& out) {
  const SignedGraph g = load_graph(c.graph_path);
  const IndexResult r = circular_flow_index(g, c.budget());
  if (!c.witness_out.empty() && r.pq_witness) write_text_file(c.witness_out, format_flow_file(*r.pq_witness));
  if (!c.certificate_out.empty() && r.certificate) write_text_file(c.certificate_out, format_tight_cut(*r.certificate));
  if (c.json) {
    json j = index_result_to_json(r);
    j["command"] = "index";
    emit(out, j);
  } else if (r.kind == IndexKind::Finite) {
    out << to_string(r.value) << '\n';
  } else if (r.kind == IndexKind::Infeasible) {
    out << "infeasible: " << r.note << '\n';
  } else {
    out << "unknown: " << r.note;
    if (r.has_upper_bound) out << " (upper bound " << to_string(r.value) << ")";
    out << '\n';
  }
  switch (r.kind) {
    case IndexKind::Finite:
      return kSuccess;
    case IndexKind::Infeasible:
      return kNegative;
    case IndexKind::Unknown:
      return kBudget;
  }
  return kUsage;
}

// ---- verify-flow -------------------------------------------------------------------

int cmd_verify_flow(const CommandConfig& c, std::ostream& out) {
  const SignedGraph g = load_graph(c.graph_path);
  const FlowWitness w = parse_flow_file(read_text_file(c.flow_path), g);
  const FlowVerdict v = verify_flow(g, w.orientation, w.flow);
  if (c.json) {
    emit(out, json{{"command", "verify-flow"},
                   {"valid", v.ok},
                   {"edge", v.edge},
                   {"vertex", v.vertex},
                   {"reason", v.reason},
                   {"flow", flow_witness_to_json(w)}});
  } else if (v.ok) {
    out << "valid " << w.flow.kind.name() << " flow, index " << to_string(w.flow.kind.index()) << '\n';
  } else {
    out << "invalid: " << v.reason << '\n';
  }
  return v.ok ? kSuccess : kNegative;
}

// ---- orient --------------------------------------------------------------------------

int cmd_orient(const CommandConfig& c, std::ostream& out) {
  const SignedGraph g = load_graph(c.graph_path);
  if (c.ell) {
    const ModOrientationSearch s = find_mod_orientation(g, *c.ell, c.budget());
    CertificateFile file;
    if (s.certificate) {
      file = to_certificate_file(*s.certificate);
      if (c.partition) file.parts = to_certificate_file(orientation_to_partition(*s.certificate)).parts;
    }
    if (c.json) {
      json j{{"command", "orient"}, {"status", verdict_word(s.status)}, {"ell", *c.ell}};
      if (s.certificate) {
        j["orientation"] = s.certificate->orientation;
        j["signature_used"] = s.certificate->signature_used;
        j["certificate"] = format_certificate_file(file);
      }
      emit(out, j);
    } else if (s.certificate) {
      out << format_certificate_file(file);
    } else {
      out << verdict_word(s.status) << '\n';
    }
    return status_exit(s.status);
  }

  CertificateFile file = parse_certificate_file(read_text_file(c.beta_path));
  require(!file.modulus || *file.modulus == *c.modulus,
          "boundary file uses modulus " + std::to_string(file.modulus.value_or(0)) + ", --modulus is " +
              std::to_string(*c.modulus));
  file.modulus = *c.modulus;
  const BoundaryFunction beta = certificate_boundary(file, g);
  const BetaOrientationSearch s =
      find_beta_orientation(g, beta, certificate_partial_orientation(file, g), c.budget());
  CertificateFile result = to_certificate_file(beta);
  if (s.orientation) result.arcs = to_certificate_file(*s.orientation).arcs;
  if (c.json) {
    json j{{"command", "orient"}, {"status", verdict_word(s.status)}, {"modulus", *c.modulus}};
    if (s.orientation) j["orientation"] = *s.orientation;
    emit(out, j);
  } else if (s.orientation) {
    out << format_certificate_file(result);
  } else {
    out << verdict_word(s.status) << '\n';
  }
  return status_exit(s.status);
}

// ---- convert-eulerian ------------------------------------------------------------------

int cmd_convert_eulerian(const CommandConfig& c, std::ostream& out) {
  const SignedGraph g = load_graph(c.graph_path);
  const EulerianCertificate cert = certificate_eulerian(parse_certificate_file(read_text_file(c.cert_path)), g);
  const EulerianForm target = parse_eulerian_form(c.to_form);
  if (!verify_eulerian_certificate(cert, g)) {
    if (c.json) {
      emit(out, json{{"command", "convert-eulerian"}, {"valid", false}});
    } else {
      out << "invalid: the " << to_string(cert.form) << " certificate does not verify\n";
    }
    return kNegative;
  }
  const EulerianCertificate converted = convert_eulerian_certificate(cert, target, g);
  const bool ok = verify_eulerian_certificate(converted, g);
  const std::string text = format_certificate_file(to_certificate_file(converted));
  if (c.json) {
    emit(out, json{{"command", "convert-eulerian"}, {"valid", true}, {"verified", ok}, {"certificate", text}});
  } else {
    out << text;
  }
  return ok ? kSuccess : kNegative;
}

// ---- transfer ----------------------------------------------------------------------------

int cmd_transfer(const CommandConfig& c, std::ostream& out) {
  const SignedGraph g = load_graph(c.graph_path);
  const int p = *c.p;
  const int q = *c.q;
  const std::string text = read_text_file(c.cert_path);
  if (c.from == "flow") {
    const FlowWitness w = parse_flow_file(text, g);
    const TransferOrientation t = flow_to_orientation(g, p, q, w);
    CertificateFile file = to_certificate_file(t.beta);
    file.arcs = to_certificate_file(t.orientation).arcs;
    if (c.json) {
      emit(out, json{{"command", "transfer"},
                     {"from", "flow"},
                     {"multigraph", t.multigraph.graph},
                     {"orientation", t.orientation},
                     {"beta", t.beta.residues()},
                     {"modulus", t.beta.modulus()}});
    } else {
      out << "# " << 2 * p - 2 * q << " copies per edge; copy j of edge i has id i*" << 2 * p - 2 * q << "+j\n";
      out << format_certificate_file(file);
    }
    return kSuccess;
  }
  const MultipliedGraph mg = multiply_edges(g.with_all_signs(Sign::Positive), 2 * p - 2 * q);
  const Orientation multi = certificate_orientation(parse_certificate_file(text), mg.graph);
  const FlowWitness f = orientation_to_flow(g, p, q, multi);
  if (c.json) {
    emit(out, json{{"command", "transfer"}, {"from", "orientation"}, {"flow", flow_witness_to_json(f)}});
  } else {
    out << format_flow_file(f);
  }
  return kSuccess;
}

// ---- planar ----------------------------------------------------------------------------------

std::string plane_text(const PlaneGraph& pg) {
  return "# graph\n" + format_signed_graph(pg.graph) + "# embedding\n" + format_embedding(pg.embedding);
}

void write_plane_outputs(const CommandConfig& c, const PlaneGraph& pg) {
  if (!c.graph_out.empty()) write_text_file(c.graph_out, format_signed_graph(pg.graph));
  if (!c.embedding_out.empty()) write_text_file(c.embedding_out, format_embedding(pg.embedding));
}

int cmd_dual(const CommandConfig& c, std::ostream& out) {
  const SignedGraph g = load_graph(c.graph_path);
  const PlaneEmbedding emb = parse_embedding(read_text_file(c.embedding_path));
  const PlaneGraph d = dual(g, emb);
  write_plane_outputs(c, d);
  std::optional<DualityReport> report;
  if (c.check) report = check_duality(g, emb, c.budget());
  if (c.json) {
    json j{{"command", "dual"}, {"graph", d.graph}, {"embedding", d.embedding}};
    if (report) {
      j["flow_index"] = index_result_to_json(report->flow_index);
      j["chromatic"] = index_result_to_json(report->chromatic);
      j["equal"] = report->equal ? json(*report->equal) : json(nullptr);
    }
    emit(out, j);
  } else {
    out << plane_text(d);
    if (report) {
      auto text = [](const IndexResult& r) {
        return r.kind == IndexKind::Finite ? to_string(r.value) : to_string(r.kind);
      };
      out << "# flow index " << text(report->flow_index) << ", dual circular chromatic number "
          << text(report->chromatic) << ", "
          << (report->equal ? (*report->equal ? "equal" : "NOT equal") : "undecided") << '\n';
    }
  }
  if (!report) return kSuccess;
  if (!report->equal) return kBudget;
  return *report->equal ? kSuccess : kNegative;
}

int cmd_hom(const CommandConfig& c, std::ostream& out) {
  const SignedGraph g = load_graph(c.graph_path);
  const HomomorphismSearch h = hom_to_negative_cycle(g, *c.k, c.negated, c.budget());
  std::optional<HomPartition> part;
  if (h.mapping && (c.negated || *c.k % 2 == 0)) part = partition_from_homomorphism(g, *h.mapping);
  const std::string target = std::string(c.negated ? "-" : "") + "C_-" + std::to_string(*c.k);
  if (c.json) {
    json j{{"command", "hom"}, {"status", verdict_word(h.status)}, {"target", target}};
    if (h.mapping) j["mapping"] = *h.mapping;
    if (part) {
      j["parts"] = part->parts;
      j["orientation"] = part->orientation;
    }
    emit(out, j);
  } else if (h.mapping) {
    out << "homomorphism to " << target << '\n';
    for (int v = 0; v < g.vertex_count(); ++v) {
      out << "v " << v << " -> " << h.mapping->vertex_image[v] << (h.mapping->switching_set[v] ? " switched" : "")
          << '\n';
    }
    for (int e = 0; e < g.edge_count(); ++e) out << "e " << e << " -> " << h.mapping->edge_image[e] << '\n';
    if (part) {
      for (std::size_t i = 0; i < part->parts.size(); ++i) out << "part " << i << ' ' << join(part->parts[i]) << '\n';
    }
  } else {
    out << verdict_word(h.status) << '\n';
  }
  return status_exit(h.status);
}

int cmd_fold(const CommandConfig& c, std::ostream& out) {
  const SignedGraph g = load_graph(c.graph_path);
  const PlaneEmbedding emb = parse_embedding(read_text_file(c.embedding_path));
  std::vector<FoldStep> steps;
  PlaneGraph result{g, emb};
  if (c.saturate) {
    result = fold_to_saturation(g, emb, &steps);
  } else {
    std::optional<int> face = c.face;
    if (!face) {
      const std::optional<int> girth = negative_girth(g);
      require(girth.has_value(), "the graph is balanced; there is nothing to fold");
      for (int f = 0; f < emb.face_count() && !face; ++f) {
        if (!is_negative_face_of_length(g, emb.faces[f], *girth)) face = f;
      }
    }
    if (face) {
      steps.push_back(fold_once(g, emb, *face));
      result = steps.back().result;
    }
  }
  write_plane_outputs(c, result);
  if (c.json) {
    json j{{"command", "fold"}, {"graph", result.graph}, {"embedding", result.embedding}, {"steps", json::array()}};
    for (const FoldStep& s : steps) {
      j["steps"].push_back(json{{"face", s.face},
                                {"identified_from", s.identified_from},
                                {"identified_to", s.identified_to},
                                {"switched", s.switched},
                                {"merged_edges", s.merged_edges}});
    }
    emit(out, j);
  } else {
    if (steps.empty()) out << "# already saturated\n";
    for (const FoldStep& s : steps) {
      out << "# fold face " << s.face << ": vertex " << s.identified_from << " into " << s.identified_to
          << (s.switched ? ", switched" : "");
      if (!s.merged_edges.empty()) out << ", merged edges " << join(s.merged_edges);
      out << '\n';
    }
    out << plane_text(result);
  }
  return kSuccess;
}

// ---- classes ------------------------------------------------------------------------------

int cmd_classes(const CommandConfig& c, std::ostream& out) {
  const SignedGraph g = load_graph(c.graph_path);
  const int components = component_count(g);
  const std::uint64_t classes = count_inversing_classes(g);
  const std::vector<int> t = negative_cut_vertices(g);
  const std::optional<int> girth = negative_girth(g);
  if (c.json) {
    emit(out, json{{"command", "classes"},
                   {"vertices", g.vertex_count()},
                   {"components", components},
                   {"inversing_classes", classes},
                   {"odd_negative_degree", t},
                   {"balanced", !girth.has_value()},
                   {"negative_girth", girth ? json(*girth) : json(nullptr)}});
  } else {
    out << "vertices " << g.vertex_count() << ", components " << components << '\n';
    out << "inversing classes " << classes << '\n';
    out << "odd negative degree: " << (t.empty() ? "none" : join(t)) << '\n';
    out << (girth ? "unbalanced, negative girth " + std::to_string(*girth) : std::string("balanced")) << '\n';
  }
  return kSuccess;
}

// ---- suite -------------------------------------------------------------------------------

int cmd_suite(const CommandConfig& c, std::ostream& out) {
  SuiteOptions options;
  options.record_passes = c.verbose;
  options.include_stretch = !c.no_stretch;
  const SuiteReport r = run_suite(c.suite, options);
  if (c.json) {
    json j = r;
    j["command"] = "suite";
    emit(out, j);
  } else {
    for (const SuiteCase& sc : r.cases) {
      out << to_string(sc.verdict) << ' ' << sc.name;
      if (!sc.detail.empty()) out << ": " << sc.detail;
      out << '\n';
      if (!sc.instance.empty() && sc.verdict != Verdict::Pass) out << sc.instance;
    }
    for (const std::string& note : r.notes) out << "# " << note << '\n';
    char seconds[32];
    std::snprintf(seconds, sizeof seconds, "%.2f", r.seconds);
    out << "suite " << r.suite << ": " << to_string(r.verdict()) << " (" << r.passed << " passed, " << r.failed
        << " failed, " << r.unknown << " unknown, " << seconds << " s)\n";
  }
  switch (r.verdict()) {
    case Verdict::Pass:
      return kSuccess;
    case Verdict::Fail:
      return kNegative;
    case Verdict::Unknown:
      return kBudget;
  }
  return kUsage;
}

// ---- search --------------------------------------------------------------------------------

struct SearchProblem {
  int min_connectivity;
  std::function<bool(const Rational&)> target;
  std::string description;
};

const std::map<std::string, SearchProblem>& search_problems() {
  static const std::map<std::string, SearchProblem> problems = {
      {"phi-gt-5-3ec", {3, [](const Rational& r) { return r > Rational(5); }, "3-edge-connected with index > 5"}},
      {"phi-eq-4-4ec", {4, [](const Rational& r) { return r == Rational(4); }, "4-edge-connected with index = 4"}},
  };
  return problems;
}

int cmd_search(const CommandConfig& c, std::ostream& out) {
  const SearchProblem& problem = search_problems().at(c.problem);
  EnumerationBounds bounds;
  bounds.min_vertices = 1;
  bounds.max_vertices = *c.max_v;
  bounds.max_edges = *c.max_e;
  bounds.even_degrees = c.eulerian;
  const double estimate = enumeration_estimate(bounds) * std::pow(2.0, std::max(0, *c.max_e));
  if (*c.max_v > 10 || estimate > c.search_limit) {
    std::ostringstream msg;
    msg << "refused: about " << estimate << " signed edge multisets exceed the limit " << c.search_limit;
    if (*c.max_v > 10) msg << " (canonical forms stop at 10 vertices)";
    throw BudgetExceeded(msg.str());
  }

  int examined = 0;
  std::vector<std::pair<SignedGraph, Rational>> findings;
  std::vector<SignedGraph> undecided;
  for (const SignedGraph& g : connected_signed_multigraphs(bounds)) {
    if (g.vertex_count() < 2 || edge_connectivity(g) < problem.min_connectivity) continue;
    ++examined;
    const IndexResult r = circular_flow_index(g, c.budget());
    if (r.kind == IndexKind::Unknown) {
      undecided.push_back(g);
    } else if (r.kind == IndexKind::Finite && problem.target(r.value)) {
      findings.emplace_back(g, r.value);
    }
  }
  if (c.json) {
    json j{{"command", "search"},
           {"problem", c.problem},
           {"max_v", *c.max_v},
           {"max_e", *c.max_e},
           {"eulerian_only", c.eulerian},
           {"examined", examined},
           {"findings", json::array()},
           {"undecided", undecided}};
    for (const auto& [g, r] : findings) j["findings"].push_back(json{{"graph", g}, {"index", to_string(r)}});
    emit(out, j);
  } else {
    out << "# " << problem.description << ", at most " << *c.max_v << " vertices and " << *c.max_e << " edges"
        << (c.eulerian ? ", Eulerian only" : "") << '\n';
    for (const auto& [g, r] : findings) out << "found index " << to_string(r) << ":\n" << format_signed_graph(g);
    for (const SignedGraph& g : undecided) out << "undecided:\n" << format_signed_graph(g);
    if (findings.empty() && undecided.empty()) {
      out << "none within bounds (" << examined << " graphs examined)\n";
    } else {
      out << findings.size() << " found, " << undecided.size() << " undecided (" << examined
          << " graphs examined)\n";
    }
  }
  return undecided.empty() ? kSuccess : kBudget;
}

const std::map<std::string, std::function<int(const CommandConfig&, std::ostream&)>>& commands() {
  static const std::map<std::string, std::function<int(const CommandConfig&, std::ostream&)>> table = {
      {"index", cmd_index},     {"verify-flow", cmd_verify_flow}, {"orient", cmd_orient},
      {"convert-eulerian", cmd_convert_eulerian},                 {"transfer", cmd_transfer},
      {"dual", cmd_dual},       {"hom", cmd_hom},                 {"fold", cmd_fold},
      {"classes", cmd_classes}, {"suite", cmd_suite},             {"search", cmd_search},
  };
  return table;
}

}  // namespace

void validate(const CommandConfig& c) {
  auto need_graph = [&] { require(!c.graph_path.empty(), c.command + " needs a graph file"); };
  require(commands().count(c.command) > 0, "unknown command '" + c.command + "'");
  require(!c.max_p || *c.max_p >= 2, "--max-p must be at least 2");
  require(c.time_limit >= 0, "--time-limit must not be negative");
  const std::string& cmd = c.command;
  if (cmd == "index" || cmd == "classes") {
    need_graph();
  } else if (cmd == "verify-flow") {
    need_graph();
    require(!c.flow_path.empty(), "verify-flow needs --flow");
  } else if (cmd == "orient") {
    need_graph();
    require(c.ell.has_value() != !c.beta_path.empty(), "orient needs exactly one of --mod and --beta");
    require(!c.ell || *c.ell >= 2, "--mod must be at least 2");
    require(c.beta_path.empty() || c.modulus.has_value(), "--beta needs --modulus");
    require(!c.modulus || *c.modulus >= 2, "--modulus must be at least 2");
    require(!c.partition || c.ell.has_value(), "--partition applies to --mod");
  } else if (cmd == "convert-eulerian") {
    need_graph();
    require(!c.cert_path.empty(), "convert-eulerian needs --cert");
    require(!c.to_form.empty(), "convert-eulerian needs --to");
    parse_eulerian_form(c.to_form);
  } else if (cmd == "transfer") {
    need_graph();
    require(c.p && c.q, "transfer needs --p and --q");
    require(*c.q >= 1 && *c.p > *c.q, "transfer needs p > q >= 1");
    require(c.from == "flow" || c.from == "orientation", "--from must be 'flow' or 'orientation'");
    require(!c.cert_path.empty(), "transfer needs --cert");
  } else if (cmd == "dual" || cmd == "fold") {
    need_graph();
    require(!c.embedding_path.empty(), cmd + " needs --embedding");
    require(!(c.saturate && c.face), "--face and --saturate exclude each other");
    require(!c.face || *c.face >= 0, "--face must not be negative");
  } else if (cmd == "hom") {
    need_graph();
    require(c.k.has_value(), "hom needs --neg-cycle");
    require(*c.k >= 2, "--neg-cycle must be at least 2");
  } else if (cmd == "suite") {
    const auto& names = suite_names();
    require(std::find(names.begin(), names.end(), c.suite) != names.end(), "unknown suite '" + c.suite + "'");
  } else if (cmd == "search") {
    require(search_problems().count(c.problem) > 0, "unknown search problem '" + c.problem + "'");
    require(c.max_v && c.max_e, "search needs explicit --max-v and --max-e");
    require(*c.max_v >= 0 && *c.max_e >= 0, "search bounds must not be negative");
  }
}

int execute(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    return commands().at(cfg.command)(cfg, out);
  } catch (const BudgetExceeded& e) {
    err << "monoflow: " << e.what() << '\n';
    return kBudget;
  } catch (const Error& e) {
    err << "monoflow: " << e.what() << '\n';
    return kUsage;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CommandConfig cfg;
  CLI::App app{"Signed graph circular flows: index, certificates, planar duality and test suites", "monoflow"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", cfg.json, "Print results as JSON");

  auto budget_options = [&](CLI::App* sub) {
    sub->add_option("--max-p", cfg.max_p, "Largest candidate numerator");
    sub->add_option("--node-limit", cfg.node_limit, "Search nodes per decision (0 = unlimited)");
    sub->add_option("--time-limit", cfg.time_limit, "Seconds for the whole command (0 = unlimited)");
  };
  auto graph_arg = [&](CLI::App* sub) { sub->add_option("graph", cfg.graph_path, "Graph file")->required(); };

  CLI::App* index = app.add_subcommand("index", "Circular flow index");
  graph_arg(index);
  budget_options(index);
  index->add_option("--witness", cfg.witness_out, "Write the optimal (p,q)-flow to this file");
  index->add_option("--certificate", cfg.certificate_out, "Write the tight cut to this file");

  CLI::App* verify = app.add_subcommand("verify-flow", "Check a flow file against a graph");
  graph_arg(verify);
  verify->add_option("--flow", cfg.flow_path, "Flow file")->required();

  CLI::App* orient = app.add_subcommand("orient", "Modulo l-orientation or (Z_m, beta)-orientation");
  graph_arg(orient);
  budget_options(orient);
  orient->add_option("--mod", cfg.ell, "l for a modulo l-orientation");
  orient->add_flag("--partition", cfg.partition, "Also print the edge partition form");
  orient->add_option("--beta", cfg.beta_path, "Boundary file ('b' lines, optional 'o' lines)");
  orient->add_option("--modulus", cfg.modulus, "Modulus of the boundary");

  CLI::App* convert = app.add_subcommand("convert-eulerian", "Convert an Eulerian certificate between forms");
  graph_arg(convert);
  convert->add_option("--cert", cfg.cert_path, "Certificate file")->required();
  convert->add_option("--to", cfg.to_form, "flow-4k, special-mod-flow, boundary-orientation or mod-2k-orientation")
      ->required();

  CLI::App* transfer = app.add_subcommand("transfer", "Move between (2p,q)-flows and multigraph orientations");
  graph_arg(transfer);
  transfer->add_option("--p", cfg.p, "p")->required();
  transfer->add_option("--q", cfg.q, "q")->required();
  transfer->add_option("--from", cfg.from, "flow or orientation")->required();
  transfer->add_option("--cert", cfg.cert_path, "Flow file or orientation certificate")->required();

  auto plane_outputs = [&](CLI::App* sub) {
    sub->add_option("--embedding", cfg.embedding_path, "Embedding file")->required();
    sub->add_option("--graph-out", cfg.graph_out, "Write the resulting graph to this file");
    sub->add_option("--embedding-out", cfg.embedding_out, "Write the resulting embedding to this file");
  };
  CLI::App* dual_cmd = app.add_subcommand("dual", "Signed plane dual");
  graph_arg(dual_cmd);
  plane_outputs(dual_cmd);
  dual_cmd->add_flag("--check", cfg.check, "Compare the flow index with the dual circular chromatic number");
  budget_options(dual_cmd);

  CLI::App* hom = app.add_subcommand("hom", "Homomorphism to a negative cycle");
  graph_arg(hom);
  budget_options(hom);
  hom->add_option("--neg-cycle", cfg.k, "Length k of the target C_-k")->required();
  hom->add_flag("--negated", cfg.negated, "Map to -C_-k instead");

  CLI::App* fold = app.add_subcommand("fold", "Fold a plane bipartite signed graph");
  graph_arg(fold);
  plane_outputs(fold);
  fold->add_flag("--saturate", cfg.saturate, "Fold until every face is a shortest negative cycle");
  fold->add_option("--face", cfg.face, "Face to fold (default: lowest index that qualifies)");

  CLI::App* classes = app.add_subcommand("classes", "Switching and inversing classes");
  graph_arg(classes);

  CLI::App* suite = app.add_subcommand("suite", "Run a consistency suite");
  suite->add_option("name", cfg.suite, "Suite name")->required();
  suite->add_flag("--verbose", cfg.verbose, "List passing cases too");
  suite->add_flag("--no-stretch", cfg.no_stretch, "Skip the Petersen stretch target");

  CLI::App* search = app.add_subcommand("search", "Exhaustive search within explicit bounds");
  search->add_option("problem", cfg.problem, "phi-gt-5-3ec or phi-eq-4-4ec")->required();
  search->add_option("--max-v", cfg.max_v, "Most vertices");
  search->add_option("--max-e", cfg.max_e, "Most edges");
  search->add_flag("--eulerian", cfg.eulerian, "Only graphs with all degrees even");
  search->add_option("--limit", cfg.search_limit, "Refuse when the estimated work exceeds this");
  budget_options(search);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "monoflow: " << e.what() << '\n';
    return kUsage;
  }
  for (CLI::App* sub : app.get_subcommands()) cfg.command = sub->get_name();

  try {
    validate(cfg);
  } catch (const Error& e) {
    err << "monoflow: " << e.what() << '\n';
    return kUsage;
  }
  return execute(cfg, out, err);
}

}  // namespace monoflow::cli
