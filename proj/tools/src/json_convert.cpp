#include "json_convert.hpp"

#include "monoflow/errors.hpp"

namespace monoflow {

namespace {

std::string rational_text(const Rational& r) { return to_string(r); }
Rational rational_value(const json& j) { return parse_rational(j.get<std::string>()); }

json optional_cut(const std::optional<TightCutReport>& t) { return t ? json(*t) : json(nullptr); }

}  // namespace

void to_json(json& j, const SignedGraph& g) {
  j = json{{"vertices", g.vertex_count()}, {"edges", json::array()}};
  for (const Edge& e : g.edges()) j["edges"].push_back({e.u, e.w, std::string(1, sign_char(e.sign))});
}

void from_json(const json& j, SignedGraph& g) {
  g = SignedGraph(j.at("vertices").get<int>());
  for (const json& e : j.at("edges")) {
    const std::string s = e.at(2).get<std::string>();
    if (s != "+" && s != "-") throw ParseError(0, "bad sign '" + s + "' in JSON graph");
    g.add_edge(e.at(0).get<int>(), e.at(1).get<int>(), s == "+" ? Sign::Positive : Sign::Negative);
  }
}

void to_json(json& j, const Arc& a) { j = json::array({a.tail, a.head}); }
void from_json(const json& j, Arc& a) { a = Arc{j.at(0).get<int>(), j.at(1).get<int>()}; }

void to_json(json& j, const Orientation& d) {
  j = json::array();
  for (const Arc& a : d.arcs()) j.push_back(a);
}

Orientation orientation_from_json(const json& j, const SignedGraph& g) {
  return Orientation(g, j.get<std::vector<Arc>>());
}

void to_json(json& j, const FlowKindSpec& k) {
  j = json{{"kind", k.name()}};
  if (k.is_integral()) {
    j["p"] = k.p;
    j["q"] = k.q;
  } else {
    j["r"] = rational_text(k.r);
  }
}

void from_json(const json& j, FlowKindSpec& k) {
  const std::string name = j.at("kind").get<std::string>();
  if (name == "pq") {
    k = FlowKindSpec::pq(j.at("p").get<int>(), j.at("q").get<int>());
  } else if (name == "mod-pq") {
    k = FlowKindSpec::mod_pq(j.at("p").get<int>(), j.at("q").get<int>());
  } else if (name == "circular-r") {
    k = FlowKindSpec::circular_r(rational_value(j.at("r")));
  } else if (name == "circular-mod-r") {
    k = FlowKindSpec::circular_mod_r(rational_value(j.at("r")));
  } else {
    throw ParseError(0, "unknown flow kind '" + name + "' in JSON");
  }
}

void to_json(json& j, const FlowAssignment& f) {
  j = json{{"kind", f.kind}, {"values", json::array()}};
  for (const Rational& v : f.values) j["values"].push_back(rational_text(v));
}

void from_json(const json& j, FlowAssignment& f) {
  f.kind = j.at("kind").get<FlowKindSpec>();
  f.values.clear();
  for (const json& v : j.at("values")) f.values.push_back(rational_value(v));
}

void to_json(json& j, const Cut& c) { j = json{{"side", c.side}, {"edges", c.edge_ids}}; }

void from_json(const json& j, Cut& c) {
  c.side = j.at("side").get<std::vector<bool>>();
  c.edge_ids = j.at("edges").get<std::vector<int>>();
}

void to_json(json& j, const TightCutReport& t) {
  j = json{{"cut", t.cut}, {"s1", t.s1}, {"s2", t.s2}, {"t1", t.t1}, {"t2", t.t2}, {"implied_r", rational_text(t.implied_r)}};
}

void from_json(const json& j, TightCutReport& t) {
  t.cut = j.at("cut").get<Cut>();
  t.s1 = j.at("s1").get<int>();
  t.s2 = j.at("s2").get<int>();
  t.t1 = j.at("t1").get<int>();
  t.t2 = j.at("t2").get<int>();
  t.implied_r = rational_value(j.at("implied_r"));
}

std::string to_string(IndexKind k) {
  switch (k) {
    case IndexKind::Finite:
      return "finite";
    case IndexKind::Infeasible:
      return "infeasible";
    case IndexKind::Unknown:
      return "unknown";
  }
  return "?";
}

IndexKind parse_index_kind(const std::string& name) {
  if (name == "finite") return IndexKind::Finite;
  if (name == "infeasible") return IndexKind::Infeasible;
  if (name == "unknown") return IndexKind::Unknown;
  throw ParseError(0, "unknown index status '" + name + "'");
}

json flow_witness_to_json(const FlowWitness& w) { return json{{"orientation", w.orientation}, {"flow", w.flow}}; }

FlowWitness flow_witness_from_json(const json& j, const SignedGraph& g) {
  return FlowWitness{orientation_from_json(j.at("orientation"), g), j.at("flow").get<FlowAssignment>()};
}

json index_result_to_json(const IndexResult& r) {
  json j{{"status", to_string(r.kind)},
         {"value", rational_text(r.value)},
         {"has_upper_bound", r.has_upper_bound},
         {"note", r.note},
         {"p", r.p},
         {"q", r.q},
         {"max_p_used", r.max_p_used},
         {"bound_truncated", r.bound_truncated},
         {"nodes", r.nodes},
         {"pq_witness", r.pq_witness ? flow_witness_to_json(*r.pq_witness) : json(nullptr)},
         {"circular_witness", r.circular_witness ? flow_witness_to_json(*r.circular_witness) : json(nullptr)},
         {"certificate", optional_cut(r.certificate)},
         {"potentials", r.potentials ? json(*r.potentials) : json(nullptr)}};
  return j;
}

IndexResult index_result_from_json(const json& j, const SignedGraph& g) {
  IndexResult r;
  r.kind = parse_index_kind(j.at("status").get<std::string>());
  r.value = rational_value(j.at("value"));
  r.has_upper_bound = j.at("has_upper_bound").get<bool>();
  r.note = j.at("note").get<std::string>();
  r.p = j.at("p").get<int>();
  r.q = j.at("q").get<int>();
  r.max_p_used = j.at("max_p_used").get<int>();
  r.bound_truncated = j.at("bound_truncated").get<bool>();
  r.nodes = j.at("nodes").get<std::uint64_t>();
  if (!j.at("pq_witness").is_null()) r.pq_witness = flow_witness_from_json(j.at("pq_witness"), g);
  if (!j.at("circular_witness").is_null()) r.circular_witness = flow_witness_from_json(j.at("circular_witness"), g);
  if (!j.at("certificate").is_null()) r.certificate = j.at("certificate").get<TightCutReport>();
  if (!j.at("potentials").is_null()) r.potentials = j.at("potentials").get<std::vector<int>>();
  return r;
}

void to_json(json& j, const PlaneEmbedding& emb) {
  j = json::array();
  for (const auto& face : emb.faces) {
    json f = json::array();
    for (const FaceSlot& s : face) f.push_back({s.edge, s.reversed});
    j.push_back(f);
  }
}

void from_json(const json& j, PlaneEmbedding& emb) {
  emb.faces.clear();
  for (const json& f : j) {
    std::vector<FaceSlot> face;
    for (const json& s : f) face.push_back(FaceSlot{s.at(0).get<int>(), s.at(1).get<bool>()});
    emb.faces.push_back(std::move(face));
  }
}

void to_json(json& j, const HomomorphismMapping& h) {
  j = json{{"target_length", h.target_length},
           {"negated_target", h.negated_target},
           {"vertex_image", h.vertex_image},
           {"edge_image", h.edge_image},
           {"switching_set", h.switching_set}};
}

void from_json(const json& j, HomomorphismMapping& h) {
  h.target_length = j.at("target_length").get<int>();
  h.negated_target = j.at("negated_target").get<bool>();
  h.vertex_image = j.at("vertex_image").get<std::vector<int>>();
  h.edge_image = j.at("edge_image").get<std::vector<int>>();
  h.switching_set = j.at("switching_set").get<std::vector<bool>>();
}

void to_json(json& j, const SuiteCase& c) {
  j = json{{"name", c.name}, {"verdict", to_string(c.verdict)}, {"detail", c.detail}, {"instance", c.instance}};
}

void from_json(const json& j, SuiteCase& c) {
  c.name = j.at("name").get<std::string>();
  const std::string v = j.at("verdict").get<std::string>();
  if (v == "PASS") {
    c.verdict = Verdict::Pass;
  } else if (v == "FAIL") {
    c.verdict = Verdict::Fail;
  } else if (v == "UNKNOWN") {
    c.verdict = Verdict::Unknown;
  } else {
    throw ParseError(0, "unknown verdict '" + v + "'");
  }
  c.detail = j.at("detail").get<std::string>();
  c.instance = j.at("instance").get<std::string>();
}

void to_json(json& j, const SuiteReport& r) {
  j = json{{"suite", r.suite},     {"verdict", to_string(r.verdict())}, {"passed", r.passed},
           {"failed", r.failed},   {"unknown", r.unknown},              {"cases", r.cases},
           {"notes", r.notes},     {"seconds", r.seconds}};
}

void from_json(const json& j, SuiteReport& r) {
  r.suite = j.at("suite").get<std::string>();
  r.passed = j.at("passed").get<int>();
  r.failed = j.at("failed").get<int>();
  r.unknown = j.at("unknown").get<int>();
  r.cases = j.at("cases").get<std::vector<SuiteCase>>();
  r.notes = j.at("notes").get<std::vector<std::string>>();
  r.seconds = j.at("seconds").get<double>();
}

}  // namespace monoflow
