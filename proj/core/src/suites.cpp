#include "monoflow/suites.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "monoflow/enumerate.hpp"
#include "monoflow/errors.hpp"
#include "monoflow/flow.hpp"
#include "monoflow/graph.hpp"
#include "monoflow/index.hpp"
#include "monoflow/orientation.hpp"
#include "monoflow/planar.hpp"

namespace monoflow {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "PASS";
    case Verdict::Fail:
      return "FAIL";
    case Verdict::Unknown:
      return "UNKNOWN";
  }
  return "?";
}

Verdict SuiteReport::verdict() const {
  if (failed > 0) return Verdict::Fail;
  if (unknown > 0) return Verdict::Unknown;
  return Verdict::Pass;
}

void SuiteReport::add(SuiteCase c, bool keep_pass) {
  switch (c.verdict) {
    case Verdict::Pass:
      ++passed;
      if (keep_pass) cases.push_back(std::move(c));
      return;
    case Verdict::Fail:
      ++failed;
      break;
    case Verdict::Unknown:
      ++unknown;
      break;
  }
  cases.push_back(std::move(c));
}

namespace {

using Clock = std::chrono::steady_clock;

std::string str(const Rational& r) {
  std::ostringstream out;
  out << r.numerator();
  if (r.denominator() != 1) out << '/' << r.denominator();
  return out.str();
}

std::string index_text(const IndexResult& r) {
  switch (r.kind) {
    case IndexKind::Finite:
      return str(r.value);
    case IndexKind::Infeasible:
      return "infeasible";
    case IndexKind::Unknown:
      return "unknown";
  }
  return "?";
}

// Collects cases for one suite.
class Recorder {
 public:
  Recorder(SuiteReport& report, const SuiteOptions& options) : report_(report), options_(options) {}

  void pass(std::string name, std::string detail = {}) {
    report_.add({std::move(name), Verdict::Pass, std::move(detail), {}}, options_.record_passes);
  }
  void fail(std::string name, std::string detail, const SignedGraph* g = nullptr) {
    report_.add({std::move(name), Verdict::Fail, std::move(detail), g ? format_signed_graph(*g) : std::string()}, true);
  }
  void unknown(std::string name, std::string detail, const SignedGraph* g = nullptr) {
    report_.add({std::move(name), Verdict::Unknown, std::move(detail), g ? format_signed_graph(*g) : std::string()},
                true);
  }
  void check(bool ok, std::string name, std::string detail, const SignedGraph* g = nullptr) {
    if (ok) {
      pass(std::move(name), std::move(detail));
    } else {
      fail(std::move(name), std::move(detail), g);
    }
  }
  void note(std::string text) { report_.notes.push_back(std::move(text)); }

 private:
  SuiteReport& report_;
  const SuiteOptions& options_;
};

std::string graph_name(const SignedGraph& g) { return "graph " + canonical_form(g); }

// A loopless multigraph with n vertices and m edges, uniform endpoints and signs.
SignedGraph random_signed_graph(std::mt19937& rng, int n, int m) {
  SignedGraph g(n);
  std::uniform_int_distribution<int> vertex(0, n - 1);
  std::bernoulli_distribution negative(0.5);
  for (int i = 0; i < m; ++i) {
    int u = vertex(rng);
    int w = vertex(rng);
    while (w == u) w = vertex(rng);
    g.add_edge(u, w, negative(rng) ? Sign::Negative : Sign::Positive);
  }
  return g;
}

Orientation random_orientation(std::mt19937& rng, const SignedGraph& g) {
  std::vector<Arc> arcs;
  std::bernoulli_distribution flip(0.5);
  for (const Edge& e : g.edges()) arcs.push_back(flip(rng) ? Arc{e.w, e.u} : Arc{e.u, e.w});
  return Orientation(g, std::move(arcs));
}

const std::vector<SignedGraph>& small_corpus() {
  static const std::vector<SignedGraph> corpus = connected_signed_multigraphs({1, 5, 6});
  return corpus;
}

bool witness_verifies(const SignedGraph& g, const FlowWitness& w) { return verify_flow(g, w.orientation, w.flow).ok; }

// ---- 1: equivalences -------------------------------------------------------------

void suite_equivalences(Recorder& rec) {
  const auto& corpus = small_corpus();
  const std::vector<std::pair<int, int>> reduced = index_candidates(12);
  long decisions = 0;
  for (const SignedGraph& g : corpus) {
    std::string problem;
    // decide_pq_flow against the enumeration oracle on every (p, q), p even <= 12.
    for (int p = 2; p <= 12 && problem.empty(); p += 2) {
      for (int q = 1; 2 * q <= p && problem.empty(); ++q) {
        ++decisions;
        PQDecision d = decide_pq_flow(g, p, q);
        std::optional<FlowWitness> o = oracle_pq_flow(g, p, q);
        if (d.status == SearchStatus::Unknown) {
          problem = "decide_pq_flow unknown";
        } else if ((d.status == SearchStatus::Found) != o.has_value()) {
          problem = "decide_pq_flow and oracle disagree";
        } else if (d.witness && !witness_verifies(g, *d.witness)) {
          problem = "decide_pq_flow witness fails verification";
        } else if (o && !witness_verifies(g, *o)) {
          problem = "oracle witness fails verification";
        }
        if (!problem.empty()) problem += " at (" + std::to_string(p) + "," + std::to_string(q) + ")";
      }
    }
    // The four notions on every reduced candidate a/b with a <= 12.
    for (auto [p, q] : reduced) {
      if (!problem.empty()) break;
      const Rational r(p, q);
      const bool integer = decide_pq_flow(g, p, q).status == SearchStatus::Found;
      const bool modulo = oracle_pq_flow(g, p, q).has_value();
      const bool circular = decide_circular_r_by_cuts(g, r).has_value();
      std::optional<FlowWitness> cm = decide_circular_mod_r(g, p, q);
      const bool circular_mod = cm.has_value();
      decisions += 4;
      if (integer != modulo || integer != circular || integer != circular_mod) {
        problem = "notions disagree at r = " + str(r) + " (integer " + std::to_string(integer) + ", modulo " +
                  std::to_string(modulo) + ", circular " + std::to_string(circular) + ", circular modulo " +
                  std::to_string(circular_mod) + ")";
      } else if (cm && !witness_verifies(g, *cm)) {
        problem = "circular modulo witness fails verification at r = " + str(r);
      }
    }
    if (problem.empty()) {
      rec.pass(graph_name(g));
    } else {
      rec.fail(graph_name(g), problem, &g);
    }
  }
  rec.note(std::to_string(corpus.size()) + " graphs, " + std::to_string(decisions) + " decisions");
}

// ---- 2: ground values ---------------------------------------------------------------

void suite_ground(Recorder& rec) {
  int all_negative = 0;
  int bridged = 0;
  for (const SignedGraph& g : small_corpus()) {
    IndexResult r = circular_flow_index(g);
    const bool bridge = has_positive_bridge(g);
    bridged += bridge ? 1 : 0;
    if ((r.kind == IndexKind::Infeasible) != bridge || r.kind == IndexKind::Unknown) {
      rec.fail(graph_name(g) + " infeasible iff positive bridge",
               "index " + index_text(r) + ", positive bridge " + (bridge ? "yes" : "no"), &g);
      continue;
    }
    if (g.edge_count() > 0 && g.negative_edge_count() == g.edge_count()) {
      ++all_negative;
      rec.check(r.kind == IndexKind::Finite && r.value == Rational(2), graph_name(g) + " all negative",
                "index " + index_text(r), &g);
    } else {
      rec.pass(graph_name(g) + " infeasible iff positive bridge");
    }
  }
  rec.note(std::to_string(all_negative) + " all-negative graphs, " + std::to_string(bridged) +
           " graphs with a positive bridge");

  const SignedGraph c2 = named::negative_digon();
  IndexResult r = circular_flow_index(c2);
  rec.check(r.kind == IndexKind::Finite && r.value == Rational(4), "C_-2 has index 4", "index " + index_text(r), &c2);

  const SignedGraph k2 = named::complete(2);
  r = circular_flow_index(k2);
  rec.check(r.kind == IndexKind::Infeasible, "positive K_2 is infeasible", "index " + index_text(r), &k2);

  const SignedGraph k4 = named::complete(4);
  r = circular_flow_index(k4);
  rec.check(r.kind == IndexKind::Finite && r.value == Rational(4), "K_4 has index 4", "index " + index_text(r), &k4);
  PQDecision d = decide_pq_flow(k4, 6, 2);
  rec.check(d.status == SearchStatus::NotFound, "K_4 has no (6,2)-flow", to_string(d.status), &k4);
}

// ---- 3: doubling ---------------------------------------------------------------------

void suite_doubling(Recorder& rec, const SuiteOptions& options) {
  const std::vector<std::pair<std::string, SignedGraph>> bases = {
      {"digon", named::parallel_edges(2, 0)}, {"C_3", named::cycle(3, 0)}, {"K_4", named::complete(4)}};
  for (const auto& [name, g] : bases) {
    IndexResult base = circular_flow_index(g);
    const SignedGraph t2 = t2_construction(g);
    IndexResult doubled = circular_flow_index(t2);
    const std::string detail = "index " + index_text(base) + ", doubled " + index_text(doubled);
    if (base.kind == IndexKind::Unknown || doubled.kind == IndexKind::Unknown) {
      rec.unknown("T_2(" + name + ")", detail, &t2);
      continue;
    }
    rec.check(base.kind == IndexKind::Finite && doubled.kind == IndexKind::Finite &&
                  doubled.value == Rational(2) * base.value,
              "T_2(" + name + ") doubles the index", detail, &t2);
  }
  if (!options.include_stretch) {
    rec.note("Petersen stretch target skipped");
    return;
  }

  const SignedGraph petersen = named::petersen();
  SearchBudget found_budget;
  found_budget.time_limit_seconds = options.petersen_found_seconds;
  PQDecision d = decide_pq_flow(petersen, 10, 2, found_budget);
  if (d.status == SearchStatus::Unknown) {
    rec.unknown("Petersen has a (10,2)-flow", "budget exhausted");
  } else {
    rec.check(d.status == SearchStatus::Found && d.witness && witness_verifies(petersen, *d.witness),
              "Petersen has a (10,2)-flow", to_string(d.status), &petersen);
  }

  // Every a/b in [2, 5) with b <= 3, one shared deadline.
  SearchBudget refute_budget;
  refute_budget.time_limit_seconds = options.petersen_refute_seconds;
  BudgetClock clock(refute_budget);
  for (int b = 1; b <= 3; ++b) {
    for (int a = 2 * b; a < 5 * b; ++a) {
      if (std::gcd(a, b) != 1) continue;
      const int p = a % 2 == 0 ? a : 2 * a;
      const int q = a % 2 == 0 ? b : 2 * b;
      clock.reset_nodes();
      PQDecision r = decide_pq_flow(petersen, p, q, clock);
      const std::string name = "Petersen has no circular " + std::to_string(a) + "/" + std::to_string(b) + "-flow";
      if (r.status == SearchStatus::Unknown) {
        rec.unknown(name, "budget exhausted");
      } else {
        rec.check(r.status == SearchStatus::NotFound, name, to_string(r.status), &petersen);
      }
    }
  }
}

// ---- 4: tight cuts -------------------------------------------------------------------

void suite_tight_cuts(Recorder& rec) {
  int finite = 0;
  for (const SignedGraph& g : small_corpus()) {
    // Without edges there is no cut to be tight.
    if (g.edge_count() == 0) continue;
    IndexResult r = circular_flow_index(g);
    if (r.kind == IndexKind::Unknown) {
      rec.unknown(graph_name(g), "index unknown", &g);
      continue;
    }
    if (r.kind != IndexKind::Finite) continue;
    ++finite;
    if (!r.circular_witness) {
      rec.fail(graph_name(g), "no circular witness", &g);
      continue;
    }
    const FlowWitness& w = *r.circular_witness;
    std::string problem;
    bool nonnegative = true;
    for (const Rational& v : w.flow.values) nonnegative = nonnegative && v >= Rational(0);
    if (!nonnegative || !witness_verifies(g, w)) {
      problem = "witness is not a non-negative circular flow";
    } else if (std::optional<TightCutReport> cut = find_tight_cut(g, w.orientation, w.flow); !cut) {
      problem = "optimal witness has no tight cut at r = " + str(r.value);
    } else if (tight_cut_index(*cut) != r.value) {
      problem = "tight cut index " + str(tight_cut_index(*cut)) + " differs from " + str(r.value);
    } else if (find_tight_cut(g, w.orientation, scale_circular(w.flow, r.value + Rational(1)))) {
      problem = "scaled witness at r + 1 still has a tight cut";
    }
    if (problem.empty()) {
      rec.pass(graph_name(g), "r = " + str(r.value));
    } else {
      rec.fail(graph_name(g), problem, &g);
    }
  }
  rec.note(std::to_string(finite) + " graphs with finite index");
}

// ---- 5: Hoffman ----------------------------------------------------------------------

void suite_hoffman(Recorder& rec, const SuiteOptions& options) {
  std::mt19937 rng(options.seed);
  int feasible = 0;
  const int samples = 1000;
  for (int i = 0; i < samples; ++i) {
    const int n = std::uniform_int_distribution<int>(2, 8)(rng);
    const int m = std::uniform_int_distribution<int>(1, 14)(rng);
    const SignedGraph g = random_signed_graph(rng, n, m);
    const Orientation d = random_orientation(rng, g);
    NegativePartition pi;
    for (int e = 0; e < m; ++e) {
      if (g.is_positive(e)) continue;
      (std::bernoulli_distribution(0.5)(rng) ? pi.low_set : pi.high_set).push_back(e);
    }
    const int den = std::uniform_int_distribution<int>(1, 3)(rng);
    const Rational r(std::uniform_int_distribution<int>(2 * den, 12 * den)(rng), den);
    const bool by_flow = hoffman_feasible(g, d, pi, r);
    const bool by_cuts = hoffman_feasible_by_cuts(g, d, pi, r);
    feasible += by_flow ? 1 : 0;
    const std::string name = "sample " + std::to_string(i);
    rec.check(by_flow == by_cuts, name,
              "r = " + str(r) + ", max-flow " + (by_flow ? "feasible" : "infeasible") + ", cuts " +
                  (by_cuts ? "feasible" : "infeasible"),
              &g);
  }
  rec.note(std::to_string(samples) + " samples, " + std::to_string(feasible) + " feasible");
}

// ---- 6: Eulerian ----------------------------------------------------------------------

void suite_eulerian(Recorder& rec) {
  EnumerationBounds bounds;
  bounds.min_vertices = 1;
  bounds.max_vertices = 8;
  bounds.max_edges = 8;
  bounds.even_degrees = true;
  const std::vector<SignedGraph> corpus = connected_signed_multigraphs(bounds);
  const std::vector<EulerianForm> forms = {EulerianForm::Flow4k, EulerianForm::SpecialModFlow,
                                           EulerianForm::BoundaryOrientation, EulerianForm::Mod2kOrientation};
  int satisfiable = 0;
  for (const SignedGraph& g : corpus) {
    for (int k = 1; k <= 2; ++k) {
      const std::string name = graph_name(g) + " k=" + std::to_string(k);
      std::string problem;
      int found = 0;
      for (EulerianForm form : forms) {
        std::optional<EulerianCertificate> cert = find_eulerian_certificate(g, form, k);
        if (!cert) continue;
        ++found;
        if (!verify_eulerian_certificate(*cert, g)) {
          problem = to_string(form) + " certificate fails verification";
          break;
        }
        for (EulerianForm target : forms) {
          if (target == form) continue;
          EulerianCertificate converted = convert_eulerian_certificate(*cert, target, g);
          if (converted.form != target || !verify_eulerian_certificate(converted, g)) {
            problem = "converting " + to_string(form) + " to " + to_string(target) + " fails verification";
            break;
          }
        }
        if (!problem.empty()) break;
      }
      if (problem.empty() && found != 0 && found != 4) {
        problem = std::to_string(found) + " of the four forms are satisfiable";
      }
      satisfiable += found == 4 ? 1 : 0;
      if (problem.empty()) {
        rec.pass(name, found == 4 ? "all satisfiable" : "none satisfiable");
      } else {
        rec.fail(name, problem, &g);
      }
    }
  }
  rec.note(std::to_string(corpus.size()) + " Eulerian signed graphs, " + std::to_string(satisfiable) +
           " satisfiable (graph, k) pairs");
}

// ---- 7: transfer ----------------------------------------------------------------------

void suite_transfer(Recorder& rec, const SuiteOptions& options) {
  std::mt19937 rng(options.seed + 7);
  const int per_pair = 200;
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}}) {
    int made = 0;
    int attempts = 0;
    while (made < per_pair && attempts < 100 * per_pair) {
      ++attempts;
      const int n = std::uniform_int_distribution<int>(2, 5)(rng);
      const int m = std::uniform_int_distribution<int>(n - 1, 7)(rng);
      const SignedGraph g = random_signed_graph(rng, n, m);
      PQDecision d = decide_pq_flow(g, 2 * p, q);
      if (d.status != SearchStatus::Found) continue;
      ++made;
      const std::string name =
          "(" + std::to_string(p) + "," + std::to_string(q) + ") instance " + std::to_string(made);
      std::string problem;
      try {
        // flow -> orientation -> flow
        TransferOrientation t = flow_to_orientation(g, p, q, *d.witness);
        if (!verify_beta_orientation(t.multigraph.graph, t.orientation, t.beta)) {
          problem = "transferred orientation fails verification";
        } else if (FlowWitness back = orientation_to_flow(g, p, q, t.orientation); !witness_verifies(g, back)) {
          problem = "flow -> orientation -> flow fails verification";
        }
        // orientation -> flow -> orientation, from an independently found orientation
        if (problem.empty()) {
          BetaOrientationSearch s = find_beta_orientation(t.multigraph.graph, t.beta);
          if (s.status != SearchStatus::Found) {
            problem = "no (Z_4p, beta)-orientation found although a flow exists";
          } else {
            FlowWitness f = orientation_to_flow(g, p, q, *s.orientation);
            TransferOrientation again = flow_to_orientation(g, p, q, f);
            if (!witness_verifies(g, f) ||
                !verify_beta_orientation(again.multigraph.graph, again.orientation, again.beta)) {
              problem = "orientation -> flow -> orientation fails verification";
            }
          }
        }
      } catch (const Error& e) {
        problem = e.what();
      }
      if (problem.empty()) {
        rec.pass(name);
      } else {
        rec.fail(name, problem, &g);
      }
    }
    if (made < per_pair) {
      rec.fail("(" + std::to_string(p) + "," + std::to_string(q) + ") sampling",
               "only " + std::to_string(made) + " instances with a flow");
    }
    rec.note("(" + std::to_string(p) + "," + std::to_string(q) + "): " + std::to_string(made) + " instances from " +
             std::to_string(attempts) + " samples");
  }
}

// ---- 8: connectivity ---------------------------------------------------------------------

void suite_connectivity(Recorder& rec) {
  const std::vector<SignedGraph> corpus = connected_signed_multigraphs({1, 4, 8});
  std::map<std::string, int> counts;
  for (const SignedGraph& g : corpus) {
    const int lambda = edge_connectivity(g);
    const bool trees = g.vertex_count() > 1 && has_edge_disjoint_spanning_trees(g, 3);
    if (lambda < 2 && !trees) continue;
    IndexResult r = circular_flow_index(g);
    if (r.kind != IndexKind::Finite) {
      rec.unknown(graph_name(g), "index " + index_text(r), &g);
      continue;
    }
    auto row = [&](bool applies, const std::string& label, bool holds) {
      if (!applies) return;
      ++counts[label];
      rec.check(holds, graph_name(g) + " " + label, "index " + str(r.value), &g);
    };
    row(lambda >= 2, "2-edge-connected, index <= 12", r.value <= Rational(12));
    row(lambda >= 3, "3-edge-connected, index <= 6", r.value <= Rational(6));
    row(lambda >= 4, "4-edge-connected, index <= 4", r.value <= Rational(4));
    row(trees, "3 disjoint spanning trees, index < 4", r.value < Rational(4));
  }
  for (const auto& [label, count] : counts) rec.note(label + ": " + std::to_string(count) + " graphs");
}

// ---- 9: duality ---------------------------------------------------------------------------

void suite_duality(Recorder& rec) {
  for (const NamedPlaneGraph& item : duality_corpus()) {
    const SignedGraph& g = item.plane.graph;
    DualityReport d = check_duality(g, item.plane.embedding);
    const std::string detail = "flow index " + index_text(d.flow_index) + ", dual chromatic " + index_text(d.chromatic);
    if (!d.equal) {
      rec.unknown(item.name, detail, &g);
    } else {
      rec.check(*d.equal, item.name, detail, &g);
    }
  }
}

// ---- 10: folding ----------------------------------------------------------------------------

void suite_folding(Recorder& rec) {
  std::vector<NamedPlaneGraph> corpus = folding_corpus();
  const int folding_size = static_cast<int>(corpus.size());
  for (const NamedPlaneGraph& item : corpus) {
    const SignedGraph& g = item.plane.graph;
    const std::optional<int> girth = negative_girth(g);
    std::string problem;
    try {
      PlaneGraph folded = fold_to_saturation(g, item.plane.embedding);
      const std::optional<int> after = negative_girth(folded.graph);
      if (!is_bipartite(folded.graph)) {
        problem = "folded graph is not bipartite";
      } else if (EmbeddingVerdict v = validate_embedding(folded.graph, folded.embedding); !v) {
        problem = "folded embedding is invalid: " + v.reason;
      } else if (after != girth) {
        problem = "negative girth changed";
      } else {
        for (const auto& face : folded.embedding.faces) {
          if (!is_negative_face_of_length(folded.graph, face, *girth)) problem = "a face is not a negative girth cycle";
        }
      }
    } catch (const Error& e) {
      problem = e.what();
    }
    if (problem.empty()) {
      rec.pass(item.name + " folds to saturation");
    } else {
      rec.fail(item.name + " folds to saturation", problem, &g);
    }
  }
  rec.check(folding_size >= 10, "folding corpus has at least 10 graphs", std::to_string(folding_size) + " graphs");

  // Homomorphisms on every bipartite corpus instance, planar corpora combined.
  for (const NamedPlaneGraph& item : duality_corpus()) {
    if (is_bipartite(item.plane.graph)) corpus.push_back(item);
  }
  for (const NamedPlaneGraph& item : corpus) {
    const SignedGraph& g = item.plane.graph;
    const std::optional<int> girth = negative_girth(g);
    for (auto [k, need] : std::vector<std::pair<int, int>>{{2, 4}, {4, 10}}) {
      if (!girth || *girth < need) continue;
      const std::string name = item.name + " maps to C_-" + std::to_string(k);
      HomomorphismSearch h = hom_to_negative_cycle(g, k);
      if (h.status == SearchStatus::Unknown) {
        rec.unknown(name, "budget exhausted", &g);
      } else {
        rec.check(h.status == SearchStatus::Found && h.mapping && verify_homomorphism(g, *h.mapping), name,
                  "negative girth " + std::to_string(*girth), &g);
      }
    }
  }
}

const std::map<std::string, std::function<void(Recorder&, const SuiteOptions&)>>& registry() {
  static const std::map<std::string, std::function<void(Recorder&, const SuiteOptions&)>> suites = {
      {"equivalences", [](Recorder& r, const SuiteOptions&) { suite_equivalences(r); }},
      {"ground", [](Recorder& r, const SuiteOptions&) { suite_ground(r); }},
      {"doubling", suite_doubling},
      {"tight-cuts", [](Recorder& r, const SuiteOptions&) { suite_tight_cuts(r); }},
      {"hoffman", suite_hoffman},
      {"eulerian", [](Recorder& r, const SuiteOptions&) { suite_eulerian(r); }},
      {"transfer", suite_transfer},
      {"connectivity", [](Recorder& r, const SuiteOptions&) { suite_connectivity(r); }},
      {"duality", [](Recorder& r, const SuiteOptions&) { suite_duality(r); }},
      {"folding", [](Recorder& r, const SuiteOptions&) { suite_folding(r); }},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"equivalences", "ground",       "doubling", "tight-cuts",
                                                 "hoffman",      "eulerian",     "transfer", "connectivity",
                                                 "duality",      "folding"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  auto it = registry().find(name);
  if (it == registry().end()) throw PreconditionError("unknown suite '" + name + "'");
  SuiteReport report;
  report.suite = name;
  Recorder rec(report, options);
  const auto start = Clock::now();
  it->second(rec, options);
  report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

}  // namespace monoflow
