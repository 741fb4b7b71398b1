#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "monoflow/errors.hpp"
#include "monoflow/orientation.hpp"
#include "oracles.hpp"

using namespace monoflow;

namespace {

Orientation all_forward(const SignedGraph& g) { return Orientation::reference(g); }

// Copy 0 of every edge forward, copy 1 backward: every vertex balanced.
Orientation balanced_double(const SignedGraph& doubled) {
  std::vector<Arc> arcs;
  for (int e = 0; e < doubled.edge_count(); ++e) {
    const Edge& edge = doubled.edge(e);
    arcs.push_back(e % 2 == 0 ? Arc{edge.u, edge.w} : Arc{edge.w, edge.u});
  }
  return Orientation(doubled, arcs);
}

SignedGraph random_eulerian(std::mt19937& rng, int max_edges) {
  while (true) {
    int n = std::uniform_int_distribution<int>(2, 4)(rng);
    SignedGraph g = testing::random_eulerian_graph(rng, n, std::uniform_int_distribution<int>(0, 2)(rng));
    if (g.edge_count() <= max_edges) return g;
  }
}

}  // namespace

TEST_CASE("verify_mod_orientation examples") {
  SignedGraph digon = named::negative_digon();
  CHECK(verify_mod_orientation({digon, all_forward(digon), 2}, digon));
  CHECK(mod_orientation_defect(digon, all_forward(digon), 2, 0) == 0);

  SignedGraph k4 = named::complete(4);
  for (unsigned dir = 0; dir < 64; ++dir) {
    Orientation d = all_forward(k4);
    for (int e = 0; e < 6; ++e) {
      if ((dir >> e) & 1U) d.flip(e);
    }
    CHECK_FALSE(verify_mod_orientation({k4, d, 3}, k4));
  }
  CHECK(find_mod_orientation(k4, 3).status == SearchStatus::NotFound);

  SignedGraph k4x2 = multiply_edges(k4, 2).graph;
  CHECK(verify_mod_orientation({k4x2, balanced_double(k4x2), 3}, k4x2));

  CHECK_THROWS_AS(verify_mod_orientation({named::complete(3), all_forward(named::complete(3)), 2}, digon),
                  PreconditionError);
}

TEST_CASE("find_mod_orientation necessary conditions") {
  // K_4 has odd degrees.
  CHECK(find_mod_orientation(named::complete(4), 2).status == SearchStatus::NotFound);
  // A triangle with one negative edge is not in the all-positive class.
  CHECK(find_mod_orientation(named::cycle(3, 1), 3).status == SearchStatus::NotFound);

  SignedGraph digon = named::negative_digon();
  ModOrientationSearch s = find_mod_orientation(digon, 2);
  REQUIRE(s.status == SearchStatus::Found);
  CHECK(verify_mod_orientation(*s.certificate, digon));
  CHECK_THROWS_AS(find_mod_orientation(digon, 1), PreconditionError);
}

TEST_CASE("find_mod_orientation agrees with exhaustive search") {
  std::mt19937 rng(101);
  for (int i = 0; i < 60; ++i) {
    SignedGraph g = testing::random_connected_graph(rng, std::uniform_int_distribution<int>(2, 4)(rng), 6);
    for (int ell : {2, 3, 4}) {
      ModOrientationSearch s = find_mod_orientation(g, ell);
      CHECK(s.status != SearchStatus::Unknown);
      bool found = s.status == SearchStatus::Found;
      CHECK(found == testing::brute_force_mod_orientable(g, ell));
      if (found) CHECK(verify_mod_orientation(*s.certificate, g));
    }
  }
}

TEST_CASE("modulo 3-orientations match circular 3-flows") {
  std::mt19937 rng(103);
  for (int i = 0; i < 60; ++i) {
    SignedGraph g = testing::random_connected_graph(rng, 4, 6).with_all_signs(Sign::Positive);
    bool orientable = find_mod_orientation(g, 3).status == SearchStatus::Found;
    CHECK(orientable == (decide_pq_flow(g, 6, 2).status == SearchStatus::Found));
  }
}

TEST_CASE("orientation_to_partition examples") {
  SignedGraph digon = named::negative_digon();
  PartitionCertificate pc = orientation_to_partition({digon, all_forward(digon), 2});
  REQUIRE(pc.parts.size() == 2U);
  CHECK(pc.parts[0] == std::vector<int>{0});
  CHECK(pc.parts[1] == std::vector<int>{1});
  CHECK(verify_partition_certificate(pc, digon).ok);

  SignedGraph k4x2 = multiply_edges(named::complete(4), 2).graph;
  PartitionCertificate three = orientation_to_partition({k4x2, balanced_double(k4x2), 3});
  REQUIRE(three.parts.size() == 3U);
  for (const auto& part : three.parts) CHECK(part.size() == 4U);
  CHECK(verify_partition_certificate(three, k4x2).ok);

  // Moving an edge between parts breaks the equal-imbalance condition.
  bool broken = false;
  for (std::size_t a = 0; a < three.parts[0].size() && !broken; ++a) {
    for (std::size_t b = 0; b < three.parts[1].size() && !broken; ++b) {
      PartitionCertificate swapped = three;
      std::swap(swapped.parts[0][a], swapped.parts[1][b]);
      PartitionVerdict v = verify_partition_certificate(swapped, k4x2);
      if (!v.ok && v.vertex >= 0) broken = true;
    }
  }
  CHECK(broken);

  SignedGraph tri = named::complete(3);
  CHECK(verify_partition_certificate({{{0, 1, 2}}, all_forward(tri)}, tri).ok);
  CHECK_THROWS_AS(verify_partition_certificate({{{0, 1}}, all_forward(tri)}, tri), PreconditionError);
  CHECK_THROWS_AS(verify_partition_certificate({{{0, 1, 2}, {2}}, all_forward(tri)}, tri), PreconditionError);

  SignedGraph path(3);
  path.add_edge(0, 1, Sign::Positive);
  path.add_edge(1, 2, Sign::Positive);
  CHECK_THROWS_AS(orientation_to_partition({path, all_forward(path), 2}), PreconditionError);
}

TEST_CASE("modulo orientations and partitions convert both ways") {
  std::mt19937 rng(107);
  int checked = 0;
  for (int i = 0; i < 80; ++i) {
    SignedGraph g = random_eulerian(rng, 8);
    for (int ell : {2, 3}) {
      ModOrientationSearch s = find_mod_orientation(g, ell);
      REQUIRE(s.status != SearchStatus::Unknown);
      if (!s.certificate) continue;
      PartitionCertificate pc = orientation_to_partition(*s.certificate);
      CHECK(pc.parts.size() == static_cast<std::size_t>(ell));
      CHECK(verify_partition_certificate(pc, g).ok);
      ModOrientationCertificate back = partition_to_orientation(pc, g);
      CHECK(verify_mod_orientation(back, g));
      ++checked;
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("Eulerian forms: digon examples") {
  SignedGraph digon = named::negative_digon();
  EulerianCertificate mod2k{EulerianForm::Mod2kOrientation, 1, all_forward(digon), {}, digon};
  REQUIRE(verify_eulerian_certificate(mod2k, digon));
  EulerianCertificate flow = convert_eulerian_certificate(mod2k, EulerianForm::Flow4k, digon);
  CHECK(flow.values == std::vector<Rational>{Rational(1), Rational(-1)});

  EulerianCertificate special = convert_eulerian_certificate(flow, EulerianForm::SpecialModFlow, digon);
  CHECK((special.values[0] == Rational(1) || special.values[0] == Rational(3)));
  CHECK((special.values[1] == Rational(1) || special.values[1] == Rational(3)));

  EulerianCertificate same = convert_eulerian_certificate(flow, EulerianForm::Flow4k, digon);
  CHECK(same.values == flow.values);
  CHECK(same.orientation == flow.orientation);

  CHECK_THROWS_AS(convert_eulerian_certificate(flow, EulerianForm::Flow4k, named::complete(4)), PreconditionError);
  EulerianCertificate bad = flow;
  bad.values[0] = Rational(2);
  CHECK_THROWS_AS(convert_eulerian_certificate(bad, EulerianForm::SpecialModFlow, digon), PreconditionError);
}

TEST_CASE("Eulerian forms agree and convert") {
  std::mt19937 rng(109);
  const EulerianForm forms[] = {EulerianForm::Flow4k, EulerianForm::SpecialModFlow, EulerianForm::BoundaryOrientation,
                                EulerianForm::Mod2kOrientation};
  for (int i = 0; i < 60; ++i) {
    SignedGraph g = random_eulerian(rng, 8);
    for (int k : {1, 2}) {
      std::vector<std::optional<EulerianCertificate>> found;
      for (EulerianForm f : forms) found.push_back(find_eulerian_certificate(g, f, k));
      for (const auto& c : found) CHECK(c.has_value() == found[0].has_value());
      for (const auto& c : found) {
        if (!c) continue;
        CHECK(verify_eulerian_certificate(*c, g));
        for (EulerianForm target : forms) {
          EulerianCertificate out = convert_eulerian_certificate(*c, target, g);
          CHECK(out.form == target);
          CHECK(verify_eulerian_certificate(out, g));
        }
      }
    }
  }
}

TEST_CASE("verify_beta_orientation examples") {
  SignedGraph digon = named::negative_digon();
  BoundaryFunction beta = positive_degree_boundary(digon, 2, 4);
  CHECK(beta.residues() == std::vector<int>{2, 2});
  Orientation opposite(digon, {{0, 1}, {1, 0}});
  CHECK_FALSE(verify_beta_orientation(digon, opposite, beta));
  CHECK(verify_beta_orientation(digon, all_forward(digon), beta));

  SignedGraph k4x2 = multiply_edges(named::complete(4), 2).graph;
  CHECK(verify_beta_orientation(k4x2, balanced_double(k4x2), BoundaryFunction(6, std::vector<int>(4, 0))));

  try {
    verify_beta_orientation(digon, opposite, BoundaryFunction(4, {1, 3}));
    FAIL("wrong parity accepted");
  } catch (const PreconditionError& err) {
    CHECK(std::string(err.what()).find("vertex 0") != std::string::npos);
  }
  CHECK_THROWS_AS(verify_beta_orientation(digon, opposite, BoundaryFunction(3, {0, 0})), PreconditionError);
}

TEST_CASE("boundary function representation") {
  BoundaryFunction b(6, {-1, 3, 4, 0});
  CHECK(b.residues() == std::vector<int>{5, 3, 4, 0});
  CHECK(b.symmetric(0) == -1);
  CHECK(b.symmetric(1) == 3);
  CHECK(b.symmetric(2) == -2);
  CHECK(b.sums_to_zero());
  CHECK(b.symmetric_sum({true, true, false, false}) == 2);
}

TEST_CASE("flip_arc") {
  SignedGraph k2 = named::parallel_edges(1, 0);
  BoundaryFunction beta(4, {1, -1});
  Orientation d = all_forward(k2);
  REQUIRE(verify_beta_orientation(k2, d, beta));
  FlippedArc f = flip_arc(k2, d, beta, 0);
  CHECK(f.beta == BoundaryFunction(4, {-1, 1}));
  CHECK(f.orientation.arc(0) == Arc{1, 0});
  CHECK(verify_beta_orientation(k2, f.orientation, f.beta));
  FlippedArc twice = flip_arc(k2, f.orientation, f.beta, 0);
  CHECK(twice.orientation == d);
  CHECK(twice.beta == beta);

  std::mt19937 rng(113);
  for (int i = 0; i < 100; ++i) {
    SignedGraph g = testing::random_connected_graph(rng, 4, 6);
    Orientation o = testing::random_orientation(rng, g);
    int k = std::uniform_int_distribution<int>(1, 3)(rng);
    // Parity-compliant: the boundary of a random orientation, sometimes shifted by 2.
    std::vector<int> r = boundary_of(g, testing::random_orientation(rng, g), 2 * k).residues();
    BoundaryFunction beta2(2 * k, r);
    int e = std::uniform_int_distribution<int>(0, g.edge_count() - 1)(rng);
    FlippedArc fl = flip_arc(g, o, beta2, e);
    CHECK(verify_beta_orientation(g, o, beta2) == verify_beta_orientation(g, fl.orientation, fl.beta));
    CHECK(fl.beta.is_parity_compliant(g));
  }
}

TEST_CASE("find_beta_orientation") {
  std::mt19937 rng(127);
  for (int i = 0; i < 40; ++i) {
    SignedGraph g = testing::random_connected_graph(rng, 5, 8);
    Orientation d = testing::random_orientation(rng, g);
    BoundaryFunction beta = boundary_of(g, d, 6);
    BetaOrientationSearch s = find_beta_orientation(g, beta);
    REQUIRE(s.orientation.has_value());
    CHECK(verify_beta_orientation(g, *s.orientation, beta));

    // Fixing part of D keeps D itself a valid completion.
    std::vector<std::optional<Arc>> partial(g.edge_count());
    for (int e = 0; e < g.edge_count(); e += 2) partial[e] = d.arc(e);
    BetaOrientationSearch p = find_beta_orientation(g, beta, partial);
    REQUIRE(p.orientation.has_value());
    for (int e = 0; e < g.edge_count(); e += 2) CHECK(p.orientation->arc(e) == d.arc(e));
  }

  // 4K_4 is 12-edge-connected, so every parity-compliant 6-boundary is reachable.
  SignedGraph k4x4 = multiply_edges(named::complete(4), 4).graph;
  for (int i = 0; i < 10; ++i) {
    // Every degree is 12, so the residues must be even.
    std::vector<int> r(4);
    int sum = 0;
    for (int v = 0; v < 3; ++v) {
      r[v] = 2 * std::uniform_int_distribution<int>(0, 2)(rng);
      sum += r[v];
    }
    r[3] = (6 - sum % 6) % 6;
    BoundaryFunction beta(6, r);
    REQUIRE(beta.is_parity_compliant(k4x4));
    BetaOrientationSearch s = find_beta_orientation(k4x4, beta);
    REQUIRE(s.orientation.has_value());
    CHECK(verify_beta_orientation(k4x4, *s.orientation, beta));
  }

  SignedGraph k2 = named::parallel_edges(1, 0);
  CHECK_THROWS_AS(find_beta_orientation(k2, BoundaryFunction(4, {0, 0})), PreconditionError);

  SearchBudget tiny;
  tiny.node_limit = 1;
  BetaOrientationSearch cut = find_beta_orientation(named::cycle(5, 0), BoundaryFunction(4, {2, 2, 2, 2, 0}), {}, tiny);
  CHECK(cut.status == SearchStatus::Unknown);
}

TEST_CASE("flow and orientation transfer") {
  SignedGraph digon = named::negative_digon();
  // The (4,1)-flow on the digon with the two edges opposed.
  FlowWitness w{Orientation(digon, {{0, 1}, {1, 0}}), {FlowKindSpec::pq(4, 1), {Rational(1), Rational(1)}}};
  REQUIRE(verify_flow(digon, w.orientation, w.flow).ok);
  TransferOrientation t = flow_to_orientation(digon, 2, 1, w);
  CHECK(t.multigraph.graph.edge_count() == 4);
  CHECK(verify_beta_orientation(t.multigraph.graph, t.orientation, t.beta));
  FlowWitness back = orientation_to_flow(digon, 2, 1, t.orientation);
  CHECK(verify_flow(digon, back.orientation, back.flow).ok);
  CHECK(back.flow.kind == FlowKindSpec::pq(4, 1));

  // Multiplier zero: values +-p on positive edges only.
  SignedGraph pos_digon = named::parallel_edges(2, 0);
  FlowWitness flat{Orientation(pos_digon, {{0, 1}, {1, 0}}), {FlowKindSpec::pq(4, 2), {Rational(2), Rational(2)}}};
  TransferOrientation empty = flow_to_orientation(pos_digon, 2, 2, flat);
  CHECK(empty.multigraph.graph.edge_count() == 0);
  CHECK(verify_flow(pos_digon, orientation_to_flow(pos_digon, 2, 2, empty.orientation).orientation,
                    orientation_to_flow(pos_digon, 2, 2, empty.orientation).flow)
            .ok);

  CHECK_THROWS_AS(flow_to_orientation(digon, 1, 2, w), PreconditionError);
  FlowWitness wrong = w;
  wrong.flow.values[0] = Rational(2);
  CHECK_THROWS_AS(flow_to_orientation(digon, 2, 1, wrong), PreconditionError);
}

TEST_CASE("transfer round trips") {
  std::mt19937 rng(131);
  int trips = 0;
  for (int i = 0; i < 80; ++i) {
    SignedGraph g = testing::random_connected_graph(rng, 4, 6);
    for (auto [p, q] : {std::pair{2, 1}, std::pair{3, 1}}) {
      PQDecision d = decide_pq_flow(g, 2 * p, q);
      if (!d.witness) continue;
      TransferOrientation t = flow_to_orientation(g, p, q, *d.witness);
      FlowWitness f = orientation_to_flow(g, p, q, t.orientation);
      CHECK(verify_flow(g, f.orientation, f.flow).ok);
      TransferOrientation t2 = flow_to_orientation(g, p, q, f);
      CHECK(verify_beta_orientation(t2.multigraph.graph, t2.orientation, t2.beta));
      ++trips;
    }
  }
  CHECK(trips > 20);
}

TEST_CASE("group connectivity") {
  CHECK(zk_connected(named::complete(4), 6));
  CHECK(zk_connected(named::parallel_edges(2, 0), 4));
  for (int k = 2; k <= 6; ++k) CHECK_FALSE(zk_connected(named::parallel_edges(1, 0), k));
  CHECK_FALSE(zk_connected(named::cycle(4, 0), 3));
  CHECK_THROWS_AS(zk_connected(named::complete(6), 3), BudgetExceeded);
  CHECK_THROWS_AS(zk_connected(named::complete(4), 1), PreconditionError);

  std::mt19937 rng(137);
  for (int i = 0; i < 40; ++i) {
    SignedGraph g = testing::random_connected_graph(rng, std::uniform_int_distribution<int>(2, 4)(rng), 6);
    for (int k : {3, 4}) CHECK(zk_connected(g, k) == zk_connected_by_avoidance(g, k));
  }
}
