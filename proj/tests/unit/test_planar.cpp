#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "monoflow/enumerate.hpp"
#include "monoflow/errors.hpp"
#include "monoflow/planar.hpp"
#include "oracles.hpp"

using namespace monoflow;

namespace {

SignedGraph random_bipartite(std::mt19937& rng, int a, int b, int m) {
  SignedGraph g(a + b);
  std::uniform_int_distribution<int> left(0, a - 1);
  std::uniform_int_distribution<int> right(a, a + b - 1);
  std::bernoulli_distribution neg(0.4);
  for (int i = 0; i < m; ++i) g.add_edge(left(rng), right(rng), neg(rng) ? Sign::Negative : Sign::Positive);
  return g;
}

int positive_face(const PlaneGraph& pg) {
  for (int f = 0; f < pg.embedding.face_count(); ++f) {
    if (face_sign(pg.graph, pg.embedding.faces[f]) == Sign::Positive) return f;
  }
  return -1;
}

}  // namespace

TEST_CASE("corpus embeddings are valid plane embeddings") {
  for (const auto& item : duality_corpus()) {
    INFO(item.name);
    auto verdict = validate_embedding(item.plane.graph, item.plane.embedding);
    CHECK_MESSAGE(verdict.ok, verdict.reason);
  }
  for (const auto& item : folding_corpus()) {
    INFO(item.name);
    CHECK(validate_embedding(item.plane.graph, item.plane.embedding).ok);
  }
  CHECK(plane::wheel(4).embedding.face_count() == 5);
  CHECK(plane::t2_k4().embedding.face_count() == 4);
  CHECK(plane::grid(2, 3).embedding.face_count() == 7);
}

TEST_CASE("validate_embedding rejects broken face lists") {
  PlaneGraph tri = plane::cycle(3, 0);
  PlaneEmbedding missing = tri.embedding;
  missing.faces.pop_back();
  CHECK_FALSE(validate_embedding(tri.graph, missing).ok);

  PlaneEmbedding same_direction = tri.embedding;
  for (auto& s : same_direction.faces[1]) s.reversed = !s.reversed;
  CHECK_FALSE(validate_embedding(tri.graph, same_direction).ok);

  PlaneEmbedding not_closed = tri.embedding;
  std::swap(not_closed.faces[0][0], not_closed.faces[1][0]);
  CHECK_FALSE(validate_embedding(tri.graph, not_closed).ok);

  // K_{3,3} with any rotation system has n - m + f < 2.
  SignedGraph k33(6);
  for (int a = 0; a < 3; ++a) {
    for (int b = 3; b < 6; ++b) k33.add_edge(a, b, Sign::Positive);
  }
  std::vector<std::vector<int>> rot(6);
  for (int v = 0; v < 6; ++v) rot[v] = k33.incident(v);
  auto verdict = validate_embedding(k33, embedding_from_rotation(k33, rot));
  CHECK_FALSE(verdict.ok);
  CHECK(verdict.reason.find("Euler") != std::string::npos);

  CHECK_THROWS_AS(embedding_from_rotation(k33, std::vector<std::vector<int>>(6)), PreconditionError);
}

TEST_CASE("embedding file round trip") {
  PlaneGraph w = plane::wheel(4, {1});
  std::string text = format_embedding(w.embedding);
  CHECK(parse_embedding(text) == w.embedding);
  CHECK(parse_embedding("# comment\nf 0 1~\n\nf 1 0~ # tail\n").faces.size() == 2);
  CHECK_THROWS_AS(parse_embedding("g 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_embedding("f 0 x\n"), ParseError);
  CHECK_THROWS_AS(parse_embedding("f\n"), ParseError);
  CHECK(rotation_of(w.graph, w.embedding).size() == 5);
}

TEST_CASE("dual examples") {
  SUBCASE("negative digon is self-dual") {
    PlaneGraph c2 = plane::parallel(2, 1);
    PlaneGraph d = dual(c2.graph, c2.embedding);
    CHECK(d.graph.vertex_count() == 2);
    CHECK(d.graph.edge_count() == 2);
    CHECK(d.graph.sign(0) == c2.graph.sign(0));
    CHECK(d.graph.sign(1) == c2.graph.sign(1));
    CHECK(d.graph.negative_edge_count() == 1);
  }
  SUBCASE("triangle dualizes to a positive triple edge") {
    PlaneGraph c3 = plane::cycle(3, 0);
    PlaneGraph d = dual(c3.graph, c3.embedding);
    CHECK(testing::brute_force_isomorphic(d.graph, named::parallel_edges(3, 0)));
  }
  SUBCASE("K4 is self-dual") {
    PlaneGraph k4 = plane::k4();
    PlaneGraph d = dual(k4.graph, k4.embedding);
    CHECK(testing::brute_force_isomorphic(d.graph, named::complete(4)));
    CHECK(validate_embedding(d.graph, d.embedding).ok);
  }
  SUBCASE("the dual keeps the primal signs edge by edge") {
    PlaneGraph w = plane::wheel(5, {0, 7});
    PlaneGraph d = dual(w.graph, w.embedding);
    for (int e = 0; e < w.graph.edge_count(); ++e) CHECK(d.graph.sign(e) == w.graph.sign(e));
  }
}

TEST_CASE("dual of the dual is the original graph") {
  for (const auto& item : duality_corpus()) {
    INFO(item.name);
    PlaneGraph d = dual(item.plane.graph, item.plane.embedding);
    REQUIRE(validate_embedding(d.graph, d.embedding).ok);
    PlaneGraph dd = dual(d.graph, d.embedding);
    CHECK(canonical_form(dd.graph) == canonical_form(item.plane.graph));
    if (item.plane.graph.vertex_count() <= 8) CHECK(testing::brute_force_isomorphic(dd.graph, item.plane.graph));
  }
}

TEST_CASE("dual preconditions") {
  SignedGraph path(3);
  path.add_edge(0, 1, Sign::Positive);
  path.add_edge(1, 2, Sign::Negative);
  std::vector<std::vector<int>> rot{{0}, {0, 1}, {1}};
  PlaneEmbedding emb = embedding_from_rotation(path, rot);
  CHECK(validate_embedding(path, emb).ok);
  CHECK_THROWS_AS(dual(path, emb), PreconditionError);

  PlaneGraph tri = plane::cycle(3, 0);
  PlaneEmbedding broken = tri.embedding;
  broken.faces.pop_back();
  CHECK_THROWS_AS(dual(tri.graph, broken), PreconditionError);
}

TEST_CASE("check_duality examples") {
  auto run = [](const PlaneGraph& pg) { return check_duality(pg.graph, pg.embedding); };
  DualityReport c2 = run(plane::parallel(2, 1));
  REQUIRE(c2.equal.has_value());
  CHECK(*c2.equal);
  CHECK(c2.flow_index.value == Rational(4));
  CHECK(c2.chromatic.value == Rational(4));

  // A positive cycle carries a nowhere-zero 2-flow; its dual bond is bipartite.
  DualityReport c3 = run(plane::cycle(3, 0));
  CHECK(c3.equal.value_or(false));
  CHECK(c3.flow_index.value == Rational(2));
  CHECK(c3.chromatic.value == Rational(2));

  DualityReport k4 = run(plane::k4());
  CHECK(k4.equal.value_or(false));
  CHECK(k4.flow_index.value == Rational(4));

  DualityReport neg = run(plane::parallel(2, 2));
  CHECK(neg.equal.value_or(false));
  CHECK(neg.flow_index.value == Rational(2));

  SearchBudget tiny;
  tiny.node_limit = 1;
  DualityReport cut = check_duality(plane::wheel(5).graph, plane::wheel(5).embedding, tiny);
  CHECK_FALSE(cut.equal.has_value());
}

TEST_CASE("flow index equals dual chromatic number on small corpus members") {
  for (const auto& item : duality_corpus()) {
    if (item.plane.graph.edge_count() > 6) continue;
    INFO(item.name);
    DualityReport r = check_duality(item.plane.graph, item.plane.embedding);
    REQUIRE(r.equal.has_value());
    CHECK(*r.equal);
    // The dual's chromatic number is also confirmed by enumeration.
    PlaneGraph d = dual(item.plane.graph, item.plane.embedding);
    auto bf = testing::brute_force_chromatic(d.graph, 2 * item.plane.graph.edge_count());
    REQUIRE(bf.has_value());
    CHECK(*bf == r.chromatic.value);
  }
}

TEST_CASE("hom_to_negative_cycle examples") {
  SignedGraph c4 = named::cycle(4, 1);
  HomomorphismSearch to2 = hom_to_negative_cycle(c4, 2);
  REQUIRE(to2.status == SearchStatus::Found);
  CHECK(verify_homomorphism(c4, *to2.mapping));

  SignedGraph c2 = named::negative_digon();
  CHECK(hom_to_negative_cycle(c2, 4).status == SearchStatus::NotFound);
  CHECK(hom_to_negative_cycle(c2, 2).status == SearchStatus::Found);

  // Odd k: C_3 positive maps to -C_{-3} but the negative triangle does not.
  CHECK(hom_to_negative_cycle(named::cycle(3, 0), 3, true).status == SearchStatus::Found);
  CHECK(hom_to_negative_cycle(named::cycle(3, 1), 3, true).status == SearchStatus::NotFound);
  CHECK(hom_to_negative_cycle(named::cycle(3, 1), 3, false).status == SearchStatus::Found);

  SearchBudget tiny;
  tiny.node_limit = 2;
  CHECK(hom_to_negative_cycle(named::cycle(8, 1), 8, false, tiny).status == SearchStatus::Unknown);
  CHECK_THROWS_AS(hom_to_negative_cycle(c4, 1), PreconditionError);
}

TEST_CASE("verify_homomorphism rejects broken mappings") {
  SignedGraph c4 = named::cycle(4, 1);
  HomomorphismMapping h = *hom_to_negative_cycle(c4, 2).mapping;
  HomomorphismMapping flipped = h;
  flipped.switching_set[1] = !flipped.switching_set[1];
  CHECK_FALSE(verify_homomorphism(c4, flipped));
  HomomorphismMapping moved = h;
  moved.vertex_image[0] = moved.vertex_image[1];
  CHECK_FALSE(verify_homomorphism(c4, moved));
}

TEST_CASE("hom search agrees with exhaustive enumeration") {
  std::mt19937 rng(31);
  int found = 0;
  for (int iter = 0; iter < 250; ++iter) {
    int n = std::uniform_int_distribution<int>(2, 5)(rng);
    int m = std::uniform_int_distribution<int>(1, 7)(rng);
    SignedGraph g = testing::random_signed_graph(rng, n, m);
    int k = std::uniform_int_distribution<int>(2, 5)(rng);
    bool negated = iter % 2 == 1;
    HomomorphismSearch s = hom_to_negative_cycle(g, k, negated);
    REQUIRE(s.status != SearchStatus::Unknown);
    bool expected = testing::brute_force_hom_to_negative_cycle(g, k, negated);
    CHECK((s.status == SearchStatus::Found) == expected);
    if (s.mapping) {
      ++found;
      CHECK(verify_homomorphism(g, *s.mapping));
    }
  }
  CHECK(found > 20);
}

TEST_CASE("homomorphism partitions") {
  SignedGraph c4 = named::cycle(4, 1);
  HomomorphismMapping h = *hom_to_negative_cycle(c4, 2).mapping;
  HomPartition hp = partition_from_homomorphism(c4, h);
  REQUIRE(hp.parts.size() == 2);
  CHECK(verify_hom_partition(c4, hp.parts, hp.orientation));

  SUBCASE("swapping one edge between parts breaks it") {
    auto parts = hp.parts;
    REQUIRE(!parts[0].empty());
    parts[1].push_back(parts[0].back());
    parts[0].pop_back();
    CHECK_FALSE(verify_hom_partition(c4, parts, hp.orientation));
  }
  SUBCASE("one part") {
    SignedGraph k4 = named::complete(4);
    std::vector<int> all(k4.edge_count());
    for (int e = 0; e < k4.edge_count(); ++e) all[e] = e;
    CHECK(verify_hom_partition(k4, {all}, Orientation::reference(k4)));
    SignedGraph unbalanced = named::cycle(3, 1);
    CHECK_FALSE(verify_hom_partition(unbalanced, {{0, 1, 2}}, Orientation::reference(unbalanced)));
  }
  SUBCASE("non-partitions are errors") {
    CHECK_THROWS_AS(verify_hom_partition(c4, {{0, 1}, {1, 2, 3}}, hp.orientation), PreconditionError);
    CHECK_THROWS_AS(verify_hom_partition(c4, {{0, 1}, {2}}, hp.orientation), PreconditionError);
  }
  CHECK_THROWS_AS(partition_from_homomorphism(named::cycle(3, 1), *hom_to_negative_cycle(named::cycle(3, 1), 3).mapping),
                  PreconditionError);
}

TEST_CASE("every found homomorphism winds uniformly") {
  std::mt19937 rng(77);
  int checked = 0;
  for (int iter = 0; iter < 200; ++iter) {
    SignedGraph g = testing::random_connected_graph(rng, std::uniform_int_distribution<int>(2, 6)(rng),
                                                    std::uniform_int_distribution<int>(2, 8)(rng));
    int k = std::uniform_int_distribution<int>(2, 5)(rng);
    HomomorphismSearch s = hom_to_negative_cycle(g, k, true);
    if (!s.mapping) continue;
    ++checked;
    HomPartition hp = partition_from_homomorphism(g, *s.mapping);
    CHECK(verify_hom_partition(g, hp.parts, hp.orientation));
  }
  CHECK(checked > 20);
}

TEST_CASE("negative girth") {
  CHECK(negative_girth(named::cycle(4, 1)) == 4);
  CHECK_FALSE(negative_girth(named::complete(4)).has_value());
  CHECK_FALSE(negative_girth(named::cycle(5, 2)).has_value());
  CHECK(negative_girth(t2_construction(named::complete(4))) == 6);
  CHECK(negative_girth(named::negative_digon()) == 2);

  std::mt19937 rng(5);
  for (int iter = 0; iter < 200; ++iter) {
    SignedGraph g = testing::random_signed_graph(rng, std::uniform_int_distribution<int>(2, 6)(rng),
                                                 std::uniform_int_distribution<int>(0, 10)(rng));
    CHECK(negative_girth(g) == testing::brute_force_negative_girth(g));
  }
}

TEST_CASE("fold_once on a positive outer 4-face") {
  PlaneGraph theta = plane::theta(2, 2, 2, {2});
  REQUIRE(negative_girth(theta.graph) == 4);
  int f = positive_face(theta);
  REQUIRE(f >= 0);
  FoldStep step = fold_once(theta.graph, theta.embedding, f);
  const SignedGraph& h = step.result.graph;
  CHECK(h.vertex_count() == theta.graph.vertex_count() - 1);
  // Both paths around the face fold onto one: two edges merge and the
  // face disappears.
  CHECK(step.merged_edges.size() == 2);
  CHECK(h.edge_count() == theta.graph.edge_count() - 2);
  CHECK(is_bipartite(h));
  CHECK(negative_girth(h) == 4);
  CHECK(validate_embedding(h, step.result.embedding).ok);
  CHECK(step.result.embedding.face_count() == theta.embedding.face_count() - 1);
}

TEST_CASE("fold preconditions") {
  PlaneGraph c4 = plane::cycle(4, 1);
  CHECK_THROWS_AS(fold_once(c4.graph, c4.embedding, 0), PreconditionError);
  PlaneGraph tri = plane::cycle(3, 1);
  CHECK_THROWS_AS(fold_once(tri.graph, tri.embedding, 0), PreconditionError);
  CHECK_THROWS_AS(fold_to_saturation(tri.graph, tri.embedding), PreconditionError);
  PlaneGraph balanced = plane::cycle(4, 0);
  CHECK_THROWS_AS(fold_once(balanced.graph, balanced.embedding, 0), PreconditionError);
  PlaneGraph theta = plane::theta(2, 2, 2, {2});
  CHECK_THROWS_AS(fold_once(theta.graph, theta.embedding, 7), PreconditionError);
}

TEST_CASE("fold_to_saturation on the folding corpus") {
  for (const auto& item : folding_corpus()) {
    INFO(item.name);
    const SignedGraph& g = item.plane.graph;
    const auto girth = negative_girth(g);
    REQUIRE(girth.has_value());
    std::vector<FoldStep> steps;
    PlaneGraph out = fold_to_saturation(g, item.plane.embedding, &steps);
    CHECK(is_bipartite(out.graph));
    CHECK(validate_embedding(out.graph, out.embedding).ok);
    CHECK(negative_girth(out.graph) == girth);
    for (const auto& face : out.embedding.faces) CHECK(is_negative_face_of_length(out.graph, face, *girth));
    CHECK(out.graph.vertex_count() == g.vertex_count() - static_cast<int>(steps.size()));
    // Folding is a homomorphism, so the input maps wherever the output does.
    const int k = *girth;
    if (k <= 6 && hom_to_negative_cycle(out.graph, k).status == SearchStatus::Found) {
      CHECK(hom_to_negative_cycle(g, k).status == SearchStatus::Found);
    }
  }
  PlaneGraph c4 = plane::cycle(4, 1);
  PlaneGraph same = fold_to_saturation(c4.graph, c4.embedding);
  CHECK(same.graph == c4.graph);
  CHECK(same.embedding == c4.embedding);
}

TEST_CASE("bipartite negative-girth instances map to negative even cycles") {
  for (const auto& item : folding_corpus()) {
    INFO(item.name);
    auto girth = negative_girth(item.plane.graph);
    if (*girth >= 4) CHECK(hom_to_negative_cycle(item.plane.graph, 2).status == SearchStatus::Found);
    if (*girth >= 10) CHECK(hom_to_negative_cycle(item.plane.graph, 4).status == SearchStatus::Found);
  }
}

TEST_CASE("C_{-2k} homomorphism matches the circular chromatic bound on bipartite graphs") {
  std::mt19937 rng(2024);
  for (int iter = 0; iter < 60; ++iter) {
    int a = std::uniform_int_distribution<int>(1, 3)(rng);
    int b = std::uniform_int_distribution<int>(1, 3)(rng);
    SignedGraph g = random_bipartite(rng, a, b, std::uniform_int_distribution<int>(1, 6)(rng));
    IndexResult chi = circular_chromatic_number(g);
    REQUIRE(chi.kind == IndexKind::Finite);
    for (int k = 1; k <= 2; ++k) {
      bool hom = hom_to_negative_cycle(g, 2 * k).status == SearchStatus::Found;
      CHECK(hom == (chi.value <= Rational(4 * k, 2 * k - 1)));
    }
  }
}
