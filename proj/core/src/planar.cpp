#include "monoflow/planar.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

#include "monoflow/errors.hpp"

namespace monoflow {

namespace {

// Dart 2e runs u -> w, dart 2e + 1 runs w -> u.
int dart_of(const FaceSlot& s) { return 2 * s.edge + (s.reversed ? 1 : 0); }
FaceSlot slot_of(int dart) { return FaceSlot{dart / 2, (dart & 1) != 0}; }

int tail_of(const SignedGraph& g, const FaceSlot& s) {
  const Edge& e = g.edge(s.edge);
  return s.reversed ? e.w : e.u;
}
int head_of(const SignedGraph& g, const FaceSlot& s) {
  const Edge& e = g.edge(s.edge);
  return s.reversed ? e.u : e.w;
}

// Successor of every dart along its face, or an empty vector when some
// dart is missing or repeated.
std::vector<int> face_successor(const SignedGraph& g, const PlaneEmbedding& emb) {
  std::vector<int> next(2 * static_cast<std::size_t>(g.edge_count()), -1);
  for (const auto& face : emb.faces) {
    for (std::size_t i = 0; i < face.size(); ++i) {
      int x = dart_of(face[i]);
      if (next[x] != -1) return {};
      next[x] = dart_of(face[(i + 1) % face.size()]);
    }
  }
  return next;
}

std::string str(int x) { return std::to_string(x); }

}  // namespace

// ---- embeddings ----------------------------------------------------------------------

EmbeddingVerdict validate_embedding(const SignedGraph& g, const PlaneEmbedding& emb) {
  auto fail = [](std::string why) { return EmbeddingVerdict{false, std::move(why)}; };
  const int m = g.edge_count();
  std::vector<int> seen(2 * static_cast<std::size_t>(m), 0);
  for (int f = 0; f < emb.face_count(); ++f) {
    const auto& face = emb.faces[f];
    if (face.empty()) return fail("face " + str(f) + " is empty");
    for (std::size_t i = 0; i < face.size(); ++i) {
      if (face[i].edge < 0 || face[i].edge >= m) return fail("face " + str(f) + " names unknown edge " + str(face[i].edge));
      ++seen[dart_of(face[i])];
    }
    for (std::size_t i = 0; i < face.size(); ++i) {
      if (head_of(g, face[i]) != tail_of(g, face[(i + 1) % face.size()])) {
        return fail("face " + str(f) + " is not a closed walk at position " + str(static_cast<int>(i)));
      }
    }
  }
  for (int e = 0; e < m; ++e) {
    if (seen[2 * e] != 1 || seen[2 * e + 1] != 1) {
      return fail("edge " + str(e) + " must appear once in each direction");
    }
  }

  // Every vertex is a single rotation orbit.
  const std::vector<int> next = face_successor(g, emb);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) continue;
    int e0 = g.incident(v).front();
    int start = g.edge(e0).u == v ? 2 * e0 : 2 * e0 + 1;
    int count = 0;
    int x = start;
    do {
      x = next[x ^ 1];
      ++count;
    } while (x != start && count <= g.degree(v));
    if (count != g.degree(v)) return fail("edges at vertex " + str(v) + " do not form a single rotation");
  }

  // Euler's formula per component with edges.
  const std::vector<int> comp = component_labels(g);
  const int c = g.vertex_count() == 0 ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<int> nv(c, 0), ne(c, 0), nf(c, 0);
  for (int v = 0; v < g.vertex_count(); ++v) ++nv[comp[v]];
  for (int e = 0; e < m; ++e) ++ne[comp[g.edge(e).u]];
  for (const auto& face : emb.faces) ++nf[comp[tail_of(g, face.front())]];
  for (int i = 0; i < c; ++i) {
    if (ne[i] == 0) continue;
    if (nv[i] - ne[i] + nf[i] != 2) {
      return fail("Euler's formula fails: n - m + f = " + str(nv[i] - ne[i] + nf[i]) + " on a component");
    }
  }
  return {};
}

PlaneEmbedding embedding_from_rotation(const SignedGraph& g, const std::vector<std::vector<int>>& rotation) {
  const int n = g.vertex_count();
  if (static_cast<int>(rotation.size()) != n) throw PreconditionError("rotation needs one list per vertex");
  std::vector<int> sigma(2 * static_cast<std::size_t>(g.edge_count()), -1);
  for (int v = 0; v < n; ++v) {
    std::vector<int> listed = rotation[v];
    std::vector<int> incident = g.incident(v);
    std::sort(listed.begin(), listed.end());
    std::sort(incident.begin(), incident.end());
    if (listed != incident) throw PreconditionError("rotation at vertex " + str(v) + " does not list its edges");
    const auto& rot = rotation[v];
    for (std::size_t i = 0; i < rot.size(); ++i) {
      auto leaving = [&](int e) { return g.edge(e).u == v ? 2 * e : 2 * e + 1; };
      sigma[leaving(rot[i])] = leaving(rot[(i + 1) % rot.size()]);
    }
  }
  PlaneEmbedding emb;
  std::vector<bool> used(sigma.size(), false);
  for (int x0 = 0; x0 < static_cast<int>(sigma.size()); ++x0) {
    if (used[x0]) continue;
    std::vector<FaceSlot> face;
    int x = x0;
    while (!used[x]) {
      used[x] = true;
      face.push_back(slot_of(x));
      x = sigma[x ^ 1];
    }
    emb.faces.push_back(std::move(face));
  }
  return emb;
}

std::vector<std::vector<int>> rotation_of(const SignedGraph& g, const PlaneEmbedding& emb) {
  const std::vector<int> next = face_successor(g, emb);
  if (next.empty() || std::find(next.begin(), next.end(), -1) != next.end()) {
    throw PreconditionError("embedding does not cover every edge side exactly once");
  }
  std::vector<std::vector<int>> rotation(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) continue;
    int e0 = g.incident(v).front();
    int start = g.edge(e0).u == v ? 2 * e0 : 2 * e0 + 1;
    int x = start;
    do {
      rotation[v].push_back(x / 2);
      x = next[x ^ 1];
    } while (x != start && static_cast<int>(rotation[v].size()) <= g.degree(v));
  }
  return rotation;
}

std::vector<int> face_vertices(const SignedGraph& g, const std::vector<FaceSlot>& face) {
  std::vector<int> out;
  out.reserve(face.size());
  for (const auto& s : face) out.push_back(tail_of(g, s));
  return out;
}

Sign face_sign(const SignedGraph& g, const std::vector<FaceSlot>& face) {
  Sign s = Sign::Positive;
  for (const auto& slot : face) s = s * g.sign(slot.edge);
  return s;
}

PlaneEmbedding parse_embedding(std::string_view text) {
  PlaneEmbedding emb;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    if (tag != "f") throw ParseError(line_no, "expected 'f', got '" + tag + "'");
    std::vector<FaceSlot> face;
    std::string tok;
    while (ls >> tok) {
      if (tok[0] == '#') break;
      FaceSlot s;
      if (tok.back() == '~') {
        s.reversed = true;
        tok.pop_back();
      }
      try {
        std::size_t used = 0;
        s.edge = std::stoi(tok, &used);
        if (used != tok.size() || s.edge < 0) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError(line_no, "bad edge id '" + tok + "'");
      }
      face.push_back(s);
    }
    if (face.empty()) throw ParseError(line_no, "empty face");
    emb.faces.push_back(std::move(face));
  }
  return emb;
}

std::string format_embedding(const PlaneEmbedding& emb) {
  std::string out;
  for (const auto& face : emb.faces) {
    out += "f";
    for (const auto& s : face) {
      out += ' ';
      out += std::to_string(s.edge);
      if (s.reversed) out += '~';
    }
    out += '\n';
  }
  return out;
}

// ---- dual ----------------------------------------------------------------------------

PlaneGraph dual(const SignedGraph& g, const PlaneEmbedding& emb) {
  if (auto v = validate_embedding(g, emb); !v) throw PreconditionError("invalid embedding: " + v.reason);
  if (g.edge_count() == 0) throw PreconditionError("dual needs at least one edge");
  if (!is_connected(g)) throw PreconditionError("dual needs a connected graph");

  std::vector<int> face_of(2 * static_cast<std::size_t>(g.edge_count()));
  for (int f = 0; f < emb.face_count(); ++f) {
    for (const auto& s : emb.faces[f]) face_of[dart_of(s)] = f;
  }
  PlaneGraph out;
  out.graph = SignedGraph(emb.face_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    if (face_of[2 * e] == face_of[2 * e + 1]) {
      throw PreconditionError("edge " + str(e) + " is a bridge; its dual would be a loop");
    }
    out.graph.add_edge(face_of[2 * e], face_of[2 * e + 1], g.sign(e));
  }
  const std::vector<int> next = face_successor(g, emb);
  for (int v = 0; v < g.vertex_count(); ++v) {
    int e0 = g.incident(v).front();
    int start = g.edge(e0).u == v ? 2 * e0 : 2 * e0 + 1;
    std::vector<FaceSlot> face;
    int x = start;
    do {
      face.push_back(slot_of(x));
      x = next[x ^ 1];
    } while (x != start);
    out.embedding.faces.push_back(std::move(face));
  }
  return out;
}

DualityReport check_duality(const SignedGraph& g, const PlaneEmbedding& emb, const SearchBudget& budget) {
  DualityReport report;
  PlaneGraph d = dual(g, emb);
  report.flow_index = circular_flow_index(g, budget);
  SearchBudget chi_budget = budget;
  if (!chi_budget.max_p) chi_budget.max_p = std::max(4 * d.graph.vertex_count(), 2 * g.edge_count());
  report.chromatic = circular_chromatic_number(d.graph, chi_budget);
  const IndexResult& a = report.flow_index;
  const IndexResult& b = report.chromatic;
  if (a.kind == IndexKind::Unknown || b.kind == IndexKind::Unknown) return report;
  report.equal = a.kind == b.kind && (a.kind != IndexKind::Finite || a.value == b.value);
  return report;
}

// ---- homomorphisms to negative cycles -------------------------------------------------------

SignedGraph negative_cycle_target(int k, bool negated_target) {
  if (k < 2) throw PreconditionError("negative cycle length must be at least 2");
  SignedGraph t(k);
  for (int i = 0; i < k; ++i) {
    Sign s = i == k - 1 ? Sign::Negative : Sign::Positive;
    t.add_edge(i, (i + 1) % k, negated_target ? -s : s);
  }
  return t;
}

namespace {

// Target edge joining a and b with sign s, or -1.
int target_edge(const SignedGraph& t, int a, int b, Sign s) {
  for (int e : t.incident(a)) {
    if (t.edge(e).other(a) == b && t.sign(e) == s) return e;
  }
  return -1;
}

Sign switched_sign(const SignedGraph& g, int e, const std::vector<bool>& sw) {
  const Edge& edge = g.edge(e);
  Sign s = edge.sign;
  if (sw[edge.u] != sw[edge.w]) s = -s;
  return s;
}

}  // namespace

bool verify_homomorphism(const SignedGraph& g, const HomomorphismMapping& h) {
  const int n = g.vertex_count();
  if (h.target_length < 2) return false;
  if (static_cast<int>(h.vertex_image.size()) != n || static_cast<int>(h.switching_set.size()) != n ||
      static_cast<int>(h.edge_image.size()) != g.edge_count()) {
    return false;
  }
  const SignedGraph t = negative_cycle_target(h.target_length, h.negated_target);
  for (int v = 0; v < n; ++v) {
    if (h.vertex_image[v] < 0 || h.vertex_image[v] >= h.target_length) return false;
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    int te = h.edge_image[e];
    if (te < 0 || te >= t.edge_count()) return false;
    const Edge& src = g.edge(e);
    const Edge& dst = t.edge(te);
    int a = h.vertex_image[src.u];
    int b = h.vertex_image[src.w];
    bool ends = (a == dst.u && b == dst.w) || (a == dst.w && b == dst.u);
    if (!ends || switched_sign(g, e, h.switching_set) != dst.sign) return false;
  }
  return true;
}

HomomorphismSearch hom_to_negative_cycle(const SignedGraph& g, int k, bool negated_target, const SearchBudget& budget) {
  const SignedGraph t = negative_cycle_target(k, negated_target);
  const int n = g.vertex_count();
  BudgetClock clock(budget);
  HomomorphismMapping h;
  h.target_length = k;
  h.negated_target = negated_target;
  h.vertex_image.assign(n, -1);
  h.switching_set.assign(n, false);

  // BFS order per component with the tree parent of each vertex.
  std::vector<int> order;
  std::vector<int> parent(n, -1);
  std::vector<bool> seen(n, false);
  for (int r = 0; r < n; ++r) {
    if (seen[r]) continue;
    seen[r] = true;
    std::deque<int> queue{r};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (int e : g.incident(v)) {
        int x = g.edge(e).other(v);
        if (!seen[x]) {
          seen[x] = true;
          parent[x] = v;
          queue.push_back(x);
        }
      }
    }
  }
  std::vector<bool> placed(n, false);
  auto consistent = [&](int v) {
    for (int e : g.incident(v)) {
      int x = g.edge(e).other(v);
      if (!placed[x]) continue;
      if (target_edge(t, h.vertex_image[v], h.vertex_image[x], switched_sign(g, e, h.switching_set)) < 0) return false;
    }
    return true;
  };

  bool cut = false;
  std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
    if (i == order.size()) return true;
    const int v = order[i];
    std::vector<int> images;
    if (parent[v] < 0) {
      images = {0};
    } else {
      int p = h.vertex_image[parent[v]];
      images = {(p + 1) % k};
      if ((p + k - 1) % k != images[0]) images.push_back((p + k - 1) % k);
    }
    for (int img : images) {
      for (int s = 0; s < (parent[v] < 0 ? 1 : 2); ++s) {
        if (!clock.tick()) {
          cut = true;
          return false;
        }
        h.vertex_image[v] = img;
        h.switching_set[v] = s == 1;
        placed[v] = true;
        if (consistent(v) && go(i + 1)) return true;
        placed[v] = false;
        if (cut) return false;
      }
    }
    h.vertex_image[v] = -1;
    h.switching_set[v] = false;
    return false;
  };

  HomomorphismSearch result;
  if (!go(0)) {
    result.status = cut ? SearchStatus::Unknown : SearchStatus::NotFound;
    return result;
  }
  h.edge_image.resize(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    h.edge_image[e] = target_edge(t, h.vertex_image[edge.u], h.vertex_image[edge.w], switched_sign(g, e, h.switching_set));
  }
  result.status = SearchStatus::Found;
  result.mapping = std::move(h);
  return result;
}

HomPartition partition_from_homomorphism(const SignedGraph& g, const HomomorphismMapping& mapping) {
  if (!verify_homomorphism(g, mapping)) throw PreconditionError("mapping is not a homomorphism");
  HomomorphismMapping h = mapping;
  const int k = h.target_length;
  if (!h.negated_target) {
    if (k % 2 != 0) throw PreconditionError("the partition form needs -C_{-k} when k is odd");
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (h.vertex_image[v] % 2 != 0) h.switching_set[v] = !h.switching_set[v];
    }
    h.negated_target = true;
  }
  const SignedGraph t = negative_cycle_target(k, true);
  HomPartition out;
  out.parts.assign(k, {});
  std::vector<Arc> arcs(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    int te = h.edge_image[e];
    out.parts[te].push_back(e);
    const Edge& edge = g.edge(e);
    if (h.vertex_image[edge.u] == t.edge(te).u) {
      arcs[e] = Arc{edge.u, edge.w};
    } else {
      arcs[e] = Arc{edge.w, edge.u};
    }
  }
  out.orientation = Orientation(g, std::move(arcs));
  return out;
}

bool verify_hom_partition(const SignedGraph& g, const std::vector<std::vector<int>>& parts, const Orientation& d) {
  const int m = g.edge_count();
  if (d.edge_count() != m) throw PreconditionError("orientation does not match the graph");
  std::vector<int> part_of(m, -1);
  for (int i = 0; i < static_cast<int>(parts.size()); ++i) {
    for (int e : parts[i]) {
      if (e < 0 || e >= m) throw PreconditionError("part " + str(i) + " names unknown edge " + str(e));
      if (part_of[e] != -1) throw PreconditionError("edge " + str(e) + " lies in two parts");
      part_of[e] = i;
    }
  }
  for (int e = 0; e < m; ++e) {
    if (part_of[e] == -1) throw PreconditionError("edge " + str(e) + " lies in no part");
  }

  for (const auto& part : parts) {
    std::vector<Sign> signs(m, Sign::Negative);
    for (int e : part) signs[e] = Sign::Positive;
    if (!is_switching_equivalent(g.with_signs(signs), g)) return false;
  }

  const SpanningForest forest = spanning_forest(g);
  for (int e = 0; e < m; ++e) {
    if (forest.in_tree[e]) continue;
    std::vector<int> count(parts.size(), 0);
    auto walk = [&](int edge, int from) {
      count[part_of[edge]] += d.arc(edge).tail == from ? 1 : -1;
    };
    const Edge& edge = g.edge(e);
    walk(e, edge.u);
    int cur = edge.w;
    for (int te : tree_path(forest, edge.w, edge.u)) {
      walk(te, cur);
      cur = g.edge(te).other(cur);
    }
    if (std::adjacent_find(count.begin(), count.end(), std::not_equal_to<>()) != count.end()) return false;
  }
  return true;
}

// ---- negative girth and folding ------------------------------------------------------------

std::optional<int> negative_girth(const SignedGraph& g) {
  const int n = g.vertex_count();
  std::optional<int> best;
  std::vector<int> dist(2 * static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[2 * s] = 0;
    std::deque<int> queue{2 * s};
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      int v = x / 2;
      int parity = x % 2;
      if (best && dist[x] >= *best) break;
      for (int e : g.incident(v)) {
        int y = 2 * g.edge(e).other(v) + (parity ^ (g.is_positive(e) ? 0 : 1));
        if (dist[y] == -1) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
      }
    }
    if (dist[2 * s + 1] > 0 && (!best || dist[2 * s + 1] < *best)) best = dist[2 * s + 1];
  }
  return best;
}

bool is_negative_face_of_length(const SignedGraph& g, const std::vector<FaceSlot>& face, int length) {
  return static_cast<int>(face.size()) == length && face_sign(g, face) == Sign::Negative;
}

namespace {

struct FoldSetup {
  int girth = 0;
};

FoldSetup check_fold_input(const SignedGraph& g, const PlaneEmbedding& emb) {
  if (auto v = validate_embedding(g, emb); !v) throw PreconditionError("invalid embedding: " + v.reason);
  if (!is_bipartite(g)) throw PreconditionError("folding needs a bipartite graph");
  auto girth = negative_girth(g);
  if (!girth) throw PreconditionError("folding needs a negative cycle; the graph is balanced");
  return FoldSetup{*girth};
}

// Removes a length-2 face whose two parallel edges carry the same sign;
// the second edge is merged into the first.
bool merge_digon_face(PlaneGraph& pg, std::vector<int>* merged) {
  const SignedGraph& g = pg.graph;
  for (int fi = 0; fi < pg.embedding.face_count(); ++fi) {
    const auto& face = pg.embedding.faces[fi];
    if (face.size() != 2 || face[0].edge == face[1].edge) continue;
    if (g.sign(face[0].edge) != g.sign(face[1].edge)) continue;
    const FaceSlot s1 = face[0];  // a -> b
    const FaceSlot s2 = face[1];  // b -> a
    const int e2 = s2.edge;
    std::vector<int> emap(g.edge_count());
    SignedGraph h(g.vertex_count());
    for (int e = 0; e < g.edge_count(); ++e) {
      if (e != e2) emap[e] = h.add_edge(g.edge(e).u, g.edge(e).w, g.sign(e));
    }
    PlaneEmbedding out;
    for (int f = 0; f < pg.embedding.face_count(); ++f) {
      if (f == fi) continue;
      std::vector<FaceSlot> nf;
      for (FaceSlot s : pg.embedding.faces[f]) {
        // The far side of e2 runs a -> b, as s1 does.
        if (s.edge == e2) s = s1;
        nf.push_back(FaceSlot{emap[s.edge], s.reversed});
      }
      out.faces.push_back(std::move(nf));
    }
    if (merged) merged->push_back(e2);
    pg = PlaneGraph{std::move(h), std::move(out)};
    return true;
  }
  return false;
}

// Identifies c = head(face[j+1]) into a = tail(face[j]), switching at c
// when the two edges differ in sign, then merges the parallel edges that
// now bound same-sign digon faces.
FoldStep fold_at(const SignedGraph& g, const PlaneEmbedding& emb, int fi, std::size_t j) {
  const auto& face = emb.faces[fi];
  const std::size_t len = face.size();
  const FaceSlot s1 = face[j];
  const FaceSlot s2 = face[(j + 1) % len];
  const int a = tail_of(g, s1);
  const int c = head_of(g, s2);

  FoldStep step;
  step.face = fi;
  step.identified_to = a;
  step.identified_from = c;
  std::vector<Sign> signs = g.signs();
  if (g.sign(s1.edge) != g.sign(s2.edge)) {
    step.switched = true;
    for (int e : g.incident(c)) signs[e] = -signs[e];
  }

  std::vector<int> vmap(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) vmap[v] = v < c ? v : v - 1;
  vmap[c] = vmap[a];
  SignedGraph h(g.vertex_count() - 1);
  for (int e = 0; e < g.edge_count(); ++e) h.add_edge(vmap[g.edge(e).u], vmap[g.edge(e).w], signs[e]);

  PlaneEmbedding out;
  for (int f = 0; f < emb.face_count(); ++f) {
    if (f != fi) {
      out.faces.push_back(emb.faces[f]);
      continue;
    }
    std::vector<FaceSlot> rest;
    for (std::size_t i = 0; i < len; ++i) {
      if (i != j && i != (j + 1) % len) rest.push_back(face[i]);
    }
    out.faces.push_back(std::move(rest));
    out.faces.push_back({s1, s2});
  }
  PlaneGraph pg{std::move(h), std::move(out)};
  std::vector<int> merged;
  while (merge_digon_face(pg, &merged)) {
  }
  // Merged ids refer to successively shrunk graphs; report them in input ids.
  std::vector<int> alive(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) alive[e] = e;
  for (int id : merged) {
    step.merged_edges.push_back(alive[id]);
    alive.erase(alive.begin() + id);
  }
  step.result = std::move(pg);
  return step;
}

}  // namespace

FoldStep fold_once(const SignedGraph& g, const PlaneEmbedding& emb, int face_index) {
  const FoldSetup setup = check_fold_input(g, emb);
  if (face_index < 0 || face_index >= emb.face_count()) {
    throw PreconditionError("face index " + str(face_index) + " out of range");
  }
  const auto& face = emb.faces[face_index];
  if (is_negative_face_of_length(g, face, setup.girth)) {
    throw PreconditionError("face " + str(face_index) + " is already a negative " + str(setup.girth) + "-cycle");
  }
  const std::size_t len = face.size();
  for (std::size_t j = 0; j < len; ++j) {
    const FaceSlot& s1 = face[j];
    const FaceSlot& s2 = face[(j + 1) % len];
    if (s1.edge == s2.edge || tail_of(g, s1) == head_of(g, s2)) continue;
    FoldStep step = fold_at(g, emb, face_index, j);
    const SignedGraph& h = step.result.graph;
    if (!validate_embedding(h, step.result.embedding)) continue;
    if (!is_bipartite(h)) continue;
    if (negative_girth(h) != setup.girth) continue;
    return step;
  }
  throw Error("folding contract violated: no identification on face " + str(face_index) +
              " keeps the graph plane, bipartite and of negative girth " + str(setup.girth));
}

PlaneGraph fold_to_saturation(const SignedGraph& g, const PlaneEmbedding& emb, std::vector<FoldStep>* steps) {
  const FoldSetup setup = check_fold_input(g, emb);
  PlaneGraph cur{g, emb};
  while (true) {
    int target = -1;
    for (int f = 0; f < cur.embedding.face_count(); ++f) {
      if (!is_negative_face_of_length(cur.graph, cur.embedding.faces[f], setup.girth)) {
        target = f;
        break;
      }
    }
    if (target < 0) return cur;
    FoldStep step = fold_once(cur.graph, cur.embedding, target);
    cur = step.result;
    if (steps) steps->push_back(std::move(step));
  }
}

// ---- plane corpus ---------------------------------------------------------------------------

namespace plane {

namespace {

std::vector<Sign> signs_with(int m, const std::vector<int>& negative_edges) {
  std::vector<Sign> s(m, Sign::Positive);
  for (int e : negative_edges) {
    if (e < 0 || e >= m) throw PreconditionError("negative edge " + str(e) + " out of range");
    s[e] = Sign::Negative;
  }
  return s;
}

}  // namespace

PlaneGraph cycle(int length, int negative_edges) {
  SignedGraph g = named::cycle(length, negative_edges);
  std::vector<std::vector<int>> rot(length);
  for (int v = 0; v < length; ++v) rot[v] = {v, (v + length - 1) % length};
  return PlaneGraph{g, embedding_from_rotation(g, rot)};
}

PlaneGraph parallel(int count, int negative_edges) {
  if (count < 1) throw PreconditionError("parallel needs at least one edge");
  SignedGraph g(2);
  for (int i = 0; i < count; ++i) g.add_edge(0, 1, i < negative_edges ? Sign::Negative : Sign::Positive);
  std::vector<std::vector<int>> rot(2);
  for (int i = 0; i < count; ++i) {
    rot[0].push_back(i);
    rot[1].push_back(count - 1 - i);
  }
  return PlaneGraph{g, embedding_from_rotation(g, rot)};
}

PlaneGraph theta(int a, int b, int c, const std::vector<int>& negative_edges) {
  const int lens[3] = {a, b, c};
  int ones = 0;
  for (int l : lens) {
    if (l < 1) throw PreconditionError("theta paths need at least one edge");
    ones += l == 1 ? 1 : 0;
  }
  if (ones > 1) throw PreconditionError("theta graph would have parallel edges; use parallel()");
  SignedGraph g(a + b + c - 1);
  std::vector<int> first(3), last(3);
  int fresh = 2;
  for (int p = 0; p < 3; ++p) {
    int prev = 0;
    for (int i = 0; i < lens[p]; ++i) {
      int next = i + 1 == lens[p] ? 1 : fresh++;
      int e = g.add_edge(prev, next, Sign::Positive);
      if (i == 0) first[p] = e;
      if (i + 1 == lens[p]) last[p] = e;
      prev = next;
    }
  }
  g = g.with_signs(signs_with(g.edge_count(), negative_edges));
  std::vector<std::vector<int>> rot(g.vertex_count());
  rot[0] = {first[0], first[1], first[2]};
  rot[1] = {last[2], last[1], last[0]};
  for (int v = 2; v < g.vertex_count(); ++v) rot[v] = g.incident(v);
  return PlaneGraph{g, embedding_from_rotation(g, rot)};
}

PlaneGraph wheel(int n, const std::vector<int>& negative_edges) {
  if (n < 3) throw PreconditionError("wheel needs a rim of at least 3 vertices");
  SignedGraph g(n + 1);
  for (int i = 1; i <= n; ++i) g.add_edge(0, i, Sign::Positive);
  for (int i = 1; i <= n; ++i) g.add_edge(i, i % n + 1, Sign::Positive);
  g = g.with_signs(signs_with(g.edge_count(), negative_edges));
  std::vector<std::vector<int>> rot(n + 1);
  for (int i = 0; i < n; ++i) rot[0].push_back(i);
  for (int i = 1; i <= n; ++i) {
    int next_rim = n + i - 1;
    int prev_rim = n + (i + n - 2) % n;
    rot[i] = {next_rim, i - 1, prev_rim};
  }
  return PlaneGraph{g, embedding_from_rotation(g, rot)};
}

PlaneGraph k4(const std::vector<int>& negative_edges) { return wheel(3, negative_edges); }

PlaneGraph t2_k4() {
  PlaneGraph base = k4();
  SignedGraph g = t2_construction(base.graph);
  std::vector<std::vector<int>> rot(g.vertex_count());
  const auto base_rot = rotation_of(base.graph, base.embedding);
  for (int v = 0; v < base.graph.vertex_count(); ++v) {
    for (int e : base_rot[v]) rot[v].push_back(base.graph.edge(e).u == v ? 2 * e : 2 * e + 1);
  }
  for (int v = base.graph.vertex_count(); v < g.vertex_count(); ++v) rot[v] = g.incident(v);
  return PlaneGraph{g, embedding_from_rotation(g, rot)};
}

PlaneGraph grid(int rows, int cols, const std::vector<int>& negative_edges) {
  if (rows < 1 || cols < 1) throw PreconditionError("grid needs at least one square");
  const int w = cols + 1;
  auto id = [&](int r, int c) { return r * w + c; };
  SignedGraph g((rows + 1) * w);
  for (int r = 0; r <= rows; ++r) {
    for (int c = 0; c < cols; ++c) g.add_edge(id(r, c), id(r, c + 1), Sign::Positive);
  }
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c <= cols; ++c) g.add_edge(id(r, c), id(r + 1, c), Sign::Positive);
  }
  g = g.with_signs(signs_with(g.edge_count(), negative_edges));
  auto horizontal = [&](int r, int c) { return r * cols + c; };
  auto vertical = [&](int r, int c) { return (rows + 1) * cols + r * w + c; };
  std::vector<std::vector<int>> rot(g.vertex_count());
  for (int r = 0; r <= rows; ++r) {
    for (int c = 0; c <= cols; ++c) {
      auto& at = rot[id(r, c)];
      if (c < cols) at.push_back(horizontal(r, c));      // east
      if (r < rows) at.push_back(vertical(r, c));        // north
      if (c > 0) at.push_back(horizontal(r, c - 1));     // west
      if (r > 0) at.push_back(vertical(r - 1, c));       // south
    }
  }
  return PlaneGraph{g, embedding_from_rotation(g, rot)};
}

}  // namespace plane

std::vector<NamedPlaneGraph> duality_corpus() {
  std::vector<NamedPlaneGraph> out;
  auto add = [&](std::string name, PlaneGraph pg) { out.push_back({std::move(name), std::move(pg)}); };
  add("digon(+,+)", plane::parallel(2, 0));
  add("digon(+,-)", plane::parallel(2, 1));
  add("digon(-,-)", plane::parallel(2, 2));
  add("triple-edge(+)", plane::parallel(3, 0));
  add("triple-edge(1-)", plane::parallel(3, 1));
  add("triangle(+)", plane::cycle(3, 0));
  add("triangle(1-)", plane::cycle(3, 1));
  add("theta(1,2,2)", plane::theta(1, 2, 2));
  add("theta(1,2,2;e0-)", plane::theta(1, 2, 2, {0}));
  add("theta(2,2,2;e0-)", plane::theta(2, 2, 2, {0}));
  add("theta(1,2,3;e1-,e3-)", plane::theta(1, 2, 3, {1, 3}));
  for (int n = 3; n <= 5; ++n) {
    const std::string w = "W" + std::to_string(n);
    add(w + "(+)", plane::wheel(n));
    add(w + "(spoke-)", plane::wheel(n, {0}));
    add(w + "(rim-)", plane::wheel(n, {n}));
    std::vector<int> all(2 * n);
    for (int e = 0; e < 2 * n; ++e) all[e] = e;
    add(w + "(-)", plane::wheel(n, all));
  }
  add("T2(K4)", plane::t2_k4());
  return out;
}

std::vector<NamedPlaneGraph> folding_corpus() {
  std::vector<NamedPlaneGraph> out;
  auto add = [&](std::string name, PlaneGraph pg) { out.push_back({std::move(name), std::move(pg)}); };
  add("C-2", plane::parallel(2, 1));
  add("C-4", plane::cycle(4, 1));
  add("C-6", plane::cycle(6, 1));
  add("C8(3-)", plane::cycle(8, 3));
  add("C-10", plane::cycle(10, 1));
  add("theta(2,2,2;e2-)", plane::theta(2, 2, 2, {2}));
  add("theta(2,2,4;e4-)", plane::theta(2, 2, 4, {4}));
  add("theta(1,3,3;e0-)", plane::theta(1, 3, 3, {0}));
  add("theta(2,4,4;e2-)", plane::theta(2, 4, 4, {2}));
  add("theta(4,6,6;e0-)", plane::theta(4, 6, 6, {0}));
  add("grid1x3(e0-)", plane::grid(1, 3, {0}));
  add("grid2x2(e0-)", plane::grid(2, 2, {0}));
  add("grid2x2(e1-,e4-)", plane::grid(2, 2, {1, 4}));
  add("grid2x3(e2-,e9-)", plane::grid(2, 3, {2, 9}));
  add("grid3x3(e4-)", plane::grid(3, 3, {4}));
  add("T2(K4)", plane::t2_k4());
  return out;
}

}  // namespace monoflow
