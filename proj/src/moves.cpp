#include "plumb/moves.hpp"

#include <algorithm>

namespace plumb {

namespace {

SelfInt shifted(SelfInt s, std::int64_t delta) {
  return s.is_inf() ? s : SelfInt(s.value() + delta);
}

void require_finite(const PlumbingGraph& g, int id) {
  if (g.vertex(id).self_int.is_inf())
    throw Error(ErrorCode::InfiniteWeight, "vertex " + std::to_string(id) + " has INF self-intersection", {id});
}

}  // namespace

std::string to_string(const MoveRecord& m) {
  switch (m.kind) {
    case MoveKind::BlowUpEdge:
      return "blowup-edge " + std::to_string(m.edge.u) + " " + std::to_string(m.edge.v) + " -> " +
             std::to_string(m.vertex);
    case MoveKind::BlowUpPoint:
      return "blowup-point " + std::to_string(m.edge.u) + " -> " + std::to_string(m.vertex);
    case MoveKind::BlowDown:
      return "blowdown " + std::to_string(m.vertex) + (m.multi_edge ? " (multi-edge)" : "");
  }
  return "?";
}

MoveResult blow_up_edge(const PlumbingGraph& g, Edge e) {
  if (e.u > e.v) std::swap(e.u, e.v);
  auto edges = g.edges();
  auto it = std::find(edges.begin(), edges.end(), e);
  if (it == edges.end())
    throw Error(ErrorCode::NoSuchEdge, "no edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")",
                {e.u, e.v});
  require_finite(g, e.u);
  require_finite(g, e.v);
  edges.erase(it);
  const int fresh = g.max_id() + 1;
  edges.push_back({e.u, fresh});
  edges.push_back({e.v, fresh});
  auto vs = g.vertices();
  for (auto& v : vs)
    if (v.id == e.u || v.id == e.v) v.self_int = shifted(v.self_int, -1);
  vs.push_back({fresh, 0, SelfInt(-1)});
  return {PlumbingGraph(std::move(vs), std::move(edges)), {MoveKind::BlowUpEdge, e, fresh, false}};
}

MoveResult blow_up_point(const PlumbingGraph& g, int id) {
  g.index_of(id);
  require_finite(g, id);
  const int fresh = g.max_id() + 1;
  auto vs = g.vertices();
  for (auto& v : vs)
    if (v.id == id) v.self_int = shifted(v.self_int, -1);
  vs.push_back({fresh, 0, SelfInt(-1)});
  auto edges = g.edges();
  edges.push_back({id, fresh});
  return {PlumbingGraph(std::move(vs), std::move(edges)), {MoveKind::BlowUpPoint, {id, fresh}, fresh, false}};
}

namespace {

bool contractible(const PlumbingGraph& g, const Vertex& v) {
  if (v.genus != 0 || v.self_int.is_inf() || v.self_int.value() != -1) return false;
  if (g.valency(v.id) > 2) return false;
  const auto nb = g.neighbors(v.id);
  return std::adjacent_find(nb.begin(), nb.end()) == nb.end();
}

}  // namespace

std::vector<int> contractible_vertices(const PlumbingGraph& g) {
  std::vector<int> out;
  for (const auto& v : g.vertices())
    if (contractible(g, v)) out.push_back(v.id);
  return out;
}

MoveResult blow_down(const PlumbingGraph& g, int id) {
  const auto& target = g.vertex(id);
  if (!contractible(g, target))
    throw Error(ErrorCode::NotContractible,
                "vertex " + std::to_string(id) + " (genus " + std::to_string(target.genus) + ", self-intersection " +
                    target.self_int.to_string() + ", valency " + std::to_string(g.valency(id)) +
                    ") is not a contractible rational (-1)-curve",
                {id});
  const auto nb = g.neighbors(id);
  std::vector<Vertex> vs;
  for (const auto& v : g.vertices()) {
    if (v.id == id) continue;
    Vertex w = v;
    if (std::find(nb.begin(), nb.end(), v.id) != nb.end()) w.self_int = shifted(w.self_int, +1);
    vs.push_back(w);
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    if (e.u != id && e.v != id) edges.push_back(e);
  bool multi = false;
  if (nb.size() == 2) {
    multi = g.edge_multiplicity(nb[0], nb[1]) > 0;
    edges.push_back({nb[0], nb[1]});
  }
  return {PlumbingGraph(std::move(vs), std::move(edges)), {MoveKind::BlowDown, {}, id, multi}};
}

BlowDownSequence full_blow_down(const PlumbingGraph& g) {
  return full_blow_down(g, [](std::span<const int> eligible) { return eligible.front(); });
}

BlowDownSequence full_blow_down(const PlumbingGraph& g, const ContractionChoice& choose) {
  BlowDownSequence out{g, {}};
  for (;;) {
    const auto eligible = contractible_vertices(out.graph);
    if (eligible.empty()) return out;
    const int pick = choose(eligible);
    auto step = blow_down(out.graph, pick);
    if (step.record.multi_edge)
      throw Error(ErrorCode::MultiEdgeCreated,
                  "contracting vertex " + std::to_string(pick) + " would create a multi-edge", {pick});
    out.graph = std::move(step.graph);
    out.moves.push_back(step.record);
  }
}

PlumbingGraph replay(const PlumbingGraph& g, std::span<const MoveRecord> moves) {
  PlumbingGraph cur = g;
  for (const auto& m : moves) {
    switch (m.kind) {
      case MoveKind::BlowUpEdge: cur = blow_up_edge(cur, m.edge).graph; break;
      case MoveKind::BlowUpPoint: cur = blow_up_point(cur, m.edge.u).graph; break;
      case MoveKind::BlowDown: cur = blow_down(cur, m.vertex).graph; break;
    }
  }
  return cur;
}

}  // namespace plumb
