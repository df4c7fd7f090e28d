#include "plumb/graph.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <set>

namespace plumb {

std::int64_t SelfInt::value() const {
  if (infinite_) throw Error(ErrorCode::InfiniteWeight, "self-intersection is INF");
  return value_;
}

std::string SelfInt::to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

PlumbingGraph::PlumbingGraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::stable_sort(vertices_.begin(), vertices_.end(),
                   [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
  for (auto& e : edges_)
    if (e.u > e.v) std::swap(e.u, e.v);
  std::sort(edges_.begin(), edges_.end());
}

bool PlumbingGraph::has_vertex(int id) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), Vertex{id, 0, {}},
                            [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
}

std::size_t PlumbingGraph::index_of(int id) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id,
                             [](const Vertex& a, int key) { return a.id < key; });
  if (it == vertices_.end() || it->id != id)
    throw Error(ErrorCode::NoSuchVertex, "no vertex with id " + std::to_string(id), {id});
  return static_cast<std::size_t>(it - vertices_.begin());
}

const Vertex& PlumbingGraph::vertex(int id) const { return vertices_[index_of(id)]; }

std::vector<int> PlumbingGraph::ids() const {
  std::vector<int> out;
  out.reserve(vertices_.size());
  for (const auto& v : vertices_) out.push_back(v.id);
  return out;
}

int PlumbingGraph::max_id() const { return vertices_.empty() ? 0 : vertices_.back().id; }

std::vector<int> PlumbingGraph::neighbors(int id) const {
  std::vector<int> out;
  for (const auto& e : edges_) {
    if (e.u == id) out.push_back(e.v);
    else if (e.v == id) out.push_back(e.u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int PlumbingGraph::valency(int id) const {
  int n = 0;
  for (const auto& e : edges_) n += (e.u == id) + (e.v == id);
  return n;
}

int PlumbingGraph::edge_multiplicity(int a, int b) const {
  if (a > b) std::swap(a, b);
  return static_cast<int>(std::count(edges_.begin(), edges_.end(), Edge{a, b}));
}

std::vector<std::vector<int>> PlumbingGraph::components() const {
  std::map<int, std::vector<int>> adj;
  for (const auto& v : vertices_) adj[v.id];
  for (const auto& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::set<int> seen;
  std::vector<std::vector<int>> out;
  for (const auto& v : vertices_) {
    if (seen.count(v.id)) continue;
    std::vector<int> comp;
    std::vector<int> stack{v.id};
    seen.insert(v.id);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (int y : adj[x])
        if (seen.insert(y).second) stack.push_back(y);
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool PlumbingGraph::is_connected() const { return components().size() <= 1; }

int PlumbingGraph::betti_number() const {
  return static_cast<int>(edges_.size()) - static_cast<int>(vertices_.size()) +
         static_cast<int>(components().size());
}

PlumbingGraph PlumbingGraph::induced(const std::vector<int>& ids) const {
  std::set<int> keep(ids.begin(), ids.end());
  std::vector<Vertex> vs;
  for (const auto& v : vertices_)
    if (keep.count(v.id)) vs.push_back(v);
  std::vector<Edge> es;
  for (const auto& e : edges_)
    if (keep.count(e.u) && keep.count(e.v)) es.push_back(e);
  return PlumbingGraph(std::move(vs), std::move(es));
}

PlumbingGraph validate(const PlumbingGraph& raw) {
  const auto& vs = raw.vertices();
  for (std::size_t i = 1; i < vs.size(); ++i)
    if (vs[i].id == vs[i - 1].id)
      throw Error(ErrorCode::DuplicateId, "duplicate vertex id " + std::to_string(vs[i].id), {vs[i].id});
  for (const auto& v : vs)
    if (v.genus < 0)
      throw Error(ErrorCode::NegativeGenus, "vertex " + std::to_string(v.id) + " has negative genus", {v.id});
  for (const auto& e : raw.edges()) {
    if (e.u == e.v)
      throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(e.u), {e.u});
    for (int end : {e.u, e.v})
      if (!raw.has_vertex(end))
        throw Error(ErrorCode::DanglingEdge,
                    "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") names missing vertex " +
                        std::to_string(end),
                    {end});
  }
  auto comps = raw.components();
  if (comps.size() > 1) {
    std::vector<int> firsts;
    for (const auto& c : comps) firsts.push_back(c.front());
    throw Error(ErrorCode::Disconnected,
                "graph has " + std::to_string(comps.size()) + " components; vertex " +
                    std::to_string(comps[1].front()) + " is not reachable from " + std::to_string(comps[0].front()),
                firsts);
  }
  return raw;
}

std::string_view to_string(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::LinearTree: return "LinearTree";
    case ShapeKind::Comb: return "Comb";
    case ShapeKind::GeneralTree: return "GeneralTree";
    case ShapeKind::HasCycles: return "HasCycles";
  }
  return "?";
}

GraphShape classify_shape(const PlumbingGraph& g) {
  GraphShape s;
  std::vector<int> branch;
  for (const auto& v : g.vertices()) {
    const int val = g.valency(v.id);
    s.valency[v.id] = val;
    if (val >= 3) branch.push_back(v.id);
  }
  if (g.betti_number() > 0) {
    s.kind = ShapeKind::HasCycles;
  } else if (branch.empty()) {
    s.kind = ShapeKind::LinearTree;
  } else if (branch.size() == 1) {
    s.kind = ShapeKind::Comb;
    s.rim = branch.front();
  } else {
    s.kind = ShapeKind::GeneralTree;
  }
  return s;
}

IntMatrix intersection_matrix(const PlumbingGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.size());
  IntMatrix M = IntMatrix::Constant(n, n, BigInt(0));
  for (const auto& v : g.vertices()) {
    if (v.self_int.is_inf())
      throw Error(ErrorCode::InfiniteWeight, "vertex " + std::to_string(v.id) + " has INF self-intersection", {v.id});
    const auto i = static_cast<Eigen::Index>(g.index_of(v.id));
    M(i, i) = v.self_int.value();
  }
  for (const auto& e : g.edges()) {
    const auto i = static_cast<Eigen::Index>(g.index_of(e.u));
    const auto j = static_cast<Eigen::Index>(g.index_of(e.v));
    M(i, j) += 1;
    M(j, i) += 1;
  }
  return M;
}

std::map<int, bool> nef_on_genus_zero(const PlumbingGraph& g) {
  std::map<int, bool> out;
  for (const auto& v : g.vertices())
    out[v.id] = v.genus >= 1 || v.self_int.is_inf() || v.self_int.value() <= -2;
  return out;
}

MinimalityReport is_minimal_gnc(const PlumbingGraph& g) {
  MinimalityReport r;
  for (const auto& v : g.vertices()) {
    if (v.genus != 0 || v.self_int.is_inf() || v.self_int.value() != -1) continue;
    if (g.valency(v.id) > 2) continue;
    const auto nb = g.neighbors(v.id);
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) continue;  // meets a curve twice
    r.violating.push_back(v.id);
  }
  r.minimal = r.violating.empty();
  return r;
}

std::vector<int> path_order(const PlumbingGraph& g) {
  if (g.empty()) return {};
  int start = g.vertices().front().id;
  for (const auto& v : g.vertices())
    if (g.valency(v.id) <= 1) {
      start = v.id;
      break;
    }
  constexpr int none = std::numeric_limits<int>::min();
  std::vector<int> order{start};
  int prev = none, cur = start;
  for (;;) {
    int next = none;
    for (int n : g.neighbors(cur))
      if (n != prev) {
        next = n;
        break;
      }
    if (next == none || std::find(order.begin(), order.end(), next) != order.end()) break;
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return order;
}

std::string canonical_tree_form(const PlumbingGraph& g) {
  if (g.empty()) return "()";
  std::function<std::string(int, int)> encode = [&](int v, int parent) {
    const auto& vx = g.vertex(v);
    std::vector<std::string> kids;
    for (int n : g.neighbors(v))
      if (n != parent) kids.push_back(encode(n, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(" + std::to_string(vx.genus) + ":" + vx.self_int.to_string();
    for (auto& k : kids) s += k;
    return s + ")";
  };
  std::string best;
  for (const auto& v : g.vertices()) {
    auto s = encode(v.id, std::numeric_limits<int>::min());
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

}  // namespace plumb
