#include "plumb/decision.hpp"

#include <algorithm>

#include "plumb/chain.hpp"
#include "plumb/comb.hpp"
#include "plumb/moves.hpp"
#include "plumb/presentation.hpp"

namespace plumb {

std::string_view to_string(Status::Kind k) {
  switch (k) {
    case Status::Kind::Trivial: return "Trivial";
    case Status::Kind::NontrivialOrderUnknown: return "NontrivialOrderUnknown";
    case Status::Kind::Finite: return "Finite";
    case Status::Kind::Infinite: return "Infinite";
    case Status::Kind::Unknown: return "Unknown";
  }
  return "?";
}

std::string Status::to_string() const {
  if (kind == Kind::Finite) return "Finite(" + order.str() + ")";
  return std::string(plumb::to_string(kind));
}

namespace {

std::string ids_text(const std::vector<int>& ids) {
  std::string s = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? "," : "") + std::to_string(ids[i]);
  return s + "}";
}

template <typename T>
std::string list_text(const std::vector<T>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ",";
    if constexpr (std::is_same_v<T, BigInt>) s += xs[i].str();
    else s += std::to_string(xs[i]);
  }
  return s + ")";
}

void require_tree(const PlumbingGraph& g) {
  if (!g.is_tree())
    throw Error(ErrorCode::NotATree, "graph has " + std::to_string(g.components().size()) + " component(s) and " +
                                         std::to_string(std::max(g.betti_number(), 0)) + " independent cycle(s)");
}

void require_finite_weights(const PlumbingGraph& g) {
  for (const auto& v : g.vertices())
    if (v.self_int.is_inf())
      throw Error(ErrorCode::InfiniteWeight, "vertex " + std::to_string(v.id) + " has INF self-intersection", {v.id});
}

void require_nef(const PlumbingGraph& g) {
  std::vector<int> bad;
  for (const auto& [id, ok] : nef_on_genus_zero(g))
    if (!ok) bad.push_back(id);
  if (!bad.empty())
    throw Error(ErrorCode::HypothesisViolated,
                "rational curves " + ids_text(bad) + " have self-intersection > -2", bad);
}

struct Local {
  Status status;
  std::vector<std::string> trace;
};

using LocalMap = std::map<int, Local>;

bool nontrivial(const Status& s) {
  return s.kind == Status::Kind::Finite || s.kind == Status::Kind::Infinite ||
         s.kind == Status::Kind::NontrivialOrderUnknown;
}

LocalMap solve(const PlumbingGraph& g);

// Status of i through the quotient g / <<g_j>>, in which the component of i
// embeds when j has valency >= 3 and every boundary generator is nontrivial.
Local through_decomposition(const PlumbingGraph& g, int i, int j) {
  const auto dec = decompose_at(g, j);
  std::vector<std::string> trace{"decomposition: remove " + std::to_string(j) + " (valency " +
                                 std::to_string(dec.components.size()) + ")"};
  std::optional<Local> mine;
  bool boundaries_ok = true;
  for (std::size_t h = 0; h < dec.components.size(); ++h) {
    const auto& comp = dec.components[h];
    const auto sub = solve(comp);
    const auto& bd = sub.at(dec.boundary[h]);
    trace.push_back("  component " + ids_text(comp.ids()) + ", boundary " + std::to_string(dec.boundary[h]) + ": " +
                    bd.status.to_string());
    if (!nontrivial(bd.status)) boundaries_ok = false;
    if (comp.has_vertex(i)) {
      mine = sub.at(i);
      for (const auto& line : mine->trace) trace.push_back("    " + line);
    }
  }
  if (!boundaries_ok || !mine) {
    trace.push_back("boundary generators not all shown nontrivial; nontrivial by the main theorem");
    return {Status::of(Status::Kind::NontrivialOrderUnknown), std::move(trace)};
  }
  const Status& s = mine->status;
  switch (s.kind) {
    case Status::Kind::Infinite:
      trace.push_back("infinite order in the quotient, hence infinite");
      return {s, std::move(trace)};
    case Status::Kind::Finite:
      trace.push_back("order " + s.order.str() + " in the quotient; order is a multiple of " + s.order.str());
      return {Status::of(Status::Kind::NontrivialOrderUnknown), std::move(trace)};
    case Status::Kind::NontrivialOrderUnknown:
      trace.push_back("nontrivial in the quotient, hence nontrivial");
      return {s, std::move(trace)};
    default:
      trace.push_back("not decided in the component; nontrivial by the main theorem");
      return {Status::of(Status::Kind::NontrivialOrderUnknown), std::move(trace)};
  }
}

LocalMap solve_linear(const PlumbingGraph& g) {
  const auto order = path_order(g);
  std::vector<std::int64_t> m;
  for (int id : order) m.push_back(g.vertex(id).self_int.m());
  const auto data = chain_sequence(m);
  LocalMap out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto o = gamma_order_in_chain(m, i + 1);
    Status s = o.kind == Order::Kind::Finite    ? Status::finite(o.value)
               : o.kind == Order::Kind::Trivial ? Status::of(Status::Kind::Trivial)
                                                : Status::of(Status::Kind::Infinite);
    out[order[i]] = {s,
                     {"chain-recurrence: path " + list_text(order) + ", weights " + list_text(m) + ", a = " +
                      list_text(data.a) + "; g" + std::to_string(order[i]) + " = g" + std::to_string(order[0]) + "^" +
                      data.a[i].str() + " in a cyclic group of order " + abs(data.group_order()).str() + ": " +
                      s.to_string()}};
  }
  return out;
}

LocalMap solve_comb(const PlumbingGraph& g, int rim) {
  LocalMap out;
  Local rim_local;
  try {
    const auto params = comb_params_from_graph(g, rim);
    const auto cv = classify(params);
    for (const auto& line : cv.trace) rim_local.trace.push_back("rim-classifier: " + line);
    switch (cv.gamma.kind) {
      case GammaStatus::Kind::Infinite: rim_local.status = Status::of(Status::Kind::Infinite); break;
      case GammaStatus::Kind::Finite: rim_local.status = Status::finite(cv.gamma.value); break;
      case GammaStatus::Kind::NontrivialOrderAtLeast:
        rim_local.status = Status::of(Status::Kind::NontrivialOrderUnknown);
        rim_local.trace.push_back("rim-status: nontrivial, order at least " + cv.gamma.value.str() + "; reported as NontrivialOrderUnknown");
        break;
      case GammaStatus::Kind::Unknown: rim_local.status = Status::of(Status::Kind::Unknown); break;
    }
  } catch (const Error& e) {
    rim_local = {Status::of(Status::Kind::Unknown), {"rim-classifier: " + std::string(e.what())}};
  }
  const bool rim_infinite = rim_local.status.kind == Status::Kind::Infinite;
  out[rim] = rim_local;
  for (const auto& s : comb_strings(g, rim))
    for (int id : s) {
      if (rim_infinite)
        out[id] = {Status::of(Status::Kind::Infinite),
                   {"string-power: g" + std::to_string(rim) + " and g" + std::to_string(id) +
                    " are nonzero powers of the far-end generator of string " + list_text(s) +
                    "; the rim has infinite order, so does g" + std::to_string(id)}};
      else
        out[id] = through_decomposition(g, id, rim);
    }
  return out;
}

LocalMap solve(const PlumbingGraph& g) {
  if (g.empty()) return {};
  const auto shape = classify_shape(g);
  switch (shape.kind) {
    case ShapeKind::LinearTree: return solve_linear(g);
    case ShapeKind::Comb: return solve_comb(g, *shape.rim);
    case ShapeKind::GeneralTree: {
      std::vector<int> branch;
      for (const auto& [id, val] : shape.valency)
        if (val >= 3) branch.push_back(id);
      LocalMap out;
      for (int i : g.ids()) {
        const int j = branch[0] != i ? branch[0] : branch[1];
        out[i] = through_decomposition(g, i, j);
      }
      return out;
    }
    case ShapeKind::HasCycles: break;
  }
  throw Error(ErrorCode::NotATree, "graph has cycles");
}

struct Prepared {
  PlumbingGraph graph;
  bool had_genus = false;
  bool weight_changed = false;
  std::vector<std::string> notes;
};

Prepared prepare(const PlumbingGraph& g) {
  Prepared p{simplify_genus(g), false, false, {}};
  std::vector<int> capped;
  for (const auto& v : g.vertices()) {
    if (v.genus > 1) capped.push_back(v.id);
    if (v.genus > 0) p.had_genus = true;
  }
  if (!capped.empty()) p.notes.push_back("genus-simplification: genus capped at 1 on " + ids_text(capped));
  for (const auto& v : g.vertices()) {
    if (v.genus == 0) continue;
    const std::int64_t m = v.self_int.m();
    const SelfInt w(-std::max<std::int64_t>(2, m));
    if (w != v.self_int) p.weight_changed = true;
    p.graph = replace_elliptic(p.graph, v.id, w);
    p.notes.push_back("elliptic-replacement: curve " + std::to_string(v.id) + " made rational with self-intersection " +
                      w.to_string());
  }
  return p;
}

Verdicts run_engine(const PlumbingGraph& g, const std::string& theorem) {
  const auto prep = prepare(g);
  const auto local = solve(prep.graph);
  Verdicts out;
  for (const auto& [id, l] : local) {
    GammaVerdict v{id, l.status, {theorem}};
    v.trace.insert(v.trace.end(), prep.notes.begin(), prep.notes.end());
    v.trace.insert(v.trace.end(), l.trace.begin(), l.trace.end());
    auto& s = v.status;
    if (prep.had_genus && prep.weight_changed &&
        (s.kind == Status::Kind::Finite || s.kind == Status::Kind::Infinite)) {
      v.trace.push_back("a weight changed in elliptic replacement; only nontriviality transfers");
      s = Status::of(Status::Kind::NontrivialOrderUnknown);
    } else if (prep.had_genus && s.kind == Status::Kind::Finite) {
      v.trace.push_back("genus reduction is a quotient; order is a multiple of " + s.order.str());
      s = Status::of(Status::Kind::NontrivialOrderUnknown);
    }
    if (s.kind == Status::Kind::Trivial) {
      v.trace.push_back("internal-error: engine derived Trivial under the theorem's hypotheses");
      s = Status::of(Status::Kind::NontrivialOrderUnknown);
    } else if (s.kind == Status::Kind::Unknown) {
      v.trace.push_back("nontrivial by the main theorem");
      s = Status::of(Status::Kind::NontrivialOrderUnknown);
    }
    out[id] = std::move(v);
  }
  return out;
}

void check_a(const PlumbingGraph& g) {
  require_tree(g);
  require_finite_weights(g);
  require_nef(g);
}

}  // namespace

Decomposition decompose_at(const PlumbingGraph& g, int j) {
  require_tree(g);
  g.index_of(j);
  const int val = g.valency(j);
  if (val < 3)
    throw Error(ErrorCode::ValencyTooLow, "vertex " + std::to_string(j) + " has valency " + std::to_string(val) + " < 3",
                {j});
  std::vector<int> rest;
  for (int id : g.ids())
    if (id != j) rest.push_back(id);
  const auto minus = g.induced(rest);
  Decomposition d{j, {}, {}};
  const auto comps = minus.components();
  for (int n : g.neighbors(j))
    for (const auto& c : comps)
      if (std::binary_search(c.begin(), c.end(), n)) {
        d.components.push_back(g.induced(c));
        d.boundary.push_back(n);
      }
  return d;
}

Verdicts theorem_a(const PlumbingGraph& g) {
  check_a(g);
  return run_engine(g, "theorem-a: tree, rational curves of self-intersection <= -2");
}

Verdicts theorem_b(const PlumbingGraph& g) {
  require_tree(g);
  require_finite_weights(g);
  const auto min = is_minimal_gnc(g);
  if (!min.minimal)
    throw Error(ErrorCode::NotMinimal, "contractible (-1)-curves " + ids_text(min.violating), min.violating);
  std::vector<int> bad;
  for (const auto& v : g.vertices())
    if (v.genus == 0 && v.self_int.value() > -1) bad.push_back(v.id);
  std::string hypothesis = "theorem-b: minimal tree, rational curves of self-intersection <= -1";
  if (!bad.empty()) {
    const auto down = full_blow_down(g);
    bool nef = true;
    for (const auto& [id, ok] : nef_on_genus_zero(down.graph)) nef = nef && ok;
    if (!nef)
      throw Error(ErrorCode::HypothesisViolated,
                  "rational curves " + ids_text(bad) + " have self-intersection >= 0 and the contracted graph is not nef",
                  bad);
    hypothesis = "theorem-b: minimal tree, nef after contracting (-1)-curves";
  }
  return run_engine(g, hypothesis);
}

ElementaryCheck is_elementary_infinite(const PlumbingGraph& g) {
  if (g.empty()) return {false, "empty graph"};
  if (!g.is_tree()) return {false, "not a tree"};
  const auto shape = classify_shape(g);
  std::vector<int> positive;
  for (const auto& v : g.vertices())
    if (v.genus >= 1) positive.push_back(v.id);
  if (shape.kind == ShapeKind::LinearTree) {
    if (!positive.empty()) return {true, "linear with positive-genus curves " + ids_text(positive)};
    return {false, "linear and all curves rational"};
  }
  if (shape.kind != ShapeKind::Comb) return {false, "not linear and not a comb"};
  if (!positive.empty()) return {true, "comb with positive-genus curves " + ids_text(positive)};
  try {
    const auto cv = classify(comb_params_from_graph(g, *shape.rim));
    if (cv.gamma.kind == GammaStatus::Kind::Infinite)
      return {true, "rational comb, rim " + std::to_string(*shape.rim) + " classifies Infinite"};
    return {false, "rational comb, rim classifies " + cv.gamma.to_string() +
                       (cv.exceptional.kind != Exceptional::Kind::None ? " " + cv.exceptional.to_string() : "")};
  } catch (const Error& e) {
    return {false, e.what()};
  }
}

namespace {

class CertificateSearch {
 public:
  CertificateSearch(const PlumbingGraph& g, std::size_t budget) : g_(g), budget_(budget) {}

  std::optional<std::vector<int>> solve(const std::vector<int>& comp) {
    if (auto it = memo_.find(comp); it != memo_.end()) return it->second;
    if (++states_ > budget_) return std::nullopt;
    const auto sub = g_.induced(comp);
    std::optional<std::vector<int>> result;
    if (is_elementary_infinite(sub).infinite) {
      result = std::vector<int>{};
    } else {
      std::vector<int> cand;
      for (int v : comp)
        if (sub.valency(v) >= 2) cand.push_back(v);
      std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) { return sub.valency(a) > sub.valency(b); });
      for (int v : cand) {
        std::vector<int> rest;
        for (int x : comp)
          if (x != v) rest.push_back(x);
        std::vector<int> seq{v};
        bool ok = true;
        for (const auto& c : sub.induced(rest).components()) {
          auto s = solve(c);
          if (!s) {
            ok = false;
            break;
          }
          seq.insert(seq.end(), s->begin(), s->end());
        }
        if (ok) {
          result = std::move(seq);
          break;
        }
      }
    }
    if (states_ <= budget_) memo_[comp] = result;
    return result;
  }

 private:
  const PlumbingGraph& g_;
  std::size_t budget_;
  std::size_t states_ = 0;
  std::map<std::vector<int>, std::optional<std::vector<int>>> memo_;
};

// Applies the removals; nullopt if one is illegal.
std::optional<std::vector<std::vector<int>>> apply_removals(const PlumbingGraph& g, const std::vector<int>& removed) {
  std::vector<std::vector<int>> pieces{g.ids()};
  for (int v : removed) {
    auto it = std::find_if(pieces.begin(), pieces.end(),
                           [&](const auto& p) { return std::binary_search(p.begin(), p.end(), v); });
    if (it == pieces.end()) return std::nullopt;
    const auto sub = g.induced(*it);
    if (sub.valency(v) < 2) return std::nullopt;
    std::vector<int> rest;
    for (int x : *it)
      if (x != v) rest.push_back(x);
    pieces.erase(it);
    for (auto& c : sub.induced(rest).components()) pieces.push_back(std::move(c));
  }
  std::sort(pieces.begin(), pieces.end());
  return pieces;
}

}  // namespace

std::optional<RemovalCertificate> find_removal_certificate(const PlumbingGraph& g, std::size_t max_states) {
  if (g.empty() || !g.is_tree()) return std::nullopt;
  CertificateSearch search(g, max_states);
  auto seq = search.solve(g.ids());
  if (!seq) return std::nullopt;
  auto pieces = apply_removals(g, *seq);
  if (!pieces) return std::nullopt;
  return RemovalCertificate{std::move(*seq), std::move(*pieces)};
}

bool replay_certificate(const PlumbingGraph& g, const RemovalCertificate& cert) {
  const auto pieces = apply_removals(g, cert.removed);
  if (!pieces || *pieces != cert.pieces) return false;
  return std::all_of(pieces->begin(), pieces->end(),
                     [&](const auto& p) { return is_elementary_infinite(g.induced(p)).infinite; });
}

Verdicts theorem_c(const PlumbingGraph& g) {
  check_a(g);
  const auto cert = find_removal_certificate(g);
  if (!cert) {
    auto out = theorem_a(g);
    for (auto& [id, v] : out) v.trace.insert(v.trace.begin(), "theorem-c: no removal certificate; using theorem a");
    return out;
  }
  std::vector<std::string> trace{"theorem-c: tree, rational curves of self-intersection <= -2"};
  std::vector<std::vector<int>> pieces{g.ids()};
  for (int v : cert->removed) {
    const auto it = std::find_if(pieces.begin(), pieces.end(),
                                 [&](const auto& p) { return std::binary_search(p.begin(), p.end(), v); });
    const auto sub = g.induced(*it);
    const int val = sub.valency(v);
    trace.push_back("removal-certificate: remove " + std::to_string(v) + " (meets " + std::to_string(val) +
                    " curves)");
    std::vector<int> rest;
    for (int x : *it)
      if (x != v) rest.push_back(x);
    pieces.erase(it);
    for (auto& c : sub.induced(rest).components()) pieces.push_back(std::move(c));
  }
  bool positive_genus = false;
  for (const auto& p : cert->pieces) {
    const auto sub = g.induced(p);
    trace.push_back("elementary-infinite: " + ids_text(p) + ": " + is_elementary_infinite(sub).reason);
    for (const auto& v : sub.vertices()) positive_genus = positive_genus || v.genus > 0;
  }
  if (positive_genus)
    trace.push_back("positive-genus curves taken with self-intersection INF (main relation dropped) in the reduction");
  Verdicts out;
  for (int id : g.ids()) out[id] = {id, Status::of(Status::Kind::Infinite), trace};
  return out;
}

}  // namespace plumb
