#include "plumb/report.hpp"

#include <functional>

#include "plumb/decision.hpp"
#include "plumb/oracle.hpp"
#include "plumb/presentation.hpp"

namespace plumb {

using nlohmann::ordered_json;

namespace {

ordered_json status_json(const Status& s) {
  ordered_json j;
  j["status"] = std::string(to_string(s.kind));
  if (s.kind == Status::Kind::Finite) j["order"] = s.order.str();
  return j;
}

// "consistent", "inconsistent" or "not comparable" for a claim against an exact oracle order.
std::string compare(const Status& claim, std::size_t exact) {
  switch (claim.kind) {
    case Status::Kind::Finite: return claim.order == exact ? "consistent" : "inconsistent";
    case Status::Kind::NontrivialOrderUnknown: return exact >= 2 ? "consistent" : "inconsistent";
    case Status::Kind::Trivial: return exact == 1 ? "consistent" : "inconsistent";
    case Status::Kind::Infinite: return "inconsistent";
    case Status::Kind::Unknown: return "not comparable";
  }
  return "not comparable";
}

}  // namespace

ordered_json analyze_report(const PlumbingGraph& g, const AnalyzeOptions& opt) {
  ordered_json r;
  r["graph"] = {{"vertices", g.size()},
                {"edges", g.edges().size()},
                {"betti_number", std::max(g.betti_number(), 0)},
                {"canonical_form", g.is_tree() ? ordered_json(canonical_tree_form(g)) : ordered_json(nullptr)}};

  const auto shape = classify_shape(g);
  r["shape"] = {{"kind", std::string(to_string(shape.kind))}, {"rim", nullptr}};
  if (shape.rim) r["shape"]["rim"] = *shape.rim;

  bool has_inf = false;
  for (const auto& v : g.vertices()) has_inf = has_inf || v.self_int.is_inf();
  std::vector<int> non_nef;
  for (const auto& [id, ok] : nef_on_genus_zero(g))
    if (!ok) non_nef.push_back(id);
  const auto min = is_minimal_gnc(g);
  r["flags"] = {{"tree", g.is_tree()},     {"has_inf", has_inf},        {"nef", non_nef.empty()},
                {"non_nef", non_nef},       {"minimal", min.minimal},    {"contractible", min.violating}};

  std::vector<std::pair<std::string, std::function<Verdicts(const PlumbingGraph&)>>> engines;
  if (opt.theorem == "a" || opt.theorem == "auto") engines.push_back({"a", theorem_a});
  if (opt.theorem == "b" || opt.theorem == "auto") engines.push_back({"b", theorem_b});
  if (opt.theorem == "c" || opt.theorem == "auto") engines.push_back({"c", theorem_c});
  if (opt.theorem == "auto") std::reverse(engines.begin(), engines.end());  // c, b, a
  if (engines.empty()) throw Error(ErrorCode::InvalidParameter, "unknown theorem '" + opt.theorem + "'");

  ordered_json errors = ordered_json::array();
  std::optional<Verdicts> verdicts;
  std::string applied;
  for (const auto& [name, run] : engines) {
    try {
      verdicts = run(g);
      applied = name;
      break;
    } catch (const Error& e) {
      errors.push_back({{"theorem", name},
                        {"code", std::string(to_string(e.code()))},
                        {"message", e.what()},
                        {"vertices", e.vertices()}});
    }
  }
  r["theorem"] = {{"requested", opt.theorem}, {"applied", nullptr}, {"errors", errors}};
  if (verdicts) r["theorem"]["applied"] = applied;

  ordered_json vj = ordered_json::array();
  if (verdicts)
    for (const auto& [id, v] : *verdicts) {
      ordered_json one;
      one["vertex"] = id;
      auto s = status_json(v.status);
      for (auto it = s.begin(); it != s.end(); ++it) one[it.key()] = it.value();
      one["trace"] = v.trace;
      vj.push_back(std::move(one));
    }
  r["verdicts"] = vj;

  const auto pres = build_presentation(g);
  r["presentation"] = export_text(pres);

  if (opt.oracle) {
    const EnumLimits lim{opt.max_cosets, opt.max_time};
    const auto table = enumerate_cosets(fp_group(pres), {}, lim);
    ordered_json o;
    o["max_cosets"] = opt.max_cosets;
    ordered_json elems = ordered_json::array();
    if (table.status == CosetTable::Status::Complete) {
      o["group_order"] = table.rows();
      for (const auto& v : g.vertices()) {
        Word w = pres.word(Generator::gamma(v.id));
        std::size_t c = table.act(0, w), k = 1;
        for (; c != 0; ++k) c = table.act(c, w);
        ordered_json e{{"vertex", v.id}, {"order", k}};
        if (verdicts) {
          const auto& claim = verdicts->at(v.id).status;
          e["claimed"] = claim.to_string();
          e["check"] = compare(claim, k);
        }
        elems.push_back(std::move(e));
      }
    } else {
      o["group_order"] = nullptr;
      o["exhausted_at"] = table.high_water;
    }
    o["elements"] = elems;
    r["oracle"] = o;
  }
  return r;
}

std::string render_pretty(const ordered_json& r) {
  std::string s;
  s += "graph: " + std::to_string(r["graph"]["vertices"].get<std::size_t>()) + " vertices, " +
       std::to_string(r["graph"]["edges"].get<std::size_t>()) + " edges, " + r["shape"]["kind"].get<std::string>();
  if (!r["shape"]["rim"].is_null()) s += " (rim " + std::to_string(r["shape"]["rim"].get<int>()) + ")";
  s += "\n";
  const auto& f = r["flags"];
  s += "flags: tree=" + std::string(f["tree"].get<bool>() ? "yes" : "no") +
       " nef=" + (f["nef"].get<bool>() ? "yes" : "no") + " minimal=" + (f["minimal"].get<bool>() ? "yes" : "no") +
       "\n";
  const auto& t = r["theorem"];
  s += "theorem: " + (t["applied"].is_null() ? std::string("none") : t["applied"].get<std::string>()) +
       " (requested " + t["requested"].get<std::string>() + ")\n";
  for (const auto& e : t["errors"])
    s += "  " + e["theorem"].get<std::string>() + ": " + e["code"].get<std::string>() + ": " +
         e["message"].get<std::string>() + "\n";
  for (const auto& v : r["verdicts"]) {
    s += "g" + std::to_string(v["vertex"].get<int>()) + ": " + v["status"].get<std::string>();
    if (v.contains("order")) s += "(" + v["order"].get<std::string>() + ")";
    s += "\n";
    for (const auto& line : v["trace"]) s += "    " + line.get<std::string>() + "\n";
  }
  s += "presentation: " + r["presentation"].get<std::string>() + "\n";
  if (r.contains("oracle")) {
    const auto& o = r["oracle"];
    if (o["group_order"].is_null()) {
      s += "oracle: enumeration exhausted at " + std::to_string(o["exhausted_at"].get<std::size_t>()) + " cosets\n";
    } else {
      s += "oracle: group order " + std::to_string(o["group_order"].get<std::size_t>()) + "\n";
      for (const auto& e : o["elements"]) {
        s += "  g" + std::to_string(e["vertex"].get<int>()) + " order " + std::to_string(e["order"].get<std::size_t>());
        if (e.contains("check")) s += " vs " + e["claimed"].get<std::string>() + ": " + e["check"].get<std::string>();
        s += "\n";
      }
    }
  }
  return s;
}

}  // namespace plumb
