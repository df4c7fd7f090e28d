#include "plumb/presentation.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace plumb {

std::string name(const Generator& g) {
  switch (g.kind) {
    case GenKind::Gamma: return "g" + std::to_string(g.i);
    case GenKind::Lambda: {
      std::string s = "l" + std::to_string(g.i) + "_" + std::to_string(g.j);
      if (g.h > 1) s += "_" + std::to_string(g.h);
      return s;
    }
    case GenKind::A: return "a" + std::to_string(g.i) + "_" + std::to_string(g.h);
    case GenKind::B: return "b" + std::to_string(g.i) + "_" + std::to_string(g.h);
  }
  return "?";
}

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (const auto& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp) out.pop_back();
    else out.push_back(l);
  }
  return out;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l.exp = -l.exp;
  return out;
}

Word power(const Word& w, long long k) {
  const Word base = k < 0 ? inverse(w) : w;
  Word out;
  for (long long i = 0; i < (k < 0 ? -k : k); ++i) out.insert(out.end(), base.begin(), base.end());
  return free_reduce(std::move(out));
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(std::move(out));
}

Word commutator(const Word& x, const Word& y) { return concat(concat(x, y), concat(inverse(x), inverse(y))); }

std::vector<Word> Presentation::relator_words() const {
  std::vector<Word> out;
  out.reserve(relators_.size());
  for (const auto& r : relators_) out.push_back(r.word);
  return out;
}

int Presentation::index_of(const Generator& g) const {
  auto it = std::lower_bound(generators_.begin(), generators_.end(), g);
  if (it == generators_.end() || *it != g) {
    // generators built by hand need not be sorted
    it = std::find(generators_.begin(), generators_.end(), g);
    if (it == generators_.end()) throw Error(ErrorCode::UnknownGenerator, "no generator " + name(g));
  }
  return static_cast<int>(it - generators_.begin());
}

bool Presentation::contains(const Generator& g) const {
  return std::find(generators_.begin(), generators_.end(), g) != generators_.end();
}

namespace {

Word expand(const std::vector<Factor>& display) {
  Word w;
  for (const auto& f : display) {
    if (f.commutator) w = concat(w, commutator({Letter{f.x, 1}}, {Letter{f.y, 1}}));
    else w = concat(w, power({Letter{f.x, 1}}, f.exp));
  }
  return w;
}

std::vector<Factor> powers_of(const Word& w) {
  std::vector<Factor> out;
  for (const auto& l : w) {
    if (!out.empty() && out.back().x == l.gen && (out.back().exp > 0) == (l.exp > 0)) out.back().exp += l.exp;
    else out.push_back(Factor{false, l.gen, 0, l.exp});
  }
  return out;
}

std::optional<Relator> make_relator(Provenance prov, std::vector<Factor> display) {
  Word w = expand(display);
  if (w.empty()) return std::nullopt;
  // keep the structured spelling only when it is already reduced
  Word literal;
  for (const auto& f : display) {
    if (f.commutator) {
      for (auto l : {Letter{f.x, 1}, Letter{f.y, 1}, Letter{f.x, -1}, Letter{f.y, -1}}) literal.push_back(l);
    } else {
      for (long long k = 0; k < (f.exp < 0 ? -f.exp : f.exp); ++k) literal.push_back({f.x, f.exp < 0 ? -1 : 1});
    }
  }
  if (literal != w) display = powers_of(w);
  return Relator{prov, std::move(w), std::move(display)};
}

}  // namespace

Presentation build_presentation(const PlumbingGraph& g) {
  const auto& edges = g.edges();

  // spanning tree
  std::vector<bool> in_tree(edges.size(), false);
  if (!g.empty()) {
    std::set<int> seen{g.vertices().front().id};
    std::queue<int> todo;
    todo.push(g.vertices().front().id);
    while (!todo.empty()) {
      const int u = todo.front();
      todo.pop();
      for (std::size_t k = 0; k < edges.size(); ++k) {
        const auto& e = edges[k];
        if (e.u != u && e.v != u) continue;
        const int other = e.u == u ? e.v : e.u;
        if (seen.insert(other).second) {
          in_tree[k] = true;
          todo.push(other);
        }
      }
    }
  }

  std::vector<Generator> gens;
  for (const auto& v : g.vertices()) gens.push_back(Generator::gamma(v.id));
  std::vector<Generator> edge_lambda(edges.size());
  std::map<std::pair<int, int>, int> copies;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (in_tree[k]) continue;
    const int n = ++copies[{edges[k].u, edges[k].v}];
    edge_lambda[k] = Generator::lambda(edges[k].u, edges[k].v, n);
    gens.push_back(edge_lambda[k]);
  }
  for (const auto& v : g.vertices())
    for (int h = 1; h <= v.genus; ++h) {
      gens.push_back(Generator::a(v.id, h));
      gens.push_back(Generator::b(v.id, h));
    }
  std::sort(gens.begin(), gens.end());
  const Presentation index(gens, {});
  auto at = [&](const Generator& x) { return index.index_of(x); };

  // g_ij^sign seen from endpoint `from` of edge k, as display factors
  auto gamma_across = [&](std::size_t k, int from, int sign) {
    const auto& e = edges[k];
    const int to = e.u == from ? e.v : e.u;
    const int gj = at(Generator::gamma(to));
    if (in_tree[k]) return std::vector<Factor>{{false, gj, 0, sign}};
    const int lam = at(edge_lambda[k]);
    const int s = e.u == from ? 1 : -1;  // lambda_ji = lambda_ij^-1
    return std::vector<Factor>{{false, lam, 0, s}, {false, gj, 0, sign}, {false, lam, 0, -s}};
  };

  std::vector<Relator> rels;
  auto push = [&](std::optional<Relator> r) {
    if (r) rels.push_back(std::move(*r));
  };

  for (const auto& v : g.vertices()) {
    const int gi = at(Generator::gamma(v.id));
    for (int h = 1; h <= v.genus; ++h) {
      push(make_relator({RelatorKind::GlobalCommutation, v.id, h}, {{true, at(Generator::a(v.id, h)), gi, 1}}));
      push(make_relator({RelatorKind::GlobalCommutation, v.id, h}, {{true, gi, at(Generator::b(v.id, h)), 1}}));
    }
  }

  for (const auto& v : g.vertices()) {
    if (v.self_int.is_inf()) continue;
    const int gi = at(Generator::gamma(v.id));
    std::vector<Factor> display;
    for (int h = 1; h <= v.genus; ++h)
      display.push_back({true, at(Generator::a(v.id, h)), at(Generator::b(v.id, h)), 1});
    std::vector<std::pair<int, std::size_t>> incident;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if (edges[k].u == v.id) incident.push_back({edges[k].v, k});
      else if (edges[k].v == v.id) incident.push_back({edges[k].u, k});
    }
    std::sort(incident.begin(), incident.end());
    for (const auto& [nb, k] : incident) {
      auto f = gamma_across(k, v.id, -1);
      display.insert(display.end(), f.begin(), f.end());
    }
    const auto m = v.self_int.m();
    if (m != 0) display.push_back({false, gi, 0, m});
    push(make_relator({RelatorKind::Main, v.id, 0}, std::move(display)));
  }

  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto& e = edges[k];
    const int gi = at(Generator::gamma(e.u));
    if (in_tree[k]) {
      push(make_relator({RelatorKind::LocalCommutation, e.u, e.v}, {{true, gi, at(Generator::gamma(e.v)), 1}}));
      continue;
    }
    Word conj = expand(gamma_across(k, e.u, 1));
    Word w = commutator({Letter{gi, 1}}, conj);
    push(make_relator({RelatorKind::LocalCommutation, e.u, e.v}, powers_of(w)));
  }

  return Presentation(std::move(gens), std::move(rels));
}

PlumbingGraph simplify_genus(const PlumbingGraph& g) {
  auto vs = g.vertices();
  for (auto& v : vs) v.genus = std::min(v.genus, 1);
  return PlumbingGraph(std::move(vs), g.edges());
}

PlumbingGraph replace_elliptic(const PlumbingGraph& g, int id, SelfInt new_self_int) {
  if (g.vertex(id).genus != 1)
    throw Error(ErrorCode::NotElliptic,
                "vertex " + std::to_string(id) + " has genus " + std::to_string(g.vertex(id).genus) + ", not 1", {id});
  auto vs = g.vertices();
  for (auto& v : vs)
    if (v.id == id) {
      v.genus = 0;
      v.self_int = new_self_int;
    }
  return PlumbingGraph(std::move(vs), g.edges());
}

namespace {

std::string word_text(const Presentation& p, const std::vector<Factor>& display) {
  std::string s;
  for (const auto& f : display) {
    if (!s.empty()) s += ' ';
    if (f.commutator) {
      s += "[" + name(p.generators()[f.x]) + "," + name(p.generators()[f.y]) + "]";
    } else {
      s += name(p.generators()[f.x]);
      if (f.exp != 1) s += "^" + std::to_string(f.exp);
    }
  }
  return s;
}

}  // namespace

std::string export_text(const Presentation& p) {
  std::string s = "gens: ";
  for (std::size_t i = 0; i < p.generators().size(); ++i) {
    if (i) s += ", ";
    s += name(p.generators()[i]);
  }
  s += "; rels: ";
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    if (i) s += ", ";
    s += word_text(p, p.relators()[i].display);
  }
  return s + ";";
}

IntMatrix relation_matrix(const Presentation& p) {
  const auto rows = static_cast<Eigen::Index>(p.relators().size());
  const auto cols = static_cast<Eigen::Index>(p.generators().size());
  IntMatrix M = IntMatrix::Constant(rows, cols, BigInt(0));
  for (Eigen::Index r = 0; r < rows; ++r)
    for (const auto& l : p.relators()[static_cast<std::size_t>(r)].word) M(r, l.gen) += l.exp;
  return M;
}

Abelianization abelianize_matrix(const IntMatrix& relations) {
  const auto snf = smith_normal_form(relations);
  const auto cols = relations.cols();
  const auto diag = snf.diagonal();
  Abelianization out;
  std::vector<Eigen::Index> kept;
  for (Eigen::Index k = 0; k < cols; ++k) {
    BigInt d = k < static_cast<Eigen::Index>(diag.size()) ? diag[static_cast<std::size_t>(k)] : BigInt(0);
    if (d == 1) continue;
    out.invariant_factors.push_back(d);
    kept.push_back(k);
  }
  for (Eigen::Index gen = 0; gen < cols; ++gen) {
    std::vector<BigInt> coords;
    for (std::size_t f = 0; f < kept.size(); ++f) {
      BigInt y = snf.V(gen, kept[f]);
      const BigInt& d = out.invariant_factors[f];
      if (d != 0) {
        y %= d;
        if (y < 0) y += d;
      }
      coords.push_back(y);
    }
    out.generator_images.push_back(std::move(coords));
  }
  return out;
}

Abelianization abelianization(const Presentation& p) { return abelianize_matrix(relation_matrix(p)); }

BigInt Abelianization::order_of(const std::vector<BigInt>& coordinates) const {
  BigInt order = 1;
  for (std::size_t f = 0; f < invariant_factors.size(); ++f) {
    const BigInt& d = invariant_factors[f];
    const BigInt& y = coordinates[f];
    if (d == 0) {
      if (y != 0) return 0;
      continue;
    }
    order = lcm(order, BigInt(d / gcd(d, y)));
  }
  return order;
}

BigInt Abelianization::order_of(std::size_t gen) const { return order_of(generator_images.at(gen)); }

}  // namespace plumb
