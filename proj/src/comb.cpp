#include "plumb/comb.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "plumb/chain.hpp"

namespace plumb {

namespace {

std::string join(const std::vector<BigInt>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i].str();
  return s + ")";
}

}  // namespace

std::string to_string(const CombParams& p) { return "m=" + p.m.str() + " b=" + join(p.b) + " d=" + join(p.d); }

std::string GammaStatus::to_string() const {
  switch (kind) {
    case Kind::Infinite: return "Infinite";
    case Kind::Finite: return "Finite(" + value.str() + ")";
    case Kind::NontrivialOrderAtLeast: return "NontrivialOrderAtLeast(" + value.str() + ")";
    case Kind::Unknown: return "Unknown";
  }
  return "?";
}

std::string GroupStatus::to_string() const {
  switch (kind) {
    case Kind::Infinite: return "Infinite";
    case Kind::Finite: return "Finite(" + value.str() + ")";
    case Kind::Unknown: return "Unknown";
  }
  return "?";
}

std::string Exceptional::to_string() const {
  switch (kind) {
    case Kind::None: return "None";
    case Kind::Va: return "Va(n=" + n.str() + ",t=" + t.str() + ",p=" + p.str() + ")";
    case Kind::Vb: return "Vb(n=" + n.str() + ",c=" + c.str() + ",t=" + t.str() + ")";
  }
  return "?";
}

std::vector<std::vector<int>> comb_strings(const PlumbingGraph& g, int rim) {
  std::vector<std::vector<int>> out;
  for (int start : g.neighbors(rim)) {
    std::vector<int> s{start};
    int prev = rim, cur = start;
    while (g.valency(cur) == 2) {
      const auto nb = g.neighbors(cur);
      const int next = nb[0] == prev ? nb[1] : nb[0];
      s.push_back(next);
      prev = cur;
      cur = next;
    }
    std::reverse(s.begin(), s.end());
    out.push_back(std::move(s));
  }
  return out;
}

CombParams comb_params_from_graph(const PlumbingGraph& g, int rim) {
  const auto shape = classify_shape(g);
  if (shape.kind != ShapeKind::Comb || shape.rim != rim)
    throw Error(ErrorCode::NotAComb,
                "graph is " + std::string(to_string(shape.kind)) + ", not a comb with rim " + std::to_string(rim),
                {rim});
  for (const auto& v : g.vertices())
    if (v.genus != 0)
      throw Error(ErrorCode::PositiveGenusString, "vertex " + std::to_string(v.id) + " has positive genus", {v.id});
  CombParams p;
  p.m = g.vertex(rim).self_int.m();
  for (const auto& s : comb_strings(g, rim)) {
    std::vector<std::int64_t> m;
    for (int id : s) {
      const auto& v = g.vertex(id);
      if (v.self_int.is_inf())
        throw Error(ErrorCode::InfiniteWeight, "vertex " + std::to_string(id) + " has INF self-intersection", {id});
      if (v.self_int.m() < 2)
        throw Error(ErrorCode::StringWeightTooSmall,
                    "string vertex " + std::to_string(id) + " has self-intersection " + v.self_int.to_string() +
                        ", need <= -2",
                    {id});
      m.push_back(v.self_int.m());
    }
    const auto data = chain_sequence(m);
    p.b.push_back(data.a[m.size()]);
    p.d.push_back(data.a[m.size() - 1]);
  }
  return p;
}

CombParams gcd_reduce(const CombParams& p) {
  CombParams out = p;
  for (std::size_t h = 0; h < out.r(); ++h) {
    const BigInt c = gcd(out.b[h], out.d[h]);
    if (c > 1) {
      out.b[h] /= c;
      out.d[h] /= c;
    }
  }
  return out;
}

namespace {

CombVerdict unknown(std::vector<std::string> trace) {
  return {{GammaStatus::Kind::Unknown, 0}, {GroupStatus::Kind::Unknown, 0}, {}, std::move(trace)};
}

CombVerdict infinite(std::vector<std::string> trace) {
  return {{GammaStatus::Kind::Infinite, 0}, {GroupStatus::Kind::Infinite, 0}, {}, std::move(trace)};
}

}  // namespace

CombVerdict classify(const CombParams& input) {
  std::vector<std::string> trace{"input " + to_string(input)};
  if (input.b.size() != input.d.size()) return unknown({"b and d have different lengths"});
  for (std::size_t h = 0; h < input.r(); ++h)
    if (input.b[h] < 1 || input.d[h] < 1) {
      trace.push_back("string " + std::to_string(h + 1) + " has a non-positive parameter");
      return unknown(std::move(trace));
    }

  CombParams p = gcd_reduce(input);
  if (p != input) trace.push_back("gcd-reduction: " + to_string(p));

  CombParams folded{p.m, {}, {}};
  for (std::size_t h = 0; h < p.r(); ++h) {
    if (p.b[h] == 1) {
      folded.m -= p.d[h];
      trace.push_back("fold string " + std::to_string(h + 1) + " (b=1) into the rim: m -> " + folded.m.str());
      continue;
    }
    folded.b.push_back(p.b[h]);
    folded.d.push_back(p.d[h]);
  }
  p = std::move(folded);
  if (p.m <= 0) {
    trace.push_back("rim weight m=" + p.m.str() + " is not positive");
    return unknown(std::move(trace));
  }
  if (p.r() < 3) {
    trace.push_back("only " + std::to_string(p.r()) + " strings remain; the graph is a chain");
    return unknown(std::move(trace));
  }
  for (std::size_t h = 0; h < p.r(); ++h)
    if (p.d[h] >= p.b[h]) {
      trace.push_back("string " + std::to_string(h + 1) + " has d >= b");
      return unknown(std::move(trace));
    }

  if (rational_sum_eq(p.m, p.b, p.d)) {
    trace.push_back("homology: m = sum d/b, so g has infinite order in H1(Q)");
    return infinite(std::move(trace));
  }
  trace.push_back("homology: m != sum d/b, H1(Q) = 0");

  boost::multiprecision::cpp_rational inv_sum = 0;
  for (const auto& b : p.b) inv_sum += boost::multiprecision::cpp_rational(1, boost::multiprecision::cpp_int(b));
  if (p.r() >= 4 || inv_sum <= 1) {
    trace.push_back("polygonal quotient T" + join(p.b) + " is infinite (r=" + std::to_string(p.r()) +
                    ", sum 1/b=" + inv_sum.str() + "); g has infinite order");
    return infinite(std::move(trace));
  }

  std::vector<std::size_t> idx(p.r());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
    return p.b[x] != p.b[y] ? p.b[x] < p.b[y] : p.d[x] < p.d[y];
  });
  std::vector<BigInt> b, d;
  for (auto i : idx) {
    b.push_back(p.b[i]);
    d.push_back(p.d[i]);
  }

  if (b[0] == 2 && b[1] == 2) {
    Exceptional ex{Exceptional::Kind::Va, b[2], d[2], (p.m - 1) * b[2] - d[2], 0};
    trace.push_back("exceptional pattern " + ex.to_string());
    if (ex.p >= 1) {
      trace.push_back("Va orders: g has order 2p=" + BigInt(2 * ex.p).str() + ", group order 4pn=" +
                      BigInt(4 * ex.p * ex.n).str());
      return {{GammaStatus::Kind::Finite, 2 * ex.p}, {GroupStatus::Kind::Finite, 4 * ex.p * ex.n}, ex,
              std::move(trace)};
    }
    trace.push_back("m=1 with pattern (2,2,n): g maps onto an element of order 2 of the binary dihedral quotient");
    return {{GammaStatus::Kind::NontrivialOrderAtLeast, 2}, {GroupStatus::Kind::Unknown, 0}, ex, std::move(trace)};
  }
  if (b[0] == 2 && b[1] == 3 && b[2] >= 3 && b[2] <= 5) {
    Exceptional ex{Exceptional::Kind::Vb, b[2], d[2], 0, d[1]};
    trace.push_back("exceptional pattern " + ex.to_string());
    trace.push_back("g maps onto the central element of order 2 of a binary polyhedral group");
    return {{GammaStatus::Kind::NontrivialOrderAtLeast, 2}, {GroupStatus::Kind::Unknown, 0}, ex, std::move(trace)};
  }
  trace.push_back("no rule applies");
  return unknown(std::move(trace));
}

BigInt homology_gamma_order(const CombParams& p) {
  const auto r = static_cast<Eigen::Index>(p.r());
  IntMatrix M = IntMatrix::Constant(r + 1, r + 1, BigInt(0));
  for (Eigen::Index h = 0; h < r; ++h) {
    M(h, 0) = 1;
    M(h, h + 1) = -p.b[static_cast<std::size_t>(h)];
    M(r, h + 1) = -p.d[static_cast<std::size_t>(h)];
  }
  M(r, 0) = p.m;
  return abelianize_matrix(M).order_of(0);
}

Presentation rim_group(const CombParams& p) {
  std::vector<Generator> gens{Generator::gamma(0)};
  for (std::size_t h = 1; h <= p.r(); ++h) gens.push_back(Generator::gamma(static_cast<int>(h)));
  auto to_ll = [](const BigInt& x) { return static_cast<long long>(x); };
  std::vector<Relator> rels;
  for (std::size_t h = 0; h < p.r(); ++h) {
    std::vector<Factor> f{{false, static_cast<int>(h + 1), 0, to_ll(p.b[h])}, {false, 0, 0, -1}};
    Word w = concat(power({Letter{static_cast<int>(h + 1), 1}}, to_ll(p.b[h])), {Letter{0, -1}});
    rels.push_back({{RelatorKind::Main, static_cast<int>(h + 1), 0}, std::move(w), std::move(f)});
  }
  std::vector<Factor> f;
  Word w;
  for (std::size_t h = 0; h < p.r(); ++h) {
    f.push_back({false, static_cast<int>(h + 1), 0, to_ll(p.d[h])});
    w = concat(w, power({Letter{static_cast<int>(h + 1), 1}}, to_ll(p.d[h])));
  }
  f.push_back({false, 0, 0, -to_ll(p.m)});
  w = concat(w, power({Letter{0, 1}}, -to_ll(p.m)));
  rels.push_back({{RelatorKind::Main, 0, 0}, std::move(w), std::move(f)});
  return Presentation(std::move(gens), std::move(rels));
}

std::vector<std::int64_t> string_weights(const BigInt& b, const BigInt& d) {
  if (!(b > d && d >= 1))
    throw Error(ErrorCode::InvalidParameter, "need b > d >= 1, got b=" + b.str() + " d=" + d.str());
  if (gcd(b, d) != 1) throw Error(ErrorCode::GcdViolation, "gcd(" + b.str() + "," + d.str() + ") != 1");
  std::vector<std::int64_t> near_first;
  BigInt x = b, y = d;
  while (y > 0) {
    BigInt q = (x + y - 1) / y;
    near_first.push_back(static_cast<std::int64_t>(q));
    BigInt next = q * y - x;
    x = y;
    y = next;
  }
  return {near_first.rbegin(), near_first.rend()};
}

PlumbingGraph comb_graph(const CombParams& p) {
  std::vector<Vertex> vs{{1, 0, SelfInt(-static_cast<std::int64_t>(p.m))}};
  std::vector<Edge> es;
  int next = 2;
  for (std::size_t h = 0; h < p.r(); ++h) {
    const auto w = string_weights(p.b[h], p.d[h]);
    for (std::size_t k = 0; k < w.size(); ++k) {
      vs.push_back({next, 0, SelfInt(-w[k])});
      es.push_back({next, k + 1 < w.size() ? next + 1 : 1});
      ++next;
    }
  }
  return PlumbingGraph(std::move(vs), std::move(es));
}

namespace {

std::complex<double> root_of_unity(long long order, long long power = 1) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(power % order) / static_cast<double>(order));
}

}  // namespace

MatrixRep va_representation(long long n, long long t, long long m) {
  if (m < 2 || t < 1 || t >= n)
    throw Error(ErrorCode::InvalidParameter, "need m >= 2 and 1 <= t < n");
  if (std::gcd(n, t) != 1)
    throw Error(ErrorCode::GcdViolation, "gcd(n,t) = " + std::to_string(std::gcd(n, t)) + " != 1");
  const long long p = (m - 1) * n - t;
  if (std::gcd(p, n) != 1)
    throw Error(ErrorCode::GcdViolation, "gcd(p,n) = " + std::to_string(std::gcd(p, n)) + " != 1");
  // k = n^-1 mod p, so u = zeta_p^k has u^n = zeta_p
  long long k = 0;
  while (p > 1 && (n * k) % p != 1) ++k;
  MatrixRep rep;
  rep.n = n;
  rep.p = p;
  rep.zeta_4p = root_of_unity(4 * p);
  rep.zeta_2np = root_of_unity(2 * n * p);
  rep.u = root_of_unity(p, k);
  rep.rho_a << 0, rep.zeta_4p, rep.zeta_4p, 0;
  rep.rho_b << rep.zeta_2np, 0, 0, rep.u / rep.zeta_2np;
  return rep;
}

bool va_matrix_check(long long n, long long t, long long m) {
  const auto rep = va_representation(n, t, m);
  const Eigen::Matrix2cd target = root_of_unity(2 * rep.p) * Eigen::Matrix2cd::Identity();
  auto matpow = [](const Eigen::Matrix2cd& x, long long e) {
    Eigen::Matrix2cd out = Eigen::Matrix2cd::Identity();
    for (long long i = 0; i < e; ++i) out = out * x;
    return out;
  };
  const Eigen::Matrix2cd a2 = rep.rho_a * rep.rho_a;
  const Eigen::Matrix2cd bn = matpow(rep.rho_b, n);
  const Eigen::Matrix2cd abp = rep.rho_a * matpow(rep.rho_b, rep.p);
  constexpr double tol = 1e-9;
  return (a2 - target).norm() < tol && (bn - target).norm() < tol && (abp * abp - target).norm() < tol;
}

}  // namespace plumb
