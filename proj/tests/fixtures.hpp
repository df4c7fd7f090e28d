#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plumb/graph.hpp"
#include "plumb/graph_io.hpp"

namespace fixtures {

/// Elementwise -M; Eigen's unary minus does not instantiate for BigInt.
inline plumb::IntMatrix negated(const plumb::IntMatrix& M) {
  plumb::IntMatrix N = M;
  for (Eigen::Index i = 0; i < N.rows(); ++i)
    for (Eigen::Index j = 0; j < N.cols(); ++j) N(i, j) = -N(i, j);
  return N;
}

using plumb::Edge;
using plumb::PlumbingGraph;
using plumb::SelfInt;
using plumb::Vertex;

/// Path 1 - 2 - ... - n of rational curves with self-intersections -m_i.
inline PlumbingGraph chain(const std::vector<std::int64_t>& m) {
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  for (std::size_t i = 0; i < m.size(); ++i) {
    vs.push_back({static_cast<int>(i + 1), 0, SelfInt(-m[i])});
    if (i) es.push_back({static_cast<int>(i), static_cast<int>(i + 1)});
  }
  return PlumbingGraph(std::move(vs), std::move(es));
}

/// Rim 1 with weight -m and single-vertex teeth 2..k+1 of weights -t_i.
inline PlumbingGraph star(std::int64_t m, const std::vector<std::int64_t>& teeth) {
  std::vector<Vertex> vs{{1, 0, SelfInt(-m)}};
  std::vector<Edge> es;
  for (std::size_t i = 0; i < teeth.size(); ++i) {
    vs.push_back({static_cast<int>(i + 2), 0, SelfInt(-teeth[i])});
    es.push_back({1, static_cast<int>(i + 2)});
  }
  return PlumbingGraph(std::move(vs), std::move(es));
}

inline PlumbingGraph load(const std::string& name) {
  return plumb::parse_graph(plumb::read_file(std::string(PLUMB_TEST_DATA) + "/" + name));
}

}  // namespace fixtures
