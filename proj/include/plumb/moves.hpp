#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "plumb/graph.hpp"

namespace plumb {

enum class MoveKind { BlowUpEdge, BlowUpPoint, BlowDown };

struct MoveRecord {
  MoveKind kind = MoveKind::BlowDown;
  Edge edge;            // BlowUpEdge: the subdivided edge; BlowUpPoint: (attachment, new leaf)
  int vertex = 0;       // new vertex (blow-ups) or removed vertex (blow-down)
  bool multi_edge = false;  // blow-down joined two neighbours that were already adjacent
  friend bool operator==(const MoveRecord&, const MoveRecord&) = default;
};

std::string to_string(const MoveRecord& m);

struct MoveResult {
  PlumbingGraph graph;
  MoveRecord record;
};

/// Replaces edge e by a new rational (-1)-curve meeting both endpoints; both
/// endpoints lose one from their self-intersection. The new id is max_id + 1.
MoveResult blow_up_edge(const PlumbingGraph& g, Edge e);

/// Attaches a new rational (-1) leaf to v; v loses one from its self-intersection.
MoveResult blow_up_point(const PlumbingGraph& g, int v);

/// Contracts a rational (-1)-curve of valency <= 2 with simple edges.
MoveResult blow_down(const PlumbingGraph& g, int v);

/// Vertices blow_down would accept, ascending.
std::vector<int> contractible_vertices(const PlumbingGraph& g);

struct BlowDownSequence {
  PlumbingGraph graph;
  std::vector<MoveRecord> moves;
};

/// Picks one id out of the currently contractible ones.
using ContractionChoice = std::function<int(std::span<const int> eligible)>;

/// Contracts until nothing is contractible, smallest id first. Throws
/// MultiEdgeCreated if a contraction would leave the tree category.
BlowDownSequence full_blow_down(const PlumbingGraph& g);
BlowDownSequence full_blow_down(const PlumbingGraph& g, const ContractionChoice& choose);

/// Re-applies a move list to its source graph.
PlumbingGraph replay(const PlumbingGraph& g, std::span<const MoveRecord> moves);

}  // namespace plumb
