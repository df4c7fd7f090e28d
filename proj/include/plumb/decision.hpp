#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plumb/graph.hpp"

namespace plumb {

struct Status {
  enum class Kind { Trivial, NontrivialOrderUnknown, Finite, Infinite, Unknown };
  Kind kind = Kind::Unknown;
  BigInt order = 0;  // Finite only

  static Status finite(BigInt k) { return {Kind::Finite, std::move(k)}; }
  static Status of(Kind k) { return {k, 0}; }
  std::string to_string() const;
  friend bool operator==(const Status&, const Status&) = default;
};

std::string_view to_string(Status::Kind k);

struct GammaVerdict {
  int vertex = 0;
  Status status;
  std::vector<std::string> trace;
};

using Verdicts = std::map<int, GammaVerdict>;

/// Removing j from a tree: one component per neighbour of j, each with the
/// neighbour as its boundary vertex, in ascending boundary order.
struct Decomposition {
  int removed = 0;
  std::vector<PlumbingGraph> components;
  std::vector<int> boundary;
};

/// Throws NotATree, ValencyTooLow (valency < 3), NoSuchVertex.
Decomposition decompose_at(const PlumbingGraph& g, int j);

/// Trees whose genus-0 curves all have self-intersection <= -2. Throws
/// NotATree, InfiniteWeight, HypothesisViolated (with the offending vertices).
Verdicts theorem_a(const PlumbingGraph& g);

/// Minimal trees whose genus-0 curves have self-intersection <= -1 (or that
/// become nef after contracting all (-1)-curves). Throws NotATree,
/// InfiniteWeight, NotMinimal, HypothesisViolated.
Verdicts theorem_b(const PlumbingGraph& g);

/// Vertices removed one at a time (each meeting at least two others at the
/// time of removal) until every remaining piece is elementary infinite.
struct RemovalCertificate {
  std::vector<int> removed;
  std::vector<std::vector<int>> pieces;  // sorted ids, ascending by first id
};

struct ElementaryCheck {
  bool infinite = false;
  std::string reason;
};

/// Linear with a positive-genus curve, or a comb that has a positive-genus
/// curve or whose rim classifies as Infinite.
ElementaryCheck is_elementary_infinite(const PlumbingGraph& g);

/// Searches removal sequences (highest valency first, then smallest id),
/// memoized per component. nullopt when none exists or the state budget runs out.
std::optional<RemovalCertificate> find_removal_certificate(const PlumbingGraph& g,
                                                           std::size_t max_states = 200'000);

/// Re-applies the removals and re-checks every piece.
bool replay_certificate(const PlumbingGraph& g, const RemovalCertificate& cert);

/// Same hypotheses as theorem_a. All Infinite with the certificate in the
/// trace when one is found; otherwise theorem_a's verdicts.
Verdicts theorem_c(const PlumbingGraph& g);

}  // namespace plumb
