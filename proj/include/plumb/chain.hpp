#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "plumb/intalg.hpp"

namespace plumb {

/// Weights m_i = -self_int of a chain of rational curves, far end first, and
/// the sequence a_1 = 1, a_2 = m_1, a_{i+1} = m_i a_i - a_{i-1} (n + 1 terms).
/// The chain group is cyclic of order |a_{n+1}| generated by g_1, with
/// g_i = g_1^{a_i}; a_{n+1} = 0 means infinite cyclic.
struct ChainData {
  std::vector<std::int64_t> m;
  std::vector<BigInt> a;

  const BigInt& group_order() const { return a.back(); }
};

/// Throws EmptyChain.
ChainData chain_sequence(std::span<const std::int64_t> m);

/// Cyclic-group element order. `value` is meaningful for Finite only.
struct Order {
  enum class Kind { Trivial, Finite, Infinite };
  Kind kind = Kind::Trivial;
  BigInt value = 1;

  static Order trivial() { return {Kind::Trivial, 1}; }
  static Order finite(BigInt k) { return k == 1 ? trivial() : Order{Kind::Finite, std::move(k)}; }
  static Order infinite() { return {Kind::Infinite, 0}; }

  std::string to_string() const;
  friend bool operator==(const Order&, const Order&) = default;
};

/// Order of g_i (1-based) in the chain group. Throws IndexOutOfRange.
Order gamma_order_in_chain(std::span<const std::int64_t> m, std::size_t i);

/// True iff raising m_j (1-based) by `boost` does not lower the order of any
/// g_i. Requires every m_i >= 2.
bool order_growth_check(std::span<const std::int64_t> m, std::size_t j, std::int64_t boost);

}  // namespace plumb
