#include "plumb/chain.hpp"

namespace plumb {

ChainData chain_sequence(std::span<const std::int64_t> m) {
  if (m.empty()) throw Error(ErrorCode::EmptyChain, "chain has no vertices");
  ChainData out{{m.begin(), m.end()}, {}};
  out.a.reserve(m.size() + 1);
  out.a.push_back(1);
  out.a.push_back(m[0]);
  for (std::size_t i = 1; i < m.size(); ++i) out.a.push_back(BigInt(m[i]) * out.a[i] - out.a[i - 1]);
  return out;
}

std::string Order::to_string() const {
  switch (kind) {
    case Kind::Trivial: return "Trivial";
    case Kind::Finite: return "Finite(" + value.str() + ")";
    case Kind::Infinite: return "Infinite";
  }
  return "?";
}

Order gamma_order_in_chain(std::span<const std::int64_t> m, std::size_t i) {
  if (i < 1 || i > m.size())
    throw Error(ErrorCode::IndexOutOfRange,
                "index " + std::to_string(i) + " outside chain of length " + std::to_string(m.size()));
  const auto data = chain_sequence(m);
  const BigInt n = abs(data.group_order());
  const BigInt ai = abs(data.a[i - 1]);
  if (n == 0) return ai == 0 ? Order::trivial() : Order::infinite();
  return Order::finite(n / gcd(n, ai));
}

bool order_growth_check(std::span<const std::int64_t> m, std::size_t j, std::int64_t boost) {
  std::vector<std::int64_t> raised(m.begin(), m.end());
  raised.at(j - 1) += boost;
  for (std::size_t i = 1; i <= m.size(); ++i) {
    const auto before = gamma_order_in_chain(m, i);
    const auto after = gamma_order_in_chain(raised, i);
    if (after.kind == Order::Kind::Infinite) continue;
    if (before.kind == Order::Kind::Infinite || after.value < before.value) return false;
  }
  return true;
}

}  // namespace plumb
