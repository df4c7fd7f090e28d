#include "plumb/intalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace plumb {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DanglingEdge: return "DanglingEdge";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::NegativeGenus: return "NegativeGenus";
    case ErrorCode::InfiniteWeight: return "InfiniteWeight";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::NoSuchEdge: return "NoSuchEdge";
    case ErrorCode::NoSuchVertex: return "NoSuchVertex";
    case ErrorCode::NotContractible: return "NotContractible";
    case ErrorCode::MultiEdgeCreated: return "MultiEdgeCreated";
    case ErrorCode::NotElliptic: return "NotElliptic";
    case ErrorCode::EmptyChain: return "EmptyChain";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotAComb: return "NotAComb";
    case ErrorCode::PositiveGenusString: return "PositiveGenusString";
    case ErrorCode::StringWeightTooSmall: return "StringWeightTooSmall";
    case ErrorCode::GcdViolation: return "GcdViolation";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::ValencyTooLow: return "ValencyTooLow";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::NotMinimal: return "NotMinimal";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

namespace {

int sign_changes(const std::vector<BigInt>& coeffs) {
  int changes = 0;
  int last = 0;
  for (const auto& c : coeffs) {
    const int s = c.sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

Signature signature(const IntMatrix& M) {
  if (M.rows() != M.cols()) throw Error(ErrorCode::NotSquare, "signature of a non-square matrix");
  for (Eigen::Index i = 0; i < M.rows(); ++i)
    for (Eigen::Index j = i + 1; j < M.cols(); ++j)
      if (M(i, j) != M(j, i)) throw Error(ErrorCode::NotSymmetric, "signature of a non-symmetric matrix");

  auto p = char_poly(M);
  Signature s;
  std::size_t zeros = 0;
  while (zeros < p.size() && p[zeros] == 0) ++zeros;
  s.n_zero = static_cast<int>(zeros);
  // p(x) = x^zeros * q(x); all roots real, so Descartes counts are exact
  std::vector<BigInt> q;
  for (std::size_t k = zeros; k < p.size(); ++k) q.push_back(p[k]);
  s.n_plus = sign_changes(q);
  for (std::size_t k = 1; k < q.size(); k += 2) q[k] = -q[k];
  s.n_minus = sign_changes(q);
  return s;
}

bool rational_sum_eq(const BigInt& m, std::span<const BigInt> b, std::span<const BigInt> d) {
  using boost::multiprecision::cpp_rational;
  if (b.size() != d.size()) throw Error(ErrorCode::InvalidParameter, "b and d differ in length");
  cpp_rational sum = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] == 0) throw Error(ErrorCode::ZeroDenominator, "zero denominator b_" + std::to_string(i + 1));
    sum += cpp_rational(boost::multiprecision::cpp_int(d[i]), boost::multiprecision::cpp_int(b[i]));
  }
  return sum == cpp_rational(boost::multiprecision::cpp_int(m));
}

}  // namespace plumb
