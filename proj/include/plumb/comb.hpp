#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "plumb/graph.hpp"
#include "plumb/presentation.hpp"

namespace plumb {

/// Rim weight m = -self_int(rim) and, per string h, b_h = a_{n+1}, d_h = a_n of
/// the string's chain sequence. In the rim group g = beta_h^{b_h} for all h and
/// g^m = beta_1^{d_1} ... beta_r^{d_r}.
struct CombParams {
  BigInt m = 0;
  std::vector<BigInt> b;
  std::vector<BigInt> d;

  std::size_t r() const { return b.size(); }
  friend bool operator==(const CombParams&, const CombParams&) = default;
};

std::string to_string(const CombParams& p);

/// Vertex ids of each string, far end first; strings ordered by the id of
/// the vertex meeting the rim.
std::vector<std::vector<int>> comb_strings(const PlumbingGraph& g, int rim);

/// Throws NotAComb, PositiveGenusString, StringWeightTooSmall, InfiniteWeight.
CombParams comb_params_from_graph(const PlumbingGraph& g, int rim);

/// Divides each (b_h, d_h) by its gcd.
CombParams gcd_reduce(const CombParams& p);

struct GammaStatus {
  enum class Kind { Infinite, Finite, NontrivialOrderAtLeast, Unknown };
  Kind kind = Kind::Unknown;
  BigInt value = 0;  // order for Finite, bound for NontrivialOrderAtLeast
  std::string to_string() const;
  friend bool operator==(const GammaStatus&, const GammaStatus&) = default;
};

struct GroupStatus {
  enum class Kind { Infinite, Finite, Unknown };
  Kind kind = Kind::Unknown;
  BigInt value = 0;
  std::string to_string() const;
  friend bool operator==(const GroupStatus&, const GroupStatus&) = default;
};

/// Exceptional rim patterns after sorting b ascending:
///   Va: b = (2, 2, n), d = (1, 1, t), p = (m - 1) n - t
///   Vb: b = (2, 3, n), d = (1, c, t), 3 <= n <= 5
struct Exceptional {
  enum class Kind { None, Va, Vb };
  Kind kind = Kind::None;
  BigInt n = 0;
  BigInt t = 0;
  BigInt p = 0;  // Va only
  BigInt c = 0;  // Vb only
  std::string to_string() const;
  friend bool operator==(const Exceptional&, const Exceptional&) = default;
};

struct CombVerdict {
  GammaStatus gamma;
  GroupStatus group;
  Exceptional exceptional;
  std::vector<std::string> trace;
};

/// Decides the order of the rim generator g:
///  1. reduce each (b, d) by its gcd
///  2. fold strings with b = 1 into the rim weight (m -= d)
///  3. [g] of infinite order in rational homology (m == sum d/b): Infinite
///  4. r >= 4, or r == 3 with sum 1/b <= 1: Infinite
///  5. Va: Finite(2p), group of order 4pn (m = 1 gives only a lower bound of 2);
///     Vb: order at least 2
///  6. otherwise Unknown.
/// Parameters outside b > d >= 1, m >= 1 are Unknown.
CombVerdict classify(const CombParams& p);

/// Order of the image of g in H_1 (0 = infinite), from the relation matrix
/// over (g, beta_1..beta_r) with rows g - b_h beta_h and m g - sum d_h beta_h.
BigInt homology_gamma_order(const CombParams& p);

/// The rim group itself: generators g = gamma(0) and beta_h = gamma(h).
Presentation rim_group(const CombParams& p);

/// Chain weights m_1..m_k (far end first) whose sequence ends a_k = d,
/// a_{k+1} = b. Needs gcd(b, d) = 1 and b > d >= 1; throws GcdViolation or
/// InvalidParameter.
std::vector<std::int64_t> string_weights(const BigInt& b, const BigInt& d);

/// Comb with rim id 1 and strings realizing p, numbered consecutively from
/// the far end of the first string. All genus 0.
PlumbingGraph comb_graph(const CombParams& p);

/// 2x2 complex representation of the Va rim group.
struct MatrixRep {
  Eigen::Matrix2cd rho_a;
  Eigen::Matrix2cd rho_b;
  long long n = 0;
  long long p = 0;
  std::complex<double> zeta_4p;
  std::complex<double> zeta_2np;
  std::complex<double> u;  // u^p = 1, u^n = zeta_p
};

/// Throws GcdViolation unless gcd(n, t) = gcd(p, n) = 1, InvalidParameter
/// unless m >= 2 and 1 <= t < n.
MatrixRep va_representation(long long n, long long t, long long m);

/// rho(a)^2 = rho(b)^n = (rho(a) rho(b)^p)^2 = zeta_2p I to within 1e-9.
bool va_matrix_check(long long n, long long t, long long m);

}  // namespace plumb
