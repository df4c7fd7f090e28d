#pragma once

#include <compare>
#include <string>
#include <vector>

#include "plumb/graph.hpp"

namespace plumb {

enum class GenKind { Gamma, Lambda, A, B };

/// Gamma(i): loop around curve i. Lambda(i, j, k): loop through the k-th
/// edge between i < j that lies outside the spanning tree (lambda_ji is its
/// inverse and never stored). A(i, h), B(i, h): surface generators of curve i.
struct Generator {
  GenKind kind = GenKind::Gamma;
  int i = 0;
  int j = 0;
  int h = 0;
  friend auto operator<=>(const Generator&, const Generator&) = default;

  static Generator gamma(int i) { return {GenKind::Gamma, i, 0, 0}; }
  static Generator lambda(int i, int j, int k = 1) { return {GenKind::Lambda, i, j, k}; }
  static Generator a(int i, int h) { return {GenKind::A, i, 0, h}; }
  static Generator b(int i, int h) { return {GenKind::B, i, 0, h}; }
};

std::string name(const Generator& g);

struct Letter {
  int gen = 0;  // index into the generator list
  int exp = 1;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

Word free_reduce(Word w);
Word inverse(const Word& w);
Word power(const Word& w, long long k);
Word concat(const Word& a, const Word& b);
/// x y x^-1 y^-1
Word commutator(const Word& x, const Word& y);

enum class RelatorKind { GlobalCommutation, Main, LocalCommutation };

struct Provenance {
  RelatorKind kind = RelatorKind::Main;
  int i = 0;
  int j = 0;
};

/// Display unit for text export: gen^exp, or [x,y] of two generators.
struct Factor {
  bool commutator = false;
  int x = 0;
  int y = 0;
  long long exp = 1;
};

struct Relator {
  Provenance provenance;
  Word word;                    // freely reduced, equal to the identity in the group
  std::vector<Factor> display;  // how export_text spells the word
};

/// Finite presentation: generators with tags, relators with provenance.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::vector<Generator> generators, std::vector<Relator> relators)
      : generators_(std::move(generators)), relators_(std::move(relators)) {}

  const std::vector<Generator>& generators() const { return generators_; }
  const std::vector<Relator>& relators() const { return relators_; }
  std::vector<Word> relator_words() const;

  /// Throws UnknownGenerator.
  int index_of(const Generator& g) const;
  bool contains(const Generator& g) const;

  /// The word consisting of a single generator.
  Word word(const Generator& g) const { return {Letter{index_of(g), 1}}; }

 private:
  std::vector<Generator> generators_;
  std::vector<Relator> relators_;
};

/// Builds the presentation of the local fundamental group of the plumbing.
///
/// The spanning tree is found breadth-first from the smallest id, visiting
/// incident edges in (min id, max id) order. Relators come as
///   [a_h(i), g_i], [g_i, b_h(i)]                   for each i, h
///   prod_h [a_h(i), b_h(i)] * prod_j g_ij^-1 * g_i^m_i   unless self_int(i) is INF
///   [g_i, g_ij]                                    for each edge, i < j
/// where the g_ij^-1 run over incident edges by ascending neighbour id, and
/// g_ij = g_j on tree edges and lambda g_j lambda^-1 otherwise. Empty
/// relators are dropped.
Presentation build_presentation(const PlumbingGraph& g);

/// Caps every genus at 1.
PlumbingGraph simplify_genus(const PlumbingGraph& g);

/// Turns the genus-1 vertex v into a rational curve with the given
/// self-intersection (INF drops its main relator).
PlumbingGraph replace_elliptic(const PlumbingGraph& g, int v, SelfInt new_self_int);

/// `gens: ...; rels: ...;` in generator and relator order.
std::string export_text(const Presentation& p);

/// Abelian group Z^n / (relation rows) in invariant-factor form.
struct Abelianization {
  std::vector<BigInt> invariant_factors;             // ascending divisibility chain, 0 = Z, units dropped
  std::vector<std::vector<BigInt>> generator_images;  // per generator: coordinates, one per factor

  /// Order of the image of generator `gen` (0 = infinite).
  BigInt order_of(std::size_t gen) const;
  BigInt order_of(const std::vector<BigInt>& coordinates) const;
};

Abelianization abelianize_matrix(const IntMatrix& relations);
Abelianization abelianization(const Presentation& p);

/// Exponent-sum matrix: one row per relator, one column per generator.
IntMatrix relation_matrix(const Presentation& p);

}  // namespace plumb
