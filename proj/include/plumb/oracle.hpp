#pragma once

// Todd-Coxeter coset enumeration (HLT with lookahead), used to check claimed
// orders independently of the theory.

#include <chrono>
#include <cstddef>
#include <string>
#include <vector>

#include "plumb/presentation.hpp"

namespace plumb {

/// Relators as words over generator indices 0..num_gens-1.
struct FpGroup {
  int num_gens = 0;
  std::vector<Word> relators;
};

FpGroup fp_group(const Presentation& p);

/// HLT scans whole relators at each coset, fills rows, and runs a lookahead
/// over the unprocessed rows when the table fills. Felsch defines only at the
/// first hole and closes the table by scanning relator cycles through every
/// new entry. Relators are used in the order given.
struct EnumLimits {
  enum class Strategy { Hlt, Felsch };
  std::size_t max_cosets = 1'000'000;
  std::chrono::milliseconds max_time{60'000};
  Strategy strategy = Strategy::Hlt;
};

/// Column 2g is generator g, column 2g+1 its inverse; -1 = undefined.
struct CosetTable {
  enum class Status { Complete, Exhausted };
  Status status = Status::Exhausted;
  int num_cols = 0;
  std::vector<int> table;  // rows() * num_cols entries, compacted when Complete
  std::size_t high_water = 0;
  std::size_t definitions = 0;
  std::size_t deductions = 0;
  std::size_t coincidences = 0;

  std::size_t rows() const { return num_cols ? table.size() / static_cast<std::size_t>(num_cols) : 0; }
  int at(std::size_t coset, int col) const { return table[coset * static_cast<std::size_t>(num_cols) + col]; }
  /// Coset reached from `coset` by reading w.
  std::size_t act(std::size_t coset, const Word& w) const;
};

/// Enumerates the cosets of the subgroup generated by `subgroup` (empty = the
/// trivial subgroup, so the row count is the group order). Coset 0 is the
/// subgroup itself. Throws UnknownGenerator.
CosetTable enumerate_cosets(const FpGroup& g, const std::vector<Word>& subgroup, const EnumLimits& lim);

/// True iff every relator acts as the identity on every coset.
bool relators_act_trivially(const CosetTable& t, const FpGroup& g);

struct GroupOrder {
  bool finite = false;
  std::size_t order = 0;       // when finite
  std::size_t high_water = 0;  // cosets at the peak
  std::string to_string() const;
};

GroupOrder group_order(const FpGroup& g, const EnumLimits& lim = {});
GroupOrder group_order(const Presentation& p, const EnumLimits& lim = {});

struct ElementOrder {
  enum class Kind { Finite, AtLeast, Exhausted };
  Kind kind = Kind::Exhausted;
  std::size_t value = 0;
  std::string to_string() const;
  friend bool operator==(const ElementOrder&, const ElementOrder&) = default;
};

/// Exact order when the group enumerates to completion. Otherwise a lower
/// bound from the quotients G / <<w^k>> for k = 2..12 that do enumerate: the
/// order of w there divides its order in G. Throws UnknownGenerator.
ElementOrder element_order(const FpGroup& g, const Word& w, const EnumLimits& lim = {});
ElementOrder element_order(const Presentation& p, const Word& w, const EnumLimits& lim = {});

}  // namespace plumb
