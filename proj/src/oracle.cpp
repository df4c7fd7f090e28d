#include "plumb/oracle.hpp"

#include <algorithm>
#include <set>

namespace plumb {

FpGroup fp_group(const Presentation& p) {
  return {static_cast<int>(p.generators().size()), p.relator_words()};
}

namespace {

int column(const Letter& l) { return 2 * l.gen + (l.exp < 0 ? 1 : 0); }

void check_word(const Word& w, int num_gens) {
  for (const auto& l : w)
    if (l.gen < 0 || l.gen >= num_gens)
      throw Error(ErrorCode::UnknownGenerator, "word uses generator index " + std::to_string(l.gen) +
                                                   " but the group has " + std::to_string(num_gens));
}

class Enumerator {
 public:
  Enumerator(const FpGroup& g, const EnumLimits& lim)
      : cols_(2 * g.num_gens),
        lim_(lim),
        felsch_(lim.strategy == EnumLimits::Strategy::Felsch),
        start_(std::chrono::steady_clock::now()),
        soft_limit_(std::min<std::size_t>(lim.max_cosets, 4096)) {
    for (const auto& r : g.relators) {
      check_word(r, g.num_gens);
      if (r.empty()) continue;
      std::vector<int> cs;
      for (const auto& l : r) cs.push_back(column(l));
      rels_.push_back(std::move(cs));
    }
    if (felsch_) {
      // every cyclic rotation of every relator and its inverse, filed by first
      // letter; scanning these at (c, x) visits every relator cycle through
      // the entry c.x once in one direction or the other
      rotations_.resize(static_cast<std::size_t>(cols_));
      std::set<std::vector<int>> seen;
      for (const auto& r : rels_) {
        std::vector<int> inv(r.rbegin(), r.rend());
        for (auto& x : inv) x ^= 1;
        const std::vector<int>& inv_ref = inv;
        for (const auto* w : {&r, &inv_ref})
          for (std::size_t k = 0; k < w->size(); ++k) {
            std::vector<int> rot(w->begin() + static_cast<std::ptrdiff_t>(k), w->end());
            rot.insert(rot.end(), w->begin(), w->begin() + static_cast<std::ptrdiff_t>(k));
            if (seen.insert(rot).second) rotations_[static_cast<std::size_t>(rot[0])].push_back(rot);
          }
      }
    }
    reserve(64);
    add_row();
    live_ = 1;
  }

  CosetTable run(const std::vector<Word>& subgroup, int num_gens) {
    if (!scan_subgroup(subgroup, num_gens)) return finish(false);
    return felsch_ ? run_felsch() : run_hlt();
  }

 private:
  int cols_;
  EnumLimits lim_;
  bool felsch_;
  std::chrono::steady_clock::time_point start_;
  std::vector<std::vector<int>> rels_;
  std::vector<std::vector<std::vector<int>>> rotations_;
  std::vector<std::pair<int, int>> deduced_;  // Felsch only
  std::vector<int> table_;                    // capacity rows; rows >= n_ are all -1
  std::vector<int> parent_;
  std::vector<int> queue_;
  std::size_t n_ = 0;
  std::size_t live_ = 0;
  std::size_t high_water_ = 1;
  std::size_t definitions_ = 0, deductions_ = 0, coincidences_ = 0;
  bool timed_out_ = false;
  std::size_t soft_limit_ = 0;

  std::size_t capacity() const { return parent_.size(); }
  bool alive(std::size_t c) const { return parent_[c] == static_cast<int>(c); }
  int* row(std::size_t c) { return table_.data() + c * static_cast<std::size_t>(cols_); }
  int& at(int c, int x) { return table_[static_cast<std::size_t>(c) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(x)]; }

  void reserve(std::size_t rows) {
    if (rows <= capacity()) return;
    table_.resize(rows * static_cast<std::size_t>(cols_), -1);
    const std::size_t old = parent_.size();
    parent_.resize(rows);
    for (std::size_t e = old; e < rows; ++e) parent_[e] = static_cast<int>(e);
  }

  void add_row() {
    if (n_ == capacity()) reserve(std::max<std::size_t>(2 * capacity(), 64));
    ++n_;
  }

  void note(int c, int x) {
    if (felsch_) deduced_.push_back({c, x});
  }

  bool scan_subgroup(const std::vector<Word>& subgroup, int num_gens) {
    for (const auto& w : subgroup) {
      check_word(w, num_gens);
      std::vector<int> cs;
      for (const auto& l : w) cs.push_back(column(l));
      if (cs.empty()) continue;
      std::size_t c = 0;
      while (!scan_and_fill(rep(static_cast<int>(c)), cs))
        if (!make_room(c)) return false;
      propagate();
    }
    return true;
  }

  // First undefined entry at or after row c, or n_ if there is none.
  std::size_t first_hole(std::size_t c, int& x) {
    for (; c < n_; ++c) {
      if (!alive(c)) continue;
      for (x = 0; x < cols_; ++x)
        if (row(c)[x] < 0) return c;
    }
    return c;
  }

  CosetTable run_felsch() {
    std::size_t c = 0;
    int x = 0;
    for (;;) {
      c = first_hole(c, x);
      if (c == n_) {
        c = first_hole(0, x);  // coincidences may reopen earlier rows
        if (c == n_) return finish(true);
      }
      if (!define(static_cast<int>(c), x)) {
        if (!make_room(c)) return finish(false);
        continue;
      }
      propagate();
    }
  }

  CosetTable run_hlt() {
    std::size_t c = 0;
    for (;;) {
      while (c < n_) {
        if (!alive(c)) {
          ++c;
          continue;
        }
        if (!process(static_cast<int>(c))) {
          if (!make_room(c)) return finish(false);
          continue;
        }
        ++c;
      }
      // safety net: restart at any row left incomplete by late coincidences
      int x = 0;
      c = first_hole(0, x);
      if (c == n_) return finish(true);
    }
  }

  int rep(int c) {
    int r = c;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(c)] != r) {
      const int next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  bool define(int c, int x) {
    if (n_ >= soft_limit_) return false;
    if ((definitions_ & 1023) == 0 && std::chrono::steady_clock::now() - start_ > lim_.max_time) {
      timed_out_ = true;
      return false;
    }
    const int n = static_cast<int>(n_);
    add_row();
    at(c, x) = n;
    at(n, x ^ 1) = c;
    note(c, x);
    ++live_;
    ++definitions_;
    high_water_ = std::max(high_water_, live_);
    return true;
  }

  void merge(int k, int l) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    parent_[static_cast<std::size_t>(l)] = k;
    queue_.push_back(l);
    --live_;
  }

  void coincidence(int a, int b) {
    ++coincidences_;
    queue_.clear();
    merge(a, b);
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      const int e = queue_[i];
      for (int x = 0; x < cols_; ++x) {
        const int f = at(e, x);
        if (f < 0) continue;
        at(f, x ^ 1) = -1;
        const int e1 = rep(e), f1 = rep(f);
        if (at(e1, x) >= 0) merge(f1, at(e1, x));
        else if (at(f1, x ^ 1) >= 0) merge(e1, at(f1, x ^ 1));
        else {
          at(e1, x) = f1;
          at(f1, x ^ 1) = e1;
          note(e1, x);
        }
      }
    }
  }

  // Scans w at c, defining new cosets as needed. False when out of room.
  bool scan_and_fill(int c, const std::vector<int>& w) {
    const int* wp = w.data();
    int f = c, b = c;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    for (;;) {
      int next;
      while (i <= j && (next = at(f, wp[i])) >= 0) {
        f = next;
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j >= i && (next = at(b, wp[j] ^ 1)) >= 0) {
        b = next;
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return true;
      }
      if (i == j) {
        at(f, wp[i]) = b;
        at(b, wp[i] ^ 1) = f;
        note(f, wp[i]);
        ++deductions_;
        return true;
      }
      if (!define(f, wp[i])) return false;
    }
  }

  // Scan without defining: only deductions and coincidences.
  void scan(int c, const std::vector<int>& w) {
    const int* wp = w.data();
    int f = c, b = c, next;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    while (i <= j && (next = at(f, wp[i])) >= 0) {
      f = next;
      ++i;
    }
    if (i > j) {
      if (f != b) coincidence(f, b);
      return;
    }
    while (j >= i && (next = at(b, wp[j] ^ 1)) >= 0) {
      b = next;
      --j;
    }
    if (j < i) coincidence(f, b);
    else if (i == j) {
      at(f, wp[i]) = b;
      at(b, wp[i] ^ 1) = f;
      note(f, wp[i]);
      ++deductions_;
    }
  }

  void propagate() {
    while (!deduced_.empty()) {
      auto [c, x] = deduced_.back();
      deduced_.pop_back();
      for (const auto& w : rotations_[static_cast<std::size_t>(x)]) {
        c = rep(c);
        scan(c, w);
      }
    }
  }

  bool process(int c) {
    for (const auto& r : rels_) {
      if (!alive(static_cast<std::size_t>(c))) return true;
      if (!scan_and_fill(c, r)) return false;
    }
    for (int x = 0; x < cols_ && alive(static_cast<std::size_t>(c)); ++x) {
      if (at(c, x) >= 0) continue;
      if (!define(c, x)) return false;
    }
    return true;
  }

  // Lookahead from row c, then compaction; updates the scan position. False
  // if nothing was freed. Rows before c already close every relator (HLT)
  // so the lookahead starts at c. The working limit starts small and
  // doubles whenever a lookahead frees less than half of it, so coincidences
  // are found before rows multiply.
  bool make_room(std::size_t& c) {
    if (timed_out_) return false;
    for (std::size_t e = felsch_ ? 0 : c; e < n_; ++e)
      for (const auto& r : rels_) {
        if (!alive(e)) break;
        scan(static_cast<int>(e), r);
      }
    propagate();
    c = compact(c);
    if (2 * n_ > soft_limit_) soft_limit_ = std::min(2 * soft_limit_, lim_.max_cosets);
    return n_ < soft_limit_;
  }

  // Renumbers live cosets in order; returns the new index of the first live coset >= c.
  std::size_t compact(std::size_t c) {
    queue_.assign(n_, -1);  // old index -> new index
    int n = 0;
    for (std::size_t e = 0; e < n_; ++e)
      if (alive(e)) queue_[e] = n++;
    std::size_t pos = static_cast<std::size_t>(n);
    for (std::size_t e = c; e < n_; ++e)
      if (alive(e)) {
        pos = static_cast<std::size_t>(queue_[e]);
        break;
      }
    // rows only move down, and live rows never point at dead cosets once
    // coincidences are processed, so the renumbering can be done in place
    const auto cols = static_cast<std::size_t>(cols_);
    for (std::size_t e = 0; e < n_; ++e) {
      if (!alive(e)) continue;
      const int* src = row(e);
      int* dst = row(static_cast<std::size_t>(queue_[e]));
      for (int x = 0; x < cols_; ++x) dst[x] = src[x] < 0 ? -1 : queue_[static_cast<std::size_t>(src[x])];
    }
    const std::size_t un = static_cast<std::size_t>(n);
    std::fill(table_.begin() + static_cast<std::ptrdiff_t>(un * cols),
              table_.begin() + static_cast<std::ptrdiff_t>(n_ * cols), -1);
    std::vector<std::pair<int, int>> kept;
    for (const auto& [d, x] : deduced_)
      if (queue_[static_cast<std::size_t>(rep(d))] >= 0) kept.push_back({queue_[static_cast<std::size_t>(rep(d))], x});
    deduced_ = std::move(kept);
    for (std::size_t e = 0; e < n_; ++e) parent_[e] = static_cast<int>(e);
    n_ = un;
    queue_.clear();
    return pos;
  }

  CosetTable finish(bool complete) {
    CosetTable out;
    out.num_cols = cols_;
    out.high_water = high_water_;
    out.definitions = definitions_;
    out.deductions = deductions_;
    out.coincidences = coincidences_;
    if (complete) {
      compact(0);
      table_.resize(n_ * static_cast<std::size_t>(cols_));
      out.status = CosetTable::Status::Complete;
      out.table = std::move(table_);
    }
    return out;
  }
};

}  // namespace

std::size_t CosetTable::act(std::size_t coset, const Word& w) const {
  for (const auto& l : w) coset = static_cast<std::size_t>(at(coset, column(l)));
  return coset;
}

CosetTable enumerate_cosets(const FpGroup& g, const std::vector<Word>& subgroup, const EnumLimits& lim) {
  Enumerator e(g, lim);
  return e.run(subgroup, g.num_gens);
}

bool relators_act_trivially(const CosetTable& t, const FpGroup& g) {
  if (t.status != CosetTable::Status::Complete) return false;
  for (std::size_t c = 0; c < t.rows(); ++c)
    for (const auto& r : g.relators)
      if (t.act(c, r) != c) return false;
  return true;
}

std::string GroupOrder::to_string() const {
  return finite ? "Finite(" + std::to_string(order) + ")" : "Exhausted(" + std::to_string(high_water) + ")";
}

GroupOrder group_order(const FpGroup& g, const EnumLimits& lim) {
  const auto t = enumerate_cosets(g, {}, lim);
  if (t.status == CosetTable::Status::Complete) return {true, t.rows(), t.high_water};
  return {false, 0, t.high_water};
}

GroupOrder group_order(const Presentation& p, const EnumLimits& lim) { return group_order(fp_group(p), lim); }

std::string ElementOrder::to_string() const {
  switch (kind) {
    case Kind::Finite: return "Finite(" + std::to_string(value) + ")";
    case Kind::AtLeast: return "AtLeast(" + std::to_string(value) + ")";
    case Kind::Exhausted: return "Exhausted";
  }
  return "?";
}

namespace {

std::size_t orbit_length(const CosetTable& t, const Word& w) {
  std::size_t c = t.act(0, w), k = 1;
  while (c != 0) {
    c = t.act(c, w);
    ++k;
  }
  return k;
}

}  // namespace

ElementOrder element_order(const FpGroup& g, const Word& w, const EnumLimits& lim) {
  check_word(w, g.num_gens);
  const auto t = enumerate_cosets(g, {}, lim);
  if (t.status == CosetTable::Status::Complete) return {ElementOrder::Kind::Finite, orbit_length(t, w)};

  std::size_t best = 0;
  for (long long k = 2; k <= 12; ++k) {
    FpGroup q = g;
    q.relators.push_back(power(w, k));
    const auto tq = enumerate_cosets(q, {}, lim);
    if (tq.status == CosetTable::Status::Complete) best = std::max(best, orbit_length(tq, w));
  }
  if (best > 0) return {ElementOrder::Kind::AtLeast, best};
  return {ElementOrder::Kind::Exhausted, 0};
}

ElementOrder element_order(const Presentation& p, const Word& w, const EnumLimits& lim) {
  return element_order(fp_group(p), w, lim);
}

}  // namespace plumb
