#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fintop/errors.hpp"
#include "fintop/maps.hpp"
#include "fintop/space.hpp"

namespace fintop {

struct Shard {
  int index = 0;
  int count = 1;
};

// Yields every reflexive transitive n x n matrix exactly once, ascending in
// the row-major bit string of the matrix (diagonal included, 0 before 1).
// A shard i/k keeps every k-th matrix starting from the i-th. The cursor is
// the row-major bit string of the last emitted matrix; resuming skips ahead
// to the successor of that matrix.
class PreorderStream {
 public:
  explicit PreorderStream(int n, Shard shard = {}) : n_(n), shard_(shard) {
    if (n < 1 || n > kMaxEnumerationPoints)
      throw CapExceededError("enumeration supports 1.." + std::to_string(kMaxEnumerationPoints) + " points");
    if (shard.count < 1 || shard.index < 0 || shard.index >= shard.count) throw Error("bad shard");
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (i != j) cells_.push_back(i * n_ + j);
    matrix_.assign(n_ * n_, -1);
    for (int i = 0; i < n_; ++i) matrix_[i * n_ + i] = 1;
    next_try_.assign(cells_.size() + 1, 0);
  }

  std::optional<Preorder> next() {
    if (has_pending_) {
      has_pending_ = false;
      const std::uint64_t idx = emitted_++;
      if (idx % shard_.count == static_cast<std::uint64_t>(shard_.index)) return current();
    }
    while (true) {
      if (!advance()) return std::nullopt;
      const std::uint64_t idx = emitted_++;
      if (idx % shard_.count == static_cast<std::uint64_t>(shard_.index)) return current();
    }
  }

  std::string cursor() const {
    std::string s;
    s.reserve(matrix_.size());
    for (int v : matrix_) s += (v == 1) ? '1' : '0';
    return s;
  }

  // Fast-forwards a fresh stream past every matrix up to and including the
  // cursor, keeping the emission counter aligned with an uninterrupted run.
  void resume(const std::string& cursor) {
    if (static_cast<int>(cursor.size()) != n_ * n_) throw Error("cursor length mismatch");
    while (true) {
      if (!advance()) return;
      const std::string cur = this->cursor();
      if (cur == cursor) {
        ++emitted_;
        return;
      }
      if (cur > cursor) {
        has_pending_ = true;
        return;
      }
      ++emitted_;
    }
  }

 private:
  Preorder current() const {
    std::vector<Mask> rows(n_, 0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (matrix_[i * n_ + j] == 1) rows[i] |= singleton_mask(j);
    return Preorder::from_up_rows(n_, std::move(rows));
  }

  // Transitivity is a two-step condition, so it suffices to test the
  // length-two compositions that involve the cell being decided.
  bool viable(int cell, int v) const {
    const int i = cell / n_, j = cell % n_;
    if (v == 1) {
      for (int k = 0; k < n_; ++k) {
        if (matrix_[j * n_ + k] == 1 && matrix_[i * n_ + k] == 0) return false;
        if (matrix_[k * n_ + i] == 1 && matrix_[k * n_ + j] == 0) return false;
      }
    } else {
      for (int k = 0; k < n_; ++k)
        if (matrix_[i * n_ + k] == 1 && matrix_[k * n_ + j] == 1) return false;
    }
    return true;
  }

  void unset(int cell) { matrix_[cell] = -1; }

  // Moves to the next complete valid assignment; returns false when done.
  bool advance() {
    const int total = static_cast<int>(cells_.size());
    if (done_) return false;
    if (started_ && total == 0) {
      done_ = true;
      return false;
    }
    if (started_) {
      --pos_;
      unset(cells_[pos_]);
    } else {
      started_ = true;
    }
    while (pos_ < total) {
      bool placed = false;
      for (int v = next_try_[pos_]; v <= 1; ++v)
        if (viable(cells_[pos_], v)) {
          matrix_[cells_[pos_]] = v;
          next_try_[pos_] = v + 1;
          ++pos_;
          next_try_[pos_] = 0;
          placed = true;
          break;
        }
      if (!placed) {
        if (pos_ == 0) {
          done_ = true;
          return false;
        }
        --pos_;
        unset(cells_[pos_]);
      }
    }
    return true;
  }

  int n_;
  Shard shard_;
  std::vector<int> cells_;
  std::vector<int> next_try_;
  std::vector<int8_t> matrix_;
  int pos_ = 0;
  bool started_ = false;
  bool done_ = false;
  bool has_pending_ = false;
  std::uint64_t emitted_ = 0;
};

template <typename Fn>
void enumerate_preorders(int n, Fn&& fn, Shard shard = {}) {
  PreorderStream stream(n, shard);
  while (auto p = stream.next()) fn(*p);
}

template <typename Fn>
void enumerate_topologies(int n, Fn&& fn, Shard shard = {}) {
  enumerate_preorders(n, [&fn](const Preorder& p) { fn(alexandroff_space(p)); }, shard);
}

inline std::uint64_t count_preorders(int n, Shard shard = {}) {
  std::uint64_t c = 0;
  enumerate_preorders(n, [&c](const Preorder&) { ++c; }, shard);
  return c;
}

// Second generation strategy: run through all reflexive matrices and keep
// the transitive ones. Only workable for n <= 5 (2^20 candidates).
inline std::uint64_t count_preorders_by_filter(int n) {
  if (n < 1 || n > 5) throw CapExceededError("filter strategy supports 1..5 points");
  const int cells = n * (n - 1);
  std::uint64_t count = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cells); ++bits) {
    std::vector<Mask> rows(n);
    int c = 0;
    for (int i = 0; i < n; ++i) {
      Mask row = singleton_mask(i);
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        if ((bits >> c) & 1) row |= singleton_mask(j);
        ++c;
      }
      rows[i] = row;
    }
    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i)
      for (Mask t = rows[i]; t != 0; t &= t - 1)
        if (!mask_subset(rows[std::countr_zero(t)], rows[i])) {
          transitive = false;
          break;
        }
    if (transitive) ++count;
  }
  return count;
}

// Independent cross-check that needs no order theory at all: run through
// every family of subsets of an n-point set and count the ones that contain
// the empty and full sets and are closed under pairwise union and
// intersection. Only workable for n <= 4 (2^16 candidate families).
inline std::uint64_t count_topologies_by_open_families(int n) {
  if (n < 1 || n > 4) throw CapExceededError("open-family strategy supports 1..4 points");
  const int subsets = 1 << n;
  const std::uint64_t families = std::uint64_t{1} << subsets;
  std::uint64_t count = 0;
  for (std::uint64_t fam = 0; fam < families; ++fam) {
    if (((fam >> 0) & 1) == 0) continue;
    if (((fam >> (subsets - 1)) & 1) == 0) continue;
    bool closed = true;
    for (int a = 0; a < subsets && closed; ++a) {
      if (((fam >> a) & 1) == 0) continue;
      for (int b = a + 1; b < subsets; ++b) {
        if (((fam >> b) & 1) == 0) continue;
        if (((fam >> (a | b)) & 1) == 0 || ((fam >> (a & b)) & 1) == 0) {
          closed = false;
          break;
        }
      }
    }
    if (closed) ++count;
  }
  return count;
}

// ---------------------------------------------------------------------------
// Canonical forms under point relabeling

template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  do {
    fn(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

// Least relabeling of the space: the lexicographically smallest sorted open
// family over all point permutations. Two spaces are homeomorphic exactly
// when their canonical forms are equal.
inline FiniteSpace canonical_form(const FiniteSpace& space) {
  FiniteSpace best = space;
  for_each_permutation(space.n(), [&](const std::vector<int>& perm) {
    FiniteSpace cand = relabel(space, perm);
    if (cand.opens() < best.opens()) best = cand;
  });
  return best;
}

inline bool is_canonical(const FiniteSpace& space) { return canonical_form(space) == space; }

template <typename Fn>
void enumerate_canonical_topologies(int n, Fn&& fn) {
  enumerate_topologies(n, [&fn](const FiniteSpace& space) {
    if (is_canonical(space)) fn(space);
  });
}

inline std::uint64_t count_canonical_topologies(int n) {
  std::uint64_t c = 0;
  enumerate_canonical_topologies(n, [&c](const FiniteSpace&) { ++c; });
  return c;
}

// ---------------------------------------------------------------------------
// Continuous maps between two spaces

// Continuity between finite spaces is monotonicity between the
// specialization preorders, so the tables are generated with order-respecting
// backtracking, ascending lexicographically.
template <typename Fn>
void all_continuous_maps(const FiniteSpace& dom, const FiniteSpace& cod, Fn&& fn) {
  if (dom.n() * cod.n() > 36) throw CapExceededError("map enumeration cap exceeded");
  Preorder pd = specialization_preorder(dom);
  Preorder pc = specialization_preorder(cod);
  std::vector<int> table(dom.n(), 0);
  auto rec = [&](auto&& self, int x) -> void {
    if (x == dom.n()) {
      fn(SpaceMap(dom, cod, table));
      return;
    }
    for (int v = 0; v < cod.n(); ++v) {
      bool ok = true;
      for (int y = 0; y < x && ok; ++y) {
        if (pd.leq(x, y) && !pc.leq(v, table[y])) ok = false;
        if (pd.leq(y, x) && !pc.leq(table[y], v)) ok = false;
      }
      if (!ok) continue;
      table[x] = v;
      self(self, x + 1);
    }
  };
  rec(rec, 0);
}

inline std::uint64_t count_continuous_maps(const FiniteSpace& dom, const FiniteSpace& cod) {
  std::uint64_t c = 0;
  all_continuous_maps(dom, cod, [&c](const SpaceMap&) { ++c; });
  return c;
}

}  // namespace fintop
