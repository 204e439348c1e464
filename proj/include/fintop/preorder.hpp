#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fintop/errors.hpp"
#include "fintop/mask.hpp"

namespace fintop {

// A reflexive transitive relation on points 0..n-1. Row x holds the
// principal up-set {y : x <= y}, so leq(x, y) is a single bit test.
class Preorder {
 public:
  static Preorder from_up_rows(int n, std::vector<Mask> up) {
    if (n < 1 || n > 63) throw SizeCapExceededError("preorder size out of range: " + std::to_string(n));
    if (static_cast<int>(up.size()) != n) throw Error("row count does not match point count");
    const Mask full = full_mask(n);
    for (int x = 0; x < n; ++x) {
      if ((up[x] & ~full) != 0) throw Error("relation row exceeds point range");
      if (!mask_contains(up[x], x)) throw Error("relation is not reflexive at " + std::to_string(x));
    }
    for (int x = 0; x < n; ++x)
      for (Mask t = up[x]; t != 0; t &= t - 1) {
        int y = std::countr_zero(t);
        if (!mask_subset(up[y], up[x]))
          throw Error("relation is not transitive through " + std::to_string(x) + " <= " + std::to_string(y));
      }
    return Preorder(n, std::move(up));
  }

  static Preorder identity(int n) {
    std::vector<Mask> up(n);
    for (int x = 0; x < n; ++x) up[x] = singleton_mask(x);
    return Preorder(n, std::move(up));
  }

  static Preorder full(int n) {
    return Preorder(n, std::vector<Mask>(n, full_mask(n)));
  }

  int n() const { return n_; }
  bool leq(int x, int y) const { return mask_contains(up_[x], y); }
  Mask up(int x) const { return up_[x]; }
  Mask down(int x) const {
    Mask d = 0;
    for (int y = 0; y < n_; ++y)
      if (leq(y, x)) d |= singleton_mask(y);
    return d;
  }
  const std::vector<Mask>& up_rows() const { return up_; }

  bool equivalent(int x, int y) const { return leq(x, y) && leq(y, x); }
  Mask equivalence_class(int x) const { return up_[x] & down(x); }

  bool is_symmetric() const {
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y)
        if (leq(x, y) != leq(y, x)) return false;
    return true;
  }

  bool is_antisymmetric() const {
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y)
        if (x != y && leq(x, y) && leq(y, x)) return false;
    return true;
  }

  // The induced equivalence x ~ y iff x <= y and y <= x, as a preorder.
  Preorder symmetric_part() const {
    std::vector<Mask> rows(n_);
    for (int x = 0; x < n_; ++x) rows[x] = equivalence_class(x);
    return Preorder(n_, std::move(rows));
  }

  Preorder opposite() const {
    std::vector<Mask> rows(n_);
    for (int x = 0; x < n_; ++x) rows[x] = down(x);
    return Preorder(n_, std::move(rows));
  }

  friend bool operator==(const Preorder& a, const Preorder& b) {
    return a.n_ == b.n_ && a.up_ == b.up_;
  }

  std::string to_string() const {
    std::string s;
    for (int x = 0; x < n_; ++x) {
      for (int y = 0; y < n_; ++y) s += leq(x, y) ? '1' : '0';
      if (x + 1 < n_) s += '/';
    }
    return s;
  }

 private:
  Preorder(int n, std::vector<Mask> up) : n_(n), up_(std::move(up)) {}

  int n_;
  std::vector<Mask> up_;
};

// Smallest preorder containing an arbitrary relation (rows[x] = {y : x R y}).
inline Preorder transitive_reflexive_closure(int n, std::vector<Mask> rows) {
  for (int x = 0; x < n; ++x) rows[x] |= singleton_mask(x);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < n; ++x) {
      Mask acc = rows[x];
      for (Mask t = rows[x]; t != 0; t &= t - 1) acc |= rows[std::countr_zero(t)];
      if (acc != rows[x]) {
        rows[x] = acc;
        changed = true;
      }
    }
  }
  return Preorder::from_up_rows(n, std::move(rows));
}

// R[A]: the up-closure of A.
inline Mask saturate(const Preorder& p, Mask a) {
  Mask out = 0;
  for (Mask t = a; t != 0; t &= t - 1) out |= p.up(std::countr_zero(t));
  return out;
}

// R^{-1}[A]: the down-closure of A.
inline Mask co_saturate(const Preorder& p, Mask a) {
  Mask out = 0;
  for (int x = 0; x < p.n(); ++x)
    if ((p.up(x) & a) != 0) out |= singleton_mask(x);
  return out;
}

// Largest up-set contained in A, as X \ R^{-1}[A^c].
inline Mask saturated_interior(const Preorder& p, Mask a) {
  const Mask full = full_mask(p.n());
  return full & ~co_saturate(p, full & ~a);
}

inline bool is_up_set(const Preorder& p, Mask a) {
  return saturate(p, a) == a;
}

inline bool is_down_set(const Preorder& p, Mask a) {
  return co_saturate(p, a) == a;
}

// Componentwise preorder on pairs; the pair (x, y) is encoded as x + a.n * y.
inline Preorder preorder_product(const Preorder& a, const Preorder& b) {
  const int n = a.n() * b.n();
  if (n > 63) throw SizeCapExceededError("pair preorder would exceed 63 points");
  std::vector<Mask> rows(n, 0);
  for (int xa = 0; xa < a.n(); ++xa)
    for (int xb = 0; xb < b.n(); ++xb) {
      Mask row = 0;
      for (int ya = 0; ya < a.n(); ++ya)
        for (int yb = 0; yb < b.n(); ++yb)
          if (a.leq(xa, ya) && b.leq(xb, yb)) row |= singleton_mask(ya + a.n() * yb);
      rows[xa + a.n() * xb] = row;
    }
  return Preorder::from_up_rows(n, std::move(rows));
}

}  // namespace fintop
