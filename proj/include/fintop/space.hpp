#pragma once

#include <algorithm>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "fintop/errors.hpp"
#include "fintop/mask.hpp"
#include "fintop/preorder.hpp"

namespace fintop {

// A topology on points 0..n-1. The open family is deduplicated and sorted
// ascending as unsigned masks; equality is structural. Instances are
// immutable after construction.
class FiniteSpace {
 public:
  // Validates and canonicalizes an arbitrary family of subsets.
  static FiniteSpace from_opens(int n, std::vector<Mask> family) {
    if (n < 1 || n > kMaxPoints)
      throw SizeCapExceededError("point count out of range: " + std::to_string(n));
    const Mask full = full_mask(n);
    for (Mask m : family)
      if ((m & ~full) != 0)
        throw NotATopologyError(NotATopologyError::Kind::OutOfRange, m, 0,
                                "open set " + mask_to_string(m) + " has points outside 0.." + std::to_string(n - 1));
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    if (family.empty() || family.front() != 0)
      throw NotATopologyError(NotATopologyError::Kind::MissingEmpty, 0, 0, "family does not contain the empty set");
    if (family.back() != full)
      throw NotATopologyError(NotATopologyError::Kind::MissingFull, full, 0, "family does not contain the full set");
    auto member = [&family](Mask m) {
      return std::binary_search(family.begin(), family.end(), m);
    };
    for (std::size_t i = 0; i < family.size(); ++i)
      for (std::size_t j = i + 1; j < family.size(); ++j) {
        if (!member(family[i] | family[j]))
          throw NotATopologyError(NotATopologyError::Kind::Union, family[i], family[j],
                                  "union of " + mask_to_string(family[i]) + " and " + mask_to_string(family[j]) +
                                      " is not in the family");
        if (!member(family[i] & family[j]))
          throw NotATopologyError(NotATopologyError::Kind::Intersection, family[i], family[j],
                                  "intersection of " + mask_to_string(family[i]) + " and " + mask_to_string(family[j]) +
                                      " is not in the family");
      }
    return FiniteSpace(n, std::move(family));
  }

  static FiniteSpace discrete(int n) {
    std::vector<Mask> family;
    family.reserve(std::size_t{1} << n);
    for (Mask m = 0; m <= full_mask(n); ++m) family.push_back(m);
    return FiniteSpace(n, std::move(family));
  }

  static FiniteSpace indiscrete(int n) { return FiniteSpace(n, {0, full_mask(n)}); }

  static FiniteSpace point() { return indiscrete(1); }

  // Two points with exactly one nontrivial open set {0}.
  static FiniteSpace sierpinski() { return FiniteSpace(2, {0, 1, 3}); }

  int n() const { return n_; }
  Mask full() const { return full_mask(n_); }
  const std::vector<Mask>& opens() const { return opens_; }

  bool is_open(Mask m) const {
    return std::binary_search(opens_.begin(), opens_.end(), m);
  }
  bool is_closed(Mask m) const { return is_open(full() & ~m); }
  bool is_clopen(Mask m) const { return is_open(m) && is_closed(m); }

  std::vector<Mask> closed_sets() const {
    std::vector<Mask> out;
    out.reserve(opens_.size());
    for (Mask u : opens_) out.push_back(full() & ~u);
    std::sort(out.begin(), out.end());
    return out;
  }

  // Smallest open set containing x.
  Mask min_open_neighborhood(int x) const { return min_nbhd_[x]; }

  // Smallest open set containing all of A.
  Mask min_open_superset(Mask a) const {
    Mask out = 0;
    for (Mask t = a; t != 0; t &= t - 1) out |= min_nbhd_[std::countr_zero(t)];
    return out;
  }

  Mask point_closure(int x) const { return point_closure_[x]; }

  Mask closure(Mask a) const {
    Mask c = full();
    for (Mask u : opens_) {
      Mask f = full() & ~u;
      if (mask_subset(a, f)) c &= f;
    }
    return c;
  }

  Mask interior(Mask a) const {
    Mask i = 0;
    for (Mask u : opens_)
      if (mask_subset(u, a)) i |= u;
    return i;
  }

  // Accumulation points: every open neighborhood of x meets A\{x}.
  Mask derived_set(Mask a) const {
    Mask out = 0;
    for (int x = 0; x < n_; ++x)
      if ((min_nbhd_[x] & a & ~singleton_mask(x)) != 0) out |= singleton_mask(x);
    return out;
  }

  // Points all of whose neighborhoods meet A at infinitely many points.
  // A neighborhood of a finite space never does, so this is the empty set;
  // the cardinality test is kept spelled out.
  Mask omega_accumulation_points(Mask a) const {
    constexpr int kInfiniteCardinality = std::numeric_limits<int>::max();
    Mask out = 0;
    for (int x = 0; x < n_; ++x) {
      bool all_infinite = true;
      for (Mask u : opens_)
        if (mask_contains(u, x) && mask_size(u & a) < kInfiniteCardinality) {
          all_infinite = false;
          break;
        }
      if (all_infinite) out |= singleton_mask(x);
    }
    return out;
  }

  bool topologically_indistinguishable(int x, int y) const {
    return min_nbhd_[x] == min_nbhd_[y];
  }

  // The class [x]~ of points sharing every neighborhood with x.
  Mask indistinguishability_class(int x) const {
    Mask out = 0;
    for (int y = 0; y < n_; ++y)
      if (topologically_indistinguishable(x, y)) out |= singleton_mask(y);
    return out;
  }

  Mask saturate_indistinguishable(Mask a) const {
    Mask out = 0;
    for (Mask t = a; t != 0; t &= t - 1) out |= indistinguishability_class(std::countr_zero(t));
    return out;
  }

  // Points x with q(x) an accumulation point of q(A) in the quotient by ~:
  // every open neighborhood of x meets A outside [x]~.
  Mask strong_derived(Mask a) const {
    Mask out = 0;
    for (int x = 0; x < n_; ++x)
      if ((min_nbhd_[x] & a & ~indistinguishability_class(x)) != 0) out |= singleton_mask(x);
    return out;
  }

  // cl(A) \ [A \ A']~ : the closure minus the classes of isolated points of A.
  Mask essential_derived(Mask a) const {
    Mask isolated = a & ~derived_set(a);
    return closure(a) & ~saturate_indistinguishable(isolated);
  }

  bool is_locally_closed(Mask a) const {
    for (Mask u : opens_)
      for (Mask v : opens_)
        if ((u & ~v) == a) return true;
    return false;
  }

  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
    return a.n_ == b.n_ && a.opens_ == b.opens_;
  }

  std::string to_string() const {
    std::string s = "n=" + std::to_string(n_) + " opens=[";
    for (std::size_t i = 0; i < opens_.size(); ++i) {
      if (i) s += " ";
      s += mask_to_string(opens_[i]);
    }
    return s + "]";
  }

 private:
  FiniteSpace(int n, std::vector<Mask> opens) : n_(n), opens_(std::move(opens)) {
    min_nbhd_.resize(n_);
    point_closure_.resize(n_);
    for (int x = 0; x < n_; ++x) {
      Mask b = full();
      for (Mask u : opens_)
        if (mask_contains(u, x)) b &= u;
      min_nbhd_[x] = b;
    }
    for (int x = 0; x < n_; ++x) {
      Mask c = 0;
      // y lies in cl{x} iff every open neighborhood of y contains x.
      for (int y = 0; y < n_; ++y)
        if (mask_contains(min_nbhd_[y], x)) c |= singleton_mask(y);
      point_closure_[x] = c;
    }
  }

  friend FiniteSpace alexandroff_space(const Preorder& p);
  friend FiniteSpace relabel(const FiniteSpace& space, const std::vector<int>& perm);

  int n_;
  std::vector<Mask> opens_;
  std::vector<Mask> min_nbhd_;
  std::vector<Mask> point_closure_;
};

// x <= y iff x lies in the closure of {y}.
inline Preorder specialization_preorder(const FiniteSpace& space) {
  std::vector<Mask> rows(space.n());
  for (int x = 0; x < space.n(); ++x) rows[x] = space.min_open_neighborhood(x);
  return Preorder::from_up_rows(space.n(), std::move(rows));
}

// The topology whose opens are exactly the up-sets of p.
inline FiniteSpace alexandroff_space(const Preorder& p) {
  if (p.n() > kMaxPoints)
    throw SizeCapExceededError("up-set family would need more than 2^" + std::to_string(kMaxPoints) + " sets");
  std::vector<Mask> family;
  for (Mask m = 0; m <= full_mask(p.n()); ++m)
    if (is_up_set(p, m)) family.push_back(m);
  return FiniteSpace(p.n(), std::move(family));
}

// Every subset of a finite space is compact: any open cover admits the
// finite subcover of one member per point. Kept as a named predicate so
// compactness-quantified axioms read as stated.
inline constexpr bool is_compact_subset(const FiniteSpace&, Mask) { return true; }

inline FiniteSpace relabel(const FiniteSpace& space, const std::vector<int>& perm) {
  std::vector<Mask> family;
  family.reserve(space.opens().size());
  for (Mask u : space.opens()) {
    Mask m = 0;
    for (Mask t = u; t != 0; t &= t - 1) m |= singleton_mask(perm[std::countr_zero(t)]);
    family.push_back(m);
  }
  std::sort(family.begin(), family.end());
  return FiniteSpace(space.n(), std::move(family));
}

// Relative topology on the points of `a`, reindexed ascending.
struct Subspace {
  FiniteSpace space;
  std::vector<int> points;  // new index -> old point
};

inline Subspace subspace(const FiniteSpace& space, Mask a) {
  std::vector<int> pts = mask_points(a);
  if (pts.empty()) throw Error("subspace needs at least one point");
  std::vector<Mask> family;
  for (Mask u : space.opens()) {
    Mask m = 0;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (mask_contains(u, pts[i])) m |= singleton_mask(static_cast<int>(i));
    family.push_back(m);
  }
  return Subspace{FiniteSpace::from_opens(static_cast<int>(pts.size()), std::move(family)), std::move(pts)};
}

// Connected components, computed as the components of the comparability
// graph of the specialization preorder (x adjacent to y when x <= y or
// y <= x); blocks are returned ascending by least point.
inline std::vector<Mask> components(const FiniteSpace& space) {
  Preorder p = specialization_preorder(space);
  std::vector<Mask> adj(space.n());
  for (int x = 0; x < space.n(); ++x) adj[x] = p.up(x) | p.down(x);
  std::vector<bool> seen(space.n(), false);
  std::vector<Mask> blocks;
  for (int x = 0; x < space.n(); ++x) {
    if (seen[x]) continue;
    Mask block = singleton_mask(x);
    bool grew = true;
    while (grew) {
      grew = false;
      Mask next = block;
      for (Mask t = block; t != 0; t &= t - 1) next |= adj[std::countr_zero(t)];
      if (next != block) {
        block = next;
        grew = true;
      }
    }
    for (Mask t = block; t != 0; t &= t - 1) seen[std::countr_zero(t)] = true;
    blocks.push_back(block);
  }
  return blocks;
}

inline Mask component_of(const FiniteSpace& space, int x) {
  for (Mask block : components(space))
    if (mask_contains(block, x)) return block;
  return 0;
}

// QC(x): the intersection of all clopen neighborhoods of x.
inline Mask quasi_component_of(const FiniteSpace& space, int x) {
  Mask q = space.full();
  for (Mask u : space.opens())
    if (mask_contains(u, x) && space.is_clopen(u)) q &= u;
  return q;
}

inline std::vector<Mask> quasi_components(const FiniteSpace& space) {
  std::vector<Mask> blocks;
  std::vector<bool> seen(space.n(), false);
  for (int x = 0; x < space.n(); ++x) {
    if (seen[x]) continue;
    Mask q = quasi_component_of(space, x);
    for (Mask t = q; t != 0; t &= t - 1) seen[std::countr_zero(t)] = true;
    blocks.push_back(q);
  }
  return blocks;
}

inline bool is_connected_space(const FiniteSpace& space) {
  return components(space).size() == 1;
}

// Connectedness of a subset in the relative topology.
inline bool is_connected_subset(const FiniteSpace& space, Mask a) {
  if (a == 0) return true;
  return components(subspace(space, a).space).size() == 1;
}

}  // namespace fintop
